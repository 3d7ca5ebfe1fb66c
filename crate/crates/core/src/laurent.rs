//! Sparse multivariate Laurent polynomials with exact integer coefficients.
//!
//! Enough arithmetic to build the Vandermonde `V_r`, multiply by
//! `t_r = x₁ + ⋯ + x_r` repeatedly, divide by the monomial `x^{r*}` and read
//! coefficients off `F_{n,r} = t_rⁿ V_r / x^{r*}`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{Partition, StaircaseVector};
use crate::vertexdp::check_r;

/// A Laurent polynomial in `r` variables; no stored coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

/// One term of the JSON rendering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermRecord {
    pub exponents: Vec<i64>,
    pub coefficient: String,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        LaurentPoly::monomial(vec![0; nvars], BigInt::one())
    }

    pub fn monomial(exponents: Vec<i64>, coefficient: BigInt) -> Self {
        let mut p = LaurentPoly::zero(exponents.len());
        if !coefficient.is_zero() {
            p.terms.insert(exponents, coefficient);
        }
        p
    }

    /// `x_i` (0-based).
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        LaurentPoly::monomial(e, BigInt::one())
    }

    /// `t_r = x₁ + ⋯ + x_r`.
    pub fn linear_sum(nvars: usize) -> Self {
        let mut p = LaurentPoly::zero(nvars);
        for i in 0..nvars {
            p.add_term(unit(nvars, i), BigInt::one());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms keyed by exponent vector (lexicographic key order).
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    fn check_dim(&self, len: usize) -> Result<()> {
        if len != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: len,
            });
        }
        Ok(())
    }

    fn add_term(&mut self, exponents: Vec<i64>, coefficient: BigInt) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(exponents) {
            Entry::Vacant(e) => {
                if !coefficient.is_zero() {
                    e.insert(coefficient);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coefficient;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_dim(other.nvars)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.add(&other.neg())
    }

    /// Exact product.
    pub fn multiply(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_dim(other.nvars)?;
        let mut out = LaurentPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    /// Multiplication by `x^shift` (negative entries divide).
    pub fn shift(&self, shift: &[i64]) -> Result<LaurentPoly> {
        self.check_dim(shift.len())?;
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        })
    }

    /// `[p]_m`, zero outside the support.
    pub fn coefficient(&self, m: &[i64]) -> Result<BigInt> {
        self.check_dim(m.len())?;
        Ok(self.terms.get(m).cloned().unwrap_or_else(BigInt::zero))
    }

    /// Swaps two variables.
    pub fn swap_vars(&self, i: usize, j: usize) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.swap(i, j);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Terms in display order: total degree descending, then graded reverse
    /// lexicographic (the smaller exponent in the last differing variable
    /// comes first).
    pub fn sorted_terms(&self) -> Vec<(&Vec<i64>, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grevlex_desc(a.0, b.0));
        v
    }

    pub fn to_records(&self) -> Vec<TermRecord> {
        self.sorted_terms()
            .into_iter()
            .map(|(e, c)| TermRecord {
                exponents: e.clone(),
                coefficient: c.to_string(),
            })
            .collect()
    }
}

fn grevlex_desc(a: &[i64], b: &[i64]) -> Ordering {
    let da: i64 = a.iter().sum();
    let db: i64 = b.iter().sum();
    db.cmp(&da).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            match x.cmp(y) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    })
}

fn unit(nvars: usize, i: usize) -> Vec<i64> {
    let mut e = vec![0; nvars];
    e[i] = 1;
    e
}

fn render_factors(out: &mut String, factors: &[(usize, i64)]) {
    for (k, (var, pow)) in factors.iter().enumerate() {
        if k > 0 {
            out.push('*');
        }
        let _ = write!(out, "x{}", var + 1);
        if *pow != 1 {
            let _ = write!(out, "^{pow}");
        }
    }
}

impl fmt::Display for LaurentPoly {
    /// Renders like `x1^3 + 2*x1^2*x2 - 2*x2^3 - x2^4/x1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, (exps, coeff)) in self.sorted_terms().into_iter().enumerate() {
            let negative = coeff.sign() == Sign::Minus;
            match (k, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mag = coeff.abs();
            let num: Vec<(usize, i64)> = exps
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| (i, p))
                .collect();
            let den: Vec<(usize, i64)> = exps
                .iter()
                .enumerate()
                .filter(|(_, &p)| p < 0)
                .map(|(i, &p)| (i, -p))
                .collect();
            if num.is_empty() {
                let _ = write!(out, "{mag}");
            } else {
                if !mag.is_one() {
                    let _ = write!(out, "{mag}*");
                }
                render_factors(&mut out, &num);
            }
            if !den.is_empty() {
                out.push('/');
                if den.len() > 1 {
                    out.push('(');
                }
                render_factors(&mut out, &den);
                if den.len() > 1 {
                    out.push(')');
                }
            }
        }
        f.write_str(&out)
    }
}

/// Sign of a permutation given as an index vector, by inversion count.
pub(crate) fn permutation_sign(perm: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All permutations of `0..r` in lexicographic order.
pub(crate) fn permutations(r: usize) -> Vec<Vec<usize>> {
    let mut perm: Vec<usize> = (0..r).collect();
    let mut out = vec![perm.clone()];
    // next lexicographic permutation
    while let Some(i) = (1..perm.len()).rev().find(|&i| perm[i - 1] < perm[i]) {
        let j = (i..perm.len()).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
        out.push(perm.clone());
    }
    out
}

/// `V_r = Σ_σ sgn(σ) x^{σ(r*)}`.
pub fn vandermonde(r: usize) -> LaurentPoly {
    let star = StaircaseVector::staircase(r).into_entries();
    let mut p = LaurentPoly::zero(r);
    for perm in permutations(r) {
        // σ acts by moving entry k to slot perm[k]
        let mut e = vec![0; r];
        for (k, &slot) in perm.iter().enumerate() {
            e[slot] = star[k];
        }
        p.add_term(e, BigInt::from(permutation_sign(&perm)));
    }
    p
}

/// `∏_{i<j} (x_i − x_j)` expanded by multiplication.
pub fn vandermonde_product(r: usize) -> LaurentPoly {
    let mut p = LaurentPoly::one(r);
    for i in 0..r {
        for j in i + 1..r {
            let factor = LaurentPoly::variable(r, i)
                .sub(&LaurentPoly::variable(r, j))
                .expect("same arity");
            p = p.multiply(&factor).expect("same arity");
        }
    }
    p
}

/// `t_rᵏ · V_r` for `k = 0..=n`, one multiplication by `t_r` per step.
pub fn walk_polynomials(n: usize, r: usize) -> Vec<LaurentPoly> {
    let t = LaurentPoly::linear_sum(r);
    let mut out = Vec::with_capacity(n + 1);
    out.push(vandermonde(r));
    for _ in 0..n {
        let next = out.last().unwrap().multiply(&t).expect("same arity");
        out.push(next);
    }
    out
}

/// `F_{n,r} = t_rⁿ · V_r / x^{r*}`.
pub fn genfun(n: usize, r: usize) -> Result<LaurentPoly> {
    check_r(r)?;
    let t = LaurentPoly::linear_sum(r);
    let mut p = vandermonde(r);
    for _ in 0..n {
        p = p.multiply(&t)?;
    }
    let star: Vec<i64> = StaircaseVector::staircase(r)
        .into_entries()
        .into_iter()
        .map(|e| -e)
        .collect();
    p.shift(&star)
}

/// `f^λ = [F_{|λ|,r}]_λ`.
pub fn count_via_genfun(lambda: &Partition, r: usize) -> Result<BigUint> {
    check_r(r)?;
    let exps: Vec<i64> = lambda.padded(r)?.into_iter().map(|p| p as i64).collect();
    let c = genfun(lambda.size(), r)?.coefficient(&exps)?;
    c.to_biguint()
        .ok_or_else(|| Error::InvalidArgument(format!("negative coefficient {c} at {lambda}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(r: usize, terms: &[(&[i64], i64)]) -> LaurentPoly {
        let mut p = LaurentPoly::zero(r);
        for (e, c) in terms {
            p.add_term(e.to_vec(), BigInt::from(*c));
        }
        p
    }

    #[test]
    fn vandermonde_examples() {
        assert_eq!(vandermonde(2), poly(2, &[(&[1, 0], 1), (&[0, 1], -1)]));
        assert_eq!(vandermonde(1), LaurentPoly::one(1));
        let v3 = vandermonde(3);
        assert_eq!(v3.len(), 6);
        assert_eq!(v3.coefficient(&[2, 1, 0]).unwrap(), BigInt::from(1));
        assert_eq!(v3.coefficient(&[0, 1, 2]).unwrap(), BigInt::from(-1));
        assert!(v3.terms().all(|(e, c)| {
            let mut s = e.clone();
            s.sort();
            s == [0, 1, 2] && c.abs().is_one()
        }));
    }

    #[test]
    fn alternating_sum_equals_product() {
        for r in 1..=5 {
            assert_eq!(vandermonde(r), vandermonde_product(r), "r = {r}");
        }
    }

    #[test]
    fn multiply_examples() {
        let x1 = LaurentPoly::variable(2, 0);
        let x2 = LaurentPoly::variable(2, 1);
        let diff = x1.sub(&x2).unwrap();
        let sum = x1.add(&x2).unwrap();
        let squares = poly(2, &[(&[2, 0], 1), (&[0, 2], -1)]);
        assert_eq!(diff.multiply(&sum).unwrap(), squares);
        assert_eq!(diff.multiply(&LaurentPoly::one(2)).unwrap(), diff);
        let cube = diff.multiply(&sum).unwrap().multiply(&sum).unwrap();
        assert_eq!(
            cube,
            poly(2, &[(&[3, 0], 1), (&[2, 1], 1), (&[1, 2], -1), (&[0, 3], -1)])
        );
        assert!(matches!(
            diff.multiply(&LaurentPoly::one(3)),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(diff.sub(&diff).unwrap().is_zero());
    }

    #[test]
    fn genfun_small_cases() {
        // (x1 + x2)(x1 - x2)/x1 = x1 - x2^2/x1; every F_{n,r} is homogeneous of degree n
        assert_eq!(genfun(1, 2).unwrap(), poly(2, &[(&[1, 0], 1), (&[-1, 2], -1)]));
        assert_eq!(genfun(0, 2).unwrap(), poly(2, &[(&[0, 0], 1), (&[-1, 1], -1)]));
        assert_eq!(
            genfun(4, 2).unwrap(),
            poly(
                2,
                &[
                    (&[4, 0], 1),
                    (&[3, 1], 3),
                    (&[2, 2], 2),
                    (&[1, 3], -2),
                    (&[0, 4], -3),
                    (&[-1, 5], -1)
                ]
            )
        );
        assert!(genfun(2, 0).is_err());
    }

    #[test]
    fn coefficients_of_f72() {
        let f = genfun(7, 2).unwrap();
        assert_eq!(f.coefficient(&[5, 2]).unwrap(), BigInt::from(14));
        assert_eq!(f.coefficient(&[6, 1]).unwrap(), BigInt::from(6));
        assert_eq!(f.coefficient(&[3, 9]).unwrap(), BigInt::zero());
        assert!(f.coefficient(&[1]).is_err());
    }

    #[test]
    fn count_via_genfun_examples() {
        let p = |v: &[i64]| Partition::validate(v).unwrap();
        assert_eq!(count_via_genfun(&p(&[7, 0]), 2).unwrap(), BigUint::from(1u32));
        assert_eq!(count_via_genfun(&p(&[3, 1]), 2).unwrap(), BigUint::from(3u32));
        assert_eq!(count_via_genfun(&p(&[2, 2, 1]), 3).unwrap(), BigUint::from(5u32));
        assert!(matches!(
            count_via_genfun(&p(&[2, 2, 1]), 2),
            Err(Error::HeightExceedsR { .. })
        ));
    }

    #[test]
    fn rendering() {
        assert_eq!(genfun(2, 2).unwrap().to_string(), "x1^2 + x1*x2 - x2^2 - x2^3/x1");
        assert_eq!(
            genfun(3, 2).unwrap().to_string(),
            "x1^3 + 2*x1^2*x2 - 2*x2^3 - x2^4/x1"
        );
        assert_eq!(genfun(0, 1).unwrap().to_string(), "1");
        assert_eq!(LaurentPoly::zero(2).to_string(), "0");
        assert_eq!(poly(3, &[(&[-1, 0, -2], -3)]).to_string(), "-3/(x1*x3^2)");
        assert_eq!(poly(2, &[(&[-1, 0], 1)]).to_string(), "1/x1");
    }

    #[test]
    fn json_records_use_decimal_strings() {
        let recs = genfun(1, 2).unwrap().to_records();
        assert_eq!(
            recs,
            vec![
                TermRecord { exponents: vec![1, 0], coefficient: "1".into() },
                TermRecord { exponents: vec![-1, 2], coefficient: "-1".into() },
            ]
        );
    }

    #[test]
    fn permutations_are_complete() {
        let perms = permutations(4);
        assert_eq!(perms.len(), 24);
        let positive = perms.iter().filter(|p| permutation_sign(p) == 1).count();
        assert_eq!(positive, 12);
    }
}
