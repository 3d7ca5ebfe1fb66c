//! Path counting on the shifted lattice with sign-equivariant vertex functions.
//!
//! A vertex function `v : ℤʳ → ℤ` is *admissible* when `v(σx) = sgn(σ)·v(x)`
//! for every permutation `σ` of the coordinates, and it vanishes whenever a
//! coordinate is negative. Such a function is determined by its values on
//! the fundamental domain `{x : x₁ > x₂ > ⋯ > x_r ≥ 0}`, which is `Λʳ + r*`,
//! and that is all [`VertexFunction`] stores.
//!
//! The transition `T = Σ_i R_i`, with `R_i[v](x) = v(x − δ_i)`, keeps
//! admissibility. Starting from the point mass at `r*`, the iterate
//! `v_n = Tⁿ[v₀]` counts `n`-step paths inside the fundamental domain, and
//! `v_n(λ + r*) = f^λ` for `|λ| = n`.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{is_shifted_chamber_point, mu, Partition, StaircaseVector};

/// An admissible vertex function restricted to a box `0 ≤ x_i ≤ bound`.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexFunction {
    r: usize,
    bound: i64,
    values: HashMap<Vec<i64>, BigInt>,
}

/// Sorts `x` into strictly decreasing order and returns the sign of the
/// sorting permutation, or `None` when `x` has a repeated entry.
fn sort_with_sign(x: &[i64]) -> Option<(Vec<i64>, i8)> {
    let mut sorted = x.to_vec();
    let mut sign = 1i8;
    // insertion sort; r is small and each swap flips the sign
    for i in 1..sorted.len() {
        let mut j = i;
        while j > 0 && sorted[j - 1] <= sorted[j] {
            if sorted[j - 1] == sorted[j] {
                return None;
            }
            sorted.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    Some((sorted, sign))
}

impl VertexFunction {
    /// The zero function.
    pub fn zero(r: usize, bound: i64) -> Self {
        VertexFunction {
            r,
            bound,
            values: HashMap::new(),
        }
    }

    /// `v₀`: the point mass at `r*`, extended by sign.
    pub fn initial(r: usize, bound: i64) -> Result<Self> {
        let start = StaircaseVector::staircase(r).into_entries();
        let mut v = VertexFunction::zero(r, bound);
        v.set(start, BigInt::from(1))?;
        Ok(v)
    }

    /// Builds a function from values on fundamental-domain points.
    pub fn from_values<I>(r: usize, bound: i64, values: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i64>, BigInt)>,
    {
        let mut v = VertexFunction::zero(r, bound);
        for (point, value) in values {
            v.set(point, value)?;
        }
        Ok(v)
    }

    /// Stores `value` at a fundamental-domain point; zero erases.
    pub fn set(&mut self, point: Vec<i64>, value: BigInt) -> Result<()> {
        self.check_dim(&point)?;
        if !is_shifted_chamber_point(&point) {
            return Err(Error::InvalidArgument(format!(
                "{point:?} is not strictly decreasing and non-negative"
            )));
        }
        if point.first().is_some_and(|&m| m > self.bound) {
            return Err(Error::BoxOverflow {
                point,
                bound: self.bound,
            });
        }
        if value.is_zero() {
            self.values.remove(&point);
        } else {
            self.values.insert(point, value);
        }
        Ok(())
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    /// Stored fundamental-domain values (nonzero only).
    pub fn support(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.values.iter()
    }

    fn check_dim(&self, x: &[i64]) -> Result<()> {
        if x.len() != self.r {
            return Err(Error::DimensionMismatch {
                expected: self.r,
                found: x.len(),
            });
        }
        Ok(())
    }

    /// Value at any point of `ℤʳ` through the sign extension.
    pub fn evaluate(&self, x: &[i64]) -> Result<BigInt> {
        self.check_dim(x)?;
        if x.iter().any(|&c| c < 0) {
            return Ok(BigInt::zero());
        }
        let Some((sorted, sign)) = sort_with_sign(x) else {
            return Ok(BigInt::zero());
        };
        Ok(match self.values.get(&sorted) {
            Some(v) if sign < 0 => -v,
            Some(v) => v.clone(),
            None => BigInt::zero(),
        })
    }

    /// `T[v]`. Fails if mass would be pushed past the box.
    pub fn transition(&self) -> Result<VertexFunction> {
        self.step(false)
    }

    /// `T[v]` with mass leaving the box dropped.
    ///
    /// Moves only increase coordinates, so values inside the box are still
    /// exact; only the part of the support that can never come back is lost.
    pub fn transition_clipped(&self) -> VertexFunction {
        self.step(true).expect("clipped transition cannot overflow")
    }

    fn step(&self, clip: bool) -> Result<VertexFunction> {
        let mut next: HashMap<Vec<i64>, BigInt> = HashMap::with_capacity(self.values.len() * 2);
        // Push form of T[v](x) = Σ_i v(x − δ_i) on the fundamental domain:
        // for x strictly decreasing, x − δ_i is either strictly decreasing or
        // has a repeated/negative entry (value 0), so no sign flips occur.
        for (point, value) in &self.values {
            for i in 0..self.r {
                if i > 0 && point[i] + 1 >= point[i - 1] {
                    continue;
                }
                let mut target = point.clone();
                target[i] += 1;
                if target[i] > self.bound {
                    if clip {
                        continue;
                    }
                    return Err(Error::BoxOverflow {
                        point: target,
                        bound: self.bound,
                    });
                }
                *next.entry(target).or_insert_with(BigInt::zero) += value;
            }
        }
        next.retain(|_, v| !v.is_zero());
        Ok(VertexFunction {
            r: self.r,
            bound: self.bound,
            values: next,
        })
    }

    /// Every fundamental-domain point of the box, in no particular order.
    pub fn domain_points(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.r);
        domain_rec(self.r, self.bound, &mut cur, &mut out);
        out
    }
}

fn domain_rec(r: usize, upper: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if cur.len() == r {
        out.push(cur.clone());
        return;
    }
    let left = (r - cur.len() - 1) as i64;
    for c in left..=upper {
        cur.push(c);
        domain_rec(r, c - 1, cur, out);
        cur.pop();
    }
}

/// `f^λ` as a lattice path count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticePathCount {
    pub shape: Partition,
    pub count: BigUint,
}

/// The iterates `v₀, v₁, …, v_n` on a box with the given bound, clipped.
pub fn iterates(r: usize, n: usize, bound: i64) -> Result<Vec<VertexFunction>> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(VertexFunction::initial(r, bound)?);
    for _ in 0..n {
        let next = out.last().unwrap().transition_clipped();
        out.push(next);
    }
    Ok(out)
}

fn to_count(value: BigInt) -> BigUint {
    match value.sign() {
        Sign::Minus => panic!("negative path count {value}"),
        _ => value.magnitude().clone(),
    }
}

pub(crate) fn check_r(r: usize) -> Result<()> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    Ok(())
}

/// `v_n(λ + r*)` with `n = |λ|`.
pub fn count_paths(lambda: &Partition, r: usize) -> Result<LatticePathCount> {
    check_r(r)?;
    let target = mu(lambda, r)?.into_entries();
    let bound = (lambda.first() + r) as i64;
    let mut v = VertexFunction::initial(r, bound)?;
    for _ in 0..lambda.size() {
        v = v.transition_clipped();
    }
    Ok(LatticePathCount {
        shape: lambda.clone(),
        count: to_count(v.evaluate(&target)?),
    })
}

/// Counts for every shape of height `≤ r` and size `≤ max_n` from one run of
/// the iteration, reading `v_{|λ|}` at `λ + r*`.
pub fn slice_counts(r: usize, max_n: usize) -> Result<HashMap<Partition, BigUint>> {
    check_r(r)?;
    let bound = (r - 1 + max_n) as i64;
    let mut out = HashMap::new();
    let mut v = VertexFunction::initial(r, bound)?;
    for n in 0..=max_n {
        if n > 0 {
            v = v.transition()?;
        }
        for lambda in crate::partitions::partitions_of(n, r) {
            let target = mu(&lambda, r)?.into_entries();
            out.insert(lambda, to_count(v.evaluate(&target)?));
        }
    }
    Ok(out)
}

/// Checks `f^λ = Σ_i f^{λ−δ_i}`, illegal predecessors counting 0.
pub fn recursion_check(lambda: &Partition, r: usize) -> Result<bool> {
    if lambda.size() == 0 {
        return Err(Error::InvalidArgument(
            "the recursion needs a non-empty shape".into(),
        ));
    }
    let total = count_paths(lambda, r)?.count;
    let mut sum = BigUint::zero();
    for i in 0..r {
        if let Some(prev) = lambda.remove_cell(i) {
            sum += count_paths(&prev, r)?.count;
        }
    }
    Ok(total == sum)
}
