//! Closed-form counts.
//!
//! With `μ = λ + r*` and `n = |λ|`,
//! `f^λ = n! / (μ₁! ⋯ μ_r!) · ∏_{i<j} (μ_i − μ_j)`; the quotient is exact even
//! though `Σ μ_k ≠ n`. For two rows there is also the binomial difference
//! `f^{(k,ℓ)} = C(k+ℓ, k) − C(k+ℓ, k+1)`.

use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::method::Method;
use crate::partitions::{mu, Partition};
use crate::vertexdp::check_r;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactCount {
    pub value: BigUint,
    pub method: Method,
}

fn table() -> &'static RwLock<Vec<BigUint>> {
    static TABLE: OnceLock<RwLock<Vec<BigUint>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![BigUint::one()]))
}

/// `m!`, memoized process-wide.
pub fn factorial(m: usize) -> BigUint {
    {
        let t = table().read().unwrap();
        if let Some(v) = t.get(m) {
            return v.clone();
        }
    }
    let mut t = table().write().unwrap();
    while t.len() <= m {
        let k = t.len();
        let next = &t[k - 1] * BigUint::from(k);
        t.push(next);
    }
    t[m].clone()
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `n!/∏μ_k! · ∏_{i<j}(μ_i − μ_j)`.
pub fn count_closed(lambda: &Partition, r: usize) -> Result<ExactCount> {
    check_r(r)?;
    let m = mu(lambda, r)?.into_entries();
    let mut numerator = BigInt::from(factorial(lambda.size()));
    for i in 0..r {
        for j in i + 1..r {
            numerator *= m[i] - m[j];
        }
    }
    let mut denominator = BigInt::one();
    for &mk in &m {
        denominator *= BigInt::from(factorial(mk as usize));
    }
    let (q, rem) = numerator.div_rem(&denominator);
    if !rem.is_zero() {
        return Err(Error::InternalNonInteger(lambda.to_string()));
    }
    let value = q
        .to_biguint()
        .ok_or_else(|| Error::InternalNonInteger(lambda.to_string()))?;
    Ok(ExactCount {
        value,
        method: Method::Closed,
    })
}

/// `C(k+ℓ, k) − C(k+ℓ, k+1)` for `k ≥ ℓ ≥ 0`.
pub fn count_two_row(k: i64, l: i64) -> Result<ExactCount> {
    if l < 0 || k < l {
        return Err(Error::NotAPartition(vec![k, l]));
    }
    let (k, l) = (k as usize, l as usize);
    let value = binomial(k + l, k) - binomial(k + l, k + 1);
    Ok(ExactCount {
        value,
        method: Method::TwoRow,
    })
}
