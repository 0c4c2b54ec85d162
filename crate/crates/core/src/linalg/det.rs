//! Fraction-free (Bareiss) determinants.
//!
//! Every division performed by the elimination is exact, so the whole
//! computation stays in the integers. Small matrices whose entries fit in
//! `i64` run on checked `i128` arithmetic first; any overflow restarts the
//! elimination on big integers.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// Largest matrix order accepted by [`sum_principal_minors`].
pub const PRINCIPAL_MINOR_CAP: usize = 14;

pub fn det(m: &IntMatrix) -> Result<BigInt> {
    let n = m.ensure_square()?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    if let Some(small) = to_i128(m) {
        if let Some(d) = bareiss_i128(small, n) {
            return Ok(BigInt::from(d));
        }
    }
    Ok(bareiss_big(m.entries().cloned().collect(), n))
}

/// Determinant of `m` with row `i` and column `j` removed.
pub fn minor_det(m: &IntMatrix, i: usize, j: usize) -> Result<BigInt> {
    let n = m.ensure_square()?;
    if i >= n || j >= n {
        return Err(Error::InvalidParameter(format!(
            "minor ({i}, {j}) out of range for order {n}"
        )));
    }
    det(&m.without(i, j))
}

/// Sum of `det(M[S,S])` over all `k`-subsets `S` of the index set.
pub fn sum_principal_minors(m: &IntMatrix, k: usize) -> Result<BigInt> {
    let n = m.ensure_square()?;
    if k > n {
        return Err(Error::InvalidParameter(format!(
            "minor size {k} exceeds order {n}"
        )));
    }
    if n > PRINCIPAL_MINOR_CAP {
        return Err(Error::CapExceeded {
            what: "matrix order for principal-minor enumeration",
            limit: PRINCIPAL_MINOR_CAP as u64,
        });
    }
    (0..n).combinations(k).try_fold(BigInt::zero(), |acc, s| {
        Ok(acc + det(&m.principal(&s))?)
    })
}

fn to_i128(m: &IntMatrix) -> Option<Vec<i128>> {
    m.entries().map(|e| e.to_i64().map(i128::from)).collect()
}

fn bareiss_i128(mut a: Vec<i128>, n: usize) -> Option<i128> {
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k * n + k] == 0 {
            let swap = (k + 1..n).find(|&r| a[r * n + k] != 0);
            match swap {
                None => return Some(0),
                Some(r) => {
                    for c in 0..n {
                        a.swap(k * n + c, r * n + c);
                    }
                    sign = -sign;
                }
            }
        }
        let pivot = a[k * n + k];
        for i in k + 1..n {
            let lead = a[i * n + k];
            for j in k + 1..n {
                let x = a[i * n + j]
                    .checked_mul(pivot)?
                    .checked_sub(lead.checked_mul(a[k * n + j])?)?;
                a[i * n + j] = x / prev;
            }
            a[i * n + k] = 0;
        }
        prev = pivot;
    }
    a[n * n - 1].checked_mul(sign)
}

fn bareiss_big(mut a: Vec<BigInt>, n: usize) -> BigInt {
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            match (k + 1..n).find(|&r| !a[r * n + k].is_zero()) {
                None => return BigInt::zero(),
                Some(r) => {
                    for c in 0..n {
                        a.swap(k * n + c, r * n + c);
                    }
                    negate = !negate;
                }
            }
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            let lead = a[i * n + k].clone();
            for j in k + 1..n {
                let x = &a[i * n + j] * &pivot - &lead * &a[k * n + j];
                debug_assert!((&x % &prev).is_zero(), "Bareiss division must be exact");
                a[i * n + j] = x / &prev;
            }
            a[i * n + k] = BigInt::zero();
        }
        prev = pivot;
    }
    let d = a[n * n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Determinant by cofactor expansion; exponential, only used to cross-check.
#[cfg(test)]
pub(crate) fn det_cofactor(m: &IntMatrix) -> BigInt {
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    (0..n)
        .map(|j| {
            let term = &m[(0, j)] * det_cofactor(&m.without(0, j));
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}
