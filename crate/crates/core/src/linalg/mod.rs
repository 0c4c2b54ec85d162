//! Exact integer linear algebra: determinants, minors, characteristic
//! polynomials. Nothing in here touches floating point.

mod det;
mod matrix;
mod poly;

use num_bigint::BigInt;
use num_traits::{One, Signed};

pub use det::{det, minor_det, sum_principal_minors, PRINCIPAL_MINOR_CAP};
pub use matrix::IntMatrix;
pub use poly::IntPolynomial;


use crate::error::Result;

/// `det(xI - M)` as an exact integer polynomial.
///
/// The determinant is evaluated at `x = 0..=n` and interpolated in the
/// falling-factorial basis: `p(x) = sum_k D^k p(0) * x(x-1)...(x-k+1) / k!`,
/// where `D^k` is the k-th forward difference. The `1/k!` factors are cleared
/// by scaling with `n!` and dividing once at the end; that final division is
/// exact for any integer matrix.
pub fn char_poly(m: &IntMatrix) -> Result<IntPolynomial> {
    let n = m.ensure_square()?;
    let mut diffs: Vec<BigInt> = (0..=n)
        .map(|x| {
            let shifted = IntMatrix::identity(n)
                .scale(&BigInt::from(x))
                .sub(m)
                .expect("same shape");
            det(&shifted)
        })
        .collect::<Result<_>>()?;

    // In-place forward differences: diffs[k] becomes D^k p(0).
    for k in 1..=n {
        for i in (k..=n).rev() {
            diffs[i] = &diffs[i] - &diffs[i - 1];
        }
    }

    let n_fact = factorial(n as u64);
    let mut falling = IntPolynomial::one();
    let mut k_fact = BigInt::one();
    let mut acc = IntPolynomial::zero();
    for (k, d) in diffs.iter().enumerate() {
        if k > 0 {
            falling = &falling * &IntPolynomial::linear(-BigInt::from(k - 1));
            k_fact *= k;
        }
        let weight = d * (&n_fact / &k_fact);
        acc = &acc + &falling.scale(&weight);
    }
    let p = acc
        .div_exact(&n_fact)
        .expect("characteristic polynomial of an integer matrix has integer coefficients");
    debug_assert!(p.is_monic() || n == 0);
    Ok(p)
}

/// Squared Frobenius norm, the sum of squared entries.
pub fn frobenius_norm_sq(m: &IntMatrix) -> BigInt {
    m.entries().map(|e| e * e).sum()
}

/// Integer square root of `x` when `x` is a perfect square.
pub fn perfect_square_root(x: &BigInt) -> Option<BigInt> {
    if x.is_negative() {
        return None;
    }
    let r = x.sqrt();
    (&r * &r == *x).then_some(r)
}

pub fn is_perfect_square(x: &BigInt) -> bool {
    perfect_square_root(x).is_some()
}

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `sum_{k} C(n, 2k) x^{n-2k}`, i.e. `((x+1)^n + (x-1)^n) / 2`.
pub fn half_binomial_sum(n: u32) -> IntPolynomial {
    let plus = IntPolynomial::linear(BigInt::one()).pow(n);
    let minus = IntPolynomial::linear(-BigInt::one()).pow(n);
    (&plus + &minus)
        .div_exact(&BigInt::from(2))
        .expect("even binomial coefficients only")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn mat(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn char_poly_of_identity() {
        let p = char_poly(&IntMatrix::identity(2)).unwrap();
        assert_eq!(p, IntPolynomial::from_i64(&[1, -2, 1]));
    }

    #[test]
    fn char_poly_of_directed_triangle_laplacian() {
        // Hand expansion: det(xI - L) = (x-1)^3 - 1 = x^3 - 3x^2 + 3x.
        let l = mat(&[vec![1, -1, 0], vec![0, 1, -1], vec![-1, 0, 1]]);
        assert_eq!(char_poly(&l).unwrap(), IntPolynomial::from_i64(&[0, 3, -3, 1]));
    }

    #[test]
    fn char_poly_empty_matrix() {
        assert_eq!(char_poly(&IntMatrix::zeros(0, 0)).unwrap(), IntPolynomial::one());
    }

    #[test]
    fn char_poly_rejects_rectangular() {
        assert!(char_poly(&IntMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn frobenius_examples() {
        let l = mat(&[vec![1, -1, 0], vec![0, 1, -1], vec![-1, 0, 1]]);
        assert_eq!(frobenius_norm_sq(&l), BigInt::from(6));
        assert_eq!(frobenius_norm_sq(&IntMatrix::zeros(3, 3)), BigInt::zero());
    }

    #[test]
    fn perfect_squares() {
        assert_eq!(perfect_square_root(&BigInt::from(9)), Some(BigInt::from(3)));
        assert_eq!(perfect_square_root(&BigInt::from(1)), Some(BigInt::one()));
        assert_eq!(perfect_square_root(&BigInt::zero()), Some(BigInt::zero()));
        assert!(!is_perfect_square(&BigInt::from(8)));
        assert!(!is_perfect_square(&BigInt::from(-4)));
    }

    #[test]
    fn half_binomial_sum_small() {
        assert_eq!(half_binomial_sum(3), IntPolynomial::from_i64(&[0, 3, 0, 1]));
        assert_eq!(half_binomial_sum(4), IntPolynomial::from_i64(&[1, 0, 6, 0, 1]));
    }

    fn square(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = IntMatrix> {
        prop::collection::vec(lo..=hi, n * n)
            .prop_map(move |v| IntMatrix::from_fn(n, n, |i, j| v[i * n + j]))
    }

    fn skew(n: usize) -> impl Strategy<Value = IntMatrix> {
        prop::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
            IntMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
                std::cmp::Ordering::Less => v[i * n + j],
                std::cmp::Ordering::Equal => 0,
                std::cmp::Ordering::Greater => -v[j * n + i],
            })
        })
    }

    proptest! {
        #[test]
        fn char_poly_constant_term(m in (1usize..=6).prop_flat_map(|n| square(n, -5, 5))) {
            let n = m.rows();
            let p = char_poly(&m).unwrap();
            let sign = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            prop_assert_eq!(p.coeff(0), sign * det(&m).unwrap());
            prop_assert_eq!(p.degree(), Some(n));
            prop_assert!(p.is_monic());
        }

        #[test]
        fn char_poly_coefficients_are_principal_minor_sums(
            m in (1usize..=6).prop_flat_map(|n| square(n, -4, 4))
        ) {
            let n = m.rows();
            let p = char_poly(&m).unwrap();
            for k in 0..=n {
                let s = sum_principal_minors(&m, k).unwrap();
                let expected = if k % 2 == 0 { s } else { -s };
                prop_assert_eq!(p.coeff(n - k), expected);
            }
        }

        #[test]
        fn skew_symmetric_determinants(m in (1usize..=7).prop_flat_map(skew)) {
            let n = m.rows();
            let d = det(&m).unwrap();
            if n % 2 == 1 {
                prop_assert!(d.is_zero());
            } else {
                prop_assert!(is_perfect_square(&d));
            }
            // Roots come in pairs +-ai: only coefficients of x^{n-2k} survive.
            let p = char_poly(&m).unwrap();
            for k in (1..=n).step_by(2) {
                prop_assert!(p.coeff(n - k).is_zero());
            }
        }
    }
}
