//! Exact binomial coefficients and the alternating binomial basis in which
//! Hilbert coefficients are defined.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(a, b)` as an exact integer, with `C(a, b) = 0` for `b > a`.
pub fn binomial(a: u64, b: u64) -> BigInt {
    if b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

/// `C(a, b)` with the vanishing convention for indices outside the support:
/// zero whenever `a < 0`, `b < 0` or `b > a`. Series formulas index past
/// their support and rely on these terms dropping out.
pub fn binomial_signed(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    binomial(a as u64, b as u64)
}

/// Number of lattice points `(a_1, ..., a_n)` in `N^n` with `sum a_i = j`,
/// i.e. `C(n + j - 1, n - 1)`.
pub fn lattice_point_count(n: u64, j: u64) -> BigInt {
    assert!(n >= 1, "need at least one coordinate");
    binomial(n + j - 1, n - 1)
}

/// A length polynomial written in the alternating binomial basis: evaluation
/// at `s >= 1` is `sum_i (-1)^i e_i C(s + n - i - 1, n - i)`.
///
/// The coefficient tuple `e_0..e_n` always has exactly `n + 1` entries, `n`
/// being the number of ring variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialBasisPolynomial {
    n: usize,
    e: Vec<BigInt>,
}

impl BinomialBasisPolynomial {
    pub fn new(n: usize, e: Vec<BigInt>) -> Self {
        assert_eq!(e.len(), n + 1, "coefficient tuple must have n + 1 entries");
        Self { n, e }
    }

    pub fn from_i64(n: usize, e: &[i64]) -> Self {
        Self::new(n, e.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.e
    }

    /// Evaluate at a positive integer `s`.
    pub fn evaluate(&self, s: u64) -> BigInt {
        assert!(s >= 1, "the basis is defined for s >= 1");
        evaluate_basis(self.n, &self.e, s)
    }
}

/// `sum_i (-1)^i e_i C(s + n - i - 1, n - i)` for an arbitrary coefficient
/// slice of length `n + 1`.
pub fn evaluate_basis(n: usize, e: &[BigInt], s: u64) -> BigInt {
    assert_eq!(e.len(), n + 1);
    assert!(s >= 1);
    let mut acc = BigInt::zero();
    for (i, ei) in e.iter().enumerate() {
        let term = ei * binomial(s + (n - i) as u64 - 1, (n - i) as u64);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}
