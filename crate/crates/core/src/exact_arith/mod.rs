//! Exact integer arithmetic: dense polynomials, Gaussian integers and
//! truncated power series over arbitrary-precision integers.

mod gaussian;
mod poly;
mod series;

pub use gaussian::GaussianInteger;
pub use poly::IntPolynomial;
pub use series::{series_coefficient, TruncatedSeries};

use num_traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision signed integer used for every computed quantity.
pub type Integer = num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("divisor leading coefficient {0} is not a unit")]
    NonMonicDivisor(Integer),
    #[error("series constant term {0} is not a unit")]
    NonUnitConstant(Integer),
}

/// Binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> Integer {
    if k < 0 || k as u64 > n {
        return Integer::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Integer::one();
    for j in 0..k {
        // acc = C(n, j) at loop entry; the product is always divisible by j + 1
        acc = acc * (n - j) / (j + 1);
    }
    acc
}
