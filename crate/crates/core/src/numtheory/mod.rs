//! Exact arithmetic over Z and Z[i]: Kronecker symbols, factorization,
//! sums of two squares and the quartic residue symbol.

mod factor;
mod gaussian;
mod kronecker;
mod quartic;

pub use factor::{factor, is_prime, sum_two_squares_all, Factorization};
pub use gaussian::{primary_associate, GaussianInt};
pub use kronecker::{gcd, kronecker, odd_part_and_v2};
pub use quartic::{quartic_symbol, PowerOfI};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("argument must be nonzero")]
    Zero,
    #[error("factorization input {0} outside 2..=2^63-1")]
    FactorRange(u64),
    #[error("{0} is even in Z[i] (divisible by 1+i)")]
    EvenGaussian(GaussianInt),
    #[error("{alpha} and {beta} share a factor")]
    SharedFactor {
        alpha: GaussianInt,
        beta: GaussianInt,
    },
    #[error("division by zero")]
    DivisionByZero,
    #[error("64-bit overflow")]
    Overflow,
}
