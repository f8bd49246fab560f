use std::fmt;
use std::ops::Mul;

use super::gaussian::{primary_associate, GaussianInt};
use super::NumError;

/// A fourth root of unity `iᵏ`, stored as `k mod 4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PowerOfI(u8);

impl PowerOfI {
    pub const ONE: PowerOfI = PowerOfI(0);
    pub const I: PowerOfI = PowerOfI(1);
    pub const MINUS_ONE: PowerOfI = PowerOfI(2);
    pub const MINUS_I: PowerOfI = PowerOfI(3);

    pub fn from_exponent(k: i64) -> Self {
        PowerOfI(k.rem_euclid(4) as u8)
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn pow(self, e: i64) -> Self {
        PowerOfI::from_exponent(self.0 as i64 * e.rem_euclid(4))
    }

    pub fn square(self) -> Self {
        self.pow(2)
    }

    pub fn inverse(self) -> Self {
        PowerOfI::from_exponent(-(self.0 as i64))
    }

    pub fn conj(self) -> Self {
        self.inverse()
    }

    pub fn is_real(self) -> bool {
        self.0.is_multiple_of(2)
    }

    /// `±1` as an integer, `None` for `±i`.
    pub fn as_sign(self) -> Option<i32> {
        match self.0 {
            0 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }

    pub fn to_gaussian(self) -> GaussianInt {
        GaussianInt::ONE.mul_i_pow(self.0 as u32)
    }
}

impl Mul for PowerOfI {
    type Output = PowerOfI;
    fn mul(self, rhs: PowerOfI) -> PowerOfI {
        PowerOfI((self.0 + rhs.0) % 4)
    }
}

impl fmt::Display for PowerOfI {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["1", "i", "-1", "-i"][self.0 as usize])
    }
}

/// Exponent `k` with `(i / β)₄ = iᵏ`, for primary `β = a + bi`.
fn i_exponent(beta: GaussianInt) -> i64 {
    (1 - beta.re as i128).div_euclid(2).rem_euclid(4) as i64
}

/// Exponent `k` with `((1+i) / β)₄ = iᵏ`, for primary `β = a + bi`.
fn one_plus_i_exponent(beta: GaussianInt) -> i64 {
    let (a, b) = (beta.re as i128, beta.im as i128);
    let num = a - b - b * b - 1;
    debug_assert_eq!(num.rem_euclid(4), 0);
    num.div_euclid(4).rem_euclid(4) as i64
}

/// `(N − 1)/4 mod 2` for the norm of a primary element.
fn quarter_norm_parity(z: GaussianInt) -> u128 {
    ((z.norm() - 1) / 4) & 1
}

/// The quartic residue symbol `(α / β)₄`.
///
/// Evaluated by a Euclidean reduction loop driven by quartic reciprocity
/// and its supplementary laws, so `β` is never factored. Units in the
/// denominator contribute nothing, so `β` may be any odd element.
pub fn quartic_symbol(alpha: GaussianInt, beta: GaussianInt) -> Result<PowerOfI, NumError> {
    if !beta.is_odd() {
        return Err(NumError::EvenGaussian(beta));
    }
    let (mut den, _) = primary_associate(beta)?;
    let mut num = alpha;
    let mut exponent: i64 = 0;
    loop {
        if den == GaussianInt::ONE {
            return Ok(PowerOfI::from_exponent(exponent));
        }
        num = num.rem(den)?;
        if num.is_zero() {
            return Err(NumError::SharedFactor { alpha, beta });
        }
        let mut twos = 0i64;
        while num.is_even() {
            num = num
                .exact_div(GaussianInt::ONE_PLUS_I)
                .expect("even elements are divisible by 1+i");
            twos += 1;
        }
        // num = i^(-k) · primary
        let (primary, k) = primary_associate(num)?;
        exponent += -(k as i64) * i_exponent(den) + twos * one_plus_i_exponent(den);
        if quarter_norm_parity(primary) & quarter_norm_parity(den) == 1 {
            exponent += 2;
        }
        num = den;
        den = primary;
    }
}
