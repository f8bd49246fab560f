use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::NumError;

/// An element `re + im·i` of the Gaussian integers.
///
/// The arithmetic operators panic on 64-bit overflow rather than wrapping;
/// use the `checked_*` methods where overflow is a recoverable condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussianInt {
    pub re: i64,
    pub im: i64,
}

impl GaussianInt {
    pub const ZERO: GaussianInt = GaussianInt { re: 0, im: 0 };
    pub const ONE: GaussianInt = GaussianInt { re: 1, im: 0 };
    pub const I: GaussianInt = GaussianInt { re: 0, im: 1 };
    /// The ramified prime `1 + i` above 2.
    pub const ONE_PLUS_I: GaussianInt = GaussianInt { re: 1, im: 1 };

    pub const fn new(re: i64, im: i64) -> Self {
        GaussianInt { re, im }
    }

    pub const fn from_int(n: i64) -> Self {
        GaussianInt { re: n, im: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.re == 0 && self.im == 0
    }

    pub fn is_unit(&self) -> bool {
        self.re.unsigned_abs() + self.im.unsigned_abs() == 1
    }

    /// `re² + im²`, exact for every representable value.
    pub fn norm(&self) -> u128 {
        let re = self.re.unsigned_abs() as u128;
        let im = self.im.unsigned_abs() as u128;
        re * re + im * im
    }

    /// Norm as an `i64`, failing if it does not fit.
    pub fn norm_i64(&self) -> Result<i64, NumError> {
        i64::try_from(self.norm()).map_err(|_| NumError::Overflow)
    }

    /// Odd means the norm is odd, i.e. `1 + i` does not divide the element.
    pub fn is_odd(&self) -> bool {
        (self.re ^ self.im) & 1 == 1
    }

    pub fn is_even(&self) -> bool {
        !self.is_odd()
    }

    /// Primary: odd and `(re, im) ≡ (1, 0)` or `(3, 2)` mod 4.
    pub fn is_primary(&self) -> bool {
        matches!(
            (self.re.rem_euclid(4), self.im.rem_euclid(4)),
            (1, 0) | (3, 2)
        )
    }

    pub fn conj(&self) -> Self {
        GaussianInt::new(self.re, -self.im)
    }

    /// Multiplication by `i`.
    pub fn mul_i(&self) -> Self {
        GaussianInt::new(-self.im, self.re)
    }

    /// Multiplication by `iᵏ` for any `k`.
    pub fn mul_i_pow(&self, k: u32) -> Self {
        (0..k % 4).fold(*self, |z, _| z.mul_i())
    }

    pub fn checked_add(&self, rhs: GaussianInt) -> Option<Self> {
        Some(GaussianInt::new(
            self.re.checked_add(rhs.re)?,
            self.im.checked_add(rhs.im)?,
        ))
    }

    pub fn checked_sub(&self, rhs: GaussianInt) -> Option<Self> {
        Some(GaussianInt::new(
            self.re.checked_sub(rhs.re)?,
            self.im.checked_sub(rhs.im)?,
        ))
    }

    pub fn checked_mul(&self, rhs: GaussianInt) -> Option<Self> {
        let (a, b, c, d) = (
            self.re as i128,
            self.im as i128,
            rhs.re as i128,
            rhs.im as i128,
        );
        let re = i64::try_from(a * c - b * d).ok()?;
        let im = i64::try_from(a * d + b * c).ok()?;
        Some(GaussianInt::new(re, im))
    }

    /// Euclidean division: `self = q·d + r` with `N(r) ≤ N(d)/2`.
    ///
    /// The quotient is the exact quotient rounded to the nearest Gaussian
    /// integer componentwise, ties toward −∞.
    pub fn div_rem(&self, d: GaussianInt) -> Result<(GaussianInt, GaussianInt), NumError> {
        if d.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        let (a, b) = (self.re as i128, self.im as i128);
        let (c, e) = (d.re as i128, d.im as i128);
        let n = c * c + e * e;
        // self · conj(d)
        let x = a * c + b * e;
        let y = b * c - a * e;
        let q = GaussianInt::new(
            i64::try_from(round_half_down(x, n)).map_err(|_| NumError::Overflow)?,
            i64::try_from(round_half_down(y, n)).map_err(|_| NumError::Overflow)?,
        );
        let r_re = a - (q.re as i128 * c - q.im as i128 * e);
        let r_im = b - (q.re as i128 * e + q.im as i128 * c);
        let r = GaussianInt::new(
            i64::try_from(r_re).map_err(|_| NumError::Overflow)?,
            i64::try_from(r_im).map_err(|_| NumError::Overflow)?,
        );
        Ok((q, r))
    }

    pub fn rem(&self, d: GaussianInt) -> Result<GaussianInt, NumError> {
        Ok(self.div_rem(d)?.1)
    }

    /// `self / d` if `d` divides `self` exactly in Z[i].
    pub fn exact_div(&self, d: GaussianInt) -> Option<GaussianInt> {
        if d.is_zero() {
            return None;
        }
        let (a, b) = (self.re as i128, self.im as i128);
        let (c, e) = (d.re as i128, d.im as i128);
        let n = c * c + e * e;
        let x = a * c + b * e;
        let y = b * c - a * e;
        if x % n != 0 || y % n != 0 {
            return None;
        }
        Some(GaussianInt::new(
            i64::try_from(x / n).ok()?,
            i64::try_from(y / n).ok()?,
        ))
    }
}

/// Nearest integer to `x / n` (`n > 0`), ties toward −∞.
fn round_half_down(x: i128, n: i128) -> i128 {
    // ceil((2x - n) / 2n)
    let num = 2 * x - n;
    let den = 2 * n;
    -((-num).div_euclid(den))
}

impl Add for GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: GaussianInt) -> GaussianInt {
        self.checked_add(rhs).expect("Gaussian integer overflow")
    }
}

impl Sub for GaussianInt {
    type Output = GaussianInt;
    fn sub(self, rhs: GaussianInt) -> GaussianInt {
        self.checked_sub(rhs).expect("Gaussian integer overflow")
    }
}

impl Mul for GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: GaussianInt) -> GaussianInt {
        self.checked_mul(rhs).expect("Gaussian integer overflow")
    }
}

impl Neg for GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt::new(
            self.re.checked_neg().expect("Gaussian integer overflow"),
            self.im.checked_neg().expect("Gaussian integer overflow"),
        )
    }
}

impl From<i64> for GaussianInt {
    fn from(n: i64) -> Self {
        GaussianInt::from_int(n)
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im < 0 {
            write!(f, "{}-{}i", self.re, self.im.unsigned_abs())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

/// Returns `(β, k)` with `β = iᵏ·α` primary.
pub fn primary_associate(alpha: GaussianInt) -> Result<(GaussianInt, u32), NumError> {
    if !alpha.is_odd() {
        return Err(NumError::EvenGaussian(alpha));
    }
    let mut z = alpha;
    for k in 0..4 {
        if z.is_primary() {
            return Ok((z, k));
        }
        z = z.mul_i();
    }
    unreachable!("every odd Gaussian integer has a primary associate")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_and_primary() {
        assert!(GaussianInt::new(3, 2).is_primary());
        assert!(GaussianInt::new(-3, 0).is_primary());
        assert!(!GaussianInt::new(3, 0).is_primary());
        assert!(GaussianInt::new(2, 2).is_even());
        assert!(GaussianInt::new(2, 1).is_odd());
        assert_eq!(GaussianInt::new(-4, 3).norm(), 25);
    }

    #[test]
    fn primary_associate_examples() {
        assert_eq!(
            primary_associate(GaussianInt::new(3, 0)).unwrap(),
            (GaussianInt::new(-3, 0), 2)
        );
        assert_eq!(
            primary_associate(GaussianInt::ONE).unwrap(),
            (GaussianInt::ONE, 0)
        );
        assert_eq!(
            primary_associate(GaussianInt::new(3, 2)).unwrap(),
            (GaussianInt::new(3, 2), 0)
        );
        assert!(primary_associate(GaussianInt::new(1, 1)).is_err());
        assert!(primary_associate(GaussianInt::ZERO).is_err());
    }

    #[test]
    fn division_ties_round_down() {
        // 1/2 and 3/2 are ties.
        let (q, r) = GaussianInt::new(1, 3)
            .div_rem(GaussianInt::from_int(2))
            .unwrap();
        assert_eq!(q, GaussianInt::new(0, 1));
        assert_eq!(r, GaussianInt::new(1, 1));
        let (q, _) = GaussianInt::new(-1, -1)
            .div_rem(GaussianInt::from_int(2))
            .unwrap();
        assert_eq!(q, GaussianInt::new(-1, -1));
    }

    #[test]
    fn division_remainder_is_small() {
        for a in -20..=20 {
            for b in -20..=20 {
                for d in [
                    GaussianInt::new(3, 2),
                    GaussianInt::new(-1, 4),
                    GaussianInt::new(5, 0),
                ] {
                    let x = GaussianInt::new(a, b);
                    let (q, r) = x.div_rem(d).unwrap();
                    assert_eq!(q * d + r, x);
                    assert!(2 * r.norm() <= d.norm());
                }
            }
        }
    }

    #[test]
    fn exact_division() {
        let a = GaussianInt::new(3, 2) * GaussianInt::new(-7, 5);
        assert_eq!(
            a.exact_div(GaussianInt::new(3, 2)),
            Some(GaussianInt::new(-7, 5))
        );
        assert_eq!(
            GaussianInt::new(5, 1).exact_div(GaussianInt::new(1, 1)),
            Some(GaussianInt::new(3, -2))
        );
        assert_eq!(
            GaussianInt::new(5, 0).exact_div(GaussianInt::new(1, 1)),
            None
        );
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn mul_overflow_is_fatal() {
        let big = GaussianInt::new(i64::MAX / 2, 0);
        let _ = big * GaussianInt::from_int(4);
    }
}
