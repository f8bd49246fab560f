//! Descartes quadruples, the Apollonian moves, and the correspondence
//! between a circle and the binary quadratic form of its tangent curvatures.
//!
//! Operations that single out particular circles are positional: the first
//! entry of a quadruple is "the" circle, the second its chosen neighbour.
//! Use [`Quadruple::swap`] to bring the circles of interest to the front.

use std::fmt;

use thiserror::Error;

use crate::numtheory::gcd;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PackingError {
    #[error("Descartes equation violated: (a+b+c+d)^2 = {lhs} but 2(a^2+b^2+c^2+d^2) = {rhs}")]
    DescartesViolated { lhs: i128, rhs: i128 },
    #[error("curvature sum {0} is not positive")]
    NonPositiveSum(i128),
    #[error("quadruple is not primitive (gcd {0})")]
    Imprimitive(u64),
    #[error("move index {0} out of range 0..4")]
    IndexOutOfRange(usize),
    #[error("first curvature is zero; select a circle of nonzero curvature")]
    ZeroCurvature,
    #[error("tangent family of two curvatures summing to zero is degenerate")]
    DegenerateFamily,
    #[error("invalid quadratic form ({a}, {b}, {c}): {reason}")]
    InvalidForm {
        a: i64,
        b: i64,
        c: i64,
        reason: &'static str,
    },
    #[error("form discriminant {disc} does not equal -4·{n}^2")]
    DiscriminantMismatch { disc: i128, n: i64 },
    #[error("no curvature coprime to {modulus} within {cap} tangent-family candidates")]
    SearchCapExceeded { modulus: u64, cap: u64 },
    #[error("64-bit overflow in curvature arithmetic")]
    Overflow,
}

/// Four ordered curvatures of mutually tangent circles in a primitive
/// integral packing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quadruple([i64; 4]);

impl Quadruple {
    /// Validates the Descartes equation, positivity of the sum and
    /// primitivity, in that order.
    pub fn new(entries: [i64; 4]) -> Result<Self, PackingError> {
        let s: i128 = entries.iter().map(|&x| x as i128).sum();
        let lhs = s * s;
        let rhs = 2 * entries
            .iter()
            .map(|&x| (x as i128) * (x as i128))
            .sum::<i128>();
        if lhs != rhs {
            return Err(PackingError::DescartesViolated { lhs, rhs });
        }
        if s <= 0 {
            return Err(PackingError::NonPositiveSum(s));
        }
        let g = entries.iter().fold(0u64, |g, &x| gcd(g as i64, x));
        if g != 1 {
            return Err(PackingError::Imprimitive(g));
        }
        Ok(Quadruple(entries))
    }

    pub fn entries(&self) -> [i64; 4] {
        self.0
    }

    pub fn get(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// The same circles listed with positions `i` and `j` exchanged.
    pub fn swap(&self, i: usize, j: usize) -> Self {
        let mut e = self.0;
        e.swap(i, j);
        Quadruple(e)
    }

    /// Entries in ascending order.
    pub fn sorted(&self) -> Self {
        let mut e = self.0;
        e.sort_unstable();
        Quadruple(e)
    }

    /// The curvature produced by the move at `index` (0-based):
    /// twice the sum of the other three entries minus the replaced one.
    pub fn move_value(&self, index: usize) -> Result<i64, PackingError> {
        if index >= 4 {
            return Err(PackingError::IndexOutOfRange(index));
        }
        let others = self
            .0
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != index)
            .try_fold(0i64, |acc, (_, &x)| acc.checked_add(x))
            .ok_or(PackingError::Overflow)?;
        others
            .checked_mul(2)
            .and_then(|t| t.checked_sub(self.0[index]))
            .ok_or(PackingError::Overflow)
    }

    /// Applies the move `S_{index+1}`, replacing one circle by the other
    /// solution of Apollonius' problem for the remaining three.
    pub fn apply_move(&self, index: usize) -> Result<Self, PackingError> {
        let v = self.move_value(index)?;
        let mut e = self.0;
        e[index] = v;
        Ok(Quadruple(e))
    }

    /// The root quadruple of the packing, sorted ascending.
    ///
    /// Repeatedly replaces the largest entry while that strictly lowers the
    /// curvature sum.
    pub fn reduce_to_root(&self) -> Self {
        let mut q = *self;
        loop {
            let s = q.sum();
            let (idx, &max) =
                q.0.iter()
                    .enumerate()
                    .max_by_key(|&(_, x)| *x)
                    .expect("four entries");
            // new sum is 3s − 4x, smaller iff 2x > s
            if 2 * max as i128 <= s as i128 {
                return q.sorted();
            }
            q = q.apply_move(idx).expect("decreasing moves cannot overflow");
        }
    }

    /// The form `(a+b)x² + (a+b+c−d)xy + (a+c)y²` attached to the first
    /// circle.
    pub fn form_of(&self) -> Result<QuadForm, PackingError> {
        let [a, b, c, d] = self.0;
        if a == 0 {
            return Err(PackingError::ZeroCurvature);
        }
        let ov = || PackingError::Overflow;
        let fa = a.checked_add(b).ok_or_else(ov)?;
        let fb = fa
            .checked_add(c)
            .and_then(|t| t.checked_sub(d))
            .ok_or_else(ov)?;
        let fc = a.checked_add(c).ok_or_else(ov)?;
        QuadForm::new(fa, fb, fc)
    }

    /// Curvatures of the circles tangent to both of the first two circles.
    pub fn tangent_family(&self) -> Result<TangentFamily, PackingError> {
        let [a, b, c, d] = self.0;
        let p2 = a.checked_add(b).ok_or(PackingError::Overflow)?;
        if p2 == 0 {
            return Err(PackingError::DegenerateFamily);
        }
        let p1 = p2
            .checked_add(c)
            .and_then(|t| t.checked_sub(d))
            .ok_or(PackingError::Overflow)?;
        Ok(TangentFamily { p2, p1, p0: c })
    }

    /// A circle tangent to the first two whose curvature is coprime to
    /// `modulus`.
    ///
    /// Searches the tangent family at `x = 0, 1, −1, 2, −2, …`, trying at
    /// most `2·modulus + 2` parameters.
    pub fn coprime_neighbor(&self, modulus: u64) -> Result<CoprimeNeighbor, PackingError> {
        let family = self.tangent_family()?;
        let cap = modulus.saturating_mul(2).saturating_add(2);
        let mut tried = 0u64;
        for step in 0i64.. {
            for x in if step == 0 {
                vec![0]
            } else {
                vec![step, -step]
            } {
                if tried >= cap {
                    return Err(PackingError::SearchCapExceeded { modulus, cap });
                }
                tried += 1;
                let m = family.eval(x)?;
                if gcd(m, modulus as i64) == 1 || modulus == 1 {
                    let next = family.eval(x + 1)?;
                    let quadruple = Quadruple::new([self.0[0], self.0[1], m, next])?;
                    return Ok(CoprimeNeighbor {
                        x,
                        curvature: m,
                        quadruple,
                    });
                }
            }
        }
        unreachable!()
    }
}

impl fmt::Display for Quadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a}, {b}, {c}, {d})")
    }
}

/// A primitive positive-definite form `Ax² + Bxy + Cy²` of discriminant
/// `−4n²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    n: i64,
}

impl QuadForm {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self, PackingError> {
        let bad = |reason| PackingError::InvalidForm { a, b, c, reason };
        if a <= 0 || c <= 0 {
            return Err(bad("not positive definite"));
        }
        if b % 2 != 0 {
            return Err(bad("middle coefficient is odd"));
        }
        let g = gcd(gcd(a, b) as i64, c);
        if g != 1 {
            return Err(bad("not primitive"));
        }
        // B² − 4AC = −4n²  ⇔  AC − (B/2)² = n²
        let n2 = a as i128 * c as i128 - (b as i128 / 2).pow(2);
        if n2 <= 0 {
            return Err(bad("not positive definite"));
        }
        let n = isqrt_i128(n2);
        if n * n != n2 {
            return Err(bad("discriminant is not -4 times a square"));
        }
        let n = i64::try_from(n).map_err(|_| PackingError::Overflow)?;
        Ok(QuadForm { a, b, c, n })
    }

    /// The positive `n` with discriminant `−4n²`.
    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn discriminant(&self) -> i128 {
        (self.b as i128).pow(2) - 4 * self.a as i128 * self.c as i128
    }

    pub fn eval(&self, x: i64, y: i64) -> i128 {
        let (x, y) = (x as i128, y as i128);
        self.a as i128 * x * x + self.b as i128 * x * y + self.c as i128 * y * y
    }

    /// Inverse of [`Quadruple::form_of`]: `(a, A−a, C−a, A+C−B−a)`.
    pub fn quad_of(&self, curvature: i64) -> Result<Quadruple, PackingError> {
        if curvature == 0 {
            return Err(PackingError::ZeroCurvature);
        }
        if curvature.unsigned_abs() != self.n as u64 {
            return Err(PackingError::DiscriminantMismatch {
                disc: self.discriminant(),
                n: curvature,
            });
        }
        let ov = || PackingError::Overflow;
        let b = self.a.checked_sub(curvature).ok_or_else(ov)?;
        let c = self.c.checked_sub(curvature).ok_or_else(ov)?;
        let d = self
            .a
            .checked_add(self.c)
            .and_then(|t| t.checked_sub(self.b))
            .and_then(|t| t.checked_sub(curvature))
            .ok_or_else(ov)?;
        Quadruple::new([curvature, b, c, d])
    }
}

fn isqrt_i128(n: i128) -> i128 {
    (n as u128).isqrt() as i128
}

/// `f(x) = p2·x² − p1·x + p0`, the curvatures of the circles tangent to two
/// fixed tangent circles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TangentFamily {
    pub p2: i64,
    pub p1: i64,
    pub p0: i64,
}

impl TangentFamily {
    pub fn eval(&self, x: i64) -> Result<i64, PackingError> {
        let v = self.p2 as i128 * (x as i128) * (x as i128) - self.p1 as i128 * x as i128
            + self.p0 as i128;
        i64::try_from(v).map_err(|_| PackingError::Overflow)
    }
}

/// Result of [`Quadruple::coprime_neighbor`]: the family parameter, the
/// curvature found, and the quadruple `(a, b, f(x), f(x+1))` containing it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoprimeNeighbor {
    pub x: i64,
    pub curvature: i64,
    pub quadruple: Quadruple,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: [i64; 4]) -> Quadruple {
        Quadruple::new(e).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Quadruple::new([-1, 2, 2, 3]).is_ok());
        assert!(Quadruple::new([0, 0, 1, 1]).is_ok());
        assert_eq!(
            Quadruple::new([1, 1, 1, 1]),
            Err(PackingError::DescartesViolated { lhs: 16, rhs: 8 })
        );
        assert!(matches!(
            Quadruple::new([1, -2, -2, -3]),
            Err(PackingError::NonPositiveSum(-6))
        ));
        assert_eq!(
            Quadruple::new([-2, 4, 4, 6]),
            Err(PackingError::Imprimitive(2))
        );
    }

    #[test]
    fn moves() {
        assert_eq!(q([-1, 2, 2, 3]).apply_move(0).unwrap(), q([15, 2, 2, 3]));
        assert_eq!(q([0, 0, 1, 1]).apply_move(0).unwrap(), q([4, 0, 1, 1]));
        assert_eq!(
            q([-1, 2, 2, 3]).apply_move(4),
            Err(PackingError::IndexOutOfRange(4))
        );
        let start = q([-3, 5, 8, 8]);
        for i in 0..4 {
            assert_eq!(start.apply_move(i).unwrap().apply_move(i).unwrap(), start);
        }
    }

    #[test]
    fn root_reduction() {
        assert_eq!(q([15, 2, 2, 3]).reduce_to_root(), q([-1, 2, 2, 3]));
        assert_eq!(q([-1, 2, 2, 3]).reduce_to_root(), q([-1, 2, 2, 3]));
        assert_eq!(q([4, 0, 1, 1]).reduce_to_root(), q([0, 0, 1, 1]));
        assert_eq!(q([8, -3, 8, 5]).reduce_to_root(), q([-3, 5, 8, 8]));
    }

    #[test]
    fn forms() {
        let f = q([-3, 5, 8, 8]).form_of().unwrap();
        assert_eq!((f.a, f.b, f.c, f.n()), (2, 2, 5, 3));
        assert_eq!(f.discriminant(), -36);
        assert_eq!(f.quad_of(-3).unwrap(), q([-3, 5, 8, 8]));
        assert_eq!(
            QuadForm::new(2, 2, 5)
                .unwrap()
                .quad_of(-3)
                .unwrap()
                .form_of()
                .unwrap(),
            f
        );
        assert_eq!(q([0, 0, 1, 1]).form_of(), Err(PackingError::ZeroCurvature));
        assert!(matches!(
            QuadForm::new(1, 0, 2),
            Err(PackingError::InvalidForm { .. })
        ));
        assert!(matches!(
            QuadForm::new(1, 0, 4).unwrap().quad_of(3),
            Err(PackingError::DiscriminantMismatch { .. })
        ));
        assert_eq!(
            QuadForm::new(1, 0, 4).unwrap().quad_of(0),
            Err(PackingError::ZeroCurvature)
        );
    }

    #[test]
    fn tangent_family_bug_eye() {
        let f = q([-1, 2, 2, 3]).tangent_family().unwrap();
        assert_eq!(
            f,
            TangentFamily {
                p2: 1,
                p1: 0,
                p0: 2
            }
        );
        let values: Vec<_> = (0..4).map(|x| f.eval(x).unwrap()).collect();
        assert_eq!(values, vec![2, 3, 6, 11]);
        assert_eq!(
            q([0, 0, 1, 1]).tangent_family(),
            Err(PackingError::DegenerateFamily)
        );
    }

    #[test]
    fn coprime_neighbors() {
        let n = q([-1, 2, 2, 3]).coprime_neighbor(6).unwrap();
        // f(x) = x² + 2: f(0)=2, f(1)=3, f(-1)=3, f(2)=6, f(-2)=6, f(3)=11
        assert_eq!((n.x, n.curvature), (3, 11));
        assert_eq!(n.quadruple, q([-1, 2, 11, 18]));

        // coprime to |ab| = 15 is guaranteed; 30 is not, since two odd
        // circles only have even common neighbours (f(x) = 2x² − 2x + 8)
        let n = q([-3, 5, 8, 8]).coprime_neighbor(15).unwrap();
        assert_eq!((n.x, n.curvature), (0, 8));
        assert_eq!(
            q([-3, 5, 8, 8]).coprime_neighbor(30),
            Err(PackingError::SearchCapExceeded {
                modulus: 30,
                cap: 62
            })
        );

        for e in [[-1, 2, 2, 3], [-3, 5, 8, 8], [-4, 8, 9, 9]] {
            assert_eq!(Quadruple::new(e).unwrap().coprime_neighbor(1).unwrap().x, 0);
        }
    }
}
