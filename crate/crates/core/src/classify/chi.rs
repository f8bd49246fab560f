//! The invariants χ₂ and χ₄, evaluated at a single circle.

use std::collections::VecDeque;

use super::{residue_type, Chi4Class, ClassifyError, Sign};
use crate::numtheory::{
    gcd, kronecker, odd_part_and_v2, primary_associate, quartic_symbol, sum_two_squares_all,
    GaussianInt, PowerOfI,
};
use crate::packing::{PackingError, Quadruple};

/// Moves explored when looking for a usable circle.
const SELECT_DEPTH: usize = 8;

/// `ρ = n + m` for tangent circles of coprime curvatures `n` and `m`: a
/// positive value properly represented by the form of the first circle and
/// coprime to `n`.
pub fn rho_of(n: i64, m: i64) -> Result<i64, ClassifyError> {
    if gcd(n, m) != 1 {
        return Err(ClassifyError::NotCoprime { n, m });
    }
    let rho = n.checked_add(m).ok_or(PackingError::Overflow)?;
    if n == 0 || rho <= 0 {
        return Err(ClassifyError::DegeneratePair { n, m });
    }
    Ok(rho)
}

/// A quadruple of the same packing whose first entry `n` is positive and odd
/// and whose second entry is coprime to `n`.
///
/// Tries the entries of `q` in order, then quadruples reached by up to eight
/// moves in breadth-first order `S₁..S₄`.
pub fn select_circle(q: &Quadruple) -> Result<Quadruple, ClassifyError> {
    let mut queue = VecDeque::from([(*q, 0usize)]);
    while let Some((cur, depth)) = queue.pop_front() {
        for i in 0..4 {
            let n = cur.get(i);
            if n <= 0 || n % 2 == 0 {
                continue;
            }
            let rotated = cur.swap(0, i);
            if let Ok(nb) = rotated.coprime_neighbor(n as u64) {
                let [a, b, m, d] = nb.quadruple.entries();
                return Ok(Quadruple::new([a, m, b, d])?);
            }
        }
        if depth < SELECT_DEPTH {
            for i in 0..4 {
                if let Ok(next) = cur.apply_move(i) {
                    queue.push_back((next, depth + 1));
                }
            }
        }
    }
    Err(ClassifyError::NoCircle(*q))
}

/// χ₂ evaluated at the first circle of `q`, using the second as the
/// coprime tangent neighbour.
pub fn chi2_at(q: &Quadruple) -> Result<Sign, ClassifyError> {
    let (n, m) = (q.get(0), q.get(1));
    if n <= 0 {
        return Err(ClassifyError::NonPositiveCircle(n));
    }
    let rho = rho_of(n, m)?;
    let v = match n % 4 {
        0 | 1 => kronecker(rho, n),
        2 => kronecker(-rho, n / 2),
        _ => kronecker(rho.checked_mul(2).ok_or(PackingError::Overflow)?, n),
    };
    Sign::from_i32(v).ok_or_else(|| ClassifyError::Invariant(format!("chi2 = {v} at {q}")))
}

/// χ₂ of the packing containing `q`.
pub fn chi2(q: &Quadruple) -> Result<Sign, ClassifyError> {
    chi2_at(&select_circle(q)?)
}

/// Basis `β, δ` of a sublattice of `Z[i]` whose norm form
/// `N(xβ + yδ)` is the form attached to the first circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeBasis {
    pub beta: GaussianInt,
    pub delta: GaussianInt,
    pub n: i64,
}

impl LatticeBasis {
    /// `(N(β), 2·Re(βδ̄), N(δ))`.
    pub fn gram(&self) -> (i128, i128, i128) {
        let (b, d) = (self.beta, self.delta);
        let (br, bi, dr, di) = (b.re as i128, b.im as i128, d.re as i128, d.im as i128);
        (
            br * br + bi * bi,
            2 * (br * dr + bi * di),
            dr * dr + di * di,
        )
    }

    /// `|Im(β̄δ)|`.
    pub fn covolume(&self) -> i128 {
        let (b, d) = (self.beta, self.delta);
        (b.re as i128 * d.im as i128 - b.im as i128 * d.re as i128).abs()
    }

    pub fn element(&self, x: i64, y: i64) -> Option<GaussianInt> {
        let xb = GaussianInt::from_int(x).checked_mul(self.beta)?;
        let yd = GaussianInt::from_int(y).checked_mul(self.delta)?;
        xb.checked_add(yd)
    }
}

/// Lattice basis for the first circle of `q`, which must have positive
/// curvature.
pub fn lattice_of(q: &Quadruple) -> Result<LatticeBasis, ClassifyError> {
    let n = q.get(0);
    if n <= 0 {
        return Err(ClassifyError::NonPositiveCircle(n));
    }
    let f = q.form_of()?;
    if f.b % 2 != 0 || f.a <= 0 {
        return Err(ClassifyError::NoLattice(*q));
    }
    let half_b = f.b / 2;
    for s in sum_two_squares_all(f.a as u64)? {
        for k in 0..4 {
            for conj in [false, true] {
                let beta = if conj { s.conj() } else { s }.mul_i_pow(k);
                for eps in [1i64, -1] {
                    let target = GaussianInt::new(half_b, eps * n);
                    let Some(delta_bar) = target.exact_div(beta) else {
                        continue;
                    };
                    let basis = LatticeBasis {
                        beta,
                        delta: delta_bar.conj(),
                        n,
                    };
                    let (ga, gb, gc) = basis.gram();
                    if (ga, gb, gc) != (f.a as i128, f.b as i128, f.c as i128)
                        || basis.covolume() != n as i128
                    {
                        return Err(ClassifyError::Invariant(format!(
                            "lattice for {q} has Gram ({ga}, {gb}, {gc})"
                        )));
                    }
                    return Ok(basis);
                }
            }
        }
    }
    Err(ClassifyError::NoLattice(*q))
}

/// An element of the lattice coprime to `n`, found among small
/// coefficient pairs.
fn coprime_element(basis: &LatticeBasis, q: &Quadruple) -> Result<GaussianInt, ClassifyError> {
    let n = basis.n as u128;
    for s in 1i64..=256 {
        for x in 0..=s {
            let y = s - x;
            for (x, y) in [(x, y), (x, -y)] {
                let Some(g) = basis.element(x, y) else {
                    continue;
                };
                if gcd((g.norm() % n) as i64, basis.n) == 1 {
                    return Ok(g);
                }
            }
        }
    }
    Err(ClassifyError::Invariant(format!(
        "no lattice element of {q} coprime to {n}"
    )))
}

/// The raw fourth root of unity χ₄ assigns to the first circle of `q`,
/// whose curvature must be positive and `0`, `1` or `4` mod 8.
pub fn chi4_raw_at(q: &Quadruple) -> Result<PowerOfI, ClassifyError> {
    let n = q.get(0);
    if n <= 0 {
        return Err(ClassifyError::NonPositiveCircle(n));
    }
    let r = n % 8;
    if !matches!(r, 0 | 1 | 4) {
        return Err(ClassifyError::Chi4Undefined(n));
    }
    let basis = lattice_of(q)?;
    let mut beta = coprime_element(&basis, q)?;
    if r == 1 {
        return Ok(quartic_symbol(beta, GaussianInt::from_int(n))?);
    }
    beta = primary_associate(beta)?.0;
    let (e, odd) = odd_part_and_v2(n)?;
    let symbol = quartic_symbol(beta, GaussianInt::from_int(odd))?;
    if r == 4 {
        return Ok(PowerOfI::from_exponent(if kronecker(-1, odd) == 1 { 0 } else { 2 }) * symbol);
    }
    if beta.im.rem_euclid(4) != 0 {
        return Err(ClassifyError::Invariant(format!(
            "primary {beta} at curvature {n} has imaginary part not divisible by 4"
        )));
    }
    let flip = (beta.im / 4).rem_euclid(2) * e as i64 % 2 == 1;
    Ok(PowerOfI::from_exponent(if flip { 2 } else { 0 }) * symbol)
}

/// χ₄ of the packing containing `q`, as a conjugation class; `None` unless
/// the packing has type (6,1) or (6,17).
pub fn chi4(q: &Quadruple) -> Result<Option<Chi4Class>, ClassifyError> {
    if !residue_type(q).has_chi4() {
        return Ok(None);
    }
    let raw = chi4_raw_at(&select_circle(q)?)?;
    Ok(Some(Chi4Class::from_power(raw)))
}
