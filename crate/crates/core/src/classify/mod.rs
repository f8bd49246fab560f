//! Packing classification: admissible residues mod 24, the quadratic
//! invariant χ₂, the quartic invariant χ₄, and the reciprocity obstructions
//! they imply.

mod chi;
mod obstruction;
mod tables;

use std::fmt;

use thiserror::Error;

use crate::numtheory::NumError;
use crate::packing::{PackingError, Quadruple};

pub use chi::{chi2, chi2_at, chi4, chi4_raw_at, lattice_of, rho_of, select_circle, LatticeBasis};
pub use obstruction::{obstructions_for, ObstructionFamily, ObstructionReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Packing(#[from] PackingError),
    #[error(transparent)]
    Num(#[from] NumError),
    #[error("invalid type pair ({0}, {1})")]
    InvalidType(u8, u8),
    #[error("invalid extended type: {0}")]
    InvalidExtendedType(&'static str),
    #[error("curvatures {n} and {m} are not coprime")]
    NotCoprime { n: i64, m: i64 },
    #[error("circle curvature {0} must be positive here")]
    NonPositiveCircle(i64),
    #[error("tangent curvatures {n} and {m} have non-positive sum")]
    DegeneratePair { n: i64, m: i64 },
    #[error("curvature {0} is not 0, 1 or 4 mod 8, so chi4 is undefined")]
    Chi4Undefined(i64),
    #[error("no Gaussian lattice basis found for {0}")]
    NoLattice(Quadruple),
    #[error("no odd positive circle with a coprime neighbour within 8 moves of {0}")]
    NoCircle(Quadruple),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

/// The pair `(x, k)`: size of the admissible set and its least residue
/// coprime to 24.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ResidueType {
    T6_1,
    T6_5,
    T6_13,
    T6_17,
    T8_7,
    T8_11,
}

impl ResidueType {
    pub const ALL: [ResidueType; 6] = [
        ResidueType::T6_1,
        ResidueType::T6_5,
        ResidueType::T6_13,
        ResidueType::T6_17,
        ResidueType::T8_7,
        ResidueType::T8_11,
    ];

    pub fn from_pair(size: u8, k: u8) -> Result<Self, ClassifyError> {
        Self::ALL
            .into_iter()
            .find(|t| t.size() == size && t.k() == k)
            .ok_or(ClassifyError::InvalidType(size, k))
    }

    pub fn size(self) -> u8 {
        match self {
            ResidueType::T8_7 | ResidueType::T8_11 => 8,
            _ => 6,
        }
    }

    pub fn k(self) -> u8 {
        match self {
            ResidueType::T6_1 => 1,
            ResidueType::T6_5 => 5,
            ResidueType::T6_13 => 13,
            ResidueType::T6_17 => 17,
            ResidueType::T8_7 => 7,
            ResidueType::T8_11 => 11,
        }
    }

    pub fn admissible(self) -> AdmissibleSet {
        let (_, residues) = tables::ADMISSIBLE
            .iter()
            .find(|(t, _)| *t == self)
            .expect("every type has a row");
        AdmissibleSet::from_residues(residues)
    }

    /// Types carrying a χ₄ invariant.
    pub fn has_chi4(self) -> bool {
        matches!(self, ResidueType::T6_1 | ResidueType::T6_17)
    }
}

impl fmt::Display for ResidueType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.size(), self.k())
    }
}

/// A set of residues mod 24.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AdmissibleSet(u32);

impl AdmissibleSet {
    pub fn from_residues(residues: &[u8]) -> Self {
        AdmissibleSet(residues.iter().fold(0, |m, &r| m | 1 << (r % 24)))
    }

    pub fn contains(self, residue: u8) -> bool {
        residue < 24 && self.0 >> residue & 1 == 1
    }

    /// Whether the positive integer `m` lies in an admissible class.
    pub fn admits(self, m: u64) -> bool {
        self.contains((m % 24) as u8)
    }

    pub fn iter(self) -> impl Iterator<Item = u8> {
        (0..24u8).filter(move |&r| self.contains(r))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
}

/// Row of the admissible-residue table for a type pair.
pub fn admissible_residues(size: u8, k: u8) -> Result<AdmissibleSet, ClassifyError> {
    Ok(ResidueType::from_pair(size, k)?.admissible())
}

/// Type `(x, k)` of the packing containing `q`, read off the residues of
/// a single quadruple mod 3 and mod 8.
pub fn residue_type(q: &Quadruple) -> ResidueType {
    let e = q.entries();
    // the nonzero residues mod 3 are all 1 or all 2
    let m3 = e
        .iter()
        .map(|x| x.rem_euclid(3))
        .find(|&r| r != 0)
        .unwrap_or(1);
    // the two odd entries are both 1, both 5, or {3, 7} mod 8
    let odd8 = e
        .iter()
        .map(|x| x.rem_euclid(8))
        .find(|r| r % 2 == 1)
        .expect("primitive quadruples have odd entries");
    let m8: &[i64] = match odd8 {
        1 => &[0, 1, 4],
        5 => &[0, 4, 5],
        _ => &[2, 3, 6, 7],
    };
    let residues: Vec<u8> = (0..24i64)
        .filter(|r| (r % 3 == 0 || r % 3 == m3) && m8.contains(&(r % 8)))
        .map(|r| r as u8)
        .collect();
    let set = AdmissibleSet::from_residues(&residues);
    ResidueType::ALL
        .into_iter()
        .find(|t| t.admissible() == set)
        .expect("CRT combinations are exactly the six types")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i32(v: i32) -> Option<Self> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_i32())
    }
}

/// χ₄ up to complex conjugation: `±i` are merged since the orientation of
/// the packing's embedding is not recoverable from its curvatures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Chi4Class {
    One,
    MinusOne,
    Imaginary,
}

impl Chi4Class {
    pub fn from_power(p: crate::numtheory::PowerOfI) -> Self {
        match p.as_sign() {
            Some(1) => Chi4Class::One,
            Some(_) => Chi4Class::MinusOne,
            None => Chi4Class::Imaginary,
        }
    }

    /// Square of any representative, which is conjugation invariant.
    pub fn square(self) -> Sign {
        match self {
            Chi4Class::Imaginary => Sign::Minus,
            _ => Sign::Plus,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Chi4Class::One => "1",
            Chi4Class::MinusOne => "-1",
            Chi4Class::Imaginary => "i*",
        }
    }
}

impl fmt::Display for Chi4Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Extended type `(x, k, χ₂[, χ₄])`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PackingType {
    residue: ResidueType,
    chi2: Sign,
    chi4: Option<Chi4Class>,
}

impl PackingType {
    pub fn new(
        residue: ResidueType,
        chi2: Sign,
        chi4: Option<Chi4Class>,
    ) -> Result<Self, ClassifyError> {
        match chi4 {
            Some(_) if !residue.has_chi4() => Err(ClassifyError::InvalidExtendedType(
                "chi4 only exists for types (6,1) and (6,17)",
            )),
            None if residue.has_chi4() => Err(ClassifyError::InvalidExtendedType(
                "types (6,1) and (6,17) carry chi4",
            )),
            Some(c) if c.square() != chi2 => Err(ClassifyError::InvalidExtendedType(
                "chi4 squared must equal chi2",
            )),
            _ => Ok(PackingType {
                residue,
                chi2,
                chi4,
            }),
        }
    }

    pub fn residue(&self) -> ResidueType {
        self.residue
    }

    pub fn chi2(&self) -> Sign {
        self.chi2
    }

    pub fn chi4(&self) -> Option<Chi4Class> {
        self.chi4
    }

    /// Whether χ₄ is part of the displayed type; with χ₂ = −1 it is
    /// always imaginary and adds nothing.
    pub fn shows_chi4(&self) -> bool {
        self.chi2 == Sign::Plus && self.chi4.is_some()
    }

    /// The published tuple form, e.g. `[6, 17, 1, -1]` or `[6, 5, -1]`.
    pub fn tuple(&self) -> Vec<i32> {
        let mut t = vec![
            self.residue.size() as i32,
            self.residue.k() as i32,
            self.chi2.as_i32(),
        ];
        if self.shows_chi4() {
            t.push(match self.chi4 {
                Some(Chi4Class::One) => 1,
                _ => -1,
            });
        }
        t
    }
}

impl fmt::Display for PackingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.tuple().iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Residue type, χ₂ and (where defined) χ₄ of the packing containing `q`.
pub fn extended_type(q: &Quadruple) -> Result<PackingType, ClassifyError> {
    let residue = residue_type(q);
    let chi2 = chi2(q)?;
    let chi4 = chi4(q)?;
    PackingType::new(residue, chi2, chi4)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: [i64; 4]) -> Quadruple {
        Quadruple::new(e).unwrap()
    }

    #[test]
    fn residue_types() {
        assert_eq!(residue_type(&q([-3, 5, 8, 8])), ResidueType::T6_5);
        assert_eq!(residue_type(&q([-1, 2, 2, 3])), ResidueType::T8_11);
        assert_eq!(residue_type(&q([0, 0, 1, 1])), ResidueType::T6_1);
        assert_eq!(residue_type(&q([-2, 3, 6, 7])), ResidueType::T8_7);
        assert_eq!(residue_type(&q([-3, 4, 12, 13])), ResidueType::T6_13);
        assert_eq!(residue_type(&q([-4, 8, 9, 9])), ResidueType::T6_17);
    }

    #[test]
    fn admissible_rows() {
        let row = |s, k| {
            admissible_residues(s, k)
                .unwrap()
                .iter()
                .collect::<Vec<_>>()
        };
        assert_eq!(row(6, 1), vec![0, 1, 4, 9, 12, 16]);
        assert_eq!(row(8, 11), vec![2, 3, 6, 11, 14, 15, 18, 23]);
        assert_eq!(row(6, 17), vec![0, 8, 9, 12, 17, 20]);
        assert_eq!(row(6, 5), vec![0, 5, 8, 12, 20, 21]);
        assert_eq!(
            admissible_residues(6, 7),
            Err(ClassifyError::InvalidType(6, 7))
        );
    }

    #[test]
    fn packing_type_invariants() {
        use ResidueType::*;
        assert!(PackingType::new(T6_5, Sign::Plus, Some(Chi4Class::One)).is_err());
        assert!(PackingType::new(T6_1, Sign::Plus, None).is_err());
        assert!(PackingType::new(T6_1, Sign::Plus, Some(Chi4Class::Imaginary)).is_err());
        assert!(PackingType::new(T6_1, Sign::Minus, Some(Chi4Class::One)).is_err());
        let t = PackingType::new(T6_17, Sign::Plus, Some(Chi4Class::MinusOne)).unwrap();
        assert_eq!(t.to_string(), "(6, 17, 1, -1)");
        let t = PackingType::new(T6_1, Sign::Minus, Some(Chi4Class::Imaginary)).unwrap();
        assert_eq!(t.to_string(), "(6, 1, -1)");
        let t = PackingType::new(T8_7, Sign::Minus, None).unwrap();
        assert_eq!(t.tuple(), vec![8, 7, -1]);
    }
}
