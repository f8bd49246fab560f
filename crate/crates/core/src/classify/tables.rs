//! Literal classification tables. Each is re-derived in the tests below
//! from first principles as a guard against transcription errors.

use super::{Chi4Class, ResidueType, Sign};

/// Residues mod 24 attained by the curvatures of a packing of each type.
pub(super) const ADMISSIBLE: [(ResidueType, &[u8]); 6] = [
    (ResidueType::T6_1, &[0, 1, 4, 9, 12, 16]),
    (ResidueType::T6_5, &[0, 5, 8, 12, 20, 21]),
    (ResidueType::T6_13, &[0, 4, 12, 13, 16, 21]),
    (ResidueType::T6_17, &[0, 8, 9, 12, 17, 20]),
    (ResidueType::T8_7, &[3, 6, 7, 10, 15, 18, 19, 22]),
    (ResidueType::T8_11, &[2, 3, 6, 11, 14, 15, 18, 23]),
];

/// `(2 | n)` and `(3 | n)` for `n` in each invertible residue class
/// mod 24 occurring in packings.
#[cfg(test)]
pub(super) const SMALL_SYMBOLS: [(u8, i32, i32); 8] = [
    (1, 1, 1),
    (5, -1, -1),
    (13, -1, 1),
    (17, 1, -1),
    (7, 1, -1),
    (11, -1, 1),
    (19, -1, -1),
    (23, 1, 1),
];

pub(super) struct ObstructionRow {
    pub residue: ResidueType,
    pub chi2: Sign,
    /// Only set for the rows that distinguish χ₄.
    pub chi4: Option<Chi4Class>,
    pub quadratic: &'static [u64],
    pub quartic: &'static [u64],
    pub false_classes: &'static [u8],
    pub open_classes: &'static [u8],
}

const fn row(
    residue: ResidueType,
    chi2: Sign,
    chi4: Option<Chi4Class>,
    quadratic: &'static [u64],
    quartic: &'static [u64],
    false_classes: &'static [u8],
    open_classes: &'static [u8],
) -> ObstructionRow {
    ObstructionRow {
        residue,
        chi2,
        chi4,
        quadratic,
        quartic,
        false_classes,
        open_classes,
    }
}

use Chi4Class::{MinusOne, One};
use ResidueType::*;
use Sign::{Minus, Plus};

/// Quadratic and quartic obstructions by extended type, with the residue
/// classes where finitely-many-missing fails or remains open.
pub(super) const OBSTRUCTIONS: [ObstructionRow; 14] = [
    row(T6_1, Plus, Some(One), &[], &[], &[], &[0, 1, 4, 9, 12, 16]),
    row(
        T6_1,
        Plus,
        Some(MinusOne),
        &[],
        &[1, 4, 9, 36],
        &[0, 1, 4, 9, 12, 16],
        &[],
    ),
    row(
        T6_1,
        Minus,
        None,
        &[1, 2, 3, 6],
        &[],
        &[0, 1, 4, 9, 12, 16],
        &[],
    ),
    row(T6_5, Plus, None, &[2, 3], &[], &[0, 8, 12], &[5, 20, 21]),
    row(T6_5, Minus, None, &[1, 6], &[], &[0, 12], &[5, 8, 20, 21]),
    row(T6_13, Plus, None, &[2, 6], &[], &[0], &[4, 12, 13, 16, 21]),
    row(T6_13, Minus, None, &[1, 3], &[], &[0, 4, 12, 16], &[13, 21]),
    row(
        T6_17,
        Plus,
        Some(One),
        &[3, 6],
        &[9, 36],
        &[0, 9, 12],
        &[8, 17, 20],
    ),
    row(
        T6_17,
        Plus,
        Some(MinusOne),
        &[3, 6],
        &[1, 4],
        &[0, 9, 12],
        &[8, 17, 20],
    ),
    row(T6_17, Minus, None, &[1, 2], &[], &[0, 8, 9, 12], &[17, 20]),
    row(
        T8_7,
        Plus,
        None,
        &[3, 6],
        &[],
        &[3, 6],
        &[7, 10, 15, 18, 19, 22],
    ),
    row(
        T8_7,
        Minus,
        None,
        &[2],
        &[],
        &[18],
        &[3, 6, 7, 10, 15, 19, 22],
    ),
    row(
        T8_11,
        Plus,
        None,
        &[],
        &[],
        &[],
        &[2, 3, 6, 11, 14, 15, 18, 23],
    ),
    row(
        T8_11,
        Minus,
        None,
        &[2, 3, 6],
        &[],
        &[2, 3, 6, 18],
        &[11, 14, 15, 23],
    ),
];
