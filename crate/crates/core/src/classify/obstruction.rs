//! Reciprocity obstructions predicted by the extended type.

use std::fmt;

use super::tables::OBSTRUCTIONS;
use super::PackingType;

/// The set `{u·wᵈ : w ≥ 1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObstructionFamily {
    pub degree: u32,
    pub multiplier: u64,
}

impl ObstructionFamily {
    pub fn quadratic(multiplier: u64) -> Self {
        ObstructionFamily {
            degree: 2,
            multiplier,
        }
    }

    pub fn quartic(multiplier: u64) -> Self {
        ObstructionFamily {
            degree: 4,
            multiplier,
        }
    }

    pub fn contains(&self, m: u64) -> bool {
        if m == 0 || !m.is_multiple_of(self.multiplier) {
            return false;
        }
        let w = m / self.multiplier;
        let r = integer_root(w, self.degree);
        r.checked_pow(self.degree) == Some(w)
    }
}

fn integer_root(w: u64, d: u32) -> u64 {
    let mut r = (w as f64).powf(1.0 / d as f64).round() as u64;
    while r.checked_pow(d).is_none_or(|p| p > w) {
        r -= 1;
    }
    while (r + 1).checked_pow(d).is_some_and(|p| p <= w) {
        r += 1;
    }
    r
}

impl fmt::Display for ObstructionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplier != 1 {
            write!(f, "{}", self.multiplier)?;
        }
        write!(f, "n^{}", self.degree)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub packing_type: PackingType,
    pub families: Vec<ObstructionFamily>,
    /// Residues mod 24 where some admissible curvatures are provably missing
    /// infinitely often.
    pub false_classes: Vec<u8>,
    /// Residues where no obstruction is known.
    pub open_classes: Vec<u8>,
}

impl ObstructionReport {
    /// Whether `m` lies in a predicted obstruction family.
    pub fn obstructed(&self, m: u64) -> bool {
        self.families.iter().any(|f| f.contains(m))
    }
}

pub fn obstructions_for(t: &PackingType) -> ObstructionReport {
    let row = OBSTRUCTIONS
        .iter()
        .find(|r| {
            r.residue == t.residue()
                && r.chi2 == t.chi2()
                && (r.chi4.is_none() || r.chi4 == t.chi4())
        })
        .expect("every valid extended type has a row");
    let families = row
        .quadratic
        .iter()
        .map(|&u| ObstructionFamily::quadratic(u))
        .chain(row.quartic.iter().map(|&u| ObstructionFamily::quartic(u)))
        .collect();
    ObstructionReport {
        packing_type: *t,
        families,
        false_classes: row.false_classes.to_vec(),
        open_classes: row.open_classes.to_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{Chi4Class, ResidueType, Sign};

    fn report(r: ResidueType, chi2: Sign, chi4: Option<Chi4Class>) -> ObstructionReport {
        obstructions_for(&PackingType::new(r, chi2, chi4).unwrap())
    }

    fn names(rep: &ObstructionReport) -> Vec<String> {
        rep.families.iter().map(|f| f.to_string()).collect()
    }

    #[test]
    fn family_membership() {
        let sq = ObstructionFamily::quadratic(1);
        assert!(sq.contains(1) && sq.contains(144) && !sq.contains(2) && !sq.contains(0));
        let six = ObstructionFamily::quadratic(6);
        assert!(six.contains(6) && six.contains(24) && six.contains(54) && !six.contains(12));
        let four = ObstructionFamily::quartic(4);
        assert!(four.contains(4) && four.contains(64) && !four.contains(16));
        assert!(sq.contains(4_294_967_295u64.pow(2)));
        assert!(!sq.contains(u64::MAX));
    }

    #[test]
    fn rows() {
        use ResidueType::*;
        let r = report(T6_5, Sign::Minus, None);
        assert_eq!(names(&r), ["n^2", "6n^2"]);
        assert_eq!(r.false_classes, [0, 12]);
        assert_eq!(r.open_classes, [5, 8, 20, 21]);

        let r = report(T6_1, Sign::Minus, Some(Chi4Class::Imaginary));
        assert_eq!(names(&r), ["n^2", "2n^2", "3n^2", "6n^2"]);
        assert!(r.open_classes.is_empty());

        let r = report(T8_11, Sign::Plus, None);
        assert!(r.families.is_empty());
        assert_eq!(r.open_classes.len(), 8);

        let r = report(T6_17, Sign::Plus, Some(Chi4Class::MinusOne));
        assert_eq!(names(&r), ["3n^2", "6n^2", "n^4", "4n^4"]);
        assert_eq!(r.false_classes, [0, 9, 12]);
        assert!(r.obstructed(16) && r.obstructed(81) && !r.obstructed(8));
    }

    #[test]
    fn classes_partition_the_admissible_set() {
        let mut seen = 0;
        for r in ResidueType::ALL {
            for chi2 in [Sign::Plus, Sign::Minus] {
                let chi4s: Vec<Option<Chi4Class>> = match (r.has_chi4(), chi2) {
                    (false, _) => vec![None],
                    (true, Sign::Plus) => vec![Some(Chi4Class::One), Some(Chi4Class::MinusOne)],
                    (true, Sign::Minus) => vec![Some(Chi4Class::Imaginary)],
                };
                for chi4 in chi4s {
                    let rep = report(r, chi2, chi4);
                    let mut all: Vec<u8> = rep
                        .false_classes
                        .iter()
                        .chain(&rep.open_classes)
                        .copied()
                        .collect();
                    all.sort();
                    assert_eq!(all, r.admissible().iter().collect::<Vec<_>>());
                    seen += 1;
                }
            }
        }
        assert_eq!(seen, 14);
    }
}
