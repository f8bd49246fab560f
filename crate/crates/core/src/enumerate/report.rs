//! Missing and sporadic curvatures, obstruction checks and successive
//! differences over a completed bitmap.

use std::collections::BTreeMap;

use super::{CurvatureBitmap, EnumerateError};
use crate::classify::{AdmissibleSet, ObstructionFamily, ObstructionReport, PackingType};
use crate::packing::Quadruple;

/// Admissible curvatures up to the bound that do not occur, by residue
/// class mod 24.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MissingReport {
    pub root: Quadruple,
    pub bound: u64,
    pub packing_type: PackingType,
    pub classes: BTreeMap<u8, Vec<u64>>,
}

impl MissingReport {
    pub fn len(&self) -> usize {
        self.classes.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All listed values in increasing order.
    pub fn values(&self) -> Vec<u64> {
        let mut all: Vec<u64> = self.classes.values().flatten().copied().collect();
        all.sort_unstable();
        all
    }
}

pub fn missing_curvatures(bm: &CurvatureBitmap, t: &PackingType) -> MissingReport {
    let adm = t.residue().admissible();
    let mut classes: BTreeMap<u8, Vec<u64>> = adm.iter().map(|r| (r, Vec::new())).collect();
    for m in 1..=bm.bound() {
        let r = (m % 24) as u8;
        if adm.contains(r) && !bm.contains(m) {
            classes.get_mut(&r).expect("admissible class").push(m);
        }
    }
    MissingReport {
        root: bm.root(),
        bound: bm.bound(),
        packing_type: *t,
        classes,
    }
}

/// `{u·wᵈ ≤ bound : w ≥ 1}` restricted to admissible residues.
pub fn obstruction_members(fam: &ObstructionFamily, bound: u64, adm: AdmissibleSet) -> Vec<u64> {
    let mut out = Vec::new();
    for w in 1u64.. {
        let Some(v) = w
            .checked_pow(fam.degree)
            .and_then(|p| p.checked_mul(fam.multiplier))
        else {
            break;
        };
        if v > bound {
            break;
        }
        if adm.admits(v) {
            out.push(v);
        }
    }
    out
}

/// Missing curvatures outside every predicted obstruction family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SporadicReport {
    pub missing: MissingReport,
    pub families: Vec<ObstructionFamily>,
    pub count: usize,
    pub max: Option<u64>,
}

pub fn sporadic_set(
    mr: &MissingReport,
    or: &ObstructionReport,
) -> Result<SporadicReport, EnumerateError> {
    if mr.packing_type != or.packing_type {
        return Err(EnumerateError::Mismatch(format!(
            "missing report has type {}, obstruction report {}",
            mr.packing_type, or.packing_type
        )));
    }
    let mut missing = mr.clone();
    for list in missing.classes.values_mut() {
        list.retain(|&m| !or.obstructed(m));
    }
    let count = missing.len();
    let max = missing
        .classes
        .values()
        .filter_map(|l| l.last())
        .copied()
        .max();
    Ok(SporadicReport {
        missing,
        families: or.families.clone(),
        count,
        max,
    })
}

/// Occurrences of `24m²` and of `8n²` with `3 ∤ n`; a packing cannot
/// contain both kinds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cooccurrence {
    pub twenty_four: Vec<u64>,
    pub eight: Vec<u64>,
}

impl Cooccurrence {
    pub fn pass(&self) -> bool {
        self.twenty_four.is_empty() || self.eight.is_empty()
    }
}

pub fn cooccurrence_check(bm: &CurvatureBitmap) -> Cooccurrence {
    let hits = |k: u64, keep: &dyn Fn(u64) -> bool| -> Vec<u64> {
        (1u64..)
            .map_while(|w| {
                w.checked_mul(w)?
                    .checked_mul(k)
                    .filter(|&v| v <= bm.bound())
                    .map(|v| (w, v))
            })
            .filter(|&(w, v)| keep(w) && bm.contains(v))
            .map(|(w, _)| w)
            .collect()
    };
    Cooccurrence {
        twenty_four: hits(24, &|_| true),
        eight: hits(8, &|n| n % 3 != 0),
    }
}

/// Set values whose residue mod 24 is not admissible; the first one found.
pub fn first_inadmissible(bm: &CurvatureBitmap, adm: AdmissibleSet) -> Option<u64> {
    bm.iter().find(|&m| !adm.admits(m))
}

/// Set values belonging to a predicted obstruction family.
pub fn obstruction_hits(
    bm: &CurvatureBitmap,
    or: &ObstructionReport,
) -> Vec<(ObstructionFamily, u64)> {
    let all = AdmissibleSet::from_residues(&(0..24).collect::<Vec<_>>());
    or.families
        .iter()
        .flat_map(|f| {
            obstruction_members(f, bm.bound(), all)
                .into_iter()
                .filter(|&m| bm.contains(m))
                .map(move |m| (*f, m))
        })
        .collect()
}

pub fn successive_differences(values: &[u64]) -> Result<Vec<u64>, EnumerateError> {
    values
        .windows(2)
        .enumerate()
        .map(|(i, w)| {
            if w[1] > w[0] {
                Ok(w[1] - w[0])
            } else {
                Err(EnumerateError::NotIncreasing(i + 1))
            }
        })
        .collect()
}
