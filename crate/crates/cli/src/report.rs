//! Report structures and their JSON and CSV renderings. Reports carry the
//! tool version, root, bound and type so each file describes itself.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use apollonian::classify::{ObstructionReport, PackingType};
use apollonian::enumerate::{MissingReport, SporadicReport};
use apollonian::packing::Quadruple;
use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::TOOL_VERSION;

pub const CHI4_NOTE: &str = "chi4 is reported up to complex conjugation: \"i*\" stands for \
     i or -i, which differ only by the orientation of the packing and cannot be told apart \
     from its curvatures";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeJson {
    pub size: u8,
    pub k: u8,
    pub chi2: i32,
    pub chi4: Option<String>,
    pub label: String,
}

impl From<&PackingType> for TypeJson {
    fn from(t: &PackingType) -> Self {
        TypeJson {
            size: t.residue().size(),
            k: t.residue().k(),
            chi2: t.chi2().as_i32(),
            chi4: t.chi4().map(|c| c.label().to_string()),
            label: t.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub tool: String,
    pub version: String,
    pub input: [i64; 4],
    pub root: [i64; 4],
    #[serde(rename = "type")]
    pub packing_type: TypeJson,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub chi4_note: Option<String>,
    pub admissible: Vec<u8>,
    pub families: Vec<String>,
    pub false_classes: Vec<u8>,
    pub open_classes: Vec<u8>,
}

impl ClassifyReport {
    pub fn new(input: &Quadruple, t: &PackingType, or: &ObstructionReport) -> Self {
        ClassifyReport {
            tool: "apollo".into(),
            version: TOOL_VERSION.into(),
            input: input.entries(),
            root: input.reduce_to_root().entries(),
            packing_type: t.into(),
            chi4_note: t.chi4().map(|_| CHI4_NOTE.to_string()),
            admissible: t.residue().admissible().iter().collect(),
            families: or.families.iter().map(|f| f.to_string()).collect(),
            false_classes: or.false_classes.clone(),
            open_classes: or.open_classes.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub residue: u8,
    pub values: Vec<u64>,
}

fn classes_json(classes: &BTreeMap<u8, Vec<u64>>) -> Vec<ClassJson> {
    classes
        .iter()
        .map(|(&residue, v)| ClassJson {
            residue,
            values: v.clone(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MissingJson {
    pub tool: String,
    pub version: String,
    pub root: [i64; 4],
    pub bound: u64,
    #[serde(rename = "type")]
    pub packing_type: TypeJson,
    pub families: Vec<String>,
    pub count: usize,
    pub missing: Vec<ClassJson>,
}

impl MissingJson {
    pub fn new(mr: &MissingReport, or: &ObstructionReport) -> Self {
        MissingJson {
            tool: "apollo".into(),
            version: TOOL_VERSION.into(),
            root: mr.root.entries(),
            bound: mr.bound,
            packing_type: (&mr.packing_type).into(),
            families: or.families.iter().map(|f| f.to_string()).collect(),
            count: mr.len(),
            missing: classes_json(&mr.classes),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SporadicSection {
    pub count: usize,
    pub max: Option<u64>,
    pub classes: Vec<ClassJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SporadicJson {
    #[serde(flatten)]
    pub missing: MissingJson,
    pub sporadic: SporadicSection,
}

impl SporadicJson {
    pub fn new(mr: &MissingReport, or: &ObstructionReport, sp: &SporadicReport) -> Self {
        SporadicJson {
            missing: MissingJson::new(mr, or),
            sporadic: SporadicSection {
                count: sp.count,
                max: sp.max,
                classes: classes_json(&sp.missing.classes),
            },
        }
    }
}

pub(crate) fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

/// Metadata comment lines followed by one `# class r` section per residue,
/// one value per line.
pub(crate) fn to_csv(
    kind: &str,
    mr: &MissingReport,
    or: &ObstructionReport,
    classes: &BTreeMap<u8, Vec<u64>>,
) -> String {
    let families: String = or.families.iter().map(|f| format!(" {f}")).collect();
    let [a, b, c, d] = mr.root.entries();
    let mut s = String::new();
    writeln!(s, "# apollo {TOOL_VERSION} {kind}").unwrap();
    writeln!(s, "# root {a},{b},{c},{d}").unwrap();
    writeln!(s, "# bound {}", mr.bound).unwrap();
    writeln!(s, "# type {}", mr.packing_type).unwrap();
    writeln!(s, "# families{families}").unwrap();
    for (r, values) in classes {
        writeln!(s, "# class {r}").unwrap();
        for v in values {
            writeln!(s, "{v}").unwrap();
        }
    }
    s
}
