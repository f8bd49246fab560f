use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::path::Path;
use std::time::{Duration, Instant};

use apollonian::classify::{
    extended_type, obstructions_for, ClassifyError, ObstructionReport, PackingType,
};
use apollonian::enumerate::{
    cooccurrence_check, enumerate_with, first_inadmissible, missing_curvatures, obstruction_hits,
    read_bitmap, sporadic_set, successive_differences, write_bitmap, CurvatureBitmap,
    EnumerateError, EnumerateOptions,
};
use apollonian::packing::Quadruple;
use serde_json::Value;

use crate::report::{to_csv, to_json, ClassifyReport, Format, MissingJson, SporadicJson};
use crate::{check_bound, CliError};

/// Largest bound used to sample quadruples for the tangency check.
const WITNESS_BOUND: u64 = 100_000;

fn classify_err(e: ClassifyError) -> CliError {
    CliError::Invalid(format!("classification failed: {e}"))
}

fn enumerate_err(path: Option<&Path>, e: EnumerateError) -> CliError {
    match (e, path) {
        (EnumerateError::BoundOutOfRange(b), _) => {
            CliError::Usage(format!("bound {b} outside the enumerator's range 1..=2^40"))
        }
        (EnumerateError::Mismatch(m), _) => CliError::Invalid(m),
        (e, Some(p)) => CliError::io(p, e),
        (e, None) => CliError::Io(e.to_string()),
    }
}

fn type_and_obstructions(q: &Quadruple) -> Result<(PackingType, ObstructionReport), CliError> {
    let t = extended_type(q).map_err(classify_err)?;
    let or = obstructions_for(&t);
    Ok((t, or))
}

pub fn cmd_classify(q: &Quadruple) -> Result<ClassifyReport, CliError> {
    let (t, or) = type_and_obstructions(q)?;
    Ok(ClassifyReport::new(q, &t, &or))
}

#[derive(Clone, Debug)]
pub struct EnumerateSummary {
    pub root: Quadruple,
    pub bound: u64,
    pub nodes: u64,
    pub set_bits: u64,
    pub elapsed: Duration,
}

pub fn cmd_enumerate(
    q: &Quadruple,
    bound: u64,
    threads: usize,
    out: &Path,
) -> Result<EnumerateSummary, CliError> {
    check_bound(bound)?;
    let start = Instant::now();
    let opts = EnumerateOptions {
        threads,
        ..Default::default()
    };
    let run = enumerate_with(q, bound, &opts).map_err(|e| enumerate_err(None, e))?;
    let elapsed = start.elapsed();
    let file = File::create(out).map_err(|e| CliError::io(out, e))?;
    write_bitmap(&run.bitmap, BufWriter::new(file)).map_err(|e| enumerate_err(Some(out), e))?;
    Ok(EnumerateSummary {
        root: run.bitmap.root(),
        bound,
        nodes: run.nodes,
        set_bits: run.bitmap.len(),
        elapsed,
    })
}

/// Reads `bitmap` if given, checking it belongs to `q` (and to `bound`, if
/// that is given too); otherwise enumerates up to `bound`.
pub fn load_or_enumerate(
    q: &Quadruple,
    bound: Option<u64>,
    bitmap: Option<&Path>,
    threads: usize,
) -> Result<CurvatureBitmap, CliError> {
    let Some(path) = bitmap else {
        let bound = bound
            .ok_or_else(|| CliError::Usage("either --bound or --bitmap is required".into()))?;
        check_bound(bound)?;
        let opts = EnumerateOptions {
            threads,
            ..Default::default()
        };
        return Ok(enumerate_with(q, bound, &opts)
            .map_err(|e| enumerate_err(None, e))?
            .bitmap);
    };
    let file = File::open(path).map_err(|e| CliError::io(path, e))?;
    let bm = read_bitmap(BufReader::new(file)).map_err(|e| enumerate_err(Some(path), e))?;
    if bm.root() != q.reduce_to_root() {
        return Err(CliError::Invalid(format!(
            "{} holds the packing with root {}, not {}",
            path.display(),
            bm.root(),
            q.reduce_to_root()
        )));
    }
    if let Some(b) = bound {
        if b != bm.bound() {
            return Err(CliError::Invalid(format!(
                "{} was enumerated to {}, not {b}",
                path.display(),
                bm.bound()
            )));
        }
    }
    Ok(bm)
}

pub fn cmd_missing(
    q: &Quadruple,
    bm: &CurvatureBitmap,
    format: Format,
) -> Result<String, CliError> {
    let (t, or) = type_and_obstructions(q)?;
    let mr = missing_curvatures(bm, &t);
    Ok(match format {
        Format::Json => to_json(&MissingJson::new(&mr, &or)),
        Format::Csv => to_csv("missing", &mr, &or, &mr.classes),
    })
}

pub fn cmd_sporadic(
    q: &Quadruple,
    bm: &CurvatureBitmap,
    format: Format,
) -> Result<String, CliError> {
    let (t, or) = type_and_obstructions(q)?;
    let mr = missing_curvatures(bm, &t);
    let sp = sporadic_set(&mr, &or).map_err(|e| enumerate_err(None, e))?;
    Ok(match format {
        Format::Json => to_json(&SporadicJson::new(&mr, &or, &sp)),
        Format::Csv => to_csv("sporadic", &mr, &or, &sp.missing.classes),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub checks: Vec<Check>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn render(&self) -> String {
        self.checks
            .iter()
            .map(|c| {
                format!(
                    "{} {}: {}\n",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                )
            })
            .collect()
    }
}

/// Obstruction absence, admissibility of every recorded value, the mod-8
/// tangency condition on sampled quadruples and the co-occurrence test.
pub fn cmd_verify(q: &Quadruple, bm: &CurvatureBitmap) -> Result<Verification, CliError> {
    let (t, or) = type_and_obstructions(q)?;
    let mut checks = Vec::new();
    let n = bm.bound();

    let families: Vec<String> = or.families.iter().map(|f| f.to_string()).collect();
    let hits = obstruction_hits(bm, &or);
    checks.push(Check {
        name: if families.is_empty() {
            "obstructions (none predicted)".into()
        } else {
            format!("obstructions {}", families.join(", "))
        },
        passed: hits.is_empty(),
        detail: match hits.first() {
            None => format!("no member occurs up to {n}"),
            Some((f, m)) => format!("curvature {m} occurs but lies in {f}"),
        },
    });

    let adm = t.residue().admissible();
    let bad = first_inadmissible(bm, adm);
    checks.push(Check {
        name: "admissibility".into(),
        passed: bad.is_none(),
        detail: match bad {
            None => format!(
                "all {} values lie in residues {:?}",
                bm.len(),
                adm.iter().collect::<Vec<_>>()
            ),
            Some(m) => format!("curvature {m} has residue {} mod 24", m % 24),
        },
    });

    let opts = EnumerateOptions {
        threads: 1,
        witness_stride: 7,
        witness_limit: 10_000,
    };
    let sample =
        enumerate_with(q, n.min(WITNESS_BOUND), &opts).map_err(|e| enumerate_err(None, e))?;
    let bad_pair = sample.witnesses.iter().find_map(|w| {
        let e = w.entries();
        (0..4)
            .flat_map(|i| (i + 1..4).map(move |j| (e[i], e[j])))
            .find(|(a, b)| matches!((a + b).rem_euclid(8), 3 | 6 | 7))
            .map(|p| (*w, p))
    });
    checks.push(Check {
        name: "tangency mod 8".into(),
        passed: bad_pair.is_none(),
        detail: match bad_pair {
            None => format!(
                "{} sampled quadruples, no tangent pair sums to 3, 6 or 7 mod 8",
                sample.witnesses.len()
            ),
            Some((w, (a, b))) => format!("{a} + {b} in {w}"),
        },
    });

    let c = cooccurrence_check(bm);
    checks.push(Check {
        name: "co-occurrence".into(),
        passed: c.pass(),
        detail: if c.pass() {
            format!(
                "24m^2 hits {}, 8n^2 hits {}",
                c.twenty_four.len(),
                c.eight.len()
            )
        } else {
            format!(
                "both 24*{}^2 and 8*{}^2 occur",
                c.twenty_four[0], c.eight[0]
            )
        },
    });
    Ok(Verification { checks })
}

/// `index,difference` rows for the sorted sporadic values of a report
/// written by `sporadic` (or `missing`), in either format.
pub fn cmd_diffplot(input: &str) -> Result<String, CliError> {
    let mut values = if input.trim_start().starts_with('{') {
        json_values(input)?
    } else {
        csv_values(input)?
    };
    values.sort_unstable();
    let diffs = successive_differences(&values)
        .map_err(|e| CliError::Usage(format!("malformed report: {e}")))?;
    let mut out = String::from("index,difference\n");
    for (i, d) in diffs.iter().enumerate() {
        out.push_str(&format!("{},{d}\n", i + 1));
    }
    Ok(out)
}

fn json_values(input: &str) -> Result<Vec<u64>, CliError> {
    let bad = |m: &str| CliError::Usage(format!("malformed report: {m}"));
    let v: Value = serde_json::from_str(input).map_err(|e| bad(&e.to_string()))?;
    let classes = v
        .pointer("/sporadic/classes")
        .or_else(|| v.get("missing"))
        .and_then(Value::as_array)
        .ok_or_else(|| bad("no sporadic or missing classes"))?;
    let mut out = Vec::new();
    for class in classes {
        let values = class
            .get("values")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("class without values"))?;
        for x in values {
            out.push(x.as_u64().ok_or_else(|| bad("non-integer value"))?);
        }
    }
    Ok(out)
}

fn csv_values(input: &str) -> Result<Vec<u64>, CliError> {
    input
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            l.parse()
                .map_err(|_| CliError::Usage(format!("malformed report line {l:?}")))
        })
        .collect()
}
