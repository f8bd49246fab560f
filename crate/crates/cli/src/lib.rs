//! Library side of the `apollo` command: argument parsing helpers, the
//! commands themselves and their report formats.

mod commands;
mod report;

use std::path::Path;

use apollonian::packing::Quadruple;
use thiserror::Error;

pub use commands::{
    cmd_classify, cmd_diffplot, cmd_enumerate, cmd_missing, cmd_sporadic, cmd_verify,
    load_or_enumerate, Check, EnumerateSummary, Verification,
};
pub use report::{ClassifyReport, Format, MissingJson, SporadicJson, TypeJson, CHI4_NOTE};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Default upper limit on `--bound`: one bit per integer, so 10⁹ needs
/// 125 MB.
pub const DEFAULT_MAX_BOUND: u64 = 1_000_000_000;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Verification(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Invalid(_) => 2,
            CliError::Verification(_) => 3,
            CliError::Io(_) => 4,
        }
    }

    pub(crate) fn io(path: &Path, e: impl std::fmt::Display) -> Self {
        CliError::Io(format!("{}: {e}", path.display()))
    }
}

/// Parses `"a,b,c,d"` and validates the quadruple.
pub fn parse_quad(s: &str) -> Result<Quadruple, CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(CliError::Usage(format!(
            "expected four comma-separated integers, got {s:?}"
        )));
    }
    let mut e = [0i64; 4];
    for (x, p) in e.iter_mut().zip(&parts) {
        *x = p
            .parse()
            .map_err(|_| CliError::Usage(format!("not an integer: {p:?}")))?;
    }
    Quadruple::new(e).map_err(|err| CliError::Invalid(format!("invalid quadruple {s}: {err}")))
}

/// Parses a positive integer, allowing `1e6` or `2.5e7` notation as long as
/// the value is exact.
pub fn parse_bound(s: &str) -> Result<u64, CliError> {
    let bad = || CliError::Usage(format!("invalid bound {s:?}"));
    let s = s.trim().replace('_', "");
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<u32>().map_err(|_| bad())?),
        None => (&s[..], 0),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int.is_empty() && frac.is_empty()
        || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let frac = frac.trim_end_matches('0');
    let digits: u128 = format!("{int}{frac}").parse().map_err(|_| bad())?;
    let scale = frac.len() as u32;
    if exp < scale {
        return Err(bad());
    }
    let value = 10u128
        .checked_pow(exp - scale)
        .and_then(|p| digits.checked_mul(p))
        .and_then(|v| u64::try_from(v).ok())
        .ok_or_else(bad)?;
    if value == 0 {
        return Err(CliError::Usage("bound must be at least 1".into()));
    }
    Ok(value)
}

/// The ceiling on `--bound`, overridable through `APOLLO_MAX_BOUND`.
pub fn bound_ceiling() -> Result<u64, CliError> {
    match std::env::var("APOLLO_MAX_BOUND") {
        Ok(v) => parse_bound(&v)
            .map_err(|_| CliError::Usage(format!("APOLLO_MAX_BOUND is not a valid bound: {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_BOUND),
    }
}

pub fn check_bound(bound: u64) -> Result<u64, CliError> {
    let ceiling = bound_ceiling()?;
    if bound > ceiling {
        return Err(CliError::Usage(format!(
            "bound {bound} exceeds the ceiling {ceiling} (one bit per integer; \
             set APOLLO_MAX_BOUND to raise it)"
        )));
    }
    Ok(bound)
}
