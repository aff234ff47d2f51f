use serde_json::Value;
use zetalab_core::lattice::{GramMatrix, UpperHalfPoint, DEFAULT_CAP};
use zetalab_core::spectral::ContourConfig;
use zetalab_core::Complex;

use crate::args::{Cli, Format};
use crate::error::CliError;

pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const DEFAULT_SEED: u64 = 20_240_601;

/// Settings shared by every subcommand.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    /// evaluation tolerance handed to the series evaluators
    pub tolerance: f64,
    /// pass threshold given explicitly on the command line
    pub threshold: Option<f64>,
    pub enum_cap: usize,
    pub contour: ContourConfig,
    pub output_format: Option<Format>,
    pub seed: u64,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        if let Some(t) = cli.tol {
            if !(t > 1e-14 && t < 1e-2) {
                return Err(CliError::usage("--tol must lie in (1e-14, 1e-2)"));
            }
        }
        let enum_cap = cli.enum_cap.unwrap_or(DEFAULT_CAP);
        if enum_cap == 0 {
            return Err(CliError::usage("--enum-cap must be positive"));
        }
        let defaults = ContourConfig::default();
        let contour = ContourConfig {
            height: cli.height.unwrap_or(defaults.height),
            nodes_per_unit: cli.nodes.unwrap_or(defaults.nodes_per_unit),
        };
        if contour.nodes_per_unit == 0 || !(contour.height > 0.0) {
            return Err(CliError::usage("--T and --nodes must be positive"));
        }
        Ok(Self {
            tolerance: cli.tol.unwrap_or(DEFAULT_TOLERANCE),
            threshold: cli.tol,
            enum_cap,
            contour,
            output_format: cli.format,
            seed: cli.seed.unwrap_or(DEFAULT_SEED),
        })
    }

    /// The explicit --tol, or the command's own acceptance threshold.
    pub fn threshold_or(&self, default: f64) -> f64 {
        self.threshold.unwrap_or(default)
    }

    pub fn format_or(&self, default: Format) -> Format {
        self.output_format.unwrap_or(default)
    }
}

/// Parses "re,im" (or a bare real number).
pub fn parse_complex(flag: &str, text: &str) -> Result<Complex, CliError> {
    let bad = || CliError::usage(format!("--{flag} expects \"re,im\", got {text:?}"));
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let num = |p: &str| p.parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(bad);
    match parts.as_slice() {
        [re] => Ok(Complex::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex::new(num(re)?, num(im)?)),
        _ => Err(bad()),
    }
}

pub fn parse_point(text: &str) -> Result<UpperHalfPoint, CliError> {
    let c = parse_complex("z", text)?;
    UpperHalfPoint::from_complex(c).map_err(|_| CliError::usage("--z must have positive imaginary part"))
}

fn as_f64(v: &Value) -> Result<f64, CliError> {
    v.as_f64()
        .ok_or_else(|| CliError::usage("Gram entries must be numbers"))
}

fn flatten(v: &Value) -> Result<Vec<f64>, CliError> {
    let arr = v
        .as_array()
        .ok_or_else(|| CliError::usage("Gram matrix must be a JSON array"))?;
    if arr.iter().all(Value::is_array) {
        let mut out = Vec::new();
        for row in arr {
            for x in row.as_array().into_iter().flatten() {
                out.push(as_f64(x)?);
            }
        }
        Ok(out)
    } else {
        arr.iter().map(as_f64).collect()
    }
}

/// Reads a Gram matrix given as `identity`, JSON text or `@file`.
///
/// Accepted JSON shapes: a row-major array (flat or nested), or an object
/// with the entries under "Q" or "entries" and the dimension under "r" or
/// "dim".
pub fn parse_gram(spec: &str, r: Option<usize>) -> Result<GramMatrix, CliError> {
    if spec.trim() == "identity" {
        let r = r.ok_or_else(|| CliError::usage("--Q identity needs --r"))?;
        if !(1..=8).contains(&r) {
            return Err(CliError::usage("--r must lie in 1..=8"));
        }
        return Ok(GramMatrix::identity(r));
    }
    let text = match spec.strip_prefix('@') {
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| CliError::usage(format!("cannot read Gram file {path}: {e}")))?
        }
        None => spec.to_string(),
    };
    let v: Value = serde_json::from_str(&text).map_err(|e| CliError::usage(format!("--Q is not valid JSON: {e}")))?;
    let (entries, dim) = match &v {
        Value::Object(map) => {
            let e = map
                .get("Q")
                .or_else(|| map.get("entries"))
                .ok_or_else(|| CliError::usage("Gram object needs \"Q\" or \"entries\""))?;
            let d = map.get("r").or_else(|| map.get("dim")).and_then(Value::as_u64);
            (flatten(e)?, d.map(|d| d as usize))
        }
        _ => (flatten(&v)?, None),
    };
    let dim = match dim.or(r) {
        Some(d) => d,
        None => {
            let d = (entries.len() as f64).sqrt().round() as usize;
            if d * d != entries.len() {
                return Err(CliError::usage("Gram entries do not form a square matrix"));
            }
            d
        }
    };
    GramMatrix::new(dim, entries).map_err(|e| CliError::usage(format!("invalid Gram matrix: {e}")))
}
