//! Input file formats: point configurations and monomial ideals.

use std::path::Path;
use std::str::FromStr;

use serde::Deserialize;

use fatpoints_core::monomial::{Monomial, MonomialIdeal};
use fatpoints_core::points::{Hyperplane, PointConfig};
use fatpoints_core::Rational;

/// An input problem: either malformed data (exit 1) or a usable value.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for InputError {}

/// Point file: {"N": int, "points": [[entry, ...], ...], "label": str?}
/// where each entry is an integer, or a string "p" or "p/q".
#[derive(Debug, Deserialize)]
struct PointFile {
    #[serde(rename = "N")]
    n: usize,
    points: Vec<Vec<serde_json::Value>>,
    label: Option<String>,
}

fn parse_entry(v: &serde_json::Value, row: usize, col: usize) -> Result<Rational, InputError> {
    let text = match v {
        serde_json::Value::String(s) => s.clone(),
        serde_json::Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
        _ => {
            return Err(InputError(format!(
                "point {} entry {}: expected integer or rational string, got {}",
                row, col, v
            )))
        }
    };
    Rational::from_str(text.trim()).map_err(|e| {
        InputError(format!(
            "point {} entry {}: cannot parse {:?} as a rational: {}",
            row, col, text, e
        ))
    })
}

fn parse_rows(file: &PointFile, path: &Path) -> Result<Vec<Vec<Rational>>, InputError> {
    if file.n < 1 {
        return Err(InputError(format!("{}: N must be >= 1", path.display())));
    }
    let mut rows = Vec::with_capacity(file.points.len());
    for (i, raw) in file.points.iter().enumerate() {
        if raw.len() != file.n + 1 {
            return Err(InputError(format!(
                "{}: point {} has {} coordinates, expected {}",
                path.display(),
                i,
                raw.len(),
                file.n + 1
            )));
        }
        let mut row = Vec::with_capacity(raw.len());
        for (j, v) in raw.iter().enumerate() {
            row.push(parse_entry(v, i, j)?);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Parse, normalize, and validate a point configuration file.
pub fn parse_points_file(path: &Path) -> Result<PointConfig, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("{}: {}", path.display(), e)))?;
    let file: PointFile = serde_json::from_str(&text)
        .map_err(|e| InputError(format!("{}: parse error: {}", path.display(), e)))?;
    let rows = parse_rows(&file, path)?;
    let label = file
        .label
        .clone()
        .unwrap_or_else(|| path.display().to_string());
    let cfg = PointConfig::from_rational_rows(file.n, &rows, label)
        .map_err(|e| InputError(format!("{}: {}", path.display(), e)))?;
    let violations = cfg.validate();
    if !violations.is_empty() {
        let lines: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
        return Err(InputError(format!(
            "{}: invalid configuration: {}",
            path.display(),
            lines.join("; ")
        )));
    }
    Ok(cfg)
}

/// Parse a hyperplane arrangement from the same schema as a point file;
/// each row holds the N+1 coefficients of one hyperplane.
pub fn parse_hyperplanes_file(path: &Path) -> Result<Vec<Hyperplane>, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("{}: {}", path.display(), e)))?;
    let file: PointFile = serde_json::from_str(&text)
        .map_err(|e| InputError(format!("{}: parse error: {}", path.display(), e)))?;
    let rows = parse_rows(&file, path)?;
    rows.iter()
        .map(|r| {
            Hyperplane::new(r).map_err(|e| InputError(format!("{}: {}", path.display(), e)))
        })
        .collect()
}

/// Monomial ideal file:
/// {"variables": [str, ...], "generators": [[int, ...], ...]}
#[derive(Debug, Deserialize)]
struct IdealFile {
    variables: Vec<String>,
    generators: Vec<Vec<u32>>,
}

pub fn parse_ideal_file(path: &Path) -> Result<MonomialIdeal, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("{}: {}", path.display(), e)))?;
    let file: IdealFile = serde_json::from_str(&text)
        .map_err(|e| InputError(format!("{}: parse error: {}", path.display(), e)))?;
    if file.variables.is_empty() {
        return Err(InputError(format!(
            "{}: need at least one variable",
            path.display()
        )));
    }
    for (i, g) in file.generators.iter().enumerate() {
        if g.len() != file.variables.len() {
            return Err(InputError(format!(
                "{}: generator {} has {} exponents, expected {}",
                path.display(),
                i,
                g.len(),
                file.variables.len()
            )));
        }
    }
    Ok(MonomialIdeal::new(
        file.variables,
        file.generators.into_iter().map(Monomial).collect(),
    ))
}
