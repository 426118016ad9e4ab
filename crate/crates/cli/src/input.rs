//! Readers for alternatives files, chain statistics and label mappings.
//!
//! Alternatives come as CSV with a `label,mu_lo,mu_hi,nu_lo,nu_hi` header (extra
//! columns are ignored) or as a JSON array of objects with the same field names.
//! Bounds may be decimals, fractions or JSON numbers; all are read exactly.

use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};

use indexmap::IndexMap;
use ivifn::{ChainStats, Ivifn, Level, OrderSelector, Rational};
use serde::Deserialize;

use crate::CliError;

/// A number as written in JSON: either a string literal or a bare number.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Num {
    Text(String),
    Number(serde_json::Number),
}

impl Num {
    fn text(&self) -> String {
        match self {
            Num::Text(s) => s.clone(),
            // Kept verbatim thanks to arbitrary precision, so no float rounding.
            Num::Number(n) => n.to_string(),
        }
    }
}

#[derive(Debug, Deserialize)]
struct JsonRow {
    label: Option<String>,
    mu_lo: Num,
    mu_hi: Num,
    nu_lo: Num,
    nu_hi: Num,
}

#[derive(Debug, Deserialize)]
struct CsvRow {
    label: String,
    mu_lo: String,
    mu_hi: String,
    nu_lo: String,
    nu_hi: String,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum JsonRows {
    Many(Vec<JsonRow>),
    One(JsonRow),
}

const COLUMNS: [&str; 5] = ["label", "mu_lo", "mu_hi", "nu_lo", "nu_hi"];

fn is_json(path: &Path) -> bool {
    path.extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("json"))
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn number(path: &Path, label: &str, field: &str, text: &str) -> Result<Rational, CliError> {
    Rational::parse(text).map_err(|source| CliError::Number {
        path: path.to_path_buf(),
        label: label.to_string(),
        field: field.to_string(),
        source,
    })
}

fn build(path: &Path, label: String, bounds: [String; 4]) -> Result<(String, Ivifn), CliError> {
    let [a, b, c, d] = ["mu_lo", "mu_hi", "nu_lo", "nu_hi"]
        .into_iter()
        .zip(&bounds)
        .map(|(field, text)| number(path, &label, field, text))
        .collect::<Result<Vec<_>, _>>()?
        .try_into()
        .expect("four bounds");
    match Ivifn::new(a, b, c, d) {
        Ok(v) => Ok((label, v)),
        Err(source) => Err(CliError::Invalid {
            path: path.to_path_buf(),
            label,
            source,
        }),
    }
}

/// Reads labelled IVIFNs in file order. Rows without a label get `#1`, `#2`, ...
pub fn read_alternatives(path: &Path) -> Result<Vec<(String, Ivifn)>, CliError> {
    let rows: Vec<(String, [String; 4])> = if is_json(path) {
        let text = read(path)?;
        let rows = match serde_json::from_str(&text).map_err(|source| CliError::Json {
            path: path.to_path_buf(),
            source,
        })? {
            JsonRows::Many(rows) => rows,
            JsonRows::One(row) => vec![row],
        };
        rows.into_iter()
            .enumerate()
            .map(|(i, r)| {
                let label = r.label.unwrap_or_else(|| format!("#{}", i + 1));
                (
                    label,
                    [
                        r.mu_lo.text(),
                        r.mu_hi.text(),
                        r.nu_lo.text(),
                        r.nu_hi.text(),
                    ],
                )
            })
            .collect()
    } else {
        let csv_err = |source| CliError::Csv {
            path: path.to_path_buf(),
            source,
        };
        let mut reader = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .from_path(path)
            .map_err(csv_err)?;
        let headers = reader.headers().map_err(csv_err)?;
        if let Some(missing) = COLUMNS.iter().find(|c| !headers.iter().any(|h| h == **c)) {
            return Err(CliError::MissingColumn {
                path: path.to_path_buf(),
                column: missing.to_string(),
            });
        }
        let mut rows = Vec::new();
        for row in reader.deserialize::<CsvRow>() {
            let r = row.map_err(csv_err)?;
            rows.push((r.label, [r.mu_lo, r.mu_hi, r.nu_lo, r.nu_hi]));
        }
        rows
    };

    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(rows.len());
    for (label, bounds) in rows {
        if !seen.insert(label.clone()) {
            return Err(CliError::DuplicateLabel {
                path: path.to_path_buf(),
                label,
            });
        }
        out.push(build(path, label, bounds)?);
    }
    Ok(out)
}

/// A single IVIFN, from a one-row file or an inline `a,b,c,d` (brackets allowed).
pub fn read_value(arg: &str) -> Result<Ivifn, CliError> {
    let path = PathBuf::from(arg);
    if path.is_file() {
        let mut rows = read_alternatives(&path)?;
        if rows.len() != 1 {
            return Err(CliError::Usage(format!(
                "{} must hold exactly one IVIFN, found {}",
                arg,
                rows.len()
            )));
        }
        return Ok(rows.remove(0).1);
    }
    let cleaned: String = arg
        .chars()
        .filter(|c| !matches!(c, '<' | '>' | '[' | ']'))
        .collect();
    let parts: Vec<String> = cleaned.split(',').map(|s| s.trim().to_string()).collect();
    let bounds: [String; 4] = parts.try_into().map_err(|_| {
        CliError::Usage(format!(
            "{arg:?} is neither a file nor four comma-separated bounds"
        ))
    })?;
    build(Path::new("<argument>"), arg.to_string(), bounds).map(|(_, v)| v)
}

#[derive(Debug, Deserialize)]
struct JsonLevel {
    value: Num,
    attained: bool,
}

#[derive(Debug, Deserialize)]
struct JsonChain {
    order: Option<OrderSelector>,
    levels: Vec<JsonLevel>,
}

/// Reads `{"order": "hzx", "levels": [{"value": "-1/2", "attained": false}]}`.
///
/// The order may come from the file or from `flag`; if both are given they must agree.
pub fn read_chain_stats(path: &Path, flag: Option<OrderSelector>) -> Result<ChainStats, CliError> {
    let text = read(path)?;
    let raw: JsonChain = serde_json::from_str(&text).map_err(|source| CliError::Json {
        path: path.to_path_buf(),
        source,
    })?;
    let order = match (raw.order, flag) {
        (Some(file), Some(flag)) if file != flag => {
            return Err(CliError::Usage(format!(
                "{} declares order {file} but --order is {flag}",
                path.display()
            )))
        }
        (file, flag) => file.or(flag).unwrap_or_default(),
    };
    let levels = raw
        .levels
        .iter()
        .enumerate()
        .map(|(i, l)| {
            let value = number(path, &format!("level {}", i + 1), "value", &l.value.text())?;
            Ok(Level {
                value,
                attained: l.attained,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    ChainStats::new(order, levels).map_err(CliError::Chain)
}

#[derive(Debug, Deserialize)]
struct JsonMapping {
    universe: Option<Vec<String>>,
    map: IndexMap<String, String>,
}

/// A label-to-label map plus its target universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mapping {
    pub universe: Vec<String>,
    pub map: IndexMap<String, String>,
}

/// Reads `{"universe": ["p", "q"], "map": {"x": "p", "y": "p"}}`.
///
/// Without `universe`, the target is the set of images in order of first appearance.
pub fn read_mapping(path: &Path) -> Result<Mapping, CliError> {
    let text = read(path)?;
    let raw: JsonMapping = serde_json::from_str(&text).map_err(|source| CliError::Json {
        path: path.to_path_buf(),
        source,
    })?;
    let universe = raw.universe.unwrap_or_else(|| {
        let mut seen = HashSet::new();
        raw.map
            .values()
            .filter(|y| seen.insert(y.as_str()))
            .cloned()
            .collect()
    });
    Ok(Mapping {
        universe,
        map: raw.map,
    })
}
