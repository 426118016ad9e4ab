//! Text and JSON renderings. Exact fractions are authoritative; every numeric
//! column has a companion `_approx` column with a decimal approximation.

use std::io::Write;

use indexmap::IndexMap;
use ivifn::oracle::SuiteReport;
use ivifn::{ComparisonOutcome, DecidedAt, Ivifn, OrderSelector, RankedItem, Rational};
use serde::Serialize;

use crate::CliError;

const DIGITS: usize = 4;
const BOUNDS: [&str; 4] = ["mu_lo", "mu_hi", "nu_lo", "nu_hi"];

fn bounds(a: &Ivifn) -> [&Rational; 4] {
    [a.mu_lo(), a.mu_hi(), a.nu_lo(), a.nu_hi()]
}

#[derive(Serialize)]
struct ValueOut {
    label: String,
    mu_lo: String,
    mu_hi: String,
    nu_lo: String,
    nu_hi: String,
    mu_lo_approx: f64,
    mu_hi_approx: f64,
    nu_lo_approx: f64,
    nu_hi_approx: f64,
}

impl ValueOut {
    fn new(label: &str, a: &Ivifn) -> Self {
        ValueOut {
            label: label.to_string(),
            mu_lo: a.mu_lo().to_string(),
            mu_hi: a.mu_hi().to_string(),
            nu_lo: a.nu_lo().to_string(),
            nu_hi: a.nu_hi().to_string(),
            mu_lo_approx: a.mu_lo().to_f64(),
            mu_hi_approx: a.mu_hi().to_f64(),
            nu_lo_approx: a.nu_lo().to_f64(),
            nu_hi_approx: a.nu_hi().to_f64(),
        }
    }
}

#[derive(Serialize)]
struct RankOut {
    rank: usize,
    #[serde(flatten)]
    value: ValueOut,
    keys: IndexMap<&'static str, String>,
    tie_break: Option<&'static str>,
}

fn json(out: &mut dyn Write, v: &impl Serialize) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, v).map_err(CliError::Output)?;
    writeln!(out)?;
    Ok(())
}

fn csv_writer(out: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::Writer::from_writer(out)
}

fn tie_break(d: Option<DecidedAt>, order: OrderSelector) -> Option<&'static str> {
    d.map(|d| d.key_name(order))
}

/// Ranked alternatives. The CSV form keeps the input columns, so it can be read back.
pub fn ranking(
    out: &mut dyn Write,
    items: &[RankedItem],
    order: OrderSelector,
    as_json: bool,
) -> Result<(), CliError> {
    let names = order.key_names();
    if as_json {
        let rows: Vec<RankOut> = items
            .iter()
            .enumerate()
            .map(|(i, it)| RankOut {
                rank: i + 1,
                value: ValueOut::new(&it.label, &it.value),
                keys: names
                    .iter()
                    .copied()
                    .zip(order.keys(&it.value).iter().map(|k| k.to_string()))
                    .collect(),
                tie_break: tie_break(it.decided_vs_next, order),
            })
            .collect();
        return json(out, &rows);
    }

    let key_cols: Vec<String> = names.iter().map(|n| n.to_lowercase()).collect();
    let mut header: Vec<String> = vec!["rank".into(), "label".into()];
    header.extend(BOUNDS.iter().map(|s| s.to_string()));
    header.extend(key_cols.iter().cloned());
    header.push("tie_break".into());
    header.extend(BOUNDS.iter().map(|s| format!("{s}_approx")));
    header.extend(key_cols.iter().map(|s| format!("{s}_approx")));

    let mut w = csv_writer(out);
    w.write_record(&header)?;
    for (i, it) in items.iter().enumerate() {
        let keys = order.keys(&it.value);
        let mut rec: Vec<String> = vec![(i + 1).to_string(), it.label.clone()];
        rec.extend(bounds(&it.value).iter().map(|x| x.to_string()));
        rec.extend(keys.iter().map(|k| k.to_string()));
        rec.push(
            tie_break(it.decided_vs_next, order)
                .unwrap_or("")
                .to_string(),
        );
        rec.extend(bounds(&it.value).iter().map(|x| x.approx(DIGITS)));
        rec.extend(keys.iter().map(|k| k.approx(DIGITS)));
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

/// Labelled values as `label,mu_lo,...,nu_hi_approx` rows.
pub fn values(
    out: &mut dyn Write,
    rows: &[(String, Ivifn)],
    as_json: bool,
) -> Result<(), CliError> {
    if as_json {
        let rows: Vec<ValueOut> = rows.iter().map(|(l, a)| ValueOut::new(l, a)).collect();
        return json(out, &rows);
    }
    let mut header = vec!["label".to_string()];
    header.extend(BOUNDS.iter().map(|s| s.to_string()));
    header.extend(BOUNDS.iter().map(|s| format!("{s}_approx")));
    let mut w = csv_writer(out);
    w.write_record(&header)?;
    for (label, a) in rows {
        let mut rec = vec![label.clone()];
        rec.extend(bounds(a).iter().map(|x| x.to_string()));
        rec.extend(bounds(a).iter().map(|x| x.approx(DIGITS)));
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct CompareOut<'a> {
    order: OrderSelector,
    #[serde(flatten)]
    outcome: &'a ComparisonOutcome,
    key: &'static str,
}

pub fn comparison(
    out: &mut dyn Write,
    outcome: &ComparisonOutcome,
    order: OrderSelector,
    as_json: bool,
) -> Result<(), CliError> {
    let key = outcome.decided_at.key_name(order);
    if as_json {
        return json(
            out,
            &CompareOut {
                order,
                outcome,
                key,
            },
        );
    }
    if outcome.decided_at == DecidedAt::AllEqual {
        writeln!(out, "{:?} (all keys tie)", outcome.relation)?;
    } else {
        writeln!(out, "{:?} (decided at {key})", outcome.relation)?;
    }
    Ok(())
}

pub fn labels(out: &mut dyn Write, labels: &[String], as_json: bool) -> Result<(), CliError> {
    if as_json {
        return json(out, &labels);
    }
    for l in labels {
        writeln!(out, "{l}")?;
    }
    Ok(())
}

pub fn reports(
    out: &mut dyn Write,
    reports: &[SuiteReport],
    as_json: bool,
) -> Result<(), CliError> {
    if as_json {
        return json(out, &reports);
    }
    for r in reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "{status}  {:<24} [{}] {} checks, {} violations",
            r.suite, r.order, r.checked, r.violation_count
        )?;
        for v in &r.violations {
            let w: Vec<String> = v.witnesses.iter().map(|a| a.to_string()).collect();
            writeln!(out, "      {:?}: {}", v.axiom, w.join(" ; "))?;
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    writeln!(out, "{} suites, {} failed", reports.len(), failed)?;
    Ok(())
}
