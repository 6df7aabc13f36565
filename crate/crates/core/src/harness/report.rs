//! Comma-separated output of experiment results and published figures.

use std::io::Write;

use super::published::{self, PublishedTable};
use super::{format_q, GridReport, Selector};
use crate::baselines::Method;
use crate::error::{Error, Result};
use crate::localset::BallotVariant;
use crate::voting::RuleId;

fn csv_err(e: csv::Error) -> Error {
    Error::Format(format!("cannot write results: {e}"))
}

pub const RESULTS_HEADER: [&str; 9] = [
    "dataset",
    "selector",
    "q",
    "variant",
    "K",
    "accuracy",
    "reduction",
    "committee_mode_flags",
    "seconds",
];

/// One row per grid cell, then one `average` row per config. The `seconds`
/// column stays empty unless `timings` is set, so that reruns are
/// byte-identical.
pub fn write_results_csv<W: Write>(report: &GridReport, out: W, timings: bool) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(RESULTS_HEADER).map_err(csv_err)?;
    for cell in &report.cells {
        let sel = &cell.config.selector;
        let (acc, red, flags, secs) = match &cell.outcome {
            Ok(r) => (
                format!("{:.4}", r.accuracy),
                format!("{:.4}", r.reduction),
                r.committee_flags(),
                if timings { format!("{:.3}", r.seconds) } else { String::new() },
            ),
            Err(msg) => (String::new(), String::new(), format!("error: {msg}"), String::new()),
        };
        w.write_record([
            cell.dataset.clone(),
            sel.name(),
            sel.q_label(),
            sel.variant_label(),
            cell.config.k.to_string(),
            acc,
            red,
            flags,
            secs,
        ])
        .map_err(csv_err)?;
    }
    for row in report.averages() {
        let sel = &row.config.selector;
        w.write_record([
            "average".to_string(),
            sel.name(),
            sel.q_label(),
            sel.variant_label(),
            row.config.k.to_string(),
            format!("{:.4}", row.accuracy),
            format!("{:.4}", row.reduction),
            format!("datasets:{}", row.count),
            String::new(),
        ])
        .map_err(csv_err)?;
    }
    w.flush().map_err(|e| Error::Format(format!("cannot write results: {e}")))
}

/// One accuracy-versus-reduction point per config, averaged over datasets.
pub fn write_scatter_csv<W: Write>(report: &GridReport, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["config", "accuracy", "reduction"]).map_err(csv_err)?;
    for row in report.averages() {
        w.write_record([
            row.config.selector.to_string(),
            format!("{:.4}", row.accuracy),
            format!("{:.4}", row.reduction),
        ])
        .map_err(csv_err)?;
    }
    w.flush().map_err(|e| Error::Format(format!("cannot write scatter data: {e}")))
}

/// Every published figure for the given datasets (all when empty), in long
/// form, tagged `published`.
pub fn write_published_csv<W: Write>(datasets: &[String], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["table", "dataset", "column", "value", "source"])
        .map_err(csv_err)?;
    for table in published::ALL {
        for (name, values) in table.rows {
            if !datasets.is_empty() && !datasets.iter().any(|d| d == name) && *name != "average" {
                continue;
            }
            for (col, v) in table.columns.iter().zip(values.iter()) {
                w.write_record([table.id, name, col, &format!("{v:.2}"), "published"])
                    .map_err(csv_err)?;
            }
        }
    }
    w.flush().map_err(|e| Error::Format(format!("cannot write published data: {e}")))
}

/// Published KNN accuracy and reduction for a selector on a dataset.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PublishedCell {
    pub accuracy: Option<f64>,
    pub reduction: Option<f64>,
}

fn lookup(tables: &[&PublishedTable], dataset: &str, column: &str) -> Option<f64> {
    tables.iter().find_map(|t| t.get(dataset, column))
}

/// The published figures matching `selector` (KNN accuracy with `K = 3`).
pub fn published_cell(dataset: &str, selector: &Selector) -> Option<PublishedCell> {
    use published::*;
    let cell = match selector {
        Selector::None => PublishedCell {
            accuracy: BASELINES_KNN_ACC.get(dataset, "NoR"),
            reduction: Some(0.0),
        },
        Selector::Rule { rule, q, variant } => {
            let name = match rule {
                RuleId::Sejr => "SEJR",
                RuleId::S2ejr => "S2EJR",
                RuleId::EqualShares => "ES",
                RuleId::SeqPhragmen => "SeqP",
            };
            let column = format!("{name}-{}", format_q(q));
            let (acc, red) = match variant {
                BallotVariant::Included => (
                    [&KNN_ACC_LARGE_INCLUDED, &KNN_ACC_SMALL_INCLUDED],
                    [&REDUCTION_LARGE_INCLUDED, &REDUCTION_SMALL_INCLUDED],
                ),
                BallotVariant::Excluded => (
                    [&KNN_ACC_LARGE_EXCLUDED, &KNN_ACC_SMALL_EXCLUDED],
                    [&REDUCTION_LARGE_EXCLUDED, &REDUCTION_SMALL_EXCLUDED],
                ),
            };
            PublishedCell {
                accuracy: lookup(&acc, dataset, &column),
                reduction: lookup(&red, dataset, &column),
            }
        }
        Selector::Baseline(method) => {
            let column = match method {
                Method::Random { fraction } => format!("R-{fraction}"),
                Method::NoApproved => "NoA".into(),
                Method::Enn { .. } => "ENN".into(),
                Method::Icf { .. } => "ICF".into(),
                Method::Lsbo => "LSBo".into(),
                Method::Lssm => "LSSm".into(),
                Method::Cnn => return None,
            };
            PublishedCell {
                accuracy: lookup(&[&BASELINES_KNN_ACC, &OTHERS_KNN_ACC], dataset, &column),
                reduction: lookup(&[&BASELINES_REDUCTION, &OTHERS_REDUCTION], dataset, &column),
            }
        }
    };
    (cell.accuracy.is_some() || cell.reduction.is_some()).then_some(cell)
}
