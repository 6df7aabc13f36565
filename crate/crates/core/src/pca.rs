//! Principal component projection for plotting.

use std::io::Write;

use nalgebra::{DMatrix, SymmetricEigen};

use crate::data::{Dataset, LabelId};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Projected {
    pub index: usize,
    pub coords: Vec<f64>,
    pub label: LabelId,
}

/// Principal axes of `ds`, strongest first, each paired with its variance.
/// Every axis is oriented so that its largest-magnitude loading is positive.
pub fn principal_components(ds: &Dataset) -> Result<Vec<(f64, Vec<f64>)>> {
    let n = ds.len();
    let m = ds.feature_count();
    if n < 2 {
        return Err(Error::Argument("PCA needs at least two instances".into()));
    }
    let x = DMatrix::from_fn(n, m, |i, j| ds.instance(i).features[j]);
    let mean = x.row_mean();
    let centered = DMatrix::from_fn(n, m, |i, j| x[(i, j)] - mean[j]);
    let cov = (centered.transpose() * &centered) / (n as f64 - 1.0);
    let eigen = SymmetricEigen::new(cov);

    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| {
        eigen.eigenvalues[b]
            .total_cmp(&eigen.eigenvalues[a])
            .then(a.cmp(&b))
    });
    Ok(order
        .into_iter()
        .map(|k| {
            let mut v: Vec<f64> = eigen.eigenvectors.column(k).iter().copied().collect();
            let pivot = v
                .iter()
                .enumerate()
                .fold(0, |best, (j, x)| if x.abs() > v[best].abs() { j } else { best });
            if v[pivot] < 0.0 {
                v.iter_mut().for_each(|x| *x = -*x);
            }
            (eigen.eigenvalues[k].max(0.0), v)
        })
        .collect())
}

/// Mean-centred coordinates of every instance on the first `dims`
/// principal axes.
pub fn pca_project(ds: &Dataset, dims: usize) -> Result<Vec<Projected>> {
    if dims == 0 || dims > ds.feature_count() {
        return Err(Error::Argument(format!(
            "cannot project {} features onto {dims} components",
            ds.feature_count()
        )));
    }
    let axes = principal_components(ds)?;
    let m = ds.feature_count();
    let mean: Vec<f64> = (0..m)
        .map(|j| ds.instances().iter().map(|i| i.features[j]).sum::<f64>() / ds.len() as f64)
        .collect();
    Ok(ds
        .instances()
        .iter()
        .map(|inst| Projected {
            index: inst.index,
            label: inst.label,
            coords: axes[..dims]
                .iter()
                .map(|(_, v)| (0..m).map(|j| (inst.features[j] - mean[j]) * v[j]).sum())
                .collect(),
        })
        .collect())
}

/// Writes `index,pc1,pc2,...,label` rows with a header.
pub fn write_projection<W: Write>(ds: &Dataset, rows: &[Projected], out: W) -> Result<()> {
    let dims = rows.first().map_or(0, |r| r.coords.len());
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Format(format!("cannot write projection: {e}"));
    let mut header = vec!["index".to_string()];
    header.extend((1..=dims).map(|k| format!("pc{k}")));
    header.push("label".into());
    w.write_record(&header).map_err(io)?;
    for r in rows {
        let mut rec = vec![r.index.to_string()];
        rec.extend(r.coords.iter().map(|c| format!("{c:.10}")));
        rec.push(ds.label_name(r.label).to_string());
        w.write_record(&rec).map_err(io)?;
    }
    w.flush()
        .map_err(|e| Error::Format(format!("cannot write projection: {e}")))
}
