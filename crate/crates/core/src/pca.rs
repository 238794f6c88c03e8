//! Principal component analysis of metric matrices.
//!
//! Rows are observations (vertices), columns are metrics. Columns are
//! z-scored with the population standard deviation (constant columns are
//! dropped and reported), the correlation matrix C = X′ᵀX′/rows is
//! eigendecomposed with a cyclic Jacobi iteration, and components are
//! reported as percentage loadings: each eigenvector column is rewritten as
//! 100·|v_j|/Σ|v| so loadings sum to 100 per component, and eigenvalues as
//! percentages of total variance. Aggregation over many snapshots averages
//! the percentage tables element-wise (mean and population std).

use crate::matrix::Matrix;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PcaError {
    #[error("z-scoring needs at least two rows, got {0}")]
    TooFewRows(usize),
    #[error("every column is constant; nothing to analyse")]
    AllColumnsConstant,
    #[error("eigendecomposition did not converge within {max_sweeps} sweeps")]
    NoConvergence { max_sweeps: usize },
    #[error("rank correlation needs at least three observations, got {0}")]
    TooFewObservations(usize),
    #[error("correlation is undefined for a constant sequence")]
    ConstantSequence,
    #[error("no snapshot results to aggregate")]
    NothingToAggregate,
}

/// Off-diagonal Frobenius norm below which the Jacobi iteration stops.
const JACOBI_TOLERANCE: f64 = 1e-12;
const JACOBI_MAX_SWEEPS: usize = 100;

/// A column is treated as constant when its population std is this small
/// relative to the magnitude of its mean.
fn is_constant(std_dev: f64, mean: f64) -> bool {
    std_dev <= 1e-12 * (1.0 + mean.abs())
}

#[derive(Debug, Clone, PartialEq)]
pub struct PcaResult {
    /// Metric names that survived z-scoring, in input order.
    pub kept_columns: Vec<String>,
    /// Metric names dropped because they were constant across rows.
    pub dropped_columns: Vec<String>,
    /// Eigenvalues of the correlation matrix, descending.
    pub eigenvalues: Vec<f64>,
    /// Eigenvalues as percentages of their total (sums to 100).
    pub variance_pct: Vec<f64>,
    /// Unit eigenvectors as columns, ordered like `eigenvalues`; the
    /// largest-magnitude entry of each column is made positive.
    pub eigenvectors: Matrix,
    /// Percentage loadings: 100·|v_jk| / Σ_j|v_jk| (each column sums
    /// to 100).
    pub loadings_pct: Matrix,
    /// Number of observation rows analysed.
    pub rows: usize,
}

/// Full pipeline on one data matrix. `column_names` labels the columns of
/// `data` and must match its width.
pub fn pca(data: &Matrix, column_names: &[&str]) -> Result<PcaResult, PcaError> {
    assert_eq!(
        column_names.len(),
        data.cols(),
        "one name per data column"
    );
    let rows = data.rows();
    if rows < 2 {
        return Err(PcaError::TooFewRows(rows));
    }
    let n = rows as f64;

    let mut kept = Vec::new();
    let mut dropped = Vec::new();
    let mut stats = Vec::new(); // (mean, std) for kept columns
    for c in 0..data.cols() {
        let mean = data.column(c).sum::<f64>() / n;
        let var = data.column(c).map(|x| (x - mean) * (x - mean)).sum::<f64>() / n;
        let std_dev = var.sqrt();
        if is_constant(std_dev, mean) {
            dropped.push(column_names[c].to_string());
        } else {
            kept.push(c);
            stats.push((mean, std_dev));
        }
    }
    if kept.is_empty() {
        return Err(PcaError::AllColumnsConstant);
    }

    let d = kept.len();
    let mut z = Matrix::zeros(rows, d);
    for (j, (&c, &(mean, std_dev))) in kept.iter().zip(&stats).enumerate() {
        for r in 0..rows {
            z.set(r, j, (data.get(r, c) - mean) / std_dev);
        }
    }

    // Correlation matrix of the standardized data.
    let mut corr = Matrix::zeros(d, d);
    for a in 0..d {
        for b in a..d {
            let mut dot = 0.0;
            for r in 0..rows {
                dot += z.get(r, a) * z.get(r, b);
            }
            corr.set(a, b, dot / n);
            corr.set(b, a, dot / n);
        }
    }

    let (mut eigenvalues, mut vectors) = jacobi_eigen(&mut corr)?;

    // Descending eigenvalue order.
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&a, &b| eigenvalues[b].partial_cmp(&eigenvalues[a]).unwrap());
    eigenvalues = order.iter().map(|&i| eigenvalues[i]).collect();
    vectors = reorder_columns(&vectors, &order);

    // Sign convention: the entry of largest magnitude in each eigenvector
    // is positive.
    for k in 0..d {
        let mut best = 0;
        for j in 1..d {
            if vectors.get(j, k).abs() > vectors.get(best, k).abs() {
                best = j;
            }
        }
        if vectors.get(best, k) < 0.0 {
            for j in 0..d {
                let v = vectors.get(j, k);
                vectors.set(j, k, -v);
            }
        }
    }

    let total: f64 = eigenvalues.iter().sum();
    let variance_pct = eigenvalues.iter().map(|&l| 100.0 * l / total).collect();

    let mut loadings = Matrix::zeros(d, d);
    for k in 0..d {
        let colsum: f64 = (0..d).map(|j| vectors.get(j, k).abs()).sum();
        for j in 0..d {
            loadings.set(j, k, 100.0 * vectors.get(j, k).abs() / colsum);
        }
    }

    Ok(PcaResult {
        kept_columns: kept.iter().map(|&c| column_names[c].to_string()).collect(),
        dropped_columns: dropped,
        eigenvalues,
        variance_pct,
        eigenvectors: vectors,
        loadings_pct: loadings,
        rows,
    })
}

fn reorder_columns(m: &Matrix, order: &[usize]) -> Matrix {
    let mut out = Matrix::zeros(m.rows(), order.len());
    for (new, &old) in order.iter().enumerate() {
        for r in 0..m.rows() {
            out.set(r, new, m.get(r, old));
        }
    }
    out
}

fn off_diagonal_norm(a: &Matrix) -> f64 {
    let n = a.rows();
    let mut sum = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            sum += a.get(p, q) * a.get(p, q);
        }
    }
    (2.0 * sum).sqrt()
}

/// Cyclic Jacobi eigendecomposition of a symmetric matrix. Consumes the
/// input (it is reduced towards diagonal form in place) and returns
/// (eigenvalues, eigenvector columns) in unsorted order.
fn jacobi_eigen(a: &mut Matrix) -> Result<(Vec<f64>, Matrix), PcaError> {
    let n = a.rows();
    assert_eq!(n, a.cols(), "matrix must be square");
    let mut v = Matrix::zeros(n, n);
    for i in 0..n {
        v.set(i, i, 1.0);
    }
    if n < 2 {
        return Ok(((0..n).map(|i| a.get(i, i)).collect(), v));
    }

    for _sweep in 0..JACOBI_MAX_SWEEPS {
        if off_diagonal_norm(a) <= JACOBI_TOLERANCE {
            let eigenvalues = (0..n).map(|i| a.get(i, i)).collect();
            return Ok((eigenvalues, v));
        }
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = a.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let app = a.get(p, p);
                let aqq = a.get(q, q);
                let theta = (aqq - app) / (2.0 * apq);
                // Smaller-magnitude root of t² + 2tθ − 1 = 0, stable for
                // large |θ|.
                let t = if theta.abs() > 1e12 {
                    1.0 / (2.0 * theta)
                } else {
                    let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
                    sign / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                a.set(p, p, app - t * apq);
                a.set(q, q, aqq + t * apq);
                a.set(p, q, 0.0);
                a.set(q, p, 0.0);
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a.get(r, p);
                    let arq = a.get(r, q);
                    a.set(r, p, arp - s * (arq + tau * arp));
                    a.set(p, r, a.get(r, p));
                    a.set(r, q, arq + s * (arp - tau * arq));
                    a.set(q, r, a.get(r, q));
                }
                for r in 0..n {
                    let vrp = v.get(r, p);
                    let vrq = v.get(r, q);
                    v.set(r, p, vrp - s * (vrq + tau * vrp));
                    v.set(r, q, vrq + s * (vrp - tau * vrq));
                }
            }
        }
    }
    if off_diagonal_norm(a) <= JACOBI_TOLERANCE {
        let eigenvalues = (0..n).map(|i| a.get(i, i)).collect();
        return Ok((eigenvalues, v));
    }
    Err(PcaError::NoConvergence { max_sweeps: JACOBI_MAX_SWEEPS })
}

/// Element-wise mean and population std of per-snapshot percentage tables,
/// restricted to the first `min(3, columns)` components.
#[derive(Debug, Clone, PartialEq)]
pub struct AggregatedPca {
    /// The majority kept-column set the aggregation is defined over.
    pub kept_columns: Vec<String>,
    /// Snapshot indices excluded because their kept columns differ from
    /// the majority, with an explanation.
    pub excluded: Vec<(usize, String)>,
    /// Snapshots actually averaged.
    pub used: usize,
    /// Components reported (up to three).
    pub components: usize,
    /// kept_columns.len() × components tables.
    pub loading_mean: Matrix,
    pub loading_std: Matrix,
    pub variance_mean: Vec<f64>,
    pub variance_std: Vec<f64>,
}

pub fn aggregate_pca(results: &[PcaResult]) -> Result<AggregatedPca, PcaError> {
    if results.is_empty() {
        return Err(PcaError::NothingToAggregate);
    }

    // Majority kept-column set; earliest-seen wins ties.
    let mut tally: HashMap<&[String], usize> = HashMap::new();
    for r in results {
        *tally.entry(&r.kept_columns).or_insert(0) += 1;
    }
    let mut majority: &[String] = &results[0].kept_columns;
    let mut best = 0usize;
    let mut seen: Vec<&[String]> = Vec::new();
    for r in results {
        let key: &[String] = &r.kept_columns;
        if seen.contains(&key) {
            continue;
        }
        seen.push(key);
        let count = tally[key];
        if count > best {
            best = count;
            majority = key;
        }
    }

    let mut excluded = Vec::new();
    let mut used_idx = Vec::new();
    for (i, r) in results.iter().enumerate() {
        if r.kept_columns == majority {
            used_idx.push(i);
        } else {
            excluded.push((
                i,
                format!(
                    "kept columns [{}] differ from the majority set",
                    r.kept_columns.join(", ")
                ),
            ));
        }
    }

    let d = majority.len();
    let components = d.min(3);
    let l = used_idx.len() as f64;

    let mut loading_mean = Matrix::zeros(d, components);
    let mut loading_std = Matrix::zeros(d, components);
    let mut variance_mean = vec![0.0; components];
    let mut variance_std = vec![0.0; components];

    for &i in &used_idx {
        let r = &results[i];
        for k in 0..components {
            variance_mean[k] += r.variance_pct[k];
            for j in 0..d {
                let x = loading_mean.get(j, k) + r.loadings_pct.get(j, k);
                loading_mean.set(j, k, x);
            }
        }
    }
    for k in 0..components {
        variance_mean[k] /= l;
        for j in 0..d {
            let x = loading_mean.get(j, k) / l;
            loading_mean.set(j, k, x);
        }
    }
    for &i in &used_idx {
        let r = &results[i];
        for k in 0..components {
            let dv = r.variance_pct[k] - variance_mean[k];
            variance_std[k] += dv * dv;
            for j in 0..d {
                let dl = r.loadings_pct.get(j, k) - loading_mean.get(j, k);
                let x = loading_std.get(j, k) + dl * dl;
                loading_std.set(j, k, x);
            }
        }
    }
    for k in 0..components {
        variance_std[k] = (variance_std[k] / l).sqrt();
        for j in 0..d {
            let x = (loading_std.get(j, k) / l).sqrt();
            loading_std.set(j, k, x);
        }
    }

    Ok(AggregatedPca {
        kept_columns: majority.to_vec(),
        excluded,
        used: used_idx.len(),
        components,
        loading_mean,
        loading_std,
        variance_mean,
        variance_std,
    })
}

/// Pearson correlation (population moments).
pub fn pearson(x: &[f64], y: &[f64]) -> Result<f64, PcaError> {
    assert_eq!(x.len(), y.len(), "paired sequences must have equal length");
    if x.len() < 3 {
        return Err(PcaError::TooFewObservations(x.len()));
    }
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let mut cov = 0.0;
    let mut vx = 0.0;
    let mut vy = 0.0;
    for (&a, &b) in x.iter().zip(y) {
        cov += (a - mx) * (b - my);
        vx += (a - mx) * (a - mx);
        vy += (b - my) * (b - my);
    }
    if vx == 0.0 || vy == 0.0 {
        return Err(PcaError::ConstantSequence);
    }
    Ok(cov / (vx.sqrt() * vy.sqrt()))
}

/// Spearman rank correlation; ties get mid-ranks.
pub fn spearman(x: &[f64], y: &[f64]) -> Result<f64, PcaError> {
    pearson(&midranks(x), &midranks(y))
}

fn midranks(values: &[f64]) -> Vec<f64> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap());
    let mut ranks = vec![0.0; values.len()];
    let mut i = 0;
    while i < idx.len() {
        let mut j = i;
        while j + 1 < idx.len() && values[idx[j + 1]] == values[idx[i]] {
            j += 1;
        }
        // Positions i..=j (0-based) share the average 1-based rank.
        let rank = (i + j) as f64 / 2.0 + 1.0;
        for &k in &idx[i..=j] {
            ranks[k] = rank;
        }
        i = j + 1;
    }
    ranks
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix(rows: &[&[f64]]) -> Matrix {
        Matrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn perfectly_correlated_columns_collapse_to_one_component() {
        // Columns x, 2x, −x: correlation entries are ±1, so one eigenvalue
        // carries everything.
        let data = matrix(&[
            &[1.0, 2.0, -1.0],
            &[2.0, 4.0, -2.0],
            &[4.0, 8.0, -4.0],
            &[7.0, 14.0, -7.0],
        ]);
        let r = pca(&data, &["a", "b", "c"]).unwrap();
        assert!((r.eigenvalues[0] - 3.0).abs() < 1e-10);
        assert!(r.eigenvalues[1].abs() < 1e-10);
        assert!((r.variance_pct[0] - 100.0).abs() < 1e-9);
        for j in 0..3 {
            assert!((r.loadings_pct.get(j, 0) - 100.0 / 3.0).abs() < 1e-9);
        }
        // Sign convention puts the dominant entry positive.
        let dominant = (0..3)
            .max_by(|&a, &b| {
                r.eigenvectors.get(a, 0).abs().total_cmp(&r.eigenvectors.get(b, 0).abs())
            })
            .unwrap();
        assert!(r.eigenvectors.get(dominant, 0) > 0.0);
    }

    #[test]
    fn two_by_two_has_known_spectrum() {
        // Correlation of [x, y] with corr ρ has eigenvalues 1 ± ρ.
        let data = matrix(&[
            &[1.0, 1.0],
            &[2.0, 1.5],
            &[3.0, 2.2],
            &[4.0, 3.9],
            &[5.0, 4.4],
        ]);
        let r = pca(&data, &["x", "y"]).unwrap();
        let rho = pearson(
            &data.column(0).collect::<Vec<_>>(),
            &data.column(1).collect::<Vec<_>>(),
        )
        .unwrap();
        assert!((r.eigenvalues[0] - (1.0 + rho)).abs() < 1e-10);
        assert!((r.eigenvalues[1] - (1.0 - rho)).abs() < 1e-10);
        let inv = 1.0 / 2f64.sqrt();
        for k in 0..2 {
            assert!((r.eigenvectors.get(0, k).abs() - inv).abs() < 1e-10);
        }
    }

    #[test]
    fn eigenpairs_satisfy_residual_and_orthonormality() {
        // Deterministic full-rank data.
        let mut rows = Vec::new();
        let mut state = 11u64;
        for _ in 0..40 {
            let mut row = Vec::new();
            for _ in 0..5 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                row.push((state >> 33) as f64 / (1u64 << 31) as f64);
            }
            rows.push(row);
        }
        let data = Matrix::from_rows(&rows);
        let names = ["a", "b", "c", "d", "e"];
        let r = pca(&data, &names).unwrap();
        let d = 5;

        // Rebuild the correlation matrix independently.
        let cols: Vec<Vec<f64>> = (0..d).map(|c| data.column(c).collect()).collect();
        let mut corr = vec![vec![0.0; d]; d];
        for a in 0..d {
            for b in 0..d {
                corr[a][b] = pearson(&cols[a], &cols[b]).unwrap_or(1.0);
            }
        }
        for k in 0..d {
            for j in 0..d {
                let cv: f64 = (0..d).map(|i| corr[j][i] * r.eigenvectors.get(i, k)).sum();
                let lv = r.eigenvalues[k] * r.eigenvectors.get(j, k);
                assert!((cv - lv).abs() < 1e-8, "residual at ({j},{k}): {}", cv - lv);
            }
        }
        for k1 in 0..d {
            for k2 in 0..d {
                let dot: f64 =
                    (0..d).map(|j| r.eigenvectors.get(j, k1) * r.eigenvectors.get(j, k2)).sum();
                let expect = if k1 == k2 { 1.0 } else { 0.0 };
                assert!((dot - expect).abs() < 1e-10);
            }
        }
        // Percentage bookkeeping.
        let vsum: f64 = r.variance_pct.iter().sum();
        assert!((vsum - 100.0).abs() < 1e-9);
        for k in 0..d {
            let lsum: f64 = (0..d).map(|j| r.loadings_pct.get(j, k)).sum();
            assert!((lsum - 100.0).abs() < 1e-9);
        }
        for w in r.eigenvalues.windows(2) {
            assert!(w[0] >= w[1] - 1e-12);
        }
    }

    #[test]
    fn constant_columns_are_dropped_and_reported() {
        let data = matrix(&[
            &[1.0, 5.0, 2.0],
            &[2.0, 5.0, 1.0],
            &[3.0, 5.0, 2.5],
        ]);
        let r = pca(&data, &["live", "flat", "other"]).unwrap();
        assert_eq!(r.kept_columns, vec!["live", "other"]);
        assert_eq!(r.dropped_columns, vec!["flat"]);
        assert_eq!(r.loadings_pct.rows(), 2);

        let all_flat = matrix(&[&[1.0, 1.0], &[1.0, 1.0]]);
        assert!(matches!(
            pca(&all_flat, &["a", "b"]),
            Err(PcaError::AllColumnsConstant)
        ));
    }

    #[test]
    fn column_rescaling_does_not_change_the_answer() {
        let base = matrix(&[
            &[1.0, 2.0, 0.5],
            &[2.0, 1.0, 0.25],
            &[3.0, 5.0, 0.125],
            &[4.0, 3.0, 0.5],
            &[5.0, 8.0, 0.0625],
        ]);
        let mut scaled_rows = Vec::new();
        for r in 0..base.rows() {
            let row = base.row(r);
            scaled_rows.push(vec![row[0] * 1000.0, row[1] * 1e-6, row[2] * 42.0]);
        }
        let scaled = Matrix::from_rows(&scaled_rows);
        let names = ["a", "b", "c"];
        let r1 = pca(&base, &names).unwrap();
        let r2 = pca(&scaled, &names).unwrap();
        for k in 0..3 {
            assert!((r1.variance_pct[k] - r2.variance_pct[k]).abs() < 1e-9);
            for j in 0..3 {
                assert!(
                    (r1.loadings_pct.get(j, k) - r2.loadings_pct.get(j, k)).abs() < 1e-9
                );
            }
        }
    }

    #[test]
    fn too_few_rows_is_an_error() {
        let data = matrix(&[&[1.0, 2.0]]);
        assert!(matches!(pca(&data, &["a", "b"]), Err(PcaError::TooFewRows(1))));
    }

    #[test]
    fn aggregate_means_and_excludes_mismatched_sets() {
        let data1 = matrix(&[
            &[1.0, 2.0, 3.0],
            &[2.0, 3.0, 1.0],
            &[3.0, 1.0, 2.0],
            &[4.0, 6.0, 5.0],
        ]);
        let data2 = matrix(&[
            &[2.0, 1.0, 4.0],
            &[3.0, 5.0, 2.0],
            &[5.0, 2.0, 6.0],
            &[7.0, 8.0, 3.0],
        ]);
        // Third snapshot has a constant column, so its kept set differs.
        let data3 = matrix(&[
            &[1.0, 9.0, 9.0],
            &[2.0, 9.0, 7.0],
            &[3.0, 9.0, 5.0],
        ]);
        let names = ["a", "b", "c"];
        let r1 = pca(&data1, &names).unwrap();
        let r2 = pca(&data2, &names).unwrap();
        let r3 = pca(&data3, &names).unwrap();
        let agg = aggregate_pca(&[r1.clone(), r2.clone(), r3]).unwrap();
        assert_eq!(agg.kept_columns, vec!["a", "b", "c"]);
        assert_eq!(agg.used, 2);
        assert_eq!(agg.excluded.len(), 1);
        assert_eq!(agg.excluded[0].0, 2);
        assert_eq!(agg.components, 3);
        let expect = (r1.variance_pct[0] + r2.variance_pct[0]) / 2.0;
        assert!((agg.variance_mean[0] - expect).abs() < 1e-12);
        let lm = (r1.loadings_pct.get(1, 0) + r2.loadings_pct.get(1, 0)) / 2.0;
        assert!((agg.loading_mean.get(1, 0) - lm).abs() < 1e-12);
        // Population std over two values is half their gap.
        let ls = (r1.loadings_pct.get(1, 0) - r2.loadings_pct.get(1, 0)).abs() / 2.0;
        assert!((agg.loading_std.get(1, 0) - ls).abs() < 1e-12);
    }

    #[test]
    fn aggregate_single_snapshot_has_zero_spread() {
        let data = matrix(&[
            &[1.0, 2.0],
            &[2.0, 1.0],
            &[3.0, 5.0],
        ]);
        let r = pca(&data, &["a", "b"]).unwrap();
        let agg = aggregate_pca(&[r]).unwrap();
        assert_eq!(agg.used, 1);
        assert_eq!(agg.components, 2);
        assert_eq!(agg.variance_std, vec![0.0, 0.0]);
        assert!(matches!(aggregate_pca(&[]), Err(PcaError::NothingToAggregate)));
    }

    #[test]
    fn pearson_and_spearman_behave() {
        let x: Vec<f64> = (1..=10).map(|i| i as f64).collect();
        let linear: Vec<f64> = x.iter().map(|v| 3.0 * v - 2.0).collect();
        assert!((pearson(&x, &linear).unwrap() - 1.0).abs() < 1e-12);
        // Monotone but curved: Spearman stays at 1, Pearson drops below.
        let cubed: Vec<f64> = x.iter().map(|v| v * v * v).collect();
        assert!((spearman(&x, &cubed).unwrap() - 1.0).abs() < 1e-12);
        assert!(pearson(&x, &cubed).unwrap() < 1.0);
        let flipped: Vec<f64> = x.iter().map(|v| -v).collect();
        assert!((spearman(&x, &flipped).unwrap() + 1.0).abs() < 1e-12);
        assert!(matches!(
            pearson(&[1.0, 2.0], &[1.0, 2.0]),
            Err(PcaError::TooFewObservations(2))
        ));
        assert!(matches!(
            pearson(&[1.0, 1.0, 1.0], &[1.0, 2.0, 3.0]),
            Err(PcaError::ConstantSequence)
        ));
    }

    #[test]
    fn midranks_average_ties() {
        assert_eq!(midranks(&[1.0, 2.0, 2.0, 3.0]), vec![1.0, 2.5, 2.5, 4.0]);
        assert_eq!(midranks(&[5.0, 5.0, 5.0]), vec![2.0, 2.0, 2.0]);
        assert_eq!(midranks(&[3.0, 1.0, 2.0]), vec![3.0, 1.0, 2.0]);
    }
}
