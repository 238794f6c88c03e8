//! End-to-end demo on a synthetic corpus: generates a reply stream, cuts
//! sliding windows, classifies Erdős sectors under the degree criterion,
//! and summarizes PCA structure. Run with:
//!
//! ```sh
//! cargo run --release -p replygraph --example sector_demo [seed]
//! ```

use replygraph::graph::window_snapshots;
use replygraph::ingest::build_corpus;
use replygraph::metrics::{metrics_matrix, METRIC_NAMES};
use replygraph::pca::{aggregate_pca, pca, pearson, spearman};
use replygraph::sectioning::{classify_simple, SimpleCriterion, DEFAULT_ETA};
use replygraph::synth::{reply_process, ReplyProcessParams};
use replygraph::{Matrix, WindowSpec};

fn main() {
    let seed: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let env = |name: &str, default: f64| -> f64 {
        std::env::var(name).ok().and_then(|v| v.parse().ok()).unwrap_or(default)
    };
    let defaults = ReplyProcessParams::default();
    let params = ReplyProcessParams {
        p_root: env("P_ROOT", defaults.p_root),
        p_new: env("P_NEW", defaults.p_new),
        recency: env("RECENCY", defaults.recency as f64) as usize,
        burn_in: env("BURN_IN", defaults.burn_in as f64) as usize,
        p_focus: env("P_FOCUS", defaults.p_focus),
        p_back: env("P_BACK", defaults.p_back),
        p_answer: env("P_ANSWER", defaults.p_answer),
        p_return: env("P_RETURN", defaults.p_return),
    };
    let messages = reply_process(20_000, &params, seed).expect("valid parameters");
    let corpus = build_corpus(messages, None, 0).expect("non-empty corpus");
    println!(
        "corpus: M={} N={} threads={} (seed {seed}, p_root={}, p_new={})",
        corpus.len(),
        corpus.n_participants,
        corpus.n_threads,
        params.p_root,
        params.p_new
    );

    let debug_windows = std::env::var("WINDOW_DEBUG").is_ok();
    for ws in [200usize, 1000, 5000] {
        let snaps = window_snapshots(&corpus, &WindowSpec::disjoint(ws).unwrap()).unwrap();
        let mut hub_fracs = Vec::new();
        let (mut lo, mut hi) = ([1.0f64; 3], [0.0f64; 3]);
        for snap in &snaps {
            let part =
                classify_simple(&snap.network, SimpleCriterion::Degree, DEFAULT_ETA).unwrap();
            let fracs = [
                part.fraction(replygraph::Sector::Hub),
                part.fraction(replygraph::Sector::Intermediary),
                part.fraction(replygraph::Sector::Periphery),
            ];
            for i in 0..3 {
                lo[i] = lo[i].min(fracs[i]);
                hi[i] = hi[i].max(fracs[i]);
            }
            hub_fracs.push(fracs[0]);
            let out_of_band = fracs[0] < 0.01
                || fracs[0] > 0.15
                || fracs[1] < 0.10
                || fracs[1] > 0.50
                || fracs[2] < 0.40
                || fracs[2] > 0.85;
            if debug_windows && out_of_band {
                let net = &snap.network;
                let n = net.n_vertices();
                let max_k = (0..n).map(|v| net.neighbors(v).len()).max().unwrap_or(0);
                println!(
                    "  window@{}: N={n} z={} mean_k={:.2} max_k={max_k} hub={:.1}% inter={:.1}% peri={:.1}% degen={:?} kL/kR={:?}/{:?}",
                    snap.window_start,
                    net.n_edges(),
                    2.0 * net.n_edges() as f64 / n as f64,
                    fracs[0] * 100.0,
                    fracs[1] * 100.0,
                    fracs[2] * 100.0,
                    part.degeneracy,
                    part.k_l,
                    part.k_r,
                );
            }
        }
        let mean = hub_fracs.iter().sum::<f64>() / hub_fracs.len() as f64;
        let std = (hub_fracs.iter().map(|h| (h - mean) * (h - mean)).sum::<f64>()
            / hub_fracs.len() as f64)
            .sqrt();
        println!(
            "ws={ws:5}: {} windows  hub [{:.1}%, {:.1}%] (std {:.3})  inter [{:.1}%, {:.1}%]  peri [{:.1}%, {:.1}%]",
            snaps.len(),
            lo[0] * 100.0,
            hi[0] * 100.0,
            std,
            lo[1] * 100.0,
            hi[1] * 100.0,
            lo[2] * 100.0,
            hi[2] * 100.0,
        );
    }

    // PCA over ws = 1000 windows, plus the degree–strength correlation.
    let snaps = window_snapshots(&corpus, &WindowSpec::disjoint(1000).unwrap()).unwrap();
    let mut results = Vec::new();
    let mut min_rho: f64 = 1.0;
    let (mut cc_pos, mut verts, mut weight, mut edges) = (0usize, 0usize, 0u64, 0usize);
    let mut cc_k_pearson: Vec<f64> = Vec::new();
    let mut cc_k_spearman: Vec<f64> = Vec::new();
    let mut sasy_k_pearson: Vec<f64> = Vec::new();
    // Mean clustering by degree band: k ≤ 2, 3..9, ≥ 10; plus the count of
    // low-degree vertices with saturated clustering (the loading killers).
    let mut band_sum = [0.0f64; 3];
    let mut band_n = [0usize; 3];
    let mut saturated_low = 0usize;
    // Degree composition and how densely the window's core interlinks.
    let mut k_share = [0usize; 3];
    let mut core_pairs = 0usize;
    let mut core_linked = 0usize;
    for snap in &snaps {
        let m = metrics_matrix(&snap.network);
        let k: Vec<f64> = m.column(4).collect();
        let s: Vec<f64> = m.column(1).collect();
        let cc: Vec<f64> = m.column(0).collect();
        min_rho = min_rho.min(spearman(&k, &s).unwrap());
        if let Ok(r) = pearson(&cc, &k) {
            cc_k_pearson.push(r);
        }
        if let Ok(r) = spearman(&cc, &k) {
            cc_k_spearman.push(r);
        }
        let sasy: Vec<f64> = m.column(10).collect();
        if let Ok(r) = pearson(&sasy, &k) {
            sasy_k_pearson.push(r);
        }
        for (&ki, &ci) in k.iter().zip(&cc) {
            let band = if ki <= 2.0 { 0 } else if ki < 10.0 { 1 } else { 2 };
            band_sum[band] += ci;
            band_n[band] += 1;
            if ki <= 3.0 && ci >= 0.99 {
                saturated_low += 1;
            }
            if ki <= 2.0 {
                k_share[ki as usize] += 1;
            }
        }
        let mut order: Vec<usize> = (0..snap.network.n_vertices()).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(snap.network.neighbors(v).len()));
        let top = &order[..order.len().min(15)];
        for (a, &u) in top.iter().enumerate() {
            for &v in &top[a + 1..] {
                core_pairs += 1;
                if snap.network.neighbors(u).contains(&v) {
                    core_linked += 1;
                }
            }
        }
        cc_pos += m.column(0).filter(|&c| c > 0.0).count();
        verts += m.rows();
        weight += snap.network.total_weight();
        edges += snap.network.n_edges();
        results.push(pca(&m, &METRIC_NAMES).unwrap());
    }
    println!(
        "spearman(k, s) min over ws=1000 windows: {min_rho:.4}  cc>0: {:.1}%  mean edge weight {:.2}",
        100.0 * cc_pos as f64 / verts as f64,
        weight as f64 / edges as f64
    );
    let mean = |v: &[f64]| v.iter().sum::<f64>() / v.len().max(1) as f64;
    let min = |v: &[f64]| v.iter().cloned().fold(f64::INFINITY, f64::min);
    println!(
        "corr(cc,k): pearson mean {:.3} min {:.3}  spearman mean {:.3} min {:.3}  corr(sigma_asy,k) {:.3}",
        mean(&cc_k_pearson),
        min(&cc_k_pearson),
        mean(&cc_k_spearman),
        min(&cc_k_spearman),
        mean(&sasy_k_pearson),
    );
    println!(
        "mean cc by k band: ≤2 {:.3} ({})  3–9 {:.3} ({})  ≥10 {:.3} ({})  saturated k≤3: {}",
        band_sum[0] / band_n[0].max(1) as f64,
        band_n[0],
        band_sum[1] / band_n[1].max(1) as f64,
        band_n[1],
        band_sum[2] / band_n[2].max(1) as f64,
        band_n[2],
        saturated_low,
    );
    println!(
        "k shares: k=0 {:.1}%  k=1 {:.1}%  k=2 {:.1}%  top-15 core density {:.2}",
        100.0 * k_share[0] as f64 / verts as f64,
        100.0 * k_share[1] as f64 / verts as f64,
        100.0 * k_share[2] as f64 / verts as f64,
        core_linked as f64 / core_pairs.max(1) as f64,
    );
    let big = window_snapshots(&corpus, &WindowSpec::disjoint(5000).unwrap()).unwrap();
    let mut min_big: f64 = 1.0;
    for snap in &big {
        let m = metrics_matrix(&snap.network);
        let k: Vec<f64> = m.column(4).collect();
        let s: Vec<f64> = m.column(1).collect();
        min_big = min_big.min(spearman(&k, &s).unwrap());
    }
    println!("spearman(k, s) min over ws=5000 windows: {min_big:.4}");

    let agg = aggregate_pca(&results).unwrap();
    println!(
        "aggregate over {} windows (excluded {}), top-3 variance {:.1}%",
        agg.used,
        agg.excluded.len(),
        agg.variance_mean.iter().sum::<f64>()
    );
    let show = |label: &str, k: usize, loading: &Matrix, names: &[String]| {
        let mut rows: Vec<(f64, &str)> = names
            .iter()
            .enumerate()
            .map(|(j, n)| (loading.get(j, k), n.as_str()))
            .collect();
        rows.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
        let line: Vec<String> =
            rows.iter().map(|(v, n)| format!("{n}={v:.2}")).collect();
        println!("{label}: {}", line.join(" "));
    };
    show("PC1", 0, &agg.loading_mean, &agg.kept_columns);
    show("PC2", 1, &agg.loading_mean, &agg.kept_columns);
}
