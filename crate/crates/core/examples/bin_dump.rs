//! Dumps the degree-criterion bin table for a few analysis windows of a
//! synthetic corpus — handy when judging how the observed degree histogram
//! sits against the binomial null.

use replygraph::ingest::build_corpus;
use replygraph::sectioning::{bin_and_compare, null_model, rescaled_values, NullPmf};
use replygraph::synth::{reply_process, ReplyProcessParams};
use replygraph::{window_snapshots, SimpleCriterion, WindowSpec};

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
    let ws: usize = env("WS", 1000.0) as usize;
    let which: i64 = env("WHICH", 2.0) as i64;
    let messages = reply_process(20_000, &params, seed).expect("valid parameters");
    let corpus = build_corpus(messages, None, 0).expect("non-empty corpus");
    let snaps = window_snapshots(&corpus, &WindowSpec::disjoint(ws).unwrap()).unwrap();
    if which == -3 {
        // Rank-alignment drill-down: per-window spearman(k, s), then a dump of
        // the worst window's (k, s) pairs to see which vertices break ranks.
        let ks = |net: &replygraph::InteractionNetwork| {
            let n = net.n_vertices();
            let k: Vec<f64> = (0..n).map(|v| net.neighbors(v).len() as f64).collect();
            let s: Vec<f64> = (0..n)
                .map(|v| {
                    let si: u64 = net.in_edges(v).iter().map(|&(_, w)| w).sum();
                    let so: u64 = net.out_edges(v).iter().map(|&(_, w)| w).sum();
                    (si + so) as f64
                })
                .collect();
            (k, s)
        };
        let mut worst = (1.0f64, 0usize);
        for (i, snap) in snaps.iter().enumerate() {
            let (k, s) = ks(&snap.network);
            let rho = replygraph::pca::spearman(&k, &s).unwrap();
            println!("w@{:5} N={:3} spearman={:.4}", snap.window_start, k.len(), rho);
            if rho < worst.0 {
                worst = (rho, i);
            }
        }
        let snap = &snaps[worst.1];
        let (k, s) = ks(&snap.network);
        let mut pairs: Vec<(u64, u64)> =
            k.iter().zip(&s).map(|(&a, &b)| (a as u64, b as u64)).collect();
        pairs.sort_unstable();
        println!("worst w@{} rho={:.4}:", snap.window_start, worst.0);
        for (kv, sv) in pairs {
            println!("  k={kv:3} s={sv:3} excess={}", sv - kv);
        }
        // Rank-displacement offenders: which vertices drag rho down most.
        let ranks = |xs: &[f64]| -> Vec<f64> {
            let mut order: Vec<usize> = (0..xs.len()).collect();
            order.sort_by(|&a, &b| xs[a].total_cmp(&xs[b]));
            let mut r = vec![0.0; xs.len()];
            let mut i = 0;
            while i < order.len() {
                let mut j = i;
                while j + 1 < order.len() && xs[order[j + 1]] == xs[order[i]] {
                    j += 1;
                }
                let avg = (i + j) as f64 / 2.0 + 1.0;
                for &v in &order[i..=j] {
                    r[v] = avg;
                }
                i = j + 1;
            }
            r
        };
        let (rk, rs) = (ranks(&k), ranks(&s));
        let mut off: Vec<(f64, usize)> =
            (0..k.len()).map(|v| ((rk[v] - rs[v]).abs(), v)).collect();
        off.sort_by(|a, b| b.0.total_cmp(&a.0));
        println!("top offenders (|rank_k - rank_s|):");
        for &(d, v) in off.iter().take(15) {
            println!(
                "  d={d:6.1} k={:3} s={:3} rank_k={:6.1} rank_s={:6.1}",
                k[v] as u64, s[v] as u64, rk[v], rs[v]
            );
        }
        return;
    }
    if which == -4 {
        // Shelf composition: for each window, list vertices with window degree
        // >= 8 together with their whole-corpus degree, to see whether the
        // shelf is made of regulars or of casuals having a busy stretch.
        let full = window_snapshots(&corpus, &WindowSpec::disjoint(corpus.len()).unwrap())
            .unwrap()
            .remove(0);
        let mut global: std::collections::HashMap<String, usize> =
            std::collections::HashMap::new();
        for (v, label) in full.network.labels().iter().enumerate() {
            global.insert(label.clone(), full.network.neighbors(v).len());
        }
        for snap in &snaps {
            let net = &snap.network;
            let mut shelf: Vec<(usize, usize)> = (0..net.n_vertices())
                .filter_map(|v| {
                    let kw = net.neighbors(v).len();
                    (kw >= 8).then(|| (kw, global[&net.labels()[v]]))
                })
                .collect();
            shelf.sort_unstable_by(|a, b| b.cmp(a));
            let row: Vec<String> =
                shelf.iter().map(|(kw, kg)| format!("{kw}:{kg}")).collect();
            println!("w@{:5} N={:3} shelf={:2}  {}", snap.window_start, net.n_vertices(), row.len(), row.join(" "));
        }
        return;
    }
    if which < 0 {
        // Compact per-window summary instead of one bin table.
        for snap in &snaps {
            let net = &snap.network;
            let model = null_model(net).unwrap();
            let values = rescaled_values(net, SimpleCriterion::Degree).unwrap();
            let trials = 2 * (model.n_vertices as u64 - 1);
            let pmf = NullPmf { n: trials, p: model.p_e };
            let binned = bin_and_compare(&values, &pmf, 10);
            let inter: Vec<&_> = binned.bins.iter().filter(|b| b.is_intermediary()).collect();
            let (kl, kr) = match (inter.first(), inter.last()) {
                (Some(f), Some(l)) => (f.k_min as i64 - 1, l.k_max as i64),
                _ => (-1, -1),
            };
            let frac = |lo: i64, hi: i64| {
                values.iter().filter(|&&v| (v as i64) > lo && (v as i64) <= hi).count() as f64
                    / values.len() as f64
            };
            println!(
                "w@{:5} N={:3} z={:4} null_mean={:5.2} kL={kl} kR={kr} peri={:.2} inter={:.2} hub={:.2}",
                snap.window_start,
                model.n_vertices,
                model.n_edges,
                trials as f64 * model.p_e,
                frac(-1, kl),
                frac(kl, kr),
                frac(kr, i64::MAX),
            );
        }
        return;
    }
    let snap = &snaps[(which as usize).min(snaps.len() - 1)];
    let net = &snap.network;
    let model = null_model(net).unwrap();
    let values = rescaled_values(net, SimpleCriterion::Degree).unwrap();
    let trials = 2 * (model.n_vertices as u64 - 1);
    let pmf = NullPmf { n: trials, p: model.p_e };
    println!(
        "window@{}: N={} z={} p_e={:.5} null mean={:.2} sd={:.2}",
        snap.window_start,
        model.n_vertices,
        model.n_edges,
        model.p_e,
        trials as f64 * model.p_e,
        (trials as f64 * model.p_e * (1.0 - model.p_e)).sqrt()
    );
    let binned = bin_and_compare(&values, &pmf, 10);
    for b in &binned.bins {
        println!(
            "  [{:3}..{:3}] count={:3} emp={:.4} null={:.4}  {}",
            b.k_min,
            b.k_max,
            b.vertex_count,
            b.empirical_mass,
            b.null_mass,
            if b.is_intermediary() { "INTERMEDIARY" } else { "" }
        );
    }
}
