//! The 14 per-vertex topological metrics.
//!
//! Column order is fixed everywhere (tables, CSV, PCA input):
//! cc, s, s_in, s_out, k, k_in, k_out, bt, asy, mu_asy, sigma_asy,
//! dis, mu_dis, sigma_dis.
//!
//! Conventions: degrees count *distinct* neighbors (k is the size of the
//! in/out union); strengths sum edge weights; the clustering coefficient is
//! taken on the undirected simplification (edge iff w_ij + w_ji > 0);
//! betweenness treats edge distance as 1/w (heavier exchange = closer) and
//! is normalized by (N−1)(N−2); the six symmetry metrics are 0 for isolated
//! vertices. Deviation σ's are population ones (divide by k).

use crate::graph::InteractionNetwork;
use crate::matrix::Matrix;
use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::collections::HashSet;

pub const METRIC_NAMES: [&str; 14] = [
    "cc", "s", "s_in", "s_out", "k", "k_in", "k_out", "bt", "asy", "mu_asy", "sigma_asy",
    "dis", "mu_dis", "sigma_dis",
];

#[derive(Debug, Clone, PartialEq)]
pub struct VertexMetrics {
    pub cc: f64,
    pub s: u64,
    pub s_in: u64,
    pub s_out: u64,
    pub k: usize,
    pub k_in: usize,
    pub k_out: usize,
    pub bt: f64,
    pub asy: f64,
    pub mu_asy: f64,
    pub sigma_asy: f64,
    pub dis: f64,
    pub mu_dis: f64,
    pub sigma_dis: f64,
}

impl VertexMetrics {
    /// The metric vector in canonical column order.
    pub fn as_row(&self) -> [f64; 14] {
        [
            self.cc,
            self.s as f64,
            self.s_in as f64,
            self.s_out as f64,
            self.k as f64,
            self.k_in as f64,
            self.k_out as f64,
            self.bt,
            self.asy,
            self.mu_asy,
            self.sigma_asy,
            self.dis,
            self.mu_dis,
            self.sigma_dis,
        ]
    }
}

/// Degrees and strengths per vertex: (k, k_in, k_out, s, s_in, s_out),
/// vertex order.
pub fn degrees_strengths(net: &InteractionNetwork) -> Vec<(usize, usize, usize, u64, u64, u64)> {
    (0..net.n_vertices())
        .map(|v| {
            let k_in = net.in_edges(v).len();
            let k_out = net.out_edges(v).len();
            let k = net.neighbors(v).len();
            let s_in: u64 = net.in_edges(v).iter().map(|&(_, w)| w).sum();
            let s_out: u64 = net.out_edges(v).iter().map(|&(_, w)| w).sum();
            (k, k_in, k_out, s_in + s_out, s_in, s_out)
        })
        .collect()
}

/// Clustering coefficient per vertex on the undirected simplification:
/// cc = 2T/(k(k−1)) with T the number of links among the k neighbors;
/// 0 when k < 2.
pub fn clustering(net: &InteractionNetwork) -> Vec<f64> {
    let n = net.n_vertices();
    let mut undirected: HashSet<(usize, usize)> = HashSet::new();
    for (i, j, _) in net.edges() {
        undirected.insert((i.min(j), i.max(j)));
    }
    (0..n)
        .map(|v| {
            let nbrs = net.neighbors(v);
            let k = nbrs.len();
            if k < 2 {
                return 0.0;
            }
            let mut triangles = 0usize;
            for a in 0..k {
                for b in a + 1..k {
                    let (x, y) = (nbrs[a].min(nbrs[b]), nbrs[a].max(nbrs[b]));
                    if undirected.contains(&(x, y)) {
                        triangles += 1;
                    }
                }
            }
            2.0 * triangles as f64 / (k * (k - 1)) as f64
        })
        .collect()
}

/// Relative tolerance for declaring two floating-point path lengths equal
/// when counting geodesics. Reciprocal-weight sums of genuinely different
/// paths differ by far more than this; accumulated rounding noise by far
/// less.
pub const PATH_TIE_TOLERANCE: f64 = 1e-9;

fn path_tie(a: f64, b: f64) -> bool {
    a.is_finite() && b.is_finite() && (a - b).abs() <= PATH_TIE_TOLERANCE * a.abs().max(b.abs()).max(1.0)
}

#[derive(PartialEq)]
struct HeapEntry {
    dist: f64,
    vertex: usize,
}

impl Eq for HeapEntry {}

impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        // Reversed: BinaryHeap is a max-heap, we want smallest distance first.
        other
            .dist
            .partial_cmp(&self.dist)
            .expect("path lengths are never NaN")
            .then_with(|| other.vertex.cmp(&self.vertex))
    }
}

impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Weighted directed betweenness (Brandes): single-source Dijkstra passes
/// with edge distance 1/w, geodesic counting with [`PATH_TIE_TOLERANCE`],
/// and dependency accumulation. Normalized by (N−1)(N−2); all zero when
/// N < 3.
pub fn betweenness(net: &InteractionNetwork) -> Vec<f64> {
    let n = net.n_vertices();
    let mut bt = vec![0.0; n];
    if n < 3 {
        return bt;
    }

    let mut dist = vec![f64::INFINITY; n];
    let mut sigma = vec![0.0f64; n];
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut settled = vec![false; n];
    let mut order: Vec<usize> = Vec::with_capacity(n);

    for source in 0..n {
        dist.fill(f64::INFINITY);
        sigma.fill(0.0);
        settled.fill(false);
        for p in preds.iter_mut() {
            p.clear();
        }
        order.clear();

        dist[source] = 0.0;
        sigma[source] = 1.0;
        let mut heap = BinaryHeap::new();
        heap.push(HeapEntry { dist: 0.0, vertex: source });

        while let Some(HeapEntry { vertex: v, .. }) = heap.pop() {
            if settled[v] {
                continue;
            }
            settled[v] = true;
            order.push(v);
            for &(w, weight) in net.out_edges(v) {
                let cand = dist[v] + 1.0 / weight as f64;
                if path_tie(cand, dist[w]) {
                    sigma[w] += sigma[v];
                    preds[w].push(v);
                } else if cand < dist[w] {
                    dist[w] = cand;
                    sigma[w] = sigma[v];
                    preds[w].clear();
                    preds[w].push(v);
                    heap.push(HeapEntry { dist: cand, vertex: w });
                }
            }
        }

        let mut delta = vec![0.0f64; n];
        for &w in order.iter().rev() {
            for &v in &preds[w] {
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if w != source {
                bt[w] += delta[w];
            }
        }
    }

    let norm = ((n - 1) * (n - 2)) as f64;
    for b in bt.iter_mut() {
        *b /= norm;
    }
    bt
}

/// The six symmetry metrics per vertex:
/// (asy, mu_asy, sigma_asy, dis, mu_dis, sigma_dis).
pub fn symmetry_metrics(net: &InteractionNetwork) -> Vec<(f64, f64, f64, f64, f64, f64)> {
    (0..net.n_vertices())
        .map(|v| {
            let nbrs = net.neighbors(v);
            let k = nbrs.len();
            if k == 0 {
                return (0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
            }
            let k_in = net.in_edges(v).len() as f64;
            let k_out = net.out_edges(v).len() as f64;
            let s_in: u64 = net.in_edges(v).iter().map(|&(_, w)| w).sum();
            let s_out: u64 = net.out_edges(v).iter().map(|&(_, w)| w).sum();
            let s = (s_in + s_out) as f64;
            let kf = k as f64;

            let asy = (k_in - k_out) / kf;

            // Per-neighbor edge indicators and weight imbalances.
            let mut asy_terms = Vec::with_capacity(k);
            let mut dis_terms = Vec::with_capacity(k);
            for &j in &nbrs {
                let w_ji = net.weight(j, v) as f64; // inbound j→v
                let w_ij = net.weight(v, j) as f64; // outbound v→j
                let e_ji = if w_ji > 0.0 { 1.0 } else { 0.0 };
                let e_ij = if w_ij > 0.0 { 1.0 } else { 0.0 };
                asy_terms.push(e_ji - e_ij);
                if s > 0.0 {
                    dis_terms.push((w_ji - w_ij) / s);
                }
            }

            let mu_asy = asy_terms.iter().sum::<f64>() / kf;
            let sigma_asy =
                (asy_terms.iter().map(|t| (mu_asy - t).powi(2)).sum::<f64>() / kf).sqrt();

            let (dis, mu_dis, sigma_dis) = if s > 0.0 {
                let dis = (s_in as f64 - s_out as f64) / s;
                let mu_dis = dis_terms.iter().sum::<f64>() / kf;
                let sigma_dis =
                    (dis_terms.iter().map(|t| (mu_dis - t).powi(2)).sum::<f64>() / kf).sqrt();
                (dis, mu_dis, sigma_dis)
            } else {
                (0.0, 0.0, 0.0)
            };

            (asy, mu_asy, sigma_asy, dis, mu_dis, sigma_dis)
        })
        .collect()
}

/// All 14 metrics assembled per vertex, in the network's vertex order.
pub fn vertex_metrics(net: &InteractionNetwork) -> Vec<VertexMetrics> {
    let ds = degrees_strengths(net);
    let cc = clustering(net);
    let bt = betweenness(net);
    let sym = symmetry_metrics(net);
    (0..net.n_vertices())
        .map(|v| {
            let (k, k_in, k_out, s, s_in, s_out) = ds[v];
            let (asy, mu_asy, sigma_asy, dis, mu_dis, sigma_dis) = sym[v];
            VertexMetrics {
                cc: cc[v],
                s,
                s_in,
                s_out,
                k,
                k_in,
                k_out,
                bt: bt[v],
                asy,
                mu_asy,
                sigma_asy,
                dis,
                mu_dis,
                sigma_dis,
            }
        })
        .collect()
}

/// The vertices × 14 metric matrix, rows in lexicographic vertex order,
/// columns in [`METRIC_NAMES`] order.
pub fn metrics_matrix(net: &InteractionNetwork) -> Matrix {
    let rows: Vec<Vec<f64>> =
        vertex_metrics(net).iter().map(|m| m.as_row().to_vec()).collect();
    if rows.is_empty() {
        Matrix::zeros(0, 14)
    } else {
        Matrix::from_rows(&rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NetworkBuilder;

    fn net_from(edges: &[(&str, &str, u64)]) -> InteractionNetwork {
        let mut b = NetworkBuilder::new();
        for &(f, t, w) in edges {
            b.add_interaction(f, t, w);
        }
        b.build()
    }

    #[test]
    fn path_betweenness() {
        // a→b→c: only the (a,c) geodesic has an interior vertex.
        let net = net_from(&[("a", "b", 1), ("b", "c", 1)]);
        let bt = betweenness(&net);
        let b = net.index_of("b").unwrap();
        assert!((bt[b] - 0.5).abs() < 1e-12, "bt(b) = 1/((3-1)(3-2)) · 1");
        assert_eq!(bt[net.index_of("a").unwrap()], 0.0);
        assert_eq!(bt[net.index_of("c").unwrap()], 0.0);
    }

    #[test]
    fn tied_geodesics_split_dependency() {
        // a→m1→d and a→m2→d with equal weights: each midpoint carries half
        // of the (a,d) pair. Normalization (4−1)(4−2) = 6.
        let net = net_from(&[("a", "m1", 2), ("m1", "d", 2), ("a", "m2", 2), ("m2", "d", 2)]);
        let bt = betweenness(&net);
        let m1 = net.index_of("m1").unwrap();
        let m2 = net.index_of("m2").unwrap();
        assert!((bt[m1] - 0.5 / 6.0).abs() < 1e-12);
        assert!((bt[m1] - bt[m2]).abs() < 1e-12);
    }

    #[test]
    fn heavy_edges_are_shorter() {
        // Direct a→b has distance 1; a→c→b via weight-4 edges has 0.5, so
        // the two-hop route is the only geodesic and c lies on it.
        let net = net_from(&[("a", "b", 1), ("a", "c", 4), ("c", "b", 4)]);
        let bt = betweenness(&net);
        let c = net.index_of("c").unwrap();
        assert!((bt[c] - 0.5).abs() < 1e-12, "pair (a,b) of 2 ordered pairs");
    }

    #[test]
    fn betweenness_zero_below_three_vertices() {
        let net = net_from(&[("a", "b", 3)]);
        assert_eq!(betweenness(&net), vec![0.0, 0.0]);
    }

    #[test]
    fn clique_minus_one_edge_clustering() {
        // Undirected 4-clique without the a–d edge (direction irrelevant
        // for cc). Endpoints of the missing edge see their two neighbors
        // linked: cc = 1. The others have k = 3 and T = 2: cc = 2/3.
        let net = net_from(&[
            ("a", "b", 1),
            ("a", "c", 1),
            ("b", "c", 1),
            ("b", "d", 1),
            ("c", "d", 1),
        ]);
        let cc = clustering(&net);
        let at = |l: &str| cc[net.index_of(l).unwrap()];
        assert!((at("a") - 1.0).abs() < 1e-12);
        assert!((at("d") - 1.0).abs() < 1e-12);
        assert!((at("b") - 2.0 / 3.0).abs() < 1e-12);
        assert!((at("c") - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn reciprocated_pair_counts_once_in_cc_graph() {
        // b↔c reciprocated: still a single undirected link among a's
        // neighbors.
        let net = net_from(&[("a", "b", 1), ("a", "c", 1), ("b", "c", 2), ("c", "b", 5)]);
        let cc = clustering(&net);
        let a = net.index_of("a").unwrap();
        assert!((cc[a] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn degrees_count_distinct_neighbors() {
        // a↔b reciprocated plus a→c: k(a) = 2 though a touches 3 edges.
        let net = net_from(&[("a", "b", 2), ("b", "a", 7), ("a", "c", 1)]);
        let a = net.index_of("a").unwrap();
        let ds = degrees_strengths(&net);
        let (k, k_in, k_out, s, s_in, s_out) = ds[a];
        assert_eq!((k, k_in, k_out), (2, 1, 2));
        assert_eq!((s, s_in, s_out), (10, 7, 3));
    }

    #[test]
    fn isolated_vertex_is_all_zero() {
        let mut b = NetworkBuilder::new();
        b.add_vertex("loner");
        b.add_interaction("x", "y", 1);
        b.add_interaction("y", "z", 1);
        let net = b.build();
        let m = &vertex_metrics(&net)[net.index_of("loner").unwrap()];
        assert_eq!(m.as_row(), [0.0; 14]);
    }

    #[test]
    fn spec_symmetry_example() {
        // In-edge weight 3, out-edge weight 1 to distinct neighbors:
        // dis = (3−1)/4 = 0.5, mu_dis = (3/4 − 1/4)/2 = 0.25.
        let net = net_from(&[("j1", "v", 3), ("v", "j2", 1)]);
        let v = net.index_of("v").unwrap();
        let (asy, mu_asy, sigma_asy, dis, mu_dis, _sigma_dis) = symmetry_metrics(&net)[v];
        assert!((dis - 0.5).abs() < 1e-12);
        assert!((mu_dis - 0.25).abs() < 1e-12);
        // One pure in-neighbor (+1) and one pure out-neighbor (−1).
        assert!((asy - 0.0).abs() < 1e-12);
        assert!((mu_asy - 0.0).abs() < 1e-12);
        assert!((sigma_asy - 1.0).abs() < 1e-12);
    }

    #[test]
    fn reciprocated_neighbors_are_symmetric() {
        let net = net_from(&[("a", "b", 2), ("b", "a", 2)]);
        for v in 0..2 {
            let (asy, mu_asy, sigma_asy, dis, mu_dis, sigma_dis) = symmetry_metrics(&net)[v];
            for val in [asy, mu_asy, sigma_asy, dis, mu_dis, sigma_dis] {
                assert!(val.abs() < 1e-12, "fully reciprocated, balanced: {val}");
            }
        }
    }

    #[test]
    fn books_balance() {
        let net = net_from(&[
            ("a", "b", 2),
            ("b", "c", 3),
            ("c", "a", 1),
            ("a", "c", 4),
            ("d", "a", 5),
        ]);
        let ds = degrees_strengths(&net);
        let z: usize = ds.iter().map(|d| d.2).sum();
        assert_eq!(z, net.n_edges());
        assert_eq!(ds.iter().map(|d| d.1).sum::<usize>(), z, "Σk_in = Σk_out");
        let s_in: u64 = ds.iter().map(|d| d.4).sum();
        let s_out: u64 = ds.iter().map(|d| d.5).sum();
        assert_eq!(s_in, net.total_weight());
        assert_eq!(s_out, net.total_weight());
    }

    #[test]
    fn matrix_shape_and_order() {
        let net = net_from(&[("b", "a", 1), ("c", "a", 2)]);
        let x = metrics_matrix(&net);
        assert_eq!((x.rows(), x.cols()), (3, 14));
        // Row 0 is vertex "a": s = 3 lives in column 1.
        assert_eq!(net.labels()[0], "a");
        assert_eq!(x.get(0, 1), 3.0);
        assert_eq!(METRIC_NAMES[1], "s");
    }

    #[test]
    fn asy_integer_identity() {
        let net = net_from(&[
            ("a", "b", 1),
            ("b", "a", 1),
            ("a", "c", 2),
            ("d", "a", 1),
            ("e", "a", 3),
            ("a", "f", 1),
        ]);
        for m in vertex_metrics(&net) {
            if m.k > 0 {
                let recovered = (m.asy * m.k as f64).round() as i64 + m.k_out as i64;
                assert_eq!(recovered, m.k_in as i64);
                assert!((m.asy * m.k as f64 - (m.k_in as f64 - m.k_out as f64)).abs() < 1e-9);
            }
        }
    }
}
