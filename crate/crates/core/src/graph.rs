//! Directed weighted interaction networks built from reply pairs.
//!
//! A reply by B to A's message is an interaction A→B (information flowed
//! from A to B) of weight 1; repeated pairs accumulate weight. Self-replies
//! never create edges, and every sender in the message slice is a vertex
//! even when reply-less (isolated, degree 0). Vertices are kept in
//! lexicographic label order so every downstream artifact is reproducible.

use crate::ingest::{Corpus, Message};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("window size {ws} exceeds corpus length {m}")]
    WindowTooLarge { ws: usize, m: usize },
    #[error("window size and step must both be at least 1 (ws={ws}, step={step})")]
    BadWindowSpec { ws: usize, step: usize },
}

/// Sparse weighted digraph over identity-keyed vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct InteractionNetwork {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    out_edges: Vec<Vec<(usize, u64)>>,
    in_edges: Vec<Vec<(usize, u64)>>,
    n_edges: usize,
    total_weight: u64,
}

impl InteractionNetwork {
    pub fn n_vertices(&self) -> usize {
        self.labels.len()
    }

    /// z: count of directed edges with positive weight.
    pub fn n_edges(&self) -> usize {
        self.n_edges
    }

    /// Σ w_ij over all edges — the number of reply pairs retained.
    pub fn total_weight(&self) -> u64 {
        self.total_weight
    }

    /// Vertex labels in lexicographic order; indices everywhere refer to
    /// positions in this slice.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// w_ij, zero when no edge exists.
    pub fn weight(&self, from: usize, to: usize) -> u64 {
        match self.out_edges[from].binary_search_by_key(&to, |&(t, _)| t) {
            Ok(pos) => self.out_edges[from][pos].1,
            Err(_) => 0,
        }
    }

    /// Outgoing (target, weight) pairs of `v`, ascending by target index.
    pub fn out_edges(&self, v: usize) -> &[(usize, u64)] {
        &self.out_edges[v]
    }

    /// Incoming (source, weight) pairs of `v`, ascending by source index.
    pub fn in_edges(&self, v: usize) -> &[(usize, u64)] {
        &self.in_edges[v]
    }

    /// All edges as (from, to, weight), ascending by (from, to).
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.out_edges
            .iter()
            .enumerate()
            .flat_map(|(i, outs)| outs.iter().map(move |&(j, w)| (i, j, w)))
    }

    /// Distinct neighbors of `v` (union of in- and out-neighbors), ascending.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let outs = self.out_edges[v].iter().map(|&(t, _)| t);
        let ins = self.in_edges[v].iter().map(|&(s, _)| s);
        let mut all: Vec<usize> = outs.chain(ins).collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    /// CSV edge list `src,dst,weight`, rows in (src, dst) lexicographic order.
    pub fn edge_list_csv(&self) -> String {
        let mut out = String::from("src,dst,weight\n");
        for (i, j, w) in self.edges() {
            out.push_str(&format!("{},{},{}\n", self.labels[i], self.labels[j], w));
        }
        out
    }

    /// CSV vertex list, lexicographic.
    pub fn vertex_list_csv(&self) -> String {
        let mut out = String::from("vertex\n");
        for label in &self.labels {
            out.push_str(label);
            out.push('\n');
        }
        out
    }

    /// Fraction of vertices in the largest weakly connected component;
    /// zero for an empty network.
    pub fn giant_component_fraction(&self) -> f64 {
        let n = self.n_vertices();
        if n == 0 {
            return 0.0;
        }
        let mut seen = vec![false; n];
        let mut largest = 0usize;
        let mut stack = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut size = 0usize;
            seen[start] = true;
            stack.push(start);
            while let Some(v) = stack.pop() {
                size += 1;
                for &(t, _) in &self.out_edges[v] {
                    if !seen[t] {
                        seen[t] = true;
                        stack.push(t);
                    }
                }
                for &(s, _) in &self.in_edges[v] {
                    if !seen[s] {
                        seen[s] = true;
                        stack.push(s);
                    }
                }
            }
            largest = largest.max(size);
        }
        largest as f64 / n as f64
    }
}

/// Accumulates vertices and weighted interactions, then freezes into a
/// lexicographically ordered [`InteractionNetwork`]. Self-interactions are
/// discarded at the door — the network never carries self-loops.
#[derive(Debug, Default)]
pub struct NetworkBuilder {
    ids: HashMap<String, usize>,
    labels: Vec<String>,
    weights: HashMap<(usize, usize), u64>,
}

impl NetworkBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, label: &str) -> usize {
        if let Some(&id) = self.ids.get(label) {
            return id;
        }
        let id = self.labels.len();
        self.labels.push(label.to_string());
        self.ids.insert(label.to_string(), id);
        id
    }

    pub fn add_interaction(&mut self, from: &str, to: &str, weight: u64) {
        let f = self.add_vertex(from);
        let t = self.add_vertex(to);
        if f == t || weight == 0 {
            return;
        }
        *self.weights.entry((f, t)).or_insert(0) += weight;
    }

    pub fn build(self) -> InteractionNetwork {
        let mut order: Vec<usize> = (0..self.labels.len()).collect();
        order.sort_by(|&a, &b| self.labels[a].cmp(&self.labels[b]));
        // rank[old_id] = new lexicographic index
        let mut rank = vec![0usize; self.labels.len()];
        for (new_idx, &old_id) in order.iter().enumerate() {
            rank[old_id] = new_idx;
        }
        let labels: Vec<String> = order.iter().map(|&o| self.labels[o].clone()).collect();
        let index: HashMap<String, usize> =
            labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();

        let n = labels.len();
        let mut out_edges: Vec<Vec<(usize, u64)>> = vec![Vec::new(); n];
        let mut in_edges: Vec<Vec<(usize, u64)>> = vec![Vec::new(); n];
        let mut total_weight = 0u64;
        let n_edges = self.weights.len();
        for (&(f, t), &w) in &self.weights {
            let (f, t) = (rank[f], rank[t]);
            out_edges[f].push((t, w));
            in_edges[t].push((f, w));
            total_weight += w;
        }
        for adj in out_edges.iter_mut().chain(in_edges.iter_mut()) {
            adj.sort_unstable_by_key(|&(v, _)| v);
        }
        InteractionNetwork { labels, index, out_edges, in_edges, n_edges, total_weight }
    }
}

/// Builds the interaction network of a message slice. Replies resolve
/// against ids *within the slice*; a reply whose target lies outside
/// contributes no edge (its sender is still a vertex).
pub fn build_network(messages: &[Message]) -> InteractionNetwork {
    let by_id: HashMap<&str, &Message> =
        messages.iter().map(|m| (m.id.as_str(), m)).collect();
    let mut builder = NetworkBuilder::new();
    for m in messages {
        builder.add_vertex(&m.author);
    }
    for m in messages {
        if let Some(target) = m.reply_to.as_deref() {
            if let Some(antecedent) = by_id.get(target) {
                // B replies to A: information flows A→B.
                builder.add_interaction(&antecedent.author, &m.author, 1);
            }
        }
    }
    builder.build()
}

/// Sliding-window specification over message ordinals. Offsets run
/// 0, step, 2·step, … while offset + ws ≤ M; `step == ws` gives the
/// disjoint windows used for snapshot series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowSpec {
    ws: usize,
    step: usize,
}

impl WindowSpec {
    pub fn new(ws: usize, step: usize) -> Result<Self, GraphError> {
        if ws == 0 || step == 0 {
            return Err(GraphError::BadWindowSpec { ws, step });
        }
        Ok(WindowSpec { ws, step })
    }

    /// Disjoint windows: step equals the window size.
    pub fn disjoint(ws: usize) -> Result<Self, GraphError> {
        Self::new(ws, ws)
    }

    pub fn ws(&self) -> usize {
        self.ws
    }

    pub fn step(&self) -> usize {
        self.step
    }

    pub fn offsets(&self, m: usize) -> impl Iterator<Item = usize> + '_ {
        (0..).map(|i| i * self.step).take_while(move |off| off + self.ws <= m)
    }
}

/// One window's network plus its ordinal range [window_start, window_end).
#[derive(Debug, Clone)]
pub struct Snapshot {
    pub window_start: usize,
    pub window_end: usize,
    pub network: InteractionNetwork,
}

/// Networks for every window of `spec` over the corpus, in offset order.
/// A window size exceeding the corpus is an error naming both numbers.
pub fn window_snapshots(corpus: &Corpus, spec: &WindowSpec) -> Result<Vec<Snapshot>, GraphError> {
    let m = corpus.len();
    if spec.ws > m {
        return Err(GraphError::WindowTooLarge { ws: spec.ws, m });
    }
    Ok(spec
        .offsets(m)
        .map(|start| {
            let end = start + spec.ws;
            Snapshot {
                window_start: start,
                window_end: end,
                network: build_network(&corpus.messages[start..end]),
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::build_corpus;

    fn msg(id: &str, author: &str, ts: i64, reply_to: Option<&str>) -> Message {
        Message {
            id: id.to_string(),
            author: author.to_string(),
            timestamp: ts,
            reply_to: reply_to.map(str::to_string),
            ordinal: 0,
        }
    }

    #[test]
    fn reply_chain_accumulates_weights() {
        // B replies to A twice, C replies to B once.
        let messages = vec![
            msg("a1", "a@x", 1, None),
            msg("b1", "b@x", 2, Some("a1")),
            msg("a2", "a@x", 3, None),
            msg("b2", "b@x", 4, Some("a2")),
            msg("c1", "c@x", 5, Some("b1")),
        ];
        let net = build_network(&messages);
        assert_eq!(net.n_vertices(), 3);
        assert_eq!(net.n_edges(), 2);
        let (a, b, c) = (
            net.index_of("a@x").unwrap(),
            net.index_of("b@x").unwrap(),
            net.index_of("c@x").unwrap(),
        );
        assert_eq!(net.weight(a, b), 2);
        assert_eq!(net.weight(b, c), 1);
        assert_eq!(net.weight(b, a), 0);
        assert_eq!(net.total_weight(), 3);
    }

    #[test]
    fn self_reply_creates_no_edge() {
        let messages = vec![
            msg("a1", "a@x", 1, None),
            msg("a2", "a@x", 2, Some("a1")),
        ];
        let net = build_network(&messages);
        assert_eq!(net.n_vertices(), 1);
        assert_eq!(net.n_edges(), 0);
    }

    #[test]
    fn reply_outside_slice_leaves_sender_isolated() {
        let messages = vec![
            msg("b1", "b@x", 2, Some("a0-not-in-slice")),
            msg("c1", "c@x", 3, None),
        ];
        let net = build_network(&messages);
        assert_eq!(net.n_vertices(), 2);
        assert_eq!(net.n_edges(), 0);
        let b = net.index_of("b@x").unwrap();
        assert!(net.neighbors(b).is_empty());
    }

    #[test]
    fn vertices_are_lexicographic() {
        let messages = vec![
            msg("m1", "zoe@x", 1, None),
            msg("m2", "adam@x", 2, Some("m1")),
            msg("m3", "mia@x", 3, Some("m1")),
        ];
        let net = build_network(&messages);
        assert_eq!(net.labels(), &["adam@x", "mia@x", "zoe@x"]);
        // zoe→adam and zoe→mia edges exist regardless of label order.
        let z = net.index_of("zoe@x").unwrap();
        assert_eq!(net.out_edges(z).len(), 2);
    }

    #[test]
    fn message_order_within_slice_is_irrelevant() {
        let mut messages = vec![
            msg("a1", "a@x", 1, None),
            msg("b1", "b@x", 2, Some("a1")),
            msg("c1", "c@x", 3, Some("a1")),
            msg("a2", "a@x", 4, Some("b1")),
        ];
        let before = build_network(&messages);
        messages.reverse();
        messages.swap(0, 2);
        let after = build_network(&messages);
        assert_eq!(before, after);
        assert_eq!(before.edge_list_csv(), after.edge_list_csv());
    }

    #[test]
    fn window_offsets() {
        let spec = WindowSpec::new(100, 50).unwrap();
        let offs: Vec<usize> = spec.offsets(150).collect();
        assert_eq!(offs, vec![0, 50]);

        let spec = WindowSpec::disjoint(1000).unwrap();
        assert_eq!(spec.offsets(20000).count(), 20);

        let spec = WindowSpec::new(10, 3).unwrap();
        let offs: Vec<usize> = spec.offsets(10).collect();
        assert_eq!(offs, vec![0]);
    }

    #[test]
    fn window_errors() {
        assert!(matches!(
            WindowSpec::new(0, 5),
            Err(GraphError::BadWindowSpec { .. })
        ));
        let messages = vec![msg("a", "a@x", 1, None)];
        let corpus = build_corpus(messages, None, 0).unwrap();
        let err = window_snapshots(&corpus, &WindowSpec::disjoint(50).unwrap()).unwrap_err();
        let text = err.to_string();
        assert!(text.contains("50") && text.contains('1'), "names both sizes: {text}");
    }

    #[test]
    fn snapshots_cover_disjoint_ranges() {
        let messages: Vec<Message> = (0..10)
            .map(|i| msg(&format!("m{i}"), &format!("u{}@x", i % 3), i as i64, None))
            .collect();
        let corpus = build_corpus(messages, None, 0).unwrap();
        let snaps = window_snapshots(&corpus, &WindowSpec::disjoint(5).unwrap()).unwrap();
        assert_eq!(snaps.len(), 2);
        assert_eq!((snaps[0].window_start, snaps[0].window_end), (0, 5));
        assert_eq!((snaps[1].window_start, snaps[1].window_end), (5, 10));
    }

    #[test]
    fn giant_component_fraction_counts_weak_components() {
        let mut b = NetworkBuilder::new();
        // Component {a,b,c}: a→b, c→b (weakly connected). Component {d,e}.
        b.add_interaction("a", "b", 1);
        b.add_interaction("c", "b", 2);
        b.add_interaction("d", "e", 1);
        let net = b.build();
        assert!((net.giant_component_fraction() - 0.6).abs() < 1e-12);

        let empty = NetworkBuilder::new().build();
        assert_eq!(empty.giant_component_fraction(), 0.0);
    }

    #[test]
    fn edge_csv_is_sorted_and_stable() {
        let mut b = NetworkBuilder::new();
        b.add_interaction("zoe", "adam", 3);
        b.add_interaction("adam", "zoe", 1);
        b.add_interaction("adam", "mia", 2);
        let net = b.build();
        assert_eq!(
            net.edge_list_csv(),
            "src,dst,weight\nadam,mia,2\nadam,zoe,1\nzoe,adam,3\n"
        );
        assert_eq!(net.vertex_list_csv(), "vertex\nadam\nmia\nzoe\n");
    }

    #[test]
    fn in_out_weight_books_balance() {
        let mut b = NetworkBuilder::new();
        for (f, t, w) in [("a", "b", 2), ("b", "c", 3), ("c", "a", 1), ("a", "c", 4)] {
            b.add_interaction(f, t, w);
        }
        let net = b.build();
        let out_sum: u64 = (0..net.n_vertices())
            .flat_map(|v| net.out_edges(v).iter().map(|&(_, w)| w))
            .sum();
        let in_sum: u64 = (0..net.n_vertices())
            .flat_map(|v| net.in_edges(v).iter().map(|&(_, w)| w))
            .sum();
        assert_eq!(out_sum, net.total_weight());
        assert_eq!(in_sum, net.total_weight());
        assert_eq!(net.n_edges(), 4);
    }
}
