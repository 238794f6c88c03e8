//! Reconstructs who-replies-to-whom interaction networks from message
//! archives (mbox, JSONL, CSV) and analyzes them: per-vertex topological
//! metrics, Erdős sectioning against a binomial null model, circular
//! statistics of activity over calendar timescales, and PCA of metric
//! matrices aggregated across sliding-window snapshots.
//!
//! The pipeline is deterministic end to end: corpora are totally ordered by
//! (timestamp, id), vertices are held in lexicographic order, and the
//! synthetic generators are seeded.

pub mod graph;
pub mod ingest;
pub mod matrix;
pub mod metrics;
pub mod pca;
pub mod sectioning;
pub mod synth;
pub mod timestats;

pub use graph::{build_network, window_snapshots, InteractionNetwork, Snapshot, WindowSpec};
pub use ingest::{build_corpus, Corpus, IngestError, Message, ParseReport};
pub use matrix::Matrix;
pub use metrics::{metrics_matrix, vertex_metrics, VertexMetrics, METRIC_NAMES};
pub use pca::{aggregate_pca, pca, pearson, spearman, AggregatedPca, PcaError, PcaResult};
pub use sectioning::{
    classify_compound, classify_simple, sector_timeline, CompoundCriterion, Criterion,
    ErdosPartition, Sector, SectorSet, SimpleCriterion, DEFAULT_ETA,
};
pub use synth::{
    erdos_renyi_network, messages_from_network, preferential_attachment_network, reply_process,
    ReplyProcessParams, SynthError,
};
pub use timestats::{
    activity_concentration, activity_histogram, circular_stats, grouped_histogram,
    ActivityHistogram, CircularStats, ConcentrationSummary, Timescale, TimestatsError,
};
