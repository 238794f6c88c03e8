//! Erdős sectioning: splits vertices into periphery / intermediary / hub by
//! comparing the observed distribution of a connectivity value against the
//! equivalent uniformly-random (binomial) null model.
//!
//! The null keeps the observed edge density: p_e = z/(N(N−1)). Total-degree
//! values are compared against Binomial(2(N−1), p_e), directional ones
//! against Binomial(N−1, p_e); strengths are first rescaled by the mean
//! edge weight and rounded, then treated like degrees. Observed values are
//! grouped into ascending bins of at least η vertices (the trailing
//! remainder may be smaller); a bin whose empirical mass falls *below* its
//! null mass is intermediary — the random model over-represents it. The
//! intermediary bins delimit k_L and k_R, and every vertex classifies by
//! k̄ ≤ k_L (periphery), k_L < k̄ ≤ k_R (intermediary), k̄ > k_R (hub).
//!
//! Bins are built over observed values: each bin spans from its smallest to
//! its largest observed member and the null mass integrates exactly that
//! span. Leading/trailing never-observed values belong to no bin, which is
//! what makes η = 1 degenerate cleanly into a per-observed-value
//! comparison.

use crate::graph::{InteractionNetwork, Snapshot};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Default minimum vertices per comparison bin.
pub const DEFAULT_ETA: usize = 10;

#[derive(Debug, Error)]
pub enum SectioningError {
    #[error("sectioning needs at least 2 vertices, network has {0}")]
    TooFewVertices(usize),
    #[error("strength rescaling undefined: network has no edges")]
    NoEdges,
    #[error("compound classification needs the six simple partitions over one vertex set")]
    MismatchedPartitions,
    #[error("compound classification input is not a partition (criterion {0})")]
    NonPartitionInput(Criterion),
}

// ---------------------------------------------------------------------------
// Criteria and sector sets
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sector {
    Periphery,
    Intermediary,
    Hub,
}

impl Sector {
    pub const ALL: [Sector; 3] = [Sector::Periphery, Sector::Intermediary, Sector::Hub];

    pub fn name(self) -> &'static str {
        match self {
            Sector::Periphery => "periphery",
            Sector::Intermediary => "intermediary",
            Sector::Hub => "hub",
        }
    }
}

/// A (possibly empty, possibly multiple) sector assignment. Simple criteria
/// and C3–C6 always assign exactly one sector; C1 may assign none and C2
/// several.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub struct SectorSet(u8);

impl SectorSet {
    pub const EMPTY: SectorSet = SectorSet(0);

    fn bit(sector: Sector) -> u8 {
        match sector {
            Sector::Periphery => 1,
            Sector::Intermediary => 2,
            Sector::Hub => 4,
        }
    }

    pub fn single(sector: Sector) -> Self {
        SectorSet(Self::bit(sector))
    }

    pub fn insert(&mut self, sector: Sector) {
        self.0 |= Self::bit(sector);
    }

    pub fn contains(self, sector: Sector) -> bool {
        self.0 & Self::bit(sector) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// The sector when the assignment is exactly one.
    pub fn as_single(self) -> Option<Sector> {
        let mut it = self.iter();
        match (it.next(), it.next()) {
            (Some(s), None) => Some(s),
            _ => None,
        }
    }

    pub fn iter(self) -> impl Iterator<Item = Sector> {
        Sector::ALL.into_iter().filter(move |&s| self.contains(s))
    }

    /// Swaps the periphery and hub roles; intermediary is untouched.
    pub fn swap_roles(self) -> SectorSet {
        let mut out = SectorSet::EMPTY;
        for s in self.iter() {
            out.insert(match s {
                Sector::Periphery => Sector::Hub,
                Sector::Hub => Sector::Periphery,
                Sector::Intermediary => Sector::Intermediary,
            });
        }
        out
    }
}

impl fmt::Display for SectorSet {
    /// "unclassified" when empty, otherwise members joined with '+' in
    /// periphery,intermediary,hub order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("unclassified");
        }
        let mut first = true;
        for s in self.iter() {
            if !first {
                f.write_str("+")?;
            }
            f.write_str(s.name())?;
            first = false;
        }
        Ok(())
    }
}

/// The six simple connectivity criteria γ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SimpleCriterion {
    Degree,
    InDegree,
    OutDegree,
    Strength,
    InStrength,
    OutStrength,
}

pub const ALL_SIMPLE: [SimpleCriterion; 6] = [
    SimpleCriterion::Degree,
    SimpleCriterion::InDegree,
    SimpleCriterion::OutDegree,
    SimpleCriterion::Strength,
    SimpleCriterion::InStrength,
    SimpleCriterion::OutStrength,
];

impl SimpleCriterion {
    pub fn token(self) -> &'static str {
        match self {
            SimpleCriterion::Degree => "k",
            SimpleCriterion::InDegree => "kin",
            SimpleCriterion::OutDegree => "kout",
            SimpleCriterion::Strength => "s",
            SimpleCriterion::InStrength => "sin",
            SimpleCriterion::OutStrength => "sout",
        }
    }

    /// Directional criteria compare against Binomial(N−1, p_e); total ones
    /// against Binomial(2(N−1), p_e).
    fn is_directional(self) -> bool {
        !matches!(self, SimpleCriterion::Degree | SimpleCriterion::Strength)
    }
}

/// The six compound combinations C1–C6 over all simple criteria.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CompoundCriterion {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
}

impl CompoundCriterion {
    pub fn token(self) -> &'static str {
        match self {
            CompoundCriterion::C1 => "C1",
            CompoundCriterion::C2 => "C2",
            CompoundCriterion::C3 => "C3",
            CompoundCriterion::C4 => "C4",
            CompoundCriterion::C5 => "C5",
            CompoundCriterion::C6 => "C6",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Criterion {
    Simple(SimpleCriterion),
    Compound(CompoundCriterion),
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Criterion::Simple(g) => f.write_str(g.token()),
            Criterion::Compound(c) => f.write_str(c.token()),
        }
    }
}

impl std::str::FromStr for Criterion {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_lowercase();
        let simple = ALL_SIMPLE.iter().find(|g| g.token() == lower);
        if let Some(&g) = simple {
            return Ok(Criterion::Simple(g));
        }
        use CompoundCriterion::*;
        let compound = match lower.as_str() {
            "c1" => C1,
            "c2" => C2,
            "c3" => C3,
            "c4" => C4,
            "c5" => C5,
            "c6" => C6,
            _ => {
                return Err(format!(
                    "unknown criterion {s:?}: expected one of k, kin, kout, s, sin, sout, C1..C6"
                ))
            }
        };
        Ok(Criterion::Compound(compound))
    }
}

// ---------------------------------------------------------------------------
// Null model and binomial PMF
// ---------------------------------------------------------------------------

/// How the mean edge weight for strength rescaling is formed. `Mean` is the
/// plain mean weight Σs_i/(2z); `Inverse` is its reciprocal, kept only for
/// comparison runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MeanWeightForm {
    #[default]
    Mean,
    Inverse,
}

/// The Erdős–Rényi-equivalent null: same vertex count, same edge density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NullModel {
    pub n_vertices: usize,
    pub n_edges: usize,
    /// p_e = z / (N(N−1)).
    pub p_e: f64,
    /// w̄, the mean edge weight used for strength rescaling; 0 when z = 0.
    pub mean_weight: f64,
}

pub fn null_model(net: &InteractionNetwork) -> Result<NullModel, SectioningError> {
    null_model_with(net, MeanWeightForm::Mean)
}

pub fn null_model_with(
    net: &InteractionNetwork,
    form: MeanWeightForm,
) -> Result<NullModel, SectioningError> {
    let n = net.n_vertices();
    if n < 2 {
        return Err(SectioningError::TooFewVertices(n));
    }
    let z = net.n_edges();
    let p_e = z as f64 / (n as f64 * (n - 1) as f64);
    // Σ_i s_i double-counts every edge weight, so Σs/(2z) is exactly
    // total_weight / z.
    let mean_weight = if z == 0 {
        0.0
    } else {
        match form {
            MeanWeightForm::Mean => net.total_weight() as f64 / z as f64,
            MeanWeightForm::Inverse => z as f64 / net.total_weight() as f64,
        }
    };
    Ok(NullModel { n_vertices: n, n_edges: z, p_e, mean_weight })
}

/// Binomial(n, p) evaluated in log space, stable for n up to 10^5.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NullPmf {
    pub n: u64,
    pub p: f64,
}

impl NullPmf {
    pub fn pmf(&self, k: u64) -> f64 {
        if k > self.n {
            return 0.0;
        }
        if self.p <= 0.0 {
            return if k == 0 { 1.0 } else { 0.0 };
        }
        if self.p >= 1.0 {
            return if k == self.n { 1.0 } else { 0.0 };
        }
        self.ln_pmf(k).exp()
    }

    /// Σ pmf(k) for k in [lo, hi], inclusive, by a log-space recurrence so
    /// wide spans cost O(hi−lo) instead of O((hi−lo)·n).
    pub fn mass(&self, lo: u64, hi: u64) -> f64 {
        if lo > hi || lo > self.n {
            return 0.0;
        }
        let hi = hi.min(self.n);
        if self.p <= 0.0 {
            return if lo == 0 { 1.0 } else { 0.0 };
        }
        if self.p >= 1.0 {
            return if hi == self.n { 1.0 } else { 0.0 };
        }
        let log_odds = self.p.ln() - (1.0 - self.p).ln();
        let mut ln_term = self.ln_pmf(lo);
        let mut sum = NeumaierSum::default();
        sum.add(ln_term.exp());
        for k in lo..hi {
            // pmf(k+1)/pmf(k) = (n−k)/(k+1) · p/(1−p)
            ln_term += ((self.n - k) as f64).ln() - ((k + 1) as f64).ln() + log_odds;
            sum.add(ln_term.exp());
        }
        sum.value()
    }

    /// ln C(n,k) + k ln p + (n−k) ln(1−p), with the binomial coefficient
    /// accumulated over the smaller tail under compensated summation.
    fn ln_pmf(&self, k: u64) -> f64 {
        let n = self.n;
        let m = k.min(n - k);
        let mut ln_choose = NeumaierSum::default();
        for i in 1..=m {
            ln_choose.add((((n - m + i) as f64) / i as f64).ln());
        }
        ln_choose.value() + k as f64 * self.p.ln() + (n - k) as f64 * (1.0 - self.p).ln()
    }
}

/// Kahan–Neumaier compensated accumulator.
#[derive(Debug, Default, Clone, Copy)]
struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// P(k) for total-degree-like values: Binomial(2(N−1), p_e).
pub fn null_pmf_total(model: &NullModel, k: u64) -> f64 {
    NullPmf { n: 2 * (model.n_vertices as u64 - 1), p: model.p_e }.pmf(k)
}

/// P̂(k) for one-way values: Binomial(N−1, p_e).
pub fn null_pmf_directional(model: &NullModel, k: u64) -> f64 {
    NullPmf { n: model.n_vertices as u64 - 1, p: model.p_e }.pmf(k)
}

// ---------------------------------------------------------------------------
// Rescaled values, binning, thresholds
// ---------------------------------------------------------------------------

/// Nearest integer, halves up.
fn round_half_up(x: f64) -> u64 {
    (x + 0.5).floor().max(0.0) as u64
}

/// The per-vertex comparison value k̄ for a criterion: degrees directly,
/// strengths divided by w̄ and rounded. Strength criteria are undefined on
/// edgeless networks.
pub fn rescaled_values(
    net: &InteractionNetwork,
    criterion: SimpleCriterion,
) -> Result<Vec<u64>, SectioningError> {
    rescaled_values_with(net, criterion, MeanWeightForm::Mean)
}

pub fn rescaled_values_with(
    net: &InteractionNetwork,
    criterion: SimpleCriterion,
    form: MeanWeightForm,
) -> Result<Vec<u64>, SectioningError> {
    let model = null_model_with(net, form)?;
    let n = net.n_vertices();
    let values = match criterion {
        SimpleCriterion::Degree => (0..n).map(|v| net.neighbors(v).len() as u64).collect(),
        SimpleCriterion::InDegree => (0..n).map(|v| net.in_edges(v).len() as u64).collect(),
        SimpleCriterion::OutDegree => (0..n).map(|v| net.out_edges(v).len() as u64).collect(),
        SimpleCriterion::Strength
        | SimpleCriterion::InStrength
        | SimpleCriterion::OutStrength => {
            if model.n_edges == 0 {
                return Err(SectioningError::NoEdges);
            }
            (0..n)
                .map(|v| {
                    let s_in: u64 = net.in_edges(v).iter().map(|&(_, w)| w).sum();
                    let s_out: u64 = net.out_edges(v).iter().map(|&(_, w)| w).sum();
                    let s = match criterion {
                        SimpleCriterion::Strength => s_in + s_out,
                        SimpleCriterion::InStrength => s_in,
                        _ => s_out,
                    };
                    round_half_up(s as f64 / model.mean_weight)
                })
                .collect()
        }
    };
    Ok(values)
}

/// One comparison bin over observed values.
#[derive(Debug, Clone, PartialEq)]
pub struct Bin {
    pub k_min: u64,
    pub k_max: u64,
    pub vertex_count: usize,
    pub empirical_mass: f64,
    pub null_mass: f64,
}

impl Bin {
    /// Intermediary: the null model holds more mass here than observed.
    pub fn is_intermediary(&self) -> bool {
        self.empirical_mass < self.null_mass
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BinnedDistribution {
    pub bins: Vec<Bin>,
    pub eta: usize,
}

/// Greedy ascending binning: observed values are grouped until a bin holds
/// at least η vertices; the trailing remainder forms the last bin even when
/// smaller. Empirical mass is vertices-in-bin / total; null mass integrates
/// the PMF over [k_min, k_max].
pub fn bin_and_compare(values: &[u64], pmf: &NullPmf, eta: usize) -> BinnedDistribution {
    assert!(eta >= 1, "eta must be at least 1");
    let total = values.len();
    let mut histogram: BTreeMap<u64, usize> = BTreeMap::new();
    for &v in values {
        *histogram.entry(v).or_insert(0) += 1;
    }

    let mut bins = Vec::new();
    let mut start: Option<u64> = None;
    let mut last = 0u64;
    let mut count = 0usize;
    for (&value, &n_here) in &histogram {
        if start.is_none() {
            start = Some(value);
        }
        last = value;
        count += n_here;
        if count >= eta {
            bins.push(make_bin(start.take().unwrap(), last, count, total, pmf));
            count = 0;
        }
    }
    if let Some(s) = start {
        bins.push(make_bin(s, last, count, total, pmf));
    }
    BinnedDistribution { bins, eta }
}

fn make_bin(k_min: u64, k_max: u64, vertex_count: usize, total: usize, pmf: &NullPmf) -> Bin {
    Bin {
        k_min,
        k_max,
        vertex_count,
        empirical_mass: vertex_count as f64 / total as f64,
        null_mass: pmf.mass(k_min, k_max),
    }
}

/// (k_L, k_R) from the first and last intermediary bin; `None` when no bin
/// is intermediary (the degenerate case).
pub fn thresholds(binned: &BinnedDistribution) -> Option<(i64, i64)> {
    let first = binned.bins.iter().find(|b| b.is_intermediary())?;
    let last = binned.bins.iter().rev().find(|b| b.is_intermediary())?;
    Some((first.k_min as i64 - 1, last.k_max as i64))
}

// ---------------------------------------------------------------------------
// Partitions
// ---------------------------------------------------------------------------

/// Why a partition came out degenerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degeneracy {
    /// The network has no edges at all: everything is periphery.
    NoEdges,
    /// No bin fell below the null: everything is intermediary.
    NoIntermediaryBin,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ErdosPartition {
    pub criterion: Criterion,
    /// Vertex labels, same order as the source network.
    pub labels: Vec<String>,
    pub assignments: Vec<SectorSet>,
    /// Degree-scale thresholds; `None` for compound or degenerate results.
    pub k_l: Option<i64>,
    pub k_r: Option<i64>,
    pub degeneracy: Option<Degeneracy>,
}

impl ErdosPartition {
    /// Builds a partition from explicit per-vertex sectors (used by tests
    /// and by anything replaying stored assignments).
    pub fn from_sectors(criterion: Criterion, labels: Vec<String>, sectors: Vec<Sector>) -> Self {
        assert_eq!(labels.len(), sectors.len(), "one sector per label");
        let assignments = sectors.into_iter().map(SectorSet::single).collect();
        ErdosPartition { criterion, labels, assignments, k_l: None, k_r: None, degeneracy: None }
    }

    pub fn len(&self) -> usize {
        self.assignments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    /// Number of vertices whose assignment includes `sector`.
    pub fn count(&self, sector: Sector) -> usize {
        self.assignments.iter().filter(|a| a.contains(sector)).count()
    }

    pub fn fraction(&self, sector: Sector) -> f64 {
        self.count(sector) as f64 / self.len() as f64
    }

    pub fn unclassified_count(&self) -> usize {
        self.assignments.iter().filter(|a| a.is_empty()).count()
    }

    pub fn multi_count(&self) -> usize {
        self.assignments.iter().filter(|a| a.len() > 1).count()
    }

    /// True when every vertex holds exactly one sector.
    pub fn is_partition(&self) -> bool {
        self.assignments.iter().all(|a| a.len() == 1)
    }

    /// The same partition with hub and periphery roles exchanged.
    pub fn swap_roles(&self) -> ErdosPartition {
        ErdosPartition {
            criterion: self.criterion,
            labels: self.labels.clone(),
            assignments: self.assignments.iter().map(|a| a.swap_roles()).collect(),
            k_l: self.k_l,
            k_r: self.k_r,
            degeneracy: self.degeneracy,
        }
    }
}

/// Classifies every vertex under one simple criterion. Degenerate networks
/// short-circuit: no edges → all periphery; no intermediary bin → all
/// intermediary. Both are flagged.
pub fn classify_simple(
    net: &InteractionNetwork,
    criterion: SimpleCriterion,
    eta: usize,
) -> Result<ErdosPartition, SectioningError> {
    classify_simple_with(net, criterion, eta, MeanWeightForm::Mean)
}

pub fn classify_simple_with(
    net: &InteractionNetwork,
    criterion: SimpleCriterion,
    eta: usize,
    form: MeanWeightForm,
) -> Result<ErdosPartition, SectioningError> {
    let model = null_model_with(net, form)?;
    let labels = net.labels().to_vec();
    let n = labels.len();

    if model.n_edges == 0 {
        return Ok(ErdosPartition {
            criterion: Criterion::Simple(criterion),
            labels,
            assignments: vec![SectorSet::single(Sector::Periphery); n],
            k_l: None,
            k_r: None,
            degeneracy: Some(Degeneracy::NoEdges),
        });
    }

    let values = rescaled_values_with(net, criterion, form)?;
    let trials = if criterion.is_directional() {
        model.n_vertices as u64 - 1
    } else {
        2 * (model.n_vertices as u64 - 1)
    };
    let pmf = NullPmf { n: trials, p: model.p_e };
    let binned = bin_and_compare(&values, &pmf, eta);

    let Some((k_l, k_r)) = thresholds(&binned) else {
        return Ok(ErdosPartition {
            criterion: Criterion::Simple(criterion),
            labels,
            assignments: vec![SectorSet::single(Sector::Intermediary); n],
            k_l: None,
            k_r: None,
            degeneracy: Some(Degeneracy::NoIntermediaryBin),
        });
    };

    let assignments = values
        .iter()
        .map(|&v| {
            let v = v as i64;
            let sector = if v <= k_l {
                Sector::Periphery
            } else if v <= k_r {
                Sector::Intermediary
            } else {
                Sector::Hub
            };
            SectorSet::single(sector)
        })
        .collect();

    Ok(ErdosPartition {
        criterion: Criterion::Simple(criterion),
        labels,
        assignments,
        k_l: Some(k_l),
        k_r: Some(k_r),
        degeneracy: None,
    })
}

/// Combines the six simple partitions into a compound classification.
/// Inputs must cover the same vertices in the same order and be true
/// partitions (exactly one sector each).
pub fn classify_compound(
    parts: &[ErdosPartition],
    which: CompoundCriterion,
) -> Result<ErdosPartition, SectioningError> {
    if parts.len() != ALL_SIMPLE.len() {
        return Err(SectioningError::MismatchedPartitions);
    }
    let labels = parts[0].labels.clone();
    for p in parts {
        if p.labels != labels {
            return Err(SectioningError::MismatchedPartitions);
        }
        if !p.is_partition() {
            return Err(SectioningError::NonPartitionInput(p.criterion));
        }
    }

    let n = labels.len();
    let mut assignments = Vec::with_capacity(n);
    for v in 0..n {
        let sectors: Vec<Sector> = parts
            .iter()
            .map(|p| p.assignments[v].as_single().expect("checked partition"))
            .collect();
        assignments.push(combine(&sectors, which));
    }

    Ok(ErdosPartition {
        criterion: Criterion::Compound(which),
        labels,
        assignments,
        k_l: None,
        k_r: None,
        degeneracy: None,
    })
}

fn combine(sectors: &[Sector], which: CompoundCriterion) -> SectorSet {
    use Sector::*;
    let all = |s: Sector| sectors.iter().all(|&x| x == s);
    let any = |s: Sector| sectors.iter().any(|&x| x == s);
    match which {
        // Unanimity or nothing.
        CompoundCriterion::C1 => {
            if all(sectors[0]) {
                SectorSet::single(sectors[0])
            } else {
                SectorSet::EMPTY
            }
        }
        // Union of everything claimed.
        CompoundCriterion::C2 => {
            let mut set = SectorSet::EMPTY;
            for &s in sectors {
                set.insert(s);
            }
            set
        }
        // Hub only if unanimous; intermediary while nothing is periphery.
        CompoundCriterion::C3 => SectorSet::single(if all(Hub) {
            Hub
        } else if !any(Periphery) {
            Intermediary
        } else {
            Periphery
        }),
        // Any hub claim wins, then any intermediary claim.
        CompoundCriterion::C4 => SectorSet::single(if any(Hub) {
            Hub
        } else if any(Intermediary) {
            Intermediary
        } else {
            Periphery
        }),
        // Hub only if unanimous; any extreme claim at all drags to periphery.
        CompoundCriterion::C5 => SectorSet::single(if all(Hub) {
            Hub
        } else if any(Periphery) || any(Hub) {
            Periphery
        } else {
            Intermediary
        }),
        // Any hub claim wins, then any periphery claim.
        CompoundCriterion::C6 => SectorSet::single(if any(Hub) {
            Hub
        } else if any(Periphery) {
            Periphery
        } else {
            Intermediary
        }),
    }
}

/// Classifies under any criterion; compound ones compute their six simple
/// constituents on the fly.
pub fn classify(
    net: &InteractionNetwork,
    criterion: Criterion,
    eta: usize,
) -> Result<ErdosPartition, SectioningError> {
    match criterion {
        Criterion::Simple(g) => classify_simple(net, g, eta),
        Criterion::Compound(c) => {
            let parts: Vec<ErdosPartition> = ALL_SIMPLE
                .iter()
                .map(|&g| classify_simple(net, g, eta))
                .collect::<Result<_, _>>()?;
            classify_compound(&parts, c)
        }
    }
}

// ---------------------------------------------------------------------------
// Timeline over snapshots
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
pub struct TimelineEntry {
    pub window_start: usize,
    pub hub_frac: f64,
    pub inter_frac: f64,
    pub peri_frac: f64,
    /// C1's unclassified or C2's multiply-classified fraction; 0 for
    /// partitioning criteria.
    pub extra_frac: f64,
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SectorTimeline {
    pub criterion: Criterion,
    pub eta: usize,
    pub entries: Vec<TimelineEntry>,
}

/// Sector fractions per snapshot, in window order.
pub fn sector_timeline(
    snapshots: &[Snapshot],
    criterion: Criterion,
    eta: usize,
) -> Result<SectorTimeline, SectioningError> {
    let mut entries = Vec::with_capacity(snapshots.len());
    for snap in snapshots {
        let partition = classify(&snap.network, criterion, eta)?;
        let extra_frac = match criterion {
            Criterion::Compound(CompoundCriterion::C1) => {
                partition.unclassified_count() as f64 / partition.len() as f64
            }
            Criterion::Compound(CompoundCriterion::C2) => {
                partition.multi_count() as f64 / partition.len() as f64
            }
            _ => 0.0,
        };
        entries.push(TimelineEntry {
            window_start: snap.window_start,
            hub_frac: partition.fraction(Sector::Hub),
            inter_frac: partition.fraction(Sector::Intermediary),
            peri_frac: partition.fraction(Sector::Periphery),
            extra_frac,
            degenerate: partition.degeneracy.is_some(),
        });
    }
    Ok(SectorTimeline { criterion, eta, entries })
}
