//! Circular statistics and activity histograms over six calendar
//! timescales, all in UTC.
//!
//! Each timestamp is mapped to a phase θ = measurement·2π/T on its scale's
//! cycle; the circular moments m_n = (1/N)Σ e^{inθ} give the mean direction
//! θ_μ = Arg(m₁) ∈ (−π, π], the circular variance 1−R₁, the circular
//! standard deviation √(−2 ln R₁), and the circular dispersion
//! (1−R₂)/(2R₁²). The rescaled mean (T/2π)·θ_μ reads in natural units
//! (hours, weekdays, …) and may be negative. Month-day cycles are
//! calendar-aware: T is the actual length of each message's month, and the
//! rescaled mean uses the mean per-message period.

use crate::ingest::Corpus;
use chrono::{DateTime, Datelike, Utc};
use num_complex::Complex64;
use std::collections::HashMap;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TimestatsError {
    #[error("circular statistics need at least one timestamp")]
    EmptyInput,
    #[error("mean direction undefined: resultant length is zero (variance 1)")]
    MeanUndefined { variance: f64 },
    #[error("group width {width} does not divide the {units}-unit cycle")]
    BadGroupWidth { width: usize, units: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Timescale {
    /// Second within the minute, T = 60.
    Seconds,
    /// Minute within the hour, T = 60.
    Minutes,
    /// Hour within the day, T = 24.
    Hours,
    /// Day of the week (Monday = 0), T = 7.
    Weekdays,
    /// Day of the month, T = that month's length (28–31).
    Monthdays,
    /// Month of the year, T = 12.
    Months,
}

impl Timescale {
    pub const ALL: [Timescale; 6] = [
        Timescale::Seconds,
        Timescale::Minutes,
        Timescale::Hours,
        Timescale::Weekdays,
        Timescale::Monthdays,
        Timescale::Months,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Timescale::Seconds => "seconds",
            Timescale::Minutes => "minutes",
            Timescale::Hours => "hours",
            Timescale::Weekdays => "weekdays",
            Timescale::Monthdays => "monthdays",
            Timescale::Months => "months",
        }
    }

    /// Number of histogram units (month-days use the full 31 slots).
    pub fn units(self) -> usize {
        match self {
            Timescale::Seconds | Timescale::Minutes => 60,
            Timescale::Hours => 24,
            Timescale::Weekdays => 7,
            Timescale::Monthdays => 31,
            Timescale::Months => 12,
        }
    }

    /// Cycle length for this particular timestamp; constant except for
    /// month-days.
    pub fn period_at(self, ts: i64) -> f64 {
        match self {
            Timescale::Monthdays => {
                let dt = utc(ts);
                days_in_month(dt.year(), dt.month()) as f64
            }
            _ => self.units() as f64,
        }
    }

    /// The measurement in [0, T) for this timestamp.
    pub fn measurement(self, ts: i64) -> f64 {
        match self {
            Timescale::Seconds => ts.rem_euclid(60) as f64,
            Timescale::Minutes => ts.div_euclid(60).rem_euclid(60) as f64,
            Timescale::Hours => ts.div_euclid(3600).rem_euclid(24) as f64,
            Timescale::Weekdays => utc(ts).weekday().num_days_from_monday() as f64,
            Timescale::Monthdays => (utc(ts).day() - 1) as f64,
            Timescale::Months => utc(ts).month0() as f64,
        }
    }

    /// Histogram slot (0-based) for the timestamp.
    pub fn unit_index(self, ts: i64) -> usize {
        self.measurement(ts) as usize
    }

    /// Display label for a slot: numbers for clock scales, day numbers for
    /// month-days, names for weekdays and months.
    pub fn unit_label(self, index: usize) -> String {
        match self {
            Timescale::Seconds | Timescale::Minutes | Timescale::Hours => index.to_string(),
            Timescale::Monthdays => (index + 1).to_string(),
            Timescale::Weekdays => {
                ["Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun"][index].to_string()
            }
            Timescale::Months => [
                "Jan", "Feb", "Mar", "Apr", "May", "Jun", "Jul", "Aug", "Sep", "Oct", "Nov",
                "Dec",
            ][index]
                .to_string(),
        }
    }
}

impl std::str::FromStr for Timescale {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Timescale::ALL
            .into_iter()
            .find(|t| t.token() == s.trim().to_lowercase())
            .ok_or_else(|| {
                format!(
                    "unknown timescale {s:?}: expected seconds, minutes, hours, weekdays, monthdays or months"
                )
            })
    }
}

fn utc(ts: i64) -> DateTime<Utc> {
    DateTime::<Utc>::from_timestamp(ts, 0).expect("epoch seconds within chrono range")
}

fn days_in_month(year: i32, month: u32) -> u32 {
    let (ny, nm) = if month == 12 { (year + 1, 1) } else { (year, month + 1) };
    let first_next = chrono::NaiveDate::from_ymd_opt(ny, nm, 1).expect("valid month start");
    let first_this = chrono::NaiveDate::from_ymd_opt(year, month, 1).expect("valid month start");
    (first_next - first_this).num_days() as u32
}

/// Resultant lengths below this are treated as exact cancellation: the mean
/// direction is undefined.
const RESULTANT_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct CircularStats {
    pub n: usize,
    /// First and second circular moments.
    pub m1: Complex64,
    pub m2: Complex64,
    pub r1: f64,
    pub r2: f64,
    /// Mean direction, in (−π, π].
    pub theta_mu: f64,
    /// Mean direction in natural units: (T/2π)·θ_μ.
    pub theta_mu_rescaled: f64,
    /// Circular variance 1 − R₁.
    pub variance: f64,
    /// Circular standard deviation √(−2 ln R₁).
    pub std_dev: f64,
    /// Circular dispersion (1 − R₂)/(2R₁²).
    pub dispersion: f64,
}

/// Circular statistics of the timestamps on one timescale. Errors: empty
/// input, or full cancellation (R₁ = 0) — the latter carries the variance,
/// which is still well-defined at 1.
pub fn circular_stats(
    timestamps: &[i64],
    scale: Timescale,
) -> Result<CircularStats, TimestatsError> {
    if timestamps.is_empty() {
        return Err(TimestatsError::EmptyInput);
    }
    let n = timestamps.len() as f64;
    let (mut c1, mut s1, mut c2, mut s2) = (0.0, 0.0, 0.0, 0.0);
    let mut period_sum = 0.0;
    for &ts in timestamps {
        let period = scale.period_at(ts);
        let theta = scale.measurement(ts) * 2.0 * PI / period;
        c1 += theta.cos();
        s1 += theta.sin();
        c2 += (2.0 * theta).cos();
        s2 += (2.0 * theta).sin();
        period_sum += period;
    }
    let m1 = Complex64::new(c1 / n, s1 / n);
    let m2 = Complex64::new(c2 / n, s2 / n);
    let r1 = m1.norm().min(1.0);
    let r2 = m2.norm().min(1.0);
    if r1 < RESULTANT_FLOOR {
        return Err(TimestatsError::MeanUndefined { variance: 1.0 });
    }
    let mut theta_mu = m1.arg();
    if theta_mu == -PI {
        theta_mu = PI;
    }
    let mean_period = period_sum / n;
    Ok(CircularStats {
        n: timestamps.len(),
        m1,
        m2,
        r1,
        r2,
        theta_mu,
        theta_mu_rescaled: mean_period / (2.0 * PI) * theta_mu,
        variance: 1.0 - r1,
        std_dev: (-2.0 * r1.ln()).sqrt(),
        dispersion: (1.0 - r2) / (2.0 * r1 * r1),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ActivityHistogram {
    pub scale: Timescale,
    pub counts: Vec<u64>,
    pub total: u64,
    /// Per-unit share of activity, in percent.
    pub percentages: Vec<f64>,
    /// max/min over the unit counts; undefined (None) when any unit is
    /// empty.
    pub peak_ratio: Option<f64>,
}

pub fn activity_histogram(timestamps: &[i64], scale: Timescale) -> ActivityHistogram {
    let mut counts = vec![0u64; scale.units()];
    for &ts in timestamps {
        counts[scale.unit_index(ts)] += 1;
    }
    let total: u64 = counts.iter().sum();
    let percentages = counts
        .iter()
        .map(|&c| if total == 0 { 0.0 } else { 100.0 * c as f64 / total as f64 })
        .collect();
    let min = counts.iter().copied().min().unwrap_or(0);
    let max = counts.iter().copied().max().unwrap_or(0);
    let peak_ratio = (min > 0).then(|| max as f64 / min as f64);
    ActivityHistogram { scale, counts, total, percentages, peak_ratio }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Group {
    /// Inclusive unit-index span.
    pub start: usize,
    pub end: usize,
    pub percentage: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GroupedLevel {
    pub width: usize,
    pub groups: Vec<Group>,
}

/// Rolls the histogram up into contiguous groups for each requested width.
/// Every width must divide the number of units.
pub fn grouped_histogram(
    histogram: &ActivityHistogram,
    widths: &[usize],
) -> Result<Vec<GroupedLevel>, TimestatsError> {
    let units = histogram.scale.units();
    let mut levels = Vec::with_capacity(widths.len());
    for &width in widths {
        if width == 0 || units % width != 0 {
            return Err(TimestatsError::BadGroupWidth { width, units });
        }
        let groups = (0..units / width)
            .map(|g| {
                let start = g * width;
                let end = start + width - 1;
                Group {
                    start,
                    end,
                    percentage: histogram.percentages[start..=end].iter().sum(),
                }
            })
            .collect();
        levels.push(GroupedLevel { width, groups });
    }
    Ok(levels)
}

/// How concentrated posting activity is across participants. All values are
/// percentages. The quartile figures are the *smallest* top slice of
/// participants reaching 25% / 75% of messages; the last decile is the
/// *largest* bottom slice staying within 10%.
#[derive(Debug, Clone, PartialEq)]
pub struct ConcentrationSummary {
    /// Share of all messages sent by the single most active participant.
    pub hub_share: f64,
    pub q1_participants: f64,
    pub q1_coverage: f64,
    pub q3_participants: f64,
    pub q3_coverage: f64,
    pub last_decile_participants: f64,
    pub last_decile_coverage: f64,
}

pub fn activity_concentration(corpus: &Corpus) -> ConcentrationSummary {
    let mut per_author: HashMap<&str, u64> = HashMap::new();
    for m in &corpus.messages {
        *per_author.entry(m.author.as_str()).or_insert(0) += 1;
    }
    // Descending by count; author name tiebreak keeps the order total.
    let mut counts: Vec<(&str, u64)> = per_author.into_iter().collect();
    counts.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(b.0)));

    let m_total: u64 = corpus.len() as u64;
    let n = counts.len() as f64;
    let pct = |x: u64, whole: u64| 100.0 * x as f64 / whole as f64;

    let hub_share = pct(counts[0].1, m_total);

    // Smallest top prefix with coverage ≥ target/denominator (exact integer
    // comparison: cum·denominator ≥ target·M).
    let top_prefix = |numer: u64, denom: u64| {
        let mut cum = 0u64;
        for (taken, &(_, c)) in counts.iter().enumerate() {
            cum += c;
            if cum * denom >= numer * m_total {
                return (taken as u64 + 1, cum);
            }
        }
        (counts.len() as u64, cum)
    };
    let (q1_n, q1_cov) = top_prefix(1, 4);
    let (q3_n, q3_cov) = top_prefix(3, 4);

    // Largest bottom prefix with coverage ≤ 10%.
    let mut cum = 0u64;
    let mut taken = 0u64;
    for &(_, c) in counts.iter().rev() {
        if (cum + c) * 10 > m_total {
            break;
        }
        cum += c;
        taken += 1;
    }

    ConcentrationSummary {
        hub_share,
        q1_participants: 100.0 * q1_n as f64 / n,
        q1_coverage: pct(q1_cov, m_total),
        q3_participants: 100.0 * q3_n as f64 / n,
        q3_coverage: pct(q3_cov, m_total),
        last_decile_participants: 100.0 * taken as f64 / n,
        last_decile_coverage: pct(cum, m_total),
    }
}
