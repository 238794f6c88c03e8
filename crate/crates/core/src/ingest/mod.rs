//! Archive ingestion: raw mbox/JSONL/CSV records in, a reply-linked,
//! totally ordered [`Corpus`] out.
//!
//! A corpus is the unit every later stage consumes. Messages are sorted by
//! (timestamp, id) — the id tiebreak makes the order total and reproducible
//! — and `ordinal` is the position in that order. Records that cannot be
//! normalized (unparsable date, missing Message-ID, missing sender, schema
//! violations) are never patched up: they are dropped, counted in `n_missing`,
//! and reported with a diagnostic string.

mod mbox;
mod records;

pub use mbox::parse_mbox;
pub use records::{parse_csv, parse_jsonl};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("corpus is empty after parsing and truncation")]
    EmptyCorpus,
    #[error("bad CSV header: expected id,author,timestamp,reply_to, got {0:?}")]
    BadCsvHeader(Vec<String>),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

/// One archive record after splitting and header unfolding, before
/// normalization. Header names are case-insensitively unique (the first
/// occurrence wins); lookup is case-insensitive.
#[derive(Debug, Clone)]
pub struct RawRecord {
    /// Offset of the record's delimiter line in the decoded input, for
    /// diagnostics. Strictly increasing across a parse.
    pub source_offset: usize,
    headers: Vec<(String, String)>,
    pub body_present: bool,
}

impl RawRecord {
    pub fn new(source_offset: usize, headers: Vec<(String, String)>, body_present: bool) -> Self {
        let mut deduped: Vec<(String, String)> = Vec::with_capacity(headers.len());
        for (name, value) in headers {
            if !deduped.iter().any(|(n, _)| n.eq_ignore_ascii_case(&name)) {
                deduped.push((name, value));
            }
        }
        RawRecord { source_offset, headers: deduped, body_present }
    }

    pub fn header(&self, name: &str) -> Option<&str> {
        self.headers
            .iter()
            .find(|(n, _)| n.eq_ignore_ascii_case(name))
            .map(|(_, v)| v.as_str())
    }

    pub fn headers(&self) -> &[(String, String)] {
        &self.headers
    }
}

/// A normalized message. `author` is the lowercased email address — the
/// identity key used for network vertices. `reply_to` names the antecedent
/// message id when one was declared; whether it resolves is decided against
/// whatever message slice is in scope at use time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Message {
    pub id: String,
    pub author: String,
    pub timestamp: i64,
    pub reply_to: Option<String>,
    /// Position in the corpus total order; assigned by [`build_corpus`].
    pub ordinal: usize,
}

/// Wire form shared by the JSONL and CSV interfaces: exactly the four
/// public fields, no ordinal.
#[derive(Debug, Serialize, Deserialize)]
struct WireMessage {
    id: String,
    author: String,
    timestamp: i64,
    reply_to: Option<String>,
}

impl From<&Message> for WireMessage {
    fn from(m: &Message) -> Self {
        WireMessage {
            id: m.id.clone(),
            author: m.author.clone(),
            timestamp: m.timestamp,
            reply_to: m.reply_to.clone(),
        }
    }
}

/// Per-parse accounting: how many records were dropped and why.
#[derive(Debug, Default, Clone)]
pub struct ParseReport {
    pub dropped: usize,
    pub diagnostics: Vec<String>,
}

impl ParseReport {
    pub fn drop_with(&mut self, diagnostic: String) {
        self.dropped += 1;
        self.diagnostics.push(diagnostic);
    }

    pub fn merge(&mut self, other: ParseReport) {
        self.dropped += other.dropped;
        self.diagnostics.extend(other.diagnostics);
    }
}

/// A reply-linked message corpus in total (timestamp, id) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    pub messages: Vec<Message>,
    /// N: distinct authors.
    pub n_participants: usize,
    /// Γ: messages with no antecedent resolvable inside the corpus
    /// (thread roots plus replies whose target fell outside).
    pub n_threads: usize,
    /// M̄: records dropped during parsing and normalization.
    pub n_missing: usize,
    pub date_first: i64,
    pub date_last: i64,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.messages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.messages.is_empty()
    }
}

/// Normalizes raw records into messages: identity from `From`, id from
/// `Message-ID` (brackets stripped), antecedent from the first `In-Reply-To`
/// id or else the last `References` id, timestamp from `Date` as UTC epoch
/// seconds. Records missing any of sender, id, or a parsable date are
/// dropped and counted.
pub fn normalize(records: &[RawRecord]) -> (Vec<Message>, ParseReport) {
    let mut messages = Vec::with_capacity(records.len());
    let mut report = ParseReport::default();
    for rec in records {
        let at = rec.source_offset;
        let Some(id) = rec.header("Message-ID").and_then(first_angle_id) else {
            report.drop_with(format!("record@{at}: missing or empty Message-ID"));
            continue;
        };
        let Some(author) = rec.header("From").and_then(extract_address) else {
            report.drop_with(format!("record@{at}: no sender address in From"));
            continue;
        };
        let Some(timestamp) = rec.header("Date").and_then(parse_date) else {
            report.drop_with(format!("record@{at}: missing or unparsable Date"));
            continue;
        };
        let mut reply_to = rec
            .header("In-Reply-To")
            .and_then(first_angle_id)
            .or_else(|| rec.header("References").and_then(last_angle_id));
        // A message cannot be its own antecedent; treat self-references as absent.
        if reply_to.as_deref() == Some(id.as_str()) {
            reply_to = None;
        }
        messages.push(Message { id, author, timestamp, reply_to, ordinal: 0 });
    }
    (messages, report)
}

/// Builds the corpus: sort by (timestamp, id), drop duplicate ids (keeping
/// the earliest in that order), truncate to `limit`, assign ordinals, and
/// derive the summary counts. `prior_dropped` carries M̄ from the parsing
/// stages so the corpus reports the full loss.
pub fn build_corpus(
    mut messages: Vec<Message>,
    limit: Option<usize>,
    prior_dropped: usize,
) -> Result<Corpus, IngestError> {
    messages.sort_by(|a, b| (a.timestamp, &a.id).cmp(&(b.timestamp, &b.id)));

    let mut n_missing = prior_dropped;
    let mut seen = std::collections::HashSet::with_capacity(messages.len());
    messages.retain(|m| {
        let fresh = seen.insert(m.id.clone());
        if !fresh {
            n_missing += 1;
        }
        fresh
    });

    if let Some(limit) = limit {
        messages.truncate(limit);
    }
    if messages.is_empty() {
        return Err(IngestError::EmptyCorpus);
    }
    for (ordinal, m) in messages.iter_mut().enumerate() {
        m.ordinal = ordinal;
    }

    let ids: std::collections::HashSet<&str> =
        messages.iter().map(|m| m.id.as_str()).collect();
    let n_threads = messages
        .iter()
        .filter(|m| match &m.reply_to {
            Some(target) => !ids.contains(target.as_str()),
            None => true,
        })
        .count();
    let n_participants = {
        let authors: std::collections::HashSet<&str> =
            messages.iter().map(|m| m.author.as_str()).collect();
        authors.len()
    };
    let date_first = messages.first().map(|m| m.timestamp).unwrap();
    let date_last = messages.iter().map(|m| m.timestamp).max().unwrap();

    Ok(Corpus { messages, n_participants, n_threads, n_missing, date_first, date_last })
}

/// Canonical JSONL: one object per line in ordinal order, LF endings.
pub fn emit_jsonl(corpus: &Corpus) -> String {
    let mut out = String::new();
    for m in &corpus.messages {
        let wire = WireMessage::from(m);
        out.push_str(&serde_json::to_string(&wire).expect("message serializes"));
        out.push('\n');
    }
    out
}

/// Picks the email address out of a `From` value: angle-bracket form first,
/// otherwise the first token containing '@'. Lowercased.
fn extract_address(from: &str) -> Option<String> {
    if let (Some(lt), Some(gt)) = (from.find('<'), from.rfind('>')) {
        if lt < gt {
            let inner = from[lt + 1..gt].trim();
            if !inner.is_empty() {
                return Some(inner.to_lowercase());
            }
        }
    }
    from.split(|c: char| c.is_whitespace() || c == ',' || c == ';')
        .map(|tok| tok.trim_matches(|c: char| "<>\"'(),;:".contains(c)))
        .find(|tok| tok.contains('@') && tok.len() > 2)
        .map(str::to_lowercase)
}

/// First `<...>` token, brackets stripped; falls back to the whole trimmed
/// value when no brackets are present. Empty results are `None`.
fn first_angle_id(value: &str) -> Option<String> {
    angle_ids(value).next().or_else(|| {
        let bare = value.trim();
        (!bare.is_empty() && !bare.contains('<')).then(|| bare.to_string())
    })
}

fn last_angle_id(value: &str) -> Option<String> {
    angle_ids(value).last()
}

fn angle_ids(value: &str) -> impl Iterator<Item = String> + '_ {
    value.match_indices('<').filter_map(move |(start, _)| {
        let rest = &value[start + 1..];
        let end = rest.find('>')?;
        let id = rest[..end].trim();
        (!id.is_empty()).then(|| id.to_string())
    })
}

/// RFC 2822 date to UTC epoch seconds; retries once with a trailing
/// parenthetical comment (e.g. " (CET)") removed.
fn parse_date(value: &str) -> Option<i64> {
    let trimmed = value.trim();
    if let Ok(dt) = chrono::DateTime::parse_from_rfc2822(trimmed) {
        return Some(dt.timestamp());
    }
    if let Some(open) = trimmed.rfind('(') {
        let without = trimmed[..open].trim_end();
        if let Ok(dt) = chrono::DateTime::parse_from_rfc2822(without) {
            return Some(dt.timestamp());
        }
    }
    None
}
