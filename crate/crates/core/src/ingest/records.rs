//! Structured record formats: JSONL (the canonical interchange form) and
//! CSV. Both carry the same four fields per message; both skip-and-count
//! rows that violate the schema instead of aborting the parse.

use super::{IngestError, Message, ParseReport, WireMessage};

/// Parses canonical JSONL: one `{id, author, timestamp, reply_to}` object
/// per line. Blank lines are ignored; lines failing the schema are dropped
/// and counted. Authors are forced to lowercase so hand-edited files still
/// normalize.
pub fn parse_jsonl(input: &str) -> (Vec<Message>, ParseReport) {
    let mut messages = Vec::new();
    let mut report = ParseReport::default();
    for (lineno, line) in input.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str::<WireMessage>(line) {
            Ok(wire) => {
                if let Some(msg) = validate(wire, &mut report, || format!("line {}", lineno + 1)) {
                    messages.push(msg);
                }
            }
            Err(err) => {
                report.drop_with(format!("line {}: {err}", lineno + 1));
            }
        }
    }
    (messages, report)
}

/// Parses CSV with the exact header `id,author,timestamp,reply_to`
/// (case-insensitive). An empty `reply_to` cell means no antecedent.
/// A wrong header is a hard error; bad data rows are dropped and counted.
pub fn parse_csv(input: &str) -> Result<(Vec<Message>, ParseReport), IngestError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .from_reader(input.as_bytes());

    let headers = reader.headers()?.clone();
    let names: Vec<String> = headers.iter().map(|h| h.trim().to_lowercase()).collect();
    if names != ["id", "author", "timestamp", "reply_to"] {
        return Err(IngestError::BadCsvHeader(names));
    }

    let mut messages = Vec::new();
    let mut report = ParseReport::default();
    for (idx, row) in reader.records().enumerate() {
        let describe = || format!("row {}", idx + 2); // 1-based, after header
        let row = match row {
            Ok(row) => row,
            Err(err) => {
                report.drop_with(format!("{}: {err}", describe()));
                continue;
            }
        };
        if row.len() != 4 {
            report.drop_with(format!("{}: expected 4 fields, got {}", describe(), row.len()));
            continue;
        }
        let timestamp = match row[2].trim().parse::<i64>() {
            Ok(ts) => ts,
            Err(_) => {
                report.drop_with(format!("{}: timestamp {:?} is not an integer", describe(), &row[2]));
                continue;
            }
        };
        let reply_to = match row[3].trim() {
            "" => None,
            other => Some(other.to_string()),
        };
        let wire = WireMessage {
            id: row[0].trim().to_string(),
            author: row[1].trim().to_string(),
            timestamp,
            reply_to,
        };
        if let Some(msg) = validate(wire, &mut report, describe) {
            messages.push(msg);
        }
    }
    Ok((messages, report))
}

/// Shared record-level checks: non-empty id and author, no self-reference.
fn validate(
    wire: WireMessage,
    report: &mut ParseReport,
    describe: impl Fn() -> String,
) -> Option<Message> {
    if wire.id.is_empty() {
        report.drop_with(format!("{}: empty id", describe()));
        return None;
    }
    if wire.author.is_empty() {
        report.drop_with(format!("{}: empty author", describe()));
        return None;
    }
    let reply_to = match wire.reply_to {
        Some(target) if target == wire.id => None,
        other => other,
    };
    Some(Message {
        id: wire.id,
        author: wire.author.to_lowercase(),
        timestamp: wire.timestamp,
        reply_to,
        ordinal: 0,
    })
}
