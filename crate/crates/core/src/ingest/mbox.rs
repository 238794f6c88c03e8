//! RFC 4155-style mbox splitting. Records are delimited by lines starting
//! with `From ` at column zero; header folding (continuation lines starting
//! with whitespace) is undone by joining with a single space. Body content
//! is not interpreted — only its presence is recorded.

use super::{ParseReport, RawRecord};

/// Splits a decoded mailbox into raw records. Never fails: records with no
/// usable header before the blank separator are dropped, counted, and
/// reported. Offsets are the positions of each `From ` delimiter line.
pub fn parse_mbox(input: &str) -> (Vec<RawRecord>, ParseReport) {
    let mut records = Vec::new();
    let mut report = ParseReport::default();
    let mut current: Option<RecordAccum> = None;
    let mut offset = 0usize;
    let mut preamble_noted = false;

    for raw_line in input.split_inclusive('\n') {
        let line = raw_line.strip_suffix('\n').unwrap_or(raw_line);
        let line = line.strip_suffix('\r').unwrap_or(line);

        if line.starts_with("From ") {
            if let Some(done) = current.take() {
                done.finish(&mut records, &mut report);
            }
            current = Some(RecordAccum::new(offset));
        } else if let Some(rec) = current.as_mut() {
            rec.push_line(line);
        } else if !line.trim().is_empty() && !preamble_noted {
            report
                .diagnostics
                .push(format!("content@{offset} before first 'From ' delimiter ignored"));
            preamble_noted = true;
        }
        offset += raw_line.len();
    }
    if let Some(done) = current.take() {
        done.finish(&mut records, &mut report);
    }
    (records, report)
}

struct RecordAccum {
    source_offset: usize,
    headers: Vec<(String, String)>,
    in_headers: bool,
    body_present: bool,
}

impl RecordAccum {
    fn new(source_offset: usize) -> Self {
        RecordAccum { source_offset, headers: Vec::new(), in_headers: true, body_present: false }
    }

    fn push_line(&mut self, line: &str) {
        if self.in_headers {
            if line.is_empty() {
                self.in_headers = false;
            } else if line.starts_with(' ') || line.starts_with('\t') {
                // Folded continuation: belongs to the previous header.
                if let Some((_, value)) = self.headers.last_mut() {
                    value.push(' ');
                    value.push_str(line.trim());
                }
                // A continuation with no preceding header is stray noise; skip.
            } else if let Some(colon) = line.find(':') {
                let name = line[..colon].trim().to_string();
                let value = line[colon + 1..].trim().to_string();
                if !name.is_empty() {
                    self.headers.push((name, value));
                }
            }
            // Non-continuation lines without a colon are skipped; the record
            // survives as long as at least one real header shows up.
        } else if !line.trim().is_empty() {
            self.body_present = true;
        }
    }

    fn finish(self, records: &mut Vec<RawRecord>, report: &mut ParseReport) {
        if self.headers.is_empty() {
            report.drop_with(format!(
                "record@{}: no headers before blank line",
                self.source_offset
            ));
        } else {
            records.push(RawRecord::new(self.source_offset, self.headers, self.body_present));
        }
    }
}
