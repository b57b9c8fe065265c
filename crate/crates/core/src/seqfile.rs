//! Sequence files: one rational per line (`p/q` or an integer). Blank lines
//! are skipped and `#` starts a comment.

use crate::error::{Error, Result};
use crate::rational::Rat;

pub fn parse_sequence(text: &str) -> Result<Vec<Rat>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let value = body
            .parse::<Rat>()
            .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
        out.push(value);
    }
    if out.is_empty() {
        return Err(Error::EmptySequence);
    }
    Ok(out)
}

pub fn render_sequence(values: &[Rat]) -> String {
    values.iter().map(|v| format!("{v}\n")).collect()
}
