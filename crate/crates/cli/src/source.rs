//! Resolving irack sources and reading input files.

use std::fs;

use anyhow::{anyhow, Context, Result};
use irack_core::text::{builtin_irack, parse_group, parse_irack, parse_rack, BUILTIN_NAMES};
use irack_core::{irack_from_group, Carrier, ParseError, RawIrackTable, RawRackTable, Relation};

pub fn read(path: &str) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("{path}: cannot read"))
}

/// `path:line: message`, or `path: message` when the error has no line.
pub fn diagnostic(path: &str, err: ParseError) -> anyhow::Error {
    match err {
        ParseError::Syntax { line, message } => anyhow!("{path}:{line}: {message}"),
        ParseError::Carrier { line, source } => anyhow!("{path}:{line}: {source}"),
        ParseError::MissingSection(name) => anyhow!("{path}: missing `{name}:` section"),
    }
}

/// Accepts `builtin:NAME`, `group:PATH` (a multiplication table), a plain
/// path to an irack file, or any of these behind `dual:`.
pub fn load_raw_irack(source: &str) -> Result<RawIrackTable> {
    if let Some(inner) = source.strip_prefix("dual:") {
        let mut raw = load_raw_irack(inner)?;
        std::mem::swap(&mut raw.plus, &mut raw.minus);
        return Ok(raw);
    }
    if let Some(name) = source.strip_prefix("builtin:") {
        return builtin_irack(name)
            .map(|t| t.to_raw())
            .ok_or_else(|| anyhow!("unknown built-in irack {name:?} (known: {})", BUILTIN_NAMES.join(", ")));
    }
    if let Some(path) = source.strip_prefix("group:") {
        let group = parse_group(&read(path)?).map_err(|e| diagnostic(path, e))?;
        return irack_from_group(&group).map(|t| t.to_raw()).map_err(|e| anyhow!("{path}: {e}"));
    }
    parse_irack(&read(source)?).map_err(|e| diagnostic(source, e))
}

pub fn load_raw_rack(path: &str) -> Result<RawRackTable> {
    parse_rack(&read(path)?).map_err(|e| diagnostic(path, e))
}

pub fn load_relation(path: &str, carrier: &Carrier) -> Result<Relation> {
    Relation::parse(&read(path)?, carrier).map_err(|e| diagnostic(path, e))
}
