//! Line-oriented text formats for iracks, racks and groups.
//!
//! ```text
//! # comment
//! elements: 1 a b c d e f
//! plus: 1 b a f c d e
//! minus: 1 b a d e f c
//! rhd:
//! 1 a b c d e f
//! ...
//! ```
//!
//! Tables (`rhd:`, `lhd:`, `mult:`) are followed by one line per row, with
//! row `i` column `j` holding the entry for elements `i` and `j` in carrier
//! order. Racks use `rhd:` and `lhd:`; groups use `mult:` alone. Blank lines
//! and lines starting with `#` are skipped.

use std::collections::HashMap;

use crate::carrier::{Carrier, Elem};
use crate::error::ParseError;
use crate::group::{cyclic_group, irack_from_group, symmetric_group, GroupTable};
use crate::irack::{builtin_example_irack, trivial_irack, IrackTable, RawIrackTable};
use crate::rack::{RackTable, RawRackTable};

struct Sections {
    carrier: Carrier,
    unary: HashMap<&'static str, Vec<usize>>,
    tables: HashMap<&'static str, Vec<Vec<usize>>>,
}

const UNARY: [&str; 2] = ["plus", "minus"];
const TABLES: [&str; 3] = ["rhd", "lhd", "mult"];

fn parse_sections(text: &str) -> Result<Sections, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .peekable();

    let (first, header) = lines.next().ok_or(ParseError::MissingSection("elements"))?;
    let labels =
        header.strip_prefix("elements:").ok_or_else(|| ParseError::syntax(first, "expected `elements:` first"))?;
    let carrier =
        Carrier::new(labels.split_whitespace()).map_err(|source| ParseError::Carrier { line: first, source })?;
    let k = carrier.size();
    let lookup = |label: &str, line: usize| {
        carrier
            .lookup(label)
            .map(Elem::index)
            .ok_or_else(|| ParseError::syntax(line, format!("unknown element {label:?}")))
    };
    let row = |body: &str, line: usize| -> Result<Vec<usize>, ParseError> {
        let entries = body.split_whitespace().map(|l| lookup(l, line)).collect::<Result<Vec<_>, _>>()?;
        if entries.len() != k {
            return Err(ParseError::syntax(line, format!("expected {k} entries, found {}", entries.len())));
        }
        Ok(entries)
    };

    let mut unary = HashMap::new();
    let mut tables = HashMap::new();
    while let Some((line, body)) = lines.next() {
        let (key, rest) = body
            .split_once(':')
            .ok_or_else(|| ParseError::syntax(line, format!("expected a section header, found {body:?}")))?;
        let key = key.trim();
        if let Some(&name) = UNARY.iter().find(|&&n| n == key) {
            if unary.insert(name, row(rest, line)?).is_some() {
                return Err(ParseError::syntax(line, format!("duplicate section {name:?}")));
            }
        } else if let Some(&name) = TABLES.iter().find(|&&n| n == key) {
            if !rest.trim().is_empty() {
                return Err(ParseError::syntax(line, format!("`{name}:` must stand alone on its line")));
            }
            let mut rows = Vec::with_capacity(k);
            for _ in 0..k {
                let (rl, rb) =
                    lines.next().ok_or_else(|| ParseError::syntax(line, format!("`{name}:` needs {k} rows")))?;
                rows.push(row(rb, rl)?);
            }
            if tables.insert(name, rows).is_some() {
                return Err(ParseError::syntax(line, format!("duplicate section {name:?}")));
            }
        } else {
            return Err(ParseError::syntax(line, format!("unknown section {key:?}")));
        }
    }
    Ok(Sections { carrier, unary, tables })
}

impl Sections {
    fn table(&mut self, name: &'static str) -> Result<Vec<Vec<usize>>, ParseError> {
        self.tables.remove(name).ok_or(ParseError::MissingSection(name))
    }

    fn map(&mut self, name: &'static str) -> Result<Vec<usize>, ParseError> {
        self.unary.remove(name).ok_or(ParseError::MissingSection(name))
    }
}

pub fn parse_irack(text: &str) -> Result<RawIrackTable, ParseError> {
    let mut s = parse_sections(text)?;
    Ok(RawIrackTable { plus: s.map("plus")?, minus: s.map("minus")?, rhd: s.table("rhd")?, carrier: s.carrier })
}

pub fn parse_rack(text: &str) -> Result<RawRackTable, ParseError> {
    let mut s = parse_sections(text)?;
    Ok(RawRackTable { rhd: s.table("rhd")?, lhd: s.table("lhd")?, carrier: s.carrier })
}

pub fn parse_group(text: &str) -> Result<GroupTable, ParseError> {
    let mut s = parse_sections(text)?;
    Ok(GroupTable { mult: s.table("mult")?, carrier: s.carrier })
}

fn labels_line(carrier: &Carrier, indices: impl Iterator<Item = usize>) -> String {
    indices.map(|i| carrier.labels()[i].as_str()).collect::<Vec<_>>().join(" ")
}

fn push_table(out: &mut String, name: &str, carrier: &Carrier, rows: &[Vec<usize>]) {
    out.push_str(name);
    out.push_str(":\n");
    for r in rows {
        out.push_str(&labels_line(carrier, r.iter().copied()));
        out.push('\n');
    }
}

pub fn format_irack(irack: &IrackTable) -> String {
    format_raw_irack(&irack.to_raw())
}

pub fn format_raw_irack(raw: &RawIrackTable) -> String {
    let c = &raw.carrier;
    let mut out = format!("elements: {}\n", c.labels().join(" "));
    out.push_str(&format!("plus: {}\n", labels_line(c, raw.plus.iter().copied())));
    out.push_str(&format!("minus: {}\n", labels_line(c, raw.minus.iter().copied())));
    push_table(&mut out, "rhd", c, &raw.rhd);
    out
}

pub fn format_rack(rack: &RackTable) -> String {
    let raw = rack.to_raw();
    let mut out = format!("elements: {}\n", raw.carrier.labels().join(" "));
    push_table(&mut out, "rhd", &raw.carrier, &raw.rhd);
    push_table(&mut out, "lhd", &raw.carrier, &raw.lhd);
    out
}

pub fn format_group(group: &GroupTable) -> String {
    let mut out = format!("elements: {}\n", group.carrier.labels().join(" "));
    push_table(&mut out, "mult", &group.carrier, &group.mult);
    out
}

pub const BUILTIN_NAMES: [&str; 6] = ["example12", "trivial", "z2", "z3", "z4", "s3"];

/// Resolves the name after `builtin:`. `example12` is the seven-element
/// example; `zN` and `s3` are conjugation iracks of groups.
pub fn builtin_irack(name: &str) -> Option<IrackTable> {
    let conj = |g: GroupTable| irack_from_group(&g).expect("built-in groups are groups");
    Some(match name {
        "example12" => builtin_example_irack(),
        "trivial" => trivial_irack(),
        "z2" => conj(cyclic_group(2)),
        "z3" => conj(cyclic_group(3)),
        "z4" => conj(cyclic_group(4)),
        "s3" => conj(symmetric_group(3)),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "\
elements: 1 a b c d e f
plus: 1 b a f c d e
minus: 1 b a d e f c
rhd:
1 a b c d e f
1 a b c d e f
1 a b c d e f
1 b a e f c d
1 b a e f c d
1 b a e f c d
1 b a e f c d
";

    #[test]
    fn example_text_matches_builtin() {
        let raw = parse_irack(EXAMPLE).unwrap();
        assert_eq!(IrackTable::new(raw).unwrap(), builtin_example_irack());
        assert_eq!(format_irack(&builtin_example_irack()), EXAMPLE);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = format!("# the example\n\n{}", EXAMPLE.replace("rhd:\n", "rhd:\n# rows follow\n"));
        assert_eq!(parse_irack(&text).unwrap(), parse_irack(EXAMPLE).unwrap());
    }

    #[test]
    fn errors_name_the_line() {
        let bad = EXAMPLE.replace("minus: 1 b a d e f c", "minus: 1 b a d e f z");
        assert_eq!(parse_irack(&bad).unwrap_err().line(), Some(3));
        let short = EXAMPLE.replace("1 b a e f c d\n1 b a e f c d\n1 b a e f c d\n1 b a e f c d\n", "1 b a e f c\n");
        assert_eq!(parse_irack(&short).unwrap_err().line(), Some(8));
        assert_eq!(parse_irack("plus: a\n").unwrap_err().line(), Some(1));
        assert!(matches!(parse_irack("elements: a\nrhd:\na\n"), Err(ParseError::MissingSection("plus"))));
        assert!(matches!(parse_irack("elements: a a\n"), Err(ParseError::Carrier { line: 1, .. })));
        assert_eq!(parse_irack("elements: a\nfoo: a\n").unwrap_err().line(), Some(2));
    }

    #[test]
    fn group_and_rack_round_trip() {
        let g = symmetric_group(3);
        assert_eq!(parse_group(&format_group(&g)).unwrap(), g);
        let rack = crate::irack::rack_from_irack(&builtin_example_irack());
        assert_eq!(RackTable::new(parse_rack(&format_rack(&rack)).unwrap()).unwrap(), rack);
    }

    #[test]
    fn builtins_resolve() {
        for name in BUILTIN_NAMES {
            assert!(builtin_irack(name).is_some(), "{name}");
        }
        assert!(builtin_irack("nope").is_none());
    }

    #[test]
    fn empty_carrier_parses() {
        let raw = parse_irack("elements:\nplus:\nminus:\nrhd:\n").unwrap();
        assert!(IrackTable::new(raw).is_ok());
    }
}
