//! Shape validation shared by the raw table types.

use crate::carrier::Elem;
use crate::error::MalformedTable;

pub(crate) fn square(table: &'static str, rows: &[Vec<usize>], k: usize) -> Result<Vec<Elem>, MalformedTable> {
    if rows.len() != k {
        return Err(MalformedTable::RowCount { table, expected: k, found: rows.len() });
    }
    let mut flat = Vec::with_capacity(k * k);
    for (row, entries) in rows.iter().enumerate() {
        if entries.len() != k {
            return Err(MalformedTable::RowLength { table, row, expected: k, found: entries.len() });
        }
        for (col, &value) in entries.iter().enumerate() {
            if value >= k {
                return Err(MalformedTable::OutOfRange { table, row, col, value, size: k });
            }
            flat.push(Elem::new(value));
        }
    }
    Ok(flat)
}

pub(crate) fn unary(table: &'static str, map: &[usize], k: usize) -> Result<Vec<Elem>, MalformedTable> {
    if map.len() != k {
        return Err(MalformedTable::MapLength { table, expected: k, found: map.len() });
    }
    map.iter()
        .enumerate()
        .map(|(index, &value)| {
            if value >= k {
                Err(MalformedTable::MapOutOfRange { table, index, value, size: k })
            } else {
                Ok(Elem::new(value))
            }
        })
        .collect()
}

pub(crate) fn rows(flat: &[Elem], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return Vec::new();
    }
    flat.chunks(k).map(|r| r.iter().map(|e| e.index()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_the_offending_cell() {
        let err = square("rhd", &[vec![0, 1], vec![1, 2]], 2).unwrap_err();
        assert_eq!(err, MalformedTable::OutOfRange { table: "rhd", row: 1, col: 1, value: 2, size: 2 });
        assert!(err.to_string().contains("[1][1]"));
        assert!(matches!(square("rhd", &[vec![0]], 2), Err(MalformedTable::RowCount { .. })));
        assert!(matches!(unary("plus", &[0, 5], 2), Err(MalformedTable::MapOutOfRange { index: 1, .. })));
    }
}
