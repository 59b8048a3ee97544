//! The `BMX 1` text format.
//!
//! ```text
//! BMX 1
//! elements: a b c
//! rows: 2
//! 101
//! 011
//! ```
//!
//! Row `i` column `j` is the entry for the `j`-th label. Emission writes the
//! reduced row-echelon form, whose pivot columns are the lexicographically
//! least basis.

use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::matroid::BinaryMatroid;

pub fn to_bmx(m: &BinaryMatroid) -> String {
    let mut s = String::from("BMX 1\n");
    s.push_str("elements:");
    for l in m.labels() {
        s.push(' ');
        s.push_str(l);
    }
    s.push('\n');
    s.push_str(&format!("rows: {}\n", m.rank()));
    for row in m.rep().to_strings() {
        s.push_str(&row);
        s.push('\n');
    }
    s
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

pub fn parse_bmx(text: &str) -> Result<BinaryMatroid> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end_matches('\r')));
    let (n, header) = lines.next().ok_or_else(|| err(1, "empty input"))?;
    if header.trim() != "BMX 1" {
        return Err(err(n, "expected header `BMX 1`"));
    }
    let (n, elems) = lines.next().ok_or_else(|| err(2, "missing elements line"))?;
    let labels: Vec<String> = elems
        .strip_prefix("elements:")
        .ok_or_else(|| err(n, "expected `elements:`"))?
        .split_whitespace()
        .map(str::to_string)
        .collect();
    let (n, rows_line) = lines.next().ok_or_else(|| err(3, "missing rows line"))?;
    let r: usize = rows_line
        .strip_prefix("rows:")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| err(n, "expected `rows: <count>`"))?;
    let mut m = Gf2Matrix::zeros(r, labels.len());
    for i in 0..r {
        let (n, row) = lines.next().ok_or_else(|| err(4 + i, "missing matrix row"))?;
        let row = row.trim();
        if row.len() != labels.len() {
            return Err(err(n, format!("row has {} entries, expected {}", row.len(), labels.len())));
        }
        for (j, ch) in row.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => m.set(i, j, true),
                _ => return Err(err(n, format!("bad entry {ch:?}"))),
            }
        }
    }
    if let Some((n, extra)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(err(n, format!("unexpected trailing line {extra:?}")));
    }
    BinaryMatroid::from_matrix(labels, &m).map_err(|e| match e {
        Error::Invalid(msg) => err(2, msg),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let m = BinaryMatroid::from_strs(&["a", "b", "c"], &["101", "011"]).unwrap();
        let text = to_bmx(&m);
        assert_eq!(text, "BMX 1\nelements: a b c\nrows: 2\n101\n011\n");
        assert_eq!(parse_bmx(&text).unwrap(), m);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(parse_bmx("BMX 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_bmx("BMX 1\nelements: a b\nrows: 1\n10x\n"), Err(Error::Parse { line: 4, .. })));
        assert!(matches!(parse_bmx("BMX 1\nelements: a a\nrows: 1\n11\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_bmx("BMX 1\nelements: a\nrows: 2\n1\n"), Err(Error::Parse { line: 5, .. })));
    }
}
