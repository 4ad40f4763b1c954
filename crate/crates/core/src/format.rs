//! Text, JSON and CSV renderings of arrays and array sets.
//!
//! Text: one line per row, cells separated by single spaces, `.` for an
//! empty cell; members of a set are separated by a blank line.
//! JSON: `{"m","n","cells"}` per array, `{"m","n","c","arrays"}` per set.
//! CSV: long format with header `member,row,col,value`, filled cells only.

use serde::{Deserialize, Serialize};

use crate::array::PartialArray;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrayJson {
    pub m: usize,
    pub n: usize,
    pub cells: Vec<Vec<Option<i64>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetJson {
    pub m: usize,
    pub n: usize,
    pub c: usize,
    pub arrays: Vec<ArrayJson>,
}

impl From<&PartialArray> for ArrayJson {
    fn from(a: &PartialArray) -> Self {
        Self {
            m: a.rows(),
            n: a.cols(),
            cells: a.to_rows(),
        }
    }
}

impl TryFrom<&ArrayJson> for PartialArray {
    type Error = Error;

    fn try_from(j: &ArrayJson) -> Result<Self> {
        if j.cells.len() != j.m || j.cells.iter().any(|r| r.len() != j.n) {
            return Err(Error::Parse(format!(
                "cells do not form a {}x{} grid",
                j.m, j.n
            )));
        }
        PartialArray::from_rows(&j.cells)
    }
}

/// A parsed document: either one array or a set of arrays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Array(PartialArray),
    Set(Vec<PartialArray>),
}

impl Document {
    /// All arrays in the document, in order.
    pub fn arrays(&self) -> &[PartialArray] {
        match self {
            Document::Array(a) => std::slice::from_ref(a),
            Document::Set(v) => v,
        }
    }
}

pub fn array_to_text(a: &PartialArray) -> String {
    let mut out = String::new();
    for r in 0..a.rows() {
        let line: Vec<String> = a
            .row_cells(r)
            .iter()
            .map(|c| c.map_or_else(|| ".".to_string(), |v| v.to_string()))
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn set_to_text(set: &[PartialArray]) -> String {
    set.iter().map(array_to_text).collect::<Vec<_>>().join("\n")
}

pub fn array_to_json(a: &PartialArray) -> String {
    serde_json::to_string(&ArrayJson::from(a)).expect("array serialises")
}

pub fn set_to_json(set: &[PartialArray]) -> String {
    let (m, n) = set.first().map_or((0, 0), |a| (a.rows(), a.cols()));
    let doc = SetJson {
        m,
        n,
        c: set.len(),
        arrays: set.iter().map(ArrayJson::from).collect(),
    };
    serde_json::to_string(&doc).expect("set serialises")
}

pub fn set_to_csv(set: &[PartialArray]) -> String {
    let mut out = String::from("member,row,col,value\n");
    for (k, a) in set.iter().enumerate() {
        for r in 0..a.rows() {
            for (c, v) in a.row_cells(r).iter().enumerate() {
                if let Some(v) = v {
                    out.push_str(&format!("{k},{r},{c},{v}\n"));
                }
            }
        }
    }
    out
}

pub fn array_to_csv(a: &PartialArray) -> String {
    set_to_csv(std::slice::from_ref(a))
}

/// Parses canonical JSON, accepting either a single array or a set.
pub fn parse_json(s: &str) -> Result<Document> {
    let v: serde_json::Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    if v.get("arrays").is_some() {
        let doc: SetJson = serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.arrays.len() != doc.c {
            return Err(Error::Parse(format!(
                "declared c={} but {} arrays present",
                doc.c,
                doc.arrays.len()
            )));
        }
        let arrays = doc
            .arrays
            .iter()
            .map(PartialArray::try_from)
            .collect::<Result<Vec<_>>>()?;
        Ok(Document::Set(arrays))
    } else {
        let doc: ArrayJson = serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(Document::Array(PartialArray::try_from(&doc)?))
    }
}

/// Parses the text format. Blank lines separate members; a single block
/// yields [`Document::Array`].
pub fn parse_text(s: &str) -> Result<Document> {
    let mut arrays = Vec::new();
    let mut rows: Vec<Vec<Option<i64>>> = Vec::new();
    let flush = |rows: &mut Vec<Vec<Option<i64>>>, arrays: &mut Vec<PartialArray>| -> Result<()> {
        if !rows.is_empty() {
            arrays.push(PartialArray::from_rows(rows)?);
            rows.clear();
        }
        Ok(())
    };
    for (lineno, line) in s.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            flush(&mut rows, &mut arrays)?;
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|tok| {
                if tok == "." {
                    Ok(None)
                } else {
                    tok.parse::<i64>()
                        .map(Some)
                        .map_err(|_| Error::Parse(format!("line {}: bad cell {tok:?}", lineno + 1)))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    flush(&mut rows, &mut arrays)?;
    match arrays.len() {
        0 => Err(Error::Parse("no array found".into())),
        1 => Ok(Document::Array(arrays.pop().unwrap())),
        _ => Ok(Document::Set(arrays)),
    }
}

/// Parses the long CSV format produced by [`set_to_csv`]. Shapes are taken
/// from the largest row and column indices seen.
pub fn parse_csv(s: &str) -> Result<Document> {
    let mut lines = s.lines().filter(|l| !l.trim().is_empty());
    match lines.next() {
        Some(h) if h.trim() == "member,row,col,value" => {}
        _ => return Err(Error::Parse("missing header member,row,col,value".into())),
    }
    let mut cells: Vec<(usize, usize, usize, i64)> = Vec::new();
    for (i, line) in lines.enumerate() {
        let f: Vec<&str> = line.trim().split(',').collect();
        if f.len() != 4 {
            return Err(Error::Parse(format!("record {}: expected 4 fields", i + 1)));
        }
        let bad = |_| Error::Parse(format!("record {}: bad number", i + 1));
        cells.push((
            f[0].parse().map_err(bad)?,
            f[1].parse().map_err(bad)?,
            f[2].parse().map_err(bad)?,
            f[3].parse().map_err(bad)?,
        ));
    }
    if cells.is_empty() {
        return Err(Error::Parse("no cells".into()));
    }
    let members = cells.iter().map(|c| c.0).max().unwrap() + 1;
    let m = cells.iter().map(|c| c.1).max().unwrap() + 1;
    let n = cells.iter().map(|c| c.2).max().unwrap() + 1;
    let mut arrays = vec![PartialArray::empty(m, n)?; members];
    for (k, r, c, v) in cells {
        arrays[k].fill(r, c, v)?;
    }
    if members == 1 {
        Ok(Document::Array(arrays.pop().unwrap()))
    } else {
        Ok(Document::Set(arrays))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> PartialArray {
        PartialArray::from_rows(&[vec![Some(1), None], vec![Some(-2), Some(3)]]).unwrap()
    }

    #[test]
    fn text_round_trip() {
        let a = sample();
        let t = array_to_text(&a);
        assert_eq!(t, "1 .\n-2 3\n");
        assert_eq!(parse_text(&t).unwrap(), Document::Array(a.clone()));
        let set = vec![a.clone(), a.negate()];
        assert_eq!(parse_text(&set_to_text(&set)).unwrap(), Document::Set(set));
    }

    #[test]
    fn json_round_trip() {
        let a = sample();
        let j = array_to_json(&a);
        assert_eq!(j, r#"{"m":2,"n":2,"cells":[[1,null],[-2,3]]}"#);
        assert_eq!(parse_json(&j).unwrap(), Document::Array(a.clone()));
        let set = vec![a.clone(), a.negate()];
        assert_eq!(parse_json(&set_to_json(&set)).unwrap(), Document::Set(set));
    }

    #[test]
    fn csv_round_trip() {
        let set = vec![sample(), sample().negate()];
        let c = set_to_csv(&set);
        assert!(c.starts_with("member,row,col,value\n0,0,0,1\n"));
        assert_eq!(parse_csv(&c).unwrap(), Document::Set(set));
    }
}
