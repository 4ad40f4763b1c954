//! The embedded `IHS(7,7;c)` tables for `c = 3, 7, ..., 27`.

use serde::Deserialize;

use crate::array::PartialArray;
use crate::error::{Error, Result};
use crate::format::parse_json;

const MANIFEST: &str = include_str!("../../data/appendix/manifest.json");

#[derive(Deserialize)]
struct Manifest {
    sets: Vec<Entry>,
}

#[derive(Deserialize)]
struct Entry {
    m: usize,
    n: usize,
    c: usize,
    file: String,
}

fn raw(file: &str) -> Option<&'static str> {
    Some(match file {
        "ihs_7_7_3.json" => include_str!("../../data/appendix/ihs_7_7_3.json"),
        "ihs_7_7_7.json" => include_str!("../../data/appendix/ihs_7_7_7.json"),
        "ihs_7_7_11.json" => include_str!("../../data/appendix/ihs_7_7_11.json"),
        "ihs_7_7_15.json" => include_str!("../../data/appendix/ihs_7_7_15.json"),
        "ihs_7_7_19.json" => include_str!("../../data/appendix/ihs_7_7_19.json"),
        "ihs_7_7_23.json" => include_str!("../../data/appendix/ihs_7_7_23.json"),
        "ihs_7_7_27.json" => include_str!("../../data/appendix/ihs_7_7_27.json"),
        _ => return None,
    })
}

fn manifest() -> Result<Manifest> {
    serde_json::from_str(MANIFEST).map_err(|e| Error::Parse(format!("appendix manifest: {e}")))
}

/// The `(m, n, c)` triples with embedded data.
pub fn appendix_list() -> Vec<(usize, usize, usize)> {
    manifest()
        .map(|m| m.sets.iter().map(|e| (e.m, e.n, e.c)).collect())
        .unwrap_or_default()
}

/// The embedded set for `IHS(7, 7; c)`, exactly as stored.
pub fn appendix_ihs(c: usize) -> Result<Vec<PartialArray>> {
    let man = manifest()?;
    let entry = man
        .sets
        .iter()
        .find(|e| (e.m, e.n, e.c) == (7, 7, c))
        .ok_or_else(|| Error::InvalidParams(format!("no embedded data for IHS(7,7;{c})")))?;
    let text = raw(&entry.file).ok_or_else(|| Error::Parse(format!("missing data file {}", entry.file)))?;
    let arrays = parse_json(text)?.arrays().to_vec();
    if arrays.len() != c || arrays.iter().any(|a| (a.rows(), a.cols()) != (7, 7)) {
        return Err(Error::Parse(format!("{} does not hold {c} arrays of size 7x7", entry.file)));
    }
    Ok(arrays)
}
