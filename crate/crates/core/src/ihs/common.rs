//! Shared plumbing for the set builders: placement, leftover bookkeeping,
//! piece pools and block supplies.

use std::collections::VecDeque;

use crate::array::{Block, PartialArray};
use crate::blocks::{instantiate_template, Template, TemplateParams};
use crate::error::{Error, Result};
use crate::interval::{FourSet, IntervalD, SupportSet};
use crate::verify::verify_ihs;

use super::partition::{partition_pieces, PartitionSpec, Piece, PieceKind};

pub(crate) fn iv(lo: i64, hi: i64, step: i64) -> Result<IntervalD> {
    IntervalD::new(lo, hi, step)
}

pub(crate) fn union_of(parts: &[IntervalD]) -> SupportSet {
    let mut s = SupportSet::new();
    for &p in parts {
        s.add_interval(p);
    }
    s
}

/// `[1, top]` minus `used`; fails if `used` repeats a value or leaves the range.
pub(crate) fn complement(step: &str, top: i64, used: &SupportSet) -> Result<SupportSet> {
    if !used.is_set() {
        let d: Vec<i64> = used.duplicates().iter().take(8).map(|d| d.0).collect();
        return Err(Error::self_check(step, format!("repeated values {d:?}")));
    }
    if used.min().is_some_and(|v| v < 1) || used.max().is_some_and(|v| v > top) {
        return Err(Error::self_check(step, format!("values outside [1,{top}]")));
    }
    Ok((1..=top).filter(|&v| !used.contains(v)).collect())
}

/// The leftover must equal the union of the stated intervals exactly.
pub(crate) fn expect_leftover(step: &str, got: &SupportSet, parts: &[IntervalD]) -> Result<()> {
    let want = union_of(parts);
    if !want.is_set() {
        return Err(Error::self_check(step, "stated leftover intervals overlap"));
    }
    if got.values() != want.values() {
        let g = got.values();
        let w = want.values();
        let extra: Vec<i64> = g.iter().filter(|v| !want.contains(**v)).take(6).copied().collect();
        let missing: Vec<i64> = w.iter().filter(|v| !got.contains(**v)).take(6).copied().collect();
        return Err(Error::self_check(
            step,
            format!("leftover differs: unexpected {extra:?}, missing {missing:?}"),
        ));
    }
    Ok(())
}

/// Cuts the union of `parts` into pieces of the given kinds.
pub(crate) fn cut(step: &str, parts: &[IntervalD], spec: &[(PieceKind, usize)]) -> Result<Pool> {
    let s = union_of(parts);
    let pieces = partition_pieces(&s, &PartitionSpec::new(spec))
        .map_err(|e| Error::self_check(step, e.to_string()))?;
    Ok(Pool::new(step, pieces))
}

/// Pieces of several kinds, consumed from the front per kind.
pub(crate) struct Pool {
    name: String,
    pieces: VecDeque<Piece>,
}

impl Pool {
    pub(crate) fn new(name: &str, pieces: Vec<Piece>) -> Self {
        Self {
            name: name.to_string(),
            pieces: pieces.into(),
        }
    }

    pub(crate) fn take(&mut self, kind: PieceKind, n: usize) -> Result<Vec<Piece>> {
        let mut out = Vec::with_capacity(n);
        let mut keep = VecDeque::with_capacity(self.pieces.len());
        while let Some(p) = self.pieces.pop_front() {
            if out.len() < n && p.kind == kind {
                out.push(p);
            } else {
                keep.push_back(p);
            }
        }
        self.pieces = keep;
        if out.len() < n {
            return Err(Error::self_check(
                self.name.clone(),
                format!("needed {n} pieces of {kind}, had {}", out.len()),
            ));
        }
        Ok(out)
    }

    pub(crate) fn rest(&mut self, kind: PieceKind) -> Vec<FourSet> {
        let n = self.pieces.iter().filter(|p| p.kind == kind).count();
        self.take(kind, n)
            .expect("count taken from the pool itself")
            .iter()
            .filter_map(Piece::four_set)
            .collect()
    }

    pub(crate) fn extend(&mut self, other: Pool) {
        self.pieces.extend(other.pieces);
    }

    pub(crate) fn finish(&self) -> Result<()> {
        if self.pieces.is_empty() {
            Ok(())
        } else {
            Err(Error::self_check(
                self.name.clone(),
                format!("{} piece(s) left unused", self.pieces.len()),
            ))
        }
    }
}

/// Fills a template from pieces given per parameter role.
pub(crate) fn fill(t: Template, w: &[Piece], x: &[Piece], y: &[Piece], z: &[Piece]) -> Result<Block> {
    let bases = |ps: &[Piece]| ps.iter().map(Piece::base).collect::<Vec<_>>();
    instantiate_template(
        t,
        &TemplateParams {
            w: bases(w),
            x: bases(x),
            y: bases(y),
            z: bases(z),
        },
    )
}

/// An ordered stock of blocks that must be used up exactly.
pub(crate) struct Supply {
    name: &'static str,
    items: VecDeque<Block>,
}

impl Supply {
    pub(crate) fn new(name: &'static str, items: impl IntoIterator<Item = Block>) -> Self {
        Self {
            name,
            items: items.into_iter().collect(),
        }
    }

    pub(crate) fn next(&mut self) -> Result<Block> {
        self.items
            .pop_front()
            .ok_or_else(|| Error::self_check(self.name, "ran out of blocks"))
    }

    pub(crate) fn finish(&self) -> Result<()> {
        if self.items.is_empty() {
            Ok(())
        } else {
            Err(Error::self_check(self.name, format!("{} block(s) left unused", self.items.len())))
        }
    }
}

/// The members under construction.
pub(crate) struct Canvas {
    m: usize,
    n: usize,
    arrays: Vec<PartialArray>,
}

impl Canvas {
    pub(crate) fn new(m: usize, n: usize, c: usize) -> Result<Self> {
        Ok(Self {
            m,
            n,
            arrays: vec![PartialArray::empty(m, n)?; c],
        })
    }

    pub(crate) fn put(&mut self, k: usize, r: usize, c: usize, b: &Block) -> Result<()> {
        self.arrays[k].place(r, c, b)
    }

    /// Checks the finished set against the axioms.
    pub(crate) fn finish(self, step: &str) -> Result<Vec<PartialArray>> {
        let c = self.arrays.len();
        let report = verify_ihs(&self.arrays, self.m, self.n, c);
        if !report.passed {
            return Err(Error::self_check(step, report.to_string()));
        }
        Ok(self.arrays)
    }
}
