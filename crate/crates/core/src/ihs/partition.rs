//! Cutting a support set into 4-sets and runs of consecutive integers.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::{FourSet, SupportSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PieceKind {
    /// `{x, x+1, x+2, x+3}`
    Type1,
    /// `{x, x+2, x+4, x+6}`
    Type2,
    /// `{x, x+4, x+8, x+12}`
    Type4,
    /// Eight consecutive integers.
    K8,
    /// Twelve consecutive integers.
    M12,
}

impl PieceKind {
    pub const ALL: [PieceKind; 5] = [
        PieceKind::Type1,
        PieceKind::Type2,
        PieceKind::Type4,
        PieceKind::K8,
        PieceKind::M12,
    ];

    pub fn size(self) -> usize {
        match self {
            PieceKind::Type1 | PieceKind::Type2 | PieceKind::Type4 => 4,
            PieceKind::K8 => 8,
            PieceKind::M12 => 12,
        }
    }

    pub fn step(self) -> i64 {
        match self {
            PieceKind::Type2 => 2,
            PieceKind::Type4 => 4,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PieceKind::Type1 => "type1",
            PieceKind::Type2 => "type2",
            PieceKind::Type4 => "type4",
            PieceKind::K8 => "k8",
            PieceKind::M12 => "m12",
        }
    }
}

impl fmt::Display for PieceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A piece given by its kind and smallest element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Piece {
    pub kind: PieceKind,
    pub start: i64,
}

impl Piece {
    pub fn new(kind: PieceKind, start: i64) -> Self {
        Self { kind, start }
    }

    pub fn elements(&self) -> impl Iterator<Item = i64> {
        let (start, step) = (self.start, self.kind.step());
        (0..self.kind.size() as i64).map(move |i| start + i * step)
    }

    /// The same piece as a [`FourSet`]; `None` for 8- and 12-runs.
    pub fn four_set(&self) -> Option<FourSet> {
        match self.kind {
            PieceKind::Type1 => FourSet::new(self.start, 1).ok(),
            PieceKind::Type2 => FourSet::new(self.start, 2).ok(),
            PieceKind::Type4 => FourSet::new(self.start, 4).ok(),
            _ => None,
        }
    }

    /// Template base: `start - 4` for type 4, `start - 2` for type 2 and
    /// `start - 1` otherwise.
    pub fn base(&self) -> i64 {
        match self.kind {
            PieceKind::Type4 => self.start - 4,
            PieceKind::Type2 => self.start - 2,
            _ => self.start - 1,
        }
    }
}

/// How many pieces of each kind are wanted. Kinds are tried in list order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PartitionSpec {
    pub wanted: Vec<(PieceKind, usize)>,
}

impl PartitionSpec {
    pub fn new(wanted: &[(PieceKind, usize)]) -> Self {
        Self {
            wanted: wanted.iter().copied().filter(|&(_, n)| n > 0).collect(),
        }
    }

    pub fn total_size(&self) -> usize {
        self.wanted.iter().map(|&(k, n)| k.size() * n).sum()
    }
}

const NODE_LIMIT: u64 = 2_000_000;

/// Partitions `s` into disjoint pieces with the requested counts.
///
/// Searches from the smallest remaining value, which must be the smallest
/// element of some piece; kinds are tried in spec order. The result is
/// sorted by smallest element.
pub fn partition_pieces(s: &SupportSet, spec: &PartitionSpec) -> Result<Vec<Piece>> {
    if !s.is_set() {
        return Err(Error::Partition(format!("source has repeated values {:?}", s.duplicates())));
    }
    if spec.total_size() != s.len() {
        return Err(Error::Partition(format!(
            "spec covers {} values but the source has {}",
            spec.total_size(),
            s.len()
        )));
    }
    let mut left: BTreeSet<i64> = s.values().into_iter().collect();
    let mut counts: Vec<(PieceKind, usize)> = spec.wanted.clone();
    let mut out = Vec::new();
    let mut nodes = 0u64;
    match dfs(&mut left, &mut counts, &mut out, &mut nodes) {
        Some(true) => Ok(out),
        Some(false) => Err(Error::Partition(format!("no partition of {} values with {:?}", s.len(), spec.wanted))),
        None => Err(Error::Partition(format!("search budget exhausted after {nodes} nodes"))),
    }
}

fn dfs(
    left: &mut BTreeSet<i64>,
    counts: &mut [(PieceKind, usize)],
    out: &mut Vec<Piece>,
    nodes: &mut u64,
) -> Option<bool> {
    let Some(&x) = left.iter().next() else {
        return Some(true);
    };
    *nodes += 1;
    if *nodes > NODE_LIMIT {
        return None;
    }
    for i in 0..counts.len() {
        let (kind, n) = counts[i];
        if n == 0 {
            continue;
        }
        let piece = Piece::new(kind, x);
        if !piece.elements().all(|v| left.contains(&v)) {
            continue;
        }
        for v in piece.elements() {
            left.remove(&v);
        }
        counts[i].1 -= 1;
        out.push(piece);
        match dfs(left, counts, out, nodes) {
            Some(true) => return Some(true),
            None => return None,
            Some(false) => {}
        }
        out.pop();
        counts[i].1 += 1;
        left.extend(piece.elements());
    }
    Some(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::interval_set;

    #[test]
    fn even_run_into_type2() {
        let s = interval_set(18, 32, 2).unwrap();
        let p = partition_pieces(&s, &PartitionSpec::new(&[(PieceKind::Type2, 2)])).unwrap();
        assert_eq!(p, vec![Piece::new(PieceKind::Type2, 18), Piece::new(PieceKind::Type2, 26)]);
    }

    #[test]
    fn empty_and_consecutive() {
        assert!(partition_pieces(&SupportSet::new(), &PartitionSpec::default()).unwrap().is_empty());
        let s = interval_set(1, 12, 1).unwrap();
        let p = partition_pieces(&s, &PartitionSpec::new(&[(PieceKind::Type1, 3)])).unwrap();
        assert_eq!(p.iter().map(|p| p.start).collect::<Vec<_>>(), vec![1, 5, 9]);
    }

    #[test]
    fn respects_spec_order() {
        let s = interval_set(1, 20, 1).unwrap();
        let spec = PartitionSpec::new(&[(PieceKind::K8, 1), (PieceKind::M12, 1)]);
        let p = partition_pieces(&s, &spec).unwrap();
        assert_eq!(p, vec![Piece::new(PieceKind::K8, 1), Piece::new(PieceKind::M12, 9)]);
        let spec = PartitionSpec::new(&[(PieceKind::M12, 1), (PieceKind::K8, 1)]);
        let p = partition_pieces(&s, &spec).unwrap();
        assert_eq!(p, vec![Piece::new(PieceKind::M12, 1), Piece::new(PieceKind::K8, 13)]);
    }

    #[test]
    fn mixed_kinds() {
        let s: SupportSet = [1, 3, 5, 7, 2, 4, 6, 8].into_iter().collect();
        let spec = PartitionSpec::new(&[(PieceKind::Type1, 0), (PieceKind::Type2, 2)]);
        let p = partition_pieces(&s, &spec).unwrap();
        assert_eq!(p, vec![Piece::new(PieceKind::Type2, 1), Piece::new(PieceKind::Type2, 2)]);
        let s: SupportSet = (1..=16).collect();
        let spec = PartitionSpec::new(&[(PieceKind::Type1, 2), (PieceKind::Type2, 2)]);
        let p = partition_pieces(&s, &spec).unwrap();
        assert_eq!(
            p,
            vec![
                Piece::new(PieceKind::Type1, 1),
                Piece::new(PieceKind::Type1, 5),
                Piece::new(PieceKind::Type2, 9),
                Piece::new(PieceKind::Type2, 10),
            ]
        );
    }

    #[test]
    fn infeasible() {
        let s: SupportSet = [1, 2, 3, 5].into_iter().collect();
        assert!(partition_pieces(&s, &PartitionSpec::new(&[(PieceKind::Type1, 1)])).is_err());
    }
}
