//! Exhaustive searches and independent re-derivations used to check the
//! constructions on small inputs.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::array::PartialArray;
use crate::blocks::{self, BlockFamily};
use crate::error::Result;
use crate::ihs::{PartitionSpec, Piece, PieceKind};
use crate::interval::SupportSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl SearchBudget {
    pub fn new(max_nodes: u64, max_time: Duration) -> Self {
        Self { max_nodes, max_time }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self::new(10_000_000, Duration::from_secs(60))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SearchOutcome<T> {
    Exists(T),
    /// The search finished without finding anything.
    NotExists,
    /// The budget ran out first.
    Inconclusive,
}

impl<T> SearchOutcome<T> {
    pub fn exists(&self) -> bool {
        matches!(self, SearchOutcome::Exists(_))
    }
}

struct Meter {
    nodes: u64,
    budget: SearchBudget,
    start: Instant,
}

impl Meter {
    fn new(budget: SearchBudget) -> Self {
        Self {
            nodes: 0,
            budget,
            start: Instant::now(),
        }
    }

    /// Counts a node; `false` once the budget is spent.
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return false;
        }
        self.nodes % 4096 != 0 || self.start.elapsed() <= self.budget.max_time
    }
}

/// Tries every piece kind at the smallest uncovered value. Complete: the
/// smallest value of the source is always the smallest value of some piece.
pub fn brute_partition(s: &SupportSet, spec: &PartitionSpec, budget: SearchBudget) -> SearchOutcome<Vec<Piece>> {
    if !s.is_set() || spec.total_size() != s.len() {
        return SearchOutcome::NotExists;
    }
    let values = s.values();
    let mut need = [0usize; 5];
    for &(k, n) in &spec.wanted {
        need[kind_index(k)] += n;
    }
    let mut left: BTreeSet<i64> = values.into_iter().collect();
    let mut out = Vec::new();
    let mut meter = Meter::new(budget);
    match partition_rec(&mut left, &mut need, &mut out, &mut meter) {
        Some(true) => SearchOutcome::Exists(out),
        Some(false) => SearchOutcome::NotExists,
        None => SearchOutcome::Inconclusive,
    }
}

fn kind_index(k: PieceKind) -> usize {
    PieceKind::ALL.iter().position(|&x| x == k).expect("listed kind")
}

fn partition_rec(left: &mut BTreeSet<i64>, need: &mut [usize; 5], out: &mut Vec<Piece>, meter: &mut Meter) -> Option<bool> {
    let Some(&x) = left.first() else {
        return Some(true);
    };
    if !meter.tick() {
        return None;
    }
    for (i, kind) in PieceKind::ALL.into_iter().enumerate() {
        if need[i] == 0 {
            continue;
        }
        let members: Vec<i64> = (0..kind.size() as i64).map(|j| x + j * kind.step()).collect();
        if !members.iter().all(|v| left.contains(v)) {
            continue;
        }
        for v in &members {
            left.remove(v);
        }
        need[i] -= 1;
        out.push(Piece::new(kind, x));
        match partition_rec(left, need, out, meter) {
            Some(true) => return Some(true),
            None => return None,
            Some(false) => {}
        }
        out.pop();
        need[i] += 1;
        left.extend(members);
    }
    Some(false)
}

/// Exhaustive search for an integer `H(m, n; s, k)`.
///
/// Cells are visited in row-major order; each is left empty or given a
/// value, smallest absolute value first and positive before negative. The
/// last cell of a row or column gets the value that cancels its sum. A
/// partial sum that the remaining cells cannot cancel prunes the branch.
pub fn brute_heffter_small(m: usize, n: usize, s: usize, k: usize, budget: SearchBudget) -> SearchOutcome<PartialArray> {
    if m == 0 || n == 0 || m * s != n * k || s > n || k > m {
        return SearchOutcome::NotExists;
    }
    let mut st = State {
        m,
        n,
        s,
        k,
        top: (n * k) as i64,
        cells: vec![None; m * n],
        used: vec![false; n * k + 1],
        row_sum: vec![0; m],
        col_sum: vec![0; n],
        row_cnt: vec![0; m],
        col_cnt: vec![0; n],
    };
    let mut meter = Meter::new(budget);
    match st.rec(0, &mut meter) {
        Some(true) => {
            let rows: Vec<Vec<Option<i64>>> = st.cells.chunks(n).map(|r| r.to_vec()).collect();
            SearchOutcome::Exists(PartialArray::from_rows(&rows).expect("search fills nonzero values"))
        }
        Some(false) => SearchOutcome::NotExists,
        None => SearchOutcome::Inconclusive,
    }
}

struct State {
    m: usize,
    n: usize,
    s: usize,
    k: usize,
    top: i64,
    cells: Vec<Option<i64>>,
    used: Vec<bool>,
    row_sum: Vec<i64>,
    col_sum: Vec<i64>,
    row_cnt: Vec<usize>,
    col_cnt: Vec<usize>,
}

impl State {
    /// Sum of the `r` largest unused absolute values.
    fn reach(&self, r: usize) -> i64 {
        (1..=self.top).rev().filter(|&v| !self.used[v as usize]).take(r).sum()
    }

    fn sums_reachable(&self, i: usize, j: usize) -> bool {
        let rr = self.s - self.row_cnt[i];
        let cr = self.k - self.col_cnt[j];
        self.row_sum[i].abs() <= self.reach(rr) && self.col_sum[j].abs() <= self.reach(cr)
    }

    fn rec(&mut self, pos: usize, meter: &mut Meter) -> Option<bool> {
        if pos == self.m * self.n {
            return Some(true);
        }
        if !meter.tick() {
            return None;
        }
        let (i, j) = (pos / self.n, pos % self.n);
        let row_left = self.n - j;
        let col_left = self.m - i;
        let row_need = self.s - self.row_cnt[i];
        let col_need = self.k - self.col_cnt[j];

        if row_need > 0 && col_need > 0 {
            let forced = if row_need == 1 {
                Some(-self.row_sum[i])
            } else if col_need == 1 {
                Some(-self.col_sum[j])
            } else {
                None
            };
            let candidates: Vec<i64> = match forced {
                Some(v) => vec![v],
                None => (1..=self.top).flat_map(|a| [a, -a]).collect(),
            };
            for v in candidates {
                let a = v.unsigned_abs() as usize;
                if v == 0 || a > self.top as usize || self.used[a] {
                    continue;
                }
                if row_need == 1 && self.row_sum[i] + v != 0 {
                    continue;
                }
                if col_need == 1 && self.col_sum[j] + v != 0 {
                    continue;
                }
                self.place(i, j, v, true);
                let ok = self.sums_reachable(i, j);
                if ok {
                    match self.rec(pos + 1, meter) {
                        Some(true) => return Some(true),
                        None => return None,
                        Some(false) => {}
                    }
                }
                self.place(i, j, v, false);
            }
        }
        if row_left > row_need && col_left > col_need {
            return self.rec(pos + 1, meter);
        }
        Some(false)
    }

    fn place(&mut self, i: usize, j: usize, v: i64, on: bool) {
        let a = v.unsigned_abs() as usize;
        let sign = if on { 1 } else { -1 };
        self.used[a] = on;
        self.cells[i * self.n + j] = on.then_some(v);
        self.row_sum[i] += sign * v;
        self.col_sum[j] += sign * v;
        if on {
            self.row_cnt[i] += 1;
            self.col_cnt[j] += 1;
        } else {
            self.row_cnt[i] -= 1;
            self.col_cnt[j] -= 1;
        }
    }
}

/// Family constructors that [`cross_check_lemma`] knows how to re-derive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyId {
    AAlpha,
    A2,
    A3,
    BFamily,
    B2Family,
    B3Family,
    B4Family,
}

impl FamilyId {
    pub const ALL: [FamilyId; 7] = [
        FamilyId::AAlpha,
        FamilyId::A2,
        FamilyId::A3,
        FamilyId::BFamily,
        FamilyId::B2Family,
        FamilyId::B3Family,
        FamilyId::B4Family,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::AAlpha => "a_alpha",
            FamilyId::A2 => "a2",
            FamilyId::A3 => "a3",
            FamilyId::BFamily => "b_family",
            FamilyId::B2Family => "b2_family",
            FamilyId::B3Family => "b3_family",
            FamilyId::B4Family => "b4_family",
        }
    }

    /// How many integer parameters the constructor takes.
    pub fn arity(self) -> usize {
        match self {
            FamilyId::AAlpha | FamilyId::B2Family | FamilyId::B4Family => 3,
            FamilyId::A2 | FamilyId::A3 => 2,
            FamilyId::BFamily => 4,
            FamilyId::B3Family => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheckReport {
    pub family: FamilyId,
    pub params: Vec<i64>,
    pub mismatches: Vec<String>,
}

impl CrossCheckReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn run(p: (i64, i64, i64)) -> Vec<i64> {
    let (lo, hi, step) = p;
    if lo > hi {
        Vec::new()
    } else {
        (lo..=hi).step_by(step as usize).collect()
    }
}

/// The support each family should have, expanded directly from its
/// interval description.
fn expected_support(id: FamilyId, p: &[i64]) -> Vec<i64> {
    let parts: Vec<(i64, i64, i64)> = match id {
        FamilyId::AAlpha => {
            let (b, u) = (p[1], p[2]);
            vec![
                (1, 16 * u - 1, 2),
                (2, 8 * u - 2, 4),
                (b + 1, b + 4 * u, 1),
                (b + 10 * u + 1, b + 12 * u, 1),
                (b + 16 * u + 1, b + 18 * u, 1),
            ]
        }
        FamilyId::A2 => {
            let (b, u) = (p[0], p[1]);
            vec![
                (9, 2 * u + 7, 2),
                (10, 4 * u + 6, 4),
                (2 * u + 17, 6 * u + 15, 2),
                (6 * u + 25, 8 * u + 23, 2),
                (b, b + u - 1, 1),
                (b + u + 8, b + 2 * u + 7, 1),
                (b + 5 * u + 16, b + 6 * u + 15, 1),
                (b + 8 * u + 32, b + 9 * u + 31, 1),
            ]
        }
        FamilyId::A3 => {
            let (a, u) = (p[0], p[1]);
            vec![
                (4 * a + 9, 2 * u + 4 * a + 7, 2),
                (2 * u + 4 * a + 8, 3 * u + 4 * a + 7, 1),
                (3 * u + 8 * a + 16, 5 * u + 8 * a + 15, 1),
                (5 * u + 12 * a + 24, 6 * u + 12 * a + 23, 1),
                (6 * u + 12 * a + 25, 8 * u + 12 * a + 23, 2),
                (9 * u + 16 * a + 32, 10 * u + 16 * a + 31, 1),
                (11 * u + 20 * a + 40, 12 * u + 20 * a + 39, 1),
                (14 * u + 28 * a + 56, 16 * u + 28 * a + 54, 2),
            ]
        }
        FamilyId::BFamily => {
            let (d, b, l, u) = (p[0], p[1], p[2], p[3]);
            let s = 4 * u + 4 * l;
            vec![
                (2 * b + 1, 2 * b + 2 * s - 1, 2),
                (2 * b + 2 * s + d, 2 * b + 3 * s + d - 1, 1),
                (4 * b + 3 * s + d, 4 * b + 4 * s + d - 1, 1),
            ]
        }
        FamilyId::B2Family => {
            let (b, l) = (p[0], p[1]);
            vec![(b - 6 * l + 1, b + 2 * l, 1), (2 * b - 8 * l + 2, 2 * b, 2)]
        }
        FamilyId::B3Family => {
            let u = p[0];
            vec![
                (24 * u + 36, 32 * u + 34, 2),
                (32 * u + 37, 36 * u + 47, 2),
                (40 * u + 49, 44 * u + 59, 2),
                (48 * u + 61, 96 * u + 83, 2),
                (96 * u + 84, 128 * u + 107, 1),
                (152 * u + 144, 158 * u + 149, 1),
                (162 * u + 150, 164 * u + 155, 1),
                (168 * u + 156, 192 * u + 167, 1),
            ]
        }
        FamilyId::B4Family => {
            let (b, l, x) = (p[0], p[1], p[2]);
            vec![(b, b + 2 * l, 2), (x, x + l, 1), (x + b + l, x + b + 2 * l, 1)]
        }
    };
    let mut v: Vec<i64> = parts.into_iter().flat_map(run).collect();
    v.sort_unstable();
    v
}

/// Expected `(class, member count, row sums, col sums)` for each class.
fn expected_classes(id: FamilyId, p: &[i64]) -> Vec<(&'static str, usize, Vec<i64>, Vec<i64>)> {
    match id {
        FamilyId::AAlpha => {
            let (a, u) = (p[0], p[2]);
            vec![("A", 2 * u as usize, vec![0; 3], vec![4 * a, -2 * a, -2 * a])]
        }
        FamilyId::A2 => vec![("A", p[1] as usize, vec![0; 3], vec![0; 3])],
        FamilyId::A3 => vec![("A", p[1] as usize, vec![0; 3], vec![0; 3])],
        FamilyId::BFamily => {
            let (l, u) = (p[2] as usize, p[3] as usize);
            vec![
                ("B'", 2 * l, vec![0, 0], vec![-2, 1, 1]),
                ("B''", 2 * u, vec![0, 0], vec![-4, 2, 2]),
            ]
        }
        FamilyId::B2Family => {
            let (l, u) = (p[1] as usize, p[2] as usize);
            vec![
                ("B1", 2 * u, vec![2, -2], vec![-4, 2, 2]),
                ("B0", 2 * (l - u), vec![0, 0], vec![-4, 2, 2]),
            ]
        }
        FamilyId::B3Family => {
            let u = p[0] as usize;
            vec![
                ("BI", 14 * u + 12, vec![0, 0], vec![-2, 1, 1]),
                ("BII", 2 * u, vec![-1, 1], vec![-2, 1, 1]),
            ]
        }
        FamilyId::B4Family => vec![("B", ((p[1] + 1) / 2) as usize, vec![0, 0], vec![-2, 1, 1])],
    }
}

fn construct(id: FamilyId, p: &[i64]) -> Result<BlockFamily> {
    match id {
        FamilyId::AAlpha => blocks::a_alpha(p[0], p[1], p[2]),
        FamilyId::A2 => blocks::a2(p[0], p[1]),
        FamilyId::A3 => blocks::a3(p[0], p[1]),
        FamilyId::BFamily => blocks::b_family(p[0], p[1], p[2], p[3]),
        FamilyId::B2Family => blocks::b2_family(p[0], p[1], p[2]),
        FamilyId::B3Family => blocks::b3_family(p[0]),
        FamilyId::B4Family => blocks::b4_family(p[0], p[1], p[2]),
    }
}

/// Builds a family and compares it against values computed here from
/// scratch: each member's row and column sums, the class sizes, and the
/// support as the sorted expansion of the interval description.
pub fn cross_check_lemma(id: FamilyId, params: &[i64]) -> CrossCheckReport {
    let mut mismatches = Vec::new();
    if params.len() != id.arity() {
        mismatches.push(format!("expected {} parameters, got {}", id.arity(), params.len()));
        return CrossCheckReport {
            family: id,
            params: params.to_vec(),
            mismatches,
        };
    }
    match construct(id, params) {
        Err(e) => mismatches.push(format!("constructor failed: {e}")),
        Ok(fam) => {
            let mut offset = 0;
            for (name, count, rows, cols) in expected_classes(id, params) {
                let members = fam.class(name);
                if members.len() != count {
                    mismatches.push(format!("class {name}: {} members, expected {count}", members.len()));
                }
                for (i, b) in members.iter().enumerate() {
                    let rs: Vec<i64> = (0..b.rows()).map(|r| b.row(r).iter().sum()).collect();
                    let cs: Vec<i64> = (0..b.cols()).map(|c| (0..b.rows()).map(|r| b.get(r, c)).sum()).collect();
                    if rs != rows || cs != cols {
                        mismatches.push(format!("member {} ({name}): sums {rs:?}/{cs:?}", offset + i));
                    }
                }
                offset += members.len();
            }
            if offset != fam.len() {
                mismatches.push(format!("{} members outside the expected classes", fam.len() - offset));
            }
            let mut got: Vec<i64> = fam
                .members()
                .iter()
                .flat_map(|b| b.entries().iter().map(|v| v.abs()))
                .collect();
            got.sort_unstable();
            let want = expected_support(id, params);
            if got != want {
                mismatches.push(format!(
                    "support: {} values built, {} expected",
                    got.len(),
                    want.len()
                ));
            }
        }
    }
    CrossCheckReport {
        family: id,
        params: params.to_vec(),
        mismatches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::interval_set;
    use crate::verify::verify_integer_heffter;

    fn small() -> SearchBudget {
        SearchBudget::new(10_000_000, Duration::from_secs(120))
    }

    #[test]
    fn partition_examples() {
        let s = interval_set(18, 32, 2).unwrap();
        assert!(brute_partition(&s, &PartitionSpec::new(&[(PieceKind::Type2, 2)]), small()).exists());
        let s: SupportSet = [1, 2, 3, 5].into_iter().collect();
        assert_eq!(
            brute_partition(&s, &PartitionSpec::new(&[(PieceKind::Type1, 1)]), small()),
            SearchOutcome::NotExists
        );
        let s = interval_set(1, 8, 1).unwrap();
        assert_eq!(
            brute_partition(&s, &PartitionSpec::new(&[(PieceKind::K8, 1)]), small()),
            SearchOutcome::Exists(vec![Piece::new(PieceKind::K8, 1)])
        );
    }

    #[test]
    fn heffter_3x4() {
        match brute_heffter_small(3, 4, 4, 3, small()) {
            SearchOutcome::Exists(a) => assert!(verify_integer_heffter(&a, 4, 3).passed),
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn heffter_mismatched_counts() {
        assert_eq!(brute_heffter_small(3, 4, 3, 3, small()), SearchOutcome::NotExists);
    }

    #[test]
    fn cross_check_small() {
        assert!(cross_check_lemma(FamilyId::AAlpha, &[0, 15, 1]).ok());
        assert!(cross_check_lemma(FamilyId::B3Family, &[2]).ok());
        assert!(!cross_check_lemma(FamilyId::A2, &[1]).ok());
    }
}
