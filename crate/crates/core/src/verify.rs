//! Axiomatic verifiers for integer Heffter arrays and Heffter array sets.

use std::fmt;

use serde::Serialize;

use crate::array::PartialArray;
use crate::interval::{support_of, SupportSet};

/// Which defining condition a violation breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    RowCount,
    ColCount,
    RowSum,
    ColSum,
    SupportRange,
    SupportDuplicate,
    SupportGap,
}

impl Axiom {
    pub fn tag(self) -> &'static str {
        match self {
            Axiom::RowCount => "row-count",
            Axiom::ColCount => "col-count",
            Axiom::RowSum => "row-sum",
            Axiom::ColSum => "col-sum",
            Axiom::SupportRange => "support-range",
            Axiom::SupportDuplicate => "support-duplicate",
            Axiom::SupportGap => "support-gap",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Where a violation sits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Location {
    Global,
    Member { member: usize },
    Row { member: usize, row: usize },
    Col { member: usize, col: usize },
    Value { value: i64 },
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Global => f.write_str("global"),
            Location::Member { member } => write!(f, "member {member}"),
            Location::Row { member, row } => write!(f, "member {member} row {row}"),
            Location::Col { member, col } => write!(f, "member {member} col {col}"),
            Location::Value { value } => write!(f, "value {value}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub location: Location,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        Self {
            passed: violations.is_empty(),
            violations,
        }
    }

    pub fn has(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            return writeln!(f, "passed");
        }
        writeln!(f, "failed with {} violation(s)", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  {} at {}: {}", v.axiom, v.location, v.detail)?;
        }
        Ok(())
    }
}

struct Collector(Vec<Violation>);

impl Collector {
    fn push(&mut self, axiom: Axiom, location: Location, detail: String) {
        self.0.push(Violation {
            axiom,
            location,
            detail,
        });
    }

    fn sums(&mut self, member: usize, a: &PartialArray) {
        let p = a.sum_profile();
        for (row, &s) in p.row_sums.iter().enumerate() {
            if s != 0 {
                self.push(Axiom::RowSum, Location::Row { member, row }, format!("sums to {s}"));
            }
        }
        for (col, &s) in p.col_sums.iter().enumerate() {
            if s != 0 {
                self.push(Axiom::ColSum, Location::Col { member, col }, format!("sums to {s}"));
            }
        }
    }

    fn support(&mut self, support: &SupportSet, top: i64) {
        for (v, c) in support.iter_counts() {
            if v < 1 || v > top {
                self.push(
                    Axiom::SupportRange,
                    Location::Value { value: v },
                    format!("outside [1,{top}]"),
                );
            }
            if c > 1 {
                self.push(
                    Axiom::SupportDuplicate,
                    Location::Value { value: v },
                    format!("occurs {c} times"),
                );
            }
        }
        let missing: Vec<i64> = (1..=top).filter(|&v| !support.contains(v)).collect();
        if !missing.is_empty() {
            let shown: Vec<String> = missing.iter().take(8).map(i64::to_string).collect();
            let more = if missing.len() > 8 { ", ..." } else { "" };
            self.push(
                Axiom::SupportGap,
                Location::Global,
                format!("{} value(s) of [1,{top}] missing: {}{more}", missing.len(), shown.join(", ")),
            );
        }
    }
}

/// Checks that `a` is an integer Heffter array with `s` filled cells per
/// row and `k` per column. Reports every violated condition.
pub fn verify_integer_heffter(a: &PartialArray, s: usize, k: usize) -> VerificationReport {
    let mut out = Collector(Vec::new());
    for row in 0..a.rows() {
        let got = a.row_filled(row);
        if got != s {
            out.push(
                Axiom::RowCount,
                Location::Row { member: 0, row },
                format!("{got} filled cells, expected {s}"),
            );
        }
    }
    for col in 0..a.cols() {
        let got = a.col_filled(col);
        if got != k {
            out.push(
                Axiom::ColCount,
                Location::Col { member: 0, col },
                format!("{got} filled cells, expected {k}"),
            );
        }
    }
    out.support(&support_of([a]), (a.cols() * k) as i64);
    out.sums(0, a);
    VerificationReport::from_violations(out.0)
}

/// Checks that `set` is an integer Heffter array set with `c` totally
/// filled `m x n` members whose supports partition `[1, mnc]`.
pub fn verify_ihs(set: &[PartialArray], m: usize, n: usize, c: usize) -> VerificationReport {
    let mut out = Collector(Vec::new());
    if set.len() != c {
        out.push(
            Axiom::RowCount,
            Location::Global,
            format!("{} member(s), expected {c}", set.len()),
        );
    }
    for (member, a) in set.iter().enumerate() {
        if a.rows() != m || a.cols() != n {
            out.push(
                Axiom::RowCount,
                Location::Member { member },
                format!("shape {}x{}, expected {m}x{n}", a.rows(), a.cols()),
            );
        }
        for row in 0..a.rows() {
            let got = a.row_filled(row);
            if got != a.cols() {
                out.push(
                    Axiom::RowCount,
                    Location::Row { member, row },
                    format!("{got} filled cells, expected {}", a.cols()),
                );
            }
        }
        for col in 0..a.cols() {
            let got = a.col_filled(col);
            if got != a.rows() {
                out.push(
                    Axiom::ColCount,
                    Location::Col { member, col },
                    format!("{got} filled cells, expected {}", a.rows()),
                );
            }
        }
        out.sums(member, a);
    }
    out.support(&support_of(set), (m * n * c) as i64);
    VerificationReport::from_violations(out.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_fails_sum_and_support() {
        let a = PartialArray::from_rows(&[vec![Some(1)]]).unwrap();
        let r = verify_integer_heffter(&a, 1, 1);
        assert!(!r.passed);
        assert!(r.has(Axiom::RowSum));
        assert!(r.has(Axiom::ColSum));
        // support {1} equals [1,1], so the failure is the sums; a larger
        // declared k exposes the gap
        let r = verify_integer_heffter(&a, 1, 2);
        assert!(r.has(Axiom::SupportGap));
        assert!(r.has(Axiom::ColCount));
    }

    #[test]
    fn duplicate_values_are_reported() {
        let a = PartialArray::from_rows(&[
            vec![Some(1), Some(-1)],
            vec![Some(-1), Some(1)],
        ])
        .unwrap();
        let r = verify_integer_heffter(&a, 2, 2);
        assert!(r.has(Axiom::SupportDuplicate));
        assert!(r.has(Axiom::SupportGap));
        assert!(!r.has(Axiom::RowSum));
    }
}
