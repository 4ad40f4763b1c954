//! Turning array sets into integer Heffter arrays, and deciding which
//! parameter quadruples are handled here.

use std::fmt;

use serde::Serialize;

use crate::array::PartialArray;
use crate::error::{Error, Result};
use crate::ihs::build_ihs;
use crate::verify::{verify_ihs, verify_integer_heffter};

/// Why a quadruple with no known construction is open.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OpenReason {
    /// `k = 5`.
    KIsFive,
    /// `5 != k < 7 gcd(s,k)` and `s` not divisible by 4.
    SmallK,
    /// `k >= 7 gcd(s,k)` and `s` in `{3, 5, 6, 10}`.
    SmallS,
    /// Passes the necessary conditions but matches no listed description.
    Unlisted,
}

impl OpenReason {
    pub fn id(self) -> u8 {
        match self {
            OpenReason::KIsFive => 1,
            OpenReason::SmallK => 2,
            OpenReason::SmallS => 3,
            OpenReason::Unlisted => 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case", tag = "verdict", content = "case")]
pub enum Feasibility {
    /// A necessary condition fails, so no integer array exists.
    NecessaryFail,
    /// [`build_integer_heffter`] constructs it.
    ConstructedHere,
    /// Covered by one of the six previously known constructions.
    KnownElsewhere(u8),
    Open(OpenReason),
}

impl fmt::Display for Feasibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Feasibility::NecessaryFail => f.write_str("necessary-fail"),
            Feasibility::ConstructedHere => f.write_str("constructed-here"),
            Feasibility::KnownElsewhere(i) => write!(f, "known-elsewhere({i})"),
            Feasibility::Open(r) => write!(f, "open({})", r.id()),
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The necessary conditions for an integer `H(m,n;s,k)`.
pub fn necessary_conditions(m: usize, n: usize, s: usize, k: usize) -> bool {
    (3..=n).contains(&s) && (3..=m).contains(&k) && m * s == n * k && matches!((n * k) % 4, 0 | 3)
}

/// How the construction route decomposes a quadruple with odd `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Route {
    d: usize,
    k1: usize,
    s1: usize,
    c: usize,
}

/// `Some` when `k >= 7 gcd(s,k)` is odd and `s` is odd `>= 7` or
/// `s = 2 (mod 4)` with `s >= 14`. Assumes the necessary conditions.
fn route(m: usize, s: usize, k: usize) -> Option<Route> {
    let d = gcd(s, k);
    let ok_s = (s % 2 == 1 && s >= 7) || (s % 4 == 2 && s >= 14);
    if k % 2 == 1 && k >= 7 * d && ok_s {
        let k1 = k / d;
        Some(Route {
            d,
            k1,
            s1: s / d,
            c: m / k1,
        })
    } else {
        None
    }
}

fn known_elsewhere(m: usize, n: usize, s: usize, k: usize) -> Option<u8> {
    let d = gcd(s, k);
    if s == k {
        Some(1)
    } else if m == k && n == s {
        Some(2)
    } else if s % 2 == 0 && k % 2 == 0 {
        Some(3)
    } else if d % 4 == 3 {
        Some(4)
    } else if d % 4 == 1 && d >= 5 && (n * k) % 4 == 3 {
        Some(5)
    } else if s % 4 == 0 && k != 5 && k % 2 == 1 {
        Some(6)
    } else {
        None
    }
}

fn open_reason(m: usize, n: usize, s: usize, k: usize) -> OpenReason {
    let d = gcd(s, k);
    let frame = k % 2 == 1 && s != k && k != m && d % 4 == 1 && (d < 5 || n % 4 == 0);
    if !frame {
        OpenReason::Unlisted
    } else if k == 5 {
        OpenReason::KIsFive
    } else if k < 7 * d && s % 4 != 0 {
        OpenReason::SmallK
    } else if k >= 7 * d && matches!(s, 3 | 5 | 6 | 10) {
        OpenReason::SmallS
    } else {
        OpenReason::Unlisted
    }
}

/// Whether the transposed quadruple `(n, m, k, s)` is the one to work with:
/// the routes here need odd `k`, so an even `k` with odd `s` is swapped.
fn swapped(s: usize, k: usize) -> bool {
    k % 2 == 0 && s % 2 == 1
}

/// Classifies `(m, n, s, k)`. Checks run in the order necessary conditions,
/// construction here (after swapping to odd `k` if needed, with at least
/// two arrays in the set), the six known cases in numbering order (on the
/// quadruple as given, then swapped), and finally the open descriptions.
pub fn classify(m: usize, n: usize, s: usize, k: usize) -> Feasibility {
    if !necessary_conditions(m, n, s, k) {
        return Feasibility::NecessaryFail;
    }
    let (mm, nn, ss, kk) = if swapped(s, k) { (n, m, k, s) } else { (m, n, s, k) };
    if route(mm, ss, kk).is_some_and(|r| r.c >= 2) {
        return Feasibility::ConstructedHere;
    }
    if let Some(i) = known_elsewhere(m, n, s, k).or_else(|| known_elsewhere(n, m, k, s)) {
        return Feasibility::KnownElsewhere(i);
    }
    Feasibility::Open(open_reason(mm, nn, ss, kk))
}

/// Places the members of an `IHS(a, b·e; c)` along a wrapped block diagonal:
/// entry `(i, j)` of member `l` goes to row `a·l + i`, column
/// `(b·l + j) mod b·c`. The result is an integer `H(ac, bc; be, ae)`.
pub fn ihs_to_heffter(set: &[PartialArray], a: usize, b: usize, e: usize) -> Result<PartialArray> {
    let c = set.len();
    if a == 0 || b == 0 || e == 0 || e > c {
        return Err(Error::InvalidParams(format!(
            "need positive a, b, e with e <= c, got a={a}, b={b}, e={e}, c={c}"
        )));
    }
    let report = verify_ihs(set, a, b * e, c);
    if !report.passed {
        return Err(Error::InvalidParams(format!("input is not an IHS({a},{};{c}): {report}", b * e)));
    }
    let width = b * c;
    let mut out = PartialArray::empty(a * c, width)?;
    for (l, member) in set.iter().enumerate() {
        for i in 0..a {
            for j in 0..b * e {
                let v = member.get(i, j).expect("verified arrays are totally filled");
                out.fill(a * l + i, (b * l + j) % width, v)
                    .map_err(|err| Error::self_check("diagonal composition", err.to_string()))?;
            }
        }
    }
    Ok(out)
}

/// Concatenates consecutive runs of `e` members side by side, turning an
/// `IHS(a, b; ce)` into an `IHS(a, be; c)`.
pub fn ihs_regroup(set: &[PartialArray], e: usize) -> Result<Vec<PartialArray>> {
    if e == 0 || set.len() % e != 0 {
        return Err(Error::InvalidParams(format!(
            "{} members cannot be grouped in runs of {e}",
            set.len()
        )));
    }
    let Some(first) = set.first() else {
        return Ok(Vec::new());
    };
    let (a, b) = (first.rows(), first.cols());
    if set.iter().any(|x| x.rows() != a || x.cols() != b) {
        return Err(Error::InvalidParams("members differ in shape".into()));
    }
    set.chunks(e)
        .map(|group| {
            let rows: Vec<Vec<Option<i64>>> = (0..a)
                .map(|r| group.iter().flat_map(|x| x.row_cells(r).iter().copied()).collect())
                .collect();
            PartialArray::from_rows(&rows)
        })
        .collect()
}

/// Builds an integer `H(m, n; s, k)` for every quadruple classified as
/// [`Feasibility::ConstructedHere`].
pub fn build_integer_heffter(m: usize, n: usize, s: usize, k: usize) -> Result<PartialArray> {
    if !necessary_conditions(m, n, s, k) {
        return Err(Error::InvalidParams(format!(
            "H({m},{n};{s},{k}) fails the necessary conditions"
        )));
    }
    if swapped(s, k) {
        if route(n, k, s).is_some() {
            return build_integer_heffter(n, m, k, s).map(|h| h.transpose());
        }
    } else if let Some(r) = route(m, s, k) {
        if r.c < 2 {
            return Err(Error::ExternalConstruction(format!(
                "H({m},{n};{s},{k}) would need an IHS with a single array"
            )));
        }
        let set = if s % 2 == 1 {
            build_ihs(r.k1, s, r.c)?
        } else {
            ihs_regroup(&build_ihs(r.k1, s / 2, 2 * r.c)?, 2)?
        };
        let h = ihs_to_heffter(&set, r.k1, r.s1, r.d)?;
        let report = verify_integer_heffter(&h, s, k);
        if !report.passed {
            return Err(Error::self_check(format!("H({m},{n};{s},{k})"), report.to_string()));
        }
        return Ok(h);
    }
    Err(Error::Unsupported(classify(m, n, s, k)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_examples() {
        assert_eq!(classify(12, 12, 9, 9), Feasibility::KnownElsewhere(1));
        assert_eq!(classify(25, 40, 8, 5), Feasibility::Open(OpenReason::KIsFive));
        assert_eq!(classify(14, 8, 4, 7), Feasibility::KnownElsewhere(6));
        assert_eq!(classify(28, 36, 9, 7), Feasibility::ConstructedHere);
        assert_eq!(classify(36, 28, 7, 9), Feasibility::ConstructedHere);
        assert_eq!(classify(28, 36, 9, 8), Feasibility::NecessaryFail);
        assert_eq!(classify(7, 9, 9, 7), Feasibility::KnownElsewhere(2));
        assert_eq!(classify(20, 28, 7, 5), Feasibility::Open(OpenReason::KIsFive));
        assert_eq!(classify(21, 9, 3, 7), Feasibility::Open(OpenReason::SmallS));
        assert_eq!(classify(36, 12, 3, 9), Feasibility::KnownElsewhere(4));
    }

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(14, 7), 7);
        assert_eq!(gcd(9, 7), 1);
    }
}
