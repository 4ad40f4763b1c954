//! Integer Heffter array sets.

mod appendix;
mod c0;
mod c1;
mod c3;
mod common;
mod partition;

pub use appendix::{appendix_ihs, appendix_list};
pub use c0::{ihs_c0_11, ihs_c0_n3};
pub use c1::{ihs_c1, ihs_c1_97};
pub use c3::{ihs_c3, ihs_c3_77};
pub use partition::{partition_pieces, PartitionSpec, Piece, PieceKind};

use crate::array::PartialArray;
use crate::error::{Error, Result};
use crate::verify::verify_ihs;

fn transposed(set: Vec<PartialArray>) -> Vec<PartialArray> {
    set.iter().map(PartialArray::transpose).collect()
}

/// An `IHS(m, n; c)` for odd `m, n >= 7` with `mnc ≡ 0, 3 (mod 4)`.
///
/// Picks the construction by `c mod 4` and the residues of `m` and `n`,
/// building the `n x m` set and transposing when only that one exists.
pub fn build_ihs(m: usize, n: usize, c: usize) -> Result<Vec<PartialArray>> {
    if m % 2 == 0 || n % 2 == 0 || m < 7 || n < 7 {
        return Err(Error::InvalidParams(format!("m = {m}, n = {n} must be odd and at least 7")));
    }
    if c == 0 || !matches!((m * n * c) % 4, 0 | 3) {
        return Err(Error::InvalidParams(format!("mnc = {} must be 0 or 3 mod 4", m * n * c)));
    }
    if c % 4 == 2 {
        return Err(Error::InvalidParams(format!("c = {c} is 2 mod 4")));
    }
    if c == 1 {
        return Err(Error::ExternalConstruction(format!(
            "IHS({m},{n};1) is an integer Heffter array H(m,n;n,m), not built here"
        )));
    }
    let t = c / 4;
    let set = match c % 4 {
        0 if n % 4 == 3 => ihs_c0_n3(m, n, t)?,
        0 if m % 4 == 3 => transposed(ihs_c0_n3(n, m, t)?),
        0 => ihs_c0_11(m, n, t)?,
        1 if m % 4 == 3 => transposed(build_ihs(n, m, c)?),
        1 if (m, n) == (9, 7) => ihs_c1_97(t)?,
        1 => ihs_c1(m, n, t)?,
        _ if (m, n) == (7, 7) => ihs_c3_77(t)?,
        _ => ihs_c3(m, n, t)?,
    };
    let report = verify_ihs(&set, m, n, c);
    if !report.passed {
        return Err(Error::self_check("build_ihs", report.to_string()));
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::support_of;

    fn check(set: &[PartialArray], m: usize, n: usize, c: usize) {
        assert_eq!(set.len(), c);
        let r = verify_ihs(set, m, n, c);
        assert!(r.passed, "{r}");
        let s = support_of(set);
        assert_eq!((s.min(), s.max(), s.len()), (Some(1), Some((m * n * c) as i64), m * n * c));
    }

    fn corner(a: &PartialArray) -> Vec<Vec<Option<i64>>> {
        (0..3).map(|r| a.row_cells(r)[..3].to_vec()).collect()
    }

    #[test]
    fn c0_n3_cases() {
        let s = ihs_c0_n3(9, 7, 1).unwrap();
        check(&s, 9, 7, 4);
        let want = [[6, 21, -27], [7, 217, -224], [-9, -240, 249]];
        let want: Vec<Vec<Option<i64>>> = want.iter().map(|r| r.iter().map(|&v| Some(v)).collect()).collect();
        assert_eq!(corner(&s[0]), want);
        check(&ihs_c0_n3(7, 7, 1).unwrap(), 7, 7, 4);
        check(&ihs_c0_n3(11, 11, 2).unwrap(), 11, 11, 8);
        assert!(matches!(ihs_c0_n3(9, 9, 1), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn c0_11_cases() {
        check(&ihs_c0_11(9, 9, 1).unwrap(), 9, 9, 4);
        check(&ihs_c0_11(13, 9, 1).unwrap(), 13, 9, 4);
        check(&ihs_c0_11(9, 17, 2).unwrap(), 9, 17, 8);
    }

    #[test]
    fn c1_cases() {
        check(&ihs_c1(9, 11, 1).unwrap(), 9, 11, 5);
        check(&ihs_c1(13, 7, 1).unwrap(), 13, 7, 5);
        check(&ihs_c1(17, 11, 3).unwrap(), 17, 11, 13);
        assert!(matches!(ihs_c1(9, 7, 1), Err(Error::Redirected(_))));
    }

    #[test]
    fn c1_97_cases() {
        check(&ihs_c1_97(1).unwrap(), 9, 7, 5);
        check(&ihs_c1_97(2).unwrap(), 9, 7, 9);
        check(&ihs_c1_97(5).unwrap(), 9, 7, 21);
        assert!(matches!(ihs_c1_97(0), Err(Error::ExternalConstruction(_))));
    }

    #[test]
    fn c3_cases() {
        check(&ihs_c3(11, 7, 0).unwrap(), 11, 7, 3);
        check(&ihs_c3(9, 9, 0).unwrap(), 9, 9, 3);
        check(&ihs_c3(11, 15, 2).unwrap(), 11, 15, 11);
        check(&ihs_c3(13, 9, 1).unwrap(), 13, 9, 7);
        assert!(matches!(ihs_c3(7, 7, 0), Err(Error::Redirected(_))));
        assert!(matches!(ihs_c3(9, 7, 0), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn c3_77_cases() {
        let s = ihs_c3_77(0).unwrap();
        assert_eq!(s[0].row_cells(0), &[11, -14, 3, 29, -31, -33, 35].map(Some));
        for t in 0..=8 {
            check(&ihs_c3_77(t).unwrap(), 7, 7, 4 * t + 3);
        }
    }

    #[test]
    fn appendix_manifest() {
        let l = appendix_list();
        assert_eq!(l.iter().map(|e| e.2).collect::<Vec<_>>(), vec![3, 7, 11, 15, 19, 23, 27]);
        assert!(l.iter().all(|e| (e.0, e.1) == (7, 7)));
        assert!(appendix_ihs(31).is_err());
    }

    #[test]
    fn dispatch() {
        let s = build_ihs(7, 9, 4).unwrap();
        let direct: Vec<PartialArray> = ihs_c0_n3(9, 7, 1).unwrap().iter().map(PartialArray::transpose).collect();
        assert_eq!(s, direct);
        assert_eq!(build_ihs(7, 7, 3).unwrap(), appendix_ihs(3).unwrap());
        check(&build_ihs(7, 9, 5).unwrap(), 7, 9, 5);
        assert!(matches!(build_ihs(7, 9, 2), Err(Error::InvalidParams(_))));
        assert!(matches!(build_ihs(7, 8, 4), Err(Error::InvalidParams(_))));
        assert!(matches!(build_ihs(5, 7, 4), Err(Error::InvalidParams(_))));
        assert!(matches!(build_ihs(7, 9, 1), Err(Error::ExternalConstruction(_))));
    }
}
