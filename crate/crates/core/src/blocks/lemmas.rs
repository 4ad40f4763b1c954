//! Parameterised 3x3 and 2x3 block families.

use crate::array::{Block, SumProfile};
use crate::error::{Error, Result};
use crate::interval::{IntervalD, SupportSet};

use super::BlockFamily;

fn union(parts: &[(i64, i64, i64)]) -> Result<SupportSet> {
    let mut s = SupportSet::new();
    for &(lo, hi, step) in parts {
        s.add_interval(IntervalD::new(lo, hi, step)?);
    }
    Ok(s)
}

fn profile(rows: &[i64], cols: &[i64]) -> SumProfile {
    SumProfile::new(rows.to_vec(), cols.to_vec())
}

fn check_flag(what: &'static str, name: &str, v: i64) -> Result<()> {
    if v == 0 || v == 1 {
        Ok(())
    } else {
        Err(Error::domain(what, format!("{name} must be 0 or 1, got {v}")))
    }
}

/// `2u` zero-row-sum 3x3 blocks with column sums `(4a, -2a, -2a)`.
/// Ordered `A1_0, A2_0, A1_1, A2_1, ...`.
pub fn a_alpha(alpha: i64, b: i64, u: i64) -> Result<BlockFamily> {
    if u < 1 {
        return Err(Error::domain("a_alpha", format!("u must be positive, got {u}")));
    }
    a_alpha_or_empty(alpha, b, u)
}

/// As [`a_alpha`] but `u = 0` gives the empty family.
pub(crate) fn a_alpha_or_empty(alpha: i64, b: i64, u: i64) -> Result<BlockFamily> {
    check_flag("a_alpha", "alpha", alpha)?;
    if u < 0 || b < 16 * u - 1 {
        return Err(Error::domain("a_alpha", format!("need u >= 0 and b >= 16u-1, got b={b}, u={u}")));
    }
    let a = alpha;
    let mut members = Vec::with_capacity(2 * u as usize);
    for i in 0..u {
        members.push(Block::lit([
            [8 * i + 4 * a + 2, 12 * u - 4 * i - 2 * a - 1, -(12 * u + 4 * i + 2 * a + 1)],
            [4 * u - 4 * i - 1, b + 2 * i + 1, -(b + 4 * u - 2 * i)],
            [-(4 * u + 4 * i + 1), -(b + 12 * u - 2 * i), b + 16 * u + 2 * i + 1],
        ]));
        members.push(Block::lit([
            [-(8 * i - 4 * a + 6), -(12 * u - 4 * i + 2 * a - 3), 12 * u + 4 * i - 2 * a + 3],
            [-(4 * u - 4 * i - 3), -(b + 2 * i + 2), b + 4 * u - 2 * i - 1],
            [4 * u + 4 * i + 3, b + 12 * u - 2 * i - 1, -(b + 16 * u + 2 * i + 2)],
        ]));
    }
    let support = if u == 0 {
        SupportSet::new()
    } else {
        union(&[
            (1, 16 * u - 1, 2),
            (2, 8 * u - 2, 4),
            (b + 1, b + 4 * u, 1),
            (b + 10 * u + 1, b + 12 * u, 1),
            (b + 16 * u + 1, b + 18 * u, 1),
        ])?
    };
    BlockFamily::checked(
        "a_alpha",
        vec![("A", profile(&[0, 0, 0], &[4 * a, -2 * a, -2 * a]), members)],
        support,
    )
}

/// `u` zero-sum 3x3 blocks; needs `b >= 8u + 24`.
pub fn a2(b: i64, u: i64) -> Result<BlockFamily> {
    if u < 1 || b < 8 * u + 24 {
        return Err(Error::domain("a2", format!("need u >= 1 and b >= 8u+24, got b={b}, u={u}")));
    }
    let members = (0..u)
        .map(|i| {
            Block::lit([
                [4 * i + 10, 6 * u - 2 * i + 15, -(6 * u + 2 * i + 25)],
                [2 * u - 2 * i + 7, b + i, -(b + 2 * u - i + 7)],
                [-(2 * u + 2 * i + 17), -(b + 6 * u - i + 15), b + 8 * u + i + 32],
            ])
        })
        .collect();
    let support = union(&[
        (9, 2 * u + 7, 2),
        (10, 4 * u + 6, 4),
        (2 * u + 17, 6 * u + 15, 2),
        (6 * u + 25, 8 * u + 23, 2),
        (b, b + u - 1, 1),
        (b + u + 8, b + 2 * u + 7, 1),
        (b + 5 * u + 16, b + 6 * u + 15, 1),
        (b + 8 * u + 32, b + 9 * u + 31, 1),
    ])?;
    BlockFamily::checked("a2", vec![("A", profile(&[0, 0, 0], &[0, 0, 0]), members)], support)
}

/// `u` zero-sum 3x3 blocks whose support depends only on `alpha` and `u`.
pub fn a3(alpha: i64, u: i64) -> Result<BlockFamily> {
    check_flag("a3", "alpha", alpha)?;
    if u < 1 {
        return Err(Error::domain("a3", format!("u must be positive, got {u}")));
    }
    let a = alpha;
    let members = (0..u)
        .map(|i| {
            Block::lit([
                [2 * i + 4 * a + 9, 3 * u - i + 4 * a + 7, -(3 * u + i + 8 * a + 16)],
                [5 * u - i + 8 * a + 15, 6 * u + 2 * i + 12 * a + 25, -(11 * u + i + 20 * a + 40)],
                [-(5 * u + i + 12 * a + 24), -(9 * u + i + 16 * a + 32), 14 * u + 2 * i + 28 * a + 56],
            ])
        })
        .collect();
    let support = union(&[
        (4 * a + 9, 2 * u + 4 * a + 7, 2),
        (2 * u + 4 * a + 8, 3 * u + 4 * a + 7, 1),
        (3 * u + 8 * a + 16, 5 * u + 8 * a + 15, 1),
        (5 * u + 12 * a + 24, 6 * u + 12 * a + 23, 1),
        (6 * u + 12 * a + 25, 8 * u + 12 * a + 23, 2),
        (9 * u + 16 * a + 32, 10 * u + 16 * a + 31, 1),
        (11 * u + 20 * a + 40, 12 * u + 20 * a + 39, 1),
        (14 * u + 28 * a + 56, 16 * u + 28 * a + 54, 2),
    ])?;
    BlockFamily::checked("a3", vec![("A", profile(&[0, 0, 0], &[0, 0, 0]), members)], support)
}

/// 2x3 blocks in two classes: `B'` (`2l` members, column sums `(-2,1,1)`)
/// then `B''` (`2u` members, column sums `(-4,2,2)`), all with zero row sums.
pub fn b_family(delta: i64, b: i64, l: i64, u: i64) -> Result<BlockFamily> {
    check_flag("b_family", "delta", delta)?;
    if b < 0 || l < 0 || u < 0 {
        return Err(Error::domain("b_family", format!("b, l, u must be nonnegative, got {b}, {l}, {u}")));
    }
    let d = delta;
    let b2 = b + 4 * u;
    let b3 = b + 4 * u + 6 * l;
    let b4 = b + 6 * u + 6 * l;
    let prime: Vec<Block> = (0..2 * l)
        .map(|j| {
            Block::lit([
                [2 * b2 + 4 * j + 1, 2 * b3 + d - 2 * j - 1, -(2 * b2 + 2 * b3 + d + 2 * j)],
                [-(2 * b2 + 4 * j + 3), -(2 * b3 + d - 2 * j - 2), 2 * b2 + 2 * b3 + d + 2 * j + 1],
            ])
        })
        .collect();
    let mut double = Vec::with_capacity(2 * u as usize);
    for j in 0..u {
        double.push(Block::lit([
            [2 * b + 8 * j + 1, 2 * b4 + d - 4 * j - 1, -(2 * b + 2 * b4 + d + 4 * j)],
            [-(2 * b + 8 * j + 5), -(2 * b4 + d - 4 * j - 3), 2 * b + 2 * b4 + d + 4 * j + 2],
        ]));
        double.push(Block::lit([
            [2 * b + 8 * j + 3, 2 * b4 + d - 4 * j - 2, -(2 * b + 2 * b4 + d + 4 * j + 1)],
            [-(2 * b + 8 * j + 7), -(2 * b4 + d - 4 * j - 4), 2 * b + 2 * b4 + d + 4 * j + 3],
        ]));
    }
    let s = 4 * u + 4 * l;
    let support = union(&[
        (2 * b + 1, 2 * b + 2 * s - 1, 2),
        (2 * b + 2 * s + d, 2 * b + 3 * s + d - 1, 1),
        (4 * b + 3 * s + d, 4 * b + 4 * s + d - 1, 1),
    ])?;
    BlockFamily::checked(
        "b_family",
        vec![
            ("B'", profile(&[0, 0], &[-2, 1, 1]), prime),
            ("B''", profile(&[0, 0], &[-4, 2, 2]), double),
        ],
        support,
    )
}

/// 2x3 blocks in two classes: `B1` (the first `2u` base blocks with the
/// first column shifted by `+2/-2`, row sums `(2,-2)`) then `B0` (base
/// blocks `2u..2l`, zero row sums). All have column sums `(-4,2,2)`.
pub fn b2_family(b: i64, l: i64, u: i64) -> Result<BlockFamily> {
    if u < 0 || l < u || b < 10 * l {
        return Err(Error::domain("b2_family", format!("need l >= u >= 0 and b >= 10l, got b={b}, l={l}, u={u}")));
    }
    let base = |i: i64| -> Block {
        let j = i / 2;
        if i % 2 == 0 {
            Block::lit([
                [-(2 * b - 8 * j), b + 2 * l - 4 * j, b - 2 * l - 4 * j],
                [2 * b - 8 * j - 4, -(b + 2 * l - 4 * j - 2), -(b - 2 * l - 4 * j - 2)],
            ])
        } else {
            Block::lit([
                [2 * b - 8 * j - 6, -(b + 2 * l - 4 * j - 3), -(b - 2 * l - 4 * j - 3)],
                [-(2 * b - 8 * j - 2), b + 2 * l - 4 * j - 1, b - 2 * l - 4 * j - 1],
            ])
        }
    };
    let one: Vec<Block> = (0..2 * u)
        .map(|i| base(i).offset([[2, 0, 0], [-2, 0, 0]]))
        .collect::<Result<_>>()?;
    let zero: Vec<Block> = (2 * u..2 * l).map(base).collect();
    let support = if l == 0 {
        SupportSet::new()
    } else {
        union(&[(b - 6 * l + 1, b + 2 * l, 1), (2 * b - 8 * l + 2, 2 * b, 2)])?
    };
    BlockFamily::checked(
        "b2_family",
        vec![
            ("B1", profile(&[2, -2], &[-4, 2, 2]), one),
            ("B0", profile(&[0, 0], &[-4, 2, 2]), zero),
        ],
        support,
    )
}

/// 2x3 blocks in two classes: `BI` (`14u + 12` members, zero row sums) then
/// `BII` (`2u` members, row sums `(-1,1)`). All have column sums `(-2,1,1)`.
/// `BI` lists `B_{0,j}`, then `B_{1,j}`, then `B_{2,j}`.
pub fn b3_family(u: i64) -> Result<BlockFamily> {
    if u < 0 {
        return Err(Error::domain("b3_family", format!("u must be nonnegative, got {u}")));
    }
    let mut first = Vec::with_capacity((14 * u + 12) as usize);
    for alpha in 0..3 {
        let b1 = 32 * u + 36 + (8 * u + 12) * alpha;
        let b2 = 124 * u + 108 - (2 * u + 6) * alpha;
        let top = if alpha < 2 { u + 2 } else { 12 * u + 5 };
        for j in 0..=top {
            first.push(Block::lit([
                [b1 + 4 * j + 1, b2 - 2 * j - 1, -(b1 + b2 + 2 * j)],
                [-(b1 + 4 * j + 3), -(b2 - 2 * j - 2), b1 + b2 + 2 * j + 1],
            ]));
        }
    }
    let second: Vec<Block> = (0..2 * u)
        .map(|j| {
            Block::lit([
                [24 * u + 4 * j + 36, 128 * u - 2 * j + 107, -(152 * u + 2 * j + 144)],
                [-(24 * u + 4 * j + 38), -(128 * u - 2 * j + 106), 152 * u + 2 * j + 145],
            ])
        })
        .collect();
    let support = union(&[
        (24 * u + 36, 32 * u + 34, 2),
        (32 * u + 37, 36 * u + 47, 2),
        (40 * u + 49, 44 * u + 59, 2),
        (48 * u + 61, 96 * u + 83, 2),
        (96 * u + 84, 128 * u + 107, 1),
        (152 * u + 144, 158 * u + 149, 1),
        (162 * u + 150, 164 * u + 155, 1),
        (168 * u + 156, 192 * u + 167, 1),
    ])?;
    BlockFamily::checked(
        "b3_family",
        vec![
            ("BI", profile(&[0, 0], &[-2, 1, 1]), first),
            ("BII", profile(&[-1, 1], &[-2, 1, 1]), second),
        ],
        support,
    )
}

/// `(l+1)/2` zero-row-sum 2x3 blocks with column sums `(-2,1,1)`; needs
/// `b`, `l` odd positive and `x > b + 2l`.
pub fn b4_family(b: i64, l: i64, x: i64) -> Result<BlockFamily> {
    if b < 1 || l < 1 || b % 2 == 0 || l % 2 == 0 || x <= b + 2 * l {
        return Err(Error::domain(
            "b4_family",
            format!("need b, l odd positive and x > b+2l, got b={b}, l={l}, x={x}"),
        ));
    }
    let members = (0..=(l - 1) / 2)
        .map(|h| {
            Block::lit([
                [b + 4 * h, x + l - 2 * h, -(x + b + l + 2 * h)],
                [-(b + 4 * h + 2), -(x + l - 2 * h - 1), x + b + l + 2 * h + 1],
            ])
        })
        .collect();
    let support = union(&[(b, b + 2 * l, 2), (x, x + l, 1), (x + b + l, x + b + 2 * l, 1)])?;
    BlockFamily::checked("b4_family", vec![("B", profile(&[0, 0], &[-2, 1, 1]), members)], support)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(b: &Block) -> Vec<Vec<i64>> {
        b.to_rows()
    }

    #[test]
    fn a_alpha_small() {
        let f = a_alpha(0, 15, 1).unwrap();
        assert_eq!(rows(&f.members()[0]), vec![vec![2, 11, -13], vec![3, 16, -19], vec![-5, -27, 32]]);
        assert_eq!(
            f.support().values(),
            vec![1, 2, 3, 5, 6, 7, 9, 11, 13, 15, 16, 17, 18, 19, 26, 27, 32, 33]
        );
        let g = a_alpha(1, 15, 1).unwrap();
        for m in g.members() {
            assert_eq!(m.sum_profile().col_sums, vec![4, -2, -2]);
        }
        assert!(a_alpha(0, 14, 1).is_err());
        assert!(a_alpha(0, 100, 0).is_err());
        assert!(a_alpha_or_empty(0, 100, 0).unwrap().is_empty());
    }

    #[test]
    fn a2_small() {
        let f = a2(32, 1).unwrap();
        assert_eq!(rows(&f.members()[0]), vec![vec![10, 21, -31], vec![9, 32, -41], vec![-19, -53, 72]]);
        assert!(f.members()[0].sum_profile().is_zero());
        assert!(a2(8 + 23, 1).is_err());
    }

    #[test]
    fn a3_small() {
        let f = a3(0, 1).unwrap();
        assert!(f.members()[0].sum_profile().is_zero());
        assert_eq!(f.support().min(), Some(9));
        assert_eq!(a3(1, 1).unwrap().support().min(), Some(13));
        assert_eq!(a3(1, 5).unwrap().support().len(), 45);
    }

    #[test]
    fn b_family_small() {
        let f = b_family(0, 0, 1, 0).unwrap();
        assert_eq!(rows(&f.class("B'")[0]), vec![vec![1, 11, -12], vec![-3, -10, 13]]);
        assert_eq!(rows(&f.class("B'")[1]), vec![vec![5, 9, -14], vec![-7, -8, 15]]);
        assert_eq!(f.support().values(), vec![1, 3, 5, 7, 8, 9, 10, 11, 12, 13, 14, 15]);
        assert!(b_family(0, 0, 0, 0).unwrap().is_empty());
    }

    #[test]
    fn b2_family_small() {
        let f = b2_family(10, 1, 0).unwrap();
        assert_eq!(rows(&f.class("B0")[0]), vec![vec![-20, 12, 8], vec![16, -10, -6]]);
        assert_eq!(rows(&f.class("B0")[1]), vec![vec![14, -9, -5], vec![-18, 11, 7]]);
        assert_eq!(f.support().values(), vec![5, 6, 7, 8, 9, 10, 11, 12, 14, 16, 18, 20]);
        let g = b2_family(10, 1, 1).unwrap();
        for m in g.class("B1") {
            assert_eq!(m.sum_profile().row_sums, vec![2, -2]);
        }
    }

    #[test]
    fn b3_family_small() {
        let f = b3_family(0).unwrap();
        assert_eq!(f.class("BI").len(), 12);
        assert!(f.class("BII").is_empty());
        assert_eq!(rows(&f.class("BI")[0]), vec![vec![37, 107, -144], vec![-39, -106, 145]]);
        for m in b3_family(1).unwrap().class("BII") {
            assert_eq!(m.sum_profile().row_sums, vec![-1, 1]);
        }
    }

    #[test]
    fn b4_family_small() {
        let f = b4_family(1, 1, 5).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(rows(&f.members()[0]), vec![vec![1, 6, -7], vec![-3, -5, 8]]);
        assert_eq!(f.support().values(), vec![1, 3, 5, 6, 7, 8]);
        assert!(b4_family(2, 1, 9).is_err());
        assert!(b4_family(1, 1, 3).is_err());
    }
}
