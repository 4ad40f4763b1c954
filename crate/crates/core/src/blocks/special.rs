//! Fixed matrices used by individual set constructions, and the small
//! pair and `D` blocks.

use crate::array::{Block, SumProfile};
use crate::error::{Error, Result};

/// Which construction's fixed matrices to produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialContext {
    /// The 5x3 `A'` for `c = 4t+1`.
    C1General(i64),
    /// The 5x3 `A'` for `(9,7)` and `c = 4t+1`.
    C1Nine7(i64),
    /// `A'`, `A''` and `Ã` for `c = 4t+3`.
    C3General(i64),
    /// `A'`, `A''` and `Ã` for `(7,7)`.
    C3Seven7,
}

fn expect(name: &str, b: &Block, rows: &[i64], cols: &[i64]) -> Result<()> {
    let want = SumProfile::new(rows.to_vec(), cols.to_vec());
    if b.sum_profile() != want {
        return Err(Error::self_check(
            format!("special matrix {name}"),
            format!("profile {:?}/{:?}", b.sum_profile().row_sums, b.sum_profile().col_sums),
        ));
    }
    Ok(())
}

fn five_by_three(base: i64, name: &str) -> Result<Block> {
    let e = base;
    let a = Block::from_rows(&[
        [e, 3, -(e + 3)],
        [-(e + 4), e + 6, -2],
        [e + 2, -(e + 7), 5],
        [-(e + 5), 4, e + 1],
        [7, -6, -1],
    ])?;
    expect(name, &a, &[0; 5], &[0; 3])?;
    Ok(a)
}

/// The fixed matrices of a context, in the order `A'` (then `A''`, `Ã`).
pub fn special_matrices(ctx: SpecialContext) -> Result<Vec<Block>> {
    match ctx {
        SpecialContext::C1General(t) => {
            if t < 1 {
                return Err(Error::domain("special_matrices", format!("t must be >= 1, got {t}")));
            }
            Ok(vec![five_by_three(24 * t + 16, "A' (c=4t+1)")?])
        }
        SpecialContext::C1Nine7(t) => {
            if t < 1 {
                return Err(Error::domain("special_matrices", format!("t must be >= 1, got {t}")));
            }
            Ok(vec![five_by_three(252 * t + 56, "A' (9,7)")?])
        }
        SpecialContext::C3General(t) => {
            if t < 0 {
                return Err(Error::domain("special_matrices", format!("t must be >= 0, got {t}")));
            }
            c3(t)
        }
        SpecialContext::C3Seven7 => c3(0),
    }
}

fn c3(t: i64) -> Result<Vec<Block>> {
    let a1 = Block::from_rows(&[
        [32 * t + 11, -(64 * t + 14), 32 * t + 3],
        [-(64 * t + 12), 32 * t + 5, 32 * t + 7],
        [32 * t + 1, 32 * t + 9, -(64 * t + 10)],
    ])?;
    let a2 = Block::from_rows(&[
        [64 * t + 26, -(128 * t + 44), 64 * t + 18],
        [-(128 * t + 42), 64 * t + 20, 64 * t + 22],
        [64 * t + 16, 64 * t + 24, -(128 * t + 40)],
    ])?;
    let at = Block::from_rows(&[
        [64 * t + 38, -(128 * t + 64), 64 * t + 30],
        [-(128 * t + 62), 64 * t + 32, 64 * t + 34],
        [64 * t + 28, 64 * t + 36, -(128 * t + 66)],
    ])?;
    expect("A'", &a1, &[0; 3], &[0; 3])?;
    expect("A''", &a2, &[0; 3], &[0; 3])?;
    expect("Ã", &at, &[4, 4, -2], &[4, 4, -2])?;
    Ok(vec![a1, a2, at])
}

/// `C(a,b)`: a 2x4 block with zero row sums over `[a,a+6]_2 ∪ [b,b+6]_2`.
pub fn c_pair_block(a: i64, b: i64) -> Result<Block> {
    if (a - b).abs() <= 6 && (a - b) % 2 == 0 {
        return Err(Error::domain(
            "c_pair_block",
            format!("[{a},{}]_2 and [{b},{}]_2 overlap", a + 6, b + 6),
        ));
    }
    Block::from_rows(&[[a, -(a + 4), -b, b + 4], [-(a + 2), a + 6, b + 2, -(b + 6)]])
}

/// The zero-sum 4x4 block over `[w+4, w+16]_4 ∪ [beta+1, beta+12]`.
pub fn d_block_from(w: i64, beta: i64) -> Result<Block> {
    let b = Block::from_rows(&[
        [w + 4, -(w + 8), beta + 10, -(beta + 6)],
        [-(w + 12), w + 16, beta + 3, -(beta + 7)],
        [-(beta + 1), beta + 4, -(beta + 5), beta + 2],
        [beta + 9, -(beta + 12), -(beta + 8), beta + 11],
    ])?;
    expect("D", &b, &[0; 4], &[0; 4])?;
    Ok(b)
}

/// `D_j`: support `[16j+4, 16j+16]_4 ∪ [beta+12j+1, beta+12j+12]`.
pub fn d_block(j: i64, beta: i64) -> Result<Block> {
    if j < 0 {
        return Err(Error::domain("d_block", format!("index {j} is negative")));
    }
    d_block_from(16 * j, beta + 12 * j)
}

/// The zero-sum 4x4 block with support
/// `{2,4,6,8} ∪ [32t+36, 32t+46]_2 ∪ [40t+48, 40t+58]_2` used by the `(7,7)`
/// construction for even `t`.
pub fn u_block_77(t: i64) -> Result<Block> {
    if t < 0 {
        return Err(Error::domain("u_block_77", format!("t must be >= 0, got {t}")));
    }
    let b = Block::from_rows(&[
        [2, -(40 * t + 56), 40 * t + 58, -4],
        [-(40 * t + 48), 40 * t + 52, 32 * t + 36, -(32 * t + 40)],
        [40 * t + 54, -(32 * t + 42), -(40 * t + 50), 32 * t + 38],
        [-8, 32 * t + 46, -(32 * t + 44), 6],
    ])?;
    expect("U (7,7)", &b, &[0; 4], &[0; 4])?;
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::support_of;

    #[test]
    fn c3_77_values() {
        let m = special_matrices(SpecialContext::C3Seven7).unwrap();
        assert_eq!(m[0].to_rows(), vec![vec![11, -14, 3], vec![-12, 5, 7], vec![1, 9, -10]]);
        assert_eq!(m[2].to_rows(), vec![vec![38, -64, 30], vec![-62, 32, 34], vec![28, 36, -66]]);
    }

    #[test]
    fn c1_corner() {
        let m = special_matrices(SpecialContext::C1General(1)).unwrap();
        assert_eq!(m[0].get(0, 0), 40);
        assert!(special_matrices(SpecialContext::C1Nine7(0)).is_err());
    }

    #[test]
    fn pair_and_d() {
        let c = c_pair_block(1, 9).unwrap();
        assert_eq!(c.to_rows(), vec![vec![1, -5, -9, 13], vec![-3, 7, 11, -15]]);
        assert!(c.sum_profile().row_sums.iter().all(|&s| s == 0));
        assert!(c_pair_block(1, 5).is_err());
        assert!(c_pair_block(1, 4).is_ok());
        let d = d_block(0, 100).unwrap();
        let s = support_of([&d]);
        for v in [4, 8, 12, 16] {
            assert!(s.contains(v));
        }
        assert_eq!(s.values(), [4, 8, 12, 16].into_iter().chain(101..=112).collect::<Vec<_>>());
    }

    #[test]
    fn u_block_support() {
        let s = support_of([&u_block_77(2).unwrap()]);
        let want: Vec<i64> = [2, 4, 6, 8]
            .into_iter()
            .chain((100..=110).step_by(2))
            .chain((128..=138).step_by(2))
            .collect();
        assert_eq!(s.values(), want);
    }
}
