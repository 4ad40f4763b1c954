//! Tiling pools of type-1 and type-2 4-sets into zero-sum 4x4 and 6x4 blocks.

use crate::array::Block;
use crate::error::{Error, Result};
use crate::interval::{support_of, FourSet, SupportSet};

/// The 2x2 atom of a type-1 or type-2 4-set.
pub fn four_set_block(f: FourSet) -> Result<Block> {
    let s = f.start();
    match f.kind() {
        1 => {
            let i = s - 1;
            Block::from_rows(&[[-(i + 1), i + 2], [i + 3, -(i + 4)]])
        }
        2 => {
            let j = s - 2;
            Block::from_rows(&[[-(j + 2), j + 4], [j + 6, -(j + 8)]])
        }
        k => Err(Error::domain(
            "four_set_block",
            format!("type {k} sets have no 2x2 atom"),
        )),
    }
}

/// Lexicographically smallest `(p, q, r)` with `p+q+r = alpha`,
/// `2p+r <= gamma` and `2q+r <= delta`.
pub fn solve_pqr(alpha: usize, gamma: usize, delta: usize) -> Result<(usize, usize, usize)> {
    for p in 0..=alpha {
        for q in 0..=alpha - p {
            let r = alpha - p - q;
            if 2 * p + r <= gamma && 2 * q + r <= delta {
                return Ok((p, q, r));
            }
        }
    }
    Err(Error::domain(
        "solve_pqr",
        format!("no solution for alpha={alpha}, gamma={gamma}, delta={delta}"),
    ))
}

/// First `(u, v, x, y)` with `gamma' = 3u+2x+y`, `delta' = 3v+2y+x`,
/// trying `(x, y)` in the order (0,0), (0,1), (0,2), (1,0).
pub fn solve_uvxy(gamma_p: usize, delta_p: usize) -> Result<(usize, usize, usize, usize)> {
    for (x, y) in [(0, 0), (0, 1), (0, 2), (1, 0)] {
        let (g, d) = (gamma_p as i64 - 2 * x - y, delta_p as i64 - 2 * y - x);
        if g >= 0 && d >= 0 && g % 3 == 0 && d % 3 == 0 {
            return Ok(((g / 3) as usize, (d / 3) as usize, x as usize, y as usize));
        }
    }
    Err(Error::domain(
        "solve_uvxy",
        format!("no solution for gamma'={gamma_p}, delta'={delta_p}"),
    ))
}

/// Output of [`tile_blocks`]: `alpha` 4x4 blocks and `beta` 6x4 blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tiling {
    pub c_blocks: Vec<Block>,
    pub d_blocks: Vec<Block>,
}

impl Tiling {
    pub fn all(&self) -> impl Iterator<Item = &Block> {
        self.c_blocks.iter().chain(&self.d_blocks)
    }
}

#[derive(Clone, Copy)]
enum Src {
    X,
    Y,
}

#[derive(Clone, Copy)]
enum Op {
    Id,
    Neg,
    Tr,
    NegTr,
}

type Cell = (Src, Op);

const P: [[Cell; 2]; 2] = [[(Src::X, Op::Id), (Src::X, Op::Neg)], [(Src::X, Op::Neg), (Src::X, Op::Id)]];
const Q: [[Cell; 2]; 2] = [[(Src::Y, Op::Id), (Src::Y, Op::Neg)], [(Src::Y, Op::Neg), (Src::Y, Op::Id)]];
const R: [[Cell; 2]; 2] = [[(Src::X, Op::Id), (Src::X, Op::Neg)], [(Src::Y, Op::NegTr), (Src::Y, Op::Tr)]];
const U: [[Cell; 2]; 3] = [
    [(Src::X, Op::Id), (Src::X, Op::Neg)],
    [(Src::X, Op::NegTr), (Src::X, Op::Tr)],
    [(Src::X, Op::NegTr), (Src::X, Op::Tr)],
];
const V: [[Cell; 2]; 3] = [
    [(Src::Y, Op::Id), (Src::Y, Op::Neg)],
    [(Src::Y, Op::NegTr), (Src::Y, Op::Tr)],
    [(Src::Y, Op::NegTr), (Src::Y, Op::Tr)],
];
const XP: [[Cell; 2]; 3] = [
    [(Src::Y, Op::Id), (Src::Y, Op::Neg)],
    [(Src::X, Op::Neg), (Src::X, Op::Id)],
    [(Src::X, Op::Neg), (Src::X, Op::Id)],
];
const YP: [[Cell; 2]; 3] = [
    [(Src::Y, Op::Neg), (Src::Y, Op::Id)],
    [(Src::Y, Op::Tr), (Src::Y, Op::NegTr)],
    [(Src::X, Op::Id), (Src::X, Op::Neg)],
];

struct Feed<I: Iterator<Item = Block>> {
    x: I,
    y: I,
}

impl<I: Iterator<Item = Block>> Feed<I> {
    fn fill(&mut self, pattern: &[[Cell; 2]]) -> Block {
        let mut rows = vec![Vec::with_capacity(4); 2 * pattern.len()];
        for (br, line) in pattern.iter().enumerate() {
            for &(src, op) in line {
                let atom = match src {
                    Src::X => self.x.next(),
                    Src::Y => self.y.next(),
                }
                .expect("pool sizes are checked before filling");
                let atom = match op {
                    Op::Id => atom,
                    Op::Neg => atom.negate(),
                    Op::Tr => atom.transpose(),
                    Op::NegTr => atom.negate().transpose(),
                };
                for r in 0..2 {
                    rows[2 * br + r].extend_from_slice(atom.row(r));
                }
            }
        }
        Block::from_rows(&rows).expect("atoms have no zero entries")
    }
}

/// Tiles `2*gamma` type-1 and `2*delta` type-2 pairwise disjoint 4-sets into
/// `alpha` zero-sum 4x4 blocks and `beta` zero-sum 6x4 blocks, which needs
/// `2*alpha + 3*beta = gamma + delta`. Atoms are consumed in input order.
pub fn tile_blocks(type1: &[FourSet], type2: &[FourSet], alpha: usize, beta: usize) -> Result<Tiling> {
    if type1.iter().any(|f| f.kind() != 1) || type2.iter().any(|f| f.kind() != 2) {
        return Err(Error::domain("tile_blocks", "4-set of the wrong type in a pool"));
    }
    if type1.len() % 2 != 0 || type2.len() % 2 != 0 {
        return Err(Error::domain(
            "tile_blocks",
            format!("pool sizes {} and {} must both be even", type1.len(), type2.len()),
        ));
    }
    let (gamma, delta) = (type1.len() / 2, type2.len() / 2);
    if 2 * alpha + 3 * beta != gamma + delta {
        return Err(Error::domain(
            "tile_blocks",
            format!("2*{alpha} + 3*{beta} != {gamma} + {delta}"),
        ));
    }
    let input: SupportSet = support_of(type1.iter().chain(type2));
    if !input.is_set() {
        return Err(Error::domain("tile_blocks", "4-sets are not pairwise disjoint"));
    }

    let (p, q, r) = solve_pqr(alpha, gamma, delta)?;
    let (u, v, x, y) = solve_uvxy(gamma - 2 * p - r, delta - 2 * q - r)?;
    debug_assert_eq!(u + v + x + y, beta);

    let xs: Vec<Block> = type1.iter().map(|&f| four_set_block(f)).collect::<Result<_>>()?;
    let ys: Vec<Block> = type2.iter().map(|&f| four_set_block(f)).collect::<Result<_>>()?;
    let mut feed = Feed {
        x: xs.into_iter(),
        y: ys.into_iter(),
    };
    let mut c_blocks = Vec::with_capacity(alpha);
    let mut d_blocks = Vec::with_capacity(beta);
    for (pat, n) in [(&P, p), (&Q, q), (&R, r)] {
        for _ in 0..n {
            c_blocks.push(feed.fill(pat));
        }
    }
    for (pat, n) in [(&U, u), (&V, v), (&XP, x), (&YP, y)] {
        for _ in 0..n {
            d_blocks.push(feed.fill(pat));
        }
    }
    let tiling = Tiling { c_blocks, d_blocks };

    if let Some(bad) = tiling.all().position(|b| !b.sum_profile().is_zero()) {
        return Err(Error::self_check("tile_blocks", format!("block {bad} is not zero-sum")));
    }
    if support_of(tiling.all()) != input {
        return Err(Error::self_check("tile_blocks", "output support differs from the input pool"));
    }
    Ok(tiling)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(starts: &[i64], kind: u8) -> Vec<FourSet> {
        starts.iter().map(|&s| FourSet::new(s, kind).unwrap()).collect()
    }

    #[test]
    fn atoms() {
        let b = four_set_block(FourSet::new(1, 1).unwrap()).unwrap();
        assert_eq!(b.to_rows(), vec![vec![-1, 2], vec![3, -4]]);
        let b = four_set_block(FourSet::new(6, 2).unwrap()).unwrap();
        assert_eq!(b.to_rows(), vec![vec![-6, 8], vec![10, -12]]);
        assert_eq!(b.sum_profile().col_sums, vec![4, -4]);
        assert!(four_set_block(FourSet::new(4, 4).unwrap()).is_err());
    }

    #[test]
    fn solvers() {
        assert_eq!(solve_pqr(1, 1, 1).unwrap(), (0, 0, 1));
        assert_eq!(solve_pqr(0, 5, 2).unwrap(), (0, 0, 0));
        assert_eq!(solve_uvxy(3, 0).unwrap(), (1, 0, 0, 0));
        assert_eq!(solve_uvxy(1, 2).unwrap(), (0, 0, 0, 1));
        assert_eq!(solve_uvxy(2, 1).unwrap(), (0, 0, 1, 0));
        assert!(solve_uvxy(1, 0).is_err());
    }

    #[test]
    fn single_r_block() {
        let t = tile_blocks(&sets(&[1, 5], 1), &sets(&[10, 18], 2), 1, 0).unwrap();
        assert_eq!(
            t.c_blocks[0].to_rows(),
            vec![
                vec![-1, 2, 5, -6],
                vec![3, -4, -7, 8],
                vec![10, -14, -18, 22],
                vec![-12, 16, 20, -24],
            ]
        );
        assert!(t.d_blocks.is_empty());
    }

    #[test]
    fn u_block_and_empty() {
        let t = tile_blocks(&sets(&[1, 5, 9, 13, 17, 21], 1), &[], 0, 1).unwrap();
        assert_eq!(t.d_blocks.len(), 1);
        assert_eq!(t.d_blocks[0].rows(), 6);
        let t = tile_blocks(&[], &[], 0, 0).unwrap();
        assert!(t.c_blocks.is_empty() && t.d_blocks.is_empty());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(tile_blocks(&sets(&[1, 5], 1), &[], 0, 1).is_err());
        assert!(tile_blocks(&sets(&[1], 1), &[], 0, 0).is_err());
        assert!(tile_blocks(&sets(&[1, 3], 1), &[], 1, 0).is_err());
    }
}
