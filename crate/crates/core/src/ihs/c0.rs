//! Sets with `c = 4t`.

use crate::array::{Block, PartialArray};
use crate::blocks::{a_alpha, a_alpha_or_empty, b2_family, b_family, c_pair_block, d_block, tile_blocks, Template};
use crate::error::{Error, Result};
use crate::interval::IntervalD;

use super::common::{complement, cut, expect_leftover, fill, iv, Canvas, Supply};
use super::partition::PieceKind;

pub(crate) fn require(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParams(what()))
    }
}

/// Cuts each progression into runs of eight and returns the pair blocks
/// `C(a, b)`, sorted by `a`. A step-1 run `[a, a+7]` gives `b = a+1`; a
/// step-2 run `[a, a+14]_2` gives `b = a+8`.
fn pair_blocks(step: &str, parts: &[IntervalD]) -> Result<Vec<Block>> {
    let mut starts = Vec::new();
    for p in parts {
        if p.len() % 8 != 0 || !(p.step() == 1 || p.step() == 2) {
            return Err(Error::self_check(step, format!("{p} does not split into pair runs")));
        }
        let vals: Vec<i64> = p.iter().collect();
        for chunk in vals.chunks(8) {
            let b = if p.step() == 1 { chunk[0] + 1 } else { chunk[0] + 8 };
            starts.push((chunk[0], b));
        }
    }
    starts.sort_unstable();
    starts.into_iter().map(|(a, b)| c_pair_block(a, b)).collect()
}

fn stack(top: &Block, bottom: &Block) -> Result<Block> {
    let mut rows = top.to_rows();
    rows.extend(bottom.negate().to_rows());
    Block::from_rows(&rows)
}

fn stacked_pairs(blocks: &[Block]) -> Result<Vec<Block>> {
    blocks.chunks(2).map(|p| stack(&p[0], &p[1])).collect()
}

/// `IHS(m, n; 4t)` for odd `m` and `n ≡ 3 (mod 4)`.
///
/// With `m = 4v+7+2α` and `n = 4w+7`, every member has a 3-row top band,
/// a `2α`-row band and `v+1` bands of four rows.
pub fn ihs_c0_n3(m: usize, n: usize, t: usize) -> Result<Vec<PartialArray>> {
    require(m % 2 == 1 && m >= 7, || format!("m = {m} must be odd and at least 7"))?;
    require(n % 4 == 3 && n >= 7, || format!("n = {n} must be 3 mod 4 and at least 7"))?;
    require(t >= 1, || "t must be at least 1".into())?;
    let (mi, ni, t) = (m as i64, n as i64, t as i64);
    let alpha = ((mi - 7) / 2) % 2;
    let v = (mi - 7 - 2 * alpha) / 4;
    let w = (ni - 7) / 4;
    let x = 2 * v + 2 * w + alpha + 4;
    let mn = mi * ni;

    let fam_a = a_alpha_or_empty(alpha, 4 * t * (mn - 9), 2 * t)?;
    let fam_b = b2_family(2 * t * (mn - 9), 2 * t * x, 4 * t * (w + 1) * alpha)?;
    let used = fam_a.support().union(&fam_b.support());
    let left = complement("c0_n3 families", 4 * mn * t, &used)?;

    let t1 = iv(4, 16 * t, 4)?;
    let t2 = iv(16 * t + 2, 32 * t, 2)?;
    let t3 = iv(4 * t * (mn - 9 - 4 * x) + 1, 4 * t * (mn - 9) - 1, 2)?;
    let t4 = iv(4 * t * (mn - 7) + 1, 4 * t * (mn - 4), 1)?;
    let t5 = iv(4 * t * (mn - 3) + 1, 4 * t * (mn - 1), 1)?;
    let s1 = [t2, t5, iv(32 * t + 1, 2 * t * (mn - 9 - 6 * x), 1)?];
    let s2 = [t3, iv(2 * t * (mn - 9 + 2 * x) + 1, 4 * t * (mn - 9 - 4 * x), 1)?];
    let all: Vec<IntervalD> = s1.iter().chain(&s2).chain(&[t1, t4]).copied().collect();
    expect_leftover("c0_n3 leftover", &left, &all)?;

    let c1 = pair_blocks("c0_n3 S1", &s1)?;
    let c2 = pair_blocks("c0_n3 S2", &s2)?;
    let n_short = (4 * t * (w + 1) * alpha) as usize;
    if c1.len() < n_short || (c1.len() - n_short) % 2 != 0 || c2.len() % 2 != 0 {
        return Err(Error::self_check("c0_n3 pairs", "pair block counts do not fit"));
    }
    let mut short = Supply::new("c0_n3 Z_2α", c1[..n_short].iter().cloned());
    let mut z4 = Supply::new(
        "c0_n3 Z_4",
        stacked_pairs(&c1[n_short..])?
            .into_iter()
            .chain(stacked_pairs(&c2)?)
            .chain((0..t).map(|j| d_block(j, 4 * t * (mn - 7))).collect::<Result<Vec<_>>>()?),
    );

    let n_y = (8 * t * (w + 1)) as usize;
    let mut a = Supply::new("c0_n3 X_3", fam_a.members().iter().cloned());
    let mut y = Supply::new("c0_n3 Y_2", fam_b.members()[..n_y].iter().cloned());
    let mut xs = Supply::new("c0_n3 X_2", fam_b.members()[n_y..].iter().cloned());

    let (v, w) = (v as usize, w as usize);
    let mut canvas = Canvas::new(m, n, 4 * t as usize)?;
    for k in 0..4 * t as usize {
        canvas.put(k, 0, 0, &a.next()?)?;
        for j in 0..=w {
            canvas.put(k, 0, 3 + 4 * j, &y.next()?.transpose())?;
            canvas.put(k, 0, 5 + 4 * j, &y.next()?.transpose().negate())?;
        }
        if alpha == 1 {
            canvas.put(k, 3, 0, &xs.next()?)?;
            for j in 0..=w {
                canvas.put(k, 3, 3 + 4 * j, &short.next()?)?;
            }
        }
        let r0 = 3 + 2 * alpha as usize;
        for b in 0..=v {
            canvas.put(k, r0 + 4 * b, 0, &xs.next()?)?;
            canvas.put(k, r0 + 4 * b + 2, 0, &xs.next()?.negate())?;
            for j in 0..=w {
                canvas.put(k, r0 + 4 * b, 3 + 4 * j, &z4.next()?)?;
            }
        }
    }
    for s in [&a, &y, &xs, &short, &z4] {
        s.finish()?;
    }
    canvas.finish("c0_n3 assembly")
}

/// `IHS(m, n; 4t)` for `m ≡ n ≡ 1 (mod 4)`, both at least 9.
pub fn ihs_c0_11(m: usize, n: usize, t: usize) -> Result<Vec<PartialArray>> {
    require(m % 4 == 1 && m >= 9, || format!("m = {m} must be 1 mod 4 and at least 9"))?;
    require(n % 4 == 1 && n >= 9, || format!("n = {n} must be 1 mod 4 and at least 9"))?;
    require(t >= 1, || "t must be at least 1".into())?;
    let (p, q) = ((n - 9) / 4, (m - 9) / 4);
    let (mi, ni, t) = (m as i64, n as i64, t as i64);
    let mn = mi * ni;
    let s = mi + ni;

    let fam_a = a_alpha(0, 4 * t * (mn - 9), 2 * t)?;
    let fam_b = b_family(1, 16 * t, (s - 10) * t, 4 * t)?;
    let used = fam_a.support().union(&fam_b.support());
    let left = complement("c0_11 families", 4 * t * mn, &used)?;
    let tt = [
        iv(4, 16 * t, 4)?,
        iv(16 * t + 2, 8 * t * (s - 6) + 32 * t, 2)?,
        iv(12 * t * (s - 6) + 32 * t + 1, 12 * t * (s - 6) + 64 * t, 1)?,
        iv(16 * t * (s - 6) + 64 * t + 1, 4 * t * (mn - 9), 1)?,
        iv(4 * t * (mn - 7) + 1, 4 * t * (mn - 4), 1)?,
        iv(4 * t * (mn - 3) + 1, 4 * t * (mn - 1), 1)?,
    ];
    expect_leftover("c0_11 leftover", &left, &tt)?;

    let tu = t as usize;
    let beta = (((mi - 4) * (ni - 4) - 14) * t) as usize;
    let mut f = cut("c0_11 F", &tt[0..1], &[(PieceKind::Type4, tu)])?;
    let mut g = cut("c0_11 G", &tt[1..2], &[(PieceKind::Type2, ((s - 4) * t) as usize)])?;
    let mut h = cut("c0_11 H", &tt[3..5], &[(PieceKind::Type1, beta)])?;
    let mut kk = cut("c0_11 K", &[tt[2], tt[5]], &[(PieceKind::K8, 5 * tu)])?;

    let mut w6 = Vec::with_capacity(4 * tu);
    for _ in 0..tu {
        let (fw, hy, kz) = (f.take(PieceKind::Type4, 1)?, h.take(PieceKind::Type1, 4)?, kk.take(PieceKind::K8, 2)?);
        w6.push(fill(Template::P1, &fw, &[], &hy, &kz)?);
    }
    for _ in 0..2 * tu {
        let (gx, kz) = (g.take(PieceKind::Type2, 7)?, kk.take(PieceKind::K8, 1)?);
        w6.push(fill(Template::P2, &[], &gx, &[], &kz)?);
    }
    for _ in 0..tu {
        let (hy, kz) = (h.take(PieceKind::Type1, 7)?, kk.take(PieceKind::K8, 1)?);
        w6.push(fill(Template::P3, &[], &[], &hy, &kz)?);
    }
    let tiles = tile_blocks(
        &h.rest(PieceKind::Type1),
        &g.rest(PieceKind::Type2),
        4 * tu * p * q,
        4 * tu * (p + q),
    )?;
    for pool in [&f, &g, &h, &kk] {
        pool.finish()?;
    }

    let mut a = Supply::new("c0_11 X_3", fam_a.members().iter().cloned());
    let mut xs = Supply::new("c0_11 X_2", fam_b.class("B'").iter().cloned());
    let mut y = Supply::new("c0_11 Y_2", fam_b.class("B''").iter().cloned());
    let mut w6 = Supply::new("c0_11 W_6", w6);
    let mut z6 = Supply::new("c0_11 Z_6", tiles.d_blocks);
    let mut z4 = Supply::new("c0_11 Z_4", tiles.c_blocks);

    let mut canvas = Canvas::new(m, n, 4 * tu)?;
    for k in 0..4 * tu {
        canvas.put(k, 0, 0, &a.next()?)?;
        canvas.put(k, 0, 3, &y.next()?.transpose())?;
        canvas.put(k, 0, 5, &xs.next()?.transpose().negate())?;
        canvas.put(k, 0, 7, &xs.next()?.transpose().negate())?;
        canvas.put(k, 3, 0, &y.next()?)?;
        canvas.put(k, 5, 0, &xs.next()?.negate())?;
        canvas.put(k, 7, 0, &xs.next()?.negate())?;
        canvas.put(k, 3, 3, &w6.next()?)?;
        for j in 0..p {
            canvas.put(k, 0, 9 + 4 * j, &xs.next()?.transpose())?;
            canvas.put(k, 0, 11 + 4 * j, &xs.next()?.transpose().negate())?;
            canvas.put(k, 3, 9 + 4 * j, &z6.next()?)?;
        }
        for b in 0..q {
            canvas.put(k, 9 + 4 * b, 0, &xs.next()?)?;
            canvas.put(k, 11 + 4 * b, 0, &xs.next()?.negate())?;
            canvas.put(k, 9 + 4 * b, 3, &z6.next()?.transpose())?;
            for j in 0..p {
                canvas.put(k, 9 + 4 * b, 9 + 4 * j, &z4.next()?)?;
            }
        }
    }
    for s in [&a, &xs, &y, &w6, &z6, &z4] {
        s.finish()?;
    }
    canvas.finish("c0_11 assembly")
}
