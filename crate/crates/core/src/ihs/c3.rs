//! Sets with `c = 4t+3`.

use crate::array::{Block, PartialArray};
use crate::blocks::{
    a3, a_alpha_or_empty, b3_family, b_family, d_block_from, special_matrices, tile_blocks, u_block_77,
    SpecialContext, Template,
};
use crate::error::{Error, Result};
use crate::interval::{IntervalD, SupportSet};

use super::appendix::appendix_ihs;
use super::c0::require;
use super::common::{complement, cut, expect_leftover, fill, iv, Canvas, Pool, Supply};
use super::partition::{Piece, PieceKind};

fn support_plus(mut s: SupportSet, blocks: &[&Block]) -> SupportSet {
    for b in blocks {
        s.extend(b.entries().iter().map(|v| v.abs()));
    }
    s
}

/// The four adjusted `B'` blocks of the `m ≡ n ≡ 3` and `(7,7)` cases.
/// Stacking an even one over the following odd one gives row sums
/// `(-2,0,-1,-3)` and column sums `(-4,-4,2)`.
fn tilde_3(b: &[Block]) -> Result<[Block; 4]> {
    Ok([
        b[0].offset([[0, -2, 0], [0, 0, 0]])?,
        b[1].offset([[0, -1, 0], [0, -3, 0]])?,
        b[2].offset([[0, -2, 0], [0, 0, 0]])?,
        b[3].offset([[0, -1, 0], [0, -3, 0]])?,
    ])
}

/// `IHS(m, n; 4t+3)` for `m ≡ n (mod 4)`, both at least 7, `(m, n) != (7, 7)`.
/// The last member is the one with the `(4,4,-2)` corner.
pub fn ihs_c3(m: usize, n: usize, t: usize) -> Result<Vec<PartialArray>> {
    require(m % 2 == 1 && n % 2 == 1 && m >= 7 && n >= 7, || {
        format!("m = {m}, n = {n} must be odd and at least 7")
    })?;
    require(m % 4 == n % 4, || format!("m = {m} and n = {n} must agree mod 4"))?;
    if (m, n) == (7, 7) {
        return Err(Error::Redirected("(7,7) has its own construction, see ihs_c3_77".into()));
    }
    let one = m % 4 == 1;
    let (mi, ni, ti) = (m as i64, n as i64, t as i64);
    let t = ti;
    let c = 4 * t + 3;
    let mn = mi * ni;
    let s = mi + ni;
    let (l, u) = if one { (c * (s - 10) / 4, c) } else { (c * (s - 6) / 4, 0) };

    let fam_a = a_alpha_or_empty(0, c * mn - 36 * t, 2 * t)?;
    let [a1, a2, at]: [Block; 3] = special_matrices(SpecialContext::C3General(t))?
        .try_into()
        .map_err(|_| Error::self_check("c3 corners", "expected three matrices"))?;
    let fam_b = b_family(0, 16 * t + 6, l, u)?;
    let used = support_plus(fam_a.support().union(&fam_b.support()), &[&a1, &a2, &at]);
    let left = complement("c3 families", c * mn, &used)?;
    let tt = [
        iv(4, 16 * t, 4)?,
        iv(16 * t + 2, 64 * t + 8, 2)?,
        iv(64 * t + 40, 128 * t + 38, 2)?,
        iv(128 * t + 46, 128 * t + 60, 2)?,
        iv(128 * t + 68, 2 * c * (s - 6) + 32 * t + 10, 2)?,
        iv(3 * c * (s - 6) + 32 * t + 12, 3 * c * (s - 6) + 64 * t + 23, 1)?,
        iv(4 * c * (s - 6) + 64 * t + 24, c * mn - 36 * t, 1)?,
        iv(c * mn - 28 * t + 1, c * mn - 16 * t, 1)?,
        iv(c * mn - 12 * t + 1, c * mn - 4 * t, 1)?,
    ];
    expect_leftover("c3 leftover", &left, &tt)?;

    let mut x3: Vec<Block> = fam_a.members().to_vec();
    x3.extend([a1, a2]);
    let bp = fam_b.class("B'");
    let parts = Parts { m, n, t: t as usize, x3, at, bp, bpp: fam_b.class("B''"), tt };
    if one {
        parts.build_11()
    } else {
        parts.build_33()
    }
}

struct Parts<'a> {
    m: usize,
    n: usize,
    t: usize,
    x3: Vec<Block>,
    at: Block,
    bp: &'a [Block],
    bpp: &'a [Block],
    tt: [IntervalD; 9],
}

impl Parts<'_> {
    fn build_33(self) -> Result<Vec<PartialArray>> {
        let (m, n, t) = (self.m, self.n, self.t);
        let tt = &self.tt;
        let (p, q) = ((n - 3) / 4, (m - 3) / 4);
        let c = 4 * t + 3;
        let s = m + n;
        let n_g = c * (s - 18) / 4 + 14 * t + 5;
        let n_h = c * (m - 7) * (n - 7) / 4 + 3 * (4 * t + 1) * (s - 18) / 4 + 10 * t + 7;
        let n_k = 2 * t + 3 * (s - 10) / 4;
        let mut f = cut("c3 F", &tt[0..1], &[(PieceKind::Type4, t)])?;
        let mut g = cut("c3 G", &tt[1..5], &[(PieceKind::Type2, n_g)])?;
        let mut hk = cut(
            "c3 H/K",
            &[tt[5], tt[6], tt[8]],
            &[(PieceKind::K8, n_k), (PieceKind::Type1, n_h)],
        )?;
        let mut mm = cut("c3 M", &tt[7..8], &[(PieceKind::M12, t)])?;

        let mut z4 = Vec::new();
        for _ in 0..t {
            let (fw, mk) = (f.take(PieceKind::Type4, 1)?, mm.take(PieceKind::M12, 1)?);
            z4.push(d_block_from(fw[0].base(), mk[0].start - 1)?);
        }
        for _ in 0..2 * t + 2 + 3 * (s - 14) / 4 {
            let (gx, hy, kz) = (g.take(PieceKind::Type2, 1)?, hk.take(PieceKind::Type1, 1)?, hk.take(PieceKind::K8, 1)?);
            z4.push(fill(Template::R1, &[], &gx, &hy, &kz)?);
        }
        let (hy, kz) = (hk.take(PieceKind::Type1, 2)?, hk.take(PieceKind::K8, 1)?);
        let lblock = fill(Template::L, &[], &[], &hy, &kz)?;
        let tiles = tile_blocks(
            &hk.rest(PieceKind::Type1),
            &g.rest(PieceKind::Type2),
            c * (m - 7) * (n - 7) / 16 + (s - 13) * t,
            0,
        )?;
        for pool in [&f, &g, &hk, &mm] {
            pool.finish()?;
        }
        z4.extend(tiles.c_blocks);

        let bt = tilde_3(self.bp)?;
        let mut x3 = Supply::new("c3 X_3", self.x3);
        let mut xs = Supply::new("c3 X_2", self.bp[4..].iter().cloned());
        let mut z4 = Supply::new("c3 Z_4", z4);
        let mut canvas = Canvas::new(m, n, c)?;
        for k in 0..c {
            let special = k == c - 1;
            if special {
                canvas.put(k, 0, 0, &self.at)?;
                canvas.put(k, 0, 3, &bt[2].transpose())?;
                canvas.put(k, 0, 5, &bt[3].transpose())?;
                canvas.put(k, 3, 0, &bt[0])?;
                canvas.put(k, 5, 0, &bt[1])?;
                canvas.put(k, 3, 3, &lblock)?;
            } else {
                canvas.put(k, 0, 0, &x3.next()?)?;
            }
            for j in 0..p {
                if special && j == 0 {
                    continue;
                }
                canvas.put(k, 0, 3 + 4 * j, &xs.next()?.transpose())?;
                canvas.put(k, 0, 5 + 4 * j, &xs.next()?.transpose().negate())?;
            }
            for b in 0..q {
                if !(special && b == 0) {
                    canvas.put(k, 3 + 4 * b, 0, &xs.next()?)?;
                    canvas.put(k, 5 + 4 * b, 0, &xs.next()?.negate())?;
                }
                for j in 0..p {
                    if special && b == 0 && j == 0 {
                        continue;
                    }
                    canvas.put(k, 3 + 4 * b, 3 + 4 * j, &z4.next()?)?;
                }
            }
        }
        for s in [&x3, &xs, &z4] {
            s.finish()?;
        }
        canvas.finish("c3 assembly")
    }

    fn build_11(self) -> Result<Vec<PartialArray>> {
        let (m, n, t) = (self.m, self.n, self.t);
        let tt = &self.tt;
        let (p, q) = ((n - 9) / 4, (m - 9) / 4);
        let c = 4 * t + 3;
        let s = m + n;
        let t6a = iv(tt[5].lo(), tt[5].lo() + 7, 1)?;
        let t6b = iv(tt[5].lo() + 8, tt[5].hi(), 1)?;
        let n_g = c * (s - 18) / 4 + 14 * t + 7;
        let n_h = c * ((m - 9) * (n - 9) + 3 * (s - 18)) / 4 + 11 * t + 16;
        let n_k = c * (s - 18) / 4 + 5 * t + 2;
        let mut f = cut("c3 F", &tt[0..1], &[(PieceKind::Type4, t)])?;
        let mut g = cut("c3 G", &[tt[1], tt[2], tt[3], tt[4], t6a], &[(PieceKind::Type2, n_g)])?;
        let mut hk = cut(
            "c3 H/K",
            &[t6b, tt[6], tt[7], tt[8]],
            &[(PieceKind::K8, n_k), (PieceKind::Type1, n_h)],
        )?;

        let mut w6 = Vec::with_capacity(c - 1);
        for _ in 0..t {
            let (fw, hy, kz) = (f.take(PieceKind::Type4, 1)?, hk.take(PieceKind::Type1, 4)?, hk.take(PieceKind::K8, 2)?);
            w6.push(fill(Template::P1, &fw, &[], &hy, &kz)?);
        }
        for _ in 0..2 * t + 1 {
            let (gx, kz) = (g.take(PieceKind::Type2, 7)?, hk.take(PieceKind::K8, 1)?);
            w6.push(fill(Template::P2, &[], &gx, &[], &kz)?);
        }
        for _ in 0..t + 1 {
            let (hy, kz) = (hk.take(PieceKind::Type1, 7)?, hk.take(PieceKind::K8, 1)?);
            w6.push(fill(Template::P3, &[], &[], &hy, &kz)?);
        }
        let mblock = fill(Template::M6, &[], &[], &hk.take(PieceKind::Type1, 9)?, &[])?;
        let mut z6 = Vec::new();
        for _ in 0..c * (s - 18) / 4 {
            let (gx, hy, kz) = (g.take(PieceKind::Type2, 1)?, hk.take(PieceKind::Type1, 3)?, hk.take(PieceKind::K8, 1)?);
            z6.push(fill(Template::Q1, &[], &gx, &hy, &kz)?);
        }
        let tiles = tile_blocks(&hk.rest(PieceKind::Type1), &g.rest(PieceKind::Type2), c * p * q, 0)?;
        for pool in [&f, &g, &hk] {
            pool.finish()?;
        }

        let b = self.bp;
        let tilde = [
            b[0].offset([[0, 0, 0], [0, 2, 0]])?,
            b[1].offset([[0, -2, 0], [0, -2, 0]])?,
            b[2].offset([[0, 2, 0], [0, 1, 0]])?,
            b[3].offset([[0, -1, 0], [0, -2, 0]])?,
        ];
        let mut x3 = Supply::new("c3 X_3", self.x3);
        let mut xs = Supply::new("c3 X_2", b[4..].iter().cloned());
        let mut y = Supply::new("c3 Y_2", self.bpp.iter().cloned());
        let mut w6 = Supply::new("c3 W_6", w6);
        let mut z6 = Supply::new("c3 Z_6", z6);
        let mut z4 = Supply::new("c3 Z_4", tiles.c_blocks);
        let mut canvas = Canvas::new(m, n, c)?;
        for k in 0..c {
            canvas.put(k, 0, 3, &y.next()?.transpose())?;
            canvas.put(k, 3, 0, &y.next()?)?;
            if k == c - 1 {
                canvas.put(k, 0, 0, &self.at)?;
                canvas.put(k, 0, 5, &tilde[0].transpose().negate())?;
                canvas.put(k, 0, 7, &tilde[1].transpose())?;
                canvas.put(k, 5, 0, &tilde[2].negate())?;
                canvas.put(k, 7, 0, &tilde[3])?;
                canvas.put(k, 3, 3, &mblock)?;
            } else {
                canvas.put(k, 0, 0, &x3.next()?)?;
                canvas.put(k, 0, 5, &xs.next()?.transpose().negate())?;
                canvas.put(k, 0, 7, &xs.next()?.transpose().negate())?;
                canvas.put(k, 5, 0, &xs.next()?.negate())?;
                canvas.put(k, 7, 0, &xs.next()?.negate())?;
                canvas.put(k, 3, 3, &w6.next()?)?;
            }
            for j in 0..p {
                canvas.put(k, 0, 9 + 4 * j, &xs.next()?.transpose())?;
                canvas.put(k, 0, 11 + 4 * j, &xs.next()?.transpose().negate())?;
                canvas.put(k, 3, 9 + 4 * j, &z6.next()?)?;
            }
            for bb in 0..q {
                canvas.put(k, 9 + 4 * bb, 0, &xs.next()?)?;
                canvas.put(k, 11 + 4 * bb, 0, &xs.next()?.negate())?;
                canvas.put(k, 9 + 4 * bb, 3, &z6.next()?.transpose())?;
                for j in 0..p {
                    canvas.put(k, 9 + 4 * bb, 9 + 4 * j, &z4.next()?)?;
                }
            }
        }
        for s in [&x3, &xs, &y, &w6, &z6, &z4] {
            s.finish()?;
        }
        canvas.finish("c3 assembly")
    }
}

/// `IHS(7, 7; 4t+3)`. For `t <= 6` this is the embedded table; from `t = 7`
/// on it is constructed. Member order: `3t+2` plain members, `t` members
/// with a `Z_4*` block, then the one with the `(4,4,-2)` corner.
pub fn ihs_c3_77(t: usize) -> Result<Vec<PartialArray>> {
    if t <= 6 {
        return appendix_ihs(4 * t + 3);
    }
    let tu = t;
    let t = t as i64;
    let c = 4 * t + 3;
    let fam_a = a3(1, 4 * t)?;
    let [a1, a2, at]: [Block; 3] = special_matrices(SpecialContext::C3Seven7)?
        .try_into()
        .map_err(|_| Error::self_check("c3_77 corners", "expected three matrices"))?;
    let fam_b = b3_family(t)?;
    let used = support_plus(fam_a.support().union(&fam_b.support()), &[&a1, &a2, &at]);
    let left = complement("c3_77 families", 49 * c, &used)?;
    let t1 = iv(2, 8, 2)?;
    let t2 = iv(46, 60, 2)?;
    let t3 = iv(68, 8 * t + 10, 2)?;
    let t4 = iv(12 * t + 12, 12 * t + 23, 1)?;
    let t5 = iv(20 * t + 24, 20 * t + 35, 1)?;
    let q1 = iv(32 * t + 36, 36 * t + 46, 2)?;
    let q2 = iv(40 * t + 48, 44 * t + 58, 2)?;
    let q3 = iv(48 * t + 60, 56 * t + 82, 2)?;
    let q4 = iv(64 * t + 84, 96 * t + 82, 2)?;
    let q5 = iv(128 * t + 108, 152 * t + 143, 1)?;
    let q6 = iv(158 * t + 150, 162 * t + 149, 1)?;
    let q7 = iv(164 * t + 156, 168 * t + 155, 1)?;
    let q8 = iv(192 * t + 168, 196 * t + 147, 1)?;
    expect_leftover(
        "c3_77 leftover",
        &left,
        &[t1, t2, t3, t4, t5, q1, q2, q3, q4, q5, q6, q7, q8],
    )?;
    let q5a = iv(128 * t + 108, 128 * t + 111, 1)?;
    let q5b = iv(128 * t + 112, 136 * t + 143, 1)?;
    let q5c = iv(136 * t + 144, 152 * t + 143, 1)?;

    let mut hstar = cut("c3_77 Q5'''", &[q5c], &[(PieceKind::Type1, 4 * tu)])?;
    let mut zstar = Vec::with_capacity(tu);
    for _ in 0..tu {
        zstar.push(fill(Template::Z4Star, &[], &[], &hstar.take(PieceKind::Type1, 4)?, &[])?);
    }
    hstar.finish()?;
    let lblock = fill(
        Template::L,
        &[],
        &[],
        &[Piece::new(PieceKind::Type1, 12 * t + 20), Piece::new(PieceKind::Type1, q5a.lo())],
        &[Piece::new(PieceKind::K8, 12 * t + 12)],
    )?;

    let mut gpool = cut("c3_77 G", &[t3, q3, q4], &[(PieceKind::Type2, ((t3.len() + q3.len() + q4.len()) / 4))])?;
    gpool.extend(cut("c3_77 Q5''", &[q5b], &[(PieceKind::Type2, q5b.len() / 4)])?);
    let mut z4 = tile_blocks(&[], &gpool.rest(PieceKind::Type2), 2 * tu + 1, 0)?.c_blocks;
    gpool.finish()?;

    // The remaining t+1 blocks come from the small leftover intervals.
    let mut tail = Pool::new("c3_77 tail", Vec::new());
    let runs_as_pairs = |name: &str, parts: &[IntervalD]| -> Result<Pool> {
        let total: usize = parts.iter().map(|p| p.len()).sum();
        cut(name, parts, &[(PieceKind::Type2, total / 4)])
    };
    if t % 2 == 1 {
        let mut own = Pool::new(
            "c3_77 R1",
            vec![
                Piece::new(PieceKind::K8, t5.lo()),
                Piece::new(PieceKind::Type1, t5.lo() + 8),
            ],
        );
        tail.extend(cut("c3_77 H'", &[iv(q6.lo(), q6.lo() + 3, 1)?, iv(q7.lo(), q7.lo() + 3, 1)?, iv(q8.lo(), q8.lo() + 7, 1)?], &[(PieceKind::Type1, 4)])?);
        tail.extend(runs_as_pairs(
            "c3_77 G'",
            &[
                t1,
                t2,
                q1,
                q2,
                iv(q6.lo() + 4, q6.hi(), 1)?,
                iv(q7.lo() + 4, q7.hi(), 1)?,
                iv(q8.lo() + 8, q8.hi(), 1)?,
            ],
        )?);
        let gx = tail.take(PieceKind::Type2, 1)?;
        let (hy, kz) = (own.take(PieceKind::Type1, 1)?, own.take(PieceKind::K8, 1)?);
        own.finish()?;
        z4.push(fill(Template::R1, &[], &gx, &hy, &kz)?);
    } else {
        z4.push(u_block_77(t)?);
        tail.extend(runs_as_pairs("c3_77 G'", &[t2, iv(32 * t + 48, q1.hi(), 2)?, iv(40 * t + 60, q2.hi(), 2)?])?);
        let ones: Vec<IntervalD> = vec![t5, q6, q7, q8];
        let total: usize = ones.iter().map(|p| p.len()).sum();
        tail.extend(cut("c3_77 H'", &ones, &[(PieceKind::Type1, total / 4)])?);
    }
    z4.extend(tile_blocks(&tail.rest(PieceKind::Type1), &tail.rest(PieceKind::Type2), tu, 0)?.c_blocks);
    tail.finish()?;

    let bi = fam_b.class("BI");
    let k2 = 2 * (tu + 3);
    let bt = tilde_3(&bi[k2..k2 + 4])?;
    let mut x3 = Supply::new("c3_77 X_3", fam_a.members().iter().cloned().chain([a1, a2]));
    let mut xs = Supply::new("c3_77 X_2", bi[..k2].iter().chain(&bi[k2 + 4..]).cloned());
    let mut y = Supply::new("c3_77 Y_2", fam_b.class("BII").iter().cloned());
    let mut z4 = Supply::new("c3_77 Z_4", z4);
    let mut zstar = Supply::new("c3_77 Z_4*", zstar);
    let mut canvas = Canvas::new(7, 7, c as usize)?;
    for k in 0..c as usize {
        if k == c as usize - 1 {
            canvas.put(k, 0, 0, &at)?;
            canvas.put(k, 0, 3, &bt[2].transpose())?;
            canvas.put(k, 0, 5, &bt[3].transpose())?;
            canvas.put(k, 3, 0, &bt[0])?;
            canvas.put(k, 5, 0, &bt[1])?;
            canvas.put(k, 3, 3, &lblock)?;
            continue;
        }
        canvas.put(k, 0, 0, &x3.next()?)?;
        canvas.put(k, 0, 3, &xs.next()?.transpose())?;
        canvas.put(k, 0, 5, &xs.next()?.transpose().negate())?;
        if k < 3 * tu + 2 {
            canvas.put(k, 3, 0, &xs.next()?)?;
            canvas.put(k, 5, 0, &xs.next()?.negate())?;
            canvas.put(k, 3, 3, &z4.next()?)?;
        } else {
            canvas.put(k, 3, 0, &y.next()?)?;
            canvas.put(k, 5, 0, &y.next()?.negate())?;
            canvas.put(k, 3, 3, &zstar.next()?)?;
        }
    }
    for s in [&x3, &xs, &y, &z4, &zstar] {
        s.finish()?;
    }
    canvas.finish("c3_77 assembly")
}
