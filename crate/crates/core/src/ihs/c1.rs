//! Sets with `c = 4t+1`, `t >= 1`.

use crate::array::{Block, PartialArray};
use crate::blocks::{a2, a3, b4_family, b_family, special_matrices, tile_blocks, SpecialContext, Template};
use crate::error::{Error, Result};
use crate::interval::{IntervalD, SupportSet};

use super::c0::require;
use super::common::{complement, cut, expect_leftover, fill, iv, union_of, Canvas, Pool, Supply};
use super::partition::{Piece, PieceKind};

/// `IHS(m, n; 4t+1)` for `m ≡ 1`, `n ≡ 3 (mod 4)`, `m >= 9`, `n >= 7`,
/// `(m, n) != (9, 7)`. The last member carries the 5x3 corner.
pub fn ihs_c1(m: usize, n: usize, t: usize) -> Result<Vec<PartialArray>> {
    require(m % 4 == 1 && m >= 9, || format!("m = {m} must be 1 mod 4 and at least 9"))?;
    require(n % 4 == 3 && n >= 7, || format!("n = {n} must be 3 mod 4 and at least 7"))?;
    require(t >= 1, || "t must be at least 1 (c = 1 needs an external construction)".into())?;
    if (m, n) == (9, 7) {
        return Err(Error::Redirected("(9,7) has its own construction, see ihs_c1_97".into()));
    }
    let (p, q) = ((n - 3) / 4, (m - 9) / 4);
    let (mi, ni, t) = (m as i64, n as i64, t as i64);
    let c = 4 * t + 1;
    let mn = mi * ni;
    let s = mi + ni;
    let a = c * mn - 36 * t - 31;
    let l = c * (s - 8) / 4;

    let fam_a = a2(a, 4 * t)?;
    let corner = special_matrices(SpecialContext::C1General(t))?.remove(0);
    let fam_b = b_family(0, 16 * t + 12, l, 2 * t)?;
    let mut used = fam_a.support().union(&fam_b.support());
    used.extend(corner.entries().iter().map(|v| v.abs()));
    let left = complement("c1 families", c * mn, &used)?;
    let tt = [
        iv(8, 16 * t + 4, 4)?,
        iv(16 * t + 8, 16 * t + 14, 2)?,
        iv(8 * t + 9, 8 * t + 15, 2)?,
        iv(16 * t + 16, 24 * t + 14, 2)?,
        iv(24 * t + 24, 32 * t + 22, 2)?,
        iv(a + 4 * t, a + 4 * t + 7, 1)?,
        iv(a + 8 * t + 8, a + 20 * t + 15, 1)?,
        iv(a + 24 * t + 16, a + 32 * t + 31, 1)?,
        iv(32 * t + 24, 2 * c * (s - 4) + 16 * t + 14, 2)?,
        iv(3 * c * (s - 4) + 8 * t + 12, 3 * c * (s - 4) + 40 * t + 35, 1)?,
        iv(4 * c * (s - 4) + 32 * t + 32, a - 1, 1)?,
    ];
    expect_leftover("c1 leftover", &left, &tt)?;

    let tu = t as usize;
    let n_g = (c * (s - 4) / 4 + 1) as usize;
    let n_h = ((ni - 7) / 4 * (mi - 6) * c + (mi - 9) / 4 * (12 * t + 1) + 7 * t + 2) as usize;
    let n_k = (2 * t + c * (ni - 7) / 4 + (mi - 9) / 4) as usize;
    let mut f = cut("c1 F", &tt[0..1], &[(PieceKind::Type4, tu)])?;
    let mut g = cut("c1 G", &[tt[1], tt[2], tt[3], tt[4], tt[8]], &[(PieceKind::Type2, n_g)])?;
    let mut hk = cut(
        "c1 H/K",
        &[tt[5], tt[6], tt[7], tt[9], tt[10]],
        &[(PieceKind::K8, n_k), (PieceKind::Type1, n_h)],
    )?;

    let n_q1 = (c as usize) * (n - 7) / 4;
    let mut z6 = Vec::new();
    for _ in 0..n_q1 {
        let (gx, hy, kz) = (g.take(PieceKind::Type2, 1)?, hk.take(PieceKind::Type1, 3)?, hk.take(PieceKind::K8, 1)?);
        z6.push(fill(Template::Q1, &[], &gx, &hy, &kz)?);
    }
    for _ in 0..tu {
        let (fw, hy, kz) = (f.take(PieceKind::Type4, 1)?, hk.take(PieceKind::Type1, 1)?, hk.take(PieceKind::K8, 2)?);
        z6.push(fill(Template::Q2, &fw, &[], &hy, &kz)?);
    }
    let mut z4 = Vec::new();
    for _ in 0..q {
        let (gx, hy, kz) = (g.take(PieceKind::Type2, 1)?, hk.take(PieceKind::Type1, 1)?, hk.take(PieceKind::K8, 1)?);
        z4.push(fill(Template::R1, &[], &gx, &hy, &kz)?);
    }
    let tiles = tile_blocks(
        &hk.rest(PieceKind::Type1),
        &g.rest(PieceKind::Type2),
        q * ((c as usize) * (n - 3) - 4) / 4,
        3 * tu + 1,
    )?;
    for pool in [&f, &g, &hk] {
        pool.finish()?;
    }
    z6.extend(tiles.d_blocks);
    z4.extend(tiles.c_blocks);

    let mut xa = Supply::new("c1 X_3", fam_a.members().iter().cloned());
    let mut xs = Supply::new("c1 X_2", fam_b.class("B'").iter().cloned());
    let mut y = Supply::new("c1 Y_2", fam_b.class("B''").iter().cloned());
    let mut z6 = Supply::new("c1 Z_6", z6);
    let mut z4 = Supply::new("c1 Z_4", z4);
    let mut canvas = Canvas::new(m, n, c as usize)?;
    for k in 0..c as usize {
        let special = k == 4 * tu;
        if special {
            canvas.put(k, 0, 0, &corner)?;
            canvas.put(k, 5, 0, &xs.next()?)?;
            canvas.put(k, 7, 0, &xs.next()?.negate())?;
        } else {
            canvas.put(k, 0, 0, &xa.next()?)?;
            canvas.put(k, 3, 0, &y.next()?)?;
            canvas.put(k, 5, 0, &xs.next()?.negate())?;
            canvas.put(k, 7, 0, &xs.next()?.negate())?;
        }
        place_bands(&mut canvas, k, p, q, &mut xs, &mut z6, &mut z4)?;
    }
    for s in [&xa, &xs, &y, &z6, &z4] {
        s.finish()?;
    }
    canvas.finish("c1 assembly")
}

/// Header pairs, the 6-row band of `Z_6` blocks and the 4-row bands below
/// row 9, shared by both member shapes.
fn place_bands(
    canvas: &mut Canvas,
    k: usize,
    p: usize,
    q: usize,
    xs: &mut Supply,
    z6: &mut Supply,
    z4: &mut Supply,
) -> Result<()> {
    for j in 0..p {
        canvas.put(k, 0, 3 + 4 * j, &xs.next()?.transpose())?;
        canvas.put(k, 0, 5 + 4 * j, &xs.next()?.transpose().negate())?;
        canvas.put(k, 3, 3 + 4 * j, &z6.next()?)?;
    }
    for b in 0..q {
        canvas.put(k, 9 + 4 * b, 0, &xs.next()?)?;
        canvas.put(k, 11 + 4 * b, 0, &xs.next()?.negate())?;
        for j in 0..p {
            canvas.put(k, 9 + 4 * b, 3 + 4 * j, &z4.next()?)?;
        }
    }
    Ok(())
}

/// Cuts every progression by its own step: step 2 into type-2 sets, step
/// 1 into type-1 sets.
fn by_step(step: &str, parts: &[IntervalD]) -> Result<Pool> {
    let mut pool = Pool::new(step, Vec::new());
    for &p in parts.iter().filter(|p| !p.is_empty()) {
        let kind = match p.step() {
            1 => PieceKind::Type1,
            2 => PieceKind::Type2,
            _ => return Err(Error::self_check(step, format!("{p} has an unexpected step"))),
        };
        if p.len() % 4 != 0 {
            return Err(Error::self_check(step, format!("{p} does not split into 4-sets")));
        }
        pool.extend(cut(step, &[p], &[(kind, p.len() / 4)])?);
    }
    Ok(pool)
}

/// `IHS(9, 7; 4t+1)` for `t >= 1`.
pub fn ihs_c1_97(t: usize) -> Result<Vec<PartialArray>> {
    if t == 0 {
        return Err(Error::ExternalConstruction(
            "IHS(9,7;1) is an integer H(9,7); no construction here".into(),
        ));
    }
    let t = t as i64;
    let c = 4 * t + 1;
    let eps = t % 2;
    let tau = (t + 2 - eps) / 2;

    let fam_a = a3(0, 4 * t)?;
    let corner = special_matrices(SpecialContext::C1Nine7(t))?.remove(0);
    let tj = [
        iv(48 * t + 40, 56 * t + 54, 2)?,
        iv(40 * t + 32, 40 * t + 30 + 8 * tau, 2)?,
        iv(32 * t + 24, 32 * t + 22 + 8 * tau, 2)?,
        iv(20 * t + 16, 20 * t + 22, 2)?,
        iv(12 * t + 8, 12 * t + 14, 2)?,
        iv(8, 8 * t + 6, 2)?,
        iv(24 * t + 24, 32 * t + 22, 2)?,
    ];
    let uj = [
        iv(48 * t + 41, 64 * t + 55, 2)?,
        iv(40 * t + 33, 40 * t + 31 + 8 * tau, 2)?,
        iv(32 * t + 25, 32 * t + 23 + 8 * tau, 2)?,
        iv(20 * t + 17, 20 * t + 23, 2)?,
        iv(12 * t + 9, 12 * t + 15, 2)?,
    ];
    let w2 = iv(40 * t + 32 + 8 * tau, 44 * t + 39, 1)?;
    let w3 = iv(32 * t + 24 + 8 * tau, 36 * t + 31, 1)?;

    let mut fams = Vec::with_capacity(5);
    let mut x_prev: Option<(i64, i64)> = None;
    for (j, u) in uj.iter().enumerate() {
        let lj = if j == 0 {
            u.len() as i64 + 28 * t - 17 + 4 * eps
        } else {
            u.len() as i64 - 1
        };
        let xj = match x_prev {
            None => 120 * t + 24 + 8 * eps,
            Some((x, l)) => x + l + 1,
        };
        if j == 0 && xj != u.lo() + 2 * lj + 1 {
            return Err(Error::self_check("c1_97 schedule", "x_1 != b_1 + 2l_1 + 1"));
        }
        fams.push(b4_family(u.lo(), lj, xj)?);
        x_prev = Some((xj, lj));
    }

    let first = fams[0].members();
    let n_y = 4 * t as usize;
    if first.len() <= n_y {
        return Err(Error::self_check("c1_97 B^1", "first family is too small"));
    }
    let mut ys = Vec::with_capacity(n_y);
    for j in 0..2 * t as usize {
        ys.push(first[2 * j].offset([[0, 0, 0], [-2, 1, 1]])?);
        ys.push(first[2 * j + 1].offset([[-2, 1, 1], [0, 0, 0]])?);
    }
    let xs_blocks: Vec<Block> = first[n_y..]
        .iter()
        .chain(fams[1..].iter().flat_map(|f| f.members()))
        .cloned()
        .collect();

    let mut used: SupportSet = fam_a.support();
    used.extend(corner.entries().iter().map(|v| v.abs()));
    for b in ys.iter().chain(&xs_blocks) {
        used.extend(b.entries().iter().map(|v| v.abs()));
    }
    let yh = [
        iv(64 * t + 56, 120 * t + 22 + 8 * eps, 2)?,
        iv(160 * t + 32 + 8 * eps, 172 * t + 39 + 8 * eps, 1)?,
        iv(172 * t + 44 + 8 * eps, 180 * t + 43 + 8 * eps, 1)?,
        iv(180 * t + 48 + 8 * eps, 192 * t + 47 + 8 * eps, 1)?,
        iv(194 * t + 52 + 6 * eps, 198 * t + 51 + 10 * eps, 1)?,
        iv(200 * t + 56 + 8 * eps, 204 * t + 55 + 12 * eps, 1)?,
        iv(240 * t + 48 + 16 * eps, 252 * t + 55, 1)?,
    ];
    let left = complement("c1_97 families", 63 * c, &used)?;
    let stated: Vec<IntervalD> = tj.iter().chain(&yh).chain(&[w2, w3]).copied().collect();
    expect_leftover("c1_97 leftover", &left, &stated)?;

    // With t odd, {8,...,14} and the first twenty values of the second Y
    // interval fill one Q1 block; everything else is tiled.
    let mut z6 = Vec::new();
    let mut rest: Vec<IntervalD> = Vec::new();
    if eps == 1 {
        let y0 = 160 * t + 40;
        let pieces = |kind, starts: &[i64]| starts.iter().map(|&s| Piece::new(kind, s)).collect::<Vec<_>>();
        z6.push(fill(
            Template::Q1,
            &[],
            &pieces(PieceKind::Type2, &[8]),
            &pieces(PieceKind::Type1, &[y0, y0 + 4, y0 + 8]),
            &pieces(PieceKind::K8, &[y0 + 12]),
        )?);
        rest.push(iv(16, 8 * t + 6, 2)?);
        rest.extend(tj.iter().filter(|i| i.lo() != 8));
        rest.push(iv(y0 + 20, yh[1].hi(), 1)?);
        rest.extend(yh.iter().filter(|i| i.lo() != yh[1].lo()));
    } else {
        rest.extend(tj.iter().chain(&yh));
    }
    rest.extend([w2, w3]);
    let check = union_of(&rest);
    if check.len() != 24 * (4 * t + 1 - eps) as usize {
        return Err(Error::self_check("c1_97 tiling", "tiled set has the wrong size"));
    }
    let mut pool = by_step("c1_97 tiling", &rest)?;
    let tiles = tile_blocks(
        &pool.rest(PieceKind::Type1),
        &pool.rest(PieceKind::Type2),
        0,
        (4 * t + 1 - eps) as usize,
    )?;
    pool.finish()?;
    z6.extend(tiles.d_blocks);

    let mut xa = Supply::new("c1_97 X_3", fam_a.members().iter().cloned());
    let mut xs = Supply::new("c1_97 X_2", xs_blocks);
    let mut y = Supply::new("c1_97 Y_2", ys);
    let mut z6 = Supply::new("c1_97 Z_6", z6);
    let mut z4 = Supply::new("c1_97 Z_4", Vec::new());
    let mut canvas = Canvas::new(9, 7, c as usize)?;
    for k in 0..c as usize {
        if k == 4 * t as usize {
            canvas.put(k, 0, 0, &corner)?;
            canvas.put(k, 5, 0, &xs.next()?)?;
            canvas.put(k, 7, 0, &xs.next()?.negate())?;
        } else {
            canvas.put(k, 0, 0, &xa.next()?)?;
            canvas.put(k, 3, 0, &y.next()?)?;
            canvas.put(k, 5, 0, &xs.next()?.negate())?;
            canvas.put(k, 7, 0, &xs.next()?.negate())?;
        }
        place_bands(&mut canvas, k, 1, 0, &mut xs, &mut z6, &mut z4)?;
    }
    for s in [&xa, &xs, &y, &z6] {
        s.finish()?;
    }
    canvas.finish("c1_97 assembly")
}
