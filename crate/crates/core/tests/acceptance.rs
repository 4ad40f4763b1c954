//! One PASS/FAIL line per acceptance criterion.
//!
//! Criterion 5 is expected to report FAIL: the `Z4STAR` block has row sums
//! `(1,-1,-1,1)` by construction, so it is not zero-sum. The test asserts
//! that this is the only failure there.

use std::time::{Duration, Instant};

use ::heffter::blocks::{instantiate_template, p2_as_printed, special_matrices, tile_blocks, SpecialContext, Template, TemplateParams};
use ::heffter::ihs::{appendix_ihs, partition_pieces, PartitionSpec, PieceKind};
use ::heffter::oracle::{brute_heffter_small, brute_partition, cross_check_lemma, FamilyId, SearchBudget, SearchOutcome};
use ::heffter::{build_ihs, build_integer_heffter, classify, ihs_regroup, ihs_to_heffter, support_of, verify_ihs, verify_integer_heffter};
use ::heffter::{Feasibility, FourSet, SupportSet};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

struct Outcome {
    pass: bool,
    detail: String,
    failures: Vec<String>,
}

impl Outcome {
    fn new(failures: Vec<String>, detail: String) -> Self {
        Self {
            pass: failures.is_empty(),
            detail,
            failures,
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

fn exactly_one_to(s: &SupportSet, top: usize) -> bool {
    s.is_exactly_one_to(top as i64)
}

fn golden() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for c in [3, 7, 11, 15, 19, 23, 27] {
        match appendix_ihs(c) {
            Ok(set) => {
                let r = verify_ihs(&set, 7, 7, c);
                if !r.passed || !r.violations.is_empty() {
                    bad.push(format!("c={c}: {r}"));
                }
                if c == 27 && !exactly_one_to(&support_of(&set), 1323) {
                    bad.push("c=27 support is not [1,1323]".into());
                }
            }
            Err(e) => bad.push(format!("c={c}: {e}")),
        }
    }
    let took = start.elapsed();
    if took > Duration::from_secs(1) {
        bad.push(format!("took {took:?}"));
    }
    Outcome::new(bad, format!("7 sets in {took:.2?}"))
}

fn sweep() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut n_ok = 0;
    for m in (7..=19).step_by(2) {
        for n in (7..=19).step_by(2) {
            for c in 3..=28usize {
                if !matches!((m * n * c) % 4, 0 | 3) {
                    continue;
                }
                match build_ihs(m, n, c) {
                    Ok(set) if verify_ihs(&set, m, n, c).passed => n_ok += 1,
                    Ok(_) => bad.push(format!("({m},{n},{c}) does not verify")),
                    Err(e) => bad.push(format!("({m},{n},{c}): {e}")),
                }
            }
        }
    }
    Outcome::new(bad, format!("{n_ok} triples in {:.1?}", start.elapsed()))
}

/// The coprime grid: for each residue of `c` mod 4, the smallest `c >= 2`
/// whose quadruple `(ck, cs, s, k)` is constructed here.
fn heffter_grid() -> Vec<(usize, usize, usize, usize)> {
    let mut out = vec![(28, 36, 9, 7), (36, 28, 7, 9), (44, 28, 7, 11)];
    for k in [7, 9, 11, 13] {
        for s in [7, 9, 11, 13, 14, 18] {
            if gcd(s, k) != 1 {
                continue;
            }
            for r in 0..4 {
                let c = (2..40).find(|c| c % 4 == r && classify(c * k, c * s, s, k) == Feasibility::ConstructedHere);
                if let Some(c) = c {
                    out.push((c * k, c * s, s, k));
                }
            }
        }
    }
    out
}

fn heffter_end_to_end() -> Outcome {
    let grid = heffter_grid();
    let mut bad = Vec::new();
    for &(m, n, s, k) in &grid {
        match build_integer_heffter(m, n, s, k) {
            Ok(h) => {
                let r = verify_integer_heffter(&h, s, k);
                if !r.passed || !exactly_one_to(&support_of([&h]), n * k) || !h.sum_profile().is_zero() {
                    bad.push(format!("H({m},{n};{s},{k}): {r}"));
                }
            }
            Err(e) => bad.push(format!("H({m},{n};{s},{k}): {e}")),
        }
    }
    Outcome::new(bad, format!("{} quadruples", grid.len()))
}

fn lemma_params(id: FamilyId, rng: &mut StdRng) -> Vec<i64> {
    let flag = rng.gen_range(0..=1);
    match id {
        FamilyId::AAlpha => {
            let u = rng.gen_range(1..=8);
            vec![flag, rng.gen_range(16 * u - 1..16 * u + 300), u]
        }
        FamilyId::A2 => {
            let u = rng.gen_range(1..=8);
            vec![rng.gen_range(8 * u + 24..8 * u + 300), u]
        }
        FamilyId::A3 => vec![flag, rng.gen_range(1..=12)],
        FamilyId::BFamily => vec![flag, rng.gen_range(0..200), rng.gen_range(0..=10), rng.gen_range(0..=10)],
        FamilyId::B2Family => {
            let l = rng.gen_range(0..=10);
            vec![rng.gen_range(10 * l..10 * l + 200), l, rng.gen_range(0..=l)]
        }
        FamilyId::B3Family => vec![rng.gen_range(0..=20)],
        FamilyId::B4Family => {
            let (b, l) = (2 * rng.gen_range(0..60) + 1, 2 * rng.gen_range(0..10) + 1);
            vec![b, l, rng.gen_range(b + 2 * l + 1..b + 2 * l + 100)]
        }
    }
}

fn lemma_suites() -> Outcome {
    let mut rng = StdRng::seed_from_u64(4);
    let mut bad = Vec::new();
    let per = 60;
    for id in FamilyId::ALL {
        for _ in 0..per {
            let p = lemma_params(id, &mut rng);
            let r = cross_check_lemma(id, &p);
            if !r.ok() {
                bad.push(format!("{}{:?}: {}", id.name(), p, r.mismatches.join("; ")));
            }
        }
    }
    Outcome::new(bad, format!("{per} tuples for each of 7 families"))
}

/// Random bases whose sets are pairwise disjoint.
fn random_params(t: Template, rng: &mut StdRng) -> TemplateParams {
    let (w, x, y, z) = t.arity();
    let hi = 40 * (w + x + y + z) as i64 + 40;
    loop {
        let mut draw = |n: usize| (0..n).map(|_| rng.gen_range(0..hi)).collect::<Vec<i64>>();
        let p = TemplateParams {
            w: draw(w),
            x: draw(x),
            y: draw(y),
            z: draw(z),
        };
        if p.expected_support().is_set() {
            return p;
        }
    }
}

fn templates() -> Outcome {
    let mut rng = StdRng::seed_from_u64(5);
    let mut bad = Vec::new();
    let zero_sum = [Template::P1, Template::P2, Template::P3, Template::Q1, Template::Q2, Template::R1, Template::Z4Star];
    for t in zero_sum {
        let mut fails = 0;
        let mut example = String::new();
        for _ in 0..100 {
            let p = random_params(t, &mut rng);
            match instantiate_template(t, &p) {
                Ok(b) if b.sum_profile().is_zero() => {}
                Ok(b) => {
                    fails += 1;
                    let sp = b.sum_profile();
                    example = format!("row sums {:?}, column sums {:?}", sp.row_sums, sp.col_sums);
                }
                Err(e) => {
                    fails += 1;
                    example = e.to_string();
                }
            }
        }
        if fails > 0 {
            bad.push(format!("{t} not zero-sum in {fails}/100 ({example})"));
        }
    }
    let mut printed_ok = 0;
    for _ in 0..100 {
        let p = random_params(Template::P2, &mut rng);
        if p2_as_printed(&p).map(|(_, v)| v.is_ok()).unwrap_or(false) {
            printed_ok += 1;
        }
    }
    if printed_ok > 0 {
        bad.push(format!("uncorrected P2 passed {printed_ok}/100"));
    }
    let profile = |t: Template| {
        let b = instantiate_template(t, &random_params(t, &mut StdRng::seed_from_u64(6))).map(|b| b.sum_profile());
        b.map(|p| (p.row_sums, p.col_sums))
    };
    if profile(Template::L).ok() != Some((vec![2, 0, 1, 3], vec![2, 0, 1, 3])) {
        bad.push("L profile".into());
    }
    if profile(Template::M6).ok() != Some((vec![0, 0, 2, 1, 1, 2], vec![0, 0, 0, 2, 2, 2])) {
        bad.push("M6 profile".into());
    }
    for ctx in [SpecialContext::C3General(0), SpecialContext::C3General(3), SpecialContext::C3Seven7] {
        let at = special_matrices(ctx).ok().and_then(|v| v.get(2).map(|b| b.sum_profile()));
        if at.map(|p| (p.row_sums, p.col_sums)) != Some((vec![4, 4, -2], vec![4, 4, -2])) {
            bad.push(format!("corner profile for {ctx:?}"));
        }
    }
    Outcome::new(bad, "7 templates x 100 parameterizations, P2 regression, L/M6/corner profiles".into())
}

/// `2g` type-1 and `2d` type-2 disjoint 4-sets at random positions.
fn random_pools(g: usize, d: usize, rng: &mut StdRng) -> (Vec<FourSet>, Vec<FourSet>) {
    // type-2 sets come in interleaved pairs filling 8 consecutive values
    let mut slots: Vec<u8> = std::iter::repeat_n(1, 2 * g).chain(std::iter::repeat_n(2, d)).collect();
    slots.shuffle(rng);
    let (mut one, mut two) = (Vec::new(), Vec::new());
    let mut at = 1 + rng.gen_range(0..5);
    for s in slots {
        if s == 1 {
            one.push(FourSet::new(at, 1).unwrap());
            at += 4;
        } else {
            two.push(FourSet::new(at, 2).unwrap());
            two.push(FourSet::new(at + 1, 2).unwrap());
            at += 8;
        }
        at += rng.gen_range(0..3);
    }
    one.shuffle(rng);
    two.shuffle(rng);
    (one, two)
}

fn tiling() -> Outcome {
    let mut rng = StdRng::seed_from_u64(6);
    let mut bad = Vec::new();
    for _ in 0..200 {
        let (alpha, beta) = (rng.gen_range(0..=8), rng.gen_range(0..=8));
        let total = 2 * alpha + 3 * beta;
        let gamma = rng.gen_range(0..=total);
        let delta = total - gamma;
        let (one, two) = random_pools(gamma, delta, &mut rng);
        let input = support_of(one.iter().chain(&two));
        match tile_blocks(&one, &two, alpha, beta) {
            Ok(t) => {
                let ok = t.c_blocks.len() == alpha
                    && t.d_blocks.len() == beta
                    && t.c_blocks.iter().all(|b| (b.rows(), b.cols()) == (4, 4))
                    && t.d_blocks.iter().all(|b| (b.rows(), b.cols()) == (6, 4))
                    && t.all().all(|b| b.sum_profile().is_zero())
                    && support_of(t.all()) == input;
                if !ok {
                    bad.push(format!("({gamma},{delta},{alpha},{beta}) wrong output"));
                }
            }
            Err(e) => bad.push(format!("({gamma},{delta},{alpha},{beta}) rejected: {e}")),
        }
    }
    let mut n_bad = 0;
    while n_bad < 50 {
        let (alpha, beta, gamma, delta) = (rng.gen_range(0..=4), rng.gen_range(0..=4), rng.gen_range(0..=10), rng.gen_range(0..=10));
        if 2 * alpha + 3 * beta == gamma + delta {
            continue;
        }
        n_bad += 1;
        let (one, two) = random_pools(gamma, delta, &mut rng);
        if tile_blocks(&one, &two, alpha, beta).is_ok() {
            bad.push(format!("accepted infeasible ({gamma},{delta},{alpha},{beta})"));
        }
    }
    Outcome::new(bad, "200 feasible, 50 infeasible".into())
}

fn composition() -> Outcome {
    let mut bad = Vec::new();
    let mut n = 0;
    for (a, b, c) in [(7, 9, 4), (9, 7, 5), (11, 7, 3), (7, 7, 7), (9, 11, 8), (13, 9, 4)] {
        let set = build_ihs(a, b, c).unwrap();
        for e in 1..=c {
            if b % e != 0 {
                continue;
            }
            // IHS(a, b; c) seen as IHS(a, (b/e)·e; c)
            let h = match ihs_to_heffter(&set, a, b / e, e) {
                Ok(h) => h,
                Err(err) => {
                    bad.push(format!("({a},{b},{c}) e={e}: {err}"));
                    continue;
                }
            };
            n += 1;
            let rows_ok = (0..h.rows()).all(|r| h.row_filled(r) == b);
            let cols_ok = (0..h.cols()).all(|j| h.col_filled(j) == a * e);
            if !rows_ok || !cols_ok {
                bad.push(format!("({a},{b},{c}) e={e}: filled counts"));
            }
        }
        for e in (2..=c).filter(|e| c % e == 0) {
            n += 1;
            match ihs_regroup(&set, e) {
                Ok(g) if support_of(&g) == support_of(&set) && verify_ihs(&g, a, b * e, c / e).passed => {}
                _ => bad.push(format!("({a},{b},{c}) regroup e={e}")),
            }
        }
        if ihs_regroup(&set, 1).ok().as_deref() != Some(&set[..]) {
            bad.push(format!("({a},{b},{c}) regroup e=1 not identity"));
        }
    }
    let budget = SearchBudget::new(10_000_000, Duration::from_secs(60));
    match brute_heffter_small(3, 4, 4, 3, budget) {
        SearchOutcome::Exists(h) => {
            let set = [h.clone()];
            if ihs_to_heffter(&set, 3, 4, 1).ok().as_ref() != Some(&h) {
                bad.push("c=1, e=1 composition is not the identity".into());
            }
        }
        other => bad.push(format!("no H(3,4;4,3) for the identity case: {other:?}")),
    }
    Outcome::new(bad, format!("{n} compositions and regroupings"))
}

fn random_partition_instance(rng: &mut StdRng) -> (SupportSet, PartitionSpec) {
    let mut s = SupportSet::new();
    let mut want = Vec::new();
    // build from real pieces, then sometimes perturb
    let mut at = 1i64;
    for _ in 0..rng.gen_range(1..=4) {
        let kind = *[PieceKind::Type1, PieceKind::Type2, PieceKind::Type4, PieceKind::K8, PieceKind::M12].choose(rng).unwrap();
        let piece = ::heffter::Piece::new(kind, at);
        s.extend(piece.elements());
        want.push((kind, 1));
        at += rng.gen_range(1..=14);
        while piece.elements().any(|v| v >= at) && rng.gen_bool(0.3) {
            at += 1;
        }
    }
    let mut s2 = SupportSet::new();
    let vals: Vec<i64> = {
        let mut v = s.values();
        v.dedup();
        v
    };
    s2.extend(vals.iter().copied());
    if rng.gen_bool(0.3) {
        // swap one value for a nearby free one
        let i = rng.gen_range(0..vals.len());
        let mut v = vals.clone();
        v[i] += rng.gen_range(1..=3);
        v.sort_unstable();
        v.dedup();
        s2 = v.into_iter().collect();
    }
    let total: usize = want.iter().map(|(k, n)| k.size() * n).sum();
    while s2.len() < total {
        let top = s2.max().unwrap_or(0);
        s2.insert(top + 1);
    }
    while s2.len() > total {
        let top = s2.max().unwrap();
        s2 = s2.values().into_iter().filter(|&v| v != top).collect();
    }
    (s2, PartitionSpec::new(&want))
}

fn covers(s: &SupportSet, pieces: &[::heffter::Piece], spec: &PartitionSpec) -> bool {
    let got: SupportSet = pieces.iter().flat_map(|p| p.elements()).collect();
    let mut counts: Vec<(PieceKind, usize)> = PieceKind::ALL.iter().map(|&k| (k, 0)).collect();
    for p in pieces {
        counts.iter_mut().find(|c| c.0 == p.kind).unwrap().1 += 1;
    }
    let wanted = PieceKind::ALL
        .iter()
        .all(|&k| spec.wanted.iter().filter(|w| w.0 == k).map(|w| w.1).sum::<usize>() == counts.iter().find(|c| c.0 == k).unwrap().1);
    got.is_set() && got == *s && wanted
}

fn brute_force() -> Outcome {
    let mut bad = Vec::new();
    let budget = SearchBudget::new(10_000_000, Duration::from_secs(300));
    match brute_heffter_small(3, 3, 3, 3, budget) {
        SearchOutcome::NotExists => {}
        other => bad.push(format!("(3,3,3,3): {:?}", other.exists())),
    }
    match brute_heffter_small(3, 4, 4, 3, budget) {
        SearchOutcome::Exists(h) if verify_integer_heffter(&h, 4, 3).passed => {}
        other => bad.push(format!("(3,4,4,3): {:?}", other.exists())),
    }
    let mut rng = StdRng::seed_from_u64(8);
    let (mut yes, mut no) = (0, 0);
    for _ in 0..500 {
        let (s, spec) = random_partition_instance(&mut rng);
        let fast = partition_pieces(&s, &spec);
        let slow = brute_partition(&s, &spec, budget);
        match (&fast, &slow) {
            (Ok(p), SearchOutcome::Exists(_)) if covers(&s, p, &spec) => yes += 1,
            (Err(_), SearchOutcome::NotExists) => no += 1,
            _ => bad.push(format!("{:?} {:?}: fast {}, brute {:?}", s.values(), spec.wanted, fast.is_ok(), slow.exists())),
        }
    }
    Outcome::new(bad, format!("500 partitions ({yes} feasible, {no} infeasible)"))
}

type Check = (&'static str, fn() -> Outcome);

#[test]
fn acceptance() {
    let criteria: [Check; 8] = [
        ("golden data", golden),
        ("IHS sweep", sweep),
        ("integer Heffter end to end", heffter_end_to_end),
        ("lemma families", lemma_suites),
        ("templates", templates),
        ("4-set tiling", tiling),
        ("composition laws", composition),
        ("brute-force concordance", brute_force),
    ];
    let mut results = Vec::new();
    for (i, (name, f)) in criteria.into_iter().enumerate() {
        let o = f();
        println!("{} criterion {} ({name}): {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.detail);
        for line in o.failures.iter().take(10) {
            println!("    {line}");
        }
        results.push(o);
    }
    for (i, o) in results.iter().enumerate() {
        if i == 4 {
            // only the Z4STAR line may fail
            assert_eq!(o.failures.len(), 1, "{:?}", o.failures);
            assert!(o.failures[0].starts_with("Z4STAR not zero-sum in 100/100"), "{:?}", o.failures);
        } else {
            assert!(o.pass, "criterion {} failed: {:?}", i + 1, o.failures);
        }
    }
}
