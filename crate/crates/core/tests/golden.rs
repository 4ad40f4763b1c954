use ::heffter::format::parse_json;
use ::heffter::ihs::{appendix_ihs, appendix_list, ihs_c0_n3};
use ::heffter::{
    build_ihs, build_integer_heffter, classify, ihs_regroup, ihs_to_heffter, support_of, verify_ihs,
    verify_integer_heffter, Axiom, Error, Feasibility, Location, PartialArray,
};

fn fixture() -> Vec<PartialArray> {
    let text = include_str!("fixtures/example_ihs_9_7_4.json");
    parse_json(text).unwrap().arrays().to_vec()
}

#[test]
fn fixture_set_verifies() {
    let set = fixture();
    assert!(verify_ihs(&set, 9, 7, 4).passed);
    // the builder produces a different set with the same top-left corner
    let built = ihs_c0_n3(9, 7, 1).unwrap();
    assert_ne!(built, set);
    for r in 0..3 {
        assert_eq!(built[0].row_cells(r)[..3], set[0].row_cells(r)[..3]);
    }
}

#[test]
fn appendix_sets_verify() {
    for (m, n, c) in appendix_list() {
        let set = appendix_ihs(c).unwrap();
        assert!(verify_ihs(&set, m, n, c).passed, "c = {c}");
    }
    let last = appendix_ihs(27).unwrap();
    assert!(support_of(&last).is_exactly_one_to(1323));
}

#[test]
fn appendix_corner_support() {
    let first = &appendix_ihs(3).unwrap()[0];
    let mut corner: Vec<i64> = (0..3).flat_map(|r| first.row_cells(r)[..3].iter().map(|v| v.unwrap().abs())).collect();
    corner.sort_unstable();
    assert_eq!(corner, vec![1, 3, 5, 7, 9, 10, 11, 12, 14]);
}

#[test]
fn sign_flip_breaks_one_row() {
    let mut set = appendix_ihs(3).unwrap();
    let mut rows = set[1].to_rows();
    rows[4][2] = rows[4][2].map(|v| -v);
    set[1] = PartialArray::from_rows(&rows).unwrap();
    let r = verify_ihs(&set, 7, 7, 3);
    assert!(!r.passed);
    let rows_hit: Vec<&Location> = r.violations.iter().filter(|v| v.axiom == Axiom::RowSum).map(|v| &v.location).collect();
    assert_eq!(rows_hit.len(), 1);
    assert!(!r.has(Axiom::SupportDuplicate));
}

#[test]
fn single_member_is_not_heffter() {
    let first = &appendix_ihs(3).unwrap()[0];
    let r = verify_integer_heffter(first, 7, 7);
    assert!(!r.passed);
    assert!(r.has(Axiom::SupportGap));
    assert!(!r.has(Axiom::RowSum));
}

#[test]
fn regroup_pairs() {
    let set = build_ihs(7, 9, 8).unwrap();
    let g = ihs_regroup(&set, 2).unwrap();
    assert!(verify_ihs(&g, 7, 18, 4).passed);
    assert_eq!(support_of(&g), support_of(&set));
    assert!(matches!(ihs_regroup(&set, 3), Err(Error::InvalidParams(_))));
}

#[test]
fn compose_small() {
    let set = build_ihs(7, 9, 4).unwrap();
    let h = ihs_to_heffter(&set, 7, 9, 1).unwrap();
    assert_eq!((h.rows(), h.cols()), (28, 36));
    assert!(verify_integer_heffter(&h, 9, 7).passed);
    assert!(ihs_to_heffter(&set, 7, 9, 5).is_err());
    assert!(ihs_to_heffter(&set, 9, 7, 1).is_err());
}

#[test]
fn end_to_end_examples() {
    let h = build_integer_heffter(28, 36, 9, 7).unwrap();
    assert!(support_of([&h]).is_exactly_one_to(252));
    let h = build_integer_heffter(36, 28, 7, 9).unwrap();
    assert!(verify_integer_heffter(&h, 7, 9).passed);
    // s = 18 goes through regrouping
    let h = build_integer_heffter(14, 36, 18, 7).unwrap();
    assert!(verify_integer_heffter(&h, 18, 7).passed);
}

#[test]
fn end_to_end_rejections() {
    assert!(matches!(build_integer_heffter(28, 36, 9, 8), Err(Error::InvalidParams(_))));
    assert!(matches!(
        build_integer_heffter(14, 8, 4, 7),
        Err(Error::Unsupported(Feasibility::KnownElsewhere(6)))
    ));
    assert!(matches!(build_integer_heffter(7, 9, 9, 7), Err(Error::ExternalConstruction(_))));
    assert_eq!(classify(25, 40, 8, 5).to_string(), "open(1)");
}
