mod common;

use hyphor::balls::{
    analytic_clearances, check_admissibility, edge_horosphere_intersection, heron,
    horo_param_through, horoball_piece_volume, horospheric_arc, hyperball_piece_volume, Horoball,
    Hyperball,
};
use hyphor::lorentz::{distance, Point3};
use hyphor::montecarlo::{estimate_volume, Region};
use hyphor::orthoscheme::{build_scheme, realize, FrustumOrthoscheme};
use hyphor::packing3d::min_horo_param;
use proptest::prelude::*;

use common::p3;

fn f736() -> FrustumOrthoscheme {
    realize(&build_scheme(7.0, 3.0, 6.0).unwrap()).unwrap()
}

fn proper_point() -> impl Strategy<Value = Point3> {
    (-0.55..0.55f64, -0.55..0.55f64, -0.55..0.55f64)
        .prop_filter("inside", |(a, b, c)| a * a + b * b + c * c < 0.9)
        .prop_map(|(a, b, c)| p3([1.0, a, b, c]))
}

proptest! {
    #[test]
    fn horoballs_nest(x in proper_point(), s1 in -0.9..0.9f64, ds in 0.0..0.09f64) {
        let inner = Horoball::<4>::new(s1 + ds).unwrap();
        let outer = Horoball::<4>::new(s1).unwrap();
        prop_assert!(inner.signed_distance(&x).unwrap() >= outer.signed_distance(&x).unwrap() - 1e-12);
    }

    #[test]
    fn hyperballs_nest(x in proper_point(), h1 in 0.0..2.0f64, dh in 0.0..1.0f64) {
        let f = f736();
        let small = Hyperball::over(&f, h1).unwrap();
        let big = Hyperball::over(&f, h1 + dh).unwrap();
        prop_assert!(big.signed_distance(&x).unwrap() <= small.signed_distance(&x).unwrap() + 1e-12);
    }

    #[test]
    fn horoball_boundary_through_point(x in proper_point()) {
        if let Ok(s) = horo_param_through(&x) {
            if s > -1.0 && s < 1.0 {
                let d = Horoball::<4>::new(s).unwrap().signed_distance(&x).unwrap();
                prop_assert!(d.abs() < 1e-9);
            }
        }
    }

    #[test]
    fn heron_matches_two_sides_and_angle(a in 0.01..5.0f64, b in 0.01..5.0f64, g in 0.01..3.1f64) {
        let c = (a * a + b * b - 2.0 * a * b * g.cos()).sqrt();
        let area = heron([a, b, c]).unwrap();
        let want = 0.5 * a * b * g.sin();
        prop_assert!((area - want).abs() < 1e-12 * (1.0 + want) + 1e-10 * a * b);
    }
}

#[test]
fn heron_slack() {
    assert_eq!(heron([1.0, 2.0, 3.0]).unwrap(), 0.0);
    assert!(heron([1.0, 2.0, 3.0 + 1e-14]).unwrap() < 1e-6);
    assert!(heron([1.0, 2.0, 3.1]).is_err());
}

#[test]
fn horoball_piece_shrinks_with_s() {
    let f = f736();
    let s0 = min_horo_param(&f).unwrap();
    let mut prev = f64::INFINITY;
    for i in 0..50 {
        let s = s0 + (0.999 - s0) * i as f64 / 49.0;
        let v = horoball_piece_volume(&f, s).unwrap();
        assert!(v < prev, "s = {s}");
        prev = v;
    }
}

#[test]
fn hyperball_piece_grows_with_h() {
    let mut prev = -1.0;
    for i in 0..50 {
        let h = 0.05 * i as f64;
        let v = hyperball_piece_volume(0.3, h, 3).unwrap();
        assert!(v > prev);
        prev = v;
    }
    assert_eq!(hyperball_piece_volume(0.3, 0.0, 3).unwrap(), 0.0);
    assert!(hyperball_piece_volume(0.3, 1.0, 4).is_err());
}

#[test]
fn tangent_pair_touches_on_the_axis() {
    // in [5,4,4] the maximal balls overlap, so tangent pairs exist
    let f = realize(&build_scheme(5.0, 4.0, 4.0).unwrap()).unwrap();
    let h_lo = min_horo_param(&f).unwrap().atanh();
    for i in 0..=10 {
        let h = h_lo + (f.max_hyperball_height() - h_lo) * i as f64 / 10.0;
        let s = h.tanh();
        let touch = p3([1.0, 0.0, 0.0, s]);
        let horo = Horoball::<4>::new(s).unwrap().signed_distance(&touch).unwrap();
        let hyper = Hyperball::over(&f, h).unwrap().signed_distance(&touch).unwrap();
        assert!(horo.abs() < 1e-12 && hyper.abs() < 1e-12);
        let gap = analytic_clearances(&f, s, h).unwrap()[2];
        assert!((-1e-12..=1e-8).contains(&gap), "{gap}");
        let rep = check_admissibility(&f, s, h).unwrap();
        assert!(rep.all_ok(), "{rep:?}");
        assert!(rep.sampled_gaps[2] >= -1e-9);
    }
}

#[test]
fn overlapping_pair_is_flagged() {
    let f = f736();
    let h = 1.0;
    let rep = check_admissibility(&f, (h - 0.05_f64).tanh(), h).unwrap();
    assert!(!rep.disjoint);
    assert!(rep.min_clearances[2] < 0.0 && rep.sampled_gaps[2] < 0.0);
    let rep = check_admissibility(&f, 0.9, f.max_hyperball_height() + 0.1).unwrap();
    assert!(!rep.hyperball_ok);
    let rep = check_admissibility(&f, 0.5, 0.1).unwrap();
    assert!(!rep.horoball_ok);
    assert!(rep.min_clearances[0] < 0.0 && rep.sampled_gaps[0] < 0.0);
    // the maximal pair of [7,3,6] is already disjoint
    let rep = check_admissibility(&f, min_horo_param(&f).unwrap(), f.max_hyperball_height()).unwrap();
    assert!(rep.all_ok(), "{rep:?}");
}

#[test]
fn edge_intersection_lies_on_horosphere() {
    let f = f736();
    let a0 = &f.a()[0];
    for s in [0.85, 0.9, 0.99] {
        for b in [&f.p()[0], &f.a()[1], &f.a()[2], &f.p()[1]] {
            let q = edge_horosphere_intersection(a0, b, s).unwrap();
            let r = Horoball::<4>::new(s).unwrap().signed_distance(&q).unwrap();
            assert!(r.abs() < 1e-10);
        }
    }
    assert!(edge_horosphere_intersection(&f.p()[0], &f.a()[1], 0.9).is_err());
}

#[test]
fn arcs_exceed_chords() {
    for c in [0.0, 1e-6, 0.5, 2.0] {
        let l = horospheric_arc(c).unwrap();
        assert!(l >= c);
    }
    let d = distance(&p3([1.0, 0.0, 0.0, 0.0]), &p3([1.0, 0.5, 0.0, 0.0])).unwrap();
    assert!((horospheric_arc(d).unwrap() - 2.0 * (d / 2.0).sinh()).abs() < 1e-15);
}

#[test]
fn pieces_match_monte_carlo() {
    let f = f736();
    let n = 400_000;
    let s = min_horo_param(&f).unwrap();
    let horo = estimate_volume(&f, Region::Horoball(s), n, 11).unwrap();
    assert!(horo.z_score(horoball_piece_volume(&f, s).unwrap()).abs() < 4.0, "{horo:?}");
    let h = f.max_hyperball_height();
    let hyper = estimate_volume(&f, Region::Hyperball(h), n, 12).unwrap();
    let exact = hyperball_piece_volume(f.base_area(), h, 3).unwrap();
    assert!(hyper.z_score(exact).abs() < 4.0, "{hyper:?} vs {exact}");
    let dom = estimate_volume(&f, Region::Domain, n, 13).unwrap();
    assert!(dom.z_score(f.volume()).abs() < 4.0);
}
