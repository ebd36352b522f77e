use hyphor::optimize::{find_p_opt, find_p_opt_with, maximize, Maximizer1D, POPT_HI, POPT_LO};
use hyphor::packing3d::{optimize_family_36, optimize_family_44};
use hyphor::Error;
use proptest::prelude::*;

fn bump(c: f64) -> impl Fn(f64) -> hyphor::Result<f64> {
    move |x: f64| Ok(-(x - c).powi(2) + 0.1 * (x - c).powi(3))
}

proptest! {
    #[test]
    fn affine_invariance(c in -0.5..0.5f64, k in 0.1..10.0f64, b in -5.0..5.0f64, shift in -3.0..3.0f64) {
        let m = Maximizer1D::new(-1.0, 1.0, 200, 1e-9).unwrap();
        let (x0, _) = maximize(bump(c), &m).unwrap();
        let (x1, _) = maximize(|x| Ok(k * bump(c)(x)? + b), &m).unwrap();
        prop_assert!((x0 - x1).abs() < 1e-7);
        let ms = Maximizer1D::new(-1.0 + shift, 1.0 + shift, 200, 1e-9).unwrap();
        let (x2, _) = maximize(|x| bump(c)(x - shift), &ms).unwrap();
        prop_assert!((x0 - (x2 - shift)).abs() < 1e-7);
        prop_assert!((x0 - c).abs() < 1e-6);
    }
}

#[test]
fn monotone_function_peaks_at_end() {
    let m = Maximizer1D::new(0.0, 2.0, 100, 1e-10).unwrap();
    assert_eq!(maximize(Ok, &m).unwrap().0, 2.0);
    assert_eq!(maximize(|x| Ok(-x), &m).unwrap().0, 0.0);
    // ties go to the smaller x
    assert_eq!(maximize(|_| Ok(1.0), &m).unwrap().0, 0.0);
}

#[test]
fn bad_configurations() {
    assert!(Maximizer1D::new(1.0, 0.0, 200, 1e-6).is_err());
    assert!(Maximizer1D::new(0.0, 1.0, 99, 1e-6).is_err());
    assert!(Maximizer1D::new(0.0, 1.0, 200, 0.0).is_err());
    assert!(Maximizer1D::new(0.0, f64::INFINITY, 200, 1e-6).is_err());
    let m = Maximizer1D::new(0.0, 1.0, 200, 1e-6).unwrap();
    assert!(m.with_phase(1.0).is_err());
}

#[test]
fn evaluation_errors_carry_x() {
    let m = Maximizer1D::new(0.0, 1.0, 200, 1e-6).unwrap();
    let err = maximize(|x| if x > 0.5 { Err(Error::Degenerate) } else { Ok(x) }, &m).unwrap_err();
    match err {
        Error::Evaluation { x, source } => {
            assert!(x > 0.5);
            assert!(matches!(*source, Error::Degenerate));
        }
        other => panic!("unexpected {other:?}"),
    }
    let err = maximize(|_| Ok(f64::NAN), &m).unwrap_err();
    assert!(matches!(err, Error::Evaluation { .. }));
}

#[test]
fn real_parameter_optimum() {
    let r = find_p_opt().unwrap();
    assert!(r.p_interval[0] >= 6.05 - 1e-12 && r.p_interval[1] <= 6.06 + 1e-12, "{r:?}");
    assert!(r.p_interval[0] <= r.p_star && r.p_star <= r.p_interval[1]);
    assert!(r.delta_max > 0.85397, "{r:?}");
    assert!(optimize_family_36(6.5).unwrap().delta < r.delta_max);
    assert!(optimize_family_36(7.0).unwrap().delta < r.delta_max);
}

#[test]
fn optimum_independent_of_grid_phase() {
    let base = find_p_opt().unwrap();
    for phase in [0.25, 0.5, 0.83] {
        let m = Maximizer1D::new(POPT_LO, POPT_HI, 1000, 1e-6)
            .unwrap()
            .with_phase(phase)
            .unwrap();
        let r = find_p_opt_with(m).unwrap();
        assert_eq!(r.p_interval, base.p_interval, "phase {phase}");
        assert!((r.p_star - base.p_star).abs() < 1e-4);
        assert!((r.delta_max - base.delta_max).abs() < 1e-10);
    }
}

#[test]
fn family_44_p5_scan_at_endpoint() {
    let d = optimize_family_44(5.0).unwrap();
    let scan = d.scan.unwrap();
    assert!(scan.at_right_endpoint());
    assert!((scan.zeta_max - 0.33419).abs() < 5e-4);
}
