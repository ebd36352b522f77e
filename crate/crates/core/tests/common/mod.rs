//! Independent oracles shared by the integration tests. Nothing here calls
//! the routine it is used to check.

#![allow(dead_code)]

use std::f64::consts::PI;

use hyphor::lorentz::{Point2, Point3};

/// `-∫₀ˣ ln|2 sin t| dt` by tanh-sinh quadrature, for `0 ≤ x ≤ π`.
pub fn lobachevsky_quadrature(x: f64) -> f64 {
    assert!((0.0..=PI).contains(&x));
    if x == 0.0 {
        return 0.0;
    }
    let f = |t: f64| -(2.0 * t.sin()).abs().ln();
    quadrature::double_exponential::integrate(f, 0.0, x, 1e-14).integral
}

pub fn form(x: &[f64], y: &[f64]) -> f64 {
    -x[0] * y[0] + x[1..].iter().zip(&y[1..]).map(|(a, b)| a * b).sum::<f64>()
}

/// `arccosh` distance between proper points, straight from the definition.
pub fn acosh_distance(p: &[f64], q: &[f64]) -> f64 {
    let c = -form(p, q) / (form(p, p) * form(q, q)).sqrt();
    c.abs().max(1.0).acosh()
}

/// Triangle angles from side lengths by the hyperbolic law of cosines.
pub fn law_of_cosines_angles(a: f64, b: f64, c: f64) -> [f64; 3] {
    let ang = |opp: f64, s1: f64, s2: f64| {
        ((s1.cosh() * s2.cosh() - opp.cosh()) / (s1.sinh() * s2.sinh())).acos()
    };
    // angle opposite a, b, c respectively
    [ang(a, b, c), ang(b, a, c), ang(c, a, b)]
}

/// Angle at the proper point `v` between the geodesics towards `w1` and
/// `w2` (either may be ideal).
pub fn angle_at(v: &[f64], w1: &[f64], w2: &[f64]) -> f64 {
    let vv = form(v, v);
    let t = |w: &[f64]| -> Vec<f64> {
        let k = form(w, v) / vv;
        w.iter().zip(v).map(|(wi, vi)| wi - k * vi).collect()
    };
    let (t1, t2) = (t(w1), t(w2));
    (form(&t1, &t2) / (form(&t1, &t1) * form(&t2, &t2)).sqrt())
        .clamp(-1.0, 1.0)
        .acos()
}

/// Density of the plane packing with parameters `(a, y)` assembled from
/// first principles: the horocycle through `T = (1,0,y)` centered at
/// `A₀ = (1,0,1)` is cut by the line `A₀P₀`; the arc between `T` and the
/// cut point comes from the chord via `L = 2 sinh(d/2)`; the hypercycle of
/// height `artanh(y)` over the segment `A₁P₁` of length `artanh(a)` has
/// area `artanh(a)·sinh(artanh(y))`; the quadrilateral has area `π/2`.
pub fn plane_density_oracle(a: f64, y: f64) -> f64 {
    let s = y;
    // horocycle: 2u²/(1-s) + 4(v-(1+s)/2)²/(1-s)² = 1 on the line v = 1 - a·u
    let k = 1.0 - (1.0 + s) / 2.0;
    let qa = 2.0 / (1.0 - s) + 4.0 * a * a / (1.0 - s).powi(2);
    let qb = -8.0 * a * k / (1.0 - s).powi(2);
    let qc = 4.0 * k * k / (1.0 - s).powi(2) - 1.0;
    let disc = qb * qb - 4.0 * qa * qc;
    // the root u = 0 is A₀ itself
    let u = [(-qb + disc.sqrt()) / (2.0 * qa), (-qb - disc.sqrt()) / (2.0 * qa)]
        .into_iter()
        .fold(f64::NEG_INFINITY, f64::max);
    let q = [1.0, u, 1.0 - a * u];
    let t = [1.0, 0.0, s];
    let arc = 2.0 * (acosh_distance(&t, &q) / 2.0).sinh();
    let hyper = a.atanh() * (y.atanh()).sinh();
    (arc + hyper) / (PI / 2.0)
}

pub fn p3(c: [f64; 4]) -> Point3 {
    Point3::new(c).unwrap()
}

pub fn p2(c: [f64; 3]) -> Point2 {
    Point2::new(c).unwrap()
}

/// The nine rows of the three printed density tables:
/// `(q, r, p, vol_F, vol_pieces, delta)`.
pub const TABLE_ROWS: [(f64, f64, f64, f64, f64, f64); 9] = [
    (4.0, 4.0, 5.0, 0.34084197, 0.27709010, 0.81295769),
    (4.0, 4.0, 6.0, 0.38165233, 0.30003810, 0.78615556),
    (4.0, 4.0, 7.0, 0.40369221, 0.30777518, 0.76240058),
    (6.0, 3.0, 4.0, 0.31716925, 0.25756985, 0.81208961),
    (6.0, 3.0, 5.0, 0.35991902, 0.27187731, 0.75538469),
    (6.0, 3.0, 6.0, 0.38060310, 0.27009741, 0.70965634),
    (3.0, 6.0, 7.0, 0.31781165, 0.26463185, 0.83266882),
    (3.0, 6.0, 8.0, 0.34695830, 0.27901923, 0.80418664),
    (3.0, 6.0, 9.0, 0.36482363, 0.28351212, 0.77712105),
];
