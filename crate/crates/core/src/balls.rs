//! Horoballs centered at the ideal vertex `A₀ = (1,0,…,0,1)` and hyperballs
//! over the truncating plane, clipped to a fundamental domain.
//!
//! A horosphere with parameter `s` crosses the `xⁿ` axis at `(1,0,…,0,s)`.
//! In cartesian coordinates `hᵢ = xⁱ/x⁰` it reads
//!
//! ```text
//! 2ρ²/(1-s) + 4(hₙ - (s+1)/2)²/(1-s)² = 1,   ρ² = h₁² + … + hₙ₋₁².
//! ```

use serde::Serialize;

use crate::lorentz::{
    bilinear_form, classify, distance, from_cusp_chart, point_plane_distance, to_cusp_chart,
    HyperplaneForm, LorentzVector, Point2, Point3, PointClass,
};
use crate::orthoscheme::FrustumOrthoscheme;
use crate::{Error, Result};

/// Tolerance on sampled gaps; tangency is admissible.
pub const GAP_TOL: f64 = 1e-9;

/// Tolerance on the analytic admissibility inequalities.
pub const ANALYTIC_TOL: f64 = 1e-12;

/// Face grid resolution per parameter direction.
pub const FACE_GRID: usize = 100;

/// Approximate number of sample points on each bounding surface patch.
pub const SURFACE_SAMPLES: usize = 10_000;

/// Horoball centered at `(1,0,…,0,1)`.
#[derive(Clone, Copy, Debug)]
pub struct Horoball<const N: usize> {
    s: f64,
}

impl<const N: usize> Horoball<N> {
    pub fn new(s: f64) -> Result<Self> {
        if !(s > -1.0 && s < 1.0) {
            return Err(Error::domain("s", s, "(-1, 1)"));
        }
        Ok(Self { s })
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn center(&self) -> LorentzVector<N> {
        LorentzVector::pole()
    }

    /// Signed distance from a proper point to the horosphere, negative
    /// inside the horoball.
    pub fn signed_distance(&self, x: &LorentzVector<N>) -> Result<f64> {
        let u = x.unit_timelike()?;
        let e = LorentzVector::<N>::pole();
        let c = ((1.0 - self.s) / (1.0 + self.s)).sqrt();
        Ok((-bilinear_form(&u, &e) / c).ln())
    }

    /// Left-hand side minus right-hand side of the horosphere equation.
    pub fn residual(&self, x: &LorentzVector<N>) -> Result<f64> {
        let h = x
            .cartesian()
            .ok_or_else(|| Error::NotProper(x.coords().to_vec()))?;
        let s = self.s;
        let (rho2, hn) = split_last(&h);
        Ok(2.0 * rho2 / (1.0 - s) + 4.0 * (hn - (s + 1.0) / 2.0).powi(2) / (1.0 - s).powi(2) - 1.0)
    }
}

/// Half-hyperball of height `h` on the side of `base` where the form is
/// positive.
#[derive(Clone, Copy, Debug)]
pub struct Hyperball<const N: usize> {
    base: HyperplaneForm<N>,
    h: f64,
}

impl<const N: usize> Hyperball<N> {
    pub fn new(base: HyperplaneForm<N>, h: f64) -> Result<Self> {
        if !(h >= 0.0) || !h.is_finite() {
            return Err(Error::domain("h", h, "[0, inf)"));
        }
        base.unit_normal()?;
        Ok(Self { base, h })
    }

    pub fn base(&self) -> &HyperplaneForm<N> {
        &self.base
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    /// Signed distance to the equidistant surface, negative inside.
    pub fn signed_distance(&self, x: &LorentzVector<N>) -> Result<f64> {
        let d = point_plane_distance(x, &self.base)?;
        let side = self.base.eval(&x.affine().unwrap_or(*x));
        Ok(if side >= 0.0 { d - self.h } else { -d - self.h })
    }
}

impl Hyperball<4> {
    /// Hyperball of height `h` over the truncating plane of `f`, on the
    /// frustum's side.
    pub fn over(f: &FrustumOrthoscheme, h: f64) -> Result<Self> {
        Self::new(f.faces().truncation.negated(), h)
    }
}

fn split_last(h: &[f64]) -> (f64, f64) {
    let (last, rest) = h.split_last().expect("n >= 1");
    (rest.iter().map(|v| v * v).sum(), *last)
}

/// The `s` of the horosphere centered at `(1,0,…,0,1)` through `point`.
pub fn horo_param_through<const N: usize>(point: &LorentzVector<N>) -> Result<f64> {
    if classify(point) != PointClass::Proper {
        return Err(Error::NotProper(point.coords().to_vec()));
    }
    let h = point.cartesian().expect("proper points have x0 != 0");
    let (rho2, hn) = split_last(&h);
    let den = 4.0 - 2.0 * rho2 - 4.0 * hn;
    if den.abs() < 1e-15 {
        return Err(Error::domain("4 - 2ρ² - 4hₙ", den, "nonzero"));
    }
    Ok((1.0 - 2.0 * rho2 - (2.0 * hn - 1.0).powi(2)) / den)
}

/// Parametric slack at the far end of a segment in
/// [`edge_horosphere_intersection`].
const ENDPOINT_SLACK: f64 = 1e-9;

/// Point where the horosphere with parameter `s` meets the segment from the
/// center `a` (must be `(1,0,…,0,1)`) to `b`.
pub fn edge_horosphere_intersection<const N: usize>(
    a: &LorentzVector<N>,
    b: &LorentzVector<N>,
    s: f64,
) -> Result<LorentzVector<N>> {
    let center = LorentzVector::<N>::pole();
    if !a.same_point(&center, 1e-14) {
        return Err(Error::Invalid(
            "segment must start at the horoball center (1,0,...,0,1)".into(),
        ));
    }
    Horoball::<N>::new(s)?;
    let bb = b
        .affine()
        .ok_or_else(|| Error::Invalid("segment endpoint at infinity of the chart".into()))?;
    let mut d = [0.0; N];
    for (i, di) in d.iter_mut().enumerate() {
        *di = bb.coords()[i] - center.coords()[i];
    }
    let dv = LorentzVector::new(d).map_err(|_| Error::NoCrossing(s))?;
    // Along A₀ + t·d the horosphere equation has the root t = 0 at the
    // center; the other root is linear in the data.
    let dn = d[N - 1];
    let den = (s - 1.0) * bilinear_form(&dv, &dv) - (1.0 + s) * dn * dn;
    let t = -2.0 * (s - 1.0) * bilinear_form(&center, &dv) / den;
    // t = 1 exactly when the horosphere passes through b; near-ideal b
    // makes the root ill-conditioned, hence the slack
    if !(t > 0.0 && t <= 1.0 + ENDPOINT_SLACK) {
        return Err(Error::NoCrossing(s));
    }
    if t >= 1.0 {
        return Ok(bb);
    }
    center.combine(1.0, &dv, t)
}

/// Length of the horospheric arc spanned by a chord of hyperbolic length
/// `chord`.
pub fn horospheric_arc(chord: f64) -> Result<f64> {
    if !(chord >= 0.0) {
        return Err(Error::domain("chord", chord, "[0, inf)"));
    }
    Ok(2.0 * (chord / 2.0).sinh())
}

/// Area of a Euclidean triangle from its sides (Kahan's stable Heron).
pub fn heron(sides: [f64; 3]) -> Result<f64> {
    let mut v = sides;
    v.sort_by(|a, b| b.total_cmp(a));
    let [a, b, c] = v;
    let slack = c - (a - b);
    if !(slack > -1e-12 * a.max(1.0)) {
        return Err(Error::TriangleInequality(sides));
    }
    let prod = (a + (b + c)) * slack.max(0.0) * (c + (a - b)) * (a + (b - c));
    Ok(0.25 * prod.sqrt())
}

/// The three points where the horosphere `s` meets the edges `A₀P₀`,
/// `A₀A₁`, `A₀A₂` of `f`.
pub fn horospheric_triangle(f: &FrustumOrthoscheme, s: f64) -> Result<[Point3; 3]> {
    let a0 = &f.a()[0];
    Ok([
        edge_horosphere_intersection(a0, &f.p()[0], s)?,
        edge_horosphere_intersection(a0, &f.a()[1], s)?,
        edge_horosphere_intersection(a0, &f.a()[2], s)?,
    ])
}

/// Volume of the horoball piece `F ∩ 𝔥(s)`: intrinsic Euclidean area of
/// the horospheric triangle divided by 2.
pub fn horoball_piece_volume(f: &FrustumOrthoscheme, s: f64) -> Result<f64> {
    let t = horospheric_triangle(f, s)?;
    let arc = |i: usize, j: usize| horospheric_arc(distance(&t[i], &t[j])?);
    let area = heron([arc(0, 1)?, arc(1, 2)?, arc(0, 2)?])?;
    Ok(area / 2.0)
}

/// Length of the horocyclic arc cut from the horocycle `s` by the edges
/// from the center `(1,0,1)` to `b` and to `c`; the 2D horoball piece area.
pub fn horocyclic_piece_area(b: &Point2, c: &Point2, s: f64) -> Result<f64> {
    let a0 = Point2::pole();
    let qb = edge_horosphere_intersection(&a0, b, s)?;
    let qc = edge_horosphere_intersection(&a0, c, s)?;
    horospheric_arc(distance(&qb, &qc)?)
}

/// Volume of a hyperball piece over a base of measure `base` (area for
/// `n = 3`, length for `n = 2`) with height `h`.
pub fn hyperball_piece_volume(base: f64, h: f64, n: usize) -> Result<f64> {
    if !(base >= 0.0) {
        return Err(Error::domain("base", base, "[0, inf)"));
    }
    if !(h >= 0.0) {
        return Err(Error::domain("h", h, "[0, inf)"));
    }
    match n {
        2 => Ok(base * h.sinh()),
        3 => Ok(0.25 * base * ((2.0 * h).sinh() + 2.0 * h)),
        _ => Err(Error::Invalid(format!("dimension {n} not in {{2, 3}}"))),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AdmissibilityReport {
    pub horoball_ok: bool,
    pub hyperball_ok: bool,
    pub disjoint: bool,
    /// Distance of the horoball from the faces `P₀P₁P₂` and `A₁A₂P₂P₁`,
    /// slack `d(P₂A₂) - h` of the hyperball, and the axis gap
    /// `artanh(s) - h` between the two balls. Negative means violated.
    pub min_clearances: [f64; 3],
    /// The same three quantities as minima over the face grids and surface
    /// samples.
    pub sampled_gaps: [f64; 3],
}

impl AdmissibilityReport {
    pub fn all_ok(&self) -> bool {
        self.horoball_ok && self.hyperball_ok && self.disjoint
    }
}

/// Exact clearances `[horoball, hyperball, disjointness]` from the
/// geometry of `f`.
///
/// The horoball through `A₁` touches `A₁A₂P₂P₁` at `A₁`, the one with
/// `s = 0` touches `π` at `P₀`; the hyperball through `A₂` touches
/// `A₀A₁A₂` at `A₂`; both balls are orthogonal to the axis `A₀P₀`.
pub fn analytic_clearances(f: &FrustumOrthoscheme, s: f64, h: f64) -> Result<[f64; 3]> {
    Horoball::<4>::new(s)?;
    if !(h >= 0.0) {
        return Err(Error::domain("h", h, "[0, inf)"));
    }
    let z_max = horo_param_through(&f.a()[1])?;
    Ok([
        s.atanh() - z_max.max(0.0).atanh(),
        f.max_hyperball_height() - h,
        s.atanh() - h,
    ])
}

pub fn check_admissibility(f: &FrustumOrthoscheme, s: f64, h: f64) -> Result<AdmissibilityReport> {
    let clear = analytic_clearances(f, s, h)?;
    let horo = Horoball::<4>::new(s)?;
    let hyper = Hyperball::over(f, h)?;

    let [a0, a1, a2] = f.a();
    let [p0, p1, p2] = f.p();

    // Horoball vs. the faces it must avoid.
    let mut horo_gap = f64::INFINITY;
    for pt in triangle_grid(p0, p1, p2, FACE_GRID)
        .chain(quad_grid(a1, a2, p2, p1, FACE_GRID))
    {
        horo_gap = horo_gap.min(horo.signed_distance(&pt)?);
    }

    // Hyperball vs. the top face. Skip the ideal corner A₀.
    let mut hyper_gap = f64::INFINITY;
    for pt in triangle_grid(a0, a1, a2, FACE_GRID) {
        if classify(&pt) != PointClass::Proper {
            continue;
        }
        hyper_gap = hyper_gap.min(hyper.signed_distance(&pt)?);
    }

    // Each bounding surface patch against the other body.
    let mut disjoint_gap = f64::INFINITY;
    for pt in horospheric_samples(f, s)? {
        disjoint_gap = disjoint_gap.min(hyper.signed_distance(&pt)?);
    }
    if h > 0.0 {
        for pt in hyperspheric_samples(f, h)? {
            disjoint_gap = disjoint_gap.min(horo.signed_distance(&pt)?);
        }
    }

    Ok(AdmissibilityReport {
        horoball_ok: clear[0] >= -ANALYTIC_TOL && horo_gap >= -GAP_TOL,
        hyperball_ok: clear[1] >= -ANALYTIC_TOL && hyper_gap >= -GAP_TOL,
        disjoint: clear[2] >= -ANALYTIC_TOL && disjoint_gap >= -GAP_TOL,
        min_clearances: clear,
        sampled_gaps: [horo_gap, hyper_gap, disjoint_gap],
    })
}

fn lerp(a: &[f64; 4], b: &[f64; 4], t: f64) -> [f64; 4] {
    std::array::from_fn(|i| a[i] + t * (b[i] - a[i]))
}

fn affine4(p: &Point3) -> [f64; 4] {
    *p.affine().expect("finite vertex").coords()
}

/// `(n+1)²` points covering the triangle `abc` (a collapsed square grid).
fn triangle_grid<'a>(
    a: &'a Point3,
    b: &'a Point3,
    c: &'a Point3,
    n: usize,
) -> impl Iterator<Item = Point3> + 'a {
    let (a, b, c) = (affine4(a), affine4(b), affine4(c));
    (0..=n).flat_map(move |i| {
        (0..=n).map(move |j| {
            let u = i as f64 / n as f64;
            let v = j as f64 / n as f64;
            let e = lerp(&a, &b, u);
            let g = lerp(&a, &c, u);
            Point3::new(lerp(&e, &g, v)).expect("nonzero")
        })
    })
}

/// `(n+1)²` points on the planar quadrilateral `abcd` (bilinear).
fn quad_grid<'a>(
    a: &'a Point3,
    b: &'a Point3,
    c: &'a Point3,
    d: &'a Point3,
    n: usize,
) -> impl Iterator<Item = Point3> + 'a {
    let (a, b, c, d) = (affine4(a), affine4(b), affine4(c), affine4(d));
    (0..=n).flat_map(move |i| {
        (0..=n).map(move |j| {
            let u = i as f64 / n as f64;
            let v = j as f64 / n as f64;
            let e = lerp(&a, &b, u);
            let g = lerp(&d, &c, u);
            Point3::new(lerp(&e, &g, v)).expect("nonzero")
        })
    })
}

/// Barycentric lattice weights `(i, j, k)/m` with about `SURFACE_SAMPLES`
/// entries.
fn barycentric_lattice() -> impl Iterator<Item = [f64; 3]> {
    let m = ((2.0 * SURFACE_SAMPLES as f64).sqrt()) as usize;
    (0..=m).flat_map(move |i| {
        (0..=m - i).map(move |j| {
            let k = m - i - j;
            [i as f64 / m as f64, j as f64 / m as f64, k as f64 / m as f64]
        })
    })
}

/// Points of the horospheric patch `F ∩ ∂𝔥(s)`. In the cusp chart the
/// horosphere is a plane `z = const` and the three side faces through `A₀`
/// are vertical over the triangle spanned by `P₀`, `A₁`, `A₂`; lattice
/// points of that triangle outside the two remaining faces are dropped.
pub fn horospheric_samples(f: &FrustumOrthoscheme, s: f64) -> Result<Vec<Point3>> {
    Horoball::<4>::new(s)?;
    let c = [
        to_cusp_chart(&f.p()[0])?,
        to_cusp_chart(&f.a()[1])?,
        to_cusp_chart(&f.a()[2])?,
    ];
    let z = ((1.0 + s) / (1.0 - s)).sqrt();
    let faces = f.faces();
    let mut out = Vec::new();
    for w in barycentric_lattice() {
        let u1 = w[0] * c[0][0] + w[1] * c[1][0] + w[2] * c[2][0];
        let u2 = w[0] * c[0][1] + w[1] * c[1][1] + w[2] * c[2][1];
        let x = from_cusp_chart([u1, u2, z])?;
        let inside = [faces.truncation, faces.h0].iter().all(|face| {
            let n = face.coeffs().iter().fold(0.0_f64, |m, v| m.max(v.abs()));
            face.eval(&x.affine().unwrap_or(x)) / n <= 1e-12
        });
        if inside {
            out.push(x);
        }
    }
    Ok(out)
}

/// Points of the equidistant surface at height `h` over the base triangle
/// `P₀P₁P₂`: `cosh(h)·B + sinh(h)·e₃` for unit `B` in the triangle.
pub fn hyperspheric_samples(f: &FrustumOrthoscheme, h: f64) -> Result<Vec<Point3>> {
    let [p0, p1, p2] = f.p().map(|p| affine4(&p));
    let (ch, sh) = (h.cosh(), h.sinh());
    barycentric_lattice()
        .map(|w| {
            let b: [f64; 4] = std::array::from_fn(|i| w[0] * p0[i] + w[1] * p1[i] + w[2] * p2[i]);
            let b = Point3::new(b)?.unit_timelike()?;
            let c = b.coords();
            Point3::new([ch * c[0], ch * c[1], ch * c[2], sh])
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orthoscheme::{build_scheme, realize};

    fn f736() -> FrustumOrthoscheme {
        realize(&build_scheme(7.0, 3.0, 6.0).unwrap()).unwrap()
    }

    #[test]
    fn axis_points() {
        for g in [0.0, 0.4, -0.7] {
            let s = horo_param_through(&Point3::new([1.0, 0.0, 0.0, g]).unwrap()).unwrap();
            assert!((s - g).abs() < 1e-15);
        }
    }

    #[test]
    fn horo_param_rejects_outside() {
        assert!(horo_param_through(&Point3::new([1.0, 1.0, 0.0, 0.5]).unwrap()).is_err());
        assert!(horo_param_through(&Point3::pole()).is_err());
    }

    #[test]
    fn a1_on_its_horosphere() {
        let f = f736();
        let s = horo_param_through(&f.a()[1]).unwrap();
        let r = Horoball::<4>::new(s).unwrap().residual(&f.a()[1]).unwrap();
        assert!(r.abs() < 1e-12);
    }

    #[test]
    fn axis_crossing() {
        let a0 = Point3::pole();
        let q = edge_horosphere_intersection(&a0, &Point3::origin(), 0.3).unwrap();
        assert!(q.same_point(&Point3::new([1.0, 0.0, 0.0, 0.3]).unwrap(), 1e-15));
    }

    #[test]
    fn tangent_edge_returns_endpoint() {
        let f = f736();
        let s = horo_param_through(&f.a()[1]).unwrap();
        let q = edge_horosphere_intersection(&f.a()[0], &f.a()[1], s).unwrap();
        assert!(q.same_point(&f.a()[1], 1e-12));
        let q2 = edge_horosphere_intersection(&f.a()[0], &f.a()[2], s).unwrap();
        let r = Horoball::<4>::new(s).unwrap().residual(&q2).unwrap();
        assert!(r.abs() < 1e-12);
    }

    #[test]
    fn no_crossing_when_ball_too_small_for_segment() {
        let f = f736();
        let s = horo_param_through(&f.a()[1]).unwrap();
        let err = edge_horosphere_intersection(&f.a()[0], &f.a()[1], s - 0.05).unwrap_err();
        assert_eq!(err, Error::NoCrossing(s - 0.05));
    }

    #[test]
    fn arcs() {
        assert_eq!(horospheric_arc(0.0).unwrap(), 0.0);
        assert!((horospheric_arc(2.0 * 1f64.asinh()).unwrap() - 2.0).abs() < 1e-15);
        assert!(horospheric_arc(-1.0).is_err());
    }

    #[test]
    fn arc_matches_upper_half_space() {
        // In the cusp chart a horosphere z = c is flat with metric |du|/c.
        let f = f736();
        let s = horo_param_through(&f.a()[1]).unwrap();
        let t = horospheric_triangle(&f, s).unwrap();
        let a = to_cusp_chart(&t[0]).unwrap();
        let b = to_cusp_chart(&t[2]).unwrap();
        let euclid = ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)).sqrt() / a[2];
        let arc = horospheric_arc(distance(&t[0], &t[2]).unwrap()).unwrap();
        assert!((arc - euclid).abs() < 1e-10);
    }

    #[test]
    fn heron_checks() {
        assert!((heron([3.0, 4.0, 5.0]).unwrap() - 6.0).abs() < 1e-14);
        assert!(matches!(heron([1.0, 1.0, 3.0]), Err(Error::TriangleInequality(_))));
    }

    #[test]
    fn hyperball_volumes() {
        assert_eq!(hyperball_piece_volume(1.0, 0.0, 3).unwrap(), 0.0);
        assert_eq!(hyperball_piece_volume(1.0, 0.0, 2).unwrap(), 0.0);
        let dh = 1e-7;
        let slope = hyperball_piece_volume(4.0, dh, 3).unwrap() / dh;
        assert!((slope - 4.0).abs() < 1e-6);
        assert!(hyperball_piece_volume(-1.0, 1.0, 3).is_err());
        assert!(hyperball_piece_volume(1.0, -1.0, 3).is_err());
        assert!(hyperball_piece_volume(1.0, 1.0, 4).is_err());
    }

    #[test]
    fn horoball_shrinks_to_nothing() {
        let f = f736();
        let v4 = horoball_piece_volume(&f, 1.0 - 1e-4).unwrap();
        let v8 = horoball_piece_volume(&f, 1.0 - 1e-8).unwrap();
        assert!(v8 < 1e-3 * v4);
    }

    #[test]
    fn maximal_736_pair_is_admissible() {
        let f = f736();
        let s = horo_param_through(&f.a()[1]).unwrap();
        let h = f.max_hyperball_height();
        let rep = check_admissibility(&f, s, h).unwrap();
        assert!(rep.all_ok(), "{rep:?}");
        assert!(rep.min_clearances[0].abs() < 1e-12);
        assert!(rep.min_clearances[1].abs() < 1e-12);
    }

    #[test]
    fn maximal_544_pair_overlaps() {
        let f = realize(&build_scheme(5.0, 4.0, 4.0).unwrap()).unwrap();
        let s = horo_param_through(&f.a()[1]).unwrap();
        let h = f.max_hyperball_height();
        let rep = check_admissibility(&f, s, h).unwrap();
        assert!(rep.horoball_ok && rep.hyperball_ok);
        assert!(!rep.disjoint);
        assert!(rep.sampled_gaps[2] < 0.0);
    }

    #[test]
    fn tiny_balls() {
        let f = f736();
        let rep = check_admissibility(&f, 1.0 - 1e-6, 0.0).unwrap();
        assert!(rep.all_ok());
        assert!(rep.min_clearances.iter().all(|&c| c > 0.0));
    }

    #[test]
    fn hyperball_signed_distance() {
        let f = f736();
        let hb = Hyperball::over(&f, 0.2).unwrap();
        let x = Point3::new([1.0, 0.0, 0.0, 0.2f64.tanh()]).unwrap();
        assert!(hb.signed_distance(&x).unwrap().abs() < 1e-14);
    }
}
