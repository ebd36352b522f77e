//! Coxeter–Schläfli data of `[p,q,r]` orthoschemes, realization of the simple
//! frustum orthoscheme `A₀A₁A₂P₀P₁P₂` in model coordinates, and
//! fundamental-domain volumes.
//!
//! The realized frustum is placed as
//!
//! ```text
//! A₀ = (1,0,0,1)   P₀ = (1,0,0,0)
//! A₁ = (1,x,0,z₁)  P₁ = (1,x,0,0)
//! A₂ = (1,x,y,z₂)  P₂ = (1,x,y,0)
//! ```
//!
//! so the truncating plane `π = pol(A₃)` is `x³ = 0` and the outer vertex
//! `A₃` is the point at infinity `(0,0,0,1)` of the `x³` axis.

use std::f64::consts::{FRAC_PI_2, PI};

use nalgebra::{Matrix4, SymmetricEigen};

use crate::lorentz::{
    bilinear_form, classify, distance, polar, raw_form, HyperplaneForm, LorentzVector, Point3,
    PointClass,
};
use crate::special::lobachevsky;
use crate::{Error, Result};

/// Tolerance for recovering the dihedral angles from the realized faces.
pub const ANGLE_TOL: f64 = 1e-10;

/// Tolerance for incidence of the truncation points with `pol(A₃)`.
pub const INCIDENCE_TOL: f64 = 1e-10;

/// The three infinite series `[p,q,r]` of simple frustum orthoschemes with
/// an ideal principal vertex in hyperbolic 3-space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `(q, r) = (4, 4)`, tilings for integer `p ≥ 5`.
    F44,
    /// `(q, r) = (6, 3)`, tilings for integer `p ≥ 4`.
    F63,
    /// `(q, r) = (3, 6)`, tilings for integer `p ≥ 7`.
    F36,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::F44, Family::F63, Family::F36];

    pub fn qr(self) -> (f64, f64) {
        match self {
            Family::F44 => (4.0, 4.0),
            Family::F63 => (6.0, 3.0),
            Family::F36 => (3.0, 6.0),
        }
    }

    /// Smallest integer `p` giving a tiling of `H³`.
    pub fn min_tiling_p(self) -> u32 {
        match self {
            Family::F44 => 5,
            Family::F63 => 4,
            Family::F36 => 7,
        }
    }

    /// `p` must exceed this for `A₃` to be outer.
    pub fn p_lower_bound(self) -> f64 {
        match self {
            Family::F44 => 4.0,
            Family::F63 => 3.0,
            Family::F36 => 6.0,
        }
    }

    pub fn from_qr(q: f64, r: f64) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.qr() == (q, r))
    }

    /// True when `[p,q,r]` generates a tiling of hyperbolic space.
    pub fn is_tiling(self, p: f64) -> bool {
        p.fract() == 0.0 && p >= self.min_tiling_p() as f64
    }

    pub fn label(self) -> &'static str {
        match self {
            Family::F44 => "4,4",
            Family::F63 => "6,3",
            Family::F36 => "3,6",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace(' ', "").as_str() {
            "4,4" | "44" => Ok(Family::F44),
            "6,3" | "63" => Ok(Family::F63),
            "3,6" | "36" => Ok(Family::F36),
            other => Err(Error::Invalid(format!("unknown family '{other}'"))),
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.label())
    }
}

/// Coxeter–Schläfli matrix of a `[p,q,r]` orthoscheme and its inverse.
///
/// `hinv[(i, j)] = h_ij` is the Gram matrix of the principal vertices
/// `a₀,…,a₃` in the basis dual to the unit face normals, so `h_ii < 0` for a
/// proper vertex, `= 0` for an ideal one and `> 0` for an outer one.
#[derive(Clone, Debug)]
pub struct CoxeterScheme {
    pub p: f64,
    pub q: f64,
    pub r: f64,
    gram: Matrix4<f64>,
    hinv: Matrix4<f64>,
}

impl CoxeterScheme {
    pub fn gram(&self) -> &Matrix4<f64> {
        &self.gram
    }

    pub fn hinv(&self) -> &Matrix4<f64> {
        &self.hinv
    }

    pub fn h(&self, i: usize, j: usize) -> f64 {
        self.hinv[(i, j)]
    }

    pub fn family(&self) -> Option<Family> {
        Family::from_qr(self.q, self.r)
    }

    /// `(α₀₁, α₁₂, α₂₃) = (π/p, π/q, π/r)`.
    pub fn essential_angles(&self) -> [f64; 3] {
        [PI / self.p, PI / self.q, PI / self.r]
    }

    pub fn vertex_class(&self, k: usize) -> PointClass {
        let scale = self.hinv.amax();
        let h = self.h(k, k) / scale;
        if h < -1e-12 {
            PointClass::Proper
        } else if h > 1e-12 {
            PointClass::Outer
        } else {
            PointClass::Ideal
        }
    }
}

pub fn build_scheme(p: f64, q: f64, r: f64) -> Result<CoxeterScheme> {
    for (name, v) in [("p", p), ("q", q), ("r", r)] {
        if !v.is_finite() {
            return Err(Error::NonFinite(v));
        }
        if v < 2.0 {
            return Err(Error::domain(name, v, "[2, inf)"));
        }
    }
    let (cp, cq, cr) = ((PI / p).cos(), (PI / q).cos(), (PI / r).cos());
    #[rustfmt::skip]
    let gram = Matrix4::new(
        1.0, -cp, 0.0, 0.0,
        -cp, 1.0, -cq, 0.0,
        0.0, -cq, 1.0, -cr,
        0.0, 0.0, -cr, 1.0,
    );
    let eig = SymmetricEigen::new(gram);
    let negative = eig.eigenvalues.iter().filter(|&&l| l < -1e-12).count();
    let positive = eig.eigenvalues.iter().filter(|&&l| l > 1e-12).count();
    if negative != 1 || positive != 3 {
        return Err(Error::NotHyperbolic { p, q, r });
    }
    let hinv = gram
        .try_inverse()
        .ok_or(Error::NotHyperbolic { p, q, r })?;
    Ok(CoxeterScheme { p, q, r, gram, hinv })
}

/// A point given by its coefficients over the principal vertices `a₀,…,a₃`;
/// inner products come from `h_ij`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AbstractPoint(pub [f64; 4]);

impl AbstractPoint {
    pub fn vertex(k: usize) -> Self {
        let mut c = [0.0; 4];
        c[k] = 1.0;
        AbstractPoint(c)
    }

    pub fn inner(&self, other: &Self, scheme: &CoxeterScheme) -> f64 {
        let mut s = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                s += self.0[i] * scheme.h(i, j) * other.0[j];
            }
        }
        s
    }
}

/// `p_k ∝ a_k·h₃₃ - a₃·h_k3`, the intersection of the edge `A_kA₃` with
/// `pol(A₃)`.
pub fn truncation_point(scheme: &CoxeterScheme, k: usize) -> Result<AbstractPoint> {
    if k > 2 {
        return Err(Error::Invalid(format!("truncation index {k} not in 0..=2")));
    }
    let h33 = scheme.h(3, 3);
    if scheme.vertex_class(3) != PointClass::Outer {
        return Err(Error::NotOuter(h33));
    }
    let mut c = [0.0; 4];
    c[k] = h33;
    c[3] = -scheme.h(k, 3);
    Ok(AbstractPoint(c))
}

/// Length of the truncated edge `P_kA_k` from the Gram data:
/// `cosh(P_kA_k) = √((h_kk h₃₃ - h_k3²) / (h_kk h₃₃))`.
pub fn truncated_edge_length(scheme: &CoxeterScheme, k: usize) -> Result<f64> {
    let (hkk, h33, hk3) = (scheme.h(k, k), scheme.h(3, 3), scheme.h(k, 3));
    if h33 <= 0.0 {
        return Err(Error::NotOuter(h33));
    }
    if hkk >= 0.0 {
        return Err(Error::Realization(format!("vertex A{k} is not proper")));
    }
    let c2 = (hkk * h33 - hk3 * hk3) / (hkk * h33);
    if c2 < 1.0 {
        return Err(Error::ArccoshDomain(c2.sqrt()));
    }
    Ok(c2.sqrt().acosh())
}

/// The five face planes of the frustum, each oriented so the interior is
/// negative.
#[derive(Clone, Copy, Debug)]
pub struct Faces {
    /// `P₀P₁P₂`, the truncating plane `π = pol(A₃)`.
    pub truncation: HyperplaneForm<4>,
    /// `A₁A₂P₂P₁`, opposite `A₀` (`H⁰`).
    pub h0: HyperplaneForm<4>,
    /// `A₀A₂P₂P₀`, opposite `A₁` (`H¹`).
    pub h1: HyperplaneForm<4>,
    /// `A₀A₁P₁P₀`, opposite `A₂` (`H²`).
    pub h2: HyperplaneForm<4>,
    /// `A₀A₁A₂`, opposite `A₃` (`H³`).
    pub h3: HyperplaneForm<4>,
}

impl Faces {
    pub fn all(&self) -> [HyperplaneForm<4>; 5] {
        [self.truncation, self.h0, self.h1, self.h2, self.h3]
    }
}

/// Realized simple frustum orthoscheme `A₀A₁A₂P₀P₁P₂`.
#[derive(Clone, Debug)]
pub struct FrustumOrthoscheme {
    scheme: CoxeterScheme,
    pub x: f64,
    pub y: f64,
    pub z1: f64,
    pub z2: f64,
    a: [Point3; 3],
    p: [Point3; 3],
    faces: Faces,
    volume: f64,
}

impl FrustumOrthoscheme {
    pub fn scheme(&self) -> &CoxeterScheme {
        &self.scheme
    }

    /// `A₀, A₁, A₂`.
    pub fn a(&self) -> &[Point3; 3] {
        &self.a
    }

    /// `P₀, P₁, P₂`.
    pub fn p(&self) -> &[Point3; 3] {
        &self.p
    }

    pub fn faces(&self) -> &Faces {
        &self.faces
    }

    /// The outer principal vertex `A₃ = (0,0,0,1)`.
    pub fn a3(&self) -> Point3 {
        Point3::new([0.0, 0.0, 0.0, 1.0]).expect("nonzero")
    }

    /// Volume of the frustum, cached at construction.
    pub fn volume(&self) -> f64 {
        self.volume
    }

    /// Whether a point lies in the closed frustum, up to `tol` on the
    /// normalized face residuals.
    pub fn contains(&self, x: &Point3, tol: f64) -> bool {
        let Some(x) = x.affine() else { return false };
        self.faces.all().iter().all(|f| {
            let n = f.coeffs().iter().fold(0.0_f64, |m, c| m.max(c.abs()));
            f.eval(&x) / n <= tol
        })
    }

    /// Interior dihedral angles `(α₀₁, α₁₂, α₂₃)` recovered from the realized
    /// face planes.
    pub fn dihedral_angles(&self) -> Result<[f64; 3]> {
        let f = &self.faces;
        Ok([
            dihedral_angle(&f.h0, &f.h1)?,
            dihedral_angle(&f.h1, &f.h2)?,
            dihedral_angle(&f.h2, &f.h3)?,
        ])
    }

    /// Length of the truncated edge `P₂A₂`; the largest admissible hyperball
    /// height.
    pub fn max_hyperball_height(&self) -> f64 {
        distance(&self.p[2], &self.a[2]).expect("realized vertices are proper")
    }

    /// Area of the base triangle `P₀P₁P₂` in `π`.
    pub fn base_area(&self) -> f64 {
        triangle_area(&self.p[0], &self.p[1], &self.p[2]).expect("realized triangle")
    }

    /// Interior point used to orient faces.
    pub fn centroid(&self) -> Point3 {
        let mut c = [0.0; 4];
        for v in self.a.iter().chain(&self.p) {
            let v = v.affine().expect("finite vertex");
            for (ci, vi) in c.iter_mut().zip(v.coords()) {
                *ci += vi / 6.0;
            }
        }
        Point3::new(c).expect("nonzero")
    }
}

/// Interior dihedral angle between two outward-oriented face planes.
pub fn dihedral_angle(u: &HyperplaneForm<4>, v: &HyperplaneForm<4>) -> Result<f64> {
    let nu = u.unit_normal()?;
    let nv = v.unit_normal()?;
    Ok((-raw_form(&nu, &nv)).clamp(-1.0, 1.0).acos())
}

/// Realize the simple frustum orthoscheme of `scheme` in model coordinates.
///
/// The truncation points are placed by a Lorentz Gram–Schmidt step on the
/// Gram data `⟨p_i, p_j⟩ ∝ h_ij h₃₃ - h_i3 h_j3`; the heights `z₁, z₂` follow
/// from the truncated edge lengths
/// `cosh(P₁A₁) = (1-x²)/√((1-x²)(1-x²-z₁²))` and
/// `cosh(P₂A₂) = (1-x²-y²)/√((1-x²-y²)(1-x²-y²-z₂²))`.
pub fn realize(scheme: &CoxeterScheme) -> Result<FrustumOrthoscheme> {
    let h = |i, j| scheme.h(i, j);
    let h33 = h(3, 3);
    if scheme.vertex_class(3) != PointClass::Outer {
        return Err(Error::NotOuter(h33));
    }
    if scheme.vertex_class(0) != PointClass::Ideal {
        return Err(Error::NotIdeal(h(0, 0)));
    }
    for k in 1..3 {
        if scheme.vertex_class(k) != PointClass::Proper {
            return Err(Error::Realization(format!("vertex A{k} is not proper")));
        }
    }
    let m = |i: usize, j: usize| h(i, j) * h33 - h(i, 3) * h(j, 3);

    // p̃₀ = (n₀,0,0,0), p̃₁ = (α,β,0,0), p̃₂ = (γ,δ,ε,0) with Gram matrix m.
    let n0 = (-m(0, 0)).sqrt();
    let alpha = -m(0, 1) / n0;
    let gamma = -m(0, 2) / n0;
    let beta = (m(1, 1) + alpha * alpha).sqrt().copysign(alpha);
    let delta = (m(1, 2) + alpha * gamma) / beta;
    let eps2 = m(2, 2) + gamma * gamma - delta * delta;
    if !(eps2 > 0.0) || !beta.is_finite() {
        return Err(Error::Realization(
            "truncation points do not span a hyperbolic plane".into(),
        ));
    }
    let eps = eps2.sqrt().copysign(gamma);
    let x = beta / alpha;
    let y = eps / gamma;
    let x_from_p2 = delta / gamma;
    if (x - x_from_p2).abs() > 1e-10 {
        return Err(Error::Realization(format!(
            "P1P2 is not orthogonal to P0P1 (x = {x}, {x_from_p2})"
        )));
    }

    let d1 = truncated_edge_length(scheme, 1)?;
    let d2 = truncated_edge_length(scheme, 2)?;
    let z1 = (1.0 - x * x).sqrt() * d1.tanh();
    let z2 = (1.0 - x * x - y * y).sqrt() * d2.tanh();

    // Heights straight from the placement, as a consistency check.
    let sigma = h(0, 3).signum();
    let z1_direct = sigma * h(1, 3) / alpha;
    let z2_direct = sigma * h(2, 3) / gamma;
    if (z1 - z1_direct).abs() > 1e-10 || (z2 - z2_direct).abs() > 1e-10 {
        return Err(Error::Realization(format!(
            "edge-length heights ({z1}, {z2}) disagree with placement ({z1_direct}, {z2_direct})"
        )));
    }

    for (name, v) in [("x", x), ("y", y), ("z1", z1), ("z2", z2)] {
        if !(v > 0.0 && v < 1.0) {
            return Err(Error::Realization(format!("{name} = {v} not in (0, 1)")));
        }
    }

    let pt = |c: [f64; 4]| Point3::new(c);
    let a = [
        Point3::pole(),
        pt([1.0, x, 0.0, z1])?,
        pt([1.0, x, y, z2])?,
    ];
    let p = [
        Point3::origin(),
        pt([1.0, x, 0.0, 0.0])?,
        pt([1.0, x, y, 0.0])?,
    ];
    for v in a[1..].iter().chain(&p) {
        if classify(v) != PointClass::Proper {
            return Err(Error::Realization(format!(
                "vertex {:?} is not proper",
                v.coords()
            )));
        }
    }

    let a3 = pt([0.0, 0.0, 0.0, 1.0])?;
    let pol_a3 = polar(&a3);
    for (k, v) in p.iter().enumerate() {
        let res = pol_a3.residual(v);
        if res > INCIDENCE_TOL {
            return Err(Error::Realization(format!(
                "P{k} off pol(A3) by {res:e}"
            )));
        }
    }

    let mut frustum = FrustumOrthoscheme {
        scheme: scheme.clone(),
        x,
        y,
        z1,
        z2,
        a,
        p,
        faces: Faces {
            truncation: pol_a3,
            h0: HyperplaneForm::<4>::through(&a[1], &a[2], &a3)?,
            h1: HyperplaneForm::<4>::through(&a[0], &a[2], &a3)?,
            h2: HyperplaneForm::<4>::through(&a[0], &a[1], &a3)?,
            h3: HyperplaneForm::<4>::through(&a[0], &a[1], &a[2])?,
        },
        volume: 0.0,
    };
    let c = frustum.centroid();
    let f = &mut frustum.faces;
    for face in [
        &mut f.truncation,
        &mut f.h0,
        &mut f.h1,
        &mut f.h2,
        &mut f.h3,
    ] {
        *face = face.oriented_away_from(&c);
    }

    let got = frustum.dihedral_angles()?;
    let want = scheme.essential_angles();
    for (g, w) in got.iter().zip(&want) {
        if (g - w).abs() > ANGLE_TOL {
            return Err(Error::Realization(format!(
                "dihedral angles {got:?} do not reproduce {want:?}"
            )));
        }
    }
    frustum.volume = volume_3d(scheme)?;
    Ok(frustum)
}

/// Volume of the simple frustum orthoscheme of `scheme` from its essential
/// angles.
///
/// Only members of the (4,4), (6,3) and (3,6) families are accepted.
pub fn volume_3d(scheme: &CoxeterScheme) -> Result<f64> {
    let (p, q, r) = (scheme.p, scheme.q, scheme.r);
    let family = scheme
        .family()
        .ok_or(Error::UnsupportedScheme { p, q, r })?;
    if p <= family.p_lower_bound() {
        return Err(Error::UnsupportedScheme { p, q, r });
    }
    let [a01, a12, a23] = scheme.essential_angles();
    let disc = a12.cos().powi(2) - (a01.sin() * a23.sin()).powi(2);
    if disc < 0.0 {
        return Err(Error::domain(
            "cos²α12 - sin²α01·sin²α23",
            disc,
            "[0, inf)",
        ));
    }
    let theta = (disc.sqrt() / (a01.cos() * a23.cos())).atan();
    let l = lobachevsky;
    let v = 0.25
        * (l(a01 + theta)? - l(a01 - theta)? + l(FRAC_PI_2 + a12 - theta)?
            + l(FRAC_PI_2 - a12 - theta)?
            + l(a23 + theta)?
            - l(a23 - theta)?
            + 2.0 * l(FRAC_PI_2 - theta)?);
    if !(v > 0.0) {
        return Err(Error::Realization(format!("non-positive volume {v}")));
    }
    Ok(v)
}

/// Area of the Lambert quadrilateral with three right angles and one ideal
/// vertex: `2π - 3·π/2 - 0`.
pub fn lambert_area() -> f64 {
    FRAC_PI_2
}

/// Area of a hyperbolic triangle by angle defect.
pub fn triangle_area<const N: usize>(
    a: &LorentzVector<N>,
    b: &LorentzVector<N>,
    c: &LorentzVector<N>,
) -> Result<f64> {
    let a = a.unit_timelike()?;
    let b = b.unit_timelike()?;
    let c = c.unit_timelike()?;

    // Gram determinant of the three vectors vanishes when they are
    // linearly dependent (collinear points).
    let g = [
        [bilinear_form(&a, &a), bilinear_form(&a, &b), bilinear_form(&a, &c)],
        [bilinear_form(&b, &a), bilinear_form(&b, &b), bilinear_form(&b, &c)],
        [bilinear_form(&c, &a), bilinear_form(&c, &b), bilinear_form(&c, &c)],
    ];
    let det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
        - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
        + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
    let scale = g.iter().flatten().fold(0.0_f64, |m, v| m.max(v.abs()));
    if det.abs() <= 1e-28 * scale.powi(3) {
        return Err(Error::Degenerate);
    }

    let angle = |v: &LorentzVector<N>, w1: &LorentzVector<N>, w2: &LorentzVector<N>| {
        let t1 = tangent_towards(v, w1);
        let t2 = tangent_towards(v, w2);
        let c = raw_form(&t1, &t2) / (raw_form(&t1, &t1) * raw_form(&t2, &t2)).sqrt();
        c.clamp(-1.0, 1.0).acos()
    };
    let area = PI - angle(&a, &b, &c) - angle(&b, &a, &c) - angle(&c, &a, &b);
    if !(area > 0.0) {
        return Err(Error::Degenerate);
    }
    Ok(area)
}

/// Tangent vector at unit `v` pointing along the geodesic towards `w`.
fn tangent_towards<const N: usize>(v: &LorentzVector<N>, w: &LorentzVector<N>) -> [f64; N] {
    // w + ⟨w,v⟩ v, valid for ⟨v,v⟩ = -1
    let k = bilinear_form(w, v);
    let mut t = [0.0; N];
    for (i, ti) in t.iter_mut().enumerate() {
        *ti = w.coords()[i] + k * v.coords()[i];
    }
    t
}
