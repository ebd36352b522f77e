//! Lorentzian linear algebra of signature `(1, n)` behind the projective
//! (Beltrami–Cayley–Klein) model of hyperbolic `n`-space.
//!
//! A point is a nonzero vector `(x⁰, x¹, …, xⁿ)` taken up to a nonzero real
//! factor. The const parameter `N = n + 1` is the number of homogeneous
//! coordinates, so the hyperbolic plane uses `LorentzVector<3>` and
//! hyperbolic space uses `LorentzVector<4>`.

use crate::{Error, Result};

/// Tolerance on `⟨x,x⟩` (after scaling `x` to unit max-abs coordinate) below
/// which a point counts as ideal.
pub const CLASS_EPS: f64 = 1e-10;

/// Relative slack accepted on `cosh d ≥ 1` before a distance is rejected.
const COSH_SLACK: f64 = 1e-10;

pub type Point2 = LorentzVector<3>;
pub type Point3 = LorentzVector<4>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointClass {
    /// Inside the absolute quadric, `⟨x,x⟩ < 0`.
    Proper,
    /// On the absolute quadric (a point at infinity), `⟨x,x⟩ = 0`.
    Ideal,
    /// Outside the absolute quadric, `⟨x,x⟩ > 0`.
    Outer,
}

/// Homogeneous coordinates of a projective point.
///
/// Two vectors that differ by a nonzero factor represent the same point, so
/// there is deliberately no `PartialEq`; use [`LorentzVector::same_point`].
#[derive(Clone, Copy, Debug)]
pub struct LorentzVector<const N: usize> {
    coords: [f64; N],
    exact_ideal: bool,
}

impl<const N: usize> LorentzVector<N> {
    pub fn new(coords: [f64; N]) -> Result<Self> {
        if let Some(&bad) = coords.iter().find(|c| !c.is_finite()) {
            return Err(Error::NonFinite(bad));
        }
        if coords.iter().all(|&c| c == 0.0) {
            return Err(Error::ZeroVector);
        }
        Ok(Self {
            coords,
            exact_ideal: false,
        })
    }

    /// A point known to lie on the absolute quadric by construction. It is
    /// classified as [`PointClass::Ideal`] without consulting the tolerance.
    pub fn ideal(coords: [f64; N]) -> Result<Self> {
        let v = Self::new(coords)?;
        let scaled = v.max_normalized();
        if bilinear_form(&scaled, &scaled).abs() > CLASS_EPS {
            return Err(Error::Realization(format!(
                "{coords:?} is not on the absolute quadric"
            )));
        }
        Ok(Self {
            coords,
            exact_ideal: true,
        })
    }

    /// The model center `(1, 0, …, 0)`.
    pub fn origin() -> Self {
        let mut coords = [0.0; N];
        coords[0] = 1.0;
        Self {
            coords,
            exact_ideal: false,
        }
    }

    /// The ideal point `(1, 0, …, 0, 1)`, center of every horoball here.
    pub fn pole() -> Self {
        let mut coords = [0.0; N];
        coords[0] = 1.0;
        coords[N - 1] = 1.0;
        Self {
            coords,
            exact_ideal: true,
        }
    }

    pub fn coords(&self) -> &[f64; N] {
        &self.coords
    }

    pub fn is_exact_ideal(&self) -> bool {
        self.exact_ideal
    }

    /// Representative with `x⁰ = 1`, or `None` for points at infinity of the
    /// affine chart (`x⁰ = 0`).
    pub fn affine(&self) -> Option<Self> {
        let w = self.coords[0];
        if w == 0.0 {
            return None;
        }
        Some(self.scaled(1.0 / w))
    }

    /// Cartesian coordinates `xⁱ/x⁰` in the model ball.
    pub fn cartesian(&self) -> Option<Vec<f64>> {
        self.affine().map(|a| a.coords[1..].to_vec())
    }

    /// Same point with every coordinate multiplied by `factor` (nonzero).
    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            coords: self.coords.map(|c| c * factor),
            exact_ideal: self.exact_ideal,
        }
    }

    fn max_normalized(&self) -> Self {
        let m = self.coords.iter().fold(0.0_f64, |m, c| m.max(c.abs()));
        self.scaled(1.0 / m)
    }

    /// Proper point scaled onto the upper sheet of the hyperboloid
    /// `⟨x,x⟩ = -1`, `x⁰ > 0`.
    pub fn unit_timelike(&self) -> Result<Self> {
        let q = bilinear_form(self, self);
        if q >= 0.0 {
            return Err(Error::NotProper(self.coords.to_vec()));
        }
        let s = (-q).sqrt().recip() * self.coords[0].signum();
        Ok(self.scaled(s))
    }

    /// Projective equality up to `tol` on the max-normalized representatives.
    pub fn same_point(&self, other: &Self, tol: f64) -> bool {
        let a = self.max_normalized();
        let b = other.max_normalized();
        let diff = |sign: f64| {
            a.coords
                .iter()
                .zip(&b.coords)
                .fold(0.0_f64, |m, (x, y)| m.max((x - sign * y).abs()))
        };
        diff(1.0) <= tol || diff(-1.0) <= tol
    }

    /// Linear combination `a·self + b·other` (coordinate-wise).
    pub fn combine(&self, a: f64, other: &Self, b: f64) -> Result<Self> {
        let mut coords = [0.0; N];
        for (i, c) in coords.iter_mut().enumerate() {
            *c = a * self.coords[i] + b * other.coords[i];
        }
        Self::new(coords)
    }
}

/// A linear form `y ↦ Σ yⁱ uᵢ` representing a hyperplane of the model.
#[derive(Clone, Copy, Debug)]
pub struct HyperplaneForm<const N: usize> {
    coeffs: [f64; N],
}

impl<const N: usize> HyperplaneForm<N> {
    pub fn new(coeffs: [f64; N]) -> Result<Self> {
        if let Some(&bad) = coeffs.iter().find(|c| !c.is_finite()) {
            return Err(Error::NonFinite(bad));
        }
        if coeffs.iter().all(|&c| c == 0.0) {
            return Err(Error::ZeroVector);
        }
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> &[f64; N] {
        &self.coeffs
    }

    pub fn eval(&self, x: &LorentzVector<N>) -> f64 {
        self.coeffs.iter().zip(x.coords()).map(|(u, x)| u * x).sum()
    }

    pub fn is_incident(&self, x: &LorentzVector<N>, tol: f64) -> bool {
        self.residual(x) <= tol
    }

    /// `|u(x)|` with both `u` and `x` scaled to unit max-abs coefficient.
    pub fn residual(&self, x: &LorentzVector<N>) -> f64 {
        let um = self.coeffs.iter().fold(0.0_f64, |m, c| m.max(c.abs()));
        let xm = x.coords().iter().fold(0.0_f64, |m, c| m.max(c.abs()));
        (self.eval(x) / (um * xm)).abs()
    }

    /// The metric dual `u*`, the vector with `⟨u*, y⟩ = u(y)` for all `y`.
    /// It is the pole of the hyperplane.
    pub fn dual(&self) -> LorentzVector<N> {
        let mut c = self.coeffs;
        c[0] = -c[0];
        LorentzVector {
            coords: c,
            exact_ideal: false,
        }
    }

    pub fn negated(&self) -> Self {
        Self {
            coeffs: self.coeffs.map(|c| -c),
        }
    }

    /// Flip the sign so that `interior` evaluates negative.
    pub fn oriented_away_from(&self, interior: &LorentzVector<N>) -> Self {
        let x = interior.affine().unwrap_or(*interior);
        if self.eval(&x) > 0.0 {
            self.negated()
        } else {
            *self
        }
    }

    /// Dual vector scaled to `⟨n,n⟩ = 1`.
    pub fn unit_normal(&self) -> Result<[f64; N]> {
        let d = self.dual();
        let q = bilinear_form(&d, &d);
        if q <= 0.0 {
            return Err(Error::NotSpacelike);
        }
        Ok(d.coords.map(|c| c / q.sqrt()))
    }
}

impl HyperplaneForm<3> {
    /// The line through two points of the plane.
    pub fn through(a: &Point2, b: &Point2) -> Result<Self> {
        let [a0, a1, a2] = *a.coords();
        let [b0, b1, b2] = *b.coords();
        Self::new([a1 * b2 - a2 * b1, a2 * b0 - a0 * b2, a0 * b1 - a1 * b0])
    }
}

impl HyperplaneForm<4> {
    /// The plane through three points of space (cofactor expansion of the
    /// 4×4 determinant `det[y; a; b; c]` along its first row).
    pub fn through(a: &Point3, b: &Point3, c: &Point3) -> Result<Self> {
        let rows = [a.coords(), b.coords(), c.coords()];
        let minor = |skip: usize| {
            let cols: Vec<usize> = (0..4).filter(|&j| j != skip).collect();
            let m = |r: usize, k: usize| rows[r][cols[k]];
            m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
                - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
                + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
        };
        Self::new([minor(0), -minor(1), minor(2), -minor(3)])
    }
}

/// `⟨x,y⟩ = -x⁰y⁰ + Σ xⁱyⁱ`.
///
/// Mismatched dimensions are ruled out by the type parameter.
pub fn bilinear_form<const N: usize>(x: &LorentzVector<N>, y: &LorentzVector<N>) -> f64 {
    raw_form(&x.coords, &y.coords)
}

pub(crate) fn raw_form<const N: usize>(x: &[f64; N], y: &[f64; N]) -> f64 {
    -x[0] * y[0] + (1..N).map(|i| x[i] * y[i]).sum::<f64>()
}

pub fn classify<const N: usize>(x: &LorentzVector<N>) -> PointClass {
    if x.exact_ideal {
        return PointClass::Ideal;
    }
    let n = x.max_normalized();
    let q = bilinear_form(&n, &n);
    if q < -CLASS_EPS {
        PointClass::Proper
    } else if q > CLASS_EPS {
        PointClass::Outer
    } else {
        PointClass::Ideal
    }
}

fn require_proper<const N: usize>(x: &LorentzVector<N>) -> Result<()> {
    match classify(x) {
        PointClass::Proper => Ok(()),
        _ => Err(Error::NotProper(x.coords.to_vec())),
    }
}

/// Hyperbolic distance between two proper points (curvature `-1`).
///
/// Equals `arccosh(|⟨p,q⟩| / √(⟨p,p⟩⟨q,q⟩))`; it is evaluated as
/// `2·arsinh(‖p̂ - q̂‖/2)` on unit representatives, which keeps full
/// precision for nearby points.
pub fn distance<const N: usize>(p: &LorentzVector<N>, q: &LorentzVector<N>) -> Result<f64> {
    require_proper(p)?;
    require_proper(q)?;
    let pu = p.unit_timelike()?;
    let qu = q.unit_timelike()?;
    let cosh = -bilinear_form(&pu, &qu);
    if cosh < 1.0 - COSH_SLACK {
        return Err(Error::ArccoshDomain(cosh));
    }
    let mut delta = [0.0; N];
    for (i, d) in delta.iter_mut().enumerate() {
        *d = pu.coords[i] - qu.coords[i];
    }
    let chord = raw_form(&delta, &delta).max(0.0).sqrt();
    Ok(2.0 * (chord / 2.0).asinh())
}

/// The polar hyperplane `{y : ⟨x,y⟩ = 0}` of `x`.
pub fn polar<const N: usize>(x: &LorentzVector<N>) -> HyperplaneForm<N> {
    let mut c = x.coords;
    c[0] = -c[0];
    HyperplaneForm { coeffs: c }
}

/// Distance from a proper point to a hyperplane whose pole is outer.
pub fn point_plane_distance<const N: usize>(
    x: &LorentzVector<N>,
    u: &HyperplaneForm<N>,
) -> Result<f64> {
    require_proper(x)?;
    let d = u.dual();
    let uu = bilinear_form(&d, &d);
    if uu <= 0.0 {
        return Err(Error::NotSpacelike);
    }
    let xx = bilinear_form(x, x);
    Ok((u.eval(x).abs() / (-xx * uu).sqrt()).asinh())
}

/// Upper half-space chart of `H³` in which the ideal point `(1,0,0,1)` sits at
/// infinity: returns `(u₁, u₂, z)` with `z > 0`.
///
/// Horospheres centered at `(1,0,0,1)` become the planes `z = const` and the
/// volume element is `du₁ du₂ dz / z³`.
pub fn to_cusp_chart(x: &Point3) -> Result<[f64; 3]> {
    let h = x.unit_timelike()?;
    let [x0, x1, x2, x3] = h.coords;
    let w = x0 - x3;
    Ok([x1 / w, x2 / w, 1.0 / w])
}

/// Inverse of [`to_cusp_chart`].
pub fn from_cusp_chart(u: [f64; 3]) -> Result<Point3> {
    let [u1, u2, z] = u;
    if !(z > 0.0) {
        return Err(Error::domain("z", z, "(0, inf)"));
    }
    let r2 = u1 * u1 + u2 * u2;
    let x0 = (z * z + r2 + 1.0) / (2.0 * z);
    let x3 = (z * z + r2 - 1.0) / (2.0 * z);
    Point3::new([x0, u1 / z, u2 / z, x3])
}
