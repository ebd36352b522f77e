//! Hyp-hor packings of the hyperbolic plane generated by the Lambert
//! quadrilaterals `A₀A₁P₁P₀` with one ideal vertex.
//!
//! For `a ∈ (0,1)` the quadrilateral has vertices `A₀ = (1,0,1)`,
//! `A₁ = (1,0,0)`, `P₁ = (1,a,0)`, `P₀ = (1,a,1-a²)`; the side `P₁P₀` lies on
//! the polar of the outer point `A₂ = (1,1/a,0)`. A horocycle centered at
//! `A₀` and a hypercycle over the line `A₁P₁` touch at `T = (1,0,y)`.
//!
//! The closed forms below use the algebraically equivalent arguments
//!
//! ```text
//! ½(2 - 2√(1-a²) - a² + 2a⁴)/a⁴           = 1 + 1/(2(1+√(1-a²))²)
//! -½(-1+2y-2a²+2a²y²-y²)/(a²(1-y²))        = 1 + (1-y)/(2a²(1+y))
//! ```
//!
//! and `sinh(½ arccosh X) = √((X-1)/2)`, which stay accurate as `a → 0`.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use serde::Serialize;

use crate::balls::{horocyclic_piece_area, hyperball_piece_volume};
use crate::lorentz::{distance, polar, HyperplaneForm, Point2};
use crate::orthoscheme::lambert_area;
use crate::{Error, Result};

/// Slack on the region boundaries.
const REGION_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlaneTiling {
    a: f64,
}

impl PlaneTiling {
    pub fn new(a: f64) -> Result<Self> {
        if !(a > 0.0 && a < 1.0) {
            return Err(Error::domain("a", a, "(0, 1)"));
        }
        Ok(Self { a })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn a0(&self) -> Point2 {
        Point2::pole()
    }

    pub fn a1(&self) -> Point2 {
        Point2::origin()
    }

    pub fn p1(&self) -> Point2 {
        Point2::new([1.0, self.a, 0.0]).expect("nonzero")
    }

    pub fn p0(&self) -> Point2 {
        Point2::new([1.0, self.a, 1.0 - self.a * self.a]).expect("nonzero")
    }

    /// The outer vertex `A₂ = (1, 1/a, 0)`.
    pub fn a2(&self) -> Point2 {
        Point2::new([1.0, 1.0 / self.a, 0.0]).expect("nonzero")
    }

    pub fn polar_a2(&self) -> HyperplaneForm<3> {
        polar(&self.a2())
    }

    pub fn area(&self) -> f64 {
        lambert_area()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PackingKind {
    Type1,
    Type2,
    General,
    HorocycleOnly,
}

/// Upper end `√(1-a²)` of the admissible `y` range.
pub fn y_max(a: f64) -> f64 {
    (1.0 - a * a).sqrt()
}

/// Lower end of the admissible `y` range: `1 - 2a²`, or 0 once `a ≥ 1/√2`.
pub fn y_min(a: f64) -> f64 {
    (1.0 - 2.0 * a * a).max(0.0)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlanePacking {
    pub tiling: PlaneTiling,
    pub y: f64,
    pub kind: PackingKind,
}

impl PlanePacking {
    pub fn type1(a: f64) -> Result<Self> {
        let tiling = PlaneTiling::new(a)?;
        Ok(Self {
            tiling,
            y: y_max(a),
            kind: PackingKind::Type1,
        })
    }

    pub fn type2(a: f64) -> Result<Self> {
        let tiling = PlaneTiling::new(a)?;
        if a > FRAC_1_SQRT_2 {
            return Err(Error::domain("a", a, "(0, 1/√2]"));
        }
        Ok(Self {
            tiling,
            y: 1.0 - 2.0 * a * a,
            kind: PackingKind::Type2,
        })
    }

    pub fn horocycle_only(a: f64) -> Result<Self> {
        let tiling = PlaneTiling::new(a)?;
        if a < FRAC_1_SQRT_2 {
            return Err(Error::domain("a", a, "[1/√2, 1)"));
        }
        Ok(Self {
            tiling,
            y: 0.0,
            kind: PackingKind::HorocycleOnly,
        })
    }

    /// Any admissible `y`, boundary included.
    pub fn general(a: f64, y: f64) -> Result<Self> {
        let tiling = PlaneTiling::new(a)?;
        if !(y >= y_min(a) - REGION_TOL && y <= y_max(a) + REGION_TOL && y < 1.0) {
            return Err(Error::domain("y", y, "[y_min(a), √(1-a²)]"));
        }
        Ok(Self {
            tiling,
            y,
            kind: PackingKind::General,
        })
    }

    /// Density from the closed forms.
    pub fn density(&self) -> Result<f64> {
        let a = self.tiling.a;
        match self.kind {
            PackingKind::Type1 => density_type1(a),
            PackingKind::Type2 => density_type2(a),
            PackingKind::General => density_general(a, self.y),
            PackingKind::HorocycleOnly => density_horocycle_only(a),
        }
    }

    /// Height of the hypercycle over `A₁P₁`.
    pub fn hyper_height(&self) -> f64 {
        self.y.atanh()
    }

    /// Density assembled from the geometry: the horocyclic arc between the
    /// edges `A₀A₁` and `A₀P₀`, plus the hypercycle piece of height
    /// `artanh(y)` over the segment `A₁P₁`, over the area `π/2`.
    pub fn density_by_construction(&self) -> Result<f64> {
        let t = &self.tiling;
        let horo = horocyclic_piece_area(&t.a1(), &t.p0(), self.y)?;
        let base = distance(&t.a1(), &t.p1())?;
        let hyper = hyperball_piece_volume(base, self.hyper_height(), 2)?;
        Ok((horo + hyper) / t.area())
    }
}

fn sinh_half_acosh(x: f64) -> Result<f64> {
    if !(x >= 1.0) {
        return Err(Error::ArccoshDomain(x));
    }
    Ok(((x - 1.0) / 2.0).sqrt())
}

pub fn density_type1(a: f64) -> Result<f64> {
    PlaneTiling::new(a)?;
    let c = y_max(a);
    let arg = 1.0 + 0.5 / ((1.0 + c) * (1.0 + c));
    Ok((4.0 * sinh_half_acosh(arg)? + 2.0 * c) / PI)
}

pub fn density_type2(a: f64) -> Result<f64> {
    if !(a > 0.0 && a < FRAC_1_SQRT_2) {
        return Err(Error::domain("a", a, "(0, 1/√2)"));
    }
    let a2 = a * a;
    let arg = (3.0 - 2.0 * a2) / (2.0 * (1.0 - a2));
    Ok((4.0 * sinh_half_acosh(arg)? - (2.0 * a2 - 1.0) / (1.0 - a2).sqrt()) / PI)
}

pub fn density_general(a: f64, y: f64) -> Result<f64> {
    PlanePacking::general(a, y)?;
    let arg = 1.0 + (1.0 - y) / (2.0 * a * a * (1.0 + y));
    let w = (1.0 - y * y).sqrt();
    Ok((4.0 * sinh_half_acosh(arg)? * w + 2.0 * y * a) / (PI * w))
}

pub fn density_horocycle_only(a: f64) -> Result<f64> {
    PlanePacking::horocycle_only(a)?;
    density_general(a, 0.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ScanReport {
    pub a_star: f64,
    pub y_star: f64,
    pub delta_star: f64,
    /// Whether the argmax sits on the lower or upper `y` boundary.
    pub on_boundary: bool,
    pub best_boundary: f64,
    pub best_interior: f64,
}

/// Grid scan of `density_general` over `a ∈ (a_lo, a_hi)` (cell midpoints)
/// and the full admissible `y` range at each `a` (end points included).
pub fn scan_general_in(a_lo: f64, a_hi: f64, resolution: usize) -> Result<ScanReport> {
    if resolution == 0 {
        return Err(Error::Invalid("resolution must be positive".into()));
    }
    if !(0.0 <= a_lo && a_lo < a_hi && a_hi <= 1.0) {
        return Err(Error::Invalid(format!("bad a range [{a_lo}, {a_hi}]")));
    }
    let n = resolution;
    let mut best: Option<(f64, f64, f64, bool)> = None;
    let (mut best_boundary, mut best_interior) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for i in 0..n {
        let a = a_lo + (i as f64 + 0.5) * (a_hi - a_lo) / n as f64;
        let (lo, hi) = (y_min(a), y_max(a));
        for j in 0..n {
            let (y, edge) = if n == 1 {
                (hi, true)
            } else {
                (lo + (hi - lo) * j as f64 / (n - 1) as f64, j == 0 || j == n - 1)
            };
            let d = density_general(a, y)?;
            if edge {
                best_boundary = best_boundary.max(d);
            } else {
                best_interior = best_interior.max(d);
            }
            if best.is_none_or(|b| d > b.2) {
                best = Some((a, y, d, edge));
            }
        }
    }
    let (a_star, y_star, delta_star, on_boundary) = best.expect("nonempty grid");
    Ok(ScanReport {
        a_star,
        y_star,
        delta_star,
        on_boundary,
        best_boundary,
        best_interior,
    })
}

pub fn scan_general(resolution: usize) -> Result<ScanReport> {
    scan_general_in(0.0, 1.0, resolution)
}
