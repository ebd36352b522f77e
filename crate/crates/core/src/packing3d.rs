//! Hyp-hor packings of hyperbolic 3-space generated by the simple frustum
//! orthoschemes `[p,4,4]`, `[p,6,3]` and `[p,3,6]`.
//!
//! Each fundamental domain carries one piece of a horoball centered at the
//! ideal vertex `A₀` and one piece of a hyperball over the truncating plane
//! `π`. The horoball may not cross `π` or the face `A₁A₂P₂P₁`, the
//! hyperball may not cross `A₀A₁A₂`, and the two must not overlap.
//!
//! When the two largest admissible balls (horoball through `A₁`, hyperball
//! through `A₂`) overlap, the balls are kept tangent on the axis `A₀P₀`
//! (`s = tanh h`) and `h` is scanned from the smallest hyperball that
//! leaves room for an admissible horoball up to `d(P₂, A₂)`.

use serde::Serialize;

use crate::balls::{
    analytic_clearances, horo_param_through, horoball_piece_volume, hyperball_piece_volume,
    Horoball, Hyperball, ANALYTIC_TOL,
};
use crate::optimize::{maximize, Maximizer1D};
use crate::orthoscheme::{build_scheme, realize, Family, FrustumOrthoscheme};
use crate::{Error, Result};

/// Grid size of the tangency scan.
pub const SCAN_GRID: usize = 2000;
/// Golden-section tolerance of the tangency scan, in `ζ`.
pub const SCAN_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TangencyScan {
    /// Length of the scanned interval of hyperball heights.
    pub zeta_max: f64,
    /// Maximizing offset from the left end.
    pub zeta_star: f64,
}

impl TangencyScan {
    /// Whether the argmax is the right end, up to the refinement tolerance.
    pub fn at_right_endpoint(&self) -> bool {
        self.zeta_max - self.zeta_star <= SCAN_TOL
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityResult {
    pub p: f64,
    pub q: f64,
    pub r: f64,
    pub s: f64,
    pub h: f64,
    pub vol_f: f64,
    pub horoball_piece: f64,
    pub hyperball_piece: f64,
    pub vol_pieces: f64,
    pub delta: f64,
    pub realizable_tiling: bool,
    #[serde(skip)]
    pub scan: Option<TangencyScan>,
}

/// A realized frustum with its horoball and hyperball.
#[derive(Clone, Debug)]
pub struct Packing3D {
    pub frustum: FrustumOrthoscheme,
    pub horoball: Horoball<4>,
    pub hyperball: Hyperball<4>,
    pub family: Family,
    pub p: f64,
}

impl Packing3D {
    pub fn new(frustum: FrustumOrthoscheme, s: f64, h: f64) -> Result<Self> {
        let sc = frustum.scheme();
        let family = sc.family().ok_or(Error::UnsupportedScheme {
            p: sc.p,
            q: sc.q,
            r: sc.r,
        })?;
        require_admissible(&frustum, s, h)?;
        Ok(Self {
            horoball: Horoball::new(s)?,
            hyperball: Hyperball::over(&frustum, h)?,
            p: sc.p,
            family,
            frustum,
        })
    }

    pub fn density(&self) -> Result<DensityResult> {
        density(&self.frustum, self.horoball.s(), self.hyperball.h())
    }
}

fn require_admissible(f: &FrustumOrthoscheme, s: f64, h: f64) -> Result<()> {
    let c = analytic_clearances(f, s, h)?;
    let names = ["horoball crosses a face", "hyperball crosses a face", "balls overlap"];
    for (v, name) in c.iter().zip(names) {
        if *v < -ANALYTIC_TOL {
            return Err(Error::Inadmissible(format!("{name} (clearance {v:e})")));
        }
    }
    Ok(())
}

/// Density of the horoball `s` and hyperball `h` packing generated by `f`.
pub fn density(f: &FrustumOrthoscheme, s: f64, h: f64) -> Result<DensityResult> {
    require_admissible(f, s, h)?;
    let sc = f.scheme();
    let horo = horoball_piece_volume(f, s)?;
    let hyper = hyperball_piece_volume(f.base_area(), h, 3)?;
    let vol_f = f.volume();
    let vol_pieces = horo + hyper;
    Ok(DensityResult {
        p: sc.p,
        q: sc.q,
        r: sc.r,
        s,
        h,
        vol_f,
        horoball_piece: horo,
        hyperball_piece: hyper,
        vol_pieces,
        delta: vol_pieces / vol_f,
        realizable_tiling: sc.family().is_some_and(|fam| fam.is_tiling(sc.p)),
        scan: None,
    })
}

/// Realized frustum of `family` at parameter `p`.
pub fn frustum(family: Family, p: f64) -> Result<FrustumOrthoscheme> {
    if !(p > family.p_lower_bound()) {
        return Err(Error::domain("p", p, "above the family's lower bound"));
    }
    let (q, r) = family.qr();
    realize(&build_scheme(p, q, r)?)
}

/// Largest horoball parameter range: `s` must be at least `s(A₁)` and at
/// least 0. Returns that bound.
pub fn min_horo_param(f: &FrustumOrthoscheme) -> Result<f64> {
    Ok(horo_param_through(&f.a()[1])?.max(0.0))
}

/// Best density with the balls tangent on the axis, `h` ranging over
/// `[artanh(max(s(A₁), 0)), d(P₂, A₂)]`.
pub fn tangency_scan(f: &FrustumOrthoscheme) -> Result<DensityResult> {
    let h_lo = min_horo_param(f)?.atanh();
    let h_hi = f.max_hyperball_height();
    if h_lo > h_hi {
        return Err(Error::Inadmissible(format!(
            "no tangent pair: artanh(s_min) = {h_lo} exceeds d(P2,A2) = {h_hi}"
        )));
    }
    let m = Maximizer1D::new(0.0, h_hi - h_lo, SCAN_GRID, SCAN_TOL)?;
    let at = |zeta: f64| {
        let h = (h_lo + zeta).min(h_hi);
        density(f, h.tanh().max(min_horo_param(f)?), h)
    };
    let (zeta, _) = maximize(|z| Ok(at(z)?.delta), &m)?;
    let mut out = at(zeta)?;
    out.scan = Some(TangencyScan {
        zeta_max: h_hi - h_lo,
        zeta_star: zeta,
    });
    Ok(out)
}

/// Densest admissible packing for `f`: the two maximal balls when they
/// are disjoint, otherwise the best tangent pair.
pub fn optimal_density(f: &FrustumOrthoscheme) -> Result<DensityResult> {
    let s = min_horo_param(f)?;
    let h = f.max_hyperball_height();
    if h.tanh() <= s {
        density(f, s, h)
    } else {
        tangency_scan(f)
    }
}

pub fn optimize_family(family: Family, p: f64) -> Result<DensityResult> {
    optimal_density(&frustum(family, p)?)
}

pub fn optimize_family_44(p: f64) -> Result<DensityResult> {
    if !(p >= 5.0) {
        return Err(Error::domain("p", p, "[5, inf)"));
    }
    optimize_family(Family::F44, p)
}

pub fn optimize_family_63(p: f64) -> Result<DensityResult> {
    if !(p >= 4.0) {
        return Err(Error::domain("p", p, "[4, inf)"));
    }
    optimize_family(Family::F63, p)
}

pub fn optimize_family_36(p: f64) -> Result<DensityResult> {
    if !(p > 6.0) {
        return Err(Error::domain("p", p, "(6, inf)"));
    }
    optimize_family(Family::F36, p)
}

#[derive(Clone, Debug, PartialEq)]
pub struct FamilyArgmax {
    pub family: Family,
    pub p: u32,
    pub result: DensityResult,
}

/// Hard cap on `p` when walking a family.
pub const P_CAP: u32 = 64;

/// Best integer `p` of one family, walking up from the first tiling until
/// `δ` has decreased three times in a row.
pub fn family_argmax_in(family: Family) -> Result<FamilyArgmax> {
    let mut best: Option<FamilyArgmax> = None;
    let mut prev = f64::NEG_INFINITY;
    let mut decreases = 0;
    for p in family.min_tiling_p()..=P_CAP {
        let result = optimize_family(family, p as f64)?;
        let delta = result.delta;
        if best.as_ref().is_none_or(|b| delta > b.result.delta) {
            best = Some(FamilyArgmax { family, p, result });
        }
        decreases = if delta < prev { decreases + 1 } else { 0 };
        prev = delta;
        if decreases == 3 {
            break;
        }
    }
    Ok(best.expect("at least one p evaluated"))
}

/// Best tiling over all three families.
pub fn family_argmax() -> Result<FamilyArgmax> {
    let mut best: Option<FamilyArgmax> = None;
    for family in Family::ALL {
        let cand = family_argmax_in(family)?;
        if best.as_ref().is_none_or(|b| cand.result.delta > b.result.delta) {
            best = Some(cand);
        }
    }
    Ok(best.expect("three families"))
}
