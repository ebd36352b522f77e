//! Grid scan plus golden-section refinement on an interval, and the
//! real-parameter optimum of the `[p,3,6]` family.

use serde::Serialize;

use crate::packing3d::optimize_family_36;
use crate::{Error, Result};

const INV_PHI: f64 = 0.618_033_988_749_894_9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Maximizer1D {
    pub lo: f64,
    pub hi: f64,
    pub grid_points: usize,
    pub refine_tol: f64,
    /// Offset of the grid as a fraction of one cell, in `[0, 1)`.
    pub phase: f64,
}

impl Maximizer1D {
    pub fn new(lo: f64, hi: f64, grid_points: usize, refine_tol: f64) -> Result<Self> {
        let m = Self {
            lo,
            hi,
            grid_points,
            refine_tol,
            phase: 0.0,
        };
        m.validate()?;
        Ok(m)
    }

    pub fn with_phase(mut self, phase: f64) -> Result<Self> {
        self.phase = phase;
        self.validate()?;
        Ok(self)
    }

    fn validate(&self) -> Result<()> {
        if !(self.lo.is_finite() && self.hi.is_finite() && self.lo < self.hi) {
            return Err(Error::Invalid(format!(
                "bounds [{}, {}] must be finite with lo < hi",
                self.lo, self.hi
            )));
        }
        if self.grid_points < 100 {
            return Err(Error::Invalid(format!(
                "grid_points = {} must be at least 100",
                self.grid_points
            )));
        }
        if !(self.refine_tol > 0.0) {
            return Err(Error::domain("refine_tol", self.refine_tol, "(0, inf)"));
        }
        if !(0.0..1.0).contains(&self.phase) {
            return Err(Error::domain("phase", self.phase, "[0, 1)"));
        }
        Ok(())
    }

    fn grid(&self) -> Vec<f64> {
        let cell = (self.hi - self.lo) / (self.grid_points - 1) as f64;
        (0..self.grid_points)
            .map(|i| self.lo + (i as f64 + self.phase) * cell)
            .filter(|&x| x <= self.hi)
            .collect()
    }
}

fn eval<F: FnMut(f64) -> Result<f64>>(f: &mut F, x: f64) -> Result<f64> {
    match f(x) {
        Ok(v) if v.is_finite() => Ok(v),
        Ok(v) => Err(Error::Evaluation {
            x,
            source: Box::new(Error::NonFinite(v)),
        }),
        Err(e) => Err(Error::Evaluation {
            x,
            source: Box::new(e),
        }),
    }
}

/// Returns `(x*, f(x*))`. Ties go to the smaller `x`.
pub fn maximize<F: FnMut(f64) -> Result<f64>>(mut f: F, m: &Maximizer1D) -> Result<(f64, f64)> {
    m.validate()?;
    let grid = m.grid();
    let mut best = (grid[0], eval(&mut f, grid[0])?);
    let mut best_i = 0;
    for (i, &x) in grid.iter().enumerate().skip(1) {
        let v = eval(&mut f, x)?;
        if v > best.1 {
            best = (x, v);
            best_i = i;
        }
    }

    let a = if best_i == 0 { m.lo } else { grid[best_i - 1] };
    let b = grid.get(best_i + 1).copied().unwrap_or(m.hi);
    let refined = golden(&mut f, a, b, m.refine_tol)?;

    let mut candidates = [(m.lo, eval(&mut f, m.lo)?), best, refined, (m.hi, eval(&mut f, m.hi)?)];
    candidates.sort_by(|p, q| p.0.total_cmp(&q.0));
    let mut out = candidates[0];
    for c in &candidates[1..] {
        if c.1 > out.1 {
            out = *c;
        }
    }
    Ok(out)
}

fn golden<F: FnMut(f64) -> Result<f64>>(f: &mut F, mut a: f64, mut b: f64, tol: f64) -> Result<(f64, f64)> {
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = eval(f, c)?;
    let mut fd = eval(f, d)?;
    while (b - a).abs() > tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = eval(f, c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = eval(f, d)?;
        }
    }
    let x = 0.5 * (a + b);
    Ok((x, eval(f, x)?))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PoptResult {
    pub p_star: f64,
    pub p_interval: [f64; 2],
    pub delta_max: f64,
}

/// Lower end of the search for the real-parameter optimum.
pub const POPT_LO: f64 = 6.01;
/// Upper end of the search for the real-parameter optimum.
pub const POPT_HI: f64 = 6.99;

/// Maximize `p ↦ δ(𝒫ₚ^(3,6))` over real `p`; the interval is the
/// 0.01-wide cell of the hundredths grid containing the argmax.
pub fn find_p_opt() -> Result<PoptResult> {
    find_p_opt_with(Maximizer1D::new(POPT_LO, POPT_HI, 1000, 1e-6)?)
}

pub fn find_p_opt_with(m: Maximizer1D) -> Result<PoptResult> {
    let (p, delta) = maximize(|p| Ok(optimize_family_36(p)?.delta), &m)?;
    let lo = (p * 100.0).floor() / 100.0;
    Ok(PoptResult {
        p_star: p,
        p_interval: [lo, (lo * 100.0 + 1.0).round() / 100.0],
        delta_max: delta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parabola() {
        let m = Maximizer1D::new(0.0, 1.0, 100, 1e-9).unwrap();
        let (x, _) = maximize(|x| Ok(-(x - 0.3) * (x - 0.3)), &m).unwrap();
        assert!((x - 0.3).abs() < 1e-8);
    }

    #[test]
    fn increasing_gives_endpoint() {
        let m = Maximizer1D::new(0.0, 1.0, 100, 1e-9).unwrap();
        assert_eq!(maximize(Ok, &m).unwrap(), (1.0, 1.0));
        assert_eq!(maximize(|x| Ok(-x), &m).unwrap(), (0.0, 0.0));
    }

    #[test]
    fn ties_go_left() {
        let m = Maximizer1D::new(0.0, 1.0, 100, 1e-9).unwrap();
        assert_eq!(maximize(|_| Ok(2.0), &m).unwrap().0, 0.0);
    }

    #[test]
    fn bad_bounds() {
        assert!(Maximizer1D::new(1.0, 0.0, 100, 1e-6).is_err());
        assert!(Maximizer1D::new(0.0, 1.0, 99, 1e-6).is_err());
        assert!(Maximizer1D::new(0.0, 1.0, 100, 0.0).is_err());
        let m = Maximizer1D::new(0.0, 1.0, 100, 1e-6).unwrap();
        assert!(m.with_phase(1.0).is_err());
    }

    #[test]
    fn failure_reports_x() {
        let m = Maximizer1D::new(0.0, 1.0, 100, 1e-6).unwrap();
        let err = maximize(
            |x| if x > 0.5 { Err(Error::Degenerate) } else { Ok(x) },
            &m,
        )
        .unwrap_err();
        match err {
            Error::Evaluation { x, source } => {
                assert!(x > 0.5);
                assert_eq!(*source, Error::Degenerate);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn non_finite_is_an_error() {
        let m = Maximizer1D::new(0.0, 1.0, 100, 1e-6).unwrap();
        assert!(maximize(|_| Ok(f64::NAN), &m).is_err());
    }
}
