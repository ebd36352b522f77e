//! The Lobachevsky function `𝓛(x) = -∫₀ˣ ln|2 sin t| dt`.
//!
//! `𝓛` is odd and π-periodic, and `𝓛(x) = ½·Cl₂(2x)` where `Cl₂` is the
//! Clausen function. After reducing the argument to `[-π/2, π/2]` the
//! evaluation uses the expansion
//!
//! ```text
//! Cl₂(θ) = θ - θ ln θ + Σ_{k≥1} ζ(2k) / (k (2k+1) (2π)^{2k}) · θ^{2k+1},   0 < θ ≤ π,
//! ```
//!
//! whose terms shrink at least like `4^{-k}` on the reduced range.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::{Error, Result};

const MAX_TERMS: usize = 64;

/// Evaluator for the Lobachevsky function.
#[derive(Clone, Copy, Debug)]
pub struct Lobachevsky {
    /// Absolute error target; the series stops once a term drops below it.
    tolerance: f64,
}

impl Default for Lobachevsky {
    fn default() -> Self {
        Self { tolerance: 1e-17 }
    }
}

impl Lobachevsky {
    pub fn with_tolerance(tolerance: f64) -> Result<Self> {
        if !(tolerance > 0.0 && tolerance <= 1e-12) {
            return Err(Error::domain("tolerance", tolerance, "(0, 1e-12]"));
        }
        Ok(Self { tolerance })
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        if !x.is_finite() {
            return Err(Error::NonFinite(x));
        }
        let r = x - PI * (x / PI).round();
        let t = r.abs();
        if t == 0.0 {
            return Ok(0.0);
        }
        let v = 0.5 * self.clausen_reduced(2.0 * t);
        Ok(if r < 0.0 { -v } else { v })
    }

    /// `Cl₂(θ)` for `0 < θ ≤ π` (slightly beyond π is harmless).
    fn clausen_reduced(&self, theta: f64) -> f64 {
        let coeffs = series_coefficients();
        let theta2 = theta * theta;
        let mut power = theta * theta2;
        let mut sum = 0.0;
        for c in coeffs {
            let term = c * power;
            sum += term;
            if term < self.tolerance {
                break;
            }
            power *= theta2;
        }
        theta - theta * theta.ln() + sum
    }
}

/// `𝓛(x)` with the default evaluator.
pub fn lobachevsky(x: f64) -> Result<f64> {
    Lobachevsky::default().eval(x)
}

/// `ζ(2k) / (k (2k+1) (2π)^{2k})` for `k = 1..=MAX_TERMS`.
fn series_coefficients() -> &'static [f64; MAX_TERMS] {
    static COEFFS: OnceLock<[f64; MAX_TERMS]> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let mut out = [0.0; MAX_TERMS];
        let two_pi_sq = 4.0 * PI * PI;
        let mut scale = 1.0;
        for (i, c) in out.iter_mut().enumerate() {
            let k = (i + 1) as f64;
            scale /= two_pi_sq;
            *c = zeta_even(i + 1) * scale / (k * (2.0 * k + 1.0));
        }
        out
    })
}

/// `ζ(2k)` for `k ≥ 1`.
fn zeta_even(k: usize) -> f64 {
    match k {
        1 => PI * PI / 6.0,
        2 => PI.powi(4) / 90.0,
        _ => {
            // Direct sum to n = 64, smallest terms first, plus the
            // Euler–Maclaurin tail n^(1-s)/(s-1) - n^-s/2 + s n^(-s-1)/12.
            let s = 2 * k as i32;
            let n = 64;
            let nf = n as f64;
            let tail = nf.powi(1 - s) / (s as f64 - 1.0) - 0.5 * nf.powi(-s)
                + s as f64 * nf.powi(-s - 1) / 12.0;
            (1..=n).rev().fold(tail, |acc, j| acc + (j as f64).powi(-s))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn zero_and_half_pi() {
        assert_eq!(lobachevsky(0.0).unwrap(), 0.0);
        assert!(lobachevsky(FRAC_PI_2).unwrap().abs() < 1e-15);
        assert!(lobachevsky(PI).unwrap().abs() < 1e-15);
    }

    #[test]
    fn maximum_at_pi_over_six() {
        // 𝓛(π/6) = (3/2)·𝓛(π/3) = Cl₂(π/3)/2; Cl₂(π/3) = 1.0149416064096536...
        let v = lobachevsky(PI / 6.0).unwrap();
        assert!((v - 1.014_941_606_409_653_6 / 2.0).abs() < 1e-14, "{v}");
        let h = 1e-4;
        assert!(lobachevsky(PI / 6.0 + h).unwrap() < v);
        assert!(lobachevsky(PI / 6.0 - h).unwrap() < v);
    }

    #[test]
    fn rejects_non_finite() {
        assert_eq!(lobachevsky(f64::NAN).unwrap_err().to_string(), "non-finite input: NaN");
        assert!(lobachevsky(f64::INFINITY).is_err());
    }

    #[test]
    fn tolerance_bound() {
        assert!(Lobachevsky::with_tolerance(1e-6).is_err());
        assert!(Lobachevsky::with_tolerance(1e-13).is_ok());
    }

    #[test]
    fn deterministic() {
        let a = lobachevsky(0.123456).unwrap();
        let b = lobachevsky(0.123456).unwrap();
        assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn small_arguments() {
        // 𝓛(x) ≈ x - x ln(2x) + (2x)³/144 near zero
        let x = 1e-6_f64;
        let approx = x - x * (2.0 * x).ln();
        assert!((lobachevsky(x).unwrap() - approx).abs() < 1e-17);
    }
}
