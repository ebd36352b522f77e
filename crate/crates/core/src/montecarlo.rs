//! Seeded Monte-Carlo estimates of volumes inside a realized frustum.
//!
//! Sampling happens in the upper half-space chart with the ideal vertex
//! `A₀` at infinity, in the variables `(u₁, u₂, w = 1/z²)`. There the
//! volume element `du₁ du₂ dz / z³` is the constant `½ du₁ du₂ dw`, so each
//! estimate is a hit ratio times a box volume and has finite variance even
//! though the domain reaches the ideal vertex.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::balls::Hyperball;
use crate::lorentz::{from_cusp_chart, to_cusp_chart};
use crate::orthoscheme::FrustumOrthoscheme;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct McEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub samples: usize,
}

impl McEstimate {
    /// Deviation of `exact` from the estimate in standard errors.
    pub fn z_score(&self, exact: f64) -> f64 {
        (self.mean - exact) / self.std_error
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Region {
    /// The whole frustum.
    Domain,
    /// The frustum intersected with the horoball of parameter `s`.
    Horoball(f64),
    /// The frustum intersected with the hyperball of height `h`.
    Hyperball(f64),
}

struct Sampler {
    u_lo: [f64; 2],
    u_hi: [f64; 2],
    w_max: f64,
}

impl Sampler {
    fn new(f: &FrustumOrthoscheme) -> Result<Self> {
        let mut u_lo = [f64::INFINITY; 2];
        let mut u_hi = [f64::NEG_INFINITY; 2];
        for v in [&f.p()[0], &f.a()[1], &f.a()[2]] {
            let c = to_cusp_chart(v)?;
            for k in 0..2 {
                u_lo[k] = u_lo[k].min(c[k]);
                u_hi[k] = u_hi[k].max(c[k]);
            }
        }
        // Lowest point of the two bottom faces, found on a boundary grid.
        let mut z_min = f64::INFINITY;
        let (p, a) = (f.p(), f.a());
        let edges = [
            (&p[0], &p[1]),
            (&p[1], &p[2]),
            (&p[2], &p[0]),
            (&p[1], &a[1]),
            (&p[2], &a[2]),
            (&a[1], &a[2]),
        ];
        for (x, y) in edges {
            for i in 0..=200 {
                let t = i as f64 / 200.0;
                let q = x.affine().unwrap().combine(1.0 - t, &y.affine().unwrap(), t)?;
                z_min = z_min.min(to_cusp_chart(&q)?[2]);
            }
        }
        Ok(Self {
            u_lo,
            u_hi,
            w_max: 1.05 / (z_min * z_min),
        })
    }

    fn base_area(&self) -> f64 {
        (self.u_hi[0] - self.u_lo[0]) * (self.u_hi[1] - self.u_lo[1])
    }
}

/// Monte-Carlo volume of `region` with `samples` points from a ChaCha8
/// stream seeded by `seed`.
pub fn estimate_volume(
    f: &FrustumOrthoscheme,
    region: Region,
    samples: usize,
    seed: u64,
) -> Result<McEstimate> {
    if samples < 2 {
        return Err(Error::Invalid("need at least two samples".into()));
    }
    let sampler = Sampler::new(f)?;
    let faces = f.faces().all();
    let hyper = match region {
        Region::Hyperball(h) => Some(Hyperball::over(f, h)?),
        _ => None,
    };
    let w_cap = match region {
        Region::Horoball(s) => {
            if !(s > -1.0 && s < 1.0) {
                return Err(Error::domain("s", s, "(-1, 1)"));
            }
            // horosphere through (1,0,0,s) is z = √((1+s)/(1-s))
            ((1.0 - s) / (1.0 + s)).min(sampler.w_max)
        }
        _ => sampler.w_max,
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0usize;
    for _ in 0..samples {
        let u1 = sampler.u_lo[0] + rng.random::<f64>() * (sampler.u_hi[0] - sampler.u_lo[0]);
        let u2 = sampler.u_lo[1] + rng.random::<f64>() * (sampler.u_hi[1] - sampler.u_lo[1]);
        let w = (1.0 - rng.random::<f64>()) * w_cap;
        let x = from_cusp_chart([u1, u2, w.sqrt().recip()])?;
        if faces.iter().any(|face| face.eval(&x) > 0.0) {
            continue;
        }
        if let Some(hb) = &hyper {
            if hb.signed_distance(&x)? > 0.0 {
                continue;
            }
        }
        hits += 1;
    }
    let box_volume = 0.5 * sampler.base_area() * w_cap;
    let ratio = hits as f64 / samples as f64;
    Ok(McEstimate {
        mean: box_volume * ratio,
        std_error: box_volume * (ratio * (1.0 - ratio) / samples as f64).sqrt(),
        samples,
    })
}
