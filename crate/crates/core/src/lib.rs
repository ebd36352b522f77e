//! Densities of mixed horoball/hyperball ("hyp-hor") packings generated by
//! simple frustum Coxeter orthoschemes in the hyperbolic plane and in
//! hyperbolic 3-space.
//!
//! Everything is computed in the Beltrami–Cayley–Klein projective model,
//! with homogeneous coordinates in Lorentz space of signature `(1, n)`.
//!
//! The crate is organised bottom-up:
//!
//! - [`lorentz`]: the bilinear form, point classification, distances, polarity.
//! - [`special`]: the Lobachevsky function.
//! - [`orthoscheme`]: Coxeter–Schläfli data, realization of the frustum
//!   orthoscheme in model coordinates, fundamental-domain volumes.
//! - [`balls`]: horoball and hyperball pieces clipped to the fundamental
//!   domain, and admissibility checks.
//! - [`packing2d`]: the Lambert-quadrilateral family in the plane.
//! - [`packing3d`]: the `[p,4,4]`, `[p,6,3]` and `[p,3,6]` families.
//! - [`optimize`]: grid + golden-section maximization and the real-parameter
//!   optimum of the `[p,3,6]` family.
//! - [`montecarlo`]: seeded Monte-Carlo volume estimates used to cross-check
//!   the closed-form volumes.
//! - [`report`]: CSV/JSON rendering behind the `hyphor` binary.
//!
//! ```
//! use hyphor::packing3d::optimize_family_36;
//!
//! let best = optimize_family_36(7.0).unwrap();
//! assert!((best.delta - 0.83266882).abs() < 1e-6);
//! ```

// `!(x > 0.0)` and friends reject NaN along with the out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod balls;
mod error;
pub mod lorentz;
pub mod montecarlo;
pub mod optimize;
pub mod orthoscheme;
pub mod packing2d;
pub mod packing3d;
pub mod report;
pub mod special;

pub use error::{Error, Result};
