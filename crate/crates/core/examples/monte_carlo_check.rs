//! Cross-check the exact volumes of [7,3,6] against seeded Monte-Carlo
//! integration.
//!
//! ```text
//! cargo run --release --example monte_carlo_check -- 1000000
//! ```

use hyphor::balls::{horoball_piece_volume, hyperball_piece_volume};
use hyphor::montecarlo::{estimate_volume, Region};
use hyphor::orthoscheme::Family;
use hyphor::packing3d::{frustum, min_horo_param};

fn main() -> hyphor::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("sample count"))
        .unwrap_or(1_000_000);
    let f = frustum(Family::F36, 7.0)?;
    let s = min_horo_param(&f)?;
    let h = f.max_hyperball_height();
    for (name, region, exact) in [
        ("frustum", Region::Domain, f.volume()),
        ("horoball piece", Region::Horoball(s), horoball_piece_volume(&f, s)?),
        ("hyperball piece", Region::Hyperball(h), hyperball_piece_volume(f.base_area(), h, 3)?),
    ] {
        let est = estimate_volume(&f, region, n, 2024)?;
        println!(
            "{name:<16} exact {exact:.8}  mc {:.8} +- {:.1e}  z = {:+.2}",
            est.mean,
            est.std_error,
            est.z_score(exact)
        );
    }
    Ok(())
}
