//! Density of the [p,3,6] frustum packings for real p in (6,7) and the
//! location of its maximum.
//!
//! ```text
//! cargo run --release --example optimum_real_p
//! ```

use hyphor::optimize::find_p_opt;
use hyphor::packing3d::optimize_family_36;
use hyphor::report::BF_BOUND;

fn main() -> hyphor::Result<()> {
    for i in 0..=10 {
        let p = 6.01 + 0.098 * i as f64;
        println!("p = {p:.3}  delta = {:.8}", optimize_family_36(p)?.delta);
    }
    let r = find_p_opt()?;
    println!();
    println!("argmax in [{:.2}, {:.2}], p* = {:.6}", r.p_interval[0], r.p_interval[1], r.p_star);
    println!("delta max = {:.8} (horoball bound {BF_BOUND})", r.delta_max);
    Ok(())
}
