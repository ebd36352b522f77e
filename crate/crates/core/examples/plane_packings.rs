//! Hyp-hor packings of the plane from Lambert quadrilaterals: the two
//! boundary types, the horocycle-only family and a scan of the full
//! parameter region.
//!
//! ```text
//! cargo run --example plane_packings
//! ```

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use hyphor::packing2d::{
    density_horocycle_only, density_type1, density_type2, scan_general, PlanePacking,
};

fn main() -> hyphor::Result<()> {
    println!("{:>6} {:>12} {:>12} {:>12}", "a", "type 1", "type 2", "horo only");
    for i in 1..20 {
        let a = i as f64 / 20.0;
        let t2 = if a < FRAC_1_SQRT_2 { format!("{:>12.8}", density_type2(a)?) } else { format!("{:>12}", "-") };
        let ho = if a >= FRAC_1_SQRT_2 { format!("{:>12.8}", density_horocycle_only(a)?) } else { format!("{:>12}", "-") };
        println!("{a:>6.2} {:>12.8} {t2} {ho}", density_type1(a)?);
    }
    println!("horocycles only at a = 1/sqrt2: {:.8}", density_horocycle_only(FRAC_1_SQRT_2)?);
    println!("3/pi = {:.8}", 3.0 / PI);

    let r = scan_general(400)?;
    println!();
    println!(
        "scan 400x400: a* = {:.5}, y* = {:.5}, delta* = {:.8}, on boundary: {}",
        r.a_star, r.y_star, r.delta_star, r.on_boundary
    );

    // the closed forms take the hypercycle base as a; the true length is artanh(a)
    let p = PlanePacking::type1(0.5)?;
    println!(
        "a = 0.5 type 1: closed form {:.8}, from the geometry {:.8}",
        p.density()?,
        p.density_by_construction()?
    );
    Ok(())
}
