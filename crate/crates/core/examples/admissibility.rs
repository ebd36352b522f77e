//! Check a horoball/hyperball pair against the faces of its frustum and
//! against each other.
//!
//! ```text
//! cargo run --example admissibility -- 7 3 6 0.9 1.0
//! ```

use hyphor::balls::check_admissibility;
use hyphor::orthoscheme::{build_scheme, realize};
use hyphor::packing3d::min_horo_param;

fn main() -> hyphor::Result<()> {
    let args: Vec<f64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("numeric arguments"))
        .collect();
    let (p, q, r) = match args[..] {
        [p, q, r, ..] => (p, q, r),
        _ => (7.0, 3.0, 6.0),
    };
    let f = realize(&build_scheme(p, q, r)?)?;
    let s = args.get(3).copied().unwrap_or(min_horo_param(&f)?);
    let h = args.get(4).copied().unwrap_or_else(|| f.max_hyperball_height());

    let rep = check_admissibility(&f, s, h)?;
    println!("[{p}, {q}, {r}]  s = {s:.10}  h = {h:.10}");
    let names = ["horoball vs faces", "hyperball vs top", "balls disjoint"];
    let flags = [rep.horoball_ok, rep.hyperball_ok, rep.disjoint];
    for i in 0..3 {
        println!(
            "{:<18} {:<5} clearance {:+.3e}  sampled {:+.3e}",
            names[i], flags[i], rep.min_clearances[i], rep.sampled_gaps[i]
        );
    }
    Ok(())
}
