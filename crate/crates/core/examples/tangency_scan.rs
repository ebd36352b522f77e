//! Densest packing of a frustum whose maximal balls overlap: slide the
//! tangency point along the axis and keep the best pair.
//!
//! ```text
//! cargo run --example tangency_scan -- 5 4 4
//! ```

use hyphor::orthoscheme::{build_scheme, realize};
use hyphor::packing3d::{density, min_horo_param, optimal_density};

fn main() -> hyphor::Result<()> {
    let args: Vec<f64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("numeric p q r"))
        .collect();
    let (p, q, r) = match args[..] {
        [p, q, r] => (p, q, r),
        _ => (5.0, 4.0, 4.0),
    };
    let f = realize(&build_scheme(p, q, r)?)?;
    let s_min = min_horo_param(&f)?;
    let h_max = f.max_hyperball_height();
    println!("[{p}, {q}, {r}]  s_min = {s_min:.10}  h_max = {h_max:.10}  tanh(h_max) = {:.10}", h_max.tanh());

    let h_lo = s_min.atanh();
    if h_lo < h_max {
        println!("{:>10} {:>12}", "zeta", "delta");
        for i in 0..=10 {
            let zeta = (h_max - h_lo) * i as f64 / 10.0;
            let h = h_lo + zeta;
            println!("{zeta:>10.6} {:>12.8}", density(&f, h.tanh().max(s_min), h)?.delta);
        }
    }

    let best = optimal_density(&f)?;
    match best.scan {
        Some(scan) => println!(
            "best: zeta* = {:.6} of {:.6} (right end: {}), delta = {:.8}",
            scan.zeta_star,
            scan.zeta_max,
            scan.at_right_endpoint(),
            best.delta
        ),
        None => println!("maximal balls are disjoint, delta = {:.8}", best.delta),
    }
    Ok(())
}
