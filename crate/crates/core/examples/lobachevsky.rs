//! The Lobachevsky function on a grid, with its symmetries.
//!
//! ```text
//! cargo run --example lobachevsky
//! ```

use std::f64::consts::PI;

use hyphor::special::lobachevsky;

fn main() -> hyphor::Result<()> {
    println!("{:>10} {:>22}", "x/pi", "L(x)");
    for i in 0..=12 {
        let x = PI * i as f64 / 12.0;
        println!("{:>10.5} {:>22.17}", x / PI, lobachevsky(x)?);
    }
    let x = 0.4;
    println!();
    println!("L(x) + L(-x)           = {:.2e}", lobachevsky(x)? + lobachevsky(-x)?);
    println!("L(x + pi) - L(x)       = {:.2e}", lobachevsky(x + PI)? - lobachevsky(x)?);
    let dup = lobachevsky(2.0 * x)? - 2.0 * (lobachevsky(x)? + lobachevsky(x + PI / 2.0)?);
    println!("L(2x) - 2L(x) - 2L(x+pi/2) = {dup:.2e}");
    // maximum
    println!("L(pi/6) = {:.17}", lobachevsky(PI / 6.0)?);
    Ok(())
}
