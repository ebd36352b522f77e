//! Realize a frustum orthoscheme in the projective model and print its
//! vertices, Gram data and recovered dihedral angles.
//!
//! ```text
//! cargo run --example orthoscheme_realize -- 7 3 6
//! ```

use std::f64::consts::PI;

use hyphor::balls::horo_param_through;
use hyphor::orthoscheme::{build_scheme, realize, truncated_edge_length};

fn main() -> hyphor::Result<()> {
    let args: Vec<f64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("numeric p q r"))
        .collect();
    let (p, q, r) = match args[..] {
        [p, q, r] => (p, q, r),
        _ => (7.0, 3.0, 6.0),
    };
    let scheme = build_scheme(p, q, r)?;
    println!("[{p}, {q}, {r}]");
    println!("h_ij =");
    for i in 0..4 {
        let row: Vec<String> = (0..4).map(|j| format!("{:>12.8}", scheme.h(i, j))).collect();
        println!("  {}", row.join(" "));
    }

    let f = realize(&scheme)?;
    println!("x = {:.8}  y = {:.8}  z1 = {:.8}  z2 = {:.8}", f.x, f.y, f.z1, f.z2);
    for (name, v) in ["A0", "A1", "A2"].iter().zip(f.a()) {
        println!("{name} = {:?}", v.coords());
    }
    for (name, v) in ["P0", "P1", "P2"].iter().zip(f.p()) {
        println!("{name} = {:?}", v.coords());
    }

    let [a01, a12, a23] = f.dihedral_angles()?;
    println!("dihedral angles = pi/{:.10}, pi/{:.10}, pi/{:.10}", PI / a01, PI / a12, PI / a23);
    println!("d(P1,A1) = {:.12}", truncated_edge_length(&scheme, 1)?);
    println!("d(P2,A2) = {:.12}", f.max_hyperball_height());
    println!("s(A1)    = {:.12}", horo_param_through(&f.a()[1])?);
    println!("area P0P1P2 = {:.12}", f.base_area());
    println!("volume   = {:.12}", f.volume());
    Ok(())
}
