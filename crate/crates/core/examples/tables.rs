//! Density tables of the three frustum orthoscheme families.
//!
//! ```text
//! cargo run --example tables
//! ```

use hyphor::orthoscheme::Family;
use hyphor::report::table_rows;

fn main() -> hyphor::Result<()> {
    for (family, ps) in [
        (Family::F44, [5.0, 6.0, 7.0]),
        (Family::F63, [4.0, 5.0, 6.0]),
        (Family::F36, [7.0, 8.0, 9.0]),
    ] {
        println!("family {family}");
        println!("{:>4} {:>12} {:>12} {:>12}", "p", "vol F", "vol pieces", "delta");
        for row in table_rows(family, &ps)? {
            println!(
                "{:>4} {:>12.8} {:>12.8} {:>12.8}",
                row.p, row.vol_f, row.vol_pieces, row.delta
            );
        }
        println!();
    }
    Ok(())
}
