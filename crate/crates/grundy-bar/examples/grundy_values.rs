//! Compute Grundy values by backward induction and print a small table.
//! For width functions that pass the block condition the value at `{y, z}`
//! is exactly `y XOR z`; the rightmost column shows that reference.
//!
//!     cargo run --example grundy_values

use grundy_bar::{GrundyTable, Position2, WidthFunction};

fn main() {
    let f = WidthFunction::floor_div(2, 64).unwrap();
    let table = GrundyTable::build(&f, 8, 16).unwrap();

    println!("half-width bar, canonical positions up to z = 16");
    println!("{:>4} {:>4} {:>7} {:>7}", "y", "z", "grundy", "y^z");
    for (p, g) in table.rows() {
        println!("{:>4} {:>4} {:>7} {:>7}", p.y, p.z, g, p.y ^ p.z);
    }

    // Values quoted throughout the test suite.
    let f4 = WidthFunction::floor_div(4, 64).unwrap();
    let t4 = GrundyTable::build(&f4, 3, 13).unwrap();
    println!();
    println!(
        "quarter-width bar at (3,13): {}",
        t4.grundy(Position2::new(3, 13)).unwrap()
    );
    println!(
        "half-width bar at (4,9):     {}",
        table.grundy(Position2::new(4, 9)).unwrap()
    );
    println!(
        "half-width bar at (2,9):     {}",
        table.grundy(Position2::new(2, 9)).unwrap()
    );
}
