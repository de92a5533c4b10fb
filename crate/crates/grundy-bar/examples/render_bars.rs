//! Draw a few chocolate bars as ASCII art, tallest row first. `B` marks the
//! bitter square that can never be taken; a cut removes whole columns from
//! the right or whole rows from the top.
//!
//!     cargo run --example render_bars

use grundy_bar::{Position2, WidthFunction};

fn main() {
    let shapes = [
        ("quarter steps, y=3, z=13", WidthFunction::floor_div(4, 64).unwrap(), 3, 13),
        ("half steps, y=4, z=9", WidthFunction::floor_div(2, 64).unwrap(), 4, 9),
        ("log2 steps, y=6, z=20", WidthFunction::log2_step(64), 6, 20),
        ("linear, y=5, z=5", WidthFunction::linear(1, 64).unwrap(), 5, 5),
    ];
    for (label, f, y, z) in shapes {
        println!("{label}");
        print!("{}", f.render_ascii(Position2::new(y, z)).unwrap());
        println!();
    }
}
