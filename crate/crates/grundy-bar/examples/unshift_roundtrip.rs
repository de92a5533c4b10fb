//! Shifting has an inverse: extend the shifted function back to the right by
//! holding its start value. The recovered function satisfies the plain
//! `y XOR z` form again, and shifting it reproduces the original exactly.
//!
//!     cargo run --example unshift_roundtrip

use grundy_bar::{shift, unshift, verify_formula, Formula, WidthFunction};

fn main() {
    let h = WidthFunction::floor_div(4, 512).unwrap();
    let s = 12;

    let g = shift(&h, s).unwrap();
    let u = unshift(&g, s);

    print!("g (shifted by {s}): ");
    print_prefix(&g, 20);
    print!("u (unshifted):     ");
    print_prefix(&u, 20);

    let report = verify_formula(&u, Formula::Plain, u.eval_width(128).unwrap(), 128).unwrap();
    println!(
        "plain formula on u: {} positions, {} mismatches",
        report.positions_checked, report.mismatches
    );

    let rt = shift(&u, s).unwrap();
    let intact = (0..=g.domain_max())
        .all(|z| rt.eval_width(z).unwrap() == g.eval_width(z).unwrap());
    println!(
        "shift(unshift(g)) == g on the whole domain: {}",
        if intact { "yes" } else { "no" }
    );
}

fn print_prefix(f: &WidthFunction, n: u32) {
    let vals: Vec<String> = (0..=n)
        .map(|z| f.eval_width(z).unwrap().to_string())
        .collect();
    println!("{} ...", vals.join(" "));
}
