//! When a width function grows too fast, `y XOR z` stops being the Grundy
//! value. This walks the full-diagonal bar `f(t) = t`: the block condition
//! fails immediately, and the engine exhibits a concrete disagreeing
//! position.
//!
//!     cargo run --example find_counterexample

use grundy_bar::{check_condition_a, verify_formula, Formula, GrundyTable, Position2, WidthFunction};

fn main() {
    let f = WidthFunction::linear(1, 100).unwrap();

    let cond = check_condition_a(&f, 16).unwrap();
    match cond.counterexample {
        Some(ce) => println!(
            "block condition fails: lengths {} and {} share their 2^{} block,\n\
             but the widths f({})={} and f({})={} land in different 2^{} blocks",
            ce.z,
            ce.z_prime,
            ce.i,
            ce.z,
            f.eval_width(ce.z).unwrap(),
            ce.z_prime,
            f.eval_width(ce.z_prime).unwrap(),
            ce.i - 1,
        ),
        None => println!("block condition holds up to z = {}", cond.window.z_max),
    }

    let report = verify_formula(&f, Formula::Plain, 8, 16).unwrap();
    println!(
        "formula sweep: {} positions, {} mismatches",
        report.positions_checked, report.mismatches
    );
    if let Some(m) = report.first_mismatch {
        println!(
            "first mismatch at ({},{}): formula {} vs engine {}",
            m.y, m.z, m.formula_value, m.engine_value
        );
    }

    // The classic witness: a square bar position whose value is far from 0.
    let t = GrundyTable::build(&f, 5, 5).unwrap();
    let g = t.grundy(Position2::new(5, 5)).unwrap();
    println!("square bar at (5,5): grundy {} (5 XOR 5 = 0)", g);
}
