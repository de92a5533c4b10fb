//! Check the closed form `grundy = y XOR z` against the engine for several
//! width functions, and tie the outcome to the block condition: the families
//! that satisfy it verify cleanly, the one that violates it does not.
//!
//!     cargo run --example verify_closed_form

use grundy_bar::{check_condition_a, verify_formula, Formula, WidthFunction};

fn main() {
    let families = [
        ("floor(t/2)", WidthFunction::floor_div(2, 512).unwrap()),
        ("floor(t/4)", WidthFunction::floor_div(4, 512).unwrap()),
        ("floor(t/6)", WidthFunction::floor_div(6, 512).unwrap()),
        ("log2 step", WidthFunction::log2_step(512)),
        ("linear t", WidthFunction::linear(1, 512).unwrap()),
    ];

    println!("{:<12} {:>10} {:>8} {:>10}", "function", "condition", "checked", "mismatches");
    for (label, f) in families {
        let cond = check_condition_a(&f, 256).unwrap();
        let y_max = f.eval_width(128).unwrap();
        let report = verify_formula(&f, Formula::Plain, y_max, 128).unwrap();
        println!(
            "{:<12} {:>10} {:>8} {:>10}",
            label,
            if cond.holds { "holds" } else { "fails" },
            report.positions_checked,
            report.mismatches,
        );
    }
}
