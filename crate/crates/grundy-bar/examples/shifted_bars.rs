//! Slide a width function left by `s` and the Grundy value becomes
//! `(y XOR (z+s)) - s`, provided adding `s` carries into no bit below its
//! 2-power part up to height `h(s)`. This demonstrates one admissible and
//! one inadmissible shift of the quarter-width bar.
//!
//!     cargo run --example shifted_bars

use grundy_bar::{
    check_shift_admissible, formula_shifted, shift, verify_formula, Formula, GrundyTable,
    Position2, WidthFunction,
};

fn main() {
    let h = WidthFunction::floor_div(4, 512).unwrap();

    // 12 = 3 * 2^2 keeps its low bits clear of h(12) = 3; 5 does not.
    for s in [12u32, 5] {
        let ok = check_shift_admissible(&h, s).unwrap();
        println!(
            "s = {s}: h(s) = {}, {}",
            h.eval_width(s).unwrap(),
            if ok { "admissible" } else { "inadmissible" }
        );
        let g = shift(&h, s).unwrap();
        let report =
            verify_formula(&g, Formula::Shifted { s }, g.eval_width(128).unwrap(), 128).unwrap();
        println!(
            "  shifted formula: {} positions, {} mismatches",
            report.positions_checked, report.mismatches
        );
    }

    // Worked position on the admissible shift.
    let g = shift(&h, 12).unwrap();
    let t = GrundyTable::build(&g, 8, 23).unwrap();
    println!(
        "shift 12, position (8,23): engine {}, formula {}",
        t.grundy(Position2::new(8, 23)).unwrap(),
        formula_shifted(8, 23, 12).unwrap(),
    );
}
