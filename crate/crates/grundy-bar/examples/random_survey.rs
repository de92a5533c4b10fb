//! Survey random monotone width tables: how often does the block condition
//! hold, and does its verdict line up with a brute-force sweep of the closed
//! form? Uses a fixed seed, so two runs print the same numbers.
//!
//! The condition is exact at unbounded depth. At bounded depth one asymmetry
//! remains: a table can fail the condition somewhere beyond the sweep while
//! still verifying clean inside it. The reverse, holding the condition while
//! mismatching the formula, can never happen and is counted as a violation.
//!
//!     cargo run --example random_survey

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use grundy_bar::{check_condition_a, verify_formula, Formula, WidthFunction};

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut holds_clean = 0u32;
    let mut fails_mismatch = 0u32;
    let mut fails_clean = 0u32;
    let mut violations = 0u32;

    const FUNCS: u32 = 100;
    for fi in 0..FUNCS {
        // Monotone tables on [0,64], constant beyond. Every fourth is a
        // randomly capped floor division, a shape that can pass the
        // condition; free-form increment tables essentially never do.
        let mut vals: Vec<u32>;
        if fi % 4 == 0 {
            let d = 2 * rng.gen_range(1..=4u32);
            let cap = rng.gen_range(1..=20u32);
            vals = (0..=64u32).map(|t| (t / d).min(cap)).collect();
        } else {
            let mut v: u32 = rng.gen_range(0..=1);
            vals = vec![v];
            for _ in 0..64 {
                v += [0, 0, 0, 1, 1, 2][rng.gen_range(0..6usize)];
                vals.push(v);
            }
        }
        let last = *vals.last().unwrap();
        vals.resize(257, last);
        let f = WidthFunction::tabulated(vals).unwrap();

        let cond = check_condition_a(&f, 256).unwrap();
        let report = verify_formula(&f, Formula::Plain, f.eval_width(64).unwrap(), 64).unwrap();

        match (cond.holds, report.mismatches == 0) {
            (true, true) => holds_clean += 1,
            (false, false) => fails_mismatch += 1,
            (false, true) => fails_clean += 1,
            (true, false) => {
                violations += 1;
                println!("violation on {:?}", f.spec());
            }
        }
    }

    println!("functions surveyed:                  {FUNCS}");
    println!("condition holds, formula clean:      {holds_clean}");
    println!("condition fails, formula mismatches: {fails_mismatch}");
    println!("condition fails beyond the sweep:    {fails_clean}");
    println!("violations (must stay zero):         {violations}");
}
