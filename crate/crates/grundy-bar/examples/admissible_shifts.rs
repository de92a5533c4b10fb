//! Enumerate every shift that preserves the closed form for the floor-width
//! families, three independent ways: the bitwise carry test, the power-form
//! factorization, and the closed description `m * 2^v` with `m < 2k`.
//!
//!     cargo run --example admissible_shifts

use grundy_bar::{admissible_shifts_floor, check_shift_admissible, power_form, WidthFunction};

fn main() {
    for k in 1..=4u32 {
        let h = WidthFunction::floor_div(2 * k, 512).unwrap();

        let by_carry: Vec<u32> = (1..=64)
            .filter(|&s| check_shift_admissible(&h, s).unwrap())
            .collect();
        // Some((u, v)) with s = u * 2^v, u odd, exactly when 2^v > h(s).
        let by_power_form: Vec<u32> = (1..=64)
            .filter(|&s| power_form(s, h.eval_width(s).unwrap()).is_some())
            .collect();
        let enumerated = admissible_shifts_floor(k, 64);

        assert_eq!(by_carry, by_power_form);
        assert_eq!(by_carry, enumerated);

        let words: Vec<String> = enumerated.iter().map(u32::to_string).collect();
        println!("divisor {:>2}: {}", 2 * k, words.join(" "));
    }
}
