//! Classify strip+bar sums and extract winning moves. A position `(x, y, z)`
//! is a single nim heap of size `x` played alongside a bar `(y, z)`; when
//! the bar's width function passes the block condition, the sum is a loss
//! for the mover exactly when `x XOR y XOR z = 0`.
//!
//!     cargo run --example solve_triples

use grundy_bar::{classify3, classify3_search, winning_moves3, Position3, WidthFunction};

fn main() {
    let h = WidthFunction::floor_div(4, 256).unwrap();

    let positions = [
        Position3::new(14, 3, 13),
        Position3::new(15, 3, 13),
        Position3::new(0, 2, 8),
        Position3::new(10, 2, 8),
    ];

    for p in positions {
        let by_formula = classify3(&h, p).unwrap();
        let by_search = classify3_search(&h, p).unwrap();
        assert_eq!(by_formula, by_search);

        let moves = winning_moves3(&h, p).unwrap();
        let listing = if moves.is_empty() {
            "none (every move hands the win away)".to_string()
        } else {
            moves
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        };
        println!("{p}: {by_formula}  winning moves: {listing}");
    }
}
