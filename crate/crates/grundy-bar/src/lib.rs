//! Grundy values and winning strategies for step chocolate-bar games.
//!
//! A bar `CB(f, y, z)` has `z + 1` columns; column `i` holds
//! `min(f(i), y) + 1` squares, and the bottom-left square is bitter. A move
//! cuts away a full slab from the top or the right, and the player who takes
//! the last non-bitter square wins. This crate computes Grundy values of such
//! bars by backward induction, decides when the closed forms `y XOR z` and
//! `(y XOR (z + s)) - s` apply, enumerates the shift amounts that preserve
//! them, and classifies strip+bar sums with full winning-move lists.
//!
//! Entry points by capability:
//!
//! - [`bar::WidthFunction`]: width profiles (floor divisions, a log2 step,
//!   linear, tabulated, shifted), move generation, ASCII rendering.
//! - [`grundy::GrundyTable`]: memoized Grundy values with on-disk
//!   persistence keyed by function fingerprint.
//! - [`grundy::verify_formula`]: engine-vs-closed-form comparison reports.
//! - [`conditions`]: the block condition on width functions, shift
//!   admissibility, and the shift/unshift constructions.
//! - [`solver`]: P/N classification of strip+bar sums by formula or search,
//!   plus winning-move extraction.
//! - [`cli`]: the `grundy-bar` binary's commands; also usable in-process.
//!
//! The `examples/` directory has one runnable program per capability; start
//! with `cargo run --example grundy_values`.

pub mod bar;
pub mod cli;
pub mod conditions;
pub mod error;
pub mod grundy;
pub mod solver;

pub use bar::{FunctionSpec, Position2, Position3, WidthFunction, DEFAULT_DOMAIN_MAX};
pub use conditions::{
    admissible_shifts_floor, check_condition_a, check_shift_admissible, power_form, shift,
    unshift, ConditionCounterexample, ConditionReport, ConditionWindow,
};
pub use error::Error;
pub use grundy::{
    formula_plain, formula_shifted, grundy_sum, mex, nim_sum, verify_formula, verify_with_table,
    Formula, GrundyTable, Mismatch, ReportBounds, VerificationReport,
};
pub use solver::{
    classify3, classify3_search, winning_moves2, winning_moves3, Outcome, SearchTable,
    SolveReport,
};
