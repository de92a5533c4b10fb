//! The block-compatibility condition on width functions, shift
//! admissibility, the power-form characterization, and the shift and unshift
//! transforms.
//!
//! The block condition is what separates width functions whose bars have
//! Grundy value `y XOR z` from those that do not: whenever two lengths share
//! a quotient by `2^i`, their widths must share a quotient by `2^(i-1)`.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

use crate::bar::WidthFunction;
use crate::error::Error;

/// The window a condition check actually covered. The condition itself
/// quantifies over all lengths; a report only ever speaks for its window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionWindow {
    pub z_max: u32,
    pub i_max: u32,
}

/// A witness pair: `z < z_prime` share their quotient by `2^i` while the
/// widths `h(z)`, `h(z_prime)` differ in their quotient by `2^(i-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionCounterexample {
    pub i: u32,
    pub z: u32,
    pub z_prime: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub holds: bool,
    pub window: ConditionWindow,
    pub counterexample: Option<ConditionCounterexample>,
}

/// Checks the block condition for all `1 <= i <= ceil(log2(z_max + 1))` and
/// all pairs `0 <= z < z_prime <= z_max`, reporting the first counterexample
/// in (i, z, z_prime)-lexicographic order.
///
/// Larger `i` collapse the whole window into a single block, so the bound on
/// `i` loses nothing for this window; the report records it regardless.
///
/// Monotonicity keeps the scan near-linear per `i`: within an aligned
/// `2^i`-block the quotients `h(t) >> (i-1)` are non-decreasing, so a block
/// violates exactly when first and last quotient differ, and the earliest
/// witness pair is the block start together with the first index whose
/// quotient moves.
pub fn check_condition_a(h: &WidthFunction, z_max: u32) -> Result<ConditionReport, Error> {
    if z_max > h.domain_max() {
        return Err(Error::DomainExceeded {
            t: z_max,
            max: h.domain_max(),
        });
    }
    let i_max = if z_max == 0 {
        0
    } else {
        32 - z_max.leading_zeros()
    };
    let window = ConditionWindow { z_max, i_max };

    let mut widths = Vec::with_capacity(z_max as usize + 1);
    for t in 0..=z_max {
        widths.push(h.eval_width(t)?);
    }

    for i in 1..=i_max {
        let quot = |t: u32| widths[t as usize] >> (i - 1);
        let block = 1u64 << i;
        let mut start = 0u64;
        while start <= u64::from(z_max) {
            let first = start as u32;
            let last = (start + block - 1).min(u64::from(z_max)) as u32;
            if quot(first) != quot(last) {
                let z_prime = (first + 1..=last)
                    .find(|&t| quot(t) != quot(first))
                    .expect("some index in the block crosses the boundary");
                return Ok(ConditionReport {
                    holds: false,
                    window,
                    counterexample: Some(ConditionCounterexample {
                        i,
                        z: first,
                        z_prime,
                    }),
                });
            }
            start += block;
        }
    }
    Ok(ConditionReport {
        holds: true,
        window,
        counterexample: None,
    })
}

/// True when `i XOR s = i + s` for every `i` up to `h(s)`: the shift `s`
/// keeps clear of the bits the width can occupy.
pub fn check_shift_admissible(h: &WidthFunction, s: u32) -> Result<bool, Error> {
    let width = h.eval_width(s)?;
    Ok((0..=u64::from(width)).all(|i| i ^ u64::from(s) == i + u64::from(s)))
}

/// Decomposes `s = u * 2^v` with `u` odd, provided `2^v > p`; `None`
/// otherwise. Presence is equivalent to `i XOR s = i + s` holding for all
/// `i <= p`.
pub fn power_form(s: u32, p: u32) -> Option<(u32, u32)> {
    if s == 0 {
        return None;
    }
    let v = s.trailing_zeros();
    if (1u64 << v) > u64::from(p) {
        Some((s >> v, v))
    } else {
        None
    }
}

/// The function `z -> h(z + s)` on the domain that remains.
pub fn shift(h: &WidthFunction, s: u32) -> Result<WidthFunction, Error> {
    WidthFunction::shifted(h.clone(), s)
}

/// Inverse of [`shift`]: constant `g(0)` below `s`, then `g(z - s)`.
/// Materialized as a table, which represents the piecewise function exactly
/// on the bounded domain `[0, g.domain_max() + s]`.
pub fn unshift(g: &WidthFunction, s: u32) -> WidthFunction {
    let g0 = g.eval_width(0).expect("0 is always in domain");
    let mut values = vec![g0; s as usize];
    for t in 0..=g.domain_max() {
        values.push(g.eval_width(t).expect("t stays within domain"));
    }
    WidthFunction::tabulated(values).expect("a constant prefix keeps g monotone")
}

/// Every `1 <= s <= s_max` of the form `m * 2^v` with `m < 2k`: exactly the
/// shifts admissible for the width function `t / 2k`.
pub fn admissible_shifts_floor(k: u32, s_max: u32) -> Vec<u32> {
    debug_assert!(k >= 1, "k indexes the even divisor 2k");
    let mut set = BTreeSet::new();
    for m in 1..2 * u64::from(k) {
        let mut s = m;
        while s <= u64::from(s_max) {
            set.insert(s as u32);
            s <<= 1;
        }
    }
    set.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn floor(divisor: u32) -> WidthFunction {
        WidthFunction::floor_div(divisor, 1024).unwrap()
    }

    #[test]
    fn floor_and_log_families_pass_their_windows() {
        let r = check_condition_a(&floor(4), 256).unwrap();
        assert!(r.holds);
        assert_eq!(r.window, ConditionWindow { z_max: 256, i_max: 9 });
        assert_eq!(r.counterexample, None);

        let r = check_condition_a(&WidthFunction::log2_step(1024), 512).unwrap();
        assert!(r.holds);
        assert_eq!(r.window.i_max, 10);
    }

    #[test]
    fn linear_width_fails_immediately() {
        let lin = WidthFunction::linear(1, 100).unwrap();
        let r = check_condition_a(&lin, 16).unwrap();
        assert!(!r.holds);
        assert_eq!(
            r.counterexample,
            Some(ConditionCounterexample { i: 1, z: 0, z_prime: 1 })
        );
        assert_eq!(r.window.i_max, 5);
    }

    #[test]
    fn report_serializes_with_documented_field_names() {
        let lin = WidthFunction::linear(1, 100).unwrap();
        let r = check_condition_a(&lin, 16).unwrap();
        let json = serde_json::to_value(r).unwrap();
        assert_eq!(json["holds"], false);
        assert_eq!(json["window"]["z_max"], 16);
        assert_eq!(json["window"]["i_max"], 5);
        assert_eq!(json["counterexample"]["i"], 1);
        assert_eq!(json["counterexample"]["z"], 0);
        assert_eq!(json["counterexample"]["z_prime"], 1);
    }

    #[test]
    fn violations_persist_in_larger_windows() {
        let lin = WidthFunction::linear(1, 200).unwrap();
        for window in [16, 32, 64, 128] {
            assert!(!check_condition_a(&lin, window).unwrap().holds);
        }
    }

    #[test]
    fn admissibility_examples() {
        assert!(check_shift_admissible(&floor(4), 12).unwrap());
        assert!(!check_shift_admissible(&floor(4), 5).unwrap());
        // h(s) = 0 leaves only i = 0 to check.
        for s in 1..=3 {
            assert!(check_shift_admissible(&floor(4), s).unwrap());
        }
        assert!(matches!(
            check_shift_admissible(&WidthFunction::floor_div(4, 10).unwrap(), 11),
            Err(Error::DomainExceeded { .. })
        ));
    }

    #[test]
    fn power_form_examples() {
        assert_eq!(power_form(12, 3), Some((3, 2)));
        assert_eq!(power_form(12, 4), None);
        for s in 1..=64u32 {
            let v = s.trailing_zeros();
            assert_eq!(power_form(s, 0), Some((s >> v, v)));
        }
    }

    #[test]
    fn the_three_admissibility_routes_agree() {
        for k in 1..=4u32 {
            let h = floor(2 * k);
            let set = admissible_shifts_floor(k, 64);
            for s in 1..=64u32 {
                let direct = check_shift_admissible(&h, s).unwrap();
                let via_power = power_form(s, h.eval_width(s).unwrap()).is_some();
                let via_set = set.contains(&s);
                assert_eq!(direct, via_power, "k={k}, s={s}");
                assert_eq!(direct, via_set, "k={k}, s={s}");
            }
        }
    }

    #[test]
    fn admissible_shift_sets() {
        assert_eq!(
            admissible_shifts_floor(2, 16),
            vec![1, 2, 3, 4, 6, 8, 12, 16]
        );
        assert!(!admissible_shifts_floor(2, 16).contains(&5));
        assert_eq!(admissible_shifts_floor(1, 8), vec![1, 2, 4, 8]);
        assert_eq!(
            admissible_shifts_floor(2, 64),
            vec![1, 2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 64]
        );
    }

    #[test]
    fn shift_evaluates_the_base_further_along() {
        let g = shift(&floor(4), 12).unwrap();
        for t in 0..=20 {
            assert_eq!(g.eval_width(t).unwrap(), (t + 12) / 4);
        }
        assert_eq!(g.domain_max(), 1024 - 12);

        let tab = WidthFunction::tabulated(vec![0, 0, 1, 1, 2, 2]).unwrap();
        let shifted = shift(&tab, 2).unwrap();
        for (t, want) in [1, 1, 2, 2].into_iter().enumerate() {
            assert_eq!(shifted.eval_width(t as u32).unwrap(), want);
        }
    }

    #[test]
    fn unshift_restores_the_original_pointwise() {
        let h = floor(4);
        let g = shift(&h, 12).unwrap();
        let back = unshift(&g, 12);
        assert_eq!(back.domain_max(), g.domain_max() + 12);
        for z in 0..=back.domain_max() {
            let want = if z < 12 { 3 } else { z / 4 };
            assert_eq!(back.eval_width(z).unwrap(), want, "z={z}");
        }

        // Round-trip: shifting the unshifted function recovers g everywhere.
        let again = shift(&back, 12).unwrap();
        for z in 0..=g.domain_max() {
            assert_eq!(
                again.eval_width(z).unwrap(),
                g.eval_width(z).unwrap(),
                "z={z}"
            );
        }

        let constant = WidthFunction::tabulated(vec![7; 10]).unwrap();
        let widened = unshift(&constant, 3);
        for z in 0..=widened.domain_max() {
            assert_eq!(widened.eval_width(z).unwrap(), 7);
        }
    }

    // Definitional quadratic scan used to cross-check the block scan.
    fn quadratic_first_counterexample(
        h: &WidthFunction,
        z_max: u32,
    ) -> Option<ConditionCounterexample> {
        let i_max = if z_max == 0 { 0 } else { 32 - z_max.leading_zeros() };
        for i in 1..=i_max {
            for z in 0..=z_max {
                for z_prime in z + 1..=z_max {
                    if z >> i == z_prime >> i {
                        let hq = h.eval_width(z).unwrap() >> (i - 1);
                        let hq2 = h.eval_width(z_prime).unwrap() >> (i - 1);
                        if hq != hq2 {
                            return Some(ConditionCounterexample { i, z, z_prime });
                        }
                    }
                }
            }
        }
        None
    }

    proptest! {
        #[test]
        fn block_scan_matches_definitional_scan(
            steps in proptest::collection::vec(0u32..3, 1..40),
        ) {
            let mut values = Vec::with_capacity(steps.len());
            let mut acc = 0;
            for d in steps {
                acc += d;
                values.push(acc);
            }
            let h = WidthFunction::tabulated(values).unwrap();
            let z_max = h.domain_max();
            let fast = check_condition_a(&h, z_max).unwrap();
            let slow = quadratic_first_counterexample(&h, z_max);
            prop_assert_eq!(fast.counterexample, slow);
            prop_assert_eq!(fast.holds, slow.is_none());
        }
    }
}
