//! P/N classification of strip+bar positions, by closed form and by
//! backward-induction search, plus winning-move extraction.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::bar::{Position2, Position3, WidthFunction};
use crate::conditions::check_condition_a;
use crate::error::Error;
use crate::grundy::GrundyTable;

/// P: the player who just moved wins. N: the player to move wins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    P,
    N,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::P => "P",
            Outcome::N => "N",
        })
    }
}

/// Classifies by the closed form: P exactly when `x XOR y XOR z = 0`.
///
/// The form is only valid when the width function passes the block
/// condition and `y <= h(z)`, so this refuses with an error when either
/// hypothesis is uncertified rather than guessing. The condition is checked
/// on a window of four times `p.z` (clamped to the domain), keeping the
/// certificate comfortably ahead of the position it covers.
pub fn classify3(h: &WidthFunction, p: Position3) -> Result<Outcome, Error> {
    if p.z > h.domain_max() {
        return Err(Error::DomainExceeded {
            t: p.z,
            max: h.domain_max(),
        });
    }
    let window = (4 * u64::from(p.z.max(1))).min(u64::from(h.domain_max())) as u32;
    let report = check_condition_a(h, window)?;
    if let Some(ce) = report.counterexample {
        return Err(Error::Uncertified {
            window,
            i: ce.i,
            z: ce.z,
            z_prime: ce.z_prime,
        });
    }
    let width = h.eval_width(p.z)?;
    if p.y > width {
        return Err(Error::AboveWidth { y: p.y, width });
    }
    Ok(if p.x ^ p.y ^ p.z == 0 {
        Outcome::P
    } else {
        Outcome::N
    })
}

/// Backward-induction outcomes over the cube `x <= x_max`, `y <= y_max`,
/// `z <= z_max`. Everything reachable from a start position inside the cube
/// stays inside it: moves only shrink coordinates.
#[derive(Debug)]
pub struct SearchTable {
    widths: Vec<u32>,
    x_max: u32,
    y_max: u32,
    z_max: u32,
    outcomes: Vec<Outcome>,
}

impl SearchTable {
    pub fn build(h: &WidthFunction, x_max: u32, y_max: u32, z_max: u32) -> Result<Self, Error> {
        if z_max > h.domain_max() {
            return Err(Error::DomainExceeded {
                t: z_max,
                max: h.domain_max(),
            });
        }
        let mut widths = Vec::with_capacity(z_max as usize + 1);
        for w in 0..=z_max {
            widths.push(h.eval_width(w)?);
        }
        let nx = x_max as usize + 1;
        let ny = y_max as usize + 1;
        let nz = z_max as usize + 1;
        let idx = |x: usize, y: usize, z: usize| (z * ny + y) * nx + x;

        let mut outcomes = Vec::with_capacity(nx * ny * nz);
        // Increasing z, then y, then x: every option lies at a smaller index.
        for z in 0..nz {
            for y in 0..ny {
                for x in 0..nx {
                    let winning_option = (0..x).any(|u| outcomes[idx(u, y, z)] == Outcome::P)
                        || (0..y).any(|v| outcomes[idx(x, v, z)] == Outcome::P)
                        || (0..z).any(|w| {
                            let vy = y.min(widths[w] as usize);
                            outcomes[idx(x, vy, w)] == Outcome::P
                        });
                    outcomes.push(if winning_option { Outcome::N } else { Outcome::P });
                }
            }
        }
        Ok(SearchTable {
            widths,
            x_max,
            y_max,
            z_max,
            outcomes,
        })
    }

    pub fn x_max(&self) -> u32 {
        self.x_max
    }

    pub fn y_max(&self) -> u32 {
        self.y_max
    }

    pub fn z_max(&self) -> u32 {
        self.z_max
    }

    pub fn outcome(&self, p: Position3) -> Result<Outcome, Error> {
        if p.x > self.x_max || p.y > self.y_max || p.z > self.z_max {
            return Err(Error::OutOfBounds {
                y: p.y,
                z: p.z,
                y_max: self.y_max,
                z_max: self.z_max,
            });
        }
        let nx = self.x_max as usize + 1;
        let ny = self.y_max as usize + 1;
        let i = (p.z as usize * ny + p.y as usize) * nx + p.x as usize;
        Ok(self.outcomes[i])
    }

    /// Width cap at bar length `w`, from the table's own snapshot.
    pub fn width(&self, w: u32) -> Option<u32> {
        self.widths.get(w as usize).copied()
    }
}

/// Classifies by exhaustive search. Needs no hypotheses, only a bounded
/// domain.
pub fn classify3_search(h: &WidthFunction, p: Position3) -> Result<Outcome, Error> {
    SearchTable::build(h, p.x, p.y, p.z)?.outcome(p)
}

/// Every move from `p` that lands on a P-position, in lexicographic order.
/// Empty exactly when `p` itself is a P-position.
pub fn winning_moves3(h: &WidthFunction, p: Position3) -> Result<Vec<Position3>, Error> {
    let table = SearchTable::build(h, p.x, p.y, p.z)?;
    let mut out = Vec::new();
    for q in h.moves3(p)? {
        if table.outcome(q)? == Outcome::P {
            out.push(q);
        }
    }
    Ok(out)
}

/// Single-bar projection: every move from `p` whose Grundy value is zero.
/// These are the winning replies in the bar alone; a sum of games needs the
/// XOR of component values to cancel instead.
pub fn winning_moves2(f: &WidthFunction, p: Position2) -> Result<Vec<Position2>, Error> {
    let p = f.canonicalize(p)?;
    let table = GrundyTable::build(f, p.y, p.z)?;
    let mut out = Vec::new();
    for q in f.moves2(p)? {
        if table.grundy(q)? == 0 {
            out.push(q);
        }
    }
    Ok(out)
}

/// Everything the `solve` command reports about one position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub position: Position3,
    pub class: Outcome,
    pub winning_moves: Vec<Position3>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grundy::nim_sum;

    fn floor(divisor: u32) -> WidthFunction {
        WidthFunction::floor_div(divisor, 1024).unwrap()
    }

    fn p3(x: u32, y: u32, z: u32) -> Position3 {
        Position3::new(x, y, z)
    }

    #[test]
    fn formula_classification_matches_nim_sum() {
        assert_eq!(classify3(&floor(4), p3(14, 3, 13)).unwrap(), Outcome::P);
        assert_eq!(classify3(&floor(4), p3(0, 0, 0)).unwrap(), Outcome::P);
        assert_eq!(classify3(&floor(4), p3(1, 0, 0)).unwrap(), Outcome::N);
    }

    #[test]
    fn formula_classification_refuses_uncertified_hypotheses() {
        let lin = WidthFunction::linear(1, 100).unwrap();
        assert!(matches!(
            classify3(&lin, p3(0, 5, 5)),
            Err(Error::Uncertified { .. })
        ));
        // floor(4) is fine, but y must stay at or below h(z).
        assert!(matches!(
            classify3(&floor(4), p3(0, 4, 13)),
            Err(Error::AboveWidth { y: 4, width: 3 })
        ));
    }

    #[test]
    fn search_classification_spot_checks() {
        assert_eq!(
            classify3_search(&floor(4), p3(0, 0, 0)).unwrap(),
            Outcome::P
        );
        assert_eq!(
            classify3_search(&floor(4), p3(14, 3, 13)).unwrap(),
            Outcome::P
        );
        assert_eq!(
            classify3_search(&floor(4), p3(1, 0, 0)).unwrap(),
            Outcome::N
        );
        let lin = WidthFunction::linear(1, 100).unwrap();
        assert_eq!(classify3_search(&lin, p3(0, 5, 5)).unwrap(), Outcome::N);
    }

    #[test]
    fn winning_moves_restore_zero_nim_sum() {
        let got = winning_moves3(&floor(4), p3(15, 3, 13)).unwrap();
        assert_eq!(got, [p3(14, 3, 13), p3(15, 2, 13), p3(15, 3, 12)]);
        assert!(got.contains(&p3(14, 3, 13)));

        // P-positions offer nothing.
        assert!(winning_moves3(&floor(4), p3(14, 3, 13)).unwrap().is_empty());

        let got = winning_moves3(&floor(2), p3(0, 2, 5)).unwrap();
        assert_eq!(got, [p3(0, 0, 0)]);
    }

    #[test]
    fn bar_winning_moves_have_grundy_zero() {
        let got = winning_moves2(&floor(2), Position2::new(2, 5)).unwrap();
        assert_eq!(got, [Position2::new(0, 0)]);

        assert!(winning_moves2(&floor(2), Position2::new(0, 0))
            .unwrap()
            .is_empty());

        let got = winning_moves2(&floor(4), Position2::new(3, 13)).unwrap();
        assert_eq!(got, [Position2::new(0, 0)]);
    }

    #[test]
    fn search_agrees_with_grundy_values_on_sums() {
        let f = floor(2);
        let grundy = GrundyTable::build(&f, 8, 8).unwrap();
        let search = SearchTable::build(&f, 8, 4, 8).unwrap();
        for z in 0..=8u32 {
            let cap = f.eval_width(z).unwrap().min(4);
            for y in 0..=cap {
                for x in 0..=8u32 {
                    let g = grundy.grundy(Position2::new(y, z)).unwrap();
                    let want = if nim_sum(x, g) == 0 { Outcome::P } else { Outcome::N };
                    assert_eq!(search.outcome(p3(x, y, z)).unwrap(), want, "({x},{y},{z})");
                }
            }
        }
    }

    #[test]
    fn solve_report_serializes_with_documented_field_names() {
        let report = SolveReport {
            position: p3(15, 3, 13),
            class: Outcome::N,
            winning_moves: vec![p3(14, 3, 13)],
        };
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["position"]["x"], 15);
        assert_eq!(json["class"], "N");
        assert_eq!(json["winning_moves"][0]["z"], 13);
    }
}
