//! Width functions, bar positions, and the legal-move relation.
//!
//! A bar `CB(f, y, z)` has `z + 1` columns. Column `i` stands
//! `min(f(i), y) + 1` squares tall and column 0 carries the bitter square at
//! its base. A move either lowers the width coordinate (splitting along a
//! horizontal groove) or shortens the bar (a vertical groove), re-capping the
//! width by `f` at the new length. The strip+bar sum adds an independent strip
//! of `x` squares that can only shrink.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::Error;

/// Largest argument a closed-family function accepts when its spec does not
/// say otherwise. Tables are bounded by their length instead.
pub const DEFAULT_DOMAIN_MAX: u32 = 1024;

/// Serialized form of a width function, as accepted by the CLI.
///
/// `domain_max` is optional everywhere; see [`WidthFunction::from_spec`] for
/// the defaults.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FunctionSpec {
    FloorDiv {
        divisor: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        domain_max: Option<u32>,
    },
    Log2Step {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        domain_max: Option<u32>,
    },
    Linear {
        slope: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        domain_max: Option<u32>,
    },
    Shifted {
        s: u32,
        base: Box<FunctionSpec>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        domain_max: Option<u32>,
    },
    Table {
        values: Vec<u32>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        domain_max: Option<u32>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Family {
    FloorDiv { divisor: u32 },
    Log2Step,
    Linear { slope: u32 },
    Shifted { base: Box<WidthFunction>, s: u32 },
    Tabulated { values: Vec<u32> },
}

/// A monotone non-decreasing step profile on the bounded domain
/// `[0, domain_max]`. Every operation that takes an argument past
/// `domain_max` fails loudly rather than extrapolating.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WidthFunction {
    family: Family,
    domain_max: u32,
}

impl WidthFunction {
    fn new(family: Family, domain_max: u32) -> Result<Self, Error> {
        match &family {
            Family::FloorDiv { divisor } => {
                if *divisor < 2 || divisor % 2 != 0 {
                    return Err(Error::DivisorNotEven { divisor: *divisor });
                }
            }
            Family::Log2Step => {}
            Family::Linear { slope } => {
                if *slope == 0 {
                    return Err(Error::SlopeZero);
                }
                if slope.checked_mul(domain_max).is_none() {
                    return Err(Error::WidthOverflow {
                        slope: *slope,
                        domain_max,
                    });
                }
            }
            Family::Shifted { base, s } => {
                if *s == 0 {
                    return Err(Error::ShiftZero);
                }
                let needed = domain_max.checked_add(*s).ok_or(Error::ShiftedBaseTooSmall {
                    base_max: base.domain_max,
                    needed: u32::MAX,
                })?;
                if base.domain_max < needed {
                    return Err(Error::ShiftedBaseTooSmall {
                        base_max: base.domain_max,
                        needed,
                    });
                }
            }
            Family::Tabulated { values } => {
                if values.is_empty() {
                    return Err(Error::TableEmpty);
                }
                debug_assert_eq!(values.len() as u32 - 1, domain_max);
                for (i, win) in values.windows(2).enumerate() {
                    if win[1] < win[0] {
                        return Err(Error::TableNotMonotone {
                            index: i + 1,
                            value: win[1],
                            prev: win[0],
                        });
                    }
                }
            }
        }
        Ok(WidthFunction { family, domain_max })
    }

    /// `t / divisor` with an even divisor of at least 2.
    pub fn floor_div(divisor: u32, domain_max: u32) -> Result<Self, Error> {
        Self::new(Family::FloorDiv { divisor }, domain_max)
    }

    /// 0 for `t < 2`, otherwise half the largest power of two not above `t`.
    pub fn log2_step(domain_max: u32) -> Self {
        Self::new(Family::Log2Step, domain_max).expect("log2_step needs no validation")
    }

    /// `slope * t` with a positive slope.
    pub fn linear(slope: u32, domain_max: u32) -> Result<Self, Error> {
        Self::new(Family::Linear { slope }, domain_max)
    }

    /// `base(t + s)`, defined on `[0, base.domain_max() - s]`.
    pub fn shifted(base: WidthFunction, s: u32) -> Result<Self, Error> {
        let domain_max = base
            .domain_max
            .checked_sub(s)
            .ok_or(Error::DomainExceeded {
                t: s,
                max: base.domain_max,
            })?;
        Self::new(
            Family::Shifted {
                base: Box::new(base),
                s,
            },
            domain_max,
        )
    }

    /// An explicit table; the domain is the index range of `values`.
    pub fn tabulated(values: Vec<u32>) -> Result<Self, Error> {
        let domain_max = (values.len() as u32).saturating_sub(1);
        Self::new(Family::Tabulated { values }, domain_max)
    }

    /// Builds and validates a function from its serialized spec.
    ///
    /// Missing `domain_max` defaults to [`DEFAULT_DOMAIN_MAX`] for closed
    /// families, to the full index range for tables, and to
    /// `base.domain_max() - s` for shifted functions.
    pub fn from_spec(spec: &FunctionSpec) -> Result<Self, Error> {
        match spec {
            FunctionSpec::FloorDiv {
                divisor,
                domain_max,
            } => Self::floor_div(*divisor, domain_max.unwrap_or(DEFAULT_DOMAIN_MAX)),
            FunctionSpec::Log2Step { domain_max } => {
                Ok(Self::log2_step(domain_max.unwrap_or(DEFAULT_DOMAIN_MAX)))
            }
            FunctionSpec::Linear { slope, domain_max } => {
                Self::linear(*slope, domain_max.unwrap_or(DEFAULT_DOMAIN_MAX))
            }
            FunctionSpec::Shifted {
                s,
                base,
                domain_max,
            } => {
                let base = Self::from_spec(base)?;
                match domain_max {
                    None => Self::shifted(base, *s),
                    Some(dm) => Self::new(
                        Family::Shifted {
                            base: Box::new(base),
                            s: *s,
                        },
                        *dm,
                    ),
                }
            }
            FunctionSpec::Table { values, domain_max } => {
                let mut values = values.clone();
                if let Some(dm) = domain_max {
                    let have = (values.len() as u32).saturating_sub(1);
                    if *dm > have {
                        return Err(Error::DomainExceeded { t: *dm, max: have });
                    }
                    values.truncate(*dm as usize + 1);
                }
                Self::tabulated(values)
            }
        }
    }

    /// Canonical spec with every `domain_max` made explicit. Two functions
    /// with equal specs behave identically, so this is what gets
    /// fingerprinted.
    pub fn spec(&self) -> FunctionSpec {
        let domain_max = Some(self.domain_max);
        match &self.family {
            Family::FloorDiv { divisor } => FunctionSpec::FloorDiv {
                divisor: *divisor,
                domain_max,
            },
            Family::Log2Step => FunctionSpec::Log2Step { domain_max },
            Family::Linear { slope } => FunctionSpec::Linear {
                slope: *slope,
                domain_max,
            },
            Family::Shifted { base, s } => FunctionSpec::Shifted {
                s: *s,
                base: Box::new(base.spec()),
                domain_max,
            },
            Family::Tabulated { values } => FunctionSpec::Table {
                values: values.clone(),
                domain_max,
            },
        }
    }

    pub fn domain_max(&self) -> u32 {
        self.domain_max
    }

    /// Stable identity of the function, used to key persisted tables.
    pub fn fingerprint(&self) -> String {
        let json = serde_json::to_string(&self.spec()).expect("spec always serializes");
        format!("{:016x}", fnv1a64(json.as_bytes()))
    }

    /// The width value `f(t)`.
    pub fn eval_width(&self, t: u32) -> Result<u32, Error> {
        if t > self.domain_max {
            return Err(Error::DomainExceeded {
                t,
                max: self.domain_max,
            });
        }
        Ok(self.eval_raw(t))
    }

    // Callers guarantee t <= domain_max.
    fn eval_raw(&self, t: u32) -> u32 {
        match &self.family {
            Family::FloorDiv { divisor } => t / divisor,
            Family::Log2Step => {
                if t < 2 {
                    0
                } else {
                    // 2^(floor(log2 t) - 1)
                    1 << (30 - t.leading_zeros())
                }
            }
            Family::Linear { slope } => slope * t,
            Family::Shifted { base, s } => base.eval_raw(t + s),
            Family::Tabulated { values } => values[t as usize],
        }
    }

    /// Height of column `i` in the bar of width coordinate `y`.
    pub fn column_height(&self, y: u32, i: u32) -> Result<u32, Error> {
        Ok(self.eval_width(i)?.min(y) + 1)
    }

    /// Caps the width coordinate at `f(z)`, the largest width the bar of
    /// length `z` actually attains.
    pub fn canonicalize(&self, p: Position2) -> Result<Position2, Error> {
        Ok(Position2 {
            y: p.y.min(self.eval_width(p.z)?),
            z: p.z,
        })
    }

    /// Legal moves from `p`, canonicalizing first. Sorted and duplicate-free;
    /// empty exactly at the terminal `{0,0}`.
    pub fn moves2(&self, p: Position2) -> Result<Vec<Position2>, Error> {
        let p = self.canonicalize(p)?;
        let mut out = Vec::with_capacity((p.y + p.z) as usize);
        for v in 0..p.y {
            out.push(Position2 { y: v, z: p.z });
        }
        for w in 0..p.z {
            out.push(Position2 {
                y: p.y.min(self.eval_raw(w)),
                z: w,
            });
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// Legal moves in the strip+bar sum: shrink the strip, lower the width,
    /// or shorten the bar with the width re-capped at the new length.
    pub fn moves3(&self, p: Position3) -> Result<Vec<Position3>, Error> {
        if p.z > self.domain_max {
            return Err(Error::DomainExceeded {
                t: p.z,
                max: self.domain_max,
            });
        }
        let mut out = Vec::with_capacity((p.x + p.y + p.z) as usize);
        for u in 0..p.x {
            out.push(Position3 { x: u, ..p });
        }
        for v in 0..p.y {
            out.push(Position3 { y: v, ..p });
        }
        for w in 0..p.z {
            out.push(Position3 {
                x: p.x,
                y: p.y.min(self.eval_raw(w)),
                z: w,
            });
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// Draws the bar, one text row per unit of height, tallest row first.
    /// `#` is chocolate, `B` the bitter square, `.` empty space.
    pub fn render_ascii(&self, p: Position2) -> Result<String, Error> {
        if p.z > self.domain_max {
            return Err(Error::DomainExceeded {
                t: p.z,
                max: self.domain_max,
            });
        }
        let heights: Vec<u32> = (0..=p.z).map(|i| self.eval_raw(i).min(p.y) + 1).collect();
        let tallest = *heights.iter().max().expect("at least one column");
        let mut out = String::with_capacity(((p.z + 2) * tallest) as usize);
        for row in (0..tallest).rev() {
            for (i, &h) in heights.iter().enumerate() {
                out.push(if row >= h {
                    '.'
                } else if row == 0 && i == 0 {
                    'B'
                } else {
                    '#'
                });
            }
            out.push('\n');
        }
        Ok(out)
    }
}

fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Bar coordinates: `y` is the largest width minus 1, `z` the longest
/// horizontal distance minus 1. Ordering is (y, z)-lexicographic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Position2 {
    pub y: u32,
    pub z: u32,
}

impl Position2 {
    pub fn new(y: u32, z: u32) -> Self {
        Position2 { y, z }
    }
}

impl fmt::Display for Position2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.y, self.z)
    }
}

/// Strip+bar coordinates: a strip of `x` squares next to the bar `{y,z}`.
/// Ordering is (x, y, z)-lexicographic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Position3 {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl Position3 {
    pub fn new(x: u32, y: u32, z: u32) -> Self {
        Position3 { x, y, z }
    }
}

impl fmt::Display for Position3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn floor(divisor: u32) -> WidthFunction {
        WidthFunction::floor_div(divisor, 1024).unwrap()
    }

    fn p2(y: u32, z: u32) -> Position2 {
        Position2::new(y, z)
    }

    fn p3(x: u32, y: u32, z: u32) -> Position3 {
        Position3::new(x, y, z)
    }

    #[test]
    fn floor_div_rejects_odd_or_small_divisors() {
        assert!(matches!(
            WidthFunction::floor_div(3, 10),
            Err(Error::DivisorNotEven { divisor: 3 })
        ));
        assert!(WidthFunction::floor_div(0, 10).is_err());
        assert!(WidthFunction::floor_div(1, 10).is_err());
        assert!(WidthFunction::floor_div(2, 10).is_ok());
    }

    #[test]
    fn linear_validation() {
        assert!(matches!(WidthFunction::linear(0, 10), Err(Error::SlopeZero)));
        assert!(matches!(
            WidthFunction::linear(u32::MAX, 2),
            Err(Error::WidthOverflow { .. })
        ));
        assert!(WidthFunction::linear(1, 10).is_ok());
    }

    #[test]
    fn tabulated_validation() {
        assert!(matches!(
            WidthFunction::tabulated(vec![]),
            Err(Error::TableEmpty)
        ));
        assert!(matches!(
            WidthFunction::tabulated(vec![0, 2, 1]),
            Err(Error::TableNotMonotone {
                index: 2,
                value: 1,
                prev: 2
            })
        ));
        let t = WidthFunction::tabulated(vec![0, 0, 1, 1, 2, 2]).unwrap();
        assert_eq!(t.domain_max(), 5);
    }

    #[test]
    fn eval_width_family_semantics() {
        assert_eq!(floor(4).eval_width(13).unwrap(), 3);
        assert_eq!(floor(2).eval_width(9).unwrap(), 4);

        let log = WidthFunction::log2_step(1024);
        let expect = [(0, 0), (1, 0), (2, 1), (3, 1), (4, 2), (7, 2), (8, 4), (31, 8), (32, 16)];
        for (t, want) in expect {
            assert_eq!(log.eval_width(t).unwrap(), want, "log2_step({t})");
        }

        let lin = WidthFunction::linear(1, 100).unwrap();
        assert_eq!(lin.eval_width(7).unwrap(), 7);

        let sh = WidthFunction::shifted(floor(4), 12).unwrap();
        assert_eq!(sh.eval_width(0).unwrap(), 3);
        assert_eq!(sh.eval_width(8).unwrap(), 5);
        assert_eq!(sh.domain_max(), 1024 - 12);

        let tab = WidthFunction::tabulated(vec![0, 0, 1, 1, 2, 2]).unwrap();
        assert_eq!(tab.eval_width(4).unwrap(), 2);
    }

    #[test]
    fn eval_width_refuses_past_domain() {
        let f = WidthFunction::floor_div(4, 20).unwrap();
        assert!(matches!(
            f.eval_width(21),
            Err(Error::DomainExceeded { t: 21, max: 20 })
        ));
    }

    #[test]
    fn shifted_requires_room_in_base() {
        let base = WidthFunction::floor_div(4, 10).unwrap();
        assert!(WidthFunction::shifted(base.clone(), 11).is_err());
        let spec = FunctionSpec::Shifted {
            s: 4,
            base: Box::new(base.spec()),
            domain_max: Some(8),
        };
        assert!(matches!(
            WidthFunction::from_spec(&spec),
            Err(Error::ShiftedBaseTooSmall {
                base_max: 10,
                needed: 12
            })
        ));
    }

    #[test]
    fn column_heights() {
        assert_eq!(floor(2).column_height(2, 5).unwrap(), 3);
        assert_eq!(floor(4).column_height(3, 0).unwrap(), 1);
        assert_eq!(floor(4).column_height(8, 13).unwrap(), 4);
    }

    #[test]
    fn canonicalize_caps_width() {
        assert_eq!(floor(2).canonicalize(p2(9, 9)).unwrap(), p2(4, 9));
        assert_eq!(floor(2).canonicalize(p2(2, 9)).unwrap(), p2(2, 9));
        let lin = WidthFunction::linear(1, 100).unwrap();
        assert_eq!(lin.canonicalize(p2(7, 5)).unwrap(), p2(5, 5));
    }

    #[test]
    fn moves2_enumerates_both_groove_directions() {
        let got = floor(2).moves2(p2(2, 5)).unwrap();
        let want = [(0, 0), (0, 1), (0, 5), (1, 2), (1, 3), (1, 5), (2, 4)];
        assert_eq!(got, want.map(|(y, z)| p2(y, z)));

        assert!(floor(2).moves2(p2(0, 0)).unwrap().is_empty());

        let from13 = floor(2).moves2(p2(1, 3)).unwrap();
        assert_eq!(from13, [p2(0, 0), p2(0, 1), p2(0, 3), p2(1, 2)]);
        assert!(!from13.contains(&p2(0, 5)));
    }

    #[test]
    fn moves3_enumerates_three_branches() {
        assert!(floor(2).moves3(p3(0, 0, 0)).unwrap().is_empty());
        assert_eq!(floor(2).moves3(p3(1, 0, 0)).unwrap(), [p3(0, 0, 0)]);

        // One strip option, two width options, five capped length options.
        let got = floor(2).moves3(p3(1, 2, 5)).unwrap();
        let want = [
            (0, 2, 5),
            (1, 0, 0),
            (1, 0, 1),
            (1, 0, 5),
            (1, 1, 2),
            (1, 1, 3),
            (1, 1, 5),
            (1, 2, 4),
        ];
        assert_eq!(got, want.map(|(x, y, z)| p3(x, y, z)));
    }

    #[test]
    fn moves3_at_zero_strip_projects_onto_moves2() {
        let f = floor(2);
        let triples = f.moves3(p3(0, 2, 5)).unwrap();
        let pairs = f.moves2(p2(2, 5)).unwrap();
        assert_eq!(triples.len(), pairs.len());
        for (t, p) in triples.iter().zip(&pairs) {
            assert_eq!((t.x, t.y, t.z), (0, p.y, p.z));
        }
    }

    #[test]
    fn render_ascii_shapes() {
        let bar = floor(4).render_ascii(p2(3, 13)).unwrap();
        let want = "\
............##
........######
....##########
B#############
";
        assert_eq!(bar, want);

        assert_eq!(floor(4).render_ascii(p2(0, 0)).unwrap(), "B\n");

        let lin = WidthFunction::linear(1, 100).unwrap();
        let stair = lin.render_ascii(p2(5, 5)).unwrap();
        let want = "\
.....#
....##
...###
..####
.#####
B#####
";
        assert_eq!(stair, want);
    }

    #[test]
    fn spec_json_round_trip() {
        let cases = [
            r#"{"family":"floor_div","divisor":4}"#,
            r#"{"family":"log2_step"}"#,
            r#"{"family":"linear","slope":1}"#,
            r#"{"family":"shifted","s":12,"base":{"family":"floor_div","divisor":4}}"#,
            r#"{"family":"table","values":[0,0,1,1,2,2]}"#,
        ];
        for text in cases {
            let spec: FunctionSpec = serde_json::from_str(text).unwrap();
            let f = WidthFunction::from_spec(&spec).unwrap();
            let again = WidthFunction::from_spec(&f.spec()).unwrap();
            assert_eq!(f, again, "{text}");
        }

        let odd: FunctionSpec =
            serde_json::from_str(r#"{"family":"floor_div","divisor":3}"#).unwrap();
        assert!(WidthFunction::from_spec(&odd).is_err());
    }

    #[test]
    fn spec_table_domain_max_truncates() {
        let spec: FunctionSpec =
            serde_json::from_str(r#"{"family":"table","values":[0,1,2,3],"domain_max":2}"#)
                .unwrap();
        let f = WidthFunction::from_spec(&spec).unwrap();
        assert_eq!(f.domain_max(), 2);
        assert!(f.eval_width(3).is_err());

        let spec: FunctionSpec =
            serde_json::from_str(r#"{"family":"table","values":[0,1],"domain_max":5}"#).unwrap();
        assert!(WidthFunction::from_spec(&spec).is_err());
    }

    #[test]
    fn fingerprint_tracks_the_canonical_spec() {
        let a = floor(4);
        let b = WidthFunction::floor_div(4, 1024).unwrap();
        let c = WidthFunction::floor_div(4, 1025).unwrap();
        assert_eq!(a.fingerprint(), b.fingerprint());
        assert_ne!(a.fingerprint(), c.fingerprint());
        assert_eq!(a.fingerprint().len(), 16);
    }

    proptest! {
        #[test]
        fn eval_width_is_monotone(divisor in 1u32..6, steps in proptest::collection::vec(0u32..4, 1..50)) {
            let mut values = Vec::with_capacity(steps.len());
            let mut acc = 0;
            for d in steps {
                acc += d;
                values.push(acc);
            }
            let funcs = [
                WidthFunction::floor_div(2 * divisor, 200).unwrap(),
                WidthFunction::log2_step(200),
                WidthFunction::linear(divisor, 200).unwrap(),
                WidthFunction::tabulated(values).unwrap(),
            ];
            for f in funcs {
                let mut prev = 0;
                for t in 0..=f.domain_max().min(120) {
                    let v = f.eval_width(t).unwrap();
                    prop_assert!(v >= prev);
                    prev = v;
                }
            }
        }

        #[test]
        fn moves2_yields_canonical_strictly_smaller_positions(
            divisor in 1u32..5,
            y in 0u32..12,
            z in 0u32..24,
        ) {
            let f = WidthFunction::floor_div(2 * divisor, 64).unwrap();
            let p = f.canonicalize(Position2::new(y, z)).unwrap();
            for q in f.moves2(p).unwrap() {
                prop_assert!(q.y <= f.eval_width(q.z).unwrap());
                let smaller = q.z < p.z || (q.z == p.z && q.y < p.y);
                prop_assert!(smaller, "{q} does not descend from {p}");
            }
        }
    }
}
