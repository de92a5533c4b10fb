//! Nim-sum and mex primitives, the memoized Grundy engine, closed-form
//! evaluators, and formula-vs-engine verification.

use serde::{Deserialize, Serialize};
use std::fs;
use std::path::{Path, PathBuf};

use crate::bar::{Position2, WidthFunction};
use crate::error::Error;

pub fn nim_sum(x: u32, y: u32) -> u32 {
    x ^ y
}

/// Least non-negative integer missing from `values`. Duplicates are fine.
pub fn mex(values: &[u32]) -> u32 {
    // mex(S) <= |S|, so a presence bitmap of |S| + 1 slots suffices.
    let n = values.len();
    let mut seen = vec![false; n + 1];
    for &v in values {
        if (v as usize) <= n {
            seen[v as usize] = true;
        }
    }
    seen.iter().position(|&s| !s).expect("some slot is free") as u32
}

/// Value of a disjunctive sum of games with the given component values.
pub fn grundy_sum(values: impl IntoIterator<Item = u32>) -> u32 {
    values.into_iter().fold(0, |acc, v| acc ^ v)
}

/// The closed form `y XOR z` for bars whose width function passes the block
/// condition.
pub fn formula_plain(y: u32, z: u32) -> u32 {
    y ^ z
}

/// The closed form `(y XOR (z + s)) - s` for bars shifted by an admissible
/// `s`. A negative result means the inputs were not in the formula's regime.
pub fn formula_shifted(y: u32, z: u32, s: u32) -> Result<u32, Error> {
    let zs = z.checked_add(s).ok_or(Error::DomainExceeded {
        t: z,
        max: u32::MAX - s,
    })?;
    let x = y ^ zs;
    if x < s {
        return Err(Error::ShiftUnderflow { y, z, s });
    }
    Ok(x - s)
}

/// Which closed form to compare against the engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Formula {
    Plain,
    Shifted { s: u32 },
}

impl Formula {
    /// Formula value as a signed integer so an out-of-regime shifted form can
    /// be reported instead of aborting a scan.
    pub fn value(self, y: u32, z: u32) -> i64 {
        match self {
            Formula::Plain => i64::from(y ^ z),
            Formula::Shifted { s } => {
                let x = u64::from(y) ^ (u64::from(z) + u64::from(s));
                x as i64 - i64::from(s)
            }
        }
    }

    pub fn shift(self) -> Option<u32> {
        match self {
            Formula::Plain => None,
            Formula::Shifted { s } => Some(s),
        }
    }
}

/// Memoized Grundy values of one width function over the canonical rectangle
/// `z <= z_max`, `y <= min(y_max, f(z))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrundyTable {
    func: WidthFunction,
    fingerprint: String,
    y_max: u32,
    z_max: u32,
    // Column z occupies values[col_start[z]..col_start[z + 1]], entry y at
    // offset y. Filled in increasing z, then increasing y, so every
    // dependency (smaller z, or same z and smaller y) is already present.
    col_start: Vec<usize>,
    values: Vec<u32>,
}

impl GrundyTable {
    pub fn build(func: &WidthFunction, y_max: u32, z_max: u32) -> Result<Self, Error> {
        if z_max > func.domain_max() {
            return Err(Error::DomainExceeded {
                t: z_max,
                max: func.domain_max(),
            });
        }
        let mut widths = Vec::with_capacity(z_max as usize + 1);
        for z in 0..=z_max {
            widths.push(func.eval_width(z)?);
        }
        let caps: Vec<u32> = widths.iter().map(|&w| w.min(y_max)).collect();

        let mut col_start = Vec::with_capacity(z_max as usize + 2);
        let mut total = 0usize;
        for &cap in &caps {
            col_start.push(total);
            total += cap as usize + 1;
        }
        col_start.push(total);

        let mut values = Vec::with_capacity(total);
        let mut opts: Vec<u32> = Vec::new();
        for z in 0..=z_max as usize {
            for y in 0..=caps[z] {
                opts.clear();
                for v in 0..y {
                    opts.push(values[col_start[z] + v as usize]);
                }
                for w in 0..z {
                    let vy = y.min(widths[w]);
                    opts.push(values[col_start[w] + vy as usize]);
                }
                values.push(mex(&opts));
            }
        }

        Ok(GrundyTable {
            fingerprint: func.fingerprint(),
            func: func.clone(),
            y_max,
            z_max,
            col_start,
            values,
        })
    }

    pub fn func(&self) -> &WidthFunction {
        &self.func
    }

    pub fn fingerprint(&self) -> &str {
        &self.fingerprint
    }

    pub fn y_max(&self) -> u32 {
        self.y_max
    }

    pub fn z_max(&self) -> u32 {
        self.z_max
    }

    /// Grundy value of `p`, canonicalized first. The table is complete by
    /// construction, so this is a pure lookup.
    pub fn grundy(&self, p: Position2) -> Result<u32, Error> {
        let out_of_bounds = Error::OutOfBounds {
            y: p.y,
            z: p.z,
            y_max: self.y_max,
            z_max: self.z_max,
        };
        if p.z > self.z_max {
            return Err(out_of_bounds);
        }
        let q = self.func.canonicalize(p)?;
        let lo = self.col_start[q.z as usize];
        let hi = self.col_start[q.z as usize + 1];
        let idx = lo + q.y as usize;
        if idx >= hi {
            return Err(out_of_bounds);
        }
        Ok(self.values[idx])
    }

    fn cap(&self, z: u32) -> u32 {
        (self.col_start[z as usize + 1] - self.col_start[z as usize] - 1) as u32
    }

    /// All stored cells in (z, y)-lexicographic order with their values.
    pub fn rows(&self) -> Vec<(Position2, u32)> {
        let mut out = Vec::with_capacity(self.values.len());
        let mut idx = 0;
        for z in 0..=self.z_max {
            for y in 0..=self.cap(z) {
                out.push((Position2::new(y, z), self.values[idx]));
                idx += 1;
            }
        }
        out
    }

    /// CSV export: header `y,z,grundy`, rows in (z, y)-lexicographic order.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("y,z,grundy\n");
        let mut idx = 0;
        for z in 0..=self.z_max {
            for y in 0..=self.cap(z) {
                out.push_str(&format!("{y},{z},{}\n", self.values[idx]));
                idx += 1;
            }
        }
        out
    }

    fn cache_path(dir: &Path, fingerprint: &str, y_max: u32, z_max: u32) -> PathBuf {
        dir.join(format!("{fingerprint}-y{y_max}-z{z_max}.json"))
    }

    /// Persists the table under `dir`, keyed by function fingerprint and
    /// bounds. Returns the file written.
    pub fn save(&self, dir: &Path) -> Result<PathBuf, Error> {
        fs::create_dir_all(dir)?;
        let path = Self::cache_path(dir, &self.fingerprint, self.y_max, self.z_max);
        let file = TableFile {
            fingerprint: self.fingerprint.clone(),
            y_max: self.y_max,
            z_max: self.z_max,
            values: self.values.clone(),
        };
        fs::write(&path, serde_json::to_string(&file).expect("table serializes"))?;
        Ok(path)
    }

    /// Loads a persisted table and re-binds it to `func`. The stored
    /// fingerprint must match the function's; anything else is an error, not
    /// a rebuild, so stale or copied files cannot masquerade as fresh tables.
    pub fn load(path: &Path, func: &WidthFunction) -> Result<Self, Error> {
        let text = fs::read_to_string(path)?;
        let file: TableFile =
            serde_json::from_str(&text).map_err(|e| Error::MalformedTable(e.to_string()))?;
        let expected = func.fingerprint();
        if file.fingerprint != expected {
            return Err(Error::FingerprintMismatch {
                expected,
                found: file.fingerprint,
            });
        }
        let rebuilt = Self::layout(func, file.y_max, file.z_max)?;
        if file.values.len() != *rebuilt.last().expect("layout is non-empty") {
            return Err(Error::MalformedTable(format!(
                "expected {} values, found {}",
                rebuilt.last().unwrap(),
                file.values.len()
            )));
        }
        Ok(GrundyTable {
            fingerprint: file.fingerprint,
            func: func.clone(),
            y_max: file.y_max,
            z_max: file.z_max,
            col_start: rebuilt,
            values: file.values,
        })
    }

    /// Loads from the cache directory when a matching file exists, otherwise
    /// builds and persists.
    pub fn load_or_build(
        func: &WidthFunction,
        y_max: u32,
        z_max: u32,
        dir: &Path,
    ) -> Result<Self, Error> {
        let path = Self::cache_path(dir, &func.fingerprint(), y_max, z_max);
        if path.exists() {
            return Self::load(&path, func);
        }
        let table = Self::build(func, y_max, z_max)?;
        table.save(dir)?;
        Ok(table)
    }

    fn layout(func: &WidthFunction, y_max: u32, z_max: u32) -> Result<Vec<usize>, Error> {
        let mut col_start = Vec::with_capacity(z_max as usize + 2);
        let mut total = 0usize;
        for z in 0..=z_max {
            col_start.push(total);
            total += func.eval_width(z)?.min(y_max) as usize + 1;
        }
        col_start.push(total);
        Ok(col_start)
    }
}

#[derive(Serialize, Deserialize)]
struct TableFile {
    fingerprint: String,
    y_max: u32,
    z_max: u32,
    values: Vec<u32>,
}

/// Bounds a verification ran over; `s` is present for the shifted form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportBounds {
    pub y_max: u32,
    pub z_max: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub y: u32,
    pub z: u32,
    pub formula_value: i64,
    pub engine_value: u32,
}

/// Outcome of comparing engine values against a closed form over a rectangle.
/// `mismatches` counts every disagreement; `first_mismatch` is the earliest
/// in (z, y)-lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub bounds: ReportBounds,
    pub positions_checked: u64,
    pub mismatches: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<Mismatch>,
}

/// Compares the engine against `formula` over all canonical positions with
/// `z <= z_max`, `y <= min(y_max, f(z))`. Counts every mismatch rather than
/// stopping at the first: disagreement density matters when a formula fails.
pub fn verify_formula(
    func: &WidthFunction,
    formula: Formula,
    y_max: u32,
    z_max: u32,
) -> Result<VerificationReport, Error> {
    let table = GrundyTable::build(func, y_max, z_max)?;
    Ok(verify_with_table(&table, formula))
}

/// Same comparison against an already built (possibly cached) table.
pub fn verify_with_table(table: &GrundyTable, formula: Formula) -> VerificationReport {
    let mut positions_checked = 0u64;
    let mut mismatches = 0u64;
    let mut first_mismatch = None;
    let mut idx = 0usize;
    for z in 0..=table.z_max {
        for y in 0..=table.cap(z) {
            let engine = table.values[idx];
            idx += 1;
            positions_checked += 1;
            let expect = formula.value(y, z);
            if expect != i64::from(engine) {
                mismatches += 1;
                if first_mismatch.is_none() {
                    first_mismatch = Some(Mismatch {
                        y,
                        z,
                        formula_value: expect,
                        engine_value: engine,
                    });
                }
            }
        }
    }
    VerificationReport {
        bounds: ReportBounds {
            y_max: table.y_max,
            z_max: table.z_max,
            s: formula.shift(),
        },
        positions_checked,
        mismatches,
        first_mismatch,
    }
}
