//! Command-line surface over the engine: table export, condition and shift
//! checks, formula verification, solving, rendering, and a playable session.
//!
//! Every command is deterministic for a given invocation. Exit codes follow
//! one contract across commands: 0 when the asked-for property is positive
//! (table built, condition holds, shift admissible, formulas agree,
//! P verdict), 1 when the answer is negative (counterexample, mismatch,
//! inadmissible, N verdict), 2 when the input itself was unusable.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::fs;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use crate::bar::{FunctionSpec, Position2, Position3, WidthFunction};
use crate::conditions::{admissible_shifts_floor, check_condition_a, check_shift_admissible};
use crate::error::Error;
use crate::grundy::{verify_with_table, Formula, GrundyTable};
use crate::solver::{classify3, Outcome, SearchTable, SolveReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "grundy-bar",
    version,
    about = "Grundy values and winning moves for step chocolate-bar games"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Directory for persisted Grundy tables, keyed by function fingerprint.
    #[arg(long, global = true, env = "GRUNDY_BAR_TABLE_DIR", value_name = "DIR")]
    pub table_dir: Option<PathBuf>,

    /// Write the primary output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Output format. Reports accept json; table data additionally csv.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a Grundy table and print it (CSV by default).
    Table {
        /// Width function: inline JSON or a path to a JSON file.
        #[arg(long, value_name = "SPEC")]
        func: String,
        /// Largest width coordinate to tabulate.
        #[arg(long)]
        ymax: u32,
        /// Largest length coordinate to tabulate.
        #[arg(long)]
        zmax: u32,
    },
    /// Check the block condition on a window of lengths.
    CheckA {
        #[arg(long, value_name = "SPEC")]
        func: String,
        #[arg(long)]
        zmax: u32,
    },
    /// Decide whether a shift amount is admissible for a width function.
    CheckShift {
        #[arg(long, value_name = "SPEC")]
        func: String,
        /// Shift amount.
        #[arg(long)]
        s: u32,
    },
    /// Enumerate the admissible shifts of the width function t / 2k.
    Shifts {
        /// Half the even divisor.
        #[arg(long)]
        k: u32,
        /// Largest shift to include.
        #[arg(long)]
        max: u32,
    },
    /// Compare engine Grundy values against a closed form.
    Verify {
        #[arg(long, value_name = "SPEC")]
        func: String,
        #[arg(long, value_enum)]
        formula: FormulaArg,
        /// Shift amount; required with --formula shifted.
        #[arg(long)]
        shift: Option<u32>,
        #[arg(long)]
        ymax: u32,
        #[arg(long)]
        zmax: u32,
    },
    /// Classify a position and list every winning move.
    Solve {
        #[arg(long, value_name = "SPEC")]
        func: String,
        /// Bar coordinates as y,z.
        #[arg(long, value_name = "Y,Z")]
        pos: String,
        /// Strip length, making the position a strip+bar sum.
        #[arg(long, value_name = "X")]
        strip: Option<u32>,
        #[arg(long, value_enum, default_value_t = Method::Search)]
        method: Method,
    },
    /// Draw a bar as ASCII art.
    Render {
        #[arg(long, value_name = "SPEC")]
        func: String,
        #[arg(long, value_name = "Y,Z")]
        pos: String,
    },
    /// Play against the engine from a starting position.
    Play {
        #[arg(long, value_name = "SPEC")]
        func: String,
        #[arg(long, value_name = "Y,Z")]
        pos: String,
        /// Strip length, making the game a strip+bar sum.
        #[arg(long, value_name = "X")]
        strip: Option<u32>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormulaArg {
    Plain,
    Shifted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    Search,
}

/// Accepts inline JSON (anything starting with `{`) or a path to a JSON
/// file, and validates the function before any computation starts.
pub fn parse_function_spec(text: &str) -> Result<WidthFunction, Error> {
    let trimmed = text.trim();
    let json = if trimmed.starts_with('{') {
        trimmed.to_string()
    } else {
        fs::read_to_string(trimmed)
            .map_err(|e| Error::Spec(format!("cannot read function spec {trimmed}: {e}")))?
    };
    let spec: FunctionSpec = serde_json::from_str(&json)
        .map_err(|e| Error::Spec(format!("malformed function spec: {e}")))?;
    WidthFunction::from_spec(&spec)
}

/// Runs one parsed command. Interactive input comes from `input`, results go
/// to `out`, diagnostics to `err`. Returns the process exit code.
pub fn run(cli: &Cli, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cli, input, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: &Cli, input: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32, Error> {
    match &cli.command {
        Command::Table { func, ymax, zmax } => {
            let f = parse_function_spec(func)?;
            let table = build_table(cli, &f, *ymax, *zmax)?;
            let text = match cli.format {
                Format::Text | Format::Csv => table.to_csv(),
                Format::Json => {
                    let rows: Vec<_> = table
                        .rows()
                        .into_iter()
                        .map(|(p, g)| json!({"y": p.y, "z": p.z, "grundy": g}))
                        .collect();
                    let v = json!({
                        "fingerprint": table.fingerprint(),
                        "y_max": table.y_max(),
                        "z_max": table.z_max(),
                        "rows": rows,
                    });
                    format!("{v}\n")
                }
            };
            deliver(cli, out, &text)?;
            Ok(EXIT_OK)
        }

        Command::CheckA { func, zmax } => {
            no_csv(cli.format)?;
            let f = parse_function_spec(func)?;
            let report = check_condition_a(&f, *zmax)?;
            let text = match cli.format {
                Format::Json => {
                    format!("{}\n", serde_json::to_string(&report).expect("report serializes"))
                }
                _ => match report.counterexample {
                    None => format!(
                        "holds: window z_max={} i_max={}\n",
                        report.window.z_max, report.window.i_max
                    ),
                    Some(ce) => format!(
                        "counterexample: i={} z={} z_prime={}\n",
                        ce.i, ce.z, ce.z_prime
                    ),
                },
            };
            deliver(cli, out, &text)?;
            Ok(if report.holds { EXIT_OK } else { EXIT_NEGATIVE })
        }

        Command::CheckShift { func, s } => {
            no_csv(cli.format)?;
            let f = parse_function_spec(func)?;
            let width = f.eval_width(*s)?;
            let admissible = check_shift_admissible(&f, *s)?;
            let text = match cli.format {
                Format::Json => format!(
                    "{}\n",
                    json!({"s": s, "width_at_s": width, "admissible": admissible})
                ),
                _ => format!(
                    "{} s={s} (h(s)={width})\n",
                    if admissible { "admissible" } else { "inadmissible" }
                ),
            };
            deliver(cli, out, &text)?;
            Ok(if admissible { EXIT_OK } else { EXIT_NEGATIVE })
        }

        Command::Shifts { k, max } => {
            no_csv(cli.format)?;
            if *k == 0 {
                return Err(Error::Spec("k must be positive".into()));
            }
            let shifts = admissible_shifts_floor(*k, *max);
            let text = match cli.format {
                Format::Json => format!(
                    "{}\n",
                    serde_json::to_string(&shifts).expect("list serializes")
                ),
                _ => {
                    let words: Vec<String> = shifts.iter().map(u32::to_string).collect();
                    format!("{}\n", words.join(" "))
                }
            };
            deliver(cli, out, &text)?;
            Ok(EXIT_OK)
        }

        Command::Verify {
            func,
            formula,
            shift,
            ymax,
            zmax,
        } => {
            no_csv(cli.format)?;
            let f = parse_function_spec(func)?;
            let formula = match (formula, shift) {
                (FormulaArg::Plain, None) => Formula::Plain,
                (FormulaArg::Plain, Some(_)) => {
                    return Err(Error::Spec("--shift only applies to --formula shifted".into()))
                }
                (FormulaArg::Shifted, Some(s)) => Formula::Shifted { s: *s },
                (FormulaArg::Shifted, None) => {
                    return Err(Error::Spec("--formula shifted requires --shift".into()))
                }
            };
            let table = build_table(cli, &f, *ymax, *zmax)?;
            let report = verify_with_table(&table, formula);
            let text = match cli.format {
                Format::Json => {
                    format!("{}\n", serde_json::to_string(&report).expect("report serializes"))
                }
                _ => {
                    let shift_note = report
                        .bounds
                        .s
                        .map(|s| format!(" s={s}"))
                        .unwrap_or_default();
                    let mut t = format!(
                        "checked {} positions (y_max={} z_max={}{})\nmismatches: {}\n",
                        report.positions_checked,
                        report.bounds.y_max,
                        report.bounds.z_max,
                        shift_note,
                        report.mismatches
                    );
                    if let Some(m) = report.first_mismatch {
                        t.push_str(&format!(
                            "first mismatch: y={} z={} formula={} engine={}\n",
                            m.y, m.z, m.formula_value, m.engine_value
                        ));
                    }
                    t
                }
            };
            deliver(cli, out, &text)?;
            Ok(if report.mismatches == 0 {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }

        Command::Solve {
            func,
            pos,
            strip,
            method,
        } => {
            no_csv(cli.format)?;
            let f = parse_function_spec(func)?;
            let (y, z) = parse_pair(pos)
                .ok_or_else(|| Error::Spec(format!("positions are y,z pairs, got {pos}")))?;
            let p = Position3::new(strip.unwrap_or(0), y, z);
            let table = SearchTable::build(&f, p.x, p.y, p.z)?;
            let class = match method {
                Method::Formula => classify3(&f, p)?,
                Method::Search => table.outcome(p)?,
            };
            let mut winning_moves = Vec::new();
            for q in f.moves3(p)? {
                if table.outcome(q)? == Outcome::P {
                    winning_moves.push(q);
                }
            }
            let report = SolveReport {
                position: p,
                class,
                winning_moves,
            };
            let text = match cli.format {
                Format::Json => {
                    format!("{}\n", serde_json::to_string(&report).expect("report serializes"))
                }
                _ => {
                    let moves = if report.winning_moves.is_empty() {
                        "none".to_string()
                    } else {
                        join(&report.winning_moves)
                    };
                    format!("position {p}: {class}\nwinning moves: {moves}\n")
                }
            };
            deliver(cli, out, &text)?;
            Ok(match class {
                Outcome::P => EXIT_OK,
                Outcome::N => EXIT_NEGATIVE,
            })
        }

        Command::Render { func, pos } => {
            text_only(cli.format, "render")?;
            let f = parse_function_spec(func)?;
            let (y, z) = parse_pair(pos)
                .ok_or_else(|| Error::Spec(format!("positions are y,z pairs, got {pos}")))?;
            let art = f.render_ascii(Position2::new(y, z))?;
            deliver(cli, out, &art)?;
            Ok(EXIT_OK)
        }

        Command::Play { func, pos, strip } => {
            text_only(cli.format, "play")?;
            if cli.out.is_some() {
                return Err(Error::Spec("play is interactive; --out does not apply".into()));
            }
            let f = parse_function_spec(func)?;
            let (y, z) = parse_pair(pos)
                .ok_or_else(|| Error::Spec(format!("positions are y,z pairs, got {pos}")))?;
            match strip {
                None => play_bar(&f, Position2::new(y, z), input, out),
                Some(x) => play_sum(&f, Position3::new(*x, y, z), input, out),
            }
        }
    }
}

fn build_table(cli: &Cli, func: &WidthFunction, y_max: u32, z_max: u32) -> Result<GrundyTable, Error> {
    match &cli.table_dir {
        Some(dir) => GrundyTable::load_or_build(func, y_max, z_max, dir),
        None => GrundyTable::build(func, y_max, z_max),
    }
}

fn deliver(cli: &Cli, out: &mut dyn Write, text: &str) -> Result<(), Error> {
    match &cli.out {
        Some(path) => fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn no_csv(format: Format) -> Result<(), Error> {
    if format == Format::Csv {
        return Err(Error::Spec(
            "csv output is only available for the table command".into(),
        ));
    }
    Ok(())
}

fn text_only(format: Format, command: &str) -> Result<(), Error> {
    if format != Format::Text {
        return Err(Error::Spec(format!("{command} output is text only")));
    }
    Ok(())
}

fn parse_pair(text: &str) -> Option<(u32, u32)> {
    let mut it = text.split(',');
    let y = it.next()?.trim().parse().ok()?;
    let z = it.next()?.trim().parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((y, z))
}

fn parse_triple(text: &str) -> Option<(u32, u32, u32)> {
    let mut it = text.split(',');
    let x = it.next()?.trim().parse().ok()?;
    let y = it.next()?.trim().parse().ok()?;
    let z = it.next()?.trim().parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((x, y, z))
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Re-prompts until the line parses to a legal move; `None` means the input
/// ended first.
fn prompt<T: Copy + PartialEq + std::fmt::Display>(
    legal: &[T],
    parse: impl Fn(&str) -> Option<T>,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<Option<T>, Error> {
    loop {
        write!(out, "move> ")?;
        out.flush()?;
        let mut line = String::new();
        if input.read_line(&mut line)? == 0 {
            writeln!(out)?;
            return Ok(None);
        }
        if let Some(mv) = parse(line.trim()) {
            if legal.contains(&mv) {
                return Ok(Some(mv));
            }
        }
        writeln!(out, "illegal move; legal: {}", join(legal))?;
    }
}

/// The human moves first; the engine answers with a winning move when one
/// exists and with the lexicographically smallest legal move otherwise.
/// Whoever takes the last piece above the bitter square wins.
fn play_bar(
    f: &WidthFunction,
    start: Position2,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<i32, Error> {
    let start = f.canonicalize(start)?;
    let table = GrundyTable::build(f, start.y, start.z)?;
    writeln!(out, "bar position {start}; enter moves as y,z")?;
    let mut cur = start;
    loop {
        let legal = f.moves2(cur)?;
        if legal.is_empty() {
            writeln!(out, "no moves remain; engine wins")?;
            return Ok(EXIT_OK);
        }
        let mv = prompt(
            &legal,
            |s| parse_pair(s).map(|(y, z)| Position2::new(y, z)),
            input,
            out,
        )?;
        let Some(mv) = mv else {
            writeln!(out, "input ended before the game finished")?;
            return Ok(EXIT_USAGE);
        };
        cur = mv;
        writeln!(out, "you play {cur}")?;
        let legal = f.moves2(cur)?;
        if legal.is_empty() {
            writeln!(out, "you took the last piece; you win")?;
            return Ok(EXIT_OK);
        }
        let mut reply = legal[0];
        for q in &legal {
            if table.grundy(*q)? == 0 {
                reply = *q;
                break;
            }
        }
        cur = reply;
        writeln!(out, "engine plays {cur}")?;
        if f.moves2(cur)?.is_empty() {
            writeln!(out, "engine took the last piece; engine wins")?;
            return Ok(EXIT_OK);
        }
    }
}

fn play_sum(
    h: &WidthFunction,
    start: Position3,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<i32, Error> {
    let table = SearchTable::build(h, start.x, start.y, start.z)?;
    writeln!(out, "strip+bar position {start}; enter moves as x,y,z")?;
    let mut cur = start;
    loop {
        let legal = h.moves3(cur)?;
        if legal.is_empty() {
            writeln!(out, "no moves remain; engine wins")?;
            return Ok(EXIT_OK);
        }
        let mv = prompt(
            &legal,
            |s| parse_triple(s).map(|(x, y, z)| Position3::new(x, y, z)),
            input,
            out,
        )?;
        let Some(mv) = mv else {
            writeln!(out, "input ended before the game finished")?;
            return Ok(EXIT_USAGE);
        };
        cur = mv;
        writeln!(out, "you play {cur}")?;
        let legal = h.moves3(cur)?;
        if legal.is_empty() {
            writeln!(out, "you took the last piece; you win")?;
            return Ok(EXIT_OK);
        }
        let mut reply = legal[0];
        for q in &legal {
            if table.outcome(*q)? == Outcome::P {
                reply = *q;
                break;
            }
        }
        cur = reply;
        writeln!(out, "engine plays {cur}")?;
        if h.moves3(cur)?.is_empty() {
            writeln!(out, "engine took the last piece; engine wins")?;
            return Ok(EXIT_OK);
        }
    }
}
