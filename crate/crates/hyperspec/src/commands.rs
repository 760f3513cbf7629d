//! One function per subcommand. Each returns what goes to stdout and the
//! exit code; input problems come back as [`CliError`].

use std::fmt::Write as _;
use std::path::Path;

use hyperspec_core::galoisline::{crosscheck, Law};
use hyperspec_core::hyperkernel::{krasner, signs, Mode};
use hyperspec_core::specops::SpecEngine;
use hyperspec_core::{FpPoly, LawReport, PrimeField};
use serde_json::{json, Value};

use crate::formats::{
    hyperop_json, hyperring_json, hypertable_json, labels, law_report_json, line_json, parse_hyper,
    HyperInput,
};
use crate::suite::{compute_table, load_hopf, run_suite, SuiteConfig};
use crate::{CliError, EXIT_FAIL, EXIT_OK};

/// Largest degree `line` accepts.
pub const MAX_LINE_DEGREE: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn code(pass: bool) -> u8 {
    if pass {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

/// `laws <file|builtin:K|builtin:S>`
pub fn cmd_laws(input: &str) -> Result<Outcome, CliError> {
    let parsed = match input {
        "builtin:K" => HyperInput::Ring(krasner()),
        "builtin:S" => HyperInput::Ring(signs()),
        s if s.starts_with("builtin:") => {
            return Err(CliError::Format(format!(
                "unknown builtin {s:?}; expected builtin:K or builtin:S"
            )))
        }
        path => {
            let text =
                std::fs::read_to_string(path).map_err(|e| CliError::io(Path::new(path), e))?;
            parse_hyper(&text)?
        }
    };
    let (kind, structure, report) = match &parsed {
        HyperInput::Table(t) => {
            let mut r = LawReport::new();
            r.merge("", t.check_hypergroup(Mode::Canonical));
            r.note(
                "marty",
                t.check_hypergroup(Mode::Marty).all_pass(),
                Vec::<String>::new(),
            );
            ("hypergroup", hypertable_json(t), r)
        }
        HyperInput::Ring(h) => ("hyperring", hyperring_json(h), h.check_hyperring()),
    };
    let pass = report.all_pass();
    let v = json!({
        "input": input,
        "structure": kind,
        "carrier": structure["carrier"],
        "pass": pass,
        "report": law_report_json(&report),
    });
    Ok(Outcome {
        stdout: render(&v),
        code: code(pass),
    })
}

/// Finds a point by label, accepting `T-2`, `(T-2)` or `(T+3)` alike.
fn find_point(e: &SpecEngine, name: &str) -> Result<usize, CliError> {
    let trimmed = name.trim();
    if let Some(i) = e.index_of_label(trimmed) {
        return Ok(i);
    }
    if e.algebra().generator().is_some() {
        if let Ok(poly) = FpPoly::parse(e.algebra().field(), trimmed) {
            if let Some(i) = e.index_of_label(&format!("({})", poly.monic())) {
                return Ok(i);
            }
        }
    }
    Err(CliError::Format(format!(
        "{name:?} is not a point; points are {}",
        e.labels().join(" ")
    )))
}

fn text_table(e: &SpecEngine, cell: impl Fn(usize, usize) -> String) -> String {
    let n = e.len();
    let cells: Vec<Vec<String>> = (0..n)
        .map(|f| (0..n).map(|g| cell(f, g)).collect())
        .collect();
    let head = e.labels().iter().map(String::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..n)
        .map(|g| {
            cells
                .iter()
                .map(|r| r[g].len())
                .chain([e.label(g).len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    let _ = write!(out, "{:head$} |", "*");
    for (g, w) in widths.iter().enumerate() {
        let _ = write!(out, " {:w$}", e.label(g), w = *w);
    }
    out.truncate(out.trim_end().len());
    out.push('\n');
    for (f, row) in cells.iter().enumerate() {
        let _ = write!(out, "{:head$} |", e.label(f));
        for (g, c) in row.iter().enumerate() {
            let _ = write!(out, " {:w$}", c, w = widths[g]);
        }
        out.truncate(out.trim_end().len());
        out.push('\n');
    }
    out
}

/// `hyperop <spec> [--pair F G] [--json]`
pub fn cmd_hyperop(
    spec: &str,
    pair: Option<(&str, &str)>,
    as_json: bool,
) -> Result<Outcome, CliError> {
    let e = SpecEngine::new(load_hopf(spec, None)?)?;
    let stdout = match pair {
        Some((f, g)) => {
            let (f, g) = (find_point(&e, f)?, find_point(&e, g)?);
            let r = e.hyperop(f, g);
            if as_json {
                render(&hyperop_json(&e, &r))
            } else {
                format!(
                    "{} * {} = {}\nforced-zero ideal: {}\n",
                    e.label(f),
                    e.label(g),
                    e.format_set(&r.members),
                    e.algebra().ideal_label(&r.forced_zero)
                )
            }
        }
        None => {
            let (_, t) = compute_table(&e);
            if as_json {
                let n = e.len();
                let grid: Vec<Vec<Vec<String>>> = (0..n)
                    .map(|f| (0..n).map(|g| labels(&e, t.get(f, g))).collect())
                    .collect();
                render(&json!({ "algebra": spec, "points": e.labels(), "table": grid }))
            } else {
                let mut s = format!("{spec}: {} points\n", e.len());
                s.push_str(&text_table(&e, |f, g| e.format_set(t.get(f, g))));
                s
            }
        }
    };
    Ok(Outcome {
        stdout,
        code: EXIT_OK,
    })
}

/// `verify [--suite FILE]`; also writes the report to the configured output.
pub fn cmd_verify(suite: Option<&Path>, timings: bool) -> Result<(Outcome, SuiteConfig), CliError> {
    let cfg = match suite {
        Some(p) => SuiteConfig::load(p)?,
        None => SuiteConfig::default(),
    };
    let reports = run_suite(&cfg, timings)?;
    let failures: Vec<String> = reports
        .iter()
        .flat_map(|r| {
            r.must_pass_failures()
                .map(move |e| format!("{}: {}", r.algebra, e.id))
        })
        .collect();
    let pass = failures.is_empty();
    let v = json!({
        "suite": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        "pass": pass,
        "failures": failures,
    });
    let stdout = render(&v);
    if let Some(out) = &cfg.output {
        let path = match &cfg.base {
            Some(b) if out.is_relative() => b.join(out),
            _ => out.clone(),
        };
        std::fs::write(&path, &stdout).map_err(|e| CliError::io(&path, e))?;
    }
    if cfg.verbosity > 0 {
        for r in &reports {
            let bad: Vec<&str> = r.must_pass_failures().map(|e| e.id).collect();
            if bad.is_empty() {
                eprintln!("{}: all must-pass checks green", r.algebra);
            } else {
                eprintln!("{}: failing {}", r.algebra, bad.join(", "));
            }
        }
    }
    Ok((
        Outcome {
            stdout,
            code: code(pass),
        },
        cfg,
    ))
}

/// `line --p P --law {add,mul} --max-degree D`
pub fn cmd_line(p: u32, law: Law, max_degree: usize) -> Result<Outcome, CliError> {
    if !(1..=MAX_LINE_DEGREE).contains(&max_degree) {
        return Err(CliError::Format(format!(
            "max-degree must be in 1..={MAX_LINE_DEGREE}"
        )));
    }
    let field = PrimeField::new(p)?;
    let r = crosscheck(field, law, max_degree)?;
    Ok(Outcome {
        stdout: render(&line_json(&r)),
        code: code(r.report.all_pass()),
    })
}
