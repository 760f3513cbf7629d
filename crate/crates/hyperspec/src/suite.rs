//! The per-algebra traceability suite behind `verify`.

use std::path::{Path, PathBuf};
use std::time::Instant;

use hyperspec_core::algkernel::Ideal;
use hyperspec_core::hopfkernel::HopfData;
use hyperspec_core::specops::{
    classical_comparison, descend_and_compare, HyperopTable, SpecEngine,
};
use hyperspec_core::{FpPoly, LawReport};
use rayon::prelude::*;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::formats::{labels, law_report_json, parse_hopf, primality_json};
use crate::CliError;

/// Checks whose failure fails the run, in report order.
pub const MUST_PASS: &[&str] = &[
    "hopf_axioms",
    "setsame",
    "neutralelt",
    "inverse",
    "reversibility",
    "weak_associativity",
    "nonempty",
    "comparison",
    "inducedfromgeneral",
    "lemcc",
];

/// Checks that are recorded but never affect the exit code.
pub const REPORT_ONLY: &[&str] = &["nontrivialop"];

pub const DEFAULT_SUITE: &[&str] = &["mu:3:2", "mu:5:4", "addetale:3:1", "addetale:3:2"];

pub fn trace_ids() -> impl Iterator<Item = &'static str> {
    MUST_PASS.iter().chain(REPORT_ONLY).copied()
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    /// Built-in specs (`mu:p:n`, `addetale:p:k`) or Hopf data files.
    pub algebras: Vec<String>,
    /// Subset of the trace ids to run; all when absent.
    #[serde(default)]
    pub checks: Option<Vec<String>>,
    /// Also write the report here.
    #[serde(default)]
    pub output: Option<PathBuf>,
    /// 0: JSON only; 1 and up: a summary line per algebra on stderr.
    #[serde(default)]
    pub verbosity: u8,
    /// Directory that relative algebra paths resolve against.
    #[serde(skip)]
    pub base: Option<PathBuf>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            algebras: DEFAULT_SUITE.iter().map(|s| s.to_string()).collect(),
            checks: None,
            output: None,
            verbosity: 0,
            base: None,
        }
    }
}

impl SuiteConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let mut cfg: SuiteConfig = serde_json::from_str(&text)?;
        cfg.base = path.parent().map(Path::to_path_buf);
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.algebras.is_empty() {
            return Err(CliError::Format("suite lists no algebras".into()));
        }
        for c in self.checks.iter().flatten() {
            if !trace_ids().any(|id| id == c) {
                return Err(CliError::Format(format!("unknown check {c:?}")));
            }
        }
        Ok(())
    }

    fn wants(&self, id: &str) -> bool {
        self.checks
            .as_ref()
            .map_or(true, |c| c.iter().any(|x| x == id))
    }
}

/// Parameters of a built-in spec, when the spec is one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    Mu { p: u32, n: usize },
    AddEtale { p: u32, k: u32 },
}

pub fn parse_builtin(spec: &str) -> Option<Builtin> {
    let spec = spec.strip_prefix("builtin:").unwrap_or(spec);
    let mut it = spec.split(':');
    let (kind, p, x) = (it.next()?, it.next()?.parse().ok()?, it.next()?);
    if it.next().is_some() {
        return None;
    }
    match kind {
        "mu" => Some(Builtin::Mu {
            p,
            n: x.parse().ok()?,
        }),
        "addetale" => Some(Builtin::AddEtale {
            p,
            k: x.parse().ok()?,
        }),
        _ => None,
    }
}

fn looks_builtin(spec: &str) -> bool {
    let s = spec.strip_prefix("builtin:").unwrap_or(spec);
    s.starts_with("mu:") || s.starts_with("addetale:")
}

/// A built-in spec or a Hopf data file (relative to `base`).
pub fn load_hopf(spec: &str, base: Option<&Path>) -> Result<HopfData, CliError> {
    if looks_builtin(spec) {
        return Ok(HopfData::builtin(
            spec.strip_prefix("builtin:").unwrap_or(spec),
        )?);
    }
    let mut path = PathBuf::from(spec);
    if path.is_relative() {
        if let Some(b) = base {
            path = b.join(path);
        }
    }
    let text = std::fs::read_to_string(&path).map_err(|e| CliError::io(&path, e))?;
    parse_hopf(&text)
}

/// Hopf ideals to descend along: the augmentation ideal, and for built-ins
/// the subgroups `μ_d` (`T^d - 1`, `d | n`) or `F_{p^j}` (`T^{p^j} - T`,
/// `j | k`).
pub fn descent_ideals(e: &SpecEngine, builtin: Option<Builtin>) -> Vec<Ideal> {
    let a = e.algebra();
    let field = a.field();
    let mut out = vec![e.hopf().augmentation_ideal()];
    let mut polys = Vec::new();
    match builtin {
        Some(Builtin::Mu { n, .. }) => {
            for d in (1..n).filter(|d| n % d == 0) {
                let mut c = vec![0i64; d + 1];
                c[0] = -1;
                c[d] = 1;
                polys.push(FpPoly::from_i64(field, &c));
            }
        }
        Some(Builtin::AddEtale { p, k }) => {
            for j in (1..k).filter(|j| k % j == 0) {
                let deg = (p as usize).pow(j);
                let mut c = vec![0i64; deg + 1];
                c[1] = -1;
                c[deg] = 1;
                polys.push(FpPoly::from_i64(field, &c));
            }
        }
        None => {}
    }
    for poly in polys {
        if let Ok(i) = Ideal::from_poly(a, &poly) {
            if !out.contains(&i) {
                out.push(i);
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    ReportOnly,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ReportOnly => "report-only",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone)]
pub struct TraceEntry {
    pub id: &'static str,
    pub status: Status,
    pub witness: Vec<String>,
    pub detail: Value,
    pub runtime_ms: Option<u128>,
}

/// One algebra's run: every trace id exactly once, in [`trace_ids`] order.
#[derive(Debug, Clone)]
pub struct TraceReport {
    pub algebra: String,
    pub points: Vec<String>,
    pub table: Option<Vec<Vec<Vec<String>>>>,
    pub entries: Vec<TraceEntry>,
}

impl TraceReport {
    pub fn entry(&self, id: &str) -> Option<&TraceEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn must_pass_failures(&self) -> impl Iterator<Item = &TraceEntry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn to_json(&self) -> Value {
        let mut trace = Map::new();
        for e in &self.entries {
            let mut v =
                json!({ "status": e.status.as_str(), "witness": e.witness, "detail": e.detail });
            if let Some(ms) = e.runtime_ms {
                v.as_object_mut()
                    .expect("object")
                    .insert("runtime_ms".into(), json!(ms));
            }
            trace.insert(e.id.into(), v);
        }
        json!({
            "algebra": self.algebra,
            "points": self.points,
            "table": self.table,
            "pass": self.must_pass_failures().next().is_none(),
            "trace": trace,
        })
    }
}

fn from_report(id: &'static str, r: &LawReport) -> TraceEntry {
    let witness = r
        .failures()
        .flat_map(|v| std::iter::once(v.axiom.clone()).chain(v.witness.iter().cloned()))
        .collect();
    TraceEntry {
        id,
        status: if r.all_pass() {
            Status::Pass
        } else {
            Status::Fail
        },
        witness,
        detail: law_report_json(r),
        runtime_ms: None,
    }
}

fn timed(timings: bool, run: impl FnOnce() -> TraceEntry) -> TraceEntry {
    let start = Instant::now();
    let mut e = run();
    if timings {
        e.runtime_ms = Some(start.elapsed().as_millis());
    }
    e
}

fn skipped(id: &'static str, why: &str) -> TraceEntry {
    let status = if REPORT_ONLY.contains(&id) {
        Status::ReportOnly
    } else {
        Status::Skipped
    };
    TraceEntry {
        id,
        status,
        witness: vec![why.to_string()],
        detail: Value::Null,
        runtime_ms: None,
    }
}

/// The full hyperoperation table, pairs in parallel.
pub fn compute_table(
    e: &SpecEngine,
) -> (Vec<hyperspec_core::specops::HyperopResult>, HyperopTable) {
    let n = e.len();
    let results: Vec<_> = (0..n * n)
        .into_par_iter()
        .map(|k| e.hyperop(k / n, k % n))
        .collect();
    let table = HyperopTable::from_results(n, &results);
    (results, table)
}

pub fn run_algebra(spec: &str, cfg: &SuiteConfig, timings: bool) -> Result<TraceReport, CliError> {
    let hopf = load_hopf(spec, cfg.base.as_deref())?;
    let mut entries = Vec::new();
    let hopf_report = hopf.verify_hopf();
    entries.push(timed(timings, || from_report("hopf_axioms", &hopf_report)));
    let engine = match SpecEngine::new(hopf) {
        Ok(e) if hopf_report.all_pass() => e,
        _ => {
            for id in trace_ids().skip(1) {
                let mut t = skipped(id, "not evaluated: the Hopf axioms fail");
                if t.status == Status::Skipped {
                    t.status = Status::Fail;
                }
                entries.push(t);
            }
            return Ok(TraceReport {
                algebra: spec.to_string(),
                points: Vec::new(),
                table: None,
                entries,
            });
        }
    };
    let e = &engine;
    let (results, table) = compute_table(e);
    let t = &table;
    let builtin = parse_builtin(spec);

    for id in trace_ids().skip(1) {
        if !cfg.wants(id) {
            entries.push(skipped(id, "not selected"));
            continue;
        }
        let entry = timed(timings, || match id {
            "setsame" => from_report(id, &e.setsame_check()),
            "neutralelt" => from_report(id, &e.identity_law(t)),
            "inverse" => from_report(id, &e.inverse_law(t)),
            "reversibility" => from_report(id, &e.reversibility_check(t)),
            "weak_associativity" => from_report(id, &e.weak_associativity(t)),
            "nonempty" => from_report(id, &e.nonempty_check(t)),
            "comparison" => {
                let q = e.algebra().field().p() as u64;
                from_report(
                    id,
                    &classical_comparison(e, t, q).unwrap_or_else(LawReport::from),
                )
            }
            "inducedfromgeneral" => {
                let mut r = LawReport::new();
                for ideal in descent_ideals(e, builtin) {
                    let label = e.algebra().ideal_label(&ideal);
                    let sub = descend_and_compare(e, t, &ideal).unwrap_or_else(LawReport::from);
                    r.merge(&format!("{label}."), sub);
                }
                from_report(id, &r)
            }
            "lemcc" => from_report(id, &e.lemcc_check(&results)),
            "nontrivialop" => {
                let n = e.len();
                let pairs: Vec<Value> = (0..n * n)
                    .into_par_iter()
                    .map(|k| primality_json(e, &e.delta_preimage_ideal(k / n, k % n)))
                    .collect();
                let inconsistent: Vec<String> = pairs
                    .iter()
                    .filter(|v| v["consistent"] == json!(false))
                    .map(|v| format!("{}*{}: verdict disagrees with the scan", v["f"], v["g"]))
                    .collect();
                TraceEntry {
                    id,
                    status: Status::ReportOnly,
                    witness: inconsistent,
                    detail: json!({ "pairs": pairs }),
                    runtime_ms: None,
                }
            }
            _ => unreachable!("unknown trace id {id}"),
        });
        entries.push(entry);
    }
    let n = e.len();
    let grid = (0..n)
        .map(|f| (0..n).map(|g| labels(e, t.get(f, g))).collect())
        .collect();
    Ok(TraceReport {
        algebra: spec.to_string(),
        points: e.labels().to_vec(),
        table: Some(grid),
        entries,
    })
}

/// Runs every algebra (concurrently), keeping the configured order.
pub fn run_suite(cfg: &SuiteConfig, timings: bool) -> Result<Vec<TraceReport>, CliError> {
    cfg.algebras
        .par_iter()
        .map(|spec| run_algebra(spec, cfg, timings))
        .collect()
}
