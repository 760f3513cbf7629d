//! JSON encodings of tables, algebras, Hopf data and reports.
//!
//! Matrices of linear maps are stored one row per basis element: row `i` of
//! `"delta"` is `Δ(b_i)` in the basis `b_j ⊗ b_k` (index `j * dim + k`), row
//! `i` of `"antipode"` is `S(b_i)`, and `"counit"` is the single row
//! `[ε(b_0), ..., ε(b_{n-1})]`.

use std::collections::{BTreeMap, BTreeSet};

use hyperspec_core::algkernel::{Algebra, Ideal, LinMap};
use hyperspec_core::galoisline::{LineReport, PairResult};
use hyperspec_core::hopfkernel::HopfData;
use hyperspec_core::hyperkernel::{HyperRingTable, HyperTable, MAX_CARRIER};
use hyperspec_core::specops::{HyperopResult, PrimalityReport, SpecEngine};
use hyperspec_core::{FpPoly, LawReport, PrimeField};
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::CliError;

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Format(msg.into())
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum OneOrMany {
    One(String),
    Many(Vec<String>),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct HyperDoc {
    carrier: Vec<String>,
    op: BTreeMap<String, Vec<String>>,
    mul: Option<BTreeMap<String, OneOrMany>>,
    zero: Option<String>,
    one: Option<String>,
}

/// A parsed `laws` input.
#[derive(Debug, Clone)]
pub enum HyperInput {
    Table(HyperTable),
    Ring(HyperRingTable),
}

struct Carrier<'a> {
    names: &'a [String],
}

impl Carrier<'_> {
    fn index(&self, name: &str) -> Result<usize, CliError> {
        self.names
            .iter()
            .position(|n| n == name.trim())
            .ok_or_else(|| bad(format!("{name:?} is not in the carrier")))
    }

    /// Every `"a,b"` key exactly once, as `(a, b) -> value`.
    fn pairs<'v, V>(
        &self,
        what: &str,
        map: &'v BTreeMap<String, V>,
    ) -> Result<Vec<&'v V>, CliError> {
        let n = self.names.len();
        let mut slots: Vec<Option<&V>> = vec![None; n * n];
        for (key, v) in map {
            let (a, b) = key
                .split_once(',')
                .ok_or_else(|| bad(format!("{what} key {key:?} is not \"a,b\"")))?;
            let (a, b) = (self.index(a)?, self.index(b)?);
            if slots[a * n + b].replace(v).is_some() {
                return Err(bad(format!("{what} key {key:?} repeated")));
            }
        }
        slots
            .into_iter()
            .enumerate()
            .map(|(k, v)| {
                v.ok_or_else(|| {
                    bad(format!(
                        "{what} has no entry for \"{},{}\"",
                        self.names[k / n],
                        self.names[k % n]
                    ))
                })
            })
            .collect()
    }
}

pub fn parse_hyper(text: &str) -> Result<HyperInput, CliError> {
    let doc: HyperDoc = serde_json::from_str(text)?;
    let names = doc.carrier;
    if names.is_empty() || names.len() > MAX_CARRIER {
        return Err(bad(format!("carrier size must be 1..={MAX_CARRIER}")));
    }
    if names
        .iter()
        .any(|n| n.contains(',') || n.trim() != n || n.is_empty())
    {
        return Err(bad(
            "carrier names must be nonempty, trimmed and comma-free",
        ));
    }
    if names.iter().collect::<BTreeSet<_>>().len() != names.len() {
        return Err(bad("carrier names repeat"));
    }
    let carrier = Carrier { names: &names };
    let mut op = Vec::with_capacity(names.len() * names.len());
    for set in carrier.pairs("op", &doc.op)? {
        let mut mask = 0u64;
        for x in set {
            let bit = 1u64 << carrier.index(x)?;
            if mask & bit != 0 {
                return Err(bad(format!("element {x:?} repeated in a sum")));
            }
            mask |= bit;
        }
        op.push(mask);
    }
    let add = HyperTable::new(names.clone(), op)?;
    match (doc.mul, doc.zero, doc.one) {
        (None, None, None) => Ok(HyperInput::Table(add)),
        (Some(mul), Some(zero), Some(one)) => {
            let mut m = Vec::with_capacity(names.len() * names.len());
            for v in carrier.pairs("mul", &mul)? {
                let name = match v {
                    OneOrMany::One(s) => s,
                    OneOrMany::Many(v) if v.len() == 1 => &v[0],
                    OneOrMany::Many(_) => return Err(bad("mul entries must be single elements")),
                };
                m.push(carrier.index(name)?);
            }
            let (zero, one) = (carrier.index(&zero)?, carrier.index(&one)?);
            Ok(HyperInput::Ring(HyperRingTable::new(add, m, zero, one)?))
        }
        _ => Err(bad(
            "a hyperring needs all of \"mul\", \"zero\" and \"one\"",
        )),
    }
}

pub fn hypertable_json(t: &HyperTable) -> Value {
    let names = t.names();
    let mut op = Map::new();
    for a in 0..t.len() {
        for b in 0..t.len() {
            let set: Vec<&str> = (0..t.len())
                .filter(|&c| t.op(a, b) >> c & 1 == 1)
                .map(|c| names[c].as_str())
                .collect();
            op.insert(format!("{},{}", names[a], names[b]), json!(set));
        }
    }
    json!({ "carrier": names, "op": op })
}

pub fn hyperring_json(r: &HyperRingTable) -> Value {
    let mut v = hypertable_json(r.add());
    let names = r.names();
    let mut mul = Map::new();
    for a in 0..r.len() {
        for b in 0..r.len() {
            mul.insert(
                format!("{},{}", names[a], names[b]),
                json!(names[r.mul(a, b)]),
            );
        }
    }
    let obj = v.as_object_mut().expect("object");
    obj.insert("mul".into(), Value::Object(mul));
    obj.insert("zero".into(), json!(names[r.zero()]));
    obj.insert("one".into(), json!(names[r.one()]));
    v
}

/// `{axiom: {"pass", "witness"}, ..., "findings": {name: {"value", "detail"}}}`.
pub fn law_report_json(r: &LawReport) -> Value {
    let mut out = Map::new();
    for v in &r.verdicts {
        out.insert(
            v.axiom.clone(),
            json!({ "pass": v.pass, "witness": v.witness }),
        );
    }
    if !r.findings.is_empty() {
        let mut f = Map::new();
        for x in &r.findings {
            f.insert(
                x.name.clone(),
                json!({ "value": x.value, "detail": x.detail }),
            );
        }
        out.insert("findings".into(), Value::Object(f));
    }
    Value::Object(out)
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraDoc {
    p: u32,
    dim: usize,
    basis: Vec<String>,
    mul: Vec<Vec<Vec<u32>>>,
    unit: Vec<u32>,
    generator: Option<Vec<u32>>,
    delta: Option<Vec<Vec<u32>>>,
    counit: Option<Vec<Vec<u32>>>,
    antipode: Option<Vec<Vec<u32>>>,
}

fn check_vec(field: PrimeField, what: &str, v: &[u32], len: usize) -> Result<(), CliError> {
    if v.len() != len {
        return Err(bad(format!(
            "{what} has length {}, expected {len}",
            v.len()
        )));
    }
    if let Some(c) = v.iter().find(|&&c| c >= field.p()) {
        return Err(bad(format!(
            "{what} has entry {c} outside [0, {})",
            field.p()
        )));
    }
    Ok(())
}

fn rows_to_map(
    field: PrimeField,
    what: &str,
    rows: &[Vec<u32>],
    n: usize,
    len: usize,
) -> Result<LinMap, CliError> {
    if rows.len() != n {
        return Err(bad(format!("{what} has {} rows, expected {n}", rows.len())));
    }
    for r in rows {
        check_vec(field, what, r, len)?;
    }
    Ok(LinMap::from_images(field, len, rows))
}

fn parse_algebra_doc(doc: &AlgebraDoc) -> Result<Algebra, CliError> {
    let field = PrimeField::new(doc.p)?;
    let n = doc.dim;
    if n == 0 || doc.basis.len() != n || doc.mul.len() != n {
        return Err(bad("dim, basis and mul disagree"));
    }
    let mut flat = Vec::with_capacity(n * n * n);
    for row in &doc.mul {
        if row.len() != n {
            return Err(bad("mul must be dim x dim x dim"));
        }
        for v in row {
            check_vec(field, "mul", v, n)?;
            flat.extend_from_slice(v);
        }
    }
    check_vec(field, "unit", &doc.unit, n)?;
    let alg = Algebra::new(field, doc.basis.clone(), flat, doc.unit.clone())?;
    match &doc.generator {
        Some(g) => {
            check_vec(field, "generator", g, n)?;
            Ok(alg.with_generator(g.clone())?)
        }
        None => Ok(alg),
    }
}

/// A structure-constant algebra; Hopf keys, if present, are ignored.
pub fn parse_algebra(text: &str) -> Result<Algebra, CliError> {
    parse_algebra_doc(&serde_json::from_str(text)?)
}

/// Hopf data as stored; the axioms are not checked here.
pub fn parse_hopf(text: &str) -> Result<HopfData, CliError> {
    let doc: AlgebraDoc = serde_json::from_str(text)?;
    let alg = parse_algebra_doc(&doc)?;
    let (field, n) = (alg.field(), alg.dim());
    let (Some(delta), Some(counit), Some(antipode)) = (&doc.delta, &doc.counit, &doc.antipode)
    else {
        return Err(bad(
            "Hopf data needs \"delta\", \"counit\" and \"antipode\"",
        ));
    };
    let delta = rows_to_map(field, "delta", delta, n, n * n)?;
    if counit.len() != 1 {
        return Err(bad("counit must be a single row"));
    }
    check_vec(field, "counit", &counit[0], n)?;
    let counit = LinMap::from_images(
        field,
        1,
        &counit[0].iter().map(|&c| vec![c]).collect::<Vec<_>>(),
    );
    let antipode = rows_to_map(field, "antipode", antipode, n, n)?;
    Ok(HopfData::new(alg, delta, counit, antipode)?)
}

pub fn algebra_json(a: &Algebra) -> Value {
    let n = a.dim();
    let mul: Vec<Vec<&[u32]>> = (0..n)
        .map(|i| (0..n).map(|j| a.product_row(i, j)).collect())
        .collect();
    let mut v =
        json!({ "p": a.field().p(), "dim": n, "basis": a.names(), "mul": mul, "unit": a.unit() });
    if let Some(g) = a.generator() {
        v.as_object_mut()
            .expect("object")
            .insert("generator".into(), json!(g));
    }
    v
}

fn map_rows(m: &LinMap) -> Vec<Vec<u32>> {
    (0..m.src_dim()).map(|i| m.image_of(i)).collect()
}

pub fn hopf_json(h: &HopfData) -> Value {
    let mut v = algebra_json(h.algebra());
    let obj = v.as_object_mut().expect("object");
    obj.insert("delta".into(), json!(map_rows(h.delta())));
    let counit: Vec<u32> = map_rows(h.counit()).into_iter().map(|r| r[0]).collect();
    obj.insert("counit".into(), json!([counit]));
    obj.insert("antipode".into(), json!(map_rows(h.antipode())));
    v
}

/// Echelon basis rows.
pub fn ideal_json(i: &Ideal) -> Value {
    json!(i.space().basis())
}

pub fn primality_json(e: &SpecEngine, r: &PrimalityReport) -> Value {
    let scan = match &r.scan {
        None => json!({ "ran": false }),
        Some(None) => json!({ "ran": true, "zero_divisors": null }),
        Some(Some((x, y))) => json!({ "ran": true, "zero_divisors": [x, y] }),
    };
    json!({
        "f": e.label(r.f),
        "g": e.label(r.g),
        "ideal": r.label,
        "prime": r.prime,
        "scan": scan,
        "consistent": r.consistent(),
    })
}

pub fn labels(e: &SpecEngine, set: &[usize]) -> Vec<String> {
    set.iter().map(|&i| e.label(i).to_string()).collect()
}

pub fn hyperop_json(e: &SpecEngine, r: &HyperopResult) -> Value {
    let lemcc = e.lemcc_check(std::slice::from_ref(r));
    let prim = e.delta_preimage_ideal(r.f, r.g);
    json!({
        "f": e.label(r.f),
        "g": e.label(r.g),
        "result": labels(e, &r.members),
        "forced_zero_ideal": ideal_json(&r.forced_zero),
        "lemma_reports": {
            "lemcc": law_report_json(&lemcc),
            "nontrivialop": primality_json(e, &prim),
        },
    })
}

/// `(f)*(g) = {a, b}` with bare member polynomials.
pub fn pair_text(r: &PairResult) -> String {
    let members: Vec<String> = r.galois.iter().map(FpPoly::to_string).collect();
    format!("({})*({}) = {{{}}}", r.f, r.g, members.join(", "))
}

pub fn line_json(r: &LineReport) -> Value {
    let law = r.law.to_string();
    let coeffs = |v: &[FpPoly]| -> Vec<Vec<u32>> { v.iter().map(FpPoly::to_vec).collect() };
    let pairs: Vec<Value> = r
        .pairs
        .iter()
        .map(|pr| {
            json!({
                "p": r.field.p(),
                "law": law,
                "f": pr.f.to_vec(),
                "g": pr.g.to_vec(),
                "galois": coeffs(&pr.galois),
                "definitional": coeffs(&pr.definitional),
                "agree": pr.agree,
                "text": pair_text(pr),
            })
        })
        .collect();
    json!({
        "p": r.field.p(),
        "law": law,
        "max_degree": r.max_degree,
        "points": r.points.iter().map(|q| format!("({q})")).collect::<Vec<_>>(),
        "agree": r.all_agree(),
        "pass": r.report.all_pass(),
        "associativity": { "checked": r.triples_checked, "skipped": r.triples_skipped },
        "report": law_report_json(&r.report),
        "pairs": pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use hyperspec_core::hyperkernel::{krasner, signs};

    #[test]
    fn hyperrings_round_trip() {
        for r in [krasner(), signs()] {
            let text = hyperring_json(&r).to_string();
            let HyperInput::Ring(back) = parse_hyper(&text).unwrap() else {
                panic!("not a ring")
            };
            assert_eq!(back, r);
        }
    }

    #[test]
    fn missing_and_unknown_entries() {
        let ok =
            r#"{"carrier":["0","1"],"op":{"0,0":["0"],"0,1":["1"],"1,0":["1"],"1,1":["0","1"]}}"#;
        assert!(matches!(parse_hyper(ok).unwrap(), HyperInput::Table(_)));
        let missing = r#"{"carrier":["0","1"],"op":{"0,0":["0"],"0,1":["1"],"1,0":["1"]}}"#;
        assert!(parse_hyper(missing).is_err());
        let stranger =
            r#"{"carrier":["0","1"],"op":{"0,0":["0"],"0,1":["1"],"1,0":["1"],"1,1":["2"]}}"#;
        assert!(parse_hyper(stranger).is_err());
        let empty = r#"{"carrier":["0","1"],"op":{"0,0":["0"],"0,1":["1"],"1,0":["1"],"1,1":[]}}"#;
        assert!(parse_hyper(empty).is_err());
        let half_ring = r#"{"carrier":["0"],"op":{"0,0":["0"]},"zero":"0"}"#;
        assert!(parse_hyper(half_ring).is_err());
    }

    #[test]
    fn hopf_round_trip() {
        for spec in ["mu:5:4", "addetale:3:2"] {
            let h = HopfData::builtin(spec).unwrap();
            let text = hopf_json(&h).to_string();
            let back = parse_hopf(&text).unwrap();
            assert!(back.verify_hopf().all_pass());
            assert_eq!(hopf_json(&back), hopf_json(&h));
        }
    }

    #[test]
    fn entries_out_of_range() {
        let h = HopfData::builtin("mu:3:2").unwrap();
        let mut v = hopf_json(&h);
        v["unit"] = json!([3, 0]);
        assert!(parse_hopf(&v.to_string()).is_err());
    }
}
