//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hyperspec_core::algkernel::{Algebra, Ideal};
use hyperspec_core::hopfkernel::HopfData;
use hyperspec_core::hyperkernel::{find_isomorphism, krasner, quotient_hyperring, FiniteRing};
use hyperspec_core::specops::{
    classical_comparison, descend_and_compare, HyperopTable, SpecEngine,
};
use hyperspec_core::{FpPoly, LawReport, PrimeField};
use serde_json::Value;

type Check = Result<String, String>;

const SUITE: &[&str] = &["mu:3:2", "mu:5:4", "addetale:3:1", "addetale:3:2"];

fn engine(spec: &str) -> (SpecEngine, HyperopTable) {
    let e = SpecEngine::new(HopfData::builtin(spec).unwrap()).unwrap();
    let t = e.table();
    (e, t)
}

fn green(what: &str, r: &LawReport) -> Result<(), String> {
    match r.failures().next() {
        None => Ok(()),
        Some(v) => Err(format!("{what}: {} {:?}", v.axiom, v.witness)),
    }
}

fn cli(args: &[&str]) -> (Option<i32>, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_hyperspec"))
        .args(args)
        .output()
        .expect("binary runs");
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code(), v)
}

fn hyperfield_axioms() -> Check {
    for name in ["builtin:K", "builtin:S"] {
        let (code, v) = cli(&["laws", name]);
        if code != Some(0) || v["pass"] != Value::Bool(true) {
            return Err(format!("{name}: exit {code:?}"));
        }
        let axioms = v["report"].as_object().map_or(0, |m| m.len());
        if axioms < 10 {
            return Err(format!("{name}: only {axioms} axioms reported"));
        }
    }
    Ok("K and S pass every canonical-hypergroup and hyperring axiom".into())
}

fn quotient_construction() -> Check {
    let k = krasner();
    let (mut fields, mut quotients) = (0, 0);
    for q in 3..=49usize {
        let Ok(ring) = FiniteRing::galois_field(q) else {
            continue;
        };
        fields += 1;
        for g in ring.cyclic_subgroups() {
            let h = quotient_hyperring(&ring, &g).map_err(|e| format!("F_{q}: {e}"))?;
            green(&format!("F_{q}/G, |G|={}", g.len()), &h.check_hyperring())?;
            quotients += 1;
        }
        let h = quotient_hyperring(&ring, &ring.units()).unwrap();
        if find_isomorphism(&h, &k).is_none() {
            return Err(format!("F_{q}/F_{q}^x is not K"));
        }
    }
    if fields != 22 {
        return Err(format!(
            "expected 22 fields of order 3..=49, built {fields}"
        ));
    }
    Ok(format!(
        "{quotients} quotients over {fields} fields; every F_q/F_q^x is K"
    ))
}

/// `(T - g^i) * (T - g^j) = {T - g^(i+j)}` for a generator `g` of `F_p^×`.
fn cyclic_table(spec: &str, p: u32, g: u32, n: u32) -> Result<(), String> {
    let (e, t) = engine(spec);
    let f = PrimeField::new(p).unwrap();
    let point = |k: u32| {
        let label = format!("({})", FpPoly::linear(f, f.pow(g, k as u64)));
        e.index_of_label(&label).ok_or(label)
    };
    if e.len() != n as usize {
        return Err(format!("{spec}: {} points", e.len()));
    }
    for i in 0..n {
        for j in 0..n {
            let want = point((i + j) % n)?;
            if t.get(point(i)?, point(j)?) != [want] {
                return Err(format!("{spec}: g^{i} * g^{j}"));
            }
        }
    }
    Ok(())
}

fn mu_group_tables() -> Check {
    cyclic_table("mu:5:4", 5, 2, 4)?;
    cyclic_table("mu:3:2", 3, 2, 2)?;
    Ok("mu:5:4 is Z/4 and mu:3:2 is Z/2, all entries singletons".into())
}

fn identity_law() -> Check {
    for spec in SUITE {
        let (e, t) = engine(spec);
        green(spec, &e.identity_law(&t))?;
    }
    Ok("e*f = f*e = {f} on every suite algebra".into())
}

fn inverse_reversibility() -> Check {
    for spec in ["mu:5:4", "addetale:3:2"] {
        let (e, t) = engine(spec);
        green(spec, &e.inverse_law(&t))?;
        green(spec, &e.reversibility_check(&t))?;
    }
    Ok("antipode inverses and reversibility on mu:5:4, addetale:3:2".into())
}

fn weak_associativity() -> Check {
    let mut counts = Vec::new();
    for (spec, triples) in [("addetale:3:2", 216), ("mu:5:4", 64)] {
        let (e, t) = engine(spec);
        if e.len().pow(3) != triples {
            return Err(format!("{spec}: {} triples", e.len().pow(3)));
        }
        green(spec, &e.weak_associativity(&t))?;
        counts.push(triples.to_string());
    }
    Ok(format!(
        "nonempty intersections on {} triples",
        counts.join(" + ")
    ))
}

fn nonemptiness() -> Check {
    for spec in SUITE {
        let (e, t) = engine(spec);
        green(spec, &e.nonempty_check(&t))?;
    }
    Ok("f*g nonempty for all pairs on every suite algebra".into())
}

fn descent() -> Check {
    for (spec, modulus) in [
        ("mu:5:4", vec![-1, 0, 1]),
        ("addetale:3:2", vec![0, -1, 0, 1]),
    ] {
        let (e, t) = engine(spec);
        let poly = FpPoly::from_i64(e.algebra().field(), &modulus);
        let i = Ideal::from_poly(e.algebra(), &poly).unwrap();
        let r = descend_and_compare(&e, &t, &i).map_err(|err| format!("{spec}: {err}"))?;
        green(spec, &r)?;
    }
    Ok("tilde(f*g) = tilde(f)*tilde(g) for every pair of both quotients".into())
}

fn classical() -> Check {
    for (spec, q) in [("mu:5:4", 5), ("addetale:3:1", 3)] {
        let (e, t) = engine(spec);
        let r = classical_comparison(&e, &t, q).map_err(|err| format!("{spec}: {err}"))?;
        green(spec, &r)?;
        if !r.verdict("injective").is_some_and(|v| v.pass) {
            return Err(format!("{spec}: injectivity not asserted"));
        }
    }
    Ok("i injective and i(f*g) in i(f)*i(g) over F_5 and F_3".into())
}

fn oracle_soundness() -> Check {
    let (e, _) = engine("mu:3:2");
    let mut cases = 0;
    for f in 0..e.len() {
        for g in 0..e.len() {
            for (x, o) in e
                .algebra()
                .elements()
                .iter()
                .zip(e.presentation_oracle_all(f, g, 5).unwrap())
            {
                if !o.consistent() {
                    return Err(format!(
                        "x={x:?}, f={f}, g={g}: search {} vs rank {:?}",
                        o.values, o.forced
                    ));
                }
                cases += 1;
            }
        }
    }
    if cases != 36 {
        return Err(format!("{cases} cases"));
    }
    Ok("36 of 36 presentation searches match the rank rule".into())
}

fn line_engines() -> Check {
    let mut pairs = 0;
    for (law, d) in [("add", "3"), ("mul", "2")] {
        let (code, v) = cli(&["line", "--p", "3", "--law", law, "--max-degree", d]);
        if code != Some(0) || v["agree"] != Value::Bool(true) {
            return Err(format!("{law} {d}: exit {code:?}"));
        }
        for check in [
            "agreement",
            "identity",
            "inverse",
            "reversibility",
            "associativity",
        ] {
            if v["report"][check]["pass"] != Value::Bool(true) {
                return Err(format!("{law} {d}: {check}"));
            }
        }
        pairs += v["pairs"].as_array().map_or(0, Vec::len);
        if law == "add" {
            let texts: Vec<&str> = v["pairs"]
                .as_array()
                .unwrap()
                .iter()
                .filter_map(|p| p["text"].as_str())
                .collect();
            if !texts.contains(&"(T^2+1)*(T^2+1) = {T, T^2+1}") {
                return Err("(T^2+1)*(T^2+1) = {T, T^2+1} missing".into());
            }
        }
    }
    Ok(format!(
        "{pairs} pairs agree; (T^2+1)*(T^2+1) = {{T, T^2+1}} reported"
    ))
}

fn has_zero_divisors(a: &Algebra) -> bool {
    let elems = a.elements();
    elems.iter().any(|x| {
        !Algebra::is_zero(x)
            && elems
                .iter()
                .any(|y| !Algebra::is_zero(y) && Algebra::is_zero(&a.mul(x, y)))
    })
}

fn report_only_primality() -> Check {
    let (code, v) = cli(&["verify"]);
    if code != Some(0) {
        return Err(format!("verify exit {code:?}"));
    }
    let suite = v["suite"].as_array().ok_or("no suite")?;
    let alg = suite
        .iter()
        .find(|r| r["algebra"] == "addetale:3:2")
        .ok_or("addetale:3:2 missing")?;
    let entry = &alg["trace"]["nontrivialop"];
    if entry["status"] != "report-only" {
        return Err(format!("status {}", entry["status"]));
    }
    let pair = entry["detail"]["pairs"]
        .as_array()
        .and_then(|ps| {
            ps.iter()
                .find(|p| p["f"] == "(T^2+1)" && p["g"] == "(T^2+1)")
        })
        .ok_or("pair missing")?;
    if pair["ideal"] != "(T^3+T)" {
        return Err(format!("ideal {}", pair["ideal"]));
    }
    let prime = pair["prime"].as_bool().ok_or("no verdict")?;
    if pair["consistent"] != Value::Bool(true) || pair["scan"]["ran"] != Value::Bool(true) {
        return Err("verdict and scan disagree".into());
    }
    let h = HopfData::builtin("addetale:3:2").unwrap();
    let i = Ideal::from_poly(h.algebra(), &FpPoly::from_i64(h.field(), &[0, 1, 0, 1])).unwrap();
    let (q, _) = h.algebra().quotient(&i).unwrap();
    if prime == has_zero_divisors(&q) {
        return Err("verdict contradicts a fresh zero-divisor scan".into());
    }
    Ok(format!(
        "(T^3+T) reported, prime = {prime}, matches the zero-divisor scan"
    ))
}

type Criterion = (&'static str, u64, fn() -> Check);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("hyperfield axioms", 1, hyperfield_axioms),
        ("quotient hyperrings", 30, quotient_construction),
        ("mu group tables", 1, mu_group_tables),
        ("identity law", 10, identity_law),
        ("inverse and reversibility", 60, inverse_reversibility),
        ("weak associativity", 120, weak_associativity),
        ("nonemptiness", 10, nonemptiness),
        ("descent", 10, descent),
        ("classical comparison", 5, classical),
        ("rank rule vs presentations", 600, oracle_soundness),
        ("line engines", 300, line_engines),
        ("report-only primality", 60, report_only_primality),
    ];
    let mut failed = 0;
    for (i, (name, bound, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let result = match result {
            Ok(msg) if took > Duration::from_secs(*bound) => {
                Err(format!("{msg}, but took over {bound}s"))
            }
            other => other,
        };
        let (tag, msg) = match &result {
            Ok(m) => ("PASS", m),
            Err(m) => {
                failed += 1;
                ("FAIL", m)
            }
        };
        println!(
            "acceptance {:>2} {tag} {name:<28} {:>8.3}s  {msg}",
            i + 1,
            took.as_secs_f64()
        );
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
