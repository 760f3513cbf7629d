//! Closed points of `Spec F_p[T]` (additive coproduct) and of
//! `Spec F_p[T, 1/T]` (multiplicative coproduct), with the hyperoperation
//! computed two ways: from Frobenius orbits of sums or products of roots,
//! and from the definition through the finite algebra
//! `F_p[T]/(f) ⊗ F_p[T]/(g)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algkernel::Algebra;
use crate::error::{Error, Result};
use crate::gfarith::{factor, irreducibles, is_irreducible, ExtField, FpPoly, PrimeField};
use crate::linalg::{scan_projective, Mat};
use crate::report::LawReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Law {
    /// `Δ T = T⊗1 + 1⊗T` on `F_p[T]`.
    Additive,
    /// `Δ T = T⊗T` on `F_p[T, 1/T]`.
    Multiplicative,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Law::Additive => "additive",
            Law::Multiplicative => "multiplicative",
        })
    }
}

impl Law {
    /// The identity point: `(T)` or `(T-1)`.
    pub fn identity(self, field: PrimeField) -> FpPoly {
        match self {
            Law::Additive => FpPoly::t(field),
            Law::Multiplicative => FpPoly::linear(field, 1),
        }
    }

    /// The point of `-α` or `1/α` when `f` is the point of `α`.
    pub fn inverse(self, f: &FpPoly) -> FpPoly {
        match self {
            Law::Additive => f.negate_variable().monic(),
            Law::Multiplicative => f.reciprocal().monic(),
        }
    }
}

/// Checks that `poly` is a closed point for `law`: monic irreducible, and
/// not `T` in the multiplicative case.
pub fn validate_point(law: Law, poly: &FpPoly) -> Result<()> {
    if !poly.is_monic() || !is_irreducible(poly)? {
        return Err(Error::InvalidPoint(format!(
            "{poly} is not monic irreducible"
        )));
    }
    if law == Law::Multiplicative && *poly == FpPoly::t(poly.field()) {
        return Err(Error::InvalidPoint(
            "(T) is not a point of F_p[T, 1/T]".into(),
        ));
    }
    Ok(())
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn deg(p: &FpPoly) -> usize {
    p.degree().unwrap_or(0)
}

/// `f * g` from Frobenius orbits: fix a root `α` of `f`, run over the
/// conjugates `β'` of a root of `g` in `F_{p^m}`, `m = lcm(deg f, deg g)`,
/// and collect the minimal polynomials of `α + β'` (or `α β'`).
pub fn galois_hyperop(law: Law, f: &FpPoly, g: &FpPoly) -> Result<Vec<FpPoly>> {
    galois_hyperop_all_alpha(law, f, g, false)
}

/// As [`galois_hyperop`], optionally varying `α` over all its conjugates too.
pub fn galois_hyperop_all_alpha(
    law: Law,
    f: &FpPoly,
    g: &FpPoly,
    all_alpha: bool,
) -> Result<Vec<FpPoly>> {
    validate_point(law, f)?;
    validate_point(law, g)?;
    if f.field() != g.field() {
        return Err(Error::FieldMismatch(f.field().p(), g.field().p()));
    }
    let m = lcm(deg(f), deg(g));
    let fq = if deg(f) == m {
        ExtField::with_modulus(f.clone())?
    } else {
        ExtField::new(f.field(), m)?
    };
    let alphas = fq.roots(f);
    let betas = fq.roots(g);
    let beta = betas
        .first()
        .expect("an irreducible of degree dividing m splits in F_{p^m}");
    let alpha_list = if all_alpha {
        alphas.clone()
    } else {
        vec![alphas[0].clone()]
    };
    let mut out = Vec::new();
    for alpha in &alpha_list {
        for b in fq.conjugates(beta) {
            let s = match law {
                Law::Additive => fq.add(alpha, &b),
                Law::Multiplicative => fq.mul(alpha, &b),
            };
            out.push(fq.minimal_polynomial(&s));
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// The definitional computation with its intermediate data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefinitionalResult {
    /// Minimal polynomial of the image `s` of `Δ T`; `(g_P)` is the
    /// forced-zero ideal.
    pub g_p: FpPoly,
    pub candidates: Vec<FpPoly>,
    pub members: Vec<FpPoly>,
}

/// `f * g` by definition: the forced-zero ideal is `(g_P)` with `g_P` the
/// minimal polynomial of `s = T⊗1 + 1⊗T` (or `T⊗T`) in
/// `F_p[T]/(f) ⊗ F_p[T]/(g)`; a prime `(π)` with `π | g_P` is a member iff
/// no `x` in `(π)/(g_P)` maps to a rank-one tensor.
pub fn definitional_hyperop(law: Law, f: &FpPoly, g: &FpPoly) -> Result<DefinitionalResult> {
    validate_point(law, f)?;
    validate_point(law, g)?;
    let field = f.field();
    if field != g.field() {
        return Err(Error::FieldMismatch(field.p(), g.field().p()));
    }
    let af = Algebra::monogenic(f)?;
    let ag = Algebra::monogenic(g)?;
    let (df, dg) = (af.dim(), ag.dim());
    let tensor = af.tensor(&ag)?;
    let tf = af.generator().expect("monogenic").to_vec();
    let tg = ag.generator().expect("monogenic").to_vec();
    let kron = |a: &[u32], b: &[u32]| -> Vec<u32> {
        a.iter()
            .flat_map(|&x| b.iter().map(move |&y| field.mul(x, y)))
            .collect()
    };
    let s = match law {
        Law::Additive => tensor.add(&kron(&tf, ag.unit()), &kron(af.unit(), &tg)),
        Law::Multiplicative => kron(&tf, &tg),
    };
    let g_p = tensor.minimal_polynomial(&s);
    let t = FpPoly::t(field);
    let candidates: Vec<FpPoly> = factor(&g_p)?
        .factors
        .into_iter()
        .map(|(q, _)| q)
        .filter(|q| !(law == Law::Multiplicative && *q == t))
        .collect();
    let rank = |v: &[u32]| Mat::from_rows(field, df, dg, v.to_vec()).rank();
    let mut members = Vec::new();
    for pi in &candidates {
        // (π)/(g_P) has basis π T^i, i < deg g_P - deg π; evaluate at s
        let pis = tensor.eval_poly(pi, &s);
        let span = tensor.powers(&s, deg(&g_p) - deg(pi));
        let images: Vec<Vec<u32>> = span.iter().map(|sp| tensor.mul(&pis, sp)).collect();
        if scan_projective(field, &images, |v| rank(v) == 1).is_none() {
            members.push(pi.clone());
        }
    }
    members.sort();
    Ok(DefinitionalResult {
        g_p,
        candidates,
        members,
    })
}

/// One pair of the crosscheck.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairResult {
    pub f: FpPoly,
    pub g: FpPoly,
    pub galois: Vec<FpPoly>,
    pub definitional: Vec<FpPoly>,
    pub agree: bool,
}

/// The crosscheck over all points of degree at most `max_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineReport {
    pub field: PrimeField,
    pub law: Law,
    pub max_degree: usize,
    pub points: Vec<FpPoly>,
    pub pairs: Vec<PairResult>,
    pub report: LawReport,
    pub triples_checked: usize,
    pub triples_skipped: usize,
}

impl LineReport {
    pub fn all_agree(&self) -> bool {
        self.pairs.iter().all(|p| p.agree)
    }
}

pub fn format_set(set: &[FpPoly]) -> String {
    let items: Vec<String> = set.iter().map(|p| format!("({p})")).collect();
    format!("{{{}}}", items.join(", "))
}

/// Memoized Galois engine for the law checks.
struct Memo {
    law: Law,
    table: BTreeMap<(FpPoly, FpPoly), Vec<FpPoly>>,
}

impl Memo {
    fn op(&mut self, f: &FpPoly, g: &FpPoly) -> Vec<FpPoly> {
        let key = (f.clone(), g.clone());
        if let Some(v) = self.table.get(&key) {
            return v.clone();
        }
        let v = galois_hyperop(self.law, f, g).expect("valid points");
        self.table.insert(key, v.clone());
        v
    }

    fn ext(&mut self, a: &[FpPoly], b: &[FpPoly]) -> Vec<FpPoly> {
        let mut out = Vec::new();
        for x in a {
            for y in b {
                out.extend(self.op(x, y));
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

/// All closed points of degree `1..=max_degree` for the law.
pub fn line_points(field: PrimeField, law: Law, max_degree: usize) -> Vec<FpPoly> {
    let t = FpPoly::t(field);
    (1..=max_degree)
        .flat_map(|d| irreducibles(field, d))
        .filter(|q| !(law == Law::Multiplicative && *q == t))
        .collect()
}

/// Runs both engines on every pair of points up to `max_degree` and checks
/// agreement, the degree bounds, commutativity, identity, inverses,
/// reversibility and associativity on the bounded fragment.
pub fn crosscheck(field: PrimeField, law: Law, max_degree: usize) -> Result<LineReport> {
    if max_degree == 0 {
        return Err(Error::InvalidPoint("max_degree must be at least 1".into()));
    }
    let points = line_points(field, law, max_degree);
    let mut memo = Memo {
        law,
        table: BTreeMap::new(),
    };
    let mut r = LawReport::new();
    let mut pairs = Vec::with_capacity(points.len() * points.len());
    let mut bound_w = None;
    let mut alpha_w = None;
    for f in &points {
        for g in &points {
            let galois = memo.op(f, g);
            let def = definitional_hyperop(law, f, g)?;
            let m = lcm(deg(f), deg(g));
            if bound_w.is_none() {
                if deg(&def.g_p) > deg(f) * deg(g) {
                    bound_w = Some(vec![format!(
                        "deg g_P = {} for ({f}), ({g})",
                        deg(&def.g_p)
                    )]);
                } else if let Some(q) = galois.iter().find(|q| m % deg(q) != 0) {
                    bound_w = Some(vec![format!(
                        "({q}) in ({f})*({g}) has degree not dividing {m}"
                    )]);
                }
            }
            if alpha_w.is_none() && galois_hyperop_all_alpha(law, f, g, true)? != galois {
                alpha_w = Some(vec![format!(
                    "({f})*({g}) depends on the chosen root of ({f})"
                )]);
            }
            let agree = galois == def.members;
            pairs.push(PairResult {
                f: f.clone(),
                g: g.clone(),
                galois,
                definitional: def.members,
                agree,
            });
        }
    }
    let w = pairs.iter().find(|p| !p.agree).map(|p| {
        vec![format!(
            "({})*({}): galois {} vs definitional {}",
            p.f,
            p.g,
            format_set(&p.galois),
            format_set(&p.definitional)
        )]
    });
    r.check("agreement", w);
    r.check("degree_bound", bound_w);
    r.check("root_choice", alpha_w);

    let n = points.len();
    let w = (0..n).find_map(|i| {
        (0..n).find_map(|j| {
            (pairs[i * n + j].galois != pairs[j * n + i].galois).then(|| {
                vec![format!(
                    "({})*({}) != ({})*({})",
                    points[i], points[j], points[j], points[i]
                )]
            })
        })
    });
    r.check("commutativity", w);

    let e = law.identity(field);
    let w = points.iter().find_map(|f| {
        let l = memo.op(&e, f);
        let rr = memo.op(f, &e);
        (l != [f.clone()] || rr != [f.clone()]).then(|| {
            vec![format!(
                "e*({f}) = {}, ({f})*e = {}",
                format_set(&l),
                format_set(&rr)
            )]
        })
    });
    r.check("identity", w);

    let mut w = None;
    for f in &points {
        let fi = law.inverse(f);
        if validate_point(law, &fi).is_err() {
            w = Some(vec![format!("inverse of ({f}) is not a point: {fi}")]);
            break;
        }
        if !memo.op(f, &fi).contains(&e) || !memo.op(&fi, f).contains(&e) {
            w = Some(vec![format!("e not in ({f})*({fi})")]);
            break;
        }
    }
    r.check("inverse", w);

    // φ ∈ f*g ⟺ φ~ ∈ g~*f~, and c ∈ a*b ⟹ b ∈ c*a⁻¹
    let mut w = None;
    'rev: for f in &points {
        for g in &points {
            let fg = memo.op(f, g);
            let mut tilde: Vec<FpPoly> = fg.iter().map(|h| law.inverse(h)).collect();
            tilde.sort();
            let rhs = memo.op(&law.inverse(g), &law.inverse(f));
            if tilde != rhs {
                w = Some(vec![format!(
                    "tilde(({f})*({g})) = {} vs {}",
                    format_set(&tilde),
                    format_set(&rhs)
                )]);
                break 'rev;
            }
            for c in &fg {
                if !memo.op(c, &law.inverse(f)).contains(g) {
                    w = Some(vec![format!(
                        "({c}) in ({f})*({g}) but ({g}) not in ({c})*({f})^-1"
                    )]);
                    break 'rev;
                }
            }
        }
    }
    r.check("reversibility", w);

    let bound = max_degree * max_degree;
    let within = |s: &[FpPoly]| s.iter().all(|q| deg(q) <= bound);
    let (mut checked, mut skipped) = (0, 0);
    let mut w = None;
    for f in &points {
        for g in &points {
            let fg = memo.op(f, g);
            for h in &points {
                let gh = memo.op(g, h);
                if !within(&fg) || !within(&gh) {
                    skipped += 1;
                    continue;
                }
                let left = memo.ext(&fg, core::slice::from_ref(h));
                let right = memo.ext(core::slice::from_ref(f), &gh);
                if !within(&left) || !within(&right) {
                    skipped += 1;
                    continue;
                }
                checked += 1;
                if left != right && w.is_none() {
                    w = Some(vec![format!(
                        "(({f})*({g}))*({h}) = {} vs ({f})*(({g})*({h})) = {}",
                        format_set(&left),
                        format_set(&right)
                    )]);
                }
            }
        }
    }
    r.check("associativity", w);
    r.note(
        "associativity_skipped",
        skipped == 0,
        [format!("{checked} checked, {skipped} skipped")],
    );

    Ok(LineReport {
        field,
        law,
        max_degree,
        points,
        pairs,
        report: r,
        triples_checked: checked,
        triples_skipped: skipped,
    })
}
