use hyperspec_core::galoisline::{
    crosscheck, definitional_hyperop, format_set, galois_hyperop, line_points, Law,
};
use hyperspec_core::hopfkernel::HopfData;
use hyperspec_core::specops::SpecEngine;
use hyperspec_core::{FpPoly, PrimeField};

fn field(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn poly(p: u32, c: &[i64]) -> FpPoly {
    FpPoly::from_i64(field(p), c)
}

fn assert_green(p: u32, law: Law, d: usize) {
    let r = crosscheck(field(p), law, d).unwrap();
    assert!(r.all_agree(), "p={p} {law} d={d}");
    let bad: Vec<_> = r.report.failures().collect();
    assert!(bad.is_empty(), "p={p} {law} d={d}: {bad:?}");
    assert_eq!(r.pairs.len(), r.points.len() * r.points.len());
}

#[test]
fn point_counts() {
    // necklace counts: 3 + 3 + 8 over F_3
    assert_eq!(line_points(field(3), Law::Additive, 3).len(), 14);
    assert_eq!(line_points(field(3), Law::Multiplicative, 3).len(), 13);
    assert_eq!(line_points(field(5), Law::Additive, 2).len(), 15);
}

#[test]
fn additive_f3_degree_three() {
    let r = crosscheck(field(3), Law::Additive, 3).unwrap();
    assert!(
        r.report.all_pass(),
        "{:?}",
        r.report.failures().collect::<Vec<_>>()
    );
    assert!(r.all_agree());
    assert_eq!(r.triples_checked + r.triples_skipped, 14 * 14 * 14);
    let i2 = poly(3, &[1, 0, 1]);
    let pair = r.pairs.iter().find(|p| p.f == i2 && p.g == i2).unwrap();
    assert_eq!(pair.galois, [FpPoly::t(field(3)), i2.clone()]);
}

#[test]
fn other_laws_and_fields() {
    assert_green(3, Law::Multiplicative, 2);
    assert_green(5, Law::Additive, 2);
    assert_green(5, Law::Multiplicative, 2);
    assert_green(7, Law::Additive, 1);
    assert_green(7, Law::Multiplicative, 2);
}

#[test]
fn hand_computed_pairs() {
    let i2 = poly(3, &[1, 0, 1]);
    assert_eq!(
        format_set(&galois_hyperop(Law::Additive, &i2, &i2).unwrap()),
        "{(T), (T^2+1)}"
    );
    assert_eq!(
        format_set(&galois_hyperop(Law::Multiplicative, &i2, &i2).unwrap()),
        "{(T-2), (T-1)}"
    );
    let d = definitional_hyperop(Law::Additive, &i2, &i2).unwrap();
    assert_eq!(d.g_p, poly(3, &[0, 1, 0, 1]));
    assert_eq!(d.candidates.len(), 2);
    // roots 1 and 2 sum to 0
    let d = definitional_hyperop(Law::Additive, &poly(3, &[-1, 1]), &poly(3, &[-2, 1])).unwrap();
    assert_eq!(d.members, [FpPoly::t(field(3))]);
    // 2 * 3 = 1 in F_5
    let d =
        definitional_hyperop(Law::Multiplicative, &poly(5, &[-2, 1]), &poly(5, &[-3, 1])).unwrap();
    assert_eq!(d.members, [poly(5, &[-1, 1])]);
}

#[test]
fn linear_points_add_roots() {
    // on degree-one points both laws are the group law of F_p or F_p^×
    let f = field(7);
    for a in 0..7u32 {
        for b in 0..7u32 {
            let (pa, pb) = (FpPoly::linear(f, a), FpPoly::linear(f, b));
            let sum = galois_hyperop(Law::Additive, &pa, &pb).unwrap();
            assert_eq!(sum, [FpPoly::linear(f, (a + b) % 7)]);
            if a != 0 && b != 0 {
                let prod = galois_hyperop(Law::Multiplicative, &pa, &pb).unwrap();
                assert_eq!(prod, [FpPoly::linear(f, a * b % 7)]);
            }
        }
    }
}

#[test]
fn identity_matches_finite_truncations() {
    let e = SpecEngine::new(HopfData::builtin("mu:5:4").unwrap()).unwrap();
    let id = Law::Multiplicative.identity(field(5));
    assert_eq!(e.label(e.identity_point()), format!("({id})"));
    let e = SpecEngine::new(HopfData::builtin("addetale:3:2").unwrap()).unwrap();
    let id = Law::Additive.identity(field(3));
    assert_eq!(e.label(e.identity_point()), format!("({id})"));
}

#[test]
fn truncation_tables_agree_with_the_line() {
    // F_p[T]/(T^n - 1) and F_p[T]/(T^{p^k} - T) are quotients of the lines;
    // their tables must match the line on the points they share
    for (spec, law, p) in [
        ("mu:5:4", Law::Multiplicative, 5),
        ("mu:3:2", Law::Multiplicative, 3),
        ("addetale:3:2", Law::Additive, 3),
    ] {
        let e = SpecEngine::new(HopfData::builtin(spec).unwrap()).unwrap();
        let polys: Vec<FpPoly> = e
            .labels()
            .iter()
            .map(|l| {
                FpPoly::parse(field(p), l.trim_start_matches('(').trim_end_matches(')')).unwrap()
            })
            .collect();
        for f in 0..e.len() {
            for g in 0..e.len() {
                let r = e.hyperop(f, g);
                let finite: Vec<FpPoly> = r.members.iter().map(|&m| polys[m].clone()).collect();
                let mut finite = finite;
                finite.sort();
                assert_eq!(
                    finite,
                    galois_hyperop(law, &polys[f], &polys[g]).unwrap(),
                    "{spec}"
                );
            }
        }
    }
}

#[test]
fn rejects_bad_points() {
    let t = FpPoly::t(field(3));
    assert!(definitional_hyperop(Law::Multiplicative, &t, &poly(3, &[1, 1])).is_err());
    assert!(galois_hyperop(Law::Additive, &poly(3, &[2, 0, 1]), &t).is_err());
    assert!(crosscheck(field(3), Law::Additive, 0).is_err());
}
