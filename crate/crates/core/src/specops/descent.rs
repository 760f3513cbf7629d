use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{HyperopTable, SpecEngine};
use crate::algkernel::Ideal;
use crate::error::{Error, Result};
use crate::report::LawReport;

/// Compares the hyperoperation of `B = A/I` with that of `A` through
/// `φ -> φ̃`, `Ker φ̃ = π⁻¹(Ker φ)`.
pub fn descend_and_compare(
    a: &SpecEngine,
    a_table: &HyperopTable,
    ideal: &Ideal,
) -> Result<LawReport> {
    let (hb, pi) = a.hopf().hopf_quotient(ideal)?;
    let b = SpecEngine::new(hb)?;
    let b_table = b.table();
    let mut r = LawReport::new();

    let mut tilde = Vec::with_capacity(b.len());
    for (i, p) in b.points().iter().enumerate() {
        let pre = p.ideal.space().preimage(pi.matrix());
        match a.index_of_space(&pre) {
            Some(j) => tilde.push(j),
            None => {
                r.fail(
                    "tilde_is_point",
                    [format!("π⁻¹{} is not a point of A", b.label(i))],
                );
                return Ok(r);
            }
        }
    }
    r.pass("tilde_is_point");

    let mut sorted = tilde.clone();
    sorted.sort_unstable();
    sorted.dedup();
    r.check(
        "tilde_injective",
        (sorted.len() != tilde.len()).then(|| vec!["two points of B share a preimage"]),
    );

    let x_i: Vec<usize> = (0..a.len())
        .filter(|&j| a.points()[j].ideal.contains_ideal(ideal))
        .collect();
    r.check(
        "tilde_onto_XI",
        (sorted != x_i).then(|| {
            vec![format!(
                "image {} vs X_I {}",
                a.format_set(&sorted),
                a.format_set(&x_i)
            )]
        }),
    );

    let w = x_i.iter().find_map(|&f| {
        x_i.iter().find_map(|&g| {
            let out: Vec<usize> = a_table
                .get(f, g)
                .iter()
                .copied()
                .filter(|m| !x_i.contains(m))
                .collect();
            (!out.is_empty()).then(|| {
                vec![format!(
                    "{}*{} leaves X_I at {}",
                    a.label(f),
                    a.label(g),
                    a.format_set(&out)
                )]
            })
        })
    });
    r.check("closed", w);

    let mut w = None;
    'pairs: for f in 0..b.len() {
        for g in 0..b.len() {
            let mut lhs: Vec<usize> = b_table.get(f, g).iter().map(|&m| tilde[m]).collect();
            lhs.sort_unstable();
            let rhs = a_table.get(tilde[f], tilde[g]);
            if lhs != rhs {
                w = Some(vec![format!(
                    "f={}, g={}: tilde(f⋆g)={}, tilde(f)*tilde(g)={}",
                    b.label(f),
                    b.label(g),
                    a.format_set(&lhs),
                    a.format_set(rhs)
                )]);
                break 'pairs;
            }
        }
    }
    r.check("compatible", w);
    r.note("pairs", true, [format!("{}", b.len() * b.len())]);
    Ok(r)
}

impl From<Error> for LawReport {
    fn from(e: Error) -> Self {
        let mut r = LawReport::new();
        r.fail("error", [format!("{e}")]);
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfarith::FpPoly;
    use crate::hopfkernel::HopfData;

    fn check(spec: &str, modulus: &[i64]) -> LawReport {
        let e = SpecEngine::new(HopfData::builtin(spec).unwrap()).unwrap();
        let t = e.table();
        let poly = FpPoly::from_i64(e.algebra().field(), modulus);
        let i = Ideal::from_poly(e.algebra(), &poly).unwrap();
        descend_and_compare(&e, &t, &i).unwrap()
    }

    #[test]
    fn descent_examples() {
        let r = check("mu:5:4", &[-1, 0, 1]);
        assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
        let r = check("addetale:3:2", &[0, -1, 0, 1]);
        assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.finding("pairs").unwrap().detail, ["9"]);
        let r = check("mu:5:4", &[0]);
        assert!(r.all_pass());
    }

    #[test]
    fn non_hopf_ideal_is_an_error() {
        let e = SpecEngine::new(HopfData::builtin("addetale:3:2").unwrap()).unwrap();
        let t = e.table();
        let i = Ideal::from_poly(
            e.algebra(),
            &FpPoly::from_i64(e.algebra().field(), &[-1, 1]),
        )
        .unwrap();
        assert!(matches!(
            descend_and_compare(&e, &t, &i),
            Err(Error::NotHopfIdeal(_))
        ));
    }
}
