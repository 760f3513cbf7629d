use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{HyperopTable, SpecEngine};
use crate::error::{Error, Result};
use crate::gfarith::{ExtField, FqElem};
use crate::linalg::{Mat, Subspace};
use crate::report::LawReport;

/// Brute-force search over basis images is capped at this many candidates.
const BRUTE_FORCE_LIMIT: u64 = 200_000;

/// An algebra homomorphism `A -> F_q` by the images of the basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ClassicalPoint {
    pub images: Vec<FqElem>,
}

fn order_exponent(p: u32, q: u64) -> Option<usize> {
    let (mut m, mut k) = (q, 0);
    while m > 1 && m % p as u64 == 0 {
        m /= p as u64;
        k += 1;
    }
    (m == 1 && k > 0).then_some(k)
}

fn is_hom(e: &SpecEngine, fq: &ExtField, images: &[FqElem]) -> bool {
    let a = e.algebra();
    let apply = |v: &[u32]| {
        v.iter().zip(images).fold(fq.zero(), |acc, (&c, im)| {
            fq.add(&acc, &fq.mul(&fq.from_base(c), im))
        })
    };
    if apply(a.unit()) != fq.one() {
        return false;
    }
    (0..a.dim())
        .all(|i| (i..a.dim()).all(|j| apply(a.product_row(i, j)) == fq.mul(&images[i], &images[j])))
}

/// `X(F_q)`, sorted.
pub(crate) fn classical_points(e: &SpecEngine, fq: &ExtField) -> Result<Vec<ClassicalPoint>> {
    let a = e.algebra();
    let n = a.dim();
    let field = a.field();
    let mut out = Vec::new();
    if let Some(g) = a.generator() {
        // b_j = Σ_i P⁻¹[i][j] g^i, so φ(b_j) = Σ_i P⁻¹[i][j] α^i
        let powers = a.powers(g, n);
        let pinv = Mat::from_columns(field, n, &powers)
            .inverse()
            .expect("generator powers form a basis");
        for alpha in fq.roots(&a.minimal_polynomial(g)) {
            let mut apow = Vec::with_capacity(n);
            let mut cur = fq.one();
            for _ in 0..n {
                apow.push(cur.clone());
                cur = fq.mul(&cur, &alpha);
            }
            let images: Vec<FqElem> = (0..n)
                .map(|j| {
                    (0..n).fold(fq.zero(), |acc, i| {
                        fq.add(&acc, &fq.mul(&fq.from_base(pinv.get(i, j)), &apow[i]))
                    })
                })
                .collect();
            out.push(ClassicalPoint { images });
        }
    } else {
        let q = (field.p() as u64).saturating_pow(fq.degree() as u32);
        if q.saturating_pow(n as u32) > BRUTE_FORCE_LIMIT {
            return Err(Error::TooLarge(format!("{q}^{n} candidate maps")));
        }
        let all: Vec<FqElem> = Subspace::full(field, fq.degree())
            .elements()
            .into_iter()
            .map(|v| fq.from_coords(&v))
            .collect();
        let mut idx = vec![0usize; n];
        loop {
            let images: Vec<FqElem> = idx.iter().map(|&i| all[i].clone()).collect();
            out.push(ClassicalPoint { images });
            let mut pos = 0;
            while pos < n {
                idx[pos] += 1;
                if idx[pos] < all.len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == n {
                break;
            }
        }
    }
    out.retain(|c| is_hom(e, fq, &c.images));
    out.sort();
    Ok(out)
}

/// Checks `i(f*g) ∈ i(f) * i(g)` for the classical convolution on
/// `X(F_q) = Hom(A, F_q)` and the map `i` sending a homomorphism to its
/// kernel. `i` is injective only for `q = p`: Galois-conjugate points share
/// a kernel, so for `q > p` injectivity is recorded rather than asserted.
pub fn classical_comparison(e: &SpecEngine, t: &HyperopTable, q: u64) -> Result<LawReport> {
    let a = e.algebra();
    let field = a.field();
    let n = a.dim();
    let k = order_exponent(field.p(), q)
        .ok_or_else(|| Error::InvalidPoint(format!("{q} is not a power of {}", field.p())))?;
    let fq = ExtField::new(field, k)?;
    let pts = classical_points(e, &fq)?;
    let mut r = LawReport::new();
    r.note("classical_points", true, [format!("{}", pts.len())]);

    let kernel_index = |c: &ClassicalPoint| {
        let cols: Vec<Vec<u32>> = c.images.iter().map(|x| fq.coords(x)).collect();
        let space = Mat::from_columns(field, k, &cols).kernel();
        e.index_of_space(&space)
    };
    let mut kernels = Vec::with_capacity(pts.len());
    for c in &pts {
        match kernel_index(c) {
            Some(i) => kernels.push(i),
            None => {
                r.fail(
                    "kernel_is_point",
                    ["kernel of a classical point is not in the spectrum"],
                );
                return Ok(r);
            }
        }
    }
    r.pass("kernel_is_point");

    let mut distinct = kernels.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let injective = distinct.len() == kernels.len();
    if k == 1 {
        r.check(
            "injective",
            (!injective).then(|| vec!["two homomorphisms share a kernel"]),
        );
    } else {
        r.note(
            "injective",
            injective,
            [format!(
                "{} homomorphisms, {} kernels",
                kernels.len(),
                distinct.len()
            )],
        );
    }

    let d = e.hopf().delta().matrix();
    let mut closed = None;
    let mut contain = None;
    for (fi, f) in pts.iter().enumerate() {
        for (gi, g) in pts.iter().enumerate() {
            // (f*g)(b_c) = Σ Δ[(i,j), c] f(b_i) g(b_j)
            let images: Vec<FqElem> = (0..n)
                .map(|c| {
                    let mut acc = fq.zero();
                    for i in 0..n {
                        for j in 0..n {
                            let coef = d.get(i * n + j, c);
                            if coef != 0 {
                                let term = fq.mul(&f.images[i], &g.images[j]);
                                acc = fq.add(&acc, &fq.mul(&fq.from_base(coef), &term));
                            }
                        }
                    }
                    acc
                })
                .collect();
            let conv = ClassicalPoint { images };
            let Some(h) = pts.iter().position(|x| *x == conv) else {
                closed.get_or_insert_with(|| {
                    vec![format!("pair ({fi}, {gi}) convolves outside X(F_q)")]
                });
                continue;
            };
            let target = t.get(kernels[fi], kernels[gi]);
            if !target.contains(&kernels[h]) && contain.is_none() {
                contain = Some(vec![format!(
                    "i(f*g)={} not in i(f)*i(g)={} for i(f)={}, i(g)={}",
                    e.label(kernels[h]),
                    e.format_set(target),
                    e.label(kernels[fi]),
                    e.label(kernels[gi])
                )]);
            }
        }
    }
    r.check("group_closed", closed);
    r.check("comparison", contain);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopfkernel::HopfData;

    fn run(spec: &str, q: u64) -> LawReport {
        let e = SpecEngine::new(HopfData::builtin(spec).unwrap()).unwrap();
        let t = e.table();
        classical_comparison(&e, &t, q).unwrap()
    }

    #[test]
    fn prime_field_points() {
        let r = run("mu:5:4", 5);
        assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.finding("classical_points").unwrap().detail, ["4"]);
        let r = run("addetale:3:1", 3);
        assert!(r.all_pass());
        assert_eq!(r.finding("classical_points").unwrap().detail, ["3"]);
    }

    #[test]
    fn conjugates_collapse_over_extensions() {
        let r = run("addetale:3:2", 9);
        assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.finding("classical_points").unwrap().detail, ["9"]);
        assert!(!r.finding("injective").unwrap().value);
    }

    #[test]
    fn bad_order() {
        let e = SpecEngine::new(HopfData::builtin("mu:3:2").unwrap()).unwrap();
        let t = e.table();
        assert!(classical_comparison(&e, &t, 10).is_err());
    }
}
