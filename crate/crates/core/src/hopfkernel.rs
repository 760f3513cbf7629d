//! Commutative Hopf algebras given by matrices, with full axiom checks, Hopf
//! ideals, quotients and the iterated coproduct.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::algkernel::{Algebra, Ideal, LinMap, TensorPair};
use crate::error::{Error, Result};
use crate::gfarith::{FpPoly, PrimeField};
use crate::linalg::{Mat, Subspace};
use crate::report::LawReport;

/// An algebra with coproduct, counit and antipode. Construction only checks
/// shapes; [`HopfData::verify_hopf`] checks the axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfData {
    algebra: Algebra,
    delta: LinMap,
    counit: LinMap,
    antipode: LinMap,
}

impl HopfData {
    pub fn new(algebra: Algebra, delta: LinMap, counit: LinMap, antipode: LinMap) -> Result<Self> {
        let n = algebra.dim();
        let shape = |m: &LinMap, rows: usize, what: &str| {
            if m.src_dim() != n || m.dst_dim() != rows {
                Err(Error::Dimension(format!(
                    "{what} is {}x{}, expected {rows}x{n}",
                    m.dst_dim(),
                    m.src_dim()
                )))
            } else {
                Ok(())
            }
        };
        shape(&delta, n * n, "coproduct")?;
        shape(&counit, 1, "counit")?;
        shape(&antipode, n, "antipode")?;
        Ok(HopfData {
            algebra,
            delta,
            counit,
            antipode,
        })
    }

    /// Like [`new`](Self::new) but fails with the first violated axiom.
    pub fn verified(
        algebra: Algebra,
        delta: LinMap,
        counit: LinMap,
        antipode: LinMap,
    ) -> Result<Self> {
        let h = Self::new(algebra, delta, counit, antipode)?;
        let r = h.verify_hopf();
        let failure = r
            .failures()
            .next()
            .map(|v| format!("{}: {}", v.axiom, v.witness.join("; ")));
        match failure {
            None => Ok(h),
            Some(msg) => Err(Error::NotHopf(msg)),
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }
    pub fn delta(&self) -> &LinMap {
        &self.delta
    }
    pub fn counit(&self) -> &LinMap {
        &self.counit
    }
    pub fn antipode(&self) -> &LinMap {
        &self.antipode
    }
    pub fn field(&self) -> PrimeField {
        self.algebra.field()
    }
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Replace the antipode, e.g. to build deliberately broken data.
    pub fn with_antipode(mut self, antipode: LinMap) -> Result<Self> {
        if antipode.src_dim() != self.dim() || antipode.dst_dim() != self.dim() {
            return Err(Error::Dimension("antipode shape".into()));
        }
        self.antipode = antipode;
        Ok(self)
    }

    /// `m : A (x) A -> A` as an `n x n^2` matrix.
    pub fn multiplication_matrix(&self) -> Mat {
        let a = &self.algebra;
        let n = a.dim();
        let cols: Vec<Vec<u32>> = (0..n * n)
            .map(|k| a.product_row(k / n, k % n).to_vec())
            .collect();
        Mat::from_columns(a.field(), n, &cols)
    }

    /// The twist `a (x) b -> b (x) a` on `A (x) A`.
    pub fn twist_matrix(&self) -> Mat {
        let n = self.dim();
        let mut t = Mat::zeros(self.field(), n * n, n * n);
        for i in 0..n {
            for j in 0..n {
                t.set(j * n + i, i * n + j, 1);
            }
        }
        t
    }

    fn first_diff(
        &self,
        lhs: &Mat,
        rhs: &Mat,
        render: impl Fn(&[u32]) -> String,
    ) -> Option<Vec<String>> {
        (0..lhs.cols()).find_map(|c| {
            let (l, r) = (lhs.column(c), rhs.column(c));
            (l != r).then(|| {
                vec![format!(
                    "on {}: {} vs {}",
                    self.algebra.names()[c],
                    render(&l),
                    render(&r)
                )]
            })
        })
    }

    fn render_tensor(&self, v: &[u32]) -> String {
        let n = self.dim();
        let names = self.algebra.names();
        let parts: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| {
                let t = format!("{}⊗{}", names[k / n], names[k % n]);
                if c == 1 {
                    t
                } else {
                    format!("{c}*{t}")
                }
            })
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }

    /// All ten structure identities, one verdict each.
    pub fn verify_hopf(&self) -> LawReport {
        let a = &self.algebra;
        let f = a.field();
        let n = a.dim();
        let id = Mat::identity(f, n);
        let d = self.delta.matrix();
        let e = self.counit.matrix();
        let s = self.antipode.matrix();
        let m = self.multiplication_matrix();
        let elem = |v: &[u32]| a.format_elem(v);
        let tens = |v: &[u32]| self.render_tensor(v);
        let mut r = LawReport::new();

        let pair_witness = |w: Option<(usize, usize)>| {
            w.map(|(i, j)| {
                if i == usize::MAX {
                    vec!["unit not preserved".to_string()]
                } else {
                    vec![format!("on {} * {}", a.names()[i], a.names()[j])]
                }
            })
        };
        r.check(
            "delta_hom",
            pair_witness(self.delta.hom_witness(a, &TensorPair(a, a))),
        );
        r.check(
            "counit_hom",
            pair_witness(self.counit.hom_witness(a, &Algebra::base(f))),
        );
        r.check(
            "antipode_hom",
            pair_witness(self.antipode.hom_witness(a, a)),
        );

        let left = d.kron(&id).mul(d);
        let right = id.kron(d).mul(d);
        r.check(
            "coassociativity",
            self.first_diff(&left, &right, |v| {
                format!("{} nonzero entries", v.iter().filter(|&&c| c != 0).count())
            }),
        );

        r.check(
            "counit_left",
            self.first_diff(&e.kron(&id).mul(d), &id, elem),
        );
        r.check(
            "counit_right",
            self.first_diff(&id.kron(e).mul(d), &id, elem),
        );

        let unit_col = Mat::from_columns(f, n, &[a.unit().to_vec()]);
        let ue = unit_col.mul(e);
        r.check(
            "antipode_left",
            self.first_diff(&m.mul(&s.kron(&id)).mul(d), &ue, elem),
        );
        r.check(
            "antipode_right",
            self.first_diff(&m.mul(&id.kron(s)).mul(d), &ue, elem),
        );

        r.check("involution", self.first_diff(&s.mul(s), &id, elem));
        let lhs = d.mul(s);
        let rhs = self.twist_matrix().mul(&s.kron(s)).mul(d);
        r.check("anticohomomorphism", self.first_diff(&lhs, &rhs, tens));
        r
    }

    /// `H = (Δ⊗id)∘Δ = (id⊗Δ)∘Δ : A -> A⊗A⊗A`.
    pub fn iterated_coproduct(&self) -> Result<LinMap> {
        let id = Mat::identity(self.field(), self.dim());
        let d = self.delta.matrix();
        let left = d.kron(&id).mul(d);
        let right = id.kron(d).mul(d);
        match (0..left.cols()).find(|&c| left.column(c) != right.column(c)) {
            Some(c) => Err(Error::Coassociativity(c)),
            None => Ok(LinMap::new(left)),
        }
    }

    /// `J1 ⊗ A + A ⊗ J2` inside `A ⊗ A`, as an explicit span.
    pub fn tensor_ideal(&self, j1: &Ideal, j2: &Ideal) -> Subspace {
        let a = &self.algebra;
        let n = a.dim();
        let f = a.field();
        let mut gens = Vec::new();
        for r in j1.space().basis() {
            for k in 0..n {
                gens.push(kron(f, r, &a.basis_vector(k)));
            }
        }
        for r in j2.space().basis() {
            for k in 0..n {
                gens.push(kron(f, &a.basis_vector(k), r));
            }
        }
        Subspace::span(f, n * n, &gens)
    }

    /// Verdicts `delta`, `counit`, `antipode` for the three Hopf ideal
    /// conditions.
    pub fn is_hopf_ideal(&self, ideal: &Ideal) -> LawReport {
        let a = &self.algebra;
        let mut r = LawReport::new();
        let j = self.tensor_ideal(ideal, ideal);
        let basis = ideal.space().basis();
        let w = basis
            .iter()
            .find(|v| !j.contains(&self.delta.apply(v)))
            .map(|v| {
                vec![format!(
                    "Δ({}) = {} not in I⊗A + A⊗I",
                    a.format_elem(v),
                    self.render_tensor(&self.delta.apply(v))
                )]
            });
        r.check("delta", w);
        let w = basis
            .iter()
            .find(|v| self.counit.apply(v)[0] != 0)
            .map(|v| {
                vec![format!(
                    "ε({}) = {}",
                    a.format_elem(v),
                    self.counit.apply(v)[0]
                )]
            });
        r.check("counit", w);
        let w = basis
            .iter()
            .find(|v| !ideal.contains(&self.antipode.apply(v)))
            .map(|v| {
                vec![format!(
                    "S({}) = {} not in I",
                    a.format_elem(v),
                    a.format_elem(&self.antipode.apply(v))
                )]
            });
        r.check("antipode", w);
        r
    }

    /// The augmentation ideal `Ker ε`.
    pub fn augmentation_ideal(&self) -> Ideal {
        Ideal::kernel_of(&self.algebra, &self.counit).expect("counit has the right shape")
    }

    /// Induced Hopf structure on `A/I` and the projection.
    pub fn hopf_quotient(&self, ideal: &Ideal) -> Result<(HopfData, LinMap)> {
        let check = self.is_hopf_ideal(ideal);
        if let Some(v) = check.failures().next() {
            return Err(Error::NotHopfIdeal(format!(
                "{}: {}",
                v.axiom,
                v.witness.join("; ")
            )));
        }
        let f = self.field();
        let (b, pi) = self.algebra.quotient(ideal)?;
        // section B -> A through the free columns
        let free = ideal.space().free_columns();
        let section = LinMap::from_images(
            f,
            self.dim(),
            &free
                .iter()
                .map(|&c| self.algebra.basis_vector(c))
                .collect::<Vec<_>>(),
        );
        let pipi = pi.tensor(&pi);
        let delta = section.then(&self.delta).then(&pipi);
        let counit = section.then(&self.counit);
        let antipode = section.then(&self.antipode).then(&pi);
        let q = HopfData::new(b, delta, counit, antipode)?;
        // (π⊗π)∘Δ = Δ_I∘π
        let lhs = self.delta.then(&pipi);
        let rhs = pi.then(&q.delta);
        if lhs != rhs {
            return Err(Error::NotHopfIdeal("coproduct does not descend".into()));
        }
        Ok((q, pi))
    }

    /// Parses `mu:p:n` or `addetale:p:k`.
    pub fn builtin(spec: &str) -> Result<Self> {
        let parts: Vec<&str> = spec.trim().split(':').collect();
        let num = |s: &str| {
            s.parse::<u32>()
                .map_err(|_| Error::InvalidAlgebra(format!("bad number {s:?} in {spec:?}")))
        };
        match parts.as_slice() {
            ["mu", p, n] => Self::mu(PrimeField::new(num(p)?)?, num(n)? as usize),
            ["addetale", p, k] => Self::additive_etale(PrimeField::new(num(p)?)?, num(k)?),
            _ => Err(Error::InvalidAlgebra(format!("unknown builtin {spec:?}"))),
        }
    }

    /// `F_p[T]/(T^n - 1)` with `T` group-like.
    pub fn mu(field: PrimeField, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidAlgebra("mu needs n >= 1".into()));
        }
        let mut m = vec![0u32; n + 1];
        m[0] = field.neg(1);
        m[n] = 1;
        let alg = Algebra::monogenic(&FpPoly::new(field, m))?;
        let delta: Vec<Vec<u32>> = (0..n)
            .map(|i| {
                let mut v = vec![0; n * n];
                v[i * n + i] = 1;
                v
            })
            .collect();
        let counit = vec![vec![1u32]; n];
        let antipode: Vec<Vec<u32>> = (0..n).map(|i| alg.basis_vector((n - i) % n)).collect();
        Self::new(
            alg,
            LinMap::from_images(field, n * n, &delta),
            LinMap::from_images(field, 1, &counit),
            LinMap::from_images(field, n, &antipode),
        )
    }

    /// `F_p[T]/(T^(p^k) - T)` with `T` primitive.
    pub fn additive_etale(field: PrimeField, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidAlgebra("addetale needs k >= 1".into()));
        }
        let n = (field.p() as usize)
            .checked_pow(k)
            .filter(|&n| n <= 4096)
            .ok_or_else(|| Error::TooLarge(format!("p^k with p={}, k={k}", field.p())))?;
        let mut m = vec![0u32; n + 1];
        m[1] = field.neg(1);
        m[n] = 1;
        let alg = Algebra::monogenic(&FpPoly::new(field, m))?;
        // Pascal's triangle mod p
        let mut row = vec![1u32];
        let mut delta = Vec::with_capacity(n);
        for j in 0..n {
            let mut v = vec![0; n * n];
            for (i, &c) in row.iter().enumerate() {
                v[i * n + (j - i)] = c;
            }
            delta.push(v);
            let mut next = vec![1u32; j + 2];
            for i in 1..=j {
                next[i] = field.add(row[i - 1], row[i]);
            }
            row = next;
        }
        let counit: Vec<Vec<u32>> = (0..n).map(|j| vec![u32::from(j == 0)]).collect();
        let antipode: Vec<Vec<u32>> = (0..n)
            .map(|j| {
                let sign = if j % 2 == 0 { 1 } else { field.neg(1) };
                alg.scale(&alg.basis_vector(j), sign)
            })
            .collect();
        Self::new(
            alg,
            LinMap::from_images(field, n * n, &delta),
            LinMap::from_images(field, 1, &counit),
            LinMap::from_images(field, n, &antipode),
        )
    }
}

pub(crate) fn kron(f: PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter()
        .flat_map(|&x| b.iter().map(move |&y| f.mul(x, y)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(f: PrimeField, c: &[i64]) -> FpPoly {
        FpPoly::from_i64(f, c)
    }

    #[test]
    fn builtins_verify() {
        for spec in [
            "mu:5:4",
            "mu:3:2",
            "mu:3:4",
            "addetale:3:1",
            "addetale:3:2",
            "addetale:5:1",
        ] {
            let h = HopfData::builtin(spec).unwrap();
            let r = h.verify_hopf();
            assert!(
                r.all_pass(),
                "{spec}: {:?}",
                r.failures().collect::<Vec<_>>()
            );
            assert!(h.is_hopf_ideal(&h.augmentation_ideal()).all_pass());
        }
        assert!(HopfData::builtin("mu:2:1").is_err());
        assert!(HopfData::builtin("gl:3:2").is_err());
    }

    #[test]
    fn wrong_antipode() {
        let h = HopfData::builtin("mu:5:4").unwrap();
        let bad = h
            .clone()
            .with_antipode(LinMap::identity(h.field(), 4))
            .unwrap();
        let r = bad.verify_hopf();
        assert!(!r.verdict("antipode_left").unwrap().pass);
        assert!(!r.verdict("antipode_left").unwrap().witness.is_empty());
        assert!(HopfData::verified(
            bad.algebra().clone(),
            bad.delta().clone(),
            bad.counit().clone(),
            bad.antipode().clone()
        )
        .is_err());
    }

    #[test]
    fn hopf_ideals_and_quotients() {
        let h = HopfData::builtin("mu:5:4").unwrap();
        let f = h.field();
        let i = Ideal::from_poly(h.algebra(), &poly(f, &[-1, 0, 1])).unwrap();
        assert!(h.is_hopf_ideal(&i).all_pass());
        let (q, _) = h.hopf_quotient(&i).unwrap();
        assert!(q.verify_hopf().all_pass());
        assert_eq!(q.dim(), 2);

        let z = Ideal::zero(h.algebra());
        let (same, pi) = h.hopf_quotient(&z).unwrap();
        assert_eq!(same, h);
        assert_eq!(pi, LinMap::identity(f, 4));

        let g = HopfData::builtin("addetale:3:2").unwrap();
        let f3 = g.field();
        let bad = Ideal::from_poly(g.algebra(), &poly(f3, &[-1, 1])).unwrap();
        let r = g.is_hopf_ideal(&bad);
        assert!(!r.verdict("counit").unwrap().pass);
        assert!(matches!(g.hopf_quotient(&bad), Err(Error::NotHopfIdeal(_))));
        let good = Ideal::from_poly(g.algebra(), &poly(f3, &[0, -1, 0, 1])).unwrap();
        let (q, _) = g.hopf_quotient(&good).unwrap();
        assert!(q.verify_hopf().all_pass());
        assert_eq!(q.dim(), 3);
    }

    #[test]
    fn iterated_coproduct_on_generators() {
        let h = HopfData::builtin("mu:5:4").unwrap();
        let hh = h.iterated_coproduct().unwrap();
        let mut t3 = vec![0u32; 64];
        t3[16 + 4 + 1] = 1;
        assert_eq!(hh.image_of(1), t3);
        let mut one = vec![0u32; 64];
        one[0] = 1;
        assert_eq!(hh.image_of(0), one);

        let g = HopfData::builtin("addetale:3:1").unwrap();
        let gg = g.iterated_coproduct().unwrap();
        let mut prim = vec![0u32; 27];
        prim[9] = 1;
        prim[3] = 1;
        prim[1] = 1;
        assert_eq!(gg.image_of(1), prim);
    }
}
