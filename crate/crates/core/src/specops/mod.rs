//! The hyperoperation on the K-points of a finite-dimensional commutative
//! Hopf algebra, and exact checks of its laws.
//!
//! A K-point is a homomorphism `A -> K`, i.e. a prime (here maximal) ideal.
//! Whether `φ` belongs to `f * g` is decided by the tensor rank of the image
//! of `Δx` in `A/Ker f ⊗ A/Ker g`: rank 0 forces `φ(x) = 0`, rank 1 forces
//! `φ(x) = 1`, and higher rank leaves `φ(x)` free because any term can be
//! split in two (p is odd). So `f * g` is the set of points containing the
//! rank-0 locus and meeting no rank-1 element.

mod classical;
mod descent;
mod laws;
mod oracle;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algkernel::{Algebra, Ideal, PrimePoint};
use crate::error::{Error, Result};
use crate::hopfkernel::HopfData;
use crate::linalg::{scan_projective, Mat, Subspace};

pub use classical::{classical_comparison, ClassicalPoint};
pub use descent::descend_and_compare;
pub use laws::{PrimalityReport, WeakAssoc};
pub use oracle::{KSet, OracleOutcome};

/// The value the membership condition forces on `φ(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ForcedValue {
    Zero,
    One,
    Free,
}

/// An element of `Ker φ` whose image tensor has rank 1, excluding `φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneCertificate {
    pub point: usize,
    pub x: Vec<u32>,
}

/// `f * g` with the data that decided it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperopResult {
    pub f: usize,
    pub g: usize,
    /// Sorted point indices.
    pub members: Vec<usize>,
    /// The kernel of `A -> A/Ker f ⊗ A/Ker g`, `x -> q(Δx)`.
    pub forced_zero: Ideal,
    /// Points containing the forced-zero ideal.
    pub candidates: Vec<usize>,
    /// Candidates rejected by a rank-1 element of their kernel.
    pub one_certificates: Vec<OneCertificate>,
}

/// The full `n x n` table of a spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperopTable {
    n: usize,
    entries: Vec<Vec<usize>>,
}

impl HyperopTable {
    /// From results in row-major `(f, g)` order.
    pub fn from_results(n: usize, results: &[HyperopResult]) -> Self {
        assert_eq!(results.len(), n * n);
        HyperopTable {
            n,
            entries: results.iter().map(|r| r.members.clone()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, f: usize, g: usize) -> &[usize] {
        &self.entries[f * self.n + g]
    }

    /// `F * G` for sets of points.
    pub fn extend(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = a
            .iter()
            .flat_map(|&x| b.iter().flat_map(move |&y| self.get(x, y).iter().copied()))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Spectrum of a verified Hopf algebra with the data every law check needs.
#[derive(Debug, Clone)]
pub struct SpecEngine {
    hopf: HopfData,
    points: Vec<PrimePoint>,
    labels: Vec<String>,
    identity: usize,
    antipode: Vec<usize>,
    /// Sparse columns of Δ.
    delta_cols: Vec<Vec<(usize, u32)>>,
}

impl SpecEngine {
    /// Fails unless every Hopf axiom holds.
    pub fn new(hopf: HopfData) -> Result<Self> {
        let report = hopf.verify_hopf();
        if let Some(v) = report.failures().next() {
            return Err(Error::NotHopf(alloc::format!(
                "{}: {}",
                v.axiom,
                v.witness.join("; ")
            )));
        }
        let alg = hopf.algebra();
        let points = alg.maximal_spectrum();
        let labels = points.iter().map(|p| alg.ideal_label(&p.ideal)).collect();
        let delta_cols = (0..hopf.dim())
            .map(|k| {
                hopf.delta()
                    .image_of(k)
                    .into_iter()
                    .enumerate()
                    .filter(|&(_, c)| c != 0)
                    .collect()
            })
            .collect();
        let mut e = SpecEngine {
            hopf,
            points,
            labels,
            identity: 0,
            antipode: Vec::new(),
            delta_cols,
        };
        let aug = e.hopf.augmentation_ideal();
        e.identity = e.index_of_space(aug.space()).ok_or_else(|| {
            Error::InvalidPoint("augmentation ideal is not in the spectrum".into())
        })?;
        let s = e.hopf.antipode().matrix().clone();
        e.antipode = (0..e.points.len())
            .map(|i| {
                let image = e.points[i].ideal.space().map(&s);
                e.index_of_space(&image).ok_or_else(|| {
                    Error::InvalidPoint(alloc::format!("S({}) is not a point", e.labels[i]))
                })
            })
            .collect::<Result<_>>()?;
        Ok(e)
    }

    pub fn hopf(&self) -> &HopfData {
        &self.hopf
    }
    pub fn algebra(&self) -> &Algebra {
        self.hopf.algebra()
    }
    pub fn points(&self) -> &[PrimePoint] {
        &self.points
    }
    pub fn len(&self) -> usize {
        self.points.len()
    }
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of_space(&self, s: &Subspace) -> Option<usize> {
        self.points.iter().position(|p| p.ideal.space() == s)
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The K-value of `x` at point `i`: `true` (1) iff `x` is not in the kernel.
    pub fn k_value(&self, i: usize, x: &[u32]) -> bool {
        !self.points[i].ideal.contains(x)
    }

    /// `e = φ∘ε`, the point with kernel `Ker ε`.
    pub fn identity_point(&self) -> usize {
        self.identity
    }

    /// The point with kernel `S(Ker f)`.
    pub fn antipode_point(&self, f: usize) -> usize {
        self.antipode[f]
    }

    /// `x -> q(Δx)` as a `(d_f d_g) x n` matrix.
    pub fn residue_coproduct(&self, f: usize, g: usize) -> Mat {
        let a = self.algebra();
        let n = a.dim();
        let field = a.field();
        let pf = self.points[f].projection.matrix();
        let pg = self.points[g].projection.matrix();
        let (df, dg) = (pf.rows(), pg.rows());
        let mut m = Mat::zeros(field, df * dg, n);
        for (k, col) in self.delta_cols.iter().enumerate() {
            for &(idx, c) in col {
                let (i, j) = (idx / n, idx % n);
                for r in 0..df {
                    let u = field.mul(c, pf.get(r, i));
                    if u == 0 {
                        continue;
                    }
                    for s in 0..dg {
                        let v = pg.get(s, j);
                        if v != 0 {
                            let row = r * dg + s;
                            m.set(row, k, field.add(m.get(row, k), field.mul(u, v)));
                        }
                    }
                }
            }
        }
        m
    }

    fn rank_of_tensor(&self, f: usize, g: usize, t: &[u32]) -> usize {
        let df = self.points[f].degree;
        let dg = self.points[g].degree;
        Mat::from_rows(self.algebra().field(), df, dg, t.to_vec()).rank()
    }

    pub fn forced_value(&self, f: usize, g: usize, x: &[u32]) -> ForcedValue {
        let t = self.residue_coproduct(f, g).apply(x);
        match self.rank_of_tensor(f, g, &t) {
            0 => ForcedValue::Zero,
            1 => ForcedValue::One,
            _ => ForcedValue::Free,
        }
    }

    /// The forced-zero ideal `Ker f *_Δ Ker g`.
    pub fn forced_zero_ideal(&self, f: usize, g: usize) -> Ideal {
        let space = self.residue_coproduct(f, g).kernel();
        Ideal::new(self.algebra(), space).expect("kernel of a ring homomorphism is an ideal")
    }

    pub fn hyperop(&self, f: usize, g: usize) -> HyperopResult {
        let q = self.residue_coproduct(f, g);
        let zero = Ideal::new(self.algebra(), q.kernel())
            .expect("kernel of a ring homomorphism is an ideal");
        let field = self.algebra().field();
        let candidates: Vec<usize> = (0..self.len())
            .filter(|&i| self.points[i].ideal.contains_ideal(&zero))
            .collect();
        let mut members = Vec::new();
        let mut one_certificates = Vec::new();
        for &c in &candidates {
            // Ker φ modulo the forced-zero ideal, through its image under q∘Δ;
            // scaling preserves rank, so one vector per line suffices.
            let mut images: Vec<Vec<u32>> = Vec::new();
            let mut sources: Vec<Vec<u32>> = Vec::new();
            let mut span = Subspace::zero(field, q.rows());
            for v in self.points[c].ideal.space().basis() {
                let w = q.apply(v);
                if !span.contains(&w) {
                    span = span.sum(&Subspace::span(field, q.rows(), core::slice::from_ref(&w)));
                    images.push(w);
                    sources.push(v.clone());
                }
            }
            let hit = scan_projective(field, &images, |t| self.rank_of_tensor(f, g, t) == 1);
            match hit {
                None => members.push(c),
                Some(coeffs) => {
                    let mut x = vec![0u32; self.algebra().dim()];
                    for (cf, s) in coeffs.iter().zip(&sources) {
                        for (xi, &si) in x.iter_mut().zip(s) {
                            *xi = field.mul_add(*xi, *cf, si);
                        }
                    }
                    one_certificates.push(OneCertificate { point: c, x });
                }
            }
        }
        HyperopResult {
            f,
            g,
            members,
            forced_zero: zero,
            candidates,
            one_certificates,
        }
    }

    pub fn table(&self) -> HyperopTable {
        let n = self.len();
        let results: Vec<HyperopResult> = (0..n * n).map(|k| self.hyperop(k / n, k % n)).collect();
        HyperopTable::from_results(n, &results)
    }

    pub fn format_set(&self, set: &[usize]) -> String {
        let items: Vec<&str> = set.iter().map(|&i| self.labels[i].as_str()).collect();
        alloc::format!("{{{}}}", items.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfarith::FpPoly;

    fn engine(spec: &str) -> SpecEngine {
        SpecEngine::new(HopfData::builtin(spec).unwrap()).unwrap()
    }

    #[test]
    fn labels_and_special_points() {
        let e = engine("mu:5:4");
        // (residue degree, echelon basis) order
        assert_eq!(e.labels(), ["(T-4)", "(T-3)", "(T-2)", "(T-1)"]);
        assert_eq!(e.label(e.identity_point()), "(T-1)");
        assert_eq!(e.label(e.antipode_point(2)), "(T-3)");
        let g = engine("addetale:3:2");
        let mut sorted = g.labels().to_vec();
        sorted.sort();
        assert_eq!(
            sorted,
            [
                "(T)",
                "(T-1)",
                "(T-2)",
                "(T^2+1)",
                "(T^2+2T+2)",
                "(T^2+T+2)"
            ]
        );
        assert_eq!(g.label(g.identity_point()), "(T)");
        let one = g.index_of_label("(T-1)").unwrap();
        assert_eq!(g.label(g.antipode_point(one)), "(T-2)");
        assert_eq!(g.antipode_point(g.identity_point()), g.identity_point());
    }

    #[test]
    fn forced_values() {
        let g = engine("addetale:3:2");
        let f3 = g.algebra().field();
        let a = g.algebra();
        let t = a.generator().unwrap().to_vec();
        let i2 = g.index_of_label("(T^2+1)").unwrap();
        let x = a.eval_poly(&FpPoly::new(f3, vec![0, 1, 0, 1]), &t);
        assert_eq!(g.forced_value(i2, i2, &x), ForcedValue::Zero);
        assert_eq!(g.forced_value(i2, i2, &t), ForcedValue::Free);
        let one = g.index_of_label("(T-1)").unwrap();
        let x = a.eval_poly(&FpPoly::linear(f3, 2), &t);
        assert_eq!(g.forced_value(one, one, &x), ForcedValue::Zero);
    }

    #[test]
    fn hyperop_examples() {
        let e = engine("mu:5:4");
        let (a, b) = (
            e.index_of_label("(T-2)").unwrap(),
            e.index_of_label("(T-3)").unwrap(),
        );
        assert_eq!(e.format_set(&e.hyperop(a, b).members), "{(T-1)}");
        let g = engine("addetale:3:2");
        let i2 = g.index_of_label("(T^2+1)").unwrap();
        let r = g.hyperop(i2, i2);
        assert_eq!(g.format_set(&r.members), "{(T), (T^2+1)}");
        assert_eq!(g.algebra().ideal_label(&r.forced_zero), "(T^3+T)");
        assert!(r.one_certificates.is_empty());
    }
}
