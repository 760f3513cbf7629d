use alloc::vec;
use alloc::vec::Vec;

use super::{minimal_polynomial_rel, Algebra, Ideal, LinMap};
use crate::gfarith::factor;
use crate::linalg::Mat;

/// Quotient sizes up to this many elements get the exhaustive primality test.
const EXHAUSTIVE_PRIME_LIMIT: u64 = 729;

/// A maximal ideal with its residue field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimePoint {
    pub ideal: Ideal,
    /// `[A/M : F_p]`.
    pub degree: usize,
    /// The primitive idempotent of the local factor at this point.
    pub idempotent: Vec<u32>,
    pub residue: Algebra,
    pub projection: LinMap,
}

impl Algebra {
    /// Smallest `m` with `p^m >= dim`, so `x^(p^m) = 0` for every nilpotent x.
    fn nil_exponent(&self) -> u32 {
        let p = self.field().p() as u64;
        let mut m = 0;
        let mut q = 1u64;
        while q < self.dim() as u64 {
            q = q.saturating_mul(p);
            m += 1;
        }
        m.max(1)
    }

    fn frobenius_iterate(&self) -> Mat {
        self.frobenius_matrix().pow(self.nil_exponent() as u64)
    }

    /// The primitive idempotents, one per local factor.
    ///
    /// The Frobenius-fixed elements `{x : x^p = x}` are exactly the F_p-span
    /// of the primitive idempotents. Each fixed element `y` acts on a
    /// component `eA` through `z = e y` with `z^p = z`, so its minimal
    /// polynomial over that component splits into distinct linear factors
    /// `T - c`, and `e - (z - c e)^(p-1)` is the idempotent cutting out the
    /// `c`-eigenpart. Running over a basis of the fixed space separates all
    /// components.
    pub fn primitive_idempotents(&self) -> Vec<Vec<u32>> {
        let f = self.field();
        let n = self.dim();
        let fixed = self.frobenius_matrix().sub(&Mat::identity(f, n)).kernel();
        let p = f.p() as u64;
        let mut idems = vec![self.unit().to_vec()];
        for y in fixed.basis() {
            if idems.len() == fixed.dim() {
                break;
            }
            let mut next = Vec::with_capacity(idems.len());
            for e in idems {
                let z = self.mul(&e, y);
                let m = minimal_polynomial_rel(self, &z, &e);
                if m.degree() == Some(1) {
                    next.push(e);
                    continue;
                }
                let fac = factor(&m).expect("minimal polynomial is nonzero");
                for (q, mult) in &fac.factors {
                    debug_assert!(q.degree() == Some(1) && *mult == 1);
                    let c = f.neg(q.coeff(0));
                    let w = self.sub(&z, &self.scale(&e, c));
                    next.push(self.sub(&e, &self.pow(&w, p - 1)));
                }
            }
            idems = next;
        }
        debug_assert_eq!(idems.len(), fixed.dim());
        idems
    }

    /// All maximal ideals, sorted by residue degree and then by the echelon
    /// basis of the ideal.
    pub fn maximal_spectrum(&self) -> Vec<PrimePoint> {
        let frob = self.frobenius_iterate();
        let mut points: Vec<PrimePoint> = self
            .primitive_idempotents()
            .into_iter()
            .map(|e| {
                // M_e = { x : e x nilpotent }
                let space = frob.mul(&self.mult_matrix(&e)).kernel();
                let ideal = Ideal::from_space_unchecked(space);
                let (residue, projection) = self.quotient(&ideal).expect("component is nonzero");
                PrimePoint {
                    degree: ideal.codim(),
                    ideal,
                    idempotent: e,
                    residue,
                    projection,
                }
            })
            .collect();
        points.sort_by(|a, b| (a.degree, &a.ideal).cmp(&(b.degree, &b.ideal)));
        points
    }

    /// Whether `A / ideal` is a field.
    pub fn ideal_is_prime(&self, ideal: &Ideal) -> bool {
        if ideal.is_unit() {
            return false;
        }
        let (b, _) = self.quotient(ideal).expect("proper ideal");
        let d = b.dim();
        if b.order() <= EXHAUSTIVE_PRIME_LIMIT {
            return b
                .elements()
                .iter()
                .filter(|x| !Algebra::is_zero(x))
                .all(|x| b.mult_matrix(x).rank() == d);
        }
        // a finite ring is a field iff it is reduced and has no nontrivial
        // idempotents
        let n = Mat::identity(b.field(), d);
        b.frobenius_iterate().rank() == d && d - b.frobenius_matrix().sub(&n).rank() == 1
    }

    /// A pair `(a, b)` of nonzero classes in `A / ideal` with `ab = 0`, found
    /// by direct search over the quotient; `None` if there is none or the
    /// quotient has more than `limit` elements.
    pub fn zero_divisor_witness(&self, ideal: &Ideal, limit: u64) -> Option<(Vec<u32>, Vec<u32>)> {
        if ideal.is_unit() {
            return None;
        }
        let (b, _) = self.quotient(ideal).ok()?;
        if b.order() > limit {
            return None;
        }
        let elems: Vec<Vec<u32>> = b
            .elements()
            .into_iter()
            .filter(|x| !Algebra::is_zero(x))
            .collect();
        for (i, x) in elems.iter().enumerate() {
            for y in &elems[i..] {
                if Algebra::is_zero(&b.mul(x, y)) {
                    return Some((x.clone(), y.clone()));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfarith::FpPoly;
    use crate::PrimeField;

    fn degrees(a: &Algebra) -> Vec<usize> {
        a.maximal_spectrum().iter().map(|p| p.degree).collect()
    }

    #[test]
    fn artin_schreier_line() {
        let f = PrimeField::new(3).unwrap();
        let a = Algebra::monogenic(&FpPoly::from_i64(f, &[0, -1, 0, 0, 0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(degrees(&a), vec![1, 1, 1, 2, 2, 2]);
        for pt in a.maximal_spectrum() {
            assert!(a.ideal_is_prime(&pt.ideal));
            assert!(pt.projection.hom_witness(&a, &pt.residue).is_none());
        }
    }

    #[test]
    fn tensor_spectra() {
        let f3 = PrimeField::new(3).unwrap();
        let f9 = Algebra::monogenic(&FpPoly::new(f3, vec![1, 0, 1])).unwrap();
        assert_eq!(degrees(&f9.tensor(&f9).unwrap()), vec![2, 2]);
        let f5 = PrimeField::new(5).unwrap();
        let mu4 = Algebra::monogenic(&FpPoly::from_i64(f5, &[-1, 0, 0, 0, 1])).unwrap();
        assert_eq!(degrees(&mu4.tensor(&mu4).unwrap()), vec![1; 16]);
    }

    #[test]
    fn non_reduced_components() {
        // F_3[T]/(T^2 (T^2+1)): the point (T) carries a nilpotent
        let f = PrimeField::new(3).unwrap();
        let a = Algebra::monogenic(&FpPoly::new(f, vec![0, 0, 1, 0, 1])).unwrap();
        let spec = a.maximal_spectrum();
        assert_eq!(spec.len(), 2);
        assert_eq!(a.ideal_label(&spec[0].ideal), "(T)");
        assert_eq!(a.ideal_label(&spec[1].ideal), "(T^2+1)");
        assert!(!a.ideal_is_prime(&Ideal::zero(&a)));
        assert!(a.zero_divisor_witness(&Ideal::zero(&a), 729).is_some());
    }

    #[test]
    fn non_prime_forced_ideal() {
        let f = PrimeField::new(3).unwrap();
        let a = Algebra::monogenic(&FpPoly::new(f, vec![0, 1, 0, 1])).unwrap();
        assert!(!a.ideal_is_prime(&Ideal::zero(&a)));
    }
}
