use alloc::vec;
use alloc::vec::Vec;

use super::factor::{irreducibles, is_irreducible};
use super::field::PrimeField;
use super::poly::FpPoly;
use crate::error::{Error, Result};
use crate::linalg::{Mat, Subspace};

/// The field F_{p^k} = F_p[X]/(modulus) for a monic irreducible modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtField {
    modulus: FpPoly,
}

/// An element of an [`ExtField`]: a residue of degree below the modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqElem {
    residue: FpPoly,
}

impl FqElem {
    pub fn residue(&self) -> &FpPoly {
        &self.residue
    }
}

impl ExtField {
    pub fn with_modulus(modulus: FpPoly) -> Result<Self> {
        if !is_irreducible(&modulus)? {
            return Err(Error::InvalidAlgebra(alloc::format!(
                "modulus {modulus} is reducible"
            )));
        }
        Ok(ExtField {
            modulus: modulus.monic(),
        })
    }

    /// F_{p^k} with the first monic irreducible of degree k as modulus.
    pub fn new(field: PrimeField, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::ConstantPolynomial);
        }
        let modulus = irreducibles(field, k)
            .next()
            .expect("irreducibles exist in every degree");
        Ok(ExtField { modulus })
    }

    pub fn base(&self) -> PrimeField {
        self.modulus.field()
    }

    pub fn modulus(&self) -> &FpPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }

    pub fn elem(&self, residue: FpPoly) -> FqElem {
        FqElem {
            residue: residue.rem(&self.modulus),
        }
    }

    pub fn from_base(&self, c: u32) -> FqElem {
        self.elem(FpPoly::constant(self.base(), c))
    }

    pub fn zero(&self) -> FqElem {
        self.from_base(0)
    }

    pub fn one(&self) -> FqElem {
        self.from_base(1)
    }

    /// The class of X.
    pub fn generator(&self) -> FqElem {
        self.elem(FpPoly::t(self.base()))
    }

    pub fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        FqElem {
            residue: a.residue.add(&b.residue),
        }
    }

    pub fn sub(&self, a: &FqElem, b: &FqElem) -> FqElem {
        FqElem {
            residue: a.residue.sub(&b.residue),
        }
    }

    pub fn neg(&self, a: &FqElem) -> FqElem {
        FqElem {
            residue: a.residue.neg(),
        }
    }

    pub fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        self.elem(a.residue.mul(&b.residue))
    }

    pub fn pow(&self, a: &FqElem, e: u64) -> FqElem {
        FqElem {
            residue: a.residue.pow_mod(e, &self.modulus),
        }
    }

    pub fn frobenius(&self, a: &FqElem) -> FqElem {
        self.pow(a, self.base().p() as u64)
    }

    pub fn is_zero(&self, a: &FqElem) -> bool {
        a.residue.is_zero()
    }

    /// Coordinates on the power basis 1, X, ..., X^(k-1).
    pub fn coords(&self, a: &FqElem) -> Vec<u32> {
        (0..self.degree()).map(|i| a.residue.coeff(i)).collect()
    }

    pub fn from_coords(&self, v: &[u32]) -> FqElem {
        self.elem(FpPoly::new(self.base(), v.to_vec()))
    }

    /// Evaluate a polynomial over F_p at `a`.
    pub fn eval(&self, poly: &FpPoly, a: &FqElem) -> FqElem {
        poly.coeffs().iter().rev().fold(self.zero(), |acc, &c| {
            self.add(&self.mul(&acc, a), &self.from_base(c))
        })
    }

    /// The Frobenius orbit a, a^p, a^(p^2), ... (distinct elements).
    pub fn conjugates(&self, a: &FqElem) -> Vec<FqElem> {
        let mut out = vec![a.clone()];
        let mut next = self.frobenius(a);
        while next != *a {
            out.push(next.clone());
            next = self.frobenius(&next);
        }
        out
    }

    /// Minimal polynomial over F_p as the product of `T - c` over the orbit.
    pub fn minimal_polynomial(&self, a: &FqElem) -> FpPoly {
        // coefficients live in F_q while multiplying; they land in F_p
        let mut coeffs: Vec<FqElem> = vec![self.one()];
        for c in self.conjugates(a) {
            let mut next = vec![self.zero(); coeffs.len() + 1];
            for (i, k) in coeffs.iter().enumerate() {
                next[i + 1] = self.add(&next[i + 1], k);
                next[i] = self.sub(&next[i], &self.mul(k, &c));
            }
            coeffs = next;
        }
        let base = self.base();
        let lowered: Vec<u32> = coeffs
            .iter()
            .map(|k| {
                debug_assert!(k.residue.degree().unwrap_or(0) == 0);
                k.residue.coeff(0)
            })
            .collect();
        FpPoly::new(base, lowered)
    }

    /// Matrix of x -> x^(p^d) on the power basis.
    fn frobenius_power_matrix(&self, d: usize) -> Mat {
        let k = self.degree();
        let cols: Vec<Vec<u32>> = (0..k)
            .map(|i| {
                let mut x = self.elem(FpPoly::monomial(self.base(), 1, i));
                for _ in 0..d {
                    x = self.frobenius(&x);
                }
                self.coords(&x)
            })
            .collect();
        Mat::from_columns(self.base(), k, &cols)
    }

    /// The subfield F_{p^d} (d must divide the degree) as a subspace.
    pub fn subfield(&self, d: usize) -> Result<Subspace> {
        let k = self.degree();
        if d == 0 || k % d != 0 {
            return Err(Error::Dimension(alloc::format!("{d} does not divide {k}")));
        }
        let m = self
            .frobenius_power_matrix(d)
            .sub(&Mat::identity(self.base(), k));
        Ok(m.kernel())
    }

    /// All roots of `poly` in this field, by scanning the subfield of degree
    /// `deg poly` (for irreducible `poly`) or the whole field.
    pub fn roots(&self, poly: &FpPoly) -> Vec<FqElem> {
        let k = self.degree();
        let deg = poly.degree().unwrap_or(0);
        let space = if deg > 0 && k % deg == 0 && is_irreducible(poly).unwrap_or(false) {
            self.subfield(deg).expect("degree divides")
        } else {
            Subspace::full(self.base(), k)
        };
        space
            .elements()
            .into_iter()
            .map(|v| self.from_coords(&v))
            .filter(|a| self.is_zero(&self.eval(poly, a)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frobenius_fixes_exactly_base_field() {
        let f = PrimeField::new(3).unwrap();
        let e = ExtField::new(f, 2).unwrap();
        let all = Subspace::full(f, 2).elements();
        let fixed: Vec<_> = all
            .iter()
            .map(|v| e.from_coords(v))
            .filter(|a| e.frobenius(a) == *a)
            .collect();
        assert_eq!(fixed.len(), 3);
        assert!(fixed.iter().all(|a| a.residue().degree().unwrap_or(0) == 0));
    }

    #[test]
    fn minimal_polynomials_and_roots() {
        let f = PrimeField::new(3).unwrap();
        let e = ExtField::new(f, 2).unwrap();
        let i_poly = FpPoly::new(f, vec![1, 0, 1]);
        let roots = e.roots(&i_poly);
        assert_eq!(roots.len(), 2);
        for r in &roots {
            assert_eq!(e.minimal_polynomial(r), i_poly);
            assert_eq!(e.conjugates(r).len(), 2);
        }
        assert_eq!(e.subfield(1).unwrap().dim(), 1);
    }

    #[test]
    fn rejects_reducible_modulus() {
        let f = PrimeField::new(3).unwrap();
        assert!(ExtField::with_modulus(FpPoly::from_i64(f, &[-1, 0, 1])).is_err());
    }
}
