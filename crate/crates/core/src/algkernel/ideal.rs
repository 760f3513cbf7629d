use alloc::format;
use alloc::vec::Vec;

use super::{Algebra, LinMap};
use crate::error::{Error, Result};
use crate::linalg::Subspace;

/// An ideal of an [`Algebra`], held as a canonical subspace.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    space: Subspace,
}

impl Ideal {
    /// Checks that `space` absorbs multiplication by every basis vector.
    pub fn new(alg: &Algebra, space: Subspace) -> Result<Self> {
        if space.ambient() != alg.dim() {
            return Err(Error::Dimension(format!(
                "subspace of F_p^{} in dimension {}",
                space.ambient(),
                alg.dim()
            )));
        }
        for r in space.basis() {
            for j in 0..alg.dim() {
                if !space.contains(&alg.mul(r, &alg.basis_vector(j))) {
                    return Err(Error::NotIdeal(format!(
                        "{} * {} leaves the subspace",
                        alg.format_elem(r),
                        alg.names()[j]
                    )));
                }
            }
        }
        Ok(Ideal { space })
    }

    /// Trusted constructor for subspaces known to be ideals (kernels of
    /// homomorphisms and the like).
    pub(crate) fn from_space_unchecked(space: Subspace) -> Self {
        Ideal { space }
    }

    /// The ideal generated by `gens`.
    pub fn generated(alg: &Algebra, gens: &[Vec<u32>]) -> Self {
        let mut vecs = Vec::with_capacity(gens.len() * alg.dim());
        for g in gens {
            for j in 0..alg.dim() {
                vecs.push(alg.mul(g, &alg.basis_vector(j)));
            }
        }
        Ideal {
            space: Subspace::span(alg.field(), alg.dim(), &vecs),
        }
    }

    /// `(poly(g))` for the algebra's distinguished generator `g`.
    pub fn from_poly(alg: &Algebra, poly: &crate::FpPoly) -> Result<Self> {
        let g = alg.generator().ok_or_else(|| {
            Error::InvalidAlgebra("algebra has no distinguished generator".into())
        })?;
        if poly.field() != alg.field() {
            return Err(Error::FieldMismatch(poly.field().p(), alg.field().p()));
        }
        Ok(Self::generated(alg, &[alg.eval_poly(poly, g)]))
    }

    /// Kernel of an algebra homomorphism out of `alg`.
    pub fn kernel_of(alg: &Algebra, hom: &LinMap) -> Result<Self> {
        if hom.src_dim() != alg.dim() {
            return Err(Error::Dimension("map source does not match algebra".into()));
        }
        Ok(Ideal {
            space: hom.kernel(),
        })
    }

    pub fn zero(alg: &Algebra) -> Self {
        Ideal {
            space: Subspace::zero(alg.field(), alg.dim()),
        }
    }

    pub fn unit_ideal(alg: &Algebra) -> Self {
        Ideal {
            space: Subspace::full(alg.field(), alg.dim()),
        }
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Dimension of the quotient.
    pub fn codim(&self) -> usize {
        self.space.ambient() - self.space.dim()
    }

    pub fn is_unit(&self) -> bool {
        self.space.is_full()
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.space.contains(v)
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        self.space.contains_subspace(&other.space)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        Ideal {
            space: self.space.sum(&other.space),
        }
    }
}

impl Algebra {
    /// `A / I` together with the projection. Basis: the non-pivot columns of
    /// the ideal's echelon form, named as in `A`.
    pub fn quotient(&self, ideal: &Ideal) -> Result<(Algebra, LinMap)> {
        if ideal.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let space = ideal.space();
        let free = space.free_columns();
        let d = free.len();
        let mut mul = Vec::with_capacity(d * d * d);
        for &i in &free {
            for &j in &free {
                mul.extend(space.quotient_coords(self.product_row(i, j)));
            }
        }
        let names = free.iter().map(|&i| self.names()[i].clone()).collect();
        let unit = space.quotient_coords(self.unit());
        let mut q = Algebra::new_unchecked(self.field(), names, mul, unit);
        q.generator = self.generator().map(|g| space.quotient_coords(g));
        Ok((q, LinMap::new(space.quotient_map())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfarith::FpPoly;
    use crate::PrimeField;

    #[test]
    fn quotient_of_monogenic() {
        let f = PrimeField::new(3).unwrap();
        let m = FpPoly::from_i64(f, &[0, -1, 0, 0, 0, 0, 0, 0, 0, 1]);
        let a = Algebra::monogenic(&m).unwrap();
        let q2 = FpPoly::new(f, alloc::vec![1, 0, 1]);
        let i = Ideal::generated(&a, &[a.eval_poly(&q2, a.generator().unwrap())]);
        assert_eq!(i.codim(), 2);
        assert!(Ideal::new(&a, i.space().clone()).is_ok());
        let (b, pi) = a.quotient(&i).unwrap();
        assert!(pi.hom_witness(&a, &b).is_none());
        assert_eq!(a.ideal_label(&i), "(T^2+1)");
        // the quotient passes full verification
        assert!(Algebra::new(
            f,
            b.names().to_vec(),
            b.structure_constants().to_vec(),
            b.unit().to_vec()
        )
        .is_ok());
    }

    #[test]
    fn non_ideal_rejected() {
        let f = PrimeField::new(5).unwrap();
        let a = Algebra::monogenic(&FpPoly::from_i64(f, &[-1, 0, 1])).unwrap();
        let s = Subspace::span(f, 2, &[alloc::vec![0, 1]]);
        assert!(matches!(Ideal::new(&a, s), Err(Error::NotIdeal(_))));
        assert_eq!(
            a.quotient(&Ideal::unit_ideal(&a)).err(),
            Some(Error::UnitIdeal)
        );
        assert_eq!(a.ideal_label(&Ideal::unit_ideal(&a)), "(1)");
    }
}
