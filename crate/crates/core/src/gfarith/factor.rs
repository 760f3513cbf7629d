//! Factorization of univariate polynomials over F_p.
//!
//! The pipeline is the usual one: split off the part whose factors have
//! multiplicity prime to p, distinct-degree factorization on the squarefree
//! piece, then Cantor-Zassenhaus for equal-degree splitting (p is odd). The
//! random polynomials of Cantor-Zassenhaus are replaced by a fixed
//! enumeration so that output never depends on a seed.

use alloc::vec::Vec;

use super::poly::FpPoly;
use crate::error::{Error, Result};

/// `unit * prod(factor^mult)`, factors monic, irreducible and sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: u32,
    pub factors: Vec<(FpPoly, usize)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn expand(&self, field: crate::PrimeField) -> FpPoly {
        self.factors
            .iter()
            .fold(FpPoly::constant(field, self.unit), |acc, (f, m)| {
                acc.mul(&f.pow(*m as u64))
            })
    }

    pub fn irreducible_factors(&self) -> impl Iterator<Item = &FpPoly> {
        self.factors.iter().map(|(f, _)| f)
    }
}

/// True iff `poly` has no monic divisor of degree in `[1, deg/2]`.
pub fn is_irreducible(poly: &FpPoly) -> Result<bool> {
    let deg = match poly.degree() {
        None => return Err(Error::FactorZero),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(d) => d,
    };
    let field = poly.field();
    let f = poly.monic();
    let t = FpPoly::t(field);
    // h = T^(p^i) mod f
    let mut h = t.rem(&f);
    for _ in 1..=deg / 2 {
        h = h.frobenius_mod(&f);
        if !f.gcd(&h.sub(&t)).is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Complete factorization into monic irreducibles with multiplicities.
pub fn factor(poly: &FpPoly) -> Result<Factorization> {
    if poly.is_zero() {
        return Err(Error::FactorZero);
    }
    let field = poly.field();
    let unit = poly.leading();
    let monic = poly.monic();
    let mut primes = distinct_factors(&monic);
    primes.sort();
    primes.dedup();
    let mut factors = Vec::with_capacity(primes.len());
    for q in primes {
        let mut m = 0;
        let mut rest = monic.clone();
        while let Some(next) = rest.exact_div(&q) {
            rest = next;
            m += 1;
        }
        factors.push((q, m));
    }
    let out = Factorization { unit, factors };
    debug_assert_eq!(out.expand(field), *poly);
    Ok(out)
}

/// Distinct monic irreducible divisors of a monic polynomial.
fn distinct_factors(f: &FpPoly) -> Vec<FpPoly> {
    let field = f.field();
    if f.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let d = f.derivative();
    if d.is_zero() {
        // f(T) = g(T^p) = g(T)^p since a^p = a on F_p
        let p = field.p() as usize;
        let root = FpPoly::new(field, f.coeffs().iter().step_by(p).copied().collect());
        return distinct_factors(&root);
    }
    let g = f.gcd(&d);
    let squarefree = f.exact_div(&g).expect("gcd divides");
    let mut out = Vec::new();
    for (deg, block) in distinct_degree(&squarefree) {
        equal_degree(&block, deg, &mut out);
    }
    // What remains of f after removing those primes has every multiplicity
    // divisible by p.
    let mut rest = f.clone();
    for q in &out {
        while let Some(next) = rest.exact_div(q) {
            rest = next;
        }
    }
    out.extend(distinct_factors(&rest));
    out
}

/// Splits a monic squarefree polynomial into `(d, product of all degree-d
/// irreducible factors)`.
fn distinct_degree(f: &FpPoly) -> Vec<(usize, FpPoly)> {
    let field = f.field();
    let t = FpPoly::t(field);
    let mut rest = f.clone();
    let mut out = Vec::new();
    let mut h = t.clone();
    let mut d = 0;
    while rest.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = h.rem(&rest).frobenius_mod(&rest);
        let g = rest.gcd(&h.sub(&t));
        if !g.is_one() {
            rest = rest.exact_div(&g).expect("gcd divides");
            out.push((d, g));
        }
    }
    if let Some(deg) = rest.degree().filter(|&deg| deg > 0) {
        out.push((deg, rest));
    }
    out
}

/// Cantor-Zassenhaus splitting of a product of distinct irreducibles of
/// degree `d`.
fn equal_degree(f: &FpPoly, d: usize, out: &mut Vec<FpPoly>) {
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return;
    }
    if n == d {
        out.push(f.monic());
        return;
    }
    let field = f.field();
    let p = field.p() as u64;
    let one = FpPoly::one(field);
    let mut k: u64 = p;
    loop {
        // k runs over base-p digit strings; skip the constants
        let mut digits = Vec::new();
        let mut m = k;
        while m > 0 && digits.len() < n {
            digits.push((m % p) as u32);
            m /= p;
        }
        k += 1;
        let a = FpPoly::new(field, digits);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        // a^((p^d - 1)/2) = (prod_{i<d} a^(p^i))^((p-1)/2)
        let mut norm = one.clone();
        let mut frob = a.rem(f);
        for _ in 0..d {
            norm = norm.mul(&frob).rem(f);
            frob = frob.frobenius_mod(f);
        }
        let b = norm.pow_mod((p - 1) / 2, f).sub(&one);
        let g = f.gcd(&b);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < n {
            let h = f.exact_div(&g).expect("gcd divides");
            equal_degree(&g, d, out);
            equal_degree(&h, d, out);
            return;
        }
    }
}

/// Monic irreducible polynomials of degree exactly `d`, in `monic_polys` order.
pub fn irreducibles(field: crate::PrimeField, d: usize) -> impl Iterator<Item = FpPoly> {
    super::poly::monic_polys(field, d).filter(|q| is_irreducible(q).unwrap_or(false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::PrimeField;
    use alloc::vec;

    #[test]
    fn zero_and_constants_rejected() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(factor(&FpPoly::zero(f)), Err(Error::FactorZero));
        assert_eq!(
            is_irreducible(&FpPoly::one(f)),
            Err(Error::ConstantPolynomial)
        );
    }

    #[test]
    fn small_irreducibility() {
        let f3 = PrimeField::new(3).unwrap();
        assert!(is_irreducible(&FpPoly::new(f3, vec![1, 0, 1])).unwrap());
        assert!(!is_irreducible(&FpPoly::from_i64(f3, &[-1, 0, 1])).unwrap());
        let f5 = PrimeField::new(5).unwrap();
        assert!(is_irreducible(&FpPoly::t(f5)).unwrap());
        // irreducible counts of degree 1..4 over F_3: 3, 3, 8, 18
        let counts: Vec<usize> = (1..=4).map(|d| irreducibles(f3, d).count()).collect();
        assert_eq!(counts, vec![3, 3, 8, 18]);
    }

    #[test]
    fn constant_factorization() {
        let f = PrimeField::new(7).unwrap();
        let fac = factor(&FpPoly::constant(f, 4)).unwrap();
        assert_eq!(fac.unit, 4);
        assert!(fac.factors.is_empty());
    }

    #[test]
    fn inseparable_power() {
        // (T^2+1)^3 = T^6 + 1 over F_3 has zero derivative
        let f = PrimeField::new(3).unwrap();
        let q = FpPoly::new(f, vec![1, 0, 1]);
        let fac = factor(&q.pow(3)).unwrap();
        assert_eq!(fac.factors, vec![(q.clone(), 3)]);
        let mixed = q.pow(4).mul(&FpPoly::linear(f, 1).pow(2));
        let fac = factor(&mixed).unwrap();
        assert_eq!(
            fac.factors,
            vec![
                (FpPoly::linear(f, 1), 2),
                (FpPoly::new(f, vec![1, 0, 1]), 4)
            ]
        );
    }
}
