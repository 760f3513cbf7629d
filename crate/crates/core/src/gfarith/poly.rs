use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::field::PrimeField;
use crate::error::{Error, Result};

/// Dense univariate polynomial over F_p, coefficients lowest degree first.
///
/// The coefficient vector never has trailing zeros, so the zero polynomial is
/// the empty vector and `degree()` is `None` exactly for zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    field: PrimeField,
    coeffs: Vec<u32>,
}

impl FpPoly {
    pub fn new(field: PrimeField, coeffs: Vec<u32>) -> Self {
        let p = field.p();
        let mut coeffs: Vec<u32> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { field, coeffs }
    }

    pub fn from_i64(field: PrimeField, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.reduce(c)).collect())
    }

    pub fn zero(field: PrimeField) -> Self {
        FpPoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: PrimeField) -> Self {
        Self::constant(field, 1)
    }

    pub fn constant(field: PrimeField, c: u32) -> Self {
        Self::new(field, vec![c])
    }

    /// The indeterminate `T`.
    pub fn t(field: PrimeField) -> Self {
        Self::monomial(field, 1, 1)
    }

    pub fn monomial(field: PrimeField, c: u32, deg: usize) -> Self {
        let mut v = vec![0; deg + 1];
        v[deg] = c;
        Self::new(field, v)
    }

    /// `T - a`.
    pub fn linear(field: PrimeField, a: u32) -> Self {
        Self::new(field, vec![field.neg(a % field.p()), 1])
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; only for nonzero callers.
    fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading());
        self.scale(inv)
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = self.field;
        Self::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            f,
            (0..n)
                .map(|i| f.add(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            f,
            (0..n)
                .map(|i| f.sub(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        let f = self.field;
        Self::new(f, self.coeffs.iter().map(|&a| f.neg(a)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        let f = self.field;
        let p = f.p() as u64;
        let mut acc = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u64 * b as u64) % p;
            }
        }
        Self::new(f, acc.into_iter().map(|c| c as u32).collect())
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut r = Self::one(self.field);
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        r
    }

    /// Euclidean division; panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let f = self.field;
        let dd = divisor.deg();
        if self.is_zero() || self.deg() < dd {
            return (Self::zero(f), self.clone());
        }
        let inv_lead = f.inv(divisor.leading());
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u32; self.deg() - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = f.mul(rem[k + dd], inv_lead);
            if c == 0 {
                continue;
            }
            quot[k] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(rem[k + j], f.mul(c, d));
            }
        }
        (Self::new(f, quot), Self::new(f, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Exact quotient, or `None` when `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }

    /// Monic gcd (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let f = self.field;
        Self::new(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(c, (i as u64 % f.p() as u64) as u32))
                .collect(),
        )
    }

    pub fn eval(&self, x: u32) -> u32 {
        let f = self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Self) -> Self {
        let mut base = self.rem(modulus);
        let mut r = Self::one(self.field).rem(modulus);
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&base).rem(modulus);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(modulus);
            }
        }
        r
    }

    /// `self(T)^p mod modulus`, the Frobenius image in F_p[T]/(modulus).
    pub fn frobenius_mod(&self, modulus: &Self) -> Self {
        self.pow_mod(self.field.p() as u64, modulus)
    }

    /// `self(-T)`.
    pub fn negate_variable(&self) -> Self {
        let f = self.field;
        Self::new(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| if i % 2 == 1 { f.neg(c) } else { c })
                .collect(),
        )
    }

    /// `T^deg * self(1/T)`.
    pub fn reciprocal(&self) -> Self {
        let mut v = self.coeffs.clone();
        v.reverse();
        Self::new(self.field, v)
    }

    /// Lowest-first coefficient list, as used by the JSON formats.
    pub fn to_vec(&self) -> Vec<u32> {
        self.coeffs.clone()
    }

    /// Parse strings such as `T^2+2T+2`, `(T-2)`, `2*t^3 - 1` or `0`.
    pub fn parse(field: PrimeField, s: &str) -> Result<Self> {
        let bad = || Error::InvalidPoint(String::from(s));
        let cleaned: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '(' && *c != ')' && *c != '*')
            .collect();
        if cleaned.is_empty() {
            return Err(bad());
        }
        let mut terms: Vec<(bool, &str)> = Vec::new();
        let mut start = 0;
        let mut negative = false;
        let bytes = cleaned.as_bytes();
        for (i, &b) in bytes.iter().enumerate() {
            if (b == b'+' || b == b'-') && i > 0 && bytes[i - 1] != b'^' {
                terms.push((negative, &cleaned[start..i]));
                negative = b == b'-';
                start = i + 1;
            } else if (b == b'+' || b == b'-') && i == 0 {
                negative = b == b'-';
                start = 1;
            }
        }
        terms.push((negative, &cleaned[start..]));
        let mut acc = Self::zero(field);
        for (neg, term) in terms {
            if term.is_empty() {
                return Err(bad());
            }
            let (coef_str, deg) = match term.find(['T', 't', 'x', 'X']) {
                None => (term, 0usize),
                Some(pos) => {
                    let rest = &term[pos + 1..];
                    let deg = if rest.is_empty() {
                        1
                    } else if let Some(e) = rest.strip_prefix('^') {
                        e.parse::<usize>().map_err(|_| bad())?
                    } else {
                        return Err(bad());
                    };
                    (&term[..pos], deg)
                }
            };
            let coef: i64 = if coef_str.is_empty() {
                1
            } else {
                coef_str.parse::<i64>().map_err(|_| bad())?
            };
            let coef = if neg { -coef } else { coef };
            acc = acc.add(&Self::monomial(field, field.reduce(coef), deg));
        }
        Ok(acc)
    }
}

impl Ord for FpPoly {
    /// Degree first, then coefficients lowest degree first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .cmp(&other.field)
            .then(self.coeffs.len().cmp(&other.coeffs.len()))
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl PartialOrd for FpPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn write_monomial(out: &mut fmt::Formatter<'_>, c: u32, deg: usize) -> fmt::Result {
    match (c, deg) {
        (c, 0) => write!(out, "{c}"),
        (1, 1) => write!(out, "T"),
        (c, 1) => write!(out, "{c}T"),
        (1, d) => write!(out, "T^{d}"),
        (c, d) => write!(out, "{c}T^{d}"),
    }
}

impl fmt::Display for FpPoly {
    /// Monic linear polynomials print as `T-a`; everything else uses
    /// coefficients in `0..p`, highest degree first.
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        if self.coeffs.len() == 2 && self.coeffs[1] == 1 && self.coeffs[0] != 0 {
            return write!(out, "T-{}", self.field.neg(self.coeffs[0]));
        }
        let mut first = true;
        for (deg, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(out, "+")?;
            }
            write_monomial(out, c, deg)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "{} (mod {})", self, self.field.p())
    }
}

/// All monic polynomials of degree `d`, in lexicographic order of their
/// lower coefficients (lowest degree first).
pub fn monic_polys(field: PrimeField, d: usize) -> impl Iterator<Item = FpPoly> {
    let p = field.p() as u64;
    let count = p.checked_pow(d as u32).unwrap_or(u64::MAX);
    (0..count).map(move |mut k| {
        let mut v = Vec::with_capacity(d + 1);
        for _ in 0..d {
            v.push((k % p) as u32);
            k /= p;
        }
        v.push(1);
        FpPoly::new(field, v)
    })
}
