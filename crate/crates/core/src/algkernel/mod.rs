//! Finite-dimensional commutative algebras over F_p given by structure
//! constants, linear maps between them, ideals, quotients, tensor products
//! and the maximal spectrum.

mod ideal;
mod spectrum;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gfarith::{FpPoly, PrimeField};
use crate::linalg::{Mat, Subspace};

pub use ideal::Ideal;
pub use spectrum::PrimePoint;

/// Anything with a bilinear multiplication on F_p^dim and a unit.
pub trait AlgebraLike {
    fn field(&self) -> PrimeField;
    fn dim(&self) -> usize;
    fn unit(&self) -> Vec<u32>;
    fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32>;
}

/// A commutative, associative, unital algebra over F_p.
///
/// `mul[(i * n + j) * n + k]` is the coefficient of `b_k` in `b_i * b_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    field: PrimeField,
    dim: usize,
    names: Vec<String>,
    mul: Vec<u32>,
    unit: Vec<u32>,
    generator: Option<Vec<u32>>,
}

impl Algebra {
    /// Builds an algebra and verifies commutativity, associativity and the
    /// unit on all basis pairs and triples.
    pub fn new(
        field: PrimeField,
        names: Vec<String>,
        mul: Vec<u32>,
        unit: Vec<u32>,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidAlgebra("dimension zero".into()));
        }
        if mul.len() != n * n * n {
            return Err(Error::Dimension(format!(
                "{} structure constants for dimension {n}",
                mul.len()
            )));
        }
        if unit.len() != n {
            return Err(Error::Dimension(format!(
                "unit of length {} for dimension {n}",
                unit.len()
            )));
        }
        let alg = Self::new_unchecked(field, names, mul, unit);
        alg.verify()?;
        Ok(alg)
    }

    pub(crate) fn new_unchecked(
        field: PrimeField,
        names: Vec<String>,
        mul: Vec<u32>,
        unit: Vec<u32>,
    ) -> Self {
        let p = field.p();
        Algebra {
            field,
            dim: names.len(),
            names,
            mul: mul.into_iter().map(|v| v % p).collect(),
            unit: unit.into_iter().map(|v| v % p).collect(),
            generator: None,
        }
    }

    fn verify(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            let bi = self.basis_vector(i);
            if self.mul(&self.unit, &bi) != bi {
                return Err(Error::InvalidAlgebra(format!(
                    "unit fails on {}",
                    self.names[i]
                )));
            }
            for j in 0..n {
                if self.product_row(i, j) != self.product_row(j, i) {
                    return Err(Error::InvalidAlgebra(format!(
                        "not commutative on ({}, {})",
                        self.names[i], self.names[j]
                    )));
                }
            }
        }
        for i in 0..n {
            for j in i..n {
                let bij = self.product_row(i, j).to_vec();
                for k in 0..n {
                    let left = self.mul(&bij, &self.basis_vector(k));
                    let right = self.mul(&self.basis_vector(i), self.product_row(j, k));
                    if left != right {
                        return Err(Error::InvalidAlgebra(format!(
                            "not associative on ({}, {}, {})",
                            self.names[i], self.names[j], self.names[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// F_p[T]/(modulus) on the basis 1, t, t2, ..., with T as generator.
    pub fn monogenic(modulus: &FpPoly) -> Result<Self> {
        let d = match modulus.degree() {
            None => return Err(Error::UnitIdeal),
            Some(0) => return Err(Error::UnitIdeal),
            Some(d) => d,
        };
        let field = modulus.field();
        let m = modulus.monic();
        let names: Vec<String> = (0..d)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "t".to_string(),
                _ => format!("t{i}"),
            })
            .collect();
        let mut mul = vec![0u32; d * d * d];
        for i in 0..d {
            for j in 0..d {
                let prod = FpPoly::monomial(field, 1, i + j).rem(&m);
                for k in 0..d {
                    mul[(i * d + j) * d + k] = prod.coeff(k);
                }
            }
        }
        let mut unit = vec![0u32; d];
        unit[0] = 1;
        let mut alg = Self::new_unchecked(field, names, mul, unit);
        if d > 1 {
            alg.generator = Some(alg.basis_vector(1));
        } else {
            // T = -m(0) in F_p[T]/(T + m(0))
            alg.generator = Some(vec![field.neg(m.coeff(0))]);
        }
        Ok(alg)
    }

    /// The one-dimensional algebra F_p.
    pub fn base(field: PrimeField) -> Self {
        Self::new_unchecked(field, vec!["1".to_string()], vec![1], vec![1])
    }

    /// Attach a distinguished generator (its powers must span the algebra).
    pub fn with_generator(mut self, generator: Vec<u32>) -> Result<Self> {
        if generator.len() != self.dim {
            return Err(Error::Dimension("generator length".into()));
        }
        let powers = self.powers(&generator, self.dim);
        if Subspace::span(self.field, self.dim, &powers).dim() != self.dim {
            return Err(Error::InvalidAlgebra(
                "generator powers do not span the algebra".into(),
            ));
        }
        self.generator = Some(generator.into_iter().map(|v| v % self.field.p()).collect());
        Ok(self)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn names(&self) -> &[String] {
        &self.names
    }
    pub fn unit(&self) -> &[u32] {
        &self.unit
    }
    pub fn generator(&self) -> Option<&[u32]> {
        self.generator.as_deref()
    }
    pub fn structure_constants(&self) -> &[u32] {
        &self.mul
    }

    /// Coefficients of `b_i * b_j`.
    #[inline]
    pub fn product_row(&self, i: usize, j: usize) -> &[u32] {
        let n = self.dim;
        &self.mul[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn zero(&self) -> Vec<u32> {
        vec![0; self.dim]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = self.zero();
        v[i] = 1;
        v
    }

    pub fn scalar(&self, c: u32) -> Vec<u32> {
        self.scale(&self.unit, c)
    }

    pub fn add(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| self.field.add(x, y))
            .collect()
    }

    pub fn sub(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| self.field.sub(x, y))
            .collect()
    }

    pub fn scale(&self, a: &[u32], c: u32) -> Vec<u32> {
        a.iter().map(|&x| self.field.mul(x, c)).collect()
    }

    pub fn is_zero(a: &[u32]) -> bool {
        a.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let n = self.dim;
        let p = self.field.p() as u64;
        let mut acc = vec![0u64; n];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let c = x as u64 * y as u64 % p;
                for (k, &s) in self.product_row(i, j).iter().enumerate() {
                    if s != 0 {
                        acc[k] = (acc[k] + c * s as u64) % p;
                    }
                }
            }
        }
        acc.into_iter().map(|v| v as u32).collect()
    }

    pub fn pow(&self, a: &[u32], mut e: u64) -> Vec<u32> {
        let mut base = a.to_vec();
        let mut r = self.unit.clone();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        r
    }

    /// `[1, a, a^2, ..., a^(count-1)]`.
    pub fn powers(&self, a: &[u32], count: usize) -> Vec<Vec<u32>> {
        let mut out = Vec::with_capacity(count);
        let mut cur = self.unit.clone();
        for _ in 0..count {
            let next = self.mul(&cur, a);
            out.push(cur);
            cur = next;
        }
        out
    }

    /// `poly(a)`.
    pub fn eval_poly(&self, poly: &FpPoly, a: &[u32]) -> Vec<u32> {
        poly.coeffs().iter().rev().fold(self.zero(), |acc, &c| {
            self.add(&self.mul(&acc, a), &self.scalar(c))
        })
    }

    /// Matrix of `x -> a * x`.
    pub fn mult_matrix(&self, a: &[u32]) -> Mat {
        let cols: Vec<Vec<u32>> = (0..self.dim)
            .map(|j| self.mul(a, &self.basis_vector(j)))
            .collect();
        Mat::from_columns(self.field, self.dim, &cols)
    }

    /// Matrix of the Frobenius `x -> x^p`, which is F_p-linear.
    pub fn frobenius_matrix(&self) -> Mat {
        let p = self.field.p() as u64;
        let cols: Vec<Vec<u32>> = (0..self.dim)
            .map(|j| self.pow(&self.basis_vector(j), p))
            .collect();
        Mat::from_columns(self.field, self.dim, &cols)
    }

    /// Lowest-degree monic polynomial annihilating `elem`.
    pub fn minimal_polynomial(&self, elem: &[u32]) -> FpPoly {
        minimal_polynomial_rel(self, elem, &self.unit)
    }

    /// The tensor product over F_p, basis `(i, j) -> i * dim(other) + j`.
    pub fn tensor(&self, other: &Algebra) -> Result<Algebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.p(), other.field.p()));
        }
        let (n, m) = (self.dim, other.dim);
        let d = n * m;
        let f = self.field;
        let mut mul = vec![0u32; d * d * d];
        for i in 0..n {
            for k in 0..n {
                let a_row = self.product_row(i, k);
                for j in 0..m {
                    for l in 0..m {
                        let b_row = other.product_row(j, l);
                        let base = ((i * m + j) * d + (k * m + l)) * d;
                        for (r, &a) in a_row.iter().enumerate() {
                            if a == 0 {
                                continue;
                            }
                            for (s, &b) in b_row.iter().enumerate() {
                                if b != 0 {
                                    mul[base + r * m + s] = f.mul(a, b);
                                }
                            }
                        }
                    }
                }
            }
        }
        let names = self
            .names
            .iter()
            .flat_map(|a| other.names.iter().map(move |b| format!("{a}⊗{b}")))
            .collect();
        let unit = kron_vec(f, &self.unit, &other.unit);
        Ok(Algebra::new_unchecked(f, names, mul, unit))
    }

    /// Every element, for small algebras only.
    pub fn elements(&self) -> Vec<Vec<u32>> {
        Subspace::full(self.field, self.dim).elements()
    }

    /// Number of elements, saturating.
    pub fn order(&self) -> u64 {
        (self.field.p() as u64).saturating_pow(self.dim as u32)
    }

    /// Human-readable element, e.g. `2*t2 + t`.
    pub fn format_elem(&self, v: &[u32]) -> String {
        let mut parts = Vec::new();
        for (i, &c) in v.iter().enumerate() {
            match c {
                0 => {}
                1 => parts.push(self.names[i].clone()),
                c => parts.push(format!("{c}*{}", self.names[i])),
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }

    /// Minimal polynomial of the generator in A/I; `None` without generator.
    pub fn ideal_generator_poly(&self, ideal: &Ideal) -> Option<FpPoly> {
        let g = self.generator.as_ref()?;
        if ideal.is_unit() {
            return Some(FpPoly::one(self.field));
        }
        let (q, pi) = self.quotient(ideal).ok()?;
        Some(q.minimal_polynomial(&pi.apply(g)))
    }

    /// `(T^2+1)`-style label when a generator is known, echelon rows otherwise.
    pub fn ideal_label(&self, ideal: &Ideal) -> String {
        match self.ideal_generator_poly(ideal) {
            Some(poly) => format!("({poly})"),
            None => {
                let rows: Vec<String> = ideal
                    .space()
                    .basis()
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|c| c.to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    })
                    .collect();
                format!("<{}>", rows.join("; "))
            }
        }
    }
}

impl AlgebraLike for Algebra {
    fn field(&self) -> PrimeField {
        self.field
    }
    fn dim(&self) -> usize {
        self.dim
    }
    fn unit(&self) -> Vec<u32> {
        self.unit.clone()
    }
    fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        Algebra::mul(self, x, y)
    }
}

/// `A (x) B` multiplied through the factors, without materializing the
/// `dim^6` structure constants of the product.
pub struct TensorPair<'a>(pub &'a Algebra, pub &'a Algebra);

impl AlgebraLike for TensorPair<'_> {
    fn field(&self) -> PrimeField {
        self.0.field
    }
    fn dim(&self) -> usize {
        self.0.dim * self.1.dim
    }
    fn unit(&self) -> Vec<u32> {
        kron_vec(self.0.field, &self.0.unit, &self.1.unit)
    }
    fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let (a, b) = (self.0, self.1);
        let m = b.dim;
        let f = a.field;
        let p = f.p() as u64;
        let mut acc = vec![0u64; a.dim * m];
        let xs: Vec<(usize, u32)> = x
            .iter()
            .copied()
            .enumerate()
            .filter(|&(_, v)| v != 0)
            .collect();
        let ys: Vec<(usize, u32)> = y
            .iter()
            .copied()
            .enumerate()
            .filter(|&(_, v)| v != 0)
            .collect();
        for &(u, xv) in &xs {
            let (i, j) = (u / m, u % m);
            for &(w, yv) in &ys {
                let (k, l) = (w / m, w % m);
                let c = xv as u64 * yv as u64 % p;
                let a_row = a.product_row(i, k);
                let b_row = b.product_row(j, l);
                for (r, &ar) in a_row.iter().enumerate() {
                    if ar == 0 {
                        continue;
                    }
                    let cr = c * ar as u64 % p;
                    for (s, &bs) in b_row.iter().enumerate() {
                        if bs != 0 {
                            let idx = r * m + s;
                            acc[idx] = (acc[idx] + cr * bs as u64) % p;
                        }
                    }
                }
            }
        }
        acc.into_iter().map(|v| v as u32).collect()
    }
}

pub(crate) fn kron_vec(field: PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter()
        .flat_map(|&x| b.iter().map(move |&y| field.mul(x, y)))
        .collect()
}

/// Minimal polynomial of `elem` inside the component whose unit is `unit`
/// (an idempotent); with the algebra's own unit this is the usual one.
pub(crate) fn minimal_polynomial_rel(alg: &Algebra, elem: &[u32], unit: &[u32]) -> FpPoly {
    let f = alg.field;
    let n = alg.dim;
    // rows: (reduced power, pivot, combination of powers producing it)
    let mut rows: Vec<(Vec<u32>, usize, Vec<u32>)> = Vec::new();
    let mut power = unit.to_vec();
    for k in 0..=n {
        let mut v = power.clone();
        let mut comb = vec![0u32; n + 1];
        comb[k] = 1;
        for (row, pivot, rc) in &rows {
            let c = v[*pivot];
            if c == 0 {
                continue;
            }
            for (x, &r) in v.iter_mut().zip(row) {
                *x = f.sub(*x, f.mul(c, r));
            }
            for (x, &r) in comb.iter_mut().zip(rc) {
                *x = f.sub(*x, f.mul(c, r));
            }
        }
        match v.iter().position(|&x| x != 0) {
            None => return FpPoly::new(f, comb),
            Some(pivot) => {
                let inv = f.inv(v[pivot]);
                let v: Vec<u32> = v.iter().map(|&x| f.mul(x, inv)).collect();
                let comb: Vec<u32> = comb.iter().map(|&x| f.mul(x, inv)).collect();
                rows.push((v, pivot, comb));
            }
        }
        power = alg.mul(&power, elem);
    }
    unreachable!("n + 1 powers in dimension n are dependent")
}

/// A linear map between coordinate spaces, stored as a `dst x src` matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinMap {
    mat: Mat,
}

impl LinMap {
    pub fn new(mat: Mat) -> Self {
        LinMap { mat }
    }

    /// The map sending basis vector `i` to `images[i]`.
    pub fn from_images(field: PrimeField, dst_dim: usize, images: &[Vec<u32>]) -> Self {
        LinMap {
            mat: Mat::from_columns(field, dst_dim, images),
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        LinMap {
            mat: Mat::identity(field, n),
        }
    }

    pub fn matrix(&self) -> &Mat {
        &self.mat
    }
    pub fn src_dim(&self) -> usize {
        self.mat.cols()
    }
    pub fn dst_dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        self.mat.apply(v)
    }

    /// Image of basis vector `i`.
    pub fn image_of(&self, i: usize) -> Vec<u32> {
        self.mat.column(i)
    }

    /// `next o self`.
    pub fn then(&self, next: &LinMap) -> LinMap {
        LinMap {
            mat: next.mat.mul(&self.mat),
        }
    }

    /// `self (x) other`.
    pub fn tensor(&self, other: &LinMap) -> LinMap {
        LinMap {
            mat: self.mat.kron(&other.mat),
        }
    }

    pub fn kernel(&self) -> Subspace {
        self.mat.kernel()
    }

    /// `None` if this is a unital algebra homomorphism, otherwise the first
    /// failing basis pair (`(i, i)` with `i = usize::MAX` flags the unit).
    pub fn hom_witness<D: AlgebraLike>(&self, src: &Algebra, dst: &D) -> Option<(usize, usize)> {
        if self.apply(src.unit()) != dst.unit() {
            return Some((usize::MAX, usize::MAX));
        }
        let images: Vec<Vec<u32>> = (0..src.dim()).map(|i| self.image_of(i)).collect();
        for i in 0..src.dim() {
            for j in i..src.dim() {
                let lhs = self.apply(src.product_row(i, j));
                let rhs = dst.mul(&images[i], &images[j]);
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }
}
