//! Exact linear algebra over F_p: dense matrices, row reduction, kernels and
//! subspaces in canonical reduced row-echelon form.

use alloc::vec;
use alloc::vec::Vec;

use crate::gfarith::PrimeField;

/// Row-major dense matrix over F_p.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Mat {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Mat {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols);
        let p = field.p();
        Mat {
            field,
            rows,
            cols,
            data: data.into_iter().map(|v| v % p).collect(),
        }
    }

    /// Matrix whose j-th column is `columns[j]`.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, &v) in c.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.field.p();
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let p = self.field.p() as u64;
        let mut out = vec![0u64; self.rows * other.cols];
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k) as u64;
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                let dst = &mut out[r * other.cols..(r + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(orow) {
                    *d = (*d + a * b as u64) % p;
                }
            }
        }
        Mat {
            field: self.field,
            rows: self.rows,
            cols: other.cols,
            data: out.into_iter().map(|v| v as u32).collect(),
        }
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let p = self.field.p() as u64;
        (0..self.rows)
            .map(|r| {
                let s = self
                    .row(r)
                    .iter()
                    .zip(v)
                    .fold(0u64, |acc, (&a, &b)| (acc + a as u64 * b as u64) % p);
                s as u32
            })
            .collect()
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        Mat {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.sub(a, b))
                .collect(),
        }
    }

    /// Kronecker product `self (x) other`.
    pub fn kron(&self, other: &Mat) -> Mat {
        let f = self.field;
        let mut out = Mat::zeros(f, self.rows * other.rows, self.cols * other.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a == 0 {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let b = other.get(r2, c2);
                        if b != 0 {
                            out.set(r1 * other.rows + r2, c1 * other.cols + c2, f.mul(a, b));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Mat {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut r = Mat::identity(self.field, self.rows);
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

    /// In-place reduced row-echelon form; returns pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(sel) = (row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            if sel != row {
                for c in 0..self.cols {
                    self.data.swap(sel * self.cols + c, row * self.cols + c);
                }
            }
            let inv = f.inv(self.get(row, col));
            for c in col..self.cols {
                let v = f.mul(self.get(row, c), inv);
                self.data[row * self.cols + c] = v;
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col);
                if factor == 0 {
                    continue;
                }
                for c in col..self.cols {
                    let v = f.sub(self.get(r, c), f.mul(factor, self.get(row, c)));
                    self.data[r * self.cols + c] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Basis of the right kernel `{ v : self * v = 0 }`, as a subspace.
    pub fn kernel(&self) -> Subspace {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let f = self.field;
        let vectors = free
            .iter()
            .map(|&fc| {
                let mut v = vec![0u32; self.cols];
                v[fc] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(m.get(r, fc));
                }
                v
            })
            .collect::<Vec<_>>();
        Subspace::span(f, self.cols, &vectors)
    }

    /// Inverse of a square matrix, if it is invertible.
    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Mat::zeros(self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, 1);
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Mat::zeros(self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.get(r, n + c));
            }
        }
        Some(inv)
    }

    /// Image (column space) as a subspace of F_p^rows.
    pub fn image(&self) -> Subspace {
        let cols: Vec<Vec<u32>> = (0..self.cols).map(|c| self.column(c)).collect();
        Subspace::span(self.field, self.rows, &cols)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }
}

/// A subspace of F_p^n stored by its reduced row-echelon basis.
///
/// The basis is canonical: two equal subspaces compare equal field by field,
/// so `==`, `Hash` and `Ord` are subspace equality and a total order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| {
                let mut v = vec![0; ambient];
                v[i] = 1;
                v
            })
            .collect();
        Subspace {
            field,
            ambient,
            rows,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(field: PrimeField, ambient: usize, vectors: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(vectors.len() * ambient);
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector length mismatch");
            data.extend_from_slice(v);
        }
        let mut m = Mat::from_rows(field, vectors.len(), ambient, data);
        let pivots = m.rref_in_place();
        let rows = (0..pivots.len()).map(|r| m.row(r).to_vec()).collect();
        Subspace {
            field,
            ambient,
            rows,
            pivots,
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }
    #[inline]
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    #[inline]
    pub fn dim(&self) -> usize {
        self.rows.len()
    }
    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Reduce `v` against the echelon basis; zero iff `v` is in the subspace.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = out[pc];
            if c == 0 {
                continue;
            }
            for (o, &r) in out.iter_mut().zip(row) {
                if r != 0 {
                    *o = f.sub(*o, f.mul(c, r));
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&c| c == 0)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    /// Column indices not used as pivots: a complement basis of standard
    /// vectors, and the coordinates of the quotient space.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// Coordinates of `v` modulo the subspace, on the free columns.
    pub fn quotient_coords(&self, v: &[u32]) -> Vec<u32> {
        let r = self.reduce(v);
        self.free_columns().into_iter().map(|c| r[c]).collect()
    }

    /// The quotient map F_p^n -> F_p^n / self as a matrix.
    pub fn quotient_map(&self) -> Mat {
        let free = self.free_columns();
        let mut m = Mat::zeros(self.field, free.len(), self.ambient);
        for c in 0..self.ambient {
            let mut e = vec![0u32; self.ambient];
            e[c] = 1;
            for (r, v) in self.quotient_coords(&e).into_iter().enumerate() {
                m.set(r, c, v);
            }
        }
        m
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut all = self.rows.clone();
        all.extend(other.rows.iter().cloned());
        Subspace::span(self.field, self.ambient, &all)
    }

    /// Image of the subspace under a linear map.
    pub fn map(&self, m: &Mat) -> Subspace {
        let imgs: Vec<Vec<u32>> = self.rows.iter().map(|v| m.apply(v)).collect();
        Subspace::span(self.field, m.rows(), &imgs)
    }

    /// Preimage `{ v : m v in self }`.
    pub fn preimage(&self, m: &Mat) -> Subspace {
        let q = self.quotient_map().mul(m);
        q.kernel()
    }

    /// All vectors of the subspace (p^dim of them).
    pub fn elements(&self) -> Vec<Vec<u32>> {
        combinations(self.field, &self.rows, self.ambient)
    }
}

/// Every F_p-linear combination of `vectors` (p^k of them, k = vectors.len()).
pub fn combinations(field: PrimeField, vectors: &[Vec<u32>], ambient: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0u32; ambient]];
    for v in vectors {
        let mut next = Vec::with_capacity(out.len() * field.p() as usize);
        for base in &out {
            for c in 0..field.p() {
                next.push(
                    base.iter()
                        .zip(v)
                        .map(|(&a, &b)| field.mul_add(a, c, b))
                        .collect(),
                );
            }
        }
        out = next;
    }
    out
}

/// Odometer over coefficient vectors in F_p^k whose first nonzero entry is 1
/// (one representative per line through the origin), calling `visit` with the
/// running combination of `vectors`. Stops early when `visit` returns true and
/// returns the coefficients that triggered it.
pub fn scan_projective<F>(field: PrimeField, vectors: &[Vec<u32>], mut visit: F) -> Option<Vec<u32>>
where
    F: FnMut(&[u32]) -> bool,
{
    let k = vectors.len();
    if k == 0 {
        return None;
    }
    let len = vectors[0].len();
    let p = field.p();
    for lead in 0..k {
        // coefficients: 0 before `lead`, 1 at `lead`, free after
        let mut coeffs = vec![0u32; k];
        coeffs[lead] = 1;
        let mut acc = vectors[lead].clone();
        loop {
            if visit(&acc) {
                return Some(coeffs);
            }
            // increment the free tail, updating acc incrementally
            let mut pos = k;
            loop {
                if pos == lead + 1 {
                    break;
                }
                pos -= 1;
                coeffs[pos] += 1;
                if coeffs[pos] == p {
                    coeffs[pos] = 0;
                    // acc -= (p-1) * v = acc + v
                    for (a, &b) in acc.iter_mut().zip(&vectors[pos]) {
                        *a = field.add(*a, b);
                    }
                    continue;
                }
                for (a, &b) in acc.iter_mut().zip(&vectors[pos]) {
                    *a = field.add(*a, b);
                }
                break;
            }
            if coeffs[lead + 1..].iter().all(|&c| c == 0) {
                break;
            }
            debug_assert_eq!(acc.len(), len);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    #[test]
    fn rank_and_kernel() {
        let f = f5();
        let m = Mat::from_rows(f, 2, 3, vec![1, 2, 3, 2, 4, 0]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.dim(), 1);
        assert!(m.apply(&k.basis()[0]).iter().all(|&v| v == 0));
    }

    #[test]
    fn canonical_basis() {
        let f = f5();
        let a = Subspace::span(f, 3, &[vec![1, 1, 0], vec![0, 1, 1]]);
        let b = Subspace::span(f, 3, &[vec![1, 2, 1], vec![2, 3, 1]]);
        assert_eq!(a, b);
        assert!(a.contains(&[1, 0, 4]));
        assert!(!a.contains(&[1, 0, 0]));
    }

    #[test]
    fn quotient_coordinates() {
        let f = f5();
        let s = Subspace::span(f, 3, &[vec![1, 1, 0]]);
        assert_eq!(s.free_columns(), vec![1, 2]);
        assert_eq!(s.quotient_coords(&[1, 1, 0]), vec![0, 0]);
        assert_eq!(s.quotient_coords(&[1, 0, 0]), vec![4, 0]);
        let pre = s.preimage(&Mat::identity(f, 3));
        assert_eq!(pre, s);
    }

    #[test]
    fn projective_scan_visits_each_line_once() {
        let f = PrimeField::new(3).unwrap();
        let vs = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        let mut seen = Vec::new();
        scan_projective(f, &vs, |v| {
            seen.push(v.to_vec());
            false
        });
        // (3^3 - 1) / 2 lines
        assert_eq!(seen.len(), 13);
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 13);
        assert!(seen.iter().all(|v| v.iter().find(|&&c| c != 0) == Some(&1)));
    }
}
