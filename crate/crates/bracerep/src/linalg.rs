//! Dense exact linear algebra over prime fields F_q, q < 2^31.
//!
//! Everything here is deterministic: elimination always picks the leftmost
//! pivot column and the topmost nonzero row, so reduced row echelon form is a
//! canonical representative and [`SubspaceBasis`] values can be compared (and
//! ordered) extensionally.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("modulus {0} is not a prime below 2^31")]
    NonPrimeModulus(u64),
    #[error("matrix is singular")]
    SingularMatrix,
}

/// A prime field F_q. Elements are `u32` values already reduced mod q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    modulus: u32,
}

impl PrimeField {
    pub fn new(modulus: u64) -> Result<Self, LinalgError> {
        if modulus < 2 || modulus >= (1 << 31) || !is_prime(modulus) {
            return Err(LinalgError::NonPrimeModulus(modulus));
        }
        Ok(PrimeField {
            modulus: modulus as u32,
        })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.modulus as u64) as u32
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.modulus as u64) as u32
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1u32;
        base %= self.modulus;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero (callers check first).
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero");
        self.pow(a, self.modulus as u64 - 2)
    }

    /// Reduce an arbitrary signed integer into [0, q).
    pub fn reduce_i64(&self, v: i64) -> u32 {
        let q = self.modulus as i64;
        (((v % q) + q) % q) as u32
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Row-major dense matrix over a prime field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zero(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Build from rows of signed integers, reducing mod q.
    pub fn from_rows_i64(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = Matrix::zero(field, nrows, ncols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, field.reduce_i64(v));
            }
        }
        m
    }

    pub fn from_flat(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|&v| v < field.modulus()));
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        debug_assert!(v < self.field.modulus());
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.field, self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let q = self.field.modulus() as u64;
        let mut out = Matrix::zero(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    let v = (out.data[idx] as u64 + a * other.get(k, j) as u64) % q;
                    out.data[idx] = v as u32;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field);
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, &b) in out.data.iter_mut().zip(other.data.iter()) {
            *a = self.field.add(*a, b);
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field);
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, &b) in out.data.iter_mut().zip(other.data.iter()) {
            *a = self.field.sub(*a, b);
        }
        out
    }

    pub fn scale(&self, c: u32) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = self.field.mul(*a, c);
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn trace(&self) -> u32 {
        assert!(self.is_square());
        let mut t = 0;
        for i in 0..self.rows {
            t = self.field.add(t, self.get(i, i));
        }
        t
    }

    pub fn pow(&self, mut exp: u64) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    /// Kronecker product; block (i,j) is a_ij * other, so basis vector
    /// e_i (x) e_j of the product sits at index i * other.cols + j.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field);
        let mut out = Matrix::zero(self.field, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(
                            i * other.rows + k,
                            j * other.cols + l,
                            self.field.mul(a, other.get(k, l)),
                        );
                    }
                }
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let q = self.field.modulus() as u64;
        let mut out = vec![0u32; self.rows];
        for i in 0..self.rows {
            let mut acc = 0u64;
            for j in 0..self.cols {
                acc = (acc + self.get(i, j) as u64 * v[j] as u64) % q;
            }
            out[i] = acc as u32;
        }
        out
    }

    /// Reduced row echelon form together with the rank. Deterministic:
    /// leftmost pivot column first, topmost candidate row wins.
    pub fn rref(&self) -> (Matrix, usize) {
        let mut m = self.clone();
        let rank = rref_in_place(&mut m);
        (m, rank)
    }

    /// Basis (as rows, in canonical RREF) of { v : self * v = 0 }.
    pub fn nullspace(&self) -> SubspaceBasis {
        let (r, rank) = self.rref();
        let mut pivots = Vec::with_capacity(rank);
        let mut col = 0;
        for row in 0..rank {
            while r.get(row, col) == 0 {
                col += 1;
            }
            pivots.push(col);
        }
        let mut basis_rows = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (row, &p) in pivots.iter().enumerate() {
                if p < free {
                    v[p] = self.field.neg(r.get(row, free));
                }
            }
            basis_rows.push(v);
        }
        SubspaceBasis::from_rows(self.field, self.cols, basis_rows)
    }

    /// Inverse of a square matrix.
    pub fn invert(&self) -> Result<Matrix, LinalgError> {
        assert!(self.is_square(), "invert expects a square matrix");
        let n = self.rows;
        let mut aug = Matrix::zero(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        rref_in_place(&mut aug);
        // Invertible iff the left block reduced to the identity; pivots in
        // the right half mean the original matrix was rank-deficient.
        for i in 0..n {
            for j in 0..n {
                let expect = u32::from(i == j);
                if aug.get(i, j) != expect {
                    return Err(LinalgError::SingularMatrix);
                }
            }
        }
        let mut out = Matrix::zero(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, aug.get(i, n + j));
            }
        }
        Ok(out)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rref().1 == self.rows
    }

    /// Characteristic polynomial of a square matrix by the division-free
    /// Berkowitz iteration. Returns coefficients in descending power order:
    /// `c[0] = 1` is the coefficient of x^n and `c[k]` that of x^(n-k).
    pub fn char_poly(&self) -> Vec<u32> {
        assert!(self.is_square());
        let f = self.field;
        let n = self.rows;
        let mut coeffs = vec![1u32];
        for r in 0..n {
            // First column of the (r+2) x (r+1) Toeplitz factor:
            // [1, -a, -R C, -R A C, ..., -R A^(r-1) C] with A the leading
            // r x r block, R the row to its left-bottom, C the column above a.
            let mut first = Vec::with_capacity(r + 2);
            first.push(1u32);
            first.push(f.neg(self.get(r, r)));
            if r > 0 {
                let mut w: Vec<u32> = (0..r).map(|j| self.get(r, j)).collect();
                let c: Vec<u32> = (0..r).map(|i| self.get(i, r)).collect();
                for _ in 0..r {
                    let mut dot = 0u64;
                    let q = f.modulus() as u64;
                    for i in 0..r {
                        dot = (dot + w[i] as u64 * c[i] as u64) % q;
                    }
                    first.push(f.neg(dot as u32));
                    // w <- w * A
                    let mut nw = vec![0u32; r];
                    for j in 0..r {
                        let mut acc = 0u64;
                        let q = f.modulus() as u64;
                        for i in 0..r {
                            acc = (acc + w[i] as u64 * self.get(i, j) as u64) % q;
                        }
                        nw[j] = acc as u32;
                    }
                    w = nw;
                }
                first.truncate(r + 2);
            }
            let mut next = vec![0u32; r + 2];
            for (i, &t) in first.iter().enumerate() {
                if t == 0 {
                    continue;
                }
                for (j, &c) in coeffs.iter().enumerate() {
                    if i + j < next.len() {
                        next[i + j] = f.add(next[i + j], f.mul(t, c));
                    }
                }
            }
            coeffs = next;
        }
        coeffs
    }
}

fn rref_in_place(m: &mut Matrix) -> usize {
    let f = m.field;
    let mut pivot_row = 0;
    for col in 0..m.cols {
        if pivot_row == m.rows {
            break;
        }
        let mut sel = None;
        for r in pivot_row..m.rows {
            if m.get(r, col) != 0 {
                sel = Some(r);
                break;
            }
        }
        let Some(sel) = sel else { continue };
        if sel != pivot_row {
            for j in 0..m.cols {
                let a = m.get(sel, j);
                let b = m.get(pivot_row, j);
                m.set(sel, j, b);
                m.set(pivot_row, j, a);
            }
        }
        let inv = f.inv(m.get(pivot_row, col));
        for j in col..m.cols {
            m.set(pivot_row, j, f.mul(m.get(pivot_row, j), inv));
        }
        for r in 0..m.rows {
            if r == pivot_row {
                continue;
            }
            let factor = m.get(r, col);
            if factor == 0 {
                continue;
            }
            for j in col..m.cols {
                let v = f.sub(m.get(r, j), f.mul(factor, m.get(pivot_row, j)));
                m.set(r, j, v);
            }
        }
        pivot_row += 1;
    }
    pivot_row
}

/// A subspace of F_q^n held in canonical form: the rows are the nonzero rows
/// of a reduced row echelon matrix, so two `SubspaceBasis` values are equal
/// exactly when they span the same subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    field: PrimeField,
    ambient_dim: usize,
    rows: Vec<Vec<u32>>,
}

impl SubspaceBasis {
    pub fn zero(field: PrimeField, ambient_dim: usize) -> Self {
        SubspaceBasis {
            field,
            ambient_dim,
            rows: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient_dim: usize) -> Self {
        let rows = (0..ambient_dim)
            .map(|i| {
                let mut v = vec![0u32; ambient_dim];
                v[i] = 1;
                v
            })
            .collect();
        SubspaceBasis {
            field,
            ambient_dim,
            rows,
        }
    }

    /// Canonicalize an arbitrary spanning set.
    pub fn from_rows(field: PrimeField, ambient_dim: usize, rows: Vec<Vec<u32>>) -> Self {
        let mut basis = SubspaceBasis::zero(field, ambient_dim);
        for row in rows {
            basis.insert(&row);
        }
        basis
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.iter().position(|&v| v != 0).unwrap())
            .collect()
    }

    /// Ambient coordinates not used as pivots; these index a complement and
    /// give quotient constructions their basis.
    pub fn complement_coords(&self) -> Vec<usize> {
        let pivots = self.pivots();
        (0..self.ambient_dim)
            .filter(|c| !pivots.contains(c))
            .collect()
    }

    /// Reduce `v` against the basis; the remainder is zero iff `v` lies in
    /// the span.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.ambient_dim);
        let f = self.field;
        let mut w = v.to_vec();
        for row in &self.rows {
            let p = row.iter().position(|&x| x != 0).unwrap();
            let c = w[p];
            if c != 0 {
                for j in p..self.ambient_dim {
                    w[j] = f.sub(w[j], f.mul(c, row[j]));
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn is_subspace_of(&self, other: &SubspaceBasis) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// Insert a vector, keeping canonical form. Returns true if the span grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let f = self.field;
        let w = self.reduce(v);
        let Some(p) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(w[p]);
        let normalized: Vec<u32> = w.iter().map(|&x| f.mul(x, inv)).collect();
        // Back-substitute the new pivot out of the existing rows.
        for row in self.rows.iter_mut() {
            let c = row[p];
            if c != 0 {
                for j in 0..self.ambient_dim {
                    row[j] = f.sub(row[j], f.mul(c, normalized[j]));
                }
            }
        }
        let pos = self
            .rows
            .iter()
            .position(|r| r.iter().position(|&x| x != 0).unwrap() > p)
            .unwrap_or(self.rows.len());
        self.rows.insert(pos, normalized);
        true
    }

    pub fn sum(&self, other: &SubspaceBasis) -> SubspaceBasis {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut out = self.clone();
        for row in &other.rows {
            out.insert(row);
        }
        out
    }

    pub fn intersect(&self, other: &SubspaceBasis) -> SubspaceBasis {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        // Zassenhaus: row-reduce [U U; W 0]; rows with zero left half carry
        // the intersection in their right half.
        let n = self.ambient_dim;
        let mut m = Matrix::zero(self.field, self.dim() + other.dim(), 2 * n);
        for (i, row) in self.rows.iter().enumerate() {
            for j in 0..n {
                m.set(i, j, row[j]);
                m.set(i, n + j, row[j]);
            }
        }
        for (i, row) in other.rows.iter().enumerate() {
            for j in 0..n {
                m.set(self.dim() + i, j, row[j]);
            }
        }
        let (r, rank) = m.rref();
        let mut rows = Vec::new();
        for i in 0..rank {
            if r.row(i)[..n].iter().all(|&v| v == 0) {
                rows.push(r.row(i)[n..].to_vec());
            }
        }
        SubspaceBasis::from_rows(self.field, n, rows)
    }

    /// Total order used for deterministic tie-breaking: by dimension, then by
    /// the flattened canonical rows.
    pub fn canonical_cmp(&self, other: &SubspaceBasis) -> std::cmp::Ordering {
        self.dim()
            .cmp(&other.dim())
            .then_with(|| self.rows.cmp(&other.rows))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(q: u64) -> PrimeField {
        PrimeField::new(q).unwrap()
    }

    #[test]
    fn rejects_non_prime_moduli() {
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1 << 31).is_err());
        assert!(PrimeField::new(2147483647).is_ok());
    }

    #[test]
    fn rref_canonicalizes() {
        let m = Matrix::from_rows_i64(f(5), &[vec![2, 4], vec![1, 2]]);
        let (r, rank) = m.rref();
        assert_eq!(rank, 1);
        assert_eq!(r, Matrix::from_rows_i64(f(5), &[vec![1, 2], vec![0, 0]]));
        let (rr, rank2) = r.rref();
        assert_eq!((rr, rank2), (r.clone(), rank));
    }

    #[test]
    fn nullspace_small() {
        let m = Matrix::from_rows_i64(f(3), &[vec![1, 1], vec![2, 2]]);
        let ns = m.nullspace();
        assert_eq!(ns.dim(), 1);
        assert!(ns.contains(&[1, 2]));
        assert!(!ns.contains(&[1, 1]));
        // rank + nullity = cols
        assert_eq!(m.rref().1 + ns.dim(), 2);
    }

    #[test]
    fn invert_round_trip() {
        let q7 = f(7);
        let m = Matrix::from_rows_i64(q7, &[vec![-1, 2], vec![-2, 1]]);
        let inv = m.invert().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert_eq!(inv.invert().unwrap(), m);
        let sing = Matrix::from_rows_i64(q7, &[vec![1, 2], vec![2, 4]]);
        assert_eq!(sing.invert(), Err(LinalgError::SingularMatrix));
    }

    #[test]
    fn subspace_equality_is_extensional() {
        let a = SubspaceBasis::from_rows(f(3), 2, vec![vec![1, 1], vec![0, 2]]);
        let b = SubspaceBasis::from_rows(f(3), 2, vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(a, b);
        let line = SubspaceBasis::from_rows(f(5), 2, vec![vec![4, 1]]);
        assert_eq!(line.rows(), &[vec![1, 4]]);
    }

    #[test]
    fn subspace_insert_keeps_rref() {
        let mut s = SubspaceBasis::zero(f(5), 3);
        assert!(s.insert(&[0, 2, 1]));
        assert!(s.insert(&[1, 1, 1]));
        assert!(!s.insert(&[1, 3, 2]));
        let direct = SubspaceBasis::from_rows(f(5), 3, vec![vec![0, 2, 1], vec![1, 1, 1]]);
        assert_eq!(s, direct);
        assert_eq!(s.pivots(), vec![0, 1]);
        assert_eq!(s.complement_coords(), vec![2]);
    }

    #[test]
    fn intersect_via_zassenhaus() {
        let q = f(3);
        let a = SubspaceBasis::from_rows(q, 3, vec![vec![1, 0, 0], vec![0, 1, 0]]);
        let b = SubspaceBasis::from_rows(q, 3, vec![vec![0, 1, 0], vec![0, 0, 1]]);
        let c = a.intersect(&b);
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&[0, 1, 0]));
    }

    #[test]
    fn char_poly_known_values() {
        let q5 = f(5);
        let m = Matrix::from_rows_i64(q5, &[vec![2, 0], vec![0, 3]]);
        // (x-2)(x-3) = x^2 - 5x + 6 = x^2 + 1 mod 5
        assert_eq!(m.char_poly(), vec![1, 0, 1]);
        let jordan = Matrix::from_rows_i64(q5, &[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]);
        assert_eq!(jordan.char_poly(), vec![1, 0, 0, 0]);
        let cycle = Matrix::from_rows_i64(
            f(7),
            &[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]],
        );
        // x^3 - 1
        assert_eq!(cycle.char_poly(), vec![1, 0, 0, 6]);
        let generic = Matrix::from_rows_i64(f(7), &[vec![1, 2], vec![3, 4]]);
        // x^2 - 5x - 2 = x^2 + 2x + 5 mod 7
        assert_eq!(generic.char_poly(), vec![1, 2, 5]);
    }

    #[test]
    fn kronecker_indexing_is_row_major() {
        let q = f(5);
        let a = Matrix::from_rows_i64(q, &[vec![0, 1], vec![1, 0]]);
        let b = Matrix::from_rows_i64(q, &[vec![2, 0], vec![0, 3]]);
        let k = a.kronecker(&b);
        // (e_0 (x) e_0) at index 0 maps under a(x)b to e_1*2 at index 2.
        assert_eq!(k.apply(&[1, 0, 0, 0]), vec![0, 0, 2, 0]);
        assert_eq!(k.apply(&[0, 1, 0, 0]), vec![0, 0, 0, 3]);
    }
}
