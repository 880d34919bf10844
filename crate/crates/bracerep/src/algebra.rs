//! Associative algebras of matrices over a prime field.
//!
//! The structural questions this crate answers about a module — is it
//! semisimple, what is its socle, how does it split into blocks — reduce to
//! questions about two matrix algebras: the *enveloping* algebra spanned by
//! the action matrices and the *commutant* of everything that commutes with
//! them.  This module provides those algebras together with the three
//! computations the analysis layer needs:
//!
//! * the Jacobson radical, via the chain of characteristic-polynomial
//!   coefficient functionals of Friedl–Rónyai and Cohen–Ivanyos–Wales
//!   (`c_{p^j}` is linear on the successive subspaces over a prime field, so
//!   each step is a kernel computation);
//! * the center, by solving the commutation system;
//! * the primitive idempotents of a commutative semisimple algebra, via the
//!   Frobenius-fixed subspace and eigenspace refinement.
//!
//! Everything is deterministic, and the radical and idempotent outputs are
//! certified at runtime (two-sided ideal plus nilpotency, respectively
//! orthogonality and completeness), so an incorrect result surfaces as an
//! explicit error rather than a silently wrong analysis.

use thiserror::Error;

use crate::linalg::{Matrix, PrimeField, SubspaceBasis};
use crate::rep::GroupModule;

/// Largest field for which eigenvalue scans (used to refine idempotent
/// splittings) are attempted; beyond this the caller should fall back to
/// seed enumeration with a larger budget.
const EIGENVALUE_SCAN_LIMIT: u32 = 1024;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    /// A runtime certificate that should hold by theory failed; this
    /// indicates a bug, not bad input, and is never silently ignored.
    #[error("algebra certificate failed: {0}")]
    CertificateFailed(String),
    /// Splitting a commutative semisimple algebra scans candidate
    /// eigenvalues, which is only feasible over small fields.
    #[error("field F_{modulus} is too large for eigenvalue scanning (limit {limit})")]
    FieldTooLarge { modulus: u32, limit: u32 },
}

pub(crate) fn flatten(m: &Matrix) -> Vec<u32> {
    let mut out = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        out.extend_from_slice(m.row(i));
    }
    out
}

pub(crate) fn unflatten(field: PrimeField, dim: usize, row: &[u32]) -> Matrix {
    Matrix::from_flat(field, dim, dim, row.to_vec())
}

/// Trace of a product, computed without forming the product.
fn trace_of_product(a: &Matrix, b: &Matrix) -> u32 {
    let field = a.field();
    let d = a.rows();
    let mut acc: u64 = 0;
    let q = field.modulus() as u64;
    for i in 0..d {
        let ra = a.row(i);
        for j in 0..d {
            acc = (acc + ra[j] as u64 * b.get(j, i) as u64) % q;
        }
    }
    acc as u32
}

/// A subspace of d-by-d matrices that is closed under multiplication,
/// held with a canonical (RREF of the flattened matrices) basis.
///
/// The span may or may not contain the identity; the radical chain and the
/// certificates work either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixAlgebra {
    field: PrimeField,
    matrix_dim: usize,
    span: SubspaceBasis,
    basis: Vec<Matrix>,
}

impl MatrixAlgebra {
    /// Wraps a span that the caller knows to be multiplicatively closed —
    /// the two sources in this crate are spans of group-action images
    /// (products of group elements are group elements) and commutants.
    pub fn from_closed_span(
        field: PrimeField,
        matrix_dim: usize,
        generators: &[Matrix],
    ) -> MatrixAlgebra {
        let mut span = SubspaceBasis::zero(field, matrix_dim * matrix_dim);
        for m in generators {
            span.insert(&flatten(m));
        }
        let basis = span
            .rows()
            .iter()
            .map(|r| unflatten(field, matrix_dim, r))
            .collect();
        MatrixAlgebra {
            field,
            matrix_dim,
            span,
            basis,
        }
    }

    /// Closes a generating set under multiplication (and span) by breadth
    /// first search; use this when closure is not known a priori.
    pub fn closure(field: PrimeField, matrix_dim: usize, generators: &[Matrix]) -> MatrixAlgebra {
        let mut span = SubspaceBasis::zero(field, matrix_dim * matrix_dim);
        let mut worklist: Vec<Matrix> = Vec::new();
        for m in generators {
            if span.insert(&flatten(m)) {
                worklist.push(m.clone());
            }
        }
        let mut frontier = 0;
        while frontier < worklist.len() {
            let current = worklist[frontier].clone();
            frontier += 1;
            // Products against every matrix accumulated so far, both ways.
            let mut new_items = Vec::new();
            for other in &worklist {
                for prod in [current.mul(other), other.mul(&current)] {
                    new_items.push(prod);
                }
            }
            for prod in new_items {
                if span.insert(&flatten(&prod)) {
                    worklist.push(prod);
                }
            }
        }
        let basis = span
            .rows()
            .iter()
            .map(|r| unflatten(field, matrix_dim, r))
            .collect();
        MatrixAlgebra {
            field,
            matrix_dim,
            span,
            basis,
        }
    }

    /// The span of all action matrices of a module.  Closed because the
    /// action is multiplicative.
    pub fn enveloping(module: &GroupModule) -> MatrixAlgebra {
        let mats: Vec<Matrix> = (0..module.order())
            .map(|g| module.action(g).clone())
            .collect();
        MatrixAlgebra::from_closed_span(module.field(), module.dim(), &mats)
    }

    /// The commutant (endomorphism algebra) of a module: all matrices
    /// commuting with every generator's action.  Closed under products and
    /// contains the identity.
    pub fn commutant(module: &GroupModule) -> MatrixAlgebra {
        let field = module.field();
        let d = module.dim();
        let gens = module.generators();
        // T A(g) = A(g) T, flattened row-major: the unknown matrix T has
        // coordinates T[i][j] at index i*d + j, and the constraint rows are
        // (A(g) T - T A(g))[i][j] = sum_k A[i][k] T[k][j] - T[i][k] A[k][j].
        let mut rows: Vec<Vec<u32>> = Vec::with_capacity(gens.len() * d * d);
        for &g in gens {
            let a = module.action(g);
            for i in 0..d {
                for j in 0..d {
                    let mut row = vec![0u32; d * d];
                    for k in 0..d {
                        row[k * d + j] = field.add(row[k * d + j], a.get(i, k));
                        let v = row[i * d + k];
                        row[i * d + k] = field.sub(v, a.get(k, j));
                    }
                    rows.push(row);
                }
            }
        }
        let system = Matrix::from_flat(
            field,
            rows.len(),
            d * d,
            rows.into_iter().flatten().collect(),
        );
        let sol = system.nullspace();
        let basis: Vec<Matrix> = sol.rows().iter().map(|r| unflatten(field, d, r)).collect();
        MatrixAlgebra::from_closed_span(field, d, &basis)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn matrix_dim(&self) -> usize {
        self.matrix_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn span(&self) -> &SubspaceBasis {
        &self.span
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.span.contains(&flatten(m))
    }

    /// Coordinates of an element with respect to the canonical basis.
    /// Because the basis rows are in reduced row echelon form, the
    /// coordinates can be read off at the pivot columns.
    pub fn coords_of(&self, m: &Matrix) -> Option<Vec<u32>> {
        let flat = flatten(m);
        if !self.span.contains(&flat) {
            return None;
        }
        Some(
            self.span
                .pivots()
                .iter()
                .map(|&p| flat[p])
                .collect(),
        )
    }

    pub fn is_commutative(&self) -> bool {
        for (i, a) in self.basis.iter().enumerate() {
            for b in &self.basis[i + 1..] {
                if a.mul(b) != b.mul(a) {
                    return false;
                }
            }
        }
        true
    }

    /// The Jacobson radical, as a (non-unital) subalgebra.
    ///
    /// Starting from the whole algebra, each step keeps the elements `x`
    /// with `c_m(x * y) = 0` for every basis element `y` of the current
    /// subspace, where `c_m` is the coefficient of `lambda^(dim - m)` in the
    /// characteristic polynomial and `m` runs through `1, p, p^2, ...` up to
    /// the matrix dimension.  Over a prime field each such condition is
    /// linear on the subspace reached so far, and the chain ends exactly at
    /// the radical (Friedl–Rónyai / Cohen–Ivanyos–Wales).  The `m = 1` step
    /// is the trace form and is computed without forming products.
    ///
    /// The result is certified to be a nilpotent two-sided ideal before it
    /// is returned.
    pub fn radical(&self) -> Result<MatrixAlgebra, AlgebraError> {
        let field = self.field;
        let d = self.matrix_dim;
        let p = field.modulus() as u64;
        let mut current: Vec<Matrix> = self.basis.clone();
        let mut m: u64 = 1;
        while m <= d as u64 {
            let t = current.len();
            if t == 0 {
                break;
            }
            // Constraint matrix: row per basis element y, column per
            // coordinate of x; entry c_m(b_col * y_row).
            let mut rows: Vec<u32> = Vec::with_capacity(t * t);
            for y in &current {
                for x in &current {
                    let value = if m == 1 {
                        field.neg(trace_of_product(x, y))
                    } else {
                        x.mul(y).char_poly()[m as usize]
                    };
                    rows.push(value);
                }
            }
            let system = Matrix::from_flat(field, t, t, rows);
            let kernel = system.nullspace();
            let next: Vec<Matrix> = kernel
                .rows()
                .iter()
                .map(|coeffs| {
                    let mut acc = Matrix::zero(field, d, d);
                    for (c, b) in coeffs.iter().zip(&current) {
                        if *c != 0 {
                            acc = acc.add(&b.scale(*c));
                        }
                    }
                    acc
                })
                .collect();
            current = canonical_basis(field, d, &next);
            m *= p;
        }
        let radical = MatrixAlgebra::from_closed_span(field, d, &current);
        self.certify_radical(&radical)?;
        Ok(radical)
    }

    fn certify_radical(&self, radical: &MatrixAlgebra) -> Result<(), AlgebraError> {
        // Two-sided ideal inside the algebra.
        for r in radical.basis() {
            for b in &self.basis {
                if !radical.contains(&r.mul(b)) || !radical.contains(&b.mul(r)) {
                    return Err(AlgebraError::CertificateFailed(
                        "radical candidate is not a two-sided ideal".into(),
                    ));
                }
            }
        }
        // Nilpotent: powers of the subspace must reach zero.
        let mut power: Vec<Matrix> = radical.basis().to_vec();
        for _ in 0..self.matrix_dim {
            if power.is_empty() {
                return Ok(());
            }
            let mut products = Vec::new();
            for a in &power {
                for r in radical.basis() {
                    products.push(a.mul(r));
                }
            }
            let next = canonical_basis(self.field, self.matrix_dim, &products);
            if next.len() >= power.len() && !next.is_empty() {
                return Err(AlgebraError::CertificateFailed(
                    "radical candidate is not nilpotent".into(),
                ));
            }
            power = next;
        }
        if power.is_empty() {
            Ok(())
        } else {
            Err(AlgebraError::CertificateFailed(
                "radical candidate is not nilpotent".into(),
            ))
        }
    }

    /// For a commutative algebra, an embedded copy of its semisimple
    /// quotient: the image of `x -> x^(p^s)` with `p^s` past the nilpotency
    /// index of the radical.  That map is an algebra endomorphism in
    /// characteristic p with kernel exactly the radical (the nilpotents),
    /// so its image is isomorphic to the quotient by the radical.
    pub fn semisimple_part(&self) -> Result<MatrixAlgebra, AlgebraError> {
        if !self.is_commutative() {
            return Err(AlgebraError::CertificateFailed(
                "semisimple part requested for a noncommutative algebra".into(),
            ));
        }
        let radical = self.radical()?;
        if radical.dim() == 0 {
            return Ok(self.clone());
        }
        let p = self.field.modulus() as u64;
        let exponent = idempotent_lift_exponent(p, radical.dim() as u64 + 1);
        let images: Vec<Matrix> = self.basis.iter().map(|b| b.pow(exponent)).collect();
        Ok(MatrixAlgebra::from_closed_span(
            self.field,
            self.matrix_dim,
            &images,
        ))
    }

    /// Block idempotents of a commutative algebra that need not be
    /// semisimple: the primitive idempotents of its semisimple part, which
    /// represent the blocks of the quotient by the radical.
    pub fn block_idempotents(&self) -> Result<Vec<Matrix>, AlgebraError> {
        self.semisimple_part()?.primitive_idempotents()
    }

    /// The center: elements commuting with every basis element.
    pub fn center(&self) -> MatrixAlgebra {
        let t = self.basis.len();
        let d = self.matrix_dim;
        if t == 0 {
            return MatrixAlgebra::from_closed_span(self.field, d, &[]);
        }
        // Unknown x = sum xi_j b_j; per basis element b_i the condition is
        // sum_j xi_j (b_j b_i - b_i b_j) = 0, one scalar row per entry.
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for b_i in &self.basis {
            let cols: Vec<Vec<u32>> = self
                .basis
                .iter()
                .map(|b_j| flatten(&b_j.mul(b_i).sub(&b_i.mul(b_j))))
                .collect();
            for entry in 0..d * d {
                rows.push(cols.iter().map(|c| c[entry]).collect());
            }
        }
        let system = Matrix::from_flat(
            self.field,
            rows.len(),
            t,
            rows.into_iter().flatten().collect(),
        );
        let kernel = system.nullspace();
        let mats: Vec<Matrix> = kernel
            .rows()
            .iter()
            .map(|coeffs| {
                let mut acc = Matrix::zero(self.field, d, d);
                for (c, b) in coeffs.iter().zip(&self.basis) {
                    if *c != 0 {
                        acc = acc.add(&b.scale(*c));
                    }
                }
                acc
            })
            .collect();
        MatrixAlgebra::from_closed_span(self.field, d, &mats)
    }

    /// Basis of the subspace fixed by the Frobenius map `x -> x^p`.  On a
    /// commutative algebra over the prime field F_p this map is linear, and
    /// for a semisimple commutative algebra the fixed subspace has one
    /// dimension per simple block.
    pub fn frobenius_fixed(&self) -> Result<Vec<Matrix>, AlgebraError> {
        if !self.is_commutative() {
            return Err(AlgebraError::CertificateFailed(
                "frobenius fixed subspace requested for a noncommutative algebra".into(),
            ));
        }
        let t = self.basis.len();
        if t == 0 {
            return Ok(Vec::new());
        }
        let p = self.field.modulus() as u64;
        let mut columns = Vec::with_capacity(t);
        for b in &self.basis {
            let image = b.pow(p);
            let coords = self.coords_of(&image).ok_or_else(|| {
                AlgebraError::CertificateFailed(
                    "power of an algebra element left the algebra".into(),
                )
            })?;
            columns.push(coords);
        }
        // Matrix of Frobenius minus identity, columns indexed by basis.
        let mut data = vec![0u32; t * t];
        for (j, col) in columns.iter().enumerate() {
            for i in 0..t {
                let mut v = col[i];
                if i == j {
                    v = self.field.sub(v, 1);
                }
                data[i * t + j] = v;
            }
        }
        let kernel = Matrix::from_flat(self.field, t, t, data).nullspace();
        Ok(kernel
            .rows()
            .iter()
            .map(|coeffs| {
                let mut acc = Matrix::zero(self.field, self.matrix_dim, self.matrix_dim);
                for (c, b) in coeffs.iter().zip(&self.basis) {
                    if *c != 0 {
                        acc = acc.add(&b.scale(*c));
                    }
                }
                acc
            })
            .collect())
    }

    /// The primitive idempotents of a commutative *semisimple* algebra
    /// (a product of finite fields), in canonical order.
    ///
    /// The Frobenius-fixed subspace is a copy of F_p per block; common
    /// eigenspace refinement of its multiplication operators separates the
    /// blocks, and raising a separated vector to the `p - 1`st power yields
    /// the block idempotent.  Orthogonality, idempotency and completeness
    /// (the sum acts as the algebra identity) are all certified.
    pub fn primitive_idempotents(&self) -> Result<Vec<Matrix>, AlgebraError> {
        let field = self.field;
        let d = self.matrix_dim;
        if self.basis.is_empty() {
            return Ok(Vec::new());
        }
        let fixed = self.frobenius_fixed()?;
        let r = fixed.len();
        if r == 0 {
            return Err(AlgebraError::CertificateFailed(
                "semisimple commutative algebra has no Frobenius-fixed elements".into(),
            ));
        }
        let p = field.modulus() as u64;
        let idempotent_power = if p == 2 { 1 } else { p - 1 };
        let mut idempotents: Vec<Matrix> = if r == 1 {
            vec![fixed[0].pow(idempotent_power)]
        } else {
            if field.modulus() > EIGENVALUE_SCAN_LIMIT {
                return Err(AlgebraError::FieldTooLarge {
                    modulus: field.modulus(),
                    limit: EIGENVALUE_SCAN_LIMIT,
                });
            }
            // Work in coordinates of the fixed subspace.  Its span is
            // closed under multiplication, so products have coordinates.
            let fixed_span = MatrixAlgebra::from_closed_span(field, d, &fixed);
            let fixed_basis = fixed_span.basis().to_vec();
            let mut operators = Vec::with_capacity(r);
            for f in &fixed_basis {
                let mut data = vec![0u32; r * r];
                for (j, g) in fixed_basis.iter().enumerate() {
                    let coords = fixed_span.coords_of(&f.mul(g)).ok_or_else(|| {
                        AlgebraError::CertificateFailed(
                            "fixed subspace is not closed under multiplication".into(),
                        )
                    })?;
                    for i in 0..r {
                        data[i * r + j] = coords[i];
                    }
                }
                operators.push(Matrix::from_flat(field, r, r, data));
            }
            let mut parts = vec![SubspaceBasis::full(field, r)];
            for op in &operators {
                if parts.iter().all(|s| s.dim() == 1) {
                    break;
                }
                let mut refined = Vec::new();
                for part in &parts {
                    if part.dim() == 1 {
                        refined.push(part.clone());
                        continue;
                    }
                    let mut covered = 0;
                    for lambda in 0..field.modulus() {
                        let mut shifted = op.clone();
                        for i in 0..r {
                            shifted.set(i, i, field.sub(op.get(i, i), lambda));
                        }
                        let eigen = shifted.nullspace().intersect(part);
                        if eigen.dim() > 0 {
                            covered += eigen.dim();
                            refined.push(eigen);
                        }
                    }
                    if covered != part.dim() {
                        return Err(AlgebraError::CertificateFailed(
                            "multiplication operator on the fixed subspace is not diagonalizable"
                                .into(),
                        ));
                    }
                }
                parts = refined;
            }
            if parts.len() != r || parts.iter().any(|s| s.dim() != 1) {
                return Err(AlgebraError::CertificateFailed(
                    "eigenspace refinement did not separate the blocks".into(),
                ));
            }
            parts
                .iter()
                .map(|line| {
                    let coeffs = &line.rows()[0];
                    let mut acc = Matrix::zero(field, d, d);
                    for (c, f) in coeffs.iter().zip(&fixed_basis) {
                        if *c != 0 {
                            acc = acc.add(&f.scale(*c));
                        }
                    }
                    acc.pow(idempotent_power)
                })
                .collect()
        };
        idempotents.sort_by(|a, b| flatten(a).cmp(&flatten(b)));
        // Certificates: idempotent, pairwise orthogonal, and the sum acts
        // as the identity of the algebra.
        for e in &idempotents {
            if e.is_zero() || e.mul(e) != *e {
                return Err(AlgebraError::CertificateFailed(
                    "candidate block element is not a nonzero idempotent".into(),
                ));
            }
        }
        for (i, a) in idempotents.iter().enumerate() {
            for b in &idempotents[i + 1..] {
                if !a.mul(b).is_zero() || !b.mul(a).is_zero() {
                    return Err(AlgebraError::CertificateFailed(
                        "block idempotents are not orthogonal".into(),
                    ));
                }
            }
        }
        let mut total = Matrix::zero(field, d, d);
        for e in &idempotents {
            total = total.add(e);
        }
        for b in &self.basis {
            if total.mul(b) != *b || b.mul(&total) != *b {
                return Err(AlgebraError::CertificateFailed(
                    "block idempotents do not sum to the algebra identity".into(),
                ));
            }
        }
        Ok(idempotents)
    }
}

/// Canonicalizes a spanning set of matrices into RREF basis form.
fn canonical_basis(field: PrimeField, dim: usize, mats: &[Matrix]) -> Vec<Matrix> {
    let mut span = SubspaceBasis::zero(field, dim * dim);
    for m in mats {
        span.insert(&flatten(m));
    }
    span.rows().iter().map(|r| unflatten(field, dim, r)).collect()
}

/// Smallest power of `p` that is at least `bound`; raising an idempotent
/// modulo a nilpotent ideal to this power yields a genuine idempotent.
pub fn idempotent_lift_exponent(p: u64, bound: u64) -> u64 {
    let mut e = 1u64;
    while e < bound {
        e *= p;
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::rc::Rc;

    use crate::rep::{GroupModule, GroupTable};

    fn f(q: u64) -> PrimeField {
        PrimeField::new(q).unwrap()
    }

    fn m(field: PrimeField, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows_i64(field, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    fn regular_module(order: usize, q: u64) -> GroupModule {
        let table: Vec<Vec<usize>> = (0..order)
            .map(|a| (0..order).map(|b| (a + b) % order).collect())
            .collect();
        let group = Rc::new(GroupTable::new(&table).unwrap());
        GroupModule::left_regular(group, q).unwrap()
    }

    #[test]
    fn radical_of_dual_numbers() {
        let field = f(2);
        let algebra = MatrixAlgebra::closure(
            field,
            2,
            &[m(field, &[&[1, 0], &[0, 1]]), m(field, &[&[0, 1], &[0, 0]])],
        );
        assert_eq!(algebra.dim(), 2);
        let radical = algebra.radical().unwrap();
        assert_eq!(radical.dim(), 1);
        assert!(radical.contains(&m(field, &[&[0, 1], &[0, 0]])));
    }

    #[test]
    fn radical_of_the_full_matrix_algebra_is_zero() {
        let field = f(2);
        let algebra = MatrixAlgebra::closure(
            field,
            2,
            &[m(field, &[&[0, 1], &[0, 0]]), m(field, &[&[0, 0], &[1, 0]])],
        );
        assert_eq!(algebra.dim(), 4);
        assert_eq!(algebra.radical().unwrap().dim(), 0);
    }

    #[test]
    fn scalar_algebra_in_even_characteristic_has_zero_radical() {
        // The trace form alone cannot see this: tr(I * I) = 2 = 0 over F_2,
        // so the determinant step of the chain has to finish the job.
        let field = f(2);
        let algebra =
            MatrixAlgebra::from_closed_span(field, 2, &[Matrix::identity(field, 2)]);
        assert_eq!(algebra.dim(), 1);
        assert_eq!(algebra.radical().unwrap().dim(), 0);
    }

    #[test]
    fn radical_of_upper_triangular_matrices() {
        let field = f(3);
        let algebra = MatrixAlgebra::closure(
            field,
            2,
            &[
                m(field, &[&[1, 0], &[0, 0]]),
                m(field, &[&[0, 0], &[0, 1]]),
                m(field, &[&[0, 1], &[0, 0]]),
            ],
        );
        assert_eq!(algebra.dim(), 3);
        let radical = algebra.radical().unwrap();
        assert_eq!(radical.dim(), 1);
        assert!(radical.contains(&m(field, &[&[0, 1], &[0, 0]])));
    }

    #[test]
    fn nil_algebra_is_its_own_radical() {
        let field = f(5);
        let algebra = MatrixAlgebra::closure(field, 2, &[m(field, &[&[0, 1], &[0, 0]])]);
        assert_eq!(algebra.dim(), 1);
        assert_eq!(algebra.radical().unwrap().dim(), 1);
    }

    #[test]
    fn center_of_the_full_matrix_algebra_is_scalars() {
        let field = f(3);
        let algebra = MatrixAlgebra::closure(
            field,
            2,
            &[m(field, &[&[0, 1], &[0, 0]]), m(field, &[&[0, 0], &[1, 0]])],
        );
        assert_eq!(algebra.dim(), 4);
        let center = algebra.center();
        assert_eq!(center.dim(), 1);
        assert!(center.contains(&Matrix::identity(field, 2)));
    }

    #[test]
    fn group_algebra_of_z2_over_f3_splits_into_two_blocks() {
        let module = regular_module(2, 3);
        let algebra = MatrixAlgebra::enveloping(&module);
        assert_eq!(algebra.dim(), 2);
        assert!(algebra.is_commutative());
        assert_eq!(algebra.radical().unwrap().dim(), 0);
        let idempotents = algebra.primitive_idempotents().unwrap();
        // (I + S)/2 and (I - S)/2 for the swap S, with 1/2 = 2 mod 3.
        assert_eq!(
            idempotents,
            vec![
                m(f(3), &[&[2, 1], &[1, 2]]),
                m(f(3), &[&[2, 2], &[2, 2]]),
            ]
        );
    }

    #[test]
    fn group_algebra_of_z4_over_f3_splits_into_three_blocks() {
        // x^4 - 1 = (x - 1)(x + 1)(x^2 + 1) over F_3, so three blocks of
        // dimensions 1, 1, 2.
        let module = regular_module(4, 3);
        let algebra = MatrixAlgebra::enveloping(&module);
        assert_eq!(algebra.dim(), 4);
        assert_eq!(algebra.radical().unwrap().dim(), 0);
        assert_eq!(algebra.frobenius_fixed().unwrap().len(), 3);
        let idempotents = algebra.primitive_idempotents().unwrap();
        assert_eq!(idempotents.len(), 3);
        let mut block_dims: Vec<usize> = idempotents.iter().map(|e| e.rref().1).collect();
        block_dims.sort();
        assert_eq!(block_dims, vec![1, 1, 2]);
    }

    #[test]
    fn modular_group_algebra_of_z4_is_local() {
        // Over F_2 the group algebra of Z/4 is F_2[x]/(x - 1)^4: radical of
        // dimension 3, a single block.
        let module = regular_module(4, 2);
        let algebra = MatrixAlgebra::enveloping(&module);
        assert_eq!(algebra.dim(), 4);
        let radical = algebra.radical().unwrap();
        assert_eq!(radical.dim(), 3);
        assert_eq!(algebra.frobenius_fixed().unwrap().len(), 1);
        assert_eq!(
            algebra.block_idempotents().unwrap(),
            vec![Matrix::identity(f(2), 4)]
        );
    }

    #[test]
    fn modular_group_algebra_of_z6_has_two_blocks() {
        // x^6 - 1 = ((x + 1)(x^2 + x + 1))^2 over F_2, so the group algebra
        // is F_2[x]/(x+1)^2 x F_4[y]/y^2: radical of dimension 3, two blocks.
        let module = regular_module(6, 2);
        let algebra = MatrixAlgebra::enveloping(&module);
        assert_eq!(algebra.radical().unwrap().dim(), 3);
        let idempotents = algebra.block_idempotents().unwrap();
        assert_eq!(idempotents.len(), 2);
        let mut total = Matrix::zero(f(2), 6, 6);
        for e in &idempotents {
            assert_eq!(e.mul(e), *e);
            total = total.add(e);
        }
        assert!(total.is_identity());
    }

    #[test]
    fn commutant_of_an_abelian_regular_module_is_the_group_algebra() {
        let module = regular_module(4, 3);
        let commutant = MatrixAlgebra::commutant(&module);
        assert_eq!(commutant.dim(), 4);
        assert!(commutant.is_commutative());
        assert!(commutant.contains(module.action(1)));
    }

    #[test]
    fn lift_exponent_is_the_smallest_sufficient_p_power() {
        assert_eq!(idempotent_lift_exponent(2, 36), 64);
        assert_eq!(idempotent_lift_exponent(3, 3), 3);
        assert_eq!(idempotent_lift_exponent(5, 1), 1);
        assert_eq!(idempotent_lift_exponent(7, 8), 49);
    }
}
