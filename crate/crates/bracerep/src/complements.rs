//! Complements to invariant subspaces and the dual-side picture:
//! Maschke averaging, exhaustive projector searches, invariant lines, and
//! hyperplane counting against a distinguished vector.
//!
//! The hyperplane side works through the dual module: invariant hyperplanes
//! correspond to invariant lines of the contragredient action, which are
//! exactly the common eigenvectors of the generator matrices.  Counting
//! eigenspace dimensions gives exact hyperplane counts without ever
//! enumerating the hyperplanes themselves, which keeps the "no invariant
//! complement" verdict exact even when there are astronomically many.

use std::rc::Rc;

use crate::analysis::{
    advance_projective, endomorphism_algebra, first_projective, image_subspace, projective_count,
    saturating_pow, AnalysisBudget, AnalysisError,
};
use crate::linalg::{Matrix, PrimeField, SubspaceBasis};
use crate::rep::GroupModule;

/// The complement of an invariant subspace by averaging a projector over
/// the group; requires the group order to be invertible in the field.
pub fn maschke_complement(
    module: &GroupModule,
    subspace: &SubspaceBasis,
) -> Result<SubspaceBasis, AnalysisError> {
    let field = module.field();
    let d = module.dim();
    let order = module.order() as u64;
    if order % field.modulus() as u64 == 0 {
        return Err(AnalysisError::Mismatched(
            "group order is divisible by the characteristic; averaging is impossible".into(),
        ));
    }
    if !module.is_invariant(subspace) {
        return Err(AnalysisError::NotInvariant);
    }
    if subspace.dim() == d {
        return Ok(SubspaceBasis::zero(field, d));
    }
    if subspace.dim() == 0 {
        return Ok(SubspaceBasis::full(field, d));
    }
    // A projector onto the subspace: reads off echelon coordinates at the
    // pivots, so column p_j is the j-th basis vector.
    let mut start = Matrix::zero(field, d, d);
    for (j, &p) in subspace.pivots().iter().enumerate() {
        for i in 0..d {
            start.set(i, p, subspace.rows()[j][i]);
        }
    }
    let mut total = Matrix::zero(field, d, d);
    for g in 0..module.order() {
        let inverse = module.group().inverse(g);
        total = total.add(&module.action(g).mul(&start).mul(module.action(inverse)));
    }
    let projector = total.scale(field.inv((order % field.modulus() as u64) as u32));
    if projector.mul(&projector) != projector || image_subspace(&projector) != *subspace {
        return Err(AnalysisError::Internal(
            "averaged projector is not a projector onto the subspace".into(),
        ));
    }
    let complement = projector.nullspace();
    if !module.is_invariant(&complement)
        || complement.dim() + subspace.dim() != d
        || complement.intersect(subspace).dim() != 0
    {
        return Err(AnalysisError::Internal(
            "averaged complement fails its certificates".into(),
        ));
    }
    Ok(complement)
}

/// Whether an invariant subspace has an invariant direct complement, with
/// the complement as witness.  Coprime characteristic always succeeds by
/// averaging; otherwise the commutant is searched exhaustively for a
/// projector with the right image — a complement exists precisely when such
/// a projector does, so an exhausted search is a definitive "no".
pub fn invariant_complement(
    module: &GroupModule,
    subspace: &SubspaceBasis,
    budget: &AnalysisBudget,
) -> Result<Option<SubspaceBasis>, AnalysisError> {
    let field = module.field();
    let d = module.dim();
    if !module.is_invariant(subspace) {
        return Err(AnalysisError::NotInvariant);
    }
    if subspace.dim() == d {
        return Ok(Some(SubspaceBasis::zero(field, d)));
    }
    if subspace.dim() == 0 {
        return Ok(Some(SubspaceBasis::full(field, d)));
    }
    if module.order() as u64 % field.modulus() as u64 != 0 {
        return Ok(Some(maschke_complement(module, subspace)?));
    }
    let end = endomorphism_algebra(module);
    let q = field.modulus() as u64;
    let t = end.dim();
    let needed = saturating_pow(q, t);
    if needed > budget.max_enumeration as u128 {
        return Err(AnalysisError::BudgetExceeded {
            needed,
            budget: budget.max_enumeration,
        });
    }
    let mut coeffs = vec![0u32; t];
    loop {
        let mut pos = t;
        loop {
            if pos == 0 {
                return Ok(None);
            }
            pos -= 1;
            if coeffs[pos] + 1 < q as u32 {
                coeffs[pos] += 1;
                break;
            }
            coeffs[pos] = 0;
        }
        let mut candidate = Matrix::zero(field, d, d);
        for (c, b) in coeffs.iter().zip(end.basis()) {
            if *c != 0 {
                candidate = candidate.add(&b.scale(*c));
            }
        }
        if candidate.mul(&candidate) == candidate && image_subspace(&candidate) == *subspace {
            let complement = candidate.nullspace();
            if !module.is_invariant(&complement)
                || complement.dim() + subspace.dim() != d
                || complement.intersect(subspace).dim() != 0
            {
                return Err(AnalysisError::Internal(
                    "projector complement fails its certificates".into(),
                ));
            }
            return Ok(Some(complement));
        }
    }
}

/// The contragredient module: `g` acts by the transposed inverse.  Its
/// invariant lines are the functionals cutting out invariant hyperplanes.
pub fn dual_module(module: &GroupModule) -> Result<GroupModule, AnalysisError> {
    let actions: Vec<Matrix> = (0..module.order())
        .map(|g| module.action(module.group().inverse(g)).transpose())
        .collect();
    Ok(GroupModule::new(
        Rc::clone(module.group()),
        module.field(),
        actions,
    )?)
}

/// Kernel of `op - eigenvalue` intersected with a subspace, computed in the
/// subspace's coordinates so the cost scales with its dimension.
fn eigenspace_within(op: &Matrix, eigenvalue: u32, within: &SubspaceBasis) -> SubspaceBasis {
    let field = op.field();
    let d = op.rows();
    let e = within.dim();
    if e == 0 {
        return SubspaceBasis::zero(field, d);
    }
    let mut data = vec![0u32; d * e];
    for (j, basis_row) in within.rows().iter().enumerate() {
        let image = op.apply(basis_row);
        for i in 0..d {
            data[i * e + j] = field.sub(image[i], field.mul(eigenvalue, basis_row[i]));
        }
    }
    let kernel = Matrix::from_flat(field, d, e, data).nullspace();
    let mut out = SubspaceBasis::zero(field, d);
    for coeffs in kernel.rows() {
        let mut v = vec![0u32; d];
        for (c, basis_row) in coeffs.iter().zip(within.rows()) {
            if *c != 0 {
                for (dst, src) in v.iter_mut().zip(basis_row) {
                    *dst = field.add(*dst, field.mul(*c, *src));
                }
            }
        }
        out.insert(&v);
    }
    out
}

/// Common-eigenvector subspaces over all nonzero eigenvalue tuples for the
/// generator matrices, pruning empty branches.  The union of the lines in
/// the returned subspaces is exactly the set of invariant lines.
fn eigen_leaf_spaces(
    field: PrimeField,
    generators: &[&Matrix],
    dim: usize,
    budget: &AnalysisBudget,
) -> Result<Vec<SubspaceBasis>, AnalysisError> {
    let tuples = saturating_pow(field.modulus() as u64 - 1, generators.len());
    if tuples > budget.max_enumeration as u128 {
        return Err(AnalysisError::BudgetExceeded {
            needed: tuples,
            budget: budget.max_enumeration,
        });
    }
    fn descend(
        field: PrimeField,
        generators: &[&Matrix],
        level: usize,
        space: SubspaceBasis,
        leaves: &mut Vec<SubspaceBasis>,
    ) {
        if level == generators.len() {
            leaves.push(space);
            return;
        }
        for eigenvalue in 1..field.modulus() {
            let refined = eigenspace_within(generators[level], eigenvalue, &space);
            if refined.dim() > 0 {
                descend(field, generators, level + 1, refined, leaves);
            }
        }
    }
    let mut leaves = Vec::new();
    descend(
        field,
        generators,
        0,
        SubspaceBasis::full(field, dim),
        &mut leaves,
    );
    Ok(leaves)
}

/// All invariant lines, canonically sorted.  A line is invariant exactly
/// when it is a common eigenline of the generators, so the search runs over
/// eigenvalue tuples rather than over all lines of the space.
pub fn invariant_lines(
    module: &GroupModule,
    budget: &AnalysisBudget,
) -> Result<Vec<SubspaceBasis>, AnalysisError> {
    let field = module.field();
    let d = module.dim();
    let q = field.modulus() as u64;
    let generators: Vec<&Matrix> = module
        .generators()
        .iter()
        .map(|&g| module.action(g))
        .collect();
    let leaves = eigen_leaf_spaces(field, &generators, d, budget)?;
    let mut total: u128 = 0;
    for leaf in &leaves {
        total = total.saturating_add(projective_count(q, leaf.dim()));
    }
    if total > budget.max_seed_subspaces as u128 {
        return Err(AnalysisError::BudgetExceeded {
            needed: total,
            budget: budget.max_seed_subspaces,
        });
    }
    let mut lines = Vec::new();
    for leaf in &leaves {
        let mut coords = first_projective(leaf.dim());
        loop {
            let mut v = vec![0u32; d];
            for (c, basis_row) in coords.iter().zip(leaf.rows()) {
                if *c != 0 {
                    for (dst, src) in v.iter_mut().zip(basis_row) {
                        *dst = field.add(*dst, field.mul(*c, *src));
                    }
                }
            }
            let mut line = SubspaceBasis::zero(field, d);
            line.insert(&v);
            if !module.is_invariant(&line) {
                return Err(AnalysisError::Internal(
                    "eigen tuple produced a non-invariant line".into(),
                ));
            }
            lines.push(line);
            if !advance_projective(&mut coords, q as u32) {
                break;
            }
        }
    }
    lines.sort_by(|a, b| a.canonical_cmp(b));
    Ok(lines)
}

/// What the invariant hyperplanes say about a distinguished vector delta:
/// how many there are, how many contain delta, and hence whether the line
/// spanned by delta has an invariant complement (necessarily a hyperplane).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaReport {
    /// Whether span(delta) is itself invariant.
    pub line_is_invariant: bool,
    /// Number of invariant hyperplanes (saturating count).
    pub invariant_hyperplane_count: u128,
    /// How many of them contain delta.
    pub hyperplanes_containing_delta: u128,
    /// True iff some invariant hyperplane misses delta.
    pub has_invariant_complement: bool,
}

pub fn delta_report(
    module: &GroupModule,
    delta: &[u32],
    budget: &AnalysisBudget,
) -> Result<DeltaReport, AnalysisError> {
    let field = module.field();
    let d = module.dim();
    let q = field.modulus() as u64;
    if delta.len() != d {
        return Err(AnalysisError::Mismatched(format!(
            "delta has length {} in a module of dimension {d}",
            delta.len()
        )));
    }
    if delta.iter().all(|&x| x == 0) {
        return Err(AnalysisError::Mismatched("delta must be nonzero".into()));
    }
    if d < 2 {
        return Err(AnalysisError::Mismatched(
            "hyperplane counting needs ambient dimension at least 2".into(),
        ));
    }
    let mut line = SubspaceBasis::zero(field, d);
    line.insert(delta);
    let line_is_invariant = module.is_invariant(&line);
    let dual = dual_module(module)?;
    let generators: Vec<&Matrix> = dual
        .generators()
        .iter()
        .map(|&g| dual.action(g))
        .collect();
    let leaves = eigen_leaf_spaces(field, &generators, d, budget)?;
    // Functionals vanishing on delta form a hyperplane of the dual space;
    // an invariant hyperplane contains delta iff its functional lies there.
    let vanishing = Matrix::from_flat(field, 1, d, delta.to_vec()).nullspace();
    let mut count: u128 = 0;
    let mut containing: u128 = 0;
    for leaf in &leaves {
        count = count.saturating_add(projective_count(q, leaf.dim()));
        let meet = leaf.intersect(&vanishing);
        containing = containing.saturating_add(projective_count(q, meet.dim()));
    }
    Ok(DeltaReport {
        line_is_invariant,
        invariant_hyperplane_count: count,
        hyperplanes_containing_delta: containing,
        has_invariant_complement: count > containing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::rep::GroupTable;

    fn f(q: u64) -> PrimeField {
        PrimeField::new(q).unwrap()
    }

    fn m(field: PrimeField, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows_i64(field, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    fn cyclic_table(n: usize) -> Rc<GroupTable> {
        let table: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        Rc::new(GroupTable::new(&table).unwrap())
    }

    fn regular_module(n: usize, q: u64) -> GroupModule {
        GroupModule::left_regular(cyclic_table(n), q).unwrap()
    }

    fn line(field: PrimeField, v: &[u32]) -> SubspaceBasis {
        let mut s = SubspaceBasis::zero(field, v.len());
        s.insert(v);
        s
    }

    #[test]
    fn averaging_complements_the_diagonal_line() {
        let module = regular_module(2, 3);
        let diagonal = line(f(3), &[1, 1]);
        let complement = maschke_complement(&module, &diagonal).unwrap();
        assert_eq!(complement.dim(), 1);
        assert!(complement.contains(&[1, 2]));
        // Modular characteristic is rejected outright.
        let modular = regular_module(2, 2);
        assert!(matches!(
            maschke_complement(&modular, &line(f(2), &[1, 1])),
            Err(AnalysisError::Mismatched(_))
        ));
        // Non-invariant input is rejected.
        assert!(matches!(
            maschke_complement(&module, &line(f(3), &[1, 0])),
            Err(AnalysisError::NotInvariant)
        ));
    }

    #[test]
    fn modular_diagonal_line_has_no_complement() {
        let budget = AnalysisBudget::default();
        let modular = regular_module(2, 2);
        let verdict = invariant_complement(&modular, &line(f(2), &[1, 1]), &budget).unwrap();
        assert_eq!(verdict, None);
        // The same line in odd characteristic is complemented.
        let coprime = regular_module(2, 3);
        let complement = invariant_complement(&coprime, &line(f(3), &[1, 1]), &budget)
            .unwrap()
            .unwrap();
        assert!(complement.contains(&[1, 2]));
    }

    #[test]
    fn projector_search_finds_complements_in_a_trivial_module() {
        let field = f(2);
        let action = vec![Matrix::identity(field, 2); 2];
        let module = GroupModule::new(cyclic_table(2), field, action).unwrap();
        let complement =
            invariant_complement(&module, &line(field, &[1, 0]), &AnalysisBudget::default())
                .unwrap()
                .unwrap();
        assert_eq!(complement.dim(), 1);
        assert_eq!(complement.intersect(&line(field, &[1, 0])).dim(), 0);
    }

    #[test]
    fn invariant_lines_of_small_regular_modules() {
        let budget = AnalysisBudget::default();
        let lines = invariant_lines(&regular_module(2, 3), &budget).unwrap();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].contains(&[1, 1]));
        assert!(lines[1].contains(&[1, 2]));
        // An irreducible 2-dimensional rotation has no invariant lines.
        let field = f(3);
        let r = m(field, &[&[0, -1], &[1, 0]]);
        let rotation = GroupModule::new(
            cyclic_table(4),
            field,
            vec![
                Matrix::identity(field, 2),
                r.clone(),
                r.mul(&r),
                r.mul(&r).mul(&r),
            ],
        )
        .unwrap();
        assert!(invariant_lines(&rotation, &budget).unwrap().is_empty());
    }

    #[test]
    fn delta_report_separates_modular_from_coprime() {
        let budget = AnalysisBudget::default();
        // Characteristic divides the order: the only invariant hyperplane
        // (the zero-sum one) contains delta, so no complement.
        let modular = delta_report(&regular_module(2, 2), &[1, 1], &budget).unwrap();
        assert!(modular.line_is_invariant);
        assert_eq!(modular.invariant_hyperplane_count, 1);
        assert_eq!(modular.hyperplanes_containing_delta, 1);
        assert!(!modular.has_invariant_complement);
        // Coprime: a second invariant hyperplane misses delta.
        let coprime = delta_report(&regular_module(2, 3), &[1, 1], &budget).unwrap();
        assert!(coprime.line_is_invariant);
        assert_eq!(coprime.invariant_hyperplane_count, 2);
        assert_eq!(coprime.hyperplanes_containing_delta, 1);
        assert!(coprime.has_invariant_complement);
    }

    #[test]
    fn eigen_tuple_budget_is_enforced() {
        let field = f(7);
        let action = vec![Matrix::identity(field, 2); 2];
        let module = GroupModule::new(cyclic_table(2), field, action).unwrap();
        let starved = AnalysisBudget::uniform(3);
        assert!(matches!(
            invariant_lines(&module, &starved),
            Err(AnalysisError::BudgetExceeded { needed: 6, .. })
        ));
    }
}
