//! Structure theory for group modules: invariant subspaces, socle,
//! composition series, irreducibility, indecomposability, and isomorphism.
//!
//! Everything here is exact and deterministic.  Potentially exponential
//! searches (seed enumeration, commutant enumeration) are metered by an
//! [`AnalysisBudget`]; when a search would exceed its budget the functions
//! return [`AnalysisError::BudgetExceeded`] rather than guessing, and
//! wherever a theorem gives a cheap certified answer (Maschke for coprime
//! order, radical annihilators for the socle, Schur plus block counting for
//! irreducibility) that path is preferred so the budgets rarely bind.

use std::rc::Rc;

use thiserror::Error;

use crate::algebra::{AlgebraError, MatrixAlgebra};
use crate::brace::BraceError;
use crate::linalg::{LinalgError, Matrix, SubspaceBasis};
use crate::rep::{BraceRepresentation, GroupModule, RepError};

/// Work limits for the enumerative parts of the analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalysisBudget {
    /// Cap on the number of 1-dimensional seed subspaces, (q^d - 1)/(q - 1),
    /// that seed-based searches may enumerate.
    pub max_seed_subspaces: u64,
    /// Cap on the number of elements, q^t, that commutant or intertwiner
    /// enumerations may scan.
    pub max_enumeration: u64,
}

impl Default for AnalysisBudget {
    fn default() -> Self {
        AnalysisBudget {
            max_seed_subspaces: 100_000,
            max_enumeration: 1_000_000,
        }
    }
}

impl AnalysisBudget {
    /// The same limit for both kinds of work.
    pub fn uniform(limit: u64) -> Self {
        AnalysisBudget {
            max_seed_subspaces: limit,
            max_enumeration: limit,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnalysisError {
    /// The requested computation needs more enumeration than the budget
    /// allows.  The verdict is never guessed; retry with a larger budget.
    #[error("computation needs {needed} enumeration steps, over the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    /// Simple-module enumeration materializes the full semidirect product
    /// group, which is only supported at desk scale.
    #[error("group of order {order} exceeds the enumeration limit {limit}")]
    TooLarge { order: usize, limit: usize },
    /// An operation that requires a simple module was given a non-simple one.
    #[error("module of dimension {dim} is not simple")]
    NotSimple { dim: usize },
    /// The given subspace is not carried into itself by the action.
    #[error("subspace is not invariant under the module action")]
    NotInvariant,
    /// Inputs do not fit together (different groups, fields, or dimensions).
    #[error("mismatched inputs: {0}")]
    Mismatched(String),
    /// A runtime certificate that should hold by theory failed.
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Brace(#[from] BraceError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

pub(crate) fn saturating_pow(base: u64, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = match acc.checked_mul(base as u128) {
            Some(v) => v,
            None => return u128::MAX,
        };
    }
    acc
}

/// Number of 1-dimensional subspaces of F_q^d, saturating on overflow.
pub(crate) fn projective_count(q: u64, d: usize) -> u128 {
    let total = saturating_pow(q, d);
    if total == u128::MAX {
        u128::MAX
    } else {
        (total - 1) / (q as u128 - 1)
    }
}

/// First canonical projective representative: the first unit vector.
/// Representatives have first nonzero coordinate equal to 1.
pub(crate) fn first_projective(d: usize) -> Vec<u32> {
    let mut v = vec![0u32; d];
    v[0] = 1;
    v
}

/// Advances to the next canonical projective representative, ordered by
/// position of the leading 1 and then lexicographically on the tail.
/// Returns false when the supply is exhausted.
pub(crate) fn advance_projective(v: &mut [u32], q: u32) -> bool {
    let d = v.len();
    let lead = v
        .iter()
        .position(|&x| x != 0)
        .expect("projective representative is nonzero");
    let mut pos = d;
    while pos > lead + 1 {
        pos -= 1;
        if v[pos] + 1 < q {
            v[pos] += 1;
            return true;
        }
        v[pos] = 0;
    }
    if lead + 1 == d {
        return false;
    }
    v[lead] = 0;
    v[lead + 1] = 1;
    true
}

/// The smallest invariant subspace containing the seed: closes the seed
/// under the generator matrices, reducing to echelon form at every step.
pub fn spin(module: &GroupModule, seed: &[u32]) -> SubspaceBasis {
    spin_bounded(module, seed, module.dim()).expect("full dimension always bounds a spin")
}

/// Spin that gives up (returns None) as soon as the subspace dimension
/// exceeds `bound`; used to scan for a smallest submodule without paying
/// for spins that are already too big.
fn spin_bounded(module: &GroupModule, seed: &[u32], bound: usize) -> Option<SubspaceBasis> {
    let mut space = SubspaceBasis::zero(module.field(), module.dim());
    let mut worklist: Vec<Vec<u32>> = Vec::new();
    if space.insert(seed) {
        worklist.push(seed.to_vec());
    }
    let mut next = 0;
    while next < worklist.len() {
        if space.dim() > bound {
            return None;
        }
        let v = worklist[next].clone();
        next += 1;
        for &g in module.generators() {
            let w = module.action(g).apply(&v);
            if space.insert(&w) {
                worklist.push(w);
            }
        }
    }
    if space.dim() > bound {
        return None;
    }
    Some(space)
}

/// All inclusion-minimal nonzero submodules, each in canonical basis form,
/// sorted canonically.  Complete because every minimal submodule is the
/// spin of each of its nonzero vectors, and one representative of every
/// 1-dimensional subspace is used as a seed.
pub fn minimal_submodules(
    module: &GroupModule,
    budget: &AnalysisBudget,
) -> Result<Vec<SubspaceBasis>, AnalysisError> {
    let q = module.field().modulus() as u64;
    let d = module.dim();
    let needed = projective_count(q, d);
    if needed > budget.max_seed_subspaces as u128 {
        return Err(AnalysisError::BudgetExceeded {
            needed,
            budget: budget.max_seed_subspaces,
        });
    }
    let mut found: Vec<SubspaceBasis> = Vec::new();
    let mut seed = first_projective(d);
    loop {
        let candidate = spin(module, &seed);
        let known = found.iter().any(|u| *u == candidate);
        if !known {
            found.retain(|u| !(candidate.is_subspace_of(u) && candidate.dim() < u.dim()));
            if !found
                .iter()
                .any(|u| u.is_subspace_of(&candidate) && u.dim() < candidate.dim())
            {
                found.push(candidate);
            }
        }
        if !advance_projective(&mut seed, q as u32) {
            break;
        }
    }
    found.sort_by(|a, b| a.canonical_cmp(b));
    Ok(found)
}

/// The socle (sum of all minimal submodules) together with the
/// semisimplicity verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SocleReport {
    pub socle: SubspaceBasis,
    pub semisimple: bool,
    /// Dimension of the radical of the enveloping algebra; zero exactly in
    /// the semisimple case.
    pub radical_dim: usize,
}

/// Socle and semisimplicity via the enveloping algebra: the socle is the
/// annihilator of the radical, and the module is semisimple exactly when
/// that annihilator is everything.  When the group order is coprime to the
/// characteristic the answer is immediate (Maschke).
pub fn socle_and_semisimplicity(
    module: &GroupModule,
    budget: &AnalysisBudget,
) -> Result<SocleReport, AnalysisError> {
    let field = module.field();
    let d = module.dim();
    if module.order() as u64 % field.modulus() as u64 != 0 {
        return Ok(SocleReport {
            socle: SubspaceBasis::full(field, d),
            semisimple: true,
            radical_dim: 0,
        });
    }
    let needed = module.order() as u128 * (d as u128) * (d as u128);
    if needed > budget.max_enumeration as u128 {
        return Err(AnalysisError::BudgetExceeded {
            needed,
            budget: budget.max_enumeration,
        });
    }
    let env = MatrixAlgebra::enveloping(module);
    let radical = env.radical()?;
    let socle = if radical.dim() == 0 {
        SubspaceBasis::full(field, d)
    } else {
        let mut data = Vec::with_capacity(radical.dim() * d * d);
        for r in radical.basis() {
            for i in 0..d {
                data.extend_from_slice(r.row(i));
            }
        }
        Matrix::from_flat(field, radical.dim() * d, d, data).nullspace()
    };
    if !module.is_invariant(&socle) {
        return Err(AnalysisError::Internal(
            "socle candidate is not invariant".into(),
        ));
    }
    Ok(SocleReport {
        semisimple: socle.dim() == d,
        radical_dim: radical.dim(),
        socle,
    })
}

/// The action induced on an invariant subspace, in the coordinates of its
/// canonical basis.
pub fn submodule_action(
    module: &GroupModule,
    subspace: &SubspaceBasis,
) -> Result<GroupModule, AnalysisError> {
    if subspace.dim() == 0 {
        return Err(AnalysisError::Mismatched(
            "the zero subspace does not carry a module".into(),
        ));
    }
    if !module.is_invariant(subspace) {
        return Err(AnalysisError::NotInvariant);
    }
    let field = module.field();
    let s = subspace.dim();
    let pivots = subspace.pivots();
    // Coordinates with respect to an echelon basis can be read off at the
    // pivot positions.
    let coords = |v: &[u32]| -> Vec<u32> { pivots.iter().map(|&p| v[p]).collect() };
    let mut action = Vec::with_capacity(module.order());
    for g in 0..module.order() {
        let mut data = vec![0u32; s * s];
        for (j, basis_row) in subspace.rows().iter().enumerate() {
            let image = module.action(g).apply(basis_row);
            for (i, c) in coords(&image).into_iter().enumerate() {
                data[i * s + j] = c;
            }
        }
        action.push(Matrix::from_flat(field, s, s, data));
    }
    Ok(GroupModule::new(
        Rc::clone(module.group()),
        field,
        action,
    )?)
}

/// The action induced on the quotient by an invariant subspace.  Classes
/// are coordinatized by the non-pivot positions of the subspace basis:
/// reducing a vector by the basis zeroes its pivot coordinates, and what
/// remains determines the class.
pub fn quotient_action(
    module: &GroupModule,
    subspace: &SubspaceBasis,
) -> Result<GroupModule, AnalysisError> {
    let d = module.dim();
    if subspace.dim() == d {
        return Err(AnalysisError::Mismatched(
            "quotient by the full space does not carry a module".into(),
        ));
    }
    if !module.is_invariant(subspace) {
        return Err(AnalysisError::NotInvariant);
    }
    let field = module.field();
    let complement = subspace.complement_coords();
    let m = complement.len();
    let class_coords =
        |v: &[u32]| -> Vec<u32> {
            let reduced = subspace.reduce(v);
            complement.iter().map(|&c| reduced[c]).collect()
        };
    let mut action = Vec::with_capacity(module.order());
    for g in 0..module.order() {
        let mut data = vec![0u32; m * m];
        for (j, &c) in complement.iter().enumerate() {
            let mut lift = vec![0u32; d];
            lift[c] = 1;
            let image = module.action(g).apply(&lift);
            for (i, value) in class_coords(&image).into_iter().enumerate() {
                data[i * m + j] = value;
            }
        }
        action.push(Matrix::from_flat(field, m, m, data));
    }
    Ok(GroupModule::new(
        Rc::clone(module.group()),
        field,
        action,
    )?)
}

/// The commutant of the action: all matrices commuting with every
/// generator.  Always contains the identity.
pub fn endomorphism_algebra(module: &GroupModule) -> MatrixAlgebra {
    MatrixAlgebra::commutant(module)
}

/// Irreducibility via semisimple structure: a module is simple iff its
/// socle is everything and its endomorphism algebra is a division ring —
/// over a prime field, a finite field, detected as "commutative with a
/// one-dimensional Frobenius-fixed subspace".
pub fn is_irreducible(
    module: &GroupModule,
    budget: &AnalysisBudget,
) -> Result<bool, AnalysisError> {
    if module.dim() == 1 {
        return Ok(true);
    }
    let report = socle_and_semisimplicity(module, budget)?;
    if !report.semisimple {
        return Ok(false);
    }
    let end = endomorphism_algebra(module);
    if !end.is_commutative() {
        return Ok(false);
    }
    Ok(end.frobenius_fixed()?.len() == 1)
}

/// Indecomposability by exhaustive enumeration of the commutant: the module
/// decomposes iff the commutant contains an idempotent other than 0 and I.
pub fn is_indecomposable(
    module: &GroupModule,
    budget: &AnalysisBudget,
) -> Result<bool, AnalysisError> {
    let end = endomorphism_algebra(module);
    Ok(find_nontrivial_idempotent(&end, budget)?.is_none())
}

/// First (in coefficient-odometer order) idempotent of the algebra other
/// than 0 and the identity matrix, if any, by exhaustive enumeration.
fn find_nontrivial_idempotent(
    algebra: &MatrixAlgebra,
    budget: &AnalysisBudget,
) -> Result<Option<Matrix>, AnalysisError> {
    let q = algebra.field().modulus() as u64;
    let t = algebra.dim();
    let needed = saturating_pow(q, t);
    if needed > budget.max_enumeration as u128 {
        return Err(AnalysisError::BudgetExceeded {
            needed,
            budget: budget.max_enumeration,
        });
    }
    let d = algebra.matrix_dim();
    let mut coeffs = vec![0u32; t];
    loop {
        // Advance the odometer; starting by advancing skips the zero vector.
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
        let mut candidate = Matrix::zero(algebra.field(), d, d);
        for (c, b) in coeffs.iter().zip(algebra.basis()) {
            if *c != 0 {
                candidate = candidate.add(&b.scale(*c));
            }
        }
        if !candidate.is_zero()
            && !candidate.is_identity()
            && candidate.mul(&candidate) == candidate
        {
            return Ok(Some(candidate));
        }
    }
}

/// Module isomorphism with an explicit intertwiner: computes the space of
/// intertwiners and looks for an invertible one.  A basis scan is complete
/// whenever either module is simple (Schur); otherwise the whole space is
/// enumerated under budget.
pub fn are_isomorphic(
    left: &GroupModule,
    right: &GroupModule,
    budget: &AnalysisBudget,
) -> Result<Option<Matrix>, AnalysisError> {
    if !left.same_group(right) {
        return Err(AnalysisError::Mismatched(
            "modules are over different groups".into(),
        ));
    }
    if left.field() != right.field() {
        return Err(AnalysisError::Mismatched(
            "modules are over different fields".into(),
        ));
    }
    if left.dim() != right.dim() {
        return Ok(None);
    }
    let field = left.field();
    let d = left.dim();
    // T action_left(g) = action_right(g) T for the generators.
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &g in left.generators() {
        let a = left.action(g);
        let b = right.action(g);
        for i in 0..d {
            for j in 0..d {
                let mut row = vec![0u32; d * d];
                for k in 0..d {
                    let v = row[i * d + k];
                    row[i * d + k] = field.sub(v, a.get(k, j));
                    row[k * d + j] = field.add(row[k * d + j], b.get(i, k));
                }
                rows.push(row);
            }
        }
    }
    let solutions = Matrix::from_flat(
        field,
        rows.len(),
        d * d,
        rows.into_iter().flatten().collect(),
    )
    .nullspace();
    let t = solutions.dim();
    if t == 0 {
        return Ok(None);
    }
    let to_matrix = |flat: &[u32]| Matrix::from_flat(field, d, d, flat.to_vec());
    for row in solutions.rows() {
        let candidate = to_matrix(row);
        if candidate.is_invertible() {
            return Ok(Some(candidate));
        }
    }
    let q = field.modulus() as u64;
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
        let mut flat = vec![0u32; d * d];
        for (c, row) in coeffs.iter().zip(solutions.rows()) {
            if *c != 0 {
                for (dst, src) in flat.iter_mut().zip(row) {
                    *dst = field.add(*dst, field.mul(*c, *src));
                }
            }
        }
        let candidate = to_matrix(&flat);
        if candidate.is_invertible() {
            return Ok(Some(candidate));
        }
    }
}

/// Equivalence of brace representations: isomorphism of the associated
/// semidirect-product modules.
pub fn are_equivalent(
    left: &BraceRepresentation,
    right: &BraceRepresentation,
    budget: &AnalysisBudget,
) -> Result<Option<Matrix>, AnalysisError> {
    if left.brace().dot_table() != right.brace().dot_table()
        || left.brace().circ_table() != right.brace().circ_table()
    {
        return Err(AnalysisError::Mismatched(
            "representations are over different braces".into(),
        ));
    }
    are_isomorphic(&left.to_group_module(), &right.to_group_module(), budget)
}

/// A strictly ascending chain of invariant subspaces from zero to the whole
/// space whose successive factors are simple.
#[derive(Debug, Clone)]
pub struct CompositionSeries {
    /// chain[0] is zero, chain.last() is the full space.
    pub chain: Vec<SubspaceBasis>,
    /// factors[i] is the simple module chain[i+1]/chain[i], bottom-up.
    pub factors: Vec<GroupModule>,
}

impl CompositionSeries {
    pub fn factor_dims(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.dim()).collect()
    }

    pub fn length(&self) -> usize {
        self.factors.len()
    }
}

/// Composition series by repeatedly extracting a minimal submodule of the
/// current quotient and enlarging the floor by its preimage.
pub fn composition_series(
    module: &GroupModule,
    budget: &AnalysisBudget,
) -> Result<CompositionSeries, AnalysisError> {
    let field = module.field();
    let d = module.dim();
    let mut floor = SubspaceBasis::zero(field, d);
    let mut chain = vec![floor.clone()];
    let mut factors = Vec::new();
    while floor.dim() < d {
        let quotient = if floor.dim() == 0 {
            module.clone()
        } else {
            quotient_action(module, &floor)?
        };
        let minimal = first_minimal_submodule(&quotient, budget)?;
        factors.push(submodule_action(&quotient, &minimal)?);
        // Lift the minimal submodule of the quotient back to the ambient
        // space: quotient coordinate j corresponds to the unit vector at
        // the j-th non-pivot position of the floor.
        let complement = floor.complement_coords();
        let mut enlarged = floor.clone();
        for row in minimal.rows() {
            let mut ambient = vec![0u32; d];
            for (j, &pos) in complement.iter().enumerate() {
                ambient[pos] = row[j];
            }
            enlarged.insert(&ambient);
        }
        if enlarged.dim() != floor.dim() + minimal.dim() || !module.is_invariant(&enlarged) {
            return Err(AnalysisError::Internal(
                "lifted chain step is not a submodule of the expected dimension".into(),
            ));
        }
        chain.push(enlarged.clone());
        floor = enlarged;
    }
    Ok(CompositionSeries { chain, factors })
}

/// One minimal submodule, deterministically chosen.  Small modules are
/// scanned by seeds (the first spin of smallest dimension wins); larger
/// ones are first split along central idempotents — class sums, then the
/// full enveloping center, then commutant idempotents — and the search
/// recurses into the first component.
fn first_minimal_submodule(
    module: &GroupModule,
    budget: &AnalysisBudget,
) -> Result<SubspaceBasis, AnalysisError> {
    let field = module.field();
    let d = module.dim();
    if d == 1 {
        return Ok(SubspaceBasis::full(field, 1));
    }
    let q = field.modulus() as u64;
    let needed = projective_count(q, d);
    if needed <= budget.max_seed_subspaces as u128 {
        let mut best: Option<SubspaceBasis> = None;
        let mut bound = d;
        let mut seed = first_projective(d);
        loop {
            if let Some(candidate) = spin_bounded(module, &seed, bound) {
                if best.is_none() || candidate.dim() < bound {
                    bound = candidate.dim();
                    best = Some(candidate);
                    if bound == 1 {
                        break;
                    }
                }
            }
            if !advance_projective(&mut seed, q as u32) {
                break;
            }
        }
        return best.ok_or_else(|| {
            AnalysisError::Internal("seed scan found no submodule at all".into())
        });
    }
    // Too large to scan: certify simplicity outright, or descend into a
    // proper invariant subspace.  A minimal submodule of a submodule is
    // minimal in the ambient module, so descending is always sound.
    let into_component = |component: &SubspaceBasis| -> Result<SubspaceBasis, AnalysisError> {
        let sub = submodule_action(module, component)?;
        let inner = first_minimal_submodule(&sub, budget)?;
        let mut lifted = SubspaceBasis::zero(field, d);
        for row in inner.rows() {
            let mut ambient = vec![0u32; d];
            for (c, basis_row) in row.iter().zip(component.rows()) {
                if *c != 0 {
                    for (dst, src) in ambient.iter_mut().zip(basis_row) {
                        *dst = field.add(*dst, field.mul(*c, *src));
                    }
                }
            }
            lifted.insert(&ambient);
        }
        if lifted.dim() != inner.dim() || !module.is_invariant(&lifted) {
            return Err(AnalysisError::Internal(
                "lifted minimal submodule lost its shape".into(),
            ));
        }
        Ok(lifted)
    };
    // The subspace fixed by every generator is always a submodule and
    // costs one small solve; for translation-like modules it is the
    // trivial isotypic component and ends the search immediately.
    let fixed = fixed_subspace(module);
    if fixed.dim() == d {
        // Every generator acts as the identity, so any line is minimal.
        let mut line = vec![0u32; d];
        line[0] = 1;
        let mut basis = SubspaceBasis::zero(field, d);
        basis.insert(&line);
        return Ok(basis);
    }
    if fixed.dim() > 0 {
        return into_component(&fixed);
    }
    // A bounded prefix of seed spins comes next: unit vectors, then unit
    // differences and sums (augmentation-style zero divisors), then the
    // leading lexicographic projective representatives.  Sparse seeds
    // generate proper submodules of group-algebra-like modules almost
    // immediately, and any strictly proper spin lets the search descend.
    let mut best: Option<SubspaceBasis> = None;
    'seeds: {
        for j in 0..d {
            let bound = best.as_ref().map_or(d - 1, |b| b.dim() - 1);
            if bound == 0 {
                break 'seeds;
            }
            let mut v = vec![0u32; d];
            v[j] = 1;
            if let Some(s) = spin_bounded(module, &v, bound) {
                best = Some(s);
            }
        }
        // Eigen-seeds: kernel vectors of theta - c*I for a short
        // deterministic sequence of enveloping-algebra elements theta.
        // An eigenvector of an algebra element tends to lie in a small
        // submodule, so these hit structure that blind seeds miss.
        let gens = module.generators();
        let mut thetas: Vec<Matrix> = gens.iter().map(|&g| module.action(g).clone()).collect();
        if let [a, b, ..] = &thetas[..] {
            let product = a.mul(b);
            let sum = a.add(b);
            let mixed = a.add(&product);
            thetas.extend([product, sum, mixed]);
        }
        for theta in &thetas {
            for c in 0..field.modulus() {
                let shifted = theta.sub(&Matrix::identity(field, d).scale(c));
                let kernel = shifted.nullspace();
                if kernel.dim() == d {
                    continue;
                }
                for row in kernel.rows().iter().take(3) {
                    let bound = best.as_ref().map_or(d - 1, |b| b.dim() - 1);
                    if bound == 0 {
                        break 'seeds;
                    }
                    if let Some(s) = spin_bounded(module, row, bound) {
                        best = Some(s);
                    }
                }
            }
        }
        let window = d.min(12);
        for i in 0..window {
            for j in (i + 1)..window {
                for minus in [true, false] {
                    let bound = best.as_ref().map_or(d - 1, |b| b.dim() - 1);
                    if bound == 0 {
                        break 'seeds;
                    }
                    let mut v = vec![0u32; d];
                    v[i] = 1;
                    v[j] = if minus { field.neg(1) } else { 1 };
                    if let Some(s) = spin_bounded(module, &v, bound) {
                        best = Some(s);
                    }
                }
            }
        }
        let prefix = (4 * d * d).max(256).min(budget.max_seed_subspaces as usize);
        let mut seed = first_projective(d);
        for _ in 0..prefix {
            let bound = best.as_ref().map_or(d - 1, |b| b.dim() - 1);
            if bound == 0 {
                break 'seeds;
            }
            if let Some(s) = spin_bounded(module, &seed, bound) {
                best = Some(s);
            }
            if !advance_projective(&mut seed, q as u32) {
                break 'seeds;
            }
        }
    }
    if let Some(found) = best {
        return into_component(&found);
    }
    // No proper spin in the prefix.  The radical detects reducibility
    // cheaply: a proper socle is a component to descend into.
    let report = socle_and_semisimplicity(module, budget)?;
    if report.socle.dim() < d {
        return into_component(&report.socle);
    }
    // Semisimple: split along central idempotents, cheapest source first.
    let class_algebra = class_sum_algebra(module);
    let idempotents = class_algebra.block_idempotents()?;
    if idempotents.len() >= 2 {
        return into_component(&image_subspace(&idempotents[0]));
    }
    let center = MatrixAlgebra::enveloping(module).center();
    let idempotents = center.block_idempotents()?;
    if idempotents.len() >= 2 {
        return into_component(&image_subspace(&idempotents[0]));
    }
    // One central block.  A commutative endomorphism algebra decides the
    // question outright: its blocks are the isotypic summands, and a single
    // block certifies simplicity (the endomorphism algebra is a field).
    let end = endomorphism_algebra(module);
    if end.is_commutative() {
        let blocks = end.block_idempotents()?;
        if blocks.len() >= 2 {
            return into_component(&image_subspace(&blocks[0]));
        }
        return Ok(SubspaceBasis::full(field, d));
    }
    // Noncommutative endomorphisms: isotypic with multiplicity at least
    // two, so a splitting idempotent exists.  The subalgebra generated by
    // a single endomorphism is commutative; any of its proper blocks cuts
    // the module.  Products of basis pairs widen the net before falling
    // back to exhaustive enumeration.
    let mut candidates: Vec<Matrix> = end.basis().to_vec();
    for (i, a) in end.basis().iter().enumerate() {
        for b in &end.basis()[i..] {
            candidates.push(a.mul(b));
        }
    }
    for e in &candidates {
        if is_scalar(e) {
            continue;
        }
        let mut powers = vec![Matrix::identity(field, d)];
        for _ in 0..d {
            powers.push(powers.last().expect("nonempty").mul(e));
        }
        let single = MatrixAlgebra::from_closed_span(field, d, &powers);
        let blocks = single.block_idempotents()?;
        if blocks.len() >= 2 {
            return into_component(&image_subspace(&blocks[0]));
        }
    }
    match find_nontrivial_idempotent(&end, budget) {
        Ok(Some(idempotent)) => return into_component(&image_subspace(&idempotent)),
        Ok(None) | Err(AnalysisError::BudgetExceeded { .. }) => {}
        Err(other) => return Err(other),
    }
    // An isotypic module whose commutant resists every deterministic
    // splitter in the ladder: give up honestly.
    Err(AnalysisError::BudgetExceeded {
        needed,
        budget: budget.max_seed_subspaces,
    })
}

/// A scalar multiple of the identity.
fn is_scalar(m: &Matrix) -> bool {
    let c = m.get(0, 0);
    let d = m.rows();
    (0..d).all(|i| (0..d).all(|j| m.get(i, j) == if i == j { c } else { 0 }))
}

/// The joint fixed subspace of the generator actions — always a
/// submodule, since anything fixed by generators is fixed by the whole
/// group.
fn fixed_subspace(module: &GroupModule) -> SubspaceBasis {
    let field = module.field();
    let d = module.dim();
    let gens = module.generators();
    let mut data = Vec::with_capacity(gens.len() * d * d);
    for &g in gens {
        let m = module.action(g);
        for i in 0..d {
            for j in 0..d {
                let entry = m.get(i, j);
                data.push(if i == j { field.sub(entry, 1) } else { entry });
            }
        }
    }
    Matrix::from_flat(field, gens.len() * d, d, data).nullspace()
}

/// The span of the images of the conjugacy-class sums: a commutative
/// algebra of matrices commuting with the whole action, available for any
/// module without solving a linear system.
fn class_sum_algebra(module: &GroupModule) -> MatrixAlgebra {
    let group = module.group();
    let n = group.order();
    let field = module.field();
    let d = module.dim();
    let mut seen = vec![false; n];
    let mut sums = Vec::new();
    for g in 0..n {
        if seen[g] {
            continue;
        }
        let mut class_sum = Matrix::zero(field, d, d);
        for h in 0..n {
            let conj = group.mul(group.mul(h, g), group.inverse(h));
            if !seen[conj] {
                seen[conj] = true;
                class_sum = class_sum.add(module.action(conj));
            }
        }
        sums.push(class_sum);
    }
    MatrixAlgebra::from_closed_span(field, d, &sums)
}

/// Column space of a matrix.
pub(crate) fn image_subspace(m: &Matrix) -> SubspaceBasis {
    let mut space = SubspaceBasis::zero(m.field(), m.rows());
    for j in 0..m.cols() {
        let column: Vec<u32> = (0..m.rows()).map(|i| m.get(i, j)).collect();
        space.insert(&column);
    }
    space
}

/// Restriction semisimplicity for a simple brace representation: restricts
/// the semidirect-product module to its two one-sided subgroups and reports
/// whether each restriction is semisimple.  The first component (the
/// beta side) is guaranteed true by theory; the second (the rho side) may
/// genuinely be false.
pub fn restriction_semisimple_check(
    rep: &BraceRepresentation,
    budget: &AnalysisBudget,
) -> Result<(bool, bool), AnalysisError> {
    let module = rep.to_group_module();
    if !is_irreducible(&module, budget)? {
        return Err(AnalysisError::NotSimple { dim: module.dim() });
    }
    let beta_side = socle_and_semisimplicity(&rep.dot_module(), budget)?;
    let rho_side = socle_and_semisimplicity(&rep.circ_module(), budget)?;
    Ok((beta_side.semisimple, rho_side.semisimple))
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::linalg::PrimeField;
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

    fn trivial_module(n: usize, dim: usize, q: u64) -> GroupModule {
        let field = f(q);
        let action = vec![Matrix::identity(field, dim); n];
        GroupModule::new(cyclic_table(n), field, action).unwrap()
    }

    /// Z/4 acting irreducibly on F_3^2 by a rotation of order 4.
    fn rotation_module() -> GroupModule {
        let field = f(3);
        let r = m(field, &[&[0, -1], &[1, 0]]);
        let action = vec![
            Matrix::identity(field, 2),
            r.clone(),
            r.mul(&r),
            r.mul(&r).mul(&r),
        ];
        GroupModule::new(cyclic_table(4), field, action).unwrap()
    }

    #[test]
    fn projective_representatives_cover_every_line_once() {
        let mut count = 0u32;
        let mut v = first_projective(3);
        loop {
            assert_eq!(*v.iter().find(|&&x| x != 0).unwrap(), 1);
            count += 1;
            if !advance_projective(&mut v, 3) {
                break;
            }
        }
        assert_eq!(count as u128, projective_count(3, 3));
        assert_eq!(projective_count(2, 4), 15);
        assert_eq!(projective_count(7, 64), u128::MAX);
    }

    #[test]
    fn spinning_the_all_ones_vector_in_a_regular_module() {
        let module = regular_module(3, 2);
        assert_eq!(spin(&module, &[1, 1, 1]).dim(), 1);
        assert_eq!(spin(&module, &[1, 0, 0]).dim(), 3);
        assert_eq!(spin(&module, &[0, 0, 0]).dim(), 0);
        assert_eq!(spin(&module, &[1, 1, 0]).dim(), 2);
    }

    #[test]
    fn minimal_submodules_of_a_coprime_regular_module() {
        // F_2[Z/3] = F_2 x F_4: one line and one 2-dimensional simple.
        let module = regular_module(3, 2);
        let minimals = minimal_submodules(&module, &AnalysisBudget::default()).unwrap();
        let dims: Vec<usize> = minimals.iter().map(|s| s.dim()).collect();
        assert_eq!(dims, vec![1, 2]);
        assert!(minimals[0].contains(&[1, 1, 1]));
    }

    #[test]
    fn every_line_of_a_trivial_module_is_minimal() {
        let module = trivial_module(2, 2, 2);
        let minimals = minimal_submodules(&module, &AnalysisBudget::default()).unwrap();
        assert_eq!(minimals.len(), 3);
        assert!(minimals.iter().all(|s| s.dim() == 1));
    }

    #[test]
    fn seed_budget_is_enforced() {
        let module = trivial_module(2, 4, 2);
        let tiny = AnalysisBudget {
            max_seed_subspaces: 10,
            max_enumeration: 10,
        };
        assert_eq!(
            minimal_submodules(&module, &tiny),
            Err(AnalysisError::BudgetExceeded {
                needed: 15,
                budget: 10
            })
        );
    }

    #[test]
    fn socle_of_a_modular_regular_module_is_the_fixed_line() {
        let module = regular_module(2, 2);
        let report = socle_and_semisimplicity(&module, &AnalysisBudget::default()).unwrap();
        assert!(!report.semisimple);
        assert_eq!(report.radical_dim, 1);
        assert_eq!(report.socle.dim(), 1);
        assert!(report.socle.contains(&[1, 1]));
        // Coprime characteristic: semisimple by Maschke.
        let coprime = socle_and_semisimplicity(&regular_module(2, 3), &AnalysisBudget::default())
            .unwrap();
        assert!(coprime.semisimple);
        assert_eq!(coprime.socle.dim(), 2);
    }

    #[test]
    fn submodule_and_quotient_actions_are_valid_modules() {
        let module = regular_module(4, 3);
        let line = spin(&module, &[1, 1, 1, 1]);
        let sub = submodule_action(&module, &line).unwrap();
        assert_eq!(sub.dim(), 1);
        let quotient = quotient_action(&module, &line).unwrap();
        assert_eq!(quotient.dim(), 3);
        let bad = SubspaceBasis::from_rows(f(3), 4, vec![vec![1, 0, 0, 0]]);
        assert!(matches!(
            submodule_action(&module, &bad),
            Err(AnalysisError::NotInvariant)
        ));
    }

    #[test]
    fn irreducibility_of_a_rotation_and_its_failures() {
        let budget = AnalysisBudget::default();
        assert!(is_irreducible(&rotation_module(), &budget).unwrap());
        assert!(!is_irreducible(&trivial_module(2, 2, 2), &budget).unwrap());
        // Indecomposable but reducible: the modular regular module.
        assert!(!is_irreducible(&regular_module(2, 2), &budget).unwrap());
        assert!(is_irreducible(&trivial_module(3, 1, 5), &budget).unwrap());
    }

    #[test]
    fn indecomposability_by_commutant_enumeration() {
        let budget = AnalysisBudget::default();
        assert!(is_indecomposable(&regular_module(2, 2), &budget).unwrap());
        assert!(!is_indecomposable(&trivial_module(2, 2, 2), &budget).unwrap());
        assert!(is_indecomposable(&rotation_module(), &budget).unwrap());
        let starved = AnalysisBudget::uniform(3);
        assert!(matches!(
            is_indecomposable(&trivial_module(2, 2, 2), &starved),
            Err(AnalysisError::BudgetExceeded { needed: 16, .. })
        ));
    }

    #[test]
    fn endomorphisms_of_a_trivial_module_are_everything() {
        assert_eq!(endomorphism_algebra(&trivial_module(2, 2, 2)).dim(), 4);
        assert_eq!(endomorphism_algebra(&rotation_module()).dim(), 2);
    }

    #[test]
    fn isomorphism_finds_an_intertwiner_and_rejects_twists() {
        let budget = AnalysisBudget::default();
        let module = regular_module(3, 2);
        let id = are_isomorphic(&module, &module, &budget).unwrap().unwrap();
        assert!(id.is_invertible());
        // Conjugate the action by a basis change; still isomorphic.
        let g = m(f(2), &[&[1, 1, 0], &[0, 1, 0], &[1, 0, 1]]);
        let g_inv = g.invert().unwrap();
        let conjugated = GroupModule::new(
            Rc::clone(module.group()),
            f(2),
            (0..3).map(|x| g.mul(module.action(x)).mul(&g_inv)).collect(),
        )
        .unwrap();
        let t = are_isomorphic(&module, &conjugated, &budget).unwrap().unwrap();
        for x in 0..3 {
            assert_eq!(
                t.mul(module.action(x)),
                conjugated.action(x).mul(&t)
            );
        }
        // Trivial versus sign module over F_3: not isomorphic.
        let field = f(3);
        let sign = GroupModule::new(
            cyclic_table(2),
            field,
            vec![Matrix::identity(field, 1), m(field, &[&[-1]])],
        )
        .unwrap();
        assert_eq!(
            are_isomorphic(&trivial_module(2, 1, 3), &sign, &budget).unwrap(),
            None
        );
    }

    #[test]
    fn composition_series_of_regular_modules() {
        let budget = AnalysisBudget::default();
        // Modular: Z/2 over F_2 is uniserial with two trivial factors.
        let series = composition_series(&regular_module(2, 2), &budget).unwrap();
        assert_eq!(series.factor_dims(), vec![1, 1]);
        assert_eq!(series.chain.len(), 3);
        assert!(series.chain[1].contains(&[1, 1]));
        // Coprime: Z/3 over F_2 splits as 1 + 2.
        let series = composition_series(&regular_module(3, 2), &budget).unwrap();
        assert_eq!(series.factor_dims(), vec![1, 2]);
        assert!(is_irreducible(&series.factors[1], &budget).unwrap());
        // A simple module is its own series.
        let series = composition_series(&rotation_module(), &budget).unwrap();
        assert_eq!(series.factor_dims(), vec![2]);
    }

    #[test]
    fn large_modules_split_along_class_sums() {
        // Starve the seed budget so the splitting path is forced.
        let budget = AnalysisBudget {
            max_seed_subspaces: 2,
            max_enumeration: 1_000_000,
        };
        let series = composition_series(&regular_module(6, 5), &budget).unwrap();
        let mut dims = series.factor_dims();
        dims.sort();
        assert_eq!(dims.iter().sum::<usize>(), 6);
        assert_eq!(dims, vec![1, 1, 2, 2]);
    }

    #[test]
    fn class_sums_of_an_abelian_group_span_the_group_algebra() {
        let module = regular_module(4, 3);
        assert_eq!(class_sum_algebra(&module).dim(), 4);
    }
}
