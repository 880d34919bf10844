//! Restriction of a simple module to an ideal: homogeneous components, the
//! permutation action on them, and simple-module enumeration.
//!
//! Restricting a simple semidirect-product module to the embedded square of
//! an ideal yields a semisimple module; its isotypic pieces (sums of
//! isomorphic minimal submodules) are permuted by the big group, all with
//! one multiplicity and one simple dimension.  This module computes that
//! decomposition with certificates, and enumerates all simple modules of
//! the semidirect product by factoring its regular module.

use std::rc::Rc;

use crate::analysis::{
    are_isomorphic, composition_series, is_irreducible, minimal_submodules,
    socle_and_semisimplicity, submodule_action, AnalysisBudget, AnalysisError,
};
use crate::brace::{BraceError, IdealSubset, SkewBrace};
use crate::linalg::SubspaceBasis;
use crate::rep::{BraceRepresentation, GroupModule, GroupTable};

/// Largest semidirect-product order for which the full product table is
/// materialized for regular-module factoring.
const ENUMERATION_LIMIT: usize = 64;

/// One isotypic piece of a restricted module.
#[derive(Debug, Clone)]
pub struct HomogeneousComponent {
    /// Sum of all minimal submodules isomorphic to the representative,
    /// as a subspace of the original module.
    pub basis: SubspaceBasis,
    /// A canonical minimal submodule of this isomorphism class.
    pub representative: SubspaceBasis,
    /// Dimension of the simple type.
    pub simple_dim: usize,
    /// How many copies of the simple type the component holds.
    pub multiplicity: usize,
}

/// The full decomposition picture of a restriction to an ideal.
#[derive(Debug, Clone)]
pub struct CliffordDecomposition {
    pub components: Vec<HomogeneousComponent>,
    /// For each element of the semidirect product (by pair index), the
    /// permutation it induces on `components`.
    pub element_permutations: Vec<Vec<usize>>,
    /// Whether the semidirect product permutes the components transitively.
    pub transitive: bool,
    /// All components have the same multiplicity.
    pub multiplicities_equal: bool,
    /// All components have the same simple dimension.
    pub simple_dims_equal: bool,
}

impl CliffordDecomposition {
    /// The permutation induced by the element with the given pair index.
    pub fn permutation_of(&self, pair_index: usize) -> &[usize] {
        &self.element_permutations[pair_index]
    }
}

/// Decomposes the restriction of a simple representation to (the embedded
/// square of) an ideal into homogeneous components and computes how the
/// whole semidirect product permutes them.
pub fn clifford_decompose(
    rep: &BraceRepresentation,
    ideal_members: &[usize],
    budget: &AnalysisBudget,
) -> Result<CliffordDecomposition, AnalysisError> {
    let brace = rep.brace();
    let ideal = IdealSubset::validate(brace, ideal_members)
        .map_err(BraceError::NotAnIdeal)?;
    let module = rep.to_group_module();
    if !is_irreducible(&module, budget)? {
        return Err(AnalysisError::NotSimple { dim: module.dim() });
    }
    let lambda = brace.lambda_group();
    let sub_indices = lambda.embed_subgroup(ideal.members());
    let restricted = module.restrict_to_subgroup(&sub_indices)?;
    let report = socle_and_semisimplicity(&restricted, budget)?;
    if !report.semisimple {
        return Err(AnalysisError::Internal(
            "restriction of a simple module to an ideal must be semisimple".into(),
        ));
    }
    // Group the minimal submodules of the restriction into isomorphism
    // classes.  The members are simple, so isomorphism testing is cheap.
    let minimals = minimal_submodules(&restricted, budget)?;
    let mut class_reps: Vec<GroupModule> = Vec::new();
    let mut classes: Vec<Vec<SubspaceBasis>> = Vec::new();
    for minimal in minimals {
        let as_module = submodule_action(&restricted, &minimal)?;
        let mut placed = false;
        for (rep_module, class) in class_reps.iter().zip(classes.iter_mut()) {
            if are_isomorphic(rep_module, &as_module, budget)?.is_some() {
                class.push(minimal.clone());
                placed = true;
                break;
            }
        }
        if !placed {
            class_reps.push(as_module);
            classes.push(vec![minimal]);
        }
    }
    let mut components = Vec::with_capacity(classes.len());
    for class in &classes {
        let mut basis = SubspaceBasis::zero(module.field(), module.dim());
        for member in class {
            basis = basis.sum(member);
        }
        let simple_dim = class[0].dim();
        if basis.dim() % simple_dim != 0 {
            return Err(AnalysisError::Internal(
                "component dimension is not a multiple of its simple dimension".into(),
            ));
        }
        let mut members = class.clone();
        members.sort_by(|a, b| a.canonical_cmp(b));
        components.push(HomogeneousComponent {
            multiplicity: basis.dim() / simple_dim,
            simple_dim,
            representative: members.swap_remove(0),
            basis,
        });
    }
    components.sort_by(|a, b| a.basis.canonical_cmp(&b.basis));
    // Each group element must send each component onto a component; record
    // the induced permutations and check bijectivity.
    let r = components.len();
    let mut element_permutations = Vec::with_capacity(module.order());
    for g in 0..module.order() {
        let mut perm = Vec::with_capacity(r);
        for component in &components {
            let mut image = SubspaceBasis::zero(module.field(), module.dim());
            for row in component.basis.rows() {
                image.insert(&module.action(g).apply(row));
            }
            let target = components.iter().position(|c| c.basis == image);
            match target {
                Some(j) => perm.push(j),
                None => {
                    return Err(AnalysisError::Internal(
                        "a group element does not permute the components".into(),
                    ))
                }
            }
        }
        let mut sorted = perm.clone();
        sorted.sort_unstable();
        if sorted != (0..r).collect::<Vec<_>>() {
            return Err(AnalysisError::Internal(
                "induced component map is not a permutation".into(),
            ));
        }
        element_permutations.push(perm);
    }
    let mut orbit = vec![false; r];
    for perm in &element_permutations {
        orbit[perm[0]] = true;
    }
    let transitive = orbit.iter().all(|&reached| reached);
    let multiplicities_equal = components
        .windows(2)
        .all(|w| w[0].multiplicity == w[1].multiplicity);
    let simple_dims_equal = components
        .windows(2)
        .all(|w| w[0].simple_dim == w[1].simple_dim);
    Ok(CliffordDecomposition {
        components,
        element_permutations,
        transitive,
        multiplicities_equal,
        simple_dims_equal,
    })
}

/// All simple modules of the semidirect product over F_q, up to
/// isomorphism, sorted by dimension: the composition factors of the left
/// regular module, deduplicated.  Every simple occurs there because the
/// regular module surjects onto each of them.
pub fn enumerate_simples(
    brace: &SkewBrace,
    modulus: u64,
    budget: &AnalysisBudget,
) -> Result<Vec<GroupModule>, AnalysisError> {
    let n = brace.order();
    let order = n * n;
    if order > ENUMERATION_LIMIT {
        return Err(AnalysisError::TooLarge {
            order,
            limit: ENUMERATION_LIMIT,
        });
    }
    let lambda = brace.lambda_group();
    let mut mul = vec![0usize; order * order];
    for p in 0..order {
        for q in 0..order {
            mul[p * order + q] = lambda.product(p, q);
        }
    }
    let table = Rc::new(GroupTable::from_flat(order, mul)?);
    let regular = GroupModule::left_regular(table, modulus)?;
    let series = composition_series(&regular, budget)?;
    let mut simples: Vec<GroupModule> = Vec::new();
    for factor in series.factors {
        let mut known = false;
        for existing in &simples {
            if are_isomorphic(existing, &factor, budget)?.is_some() {
                known = true;
                break;
            }
        }
        if !known {
            simples.push(factor);
        }
    }
    simples.sort_by_key(|m| m.dim());
    Ok(simples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::Matrix;
    use crate::rep::{regular_representation, RepData};

    #[test]
    fn enumerating_simples_of_a_two_power_brace_finds_only_the_trivial_one() {
        let budget = AnalysisBudget::default();
        let brace = catalog::trivial_cyclic(2).unwrap();
        let simples = enumerate_simples(&brace, 2, &budget).unwrap();
        assert_eq!(simples.len(), 1);
        assert_eq!(simples[0].dim(), 1);
        assert!(simples[0].action(1).is_identity());
    }

    #[test]
    fn enumerating_simples_of_a_coprime_brace_finds_nontrivial_ones() {
        let budget = AnalysisBudget::default();
        let brace = catalog::trivial_cyclic(3).unwrap();
        let simples = enumerate_simples(&brace, 2, &budget).unwrap();
        // F_2 over an abelian group of order 9: blocks follow the orbits of
        // doubling on the characters; all are semisimple and at least one
        // is nontrivial.
        assert!(simples.len() > 1);
        assert_eq!(simples[0].dim(), 1);
        assert!(simples.iter().skip(1).all(|m| m.dim() > 1));
        for simple in &simples {
            assert!(is_irreducible(simple, &budget).unwrap());
        }
    }

    #[test]
    fn oversized_braces_are_rejected() {
        let brace = catalog::trivial_cyclic(9).unwrap();
        assert!(matches!(
            enumerate_simples(&brace, 2, &AnalysisBudget::default()),
            Err(AnalysisError::TooLarge {
                order: 81,
                limit: 64
            })
        ));
    }

    #[test]
    fn restricting_to_the_full_brace_gives_one_component() {
        let budget = AnalysisBudget::default();
        let brace = catalog::trivial_cyclic(2).unwrap();
        let rep = nontrivial_sign_rep(&brace);
        let all: Vec<usize> = (0..brace.order()).collect();
        let decomposition = clifford_decompose(&rep, &all, &budget).unwrap();
        assert_eq!(decomposition.components.len(), 1);
        assert!(decomposition.transitive);
        assert_eq!(decomposition.components[0].multiplicity, 1);
        assert!(decomposition
            .element_permutations
            .iter()
            .all(|p| p == &[0]));
    }

    /// The 1-dimensional representation of the trivial brace on Z/2 where
    /// both sides act by the sign character over F_3.
    fn nontrivial_sign_rep(brace: &SkewBrace) -> BraceRepresentation {
        let field = crate::linalg::PrimeField::new(3).unwrap();
        let minus = Matrix::from_rows_i64(field, &[vec![-1]]);
        let plus = Matrix::identity(field, 1);
        let data = RepData::new(
            field,
            vec![plus.clone(), minus.clone()],
            vec![plus, minus],
        )
        .unwrap();
        BraceRepresentation::new(brace, data).unwrap()
    }

    #[test]
    fn decomposing_a_non_simple_module_is_rejected() {
        let budget = AnalysisBudget::default();
        let brace = catalog::trivial_cyclic(2).unwrap();
        let rep = regular_representation(&brace, 3).unwrap();
        let all: Vec<usize> = (0..brace.order()).collect();
        assert!(matches!(
            clifford_decompose(&rep, &all, &budget),
            Err(AnalysisError::NotSimple { dim: 2 })
        ));
    }

    #[test]
    fn proper_ideal_restriction_splits_a_sign_module_trivially() {
        // Restricting the sign module of Z/4's trivial brace to the ideal
        // {0, 2} leaves a single 1-dimensional component fixed by all.
        let budget = AnalysisBudget::default();
        let brace = catalog::trivial_cyclic(4).unwrap();
        let field = crate::linalg::PrimeField::new(5).unwrap();
        let image = |k: usize| {
            let mut m = Matrix::identity(field, 1);
            if k % 2 == 1 {
                m.set(0, 0, 4);
            }
            m
        };
        let mats: Vec<Matrix> = (0..4).map(image).collect();
        let data = RepData::new(field, mats.clone(), mats).unwrap();
        let rep = BraceRepresentation::new(&brace, data).unwrap();
        let decomposition = clifford_decompose(&rep, &[0, 2], &budget).unwrap();
        assert_eq!(decomposition.components.len(), 1);
        assert_eq!(decomposition.components[0].simple_dim, 1);
        assert!(decomposition.transitive);
        assert!(decomposition.multiplicities_equal && decomposition.simple_dims_equal);
    }
}
