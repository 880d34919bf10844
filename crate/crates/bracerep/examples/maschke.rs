//! Complete reducibility and where it breaks: averaging complements when
//! the characteristic is coprime to the order, and the distinguished
//! all-ones vector in the regular module when it is not.
//!
//! Run with: cargo run --example maschke

use bracerep::analysis::{socle_and_semisimplicity, AnalysisBudget};
use bracerep::catalog;
use bracerep::complements::{delta_report, invariant_complement, maschke_complement};
use bracerep::linalg::SubspaceBasis;
use bracerep::rep::regular_representation;

fn main() {
    let budget = AnalysisBudget::default();

    // --- Coprime characteristic: every submodule splits off. ---
    let brace = catalog::semidirect_p2(3).unwrap();
    let rep = regular_representation(&brace, 5).unwrap();
    let module = rep.to_group_module();
    let socle = socle_and_semisimplicity(&module, &budget).unwrap();
    println!(
        "regular module of the order-6 brace over F_5: semisimple = {}",
        socle.semisimple
    );
    assert!(socle.semisimple);

    // The all-ones vector spans an invariant line (both translation
    // actions permute the basis).  Averaging over the group gives an
    // invariant projection, hence an invariant complement.
    let delta = vec![1u32; module.dim()];
    let mut line = SubspaceBasis::zero(module.field(), module.dim());
    line.insert(&delta);
    assert!(module.is_invariant(&line));
    let complement = maschke_complement(&module, &line).unwrap();
    println!(
        "span(delta) has an invariant complement of dimension {}",
        complement.dim()
    );
    assert_eq!(complement.dim(), module.dim() - 1);
    assert!(module.is_invariant(&complement));
    assert_eq!(line.sum(&complement).dim(), module.dim());

    // --- Characteristic dividing the order: delta survives, nothing else
    // does. ---
    let rep = regular_representation(&brace, 3).unwrap();
    let module = rep.to_group_module();
    let report = delta_report(&module, &delta, &budget).unwrap();
    println!(
        "\nsame module over F_3: span(delta) invariant = {}, invariant hyperplanes = {}, containing delta = {}",
        report.line_is_invariant,
        report.invariant_hyperplane_count,
        report.hyperplanes_containing_delta
    );
    println!(
        "invariant complement exists: {}",
        report.has_invariant_complement
    );
    assert!(report.line_is_invariant);
    assert!(!report.has_invariant_complement);

    // The exhaustive search agrees with the counting argument.
    let mut line = SubspaceBasis::zero(module.field(), module.dim());
    line.insert(&delta);
    let found = invariant_complement(&module, &line, &budget).unwrap();
    println!("exhaustive search finds a complement: {}", found.is_some());
    assert!(found.is_none());
    let socle = socle_and_semisimplicity(&module, &budget).unwrap();
    println!(
        "socle dimension {} < {} confirms the module is not semisimple",
        socle.socle.dim(),
        module.dim()
    );
    assert!(!socle.semisimple);

    // The obstruction is the characteristic, not this particular brace:
    // the same split/no-split pattern repeats across the catalog.
    println!();
    for spec in ["trivial:cyclic:4", "trivial:sym:3", "unipotent_p2:2", "qq_prime:7:3:2"] {
        let brace = catalog::from_spec(spec).unwrap();
        for q in [2u64, 3, 5, 7] {
            let rep = regular_representation(&brace, q).unwrap();
            let socle = socle_and_semisimplicity(&rep.to_group_module(), &budget).unwrap();
            let coprime = brace.order() as u64 % q != 0;
            assert_eq!(socle.semisimple, coprime);
        }
        println!("{spec:18} semisimple over F_q exactly when q does not divide {}", brace.order());
    }
}
