//! Reducibility analysis of the three shipped low-dimensional
//! representations, including the contrast between a brace representation
//! and its one-sided restrictions.
//!
//! Run with: cargo run --example analyze_module

use bracerep::analysis::{is_indecomposable, is_irreducible, AnalysisBudget};
use bracerep::catalog;
use bracerep::complements::invariant_lines;
use bracerep::fileio::read_rep_data;
use bracerep::rep::BraceRepresentation;

fn data_path(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn main() {
    let budget = AnalysisBudget::default();

    // --- A two-dimensional representation over F_5 of the order-4 brace
    // with Klein dot group and cyclic circ group. ---
    let brace = catalog::unipotent_p2(2).unwrap();
    let data = read_rep_data(data_path("unipotent_p2_2_f5.json")).unwrap();
    let rep = BraceRepresentation::new(&brace, data).unwrap();
    let module = rep.to_group_module();
    println!(
        "order-4 brace over F_5: irreducible = {}",
        is_irreducible(&module, &budget).unwrap()
    );
    assert!(is_irreducible(&module, &budget).unwrap());

    // Each one-sided restriction alone is reducible: the abelian group
    // actions have eigenvectors the joint action does not share.
    let dot_lines = invariant_lines(&rep.dot_module(), &budget).unwrap();
    let circ_lines = invariant_lines(&rep.circ_module(), &budget).unwrap();
    let joint_lines = invariant_lines(&module, &budget).unwrap();
    println!(
        "invariant lines: dot side {}, circ side {}, joint {}",
        dot_lines.len(),
        circ_lines.len(),
        joint_lines.len()
    );
    for (name, lines) in [("dot", &dot_lines), ("circ", &circ_lines)] {
        for line in lines {
            println!("  {name} line spanned by {:?}", line.rows()[0]);
        }
    }
    assert_eq!((dot_lines.len(), circ_lines.len()), (2, 2));
    assert!(joint_lines.is_empty());
    // The eigenlines are (1, 1), (1, 4) for beta and (1, 2), (1, 3) for
    // rho; disjoint pairs, which is why the joint module has none.
    let spans: Vec<Vec<u32>> = dot_lines
        .iter()
        .chain(&circ_lines)
        .map(|l| l.rows()[0].clone())
        .collect();
    assert_eq!(
        spans,
        vec![vec![1, 1], vec![1, 4], vec![1, 2], vec![1, 3]]
    );

    // --- A three-dimensional representation over F_3 of the order-6
    // semidirect brace: reducible but indecomposable. ---
    let brace = catalog::semidirect_p2(3).unwrap();
    let data = read_rep_data(data_path("semidirect_p2_3_f3.json")).unwrap();
    let rep = BraceRepresentation::new(&brace, data).unwrap();
    let module = rep.to_group_module();
    let lines = invariant_lines(&module, &budget).unwrap();
    println!(
        "\norder-6 brace over F_3: irreducible = {}, indecomposable = {}",
        is_irreducible(&module, &budget).unwrap(),
        is_indecomposable(&module, &budget).unwrap()
    );
    assert!(!is_irreducible(&module, &budget).unwrap());
    assert!(is_indecomposable(&module, &budget).unwrap());
    println!(
        "unique invariant line spanned by {:?}",
        lines[0].rows()[0]
    );
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0].rows()[0], vec![0, 1, 0]);

    // The one-sided restrictions decompose (characteristic 3 divides only
    // the circ order through the group of order 6; each side alone is a
    // smaller group).
    for (name, side) in [("dot", rep.dot_module()), ("circ", rep.circ_module())] {
        let dec = is_indecomposable(&side, &budget).unwrap();
        println!("{name} restriction indecomposable: {dec}");
        assert!(!dec);
    }

    // --- A two-dimensional representation over F_2 of the brace encoding
    // the S3 = <(1 2 3)> <(1 2)> factorization: irreducible, with
    // asymmetric one-sided behavior. ---
    let brace = catalog::from_spec("s3_factorization").unwrap();
    let data = read_rep_data(data_path("s3_factorization_f2.json")).unwrap();
    let rep = BraceRepresentation::new(&brace, data).unwrap();
    let module = rep.to_group_module();
    println!(
        "\nS3-factorization brace over F_2: irreducible = {}",
        is_irreducible(&module, &budget).unwrap()
    );
    assert!(is_irreducible(&module, &budget).unwrap());

    let dot_side = rep.dot_module();
    let circ_side = rep.circ_module();
    println!(
        "dot restriction irreducible: {}",
        is_irreducible(&dot_side, &budget).unwrap()
    );
    assert!(is_irreducible(&dot_side, &budget).unwrap());
    let circ_irr = is_irreducible(&circ_side, &budget).unwrap();
    let circ_indec = is_indecomposable(&circ_side, &budget).unwrap();
    println!("circ restriction irreducible: {circ_irr}, indecomposable: {circ_indec}");
    assert!(!circ_irr);
    assert!(circ_indec);
    // In characteristic 2 the circ restriction (through a cyclic 2-group
    // image) is a nontrivial Jordan block: reducible yet indecomposable,
    // so not semisimple.
}
