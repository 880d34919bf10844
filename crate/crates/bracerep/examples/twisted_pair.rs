//! Two brace representations whose one-sided restrictions are isomorphic
//! group representations, yet which are inequivalent as brace
//! representations.
//!
//! On a trivial brace, a representation pairs a group representation alpha
//! with a conjugate alpha_f(g) = f alpha(g) f^-1.  Picking f so that it
//! normalizes the image without centralizing it gives a pair (alpha, alpha)
//! vs (alpha, alpha_f) that no single change of basis can match on both
//! sides at once.
//!
//! Run with: cargo run --example twisted_pair

use bracerep::analysis::{are_equivalent, are_isomorphic, AnalysisBudget};
use bracerep::catalog;
use bracerep::fileio::read_rep_data;
use bracerep::linalg::Matrix;
use bracerep::rep::{twisted_pair, BraceRepresentation};

fn main() {
    let budget = AnalysisBudget::default();
    let brace = catalog::from_spec("trivial:sym:3").unwrap();

    // The faithful two-dimensional representation of S3 over F_7, and a
    // twist matrix that swaps its two eigen-directions.
    let base = read_rep_data(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/data/trivial_sym3_f7.json"
    ))
    .unwrap();
    let alpha: Vec<Matrix> = (0..6).map(|a| base.beta(a).clone()).collect();
    let twist = Matrix::from_rows_i64(base.field(), &[vec![6, 2], vec![5, 1]]);
    assert!(twist.is_invertible());

    let (plain, twisted) = twisted_pair(&brace, &alpha, &twist).unwrap();
    println!(
        "built the pair: dim {} over F_{}",
        plain.dim(),
        plain.field().modulus()
    );

    // Both agree with the shipped files.
    let twisted_file = read_rep_data(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/data/trivial_sym3_f7_twisted.json"
    ))
    .unwrap();
    assert_eq!(*plain.data(), base);
    assert_eq!(*twisted.data(), twisted_file);
    println!("matches the shipped data files");

    // The twist conjugates each alpha(g) to +/- alpha(g): f commutes with
    // the rotations and anti-commutes with the transpositions.
    for g in 0..6usize {
        let conj = twist
            .mul(&alpha[g])
            .mul(&twist.invert().unwrap())
            .mul(&alpha[g].invert().unwrap());
        let scalar = conj.get(0, 0);
        assert!(conj == Matrix::identity(base.field(), 2).scale(scalar));
        assert!(scalar == 1 || scalar == 6);
        println!("  f alpha({g}) f^-1 alpha({g})^-1 = {scalar} * I");
    }

    // Side by side, the circ restrictions are isomorphic as group modules:
    // f itself is the intertwiner.
    let iso = are_isomorphic(&plain.circ_module(), &twisted.circ_module(), &budget)
        .unwrap()
        .expect("conjugate representations are isomorphic");
    let entries: Vec<Vec<u32>> = (0..2)
        .map(|i| (0..2).map(|j| iso.get(i, j)).collect())
        .collect();
    println!("\ncirc restrictions isomorphic via {entries:?}");
    // The dot restrictions are literally equal.
    assert!(
        are_isomorphic(&plain.dot_module(), &twisted.dot_module(), &budget)
            .unwrap()
            .is_some()
    );

    // But as brace representations the two are inequivalent: an
    // equivalence would have to intertwine both sides simultaneously,
    // forcing it to centralize the irreducible image (so be scalar) and
    // conjugate alpha to alpha_f at the same time -- impossible since f is
    // not scalar.
    let equiv = are_equivalent(&plain, &twisted, &budget).unwrap();
    println!(
        "equivalent as brace representations: {}",
        equiv.is_some()
    );
    assert!(equiv.is_none());

    // Sanity: a representation is always equivalent to itself, with the
    // identity as one valid intertwiner.
    assert!(are_equivalent(&plain, &plain, &budget).unwrap().is_some());

    // A scalar twist would change nothing, so the constructor rejects it
    // up front.
    let scalar_twist = Matrix::identity(base.field(), 2).scale(3);
    let err = twisted_pair(&brace, &alpha, &scalar_twist).unwrap_err();
    println!("a centralizing twist is rejected: {err}");

    // Twisting is only defined over trivial braces; elsewhere the two
    // sides live on different groups.
    let err = twisted_pair(&catalog::semidirect_p2(3).unwrap(), &alpha, &twist);
    println!(
        "twisting a nontrivial brace is rejected: {}",
        err.err().unwrap()
    );
    let _ = BraceRepresentation::new(&brace, base);
}
