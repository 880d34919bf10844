//! Right translations do not generally give a brace representation.
//!
//! The (left) regular representation pairs left dot-translations with left
//! circ-translations and always satisfies the compatibility relation.  The
//! right-handed analogue requires the identity
//!     c . (a o b^-1) . a^-1  =  ((c o a) . b^-1) o a^-1
//! for all a, b, c, which already fails on small nontrivial braces.
//!
//! Run with: cargo run --example right_regular

use bracerep::catalog;
use bracerep::rep::check_right_regular;
use bracerep::Verdict;

fn main() {
    // On every trivial brace both operations coincide and the identity
    // collapses to associativity, so the check passes.
    for spec in ["trivial:cyclic:2", "trivial:cyclic:6", "trivial:sym:3"] {
        let brace = catalog::from_spec(spec).unwrap();
        let verdict = check_right_regular(&brace);
        println!("{spec:18} right-regular identity: {:?}", verdict.holds());
        assert!(verdict.holds());
    }

    // The order-6 semidirect brace breaks it.  The checker scans triples
    // (a, b, c) in lexicographic order and reports the first failure.
    let brace = catalog::semidirect_p2(3).unwrap();
    match check_right_regular(&brace) {
        Verdict::Violated((a, b, c)) => {
            println!("\nsemidirect_p2:3 fails at (a, b, c) = ({a}, {b}, {c})");
            assert_eq!((a, b, c), (1, 2, 0));
            // Recompute both sides by hand to display the defect.
            let lhs = brace.dot(
                brace.dot(c, brace.circ(a, brace.dot_inv(b))),
                brace.dot_inv(a),
            );
            let rhs = brace.circ(
                brace.dot(brace.circ(c, a), brace.dot_inv(b)),
                brace.circ_inv(a),
            );
            println!("  left side evaluates to {lhs}, right side to {rhs}");
            assert_ne!(lhs, rhs);
        }
        Verdict::Holds => panic!("expected a violation"),
    }

    // Non-triviality alone does not decide the outcome.  When both groups
    // are abelian, right translations equal left translations and the
    // identity degenerates to the valid left-handed one; the order-4
    // unipotent brace is such a case.  The order-21 brace and the brace
    // from the S3 = <(1 2 3)> <(1 2)> factorization have a nonabelian side
    // and fail.
    for spec in ["unipotent_p2:2", "qq_prime:7:3:2", "s3_factorization"] {
        let brace = catalog::from_spec(spec).unwrap();
        match check_right_regular(&brace) {
            Verdict::Violated(w) => println!("{spec:18} fails at {w:?}"),
            Verdict::Holds => println!("{spec:18} holds"),
        }
    }
    assert!(check_right_regular(&catalog::unipotent_p2(2).unwrap()).holds());
    assert!(!check_right_regular(&catalog::qq_prime(7, 3, 2).unwrap()).holds());

    // The almost trivial brace on S3 (circ is the opposite group) also
    // passes: swapping the operation order turns right translations back
    // into left ones.
    let almost = catalog::from_spec("almost_trivial:sym:3").unwrap();
    let verdict = check_right_regular(&almost);
    println!(
        "almost_trivial:sym:3 right-regular identity holds: {}",
        verdict.holds()
    );
    assert!(verdict.holds());
}
