//! Tour of the brace layer: verifying tables, the star operation, ideals,
//! and quotients.
//!
//! Run with: cargo run --example verify_brace

use bracerep::brace::{BraceError, SkewBrace};
use bracerep::catalog;

fn main() {
    // A skew brace is two group structures on one set, sharing an identity
    // and tied together by the brace relation
    //     a o (b . c) = (a o b) . a^-1 . (a o c).
    // The catalog ships several verified families.
    for spec in [
        "trivial:cyclic:6",
        "trivial:sym:3",
        "almost_trivial:sym:3",
        "semidirect_p2:3",
        "unipotent_p2:2",
        "qq_prime:7:3:2",
        "s3_factorization",
    ] {
        let brace = catalog::from_spec(spec).unwrap();
        println!(
            "{spec:22} order {:2}  trivial: {}",
            brace.order(),
            brace.is_trivial()
        );
    }

    // Hand-written tables go through the same verifier.  Both operations
    // here are addition mod 3, which is the trivial brace on Z/3.
    let z3: Vec<Vec<usize>> = (0..3)
        .map(|a| (0..3).map(|b| (a + b) % 3).collect())
        .collect();
    let brace = SkewBrace::verify(&z3, &z3).unwrap();
    assert!(brace.is_trivial());

    // Breaking associativity in one entry is caught with a defect report.
    let mut bad = z3.clone();
    bad[2][2] = 2;
    match SkewBrace::verify(&bad, &z3) {
        Err(BraceError::NotAGroup { side, reason }) => {
            println!("\nbroken table rejected: {side} side, {reason}");
        }
        other => panic!("expected a group failure, got {other:?}"),
    }

    // The star operation a * b = a^-1 . (a o b) . b^-1 measures how far the
    // two operations differ; it vanishes identically exactly on trivial
    // braces.
    let semidirect = catalog::semidirect_p2(3).unwrap();
    let star = semidirect.star_table();
    let nonzero = star
        .iter()
        .flatten()
        .filter(|&&x| x != semidirect.identity())
        .count();
    println!("\nsemidirect_p2:3 star table has {nonzero} nonzero entries");
    assert!(nonzero > 0);
    let trivial = catalog::trivial_cyclic(6).unwrap();
    assert!(trivial
        .star_table()
        .iter()
        .flatten()
        .all(|&x| x == trivial.identity()));

    // The derived ideal is generated by all star values; the quotient by it
    // is always a trivial brace.
    let derived = semidirect.derived_ideal().unwrap();
    println!("derived ideal members: {:?}", derived.members());
    let (quotient, class_of) = semidirect.quotient(&derived).unwrap();
    println!(
        "quotient order {} (trivial: {}), classes {:?}",
        quotient.order(),
        quotient.is_trivial(),
        class_of
    );
    assert!(quotient.is_trivial());
    assert_eq!(quotient.order(), 2);

    // Every ideal of the order-6 semidirect brace, smallest first.
    let ideals = semidirect.ideals(64).unwrap();
    println!("\nideals of semidirect_p2:3:");
    for ideal in &ideals {
        println!("  order {} members {:?}", ideal.len(), ideal.members());
    }
    assert_eq!(ideals.len(), 3);
    assert_eq!(ideals[0].len(), 1);
    assert_eq!(ideals[2].len(), 6);
}
