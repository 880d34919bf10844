//! One-dimensional characters of the dot group do not extend to brace
//! representations unless they are constant on lam^op-orbits.
//!
//! Run with: cargo run --example character_obstruction

use bracerep::brace::Side;
use bracerep::catalog;
use bracerep::linalg::{Matrix, PrimeField};
use bracerep::rep::{character_invariance, trivial_side_extension, RepError};
use bracerep::Verdict;

fn main() {
    // The order-6 brace with dot group Z/3 x Z/2 and circ group the
    // symmetric group on three letters.  Over F_7 the dot group has a
    // character of order 6; take the one generated by chi(a1, a2) = 2^a1
    // on the Z/3 part (2 is a primitive cube root of unity mod 7) and
    // trivial on the Z/2 part.
    let brace = catalog::semidirect_p2(3).unwrap();
    let chi: Vec<u32> = (0..6)
        .map(|i| {
            let a1 = i / 2; // element (a1, a2) has index a1*2 + a2
            [1u32, 2, 4][a1]
        })
        .collect();
    println!("character values on the dot group: {chi:?}");

    // It is a homomorphism of the dot group...
    for a in 0..6usize {
        for b in 0..6usize {
            assert_eq!(
                chi[brace.dot(a, b)],
                chi[a] * chi[b] % 7,
                "chi is multiplicative"
            );
        }
    }
    println!("chi is multiplicative on the dot group");

    // ...but not lam^op-invariant: the circ group moves the cube roots
    // around, so the character cannot see both 2 and 4 as the same value.
    match character_invariance(&brace, &chi).unwrap() {
        Verdict::Violated((a, b)) => {
            println!(
                "invariance fails at (a, b) = ({a}, {b}): chi({}) = {} but chi({b}) = {}",
                brace.lambda_op(a, b),
                chi[brace.lambda_op(a, b)],
                chi[b]
            );
            assert_eq!((a, b), (1, 2));
        }
        Verdict::Holds => panic!("expected the character to break invariance"),
    }

    // Trying to extend it with the identity on the circ side hits exactly
    // the same obstruction.
    let f7 = PrimeField::new(7).unwrap();
    let matrices: Vec<Matrix> = chi
        .iter()
        .map(|&v| Matrix::from_rows_i64(f7, &[vec![i64::from(v)]]))
        .collect();
    match trivial_side_extension(&brace, Side::Dot, matrices) {
        Err(RepError::ObstructionFailed { a, b }) => {
            println!("dot-side extension rejected with the same witness ({a}, {b})");
            assert_eq!((a, b), (1, 2));
        }
        other => panic!("expected the obstruction to fire, got {other:?}"),
    }

    // On a trivial brace lam^op is plain conjugation, so class functions
    // that are homomorphisms pass; the sign character of the S3 brace is
    // one (over F_7: -1 = 6).
    let sym3 = catalog::from_spec("trivial:sym:3").unwrap();
    let sign: Vec<u32> = (0..6)
        .map(|i| if [0, 3, 4].contains(&i) { 1 } else { 6 })
        .collect();
    assert!(character_invariance(&sym3, &sign).unwrap().holds());
    let rep = trivial_side_extension(
        &sym3,
        Side::Dot,
        sign.iter()
            .map(|&v| Matrix::from_rows_i64(f7, &[vec![i64::from(v)]]))
            .collect(),
    )
    .unwrap();
    println!(
        "sign character of the trivial S3 brace extends: beta(1) = {}, rho(1) = {}",
        rep.beta(1).get(0, 0),
        rep.rho(1).get(0, 0)
    );

    // Characters constant on lam^op-orbits always extend; on this brace
    // the orbit of the Z/3 part under the circ action is {1, 2, 4} -> the
    // only invariant choices factor through the Z/2 quotient.
    let through_z2: Vec<u32> = (0..6).map(|i| if i % 2 == 0 { 1 } else { 6 }).collect();
    assert!(character_invariance(&brace, &through_z2).unwrap().holds());
    let rep = trivial_side_extension(
        &brace,
        Side::Dot,
        through_z2
            .iter()
            .map(|&v| Matrix::from_rows_i64(f7, &[vec![i64::from(v)]]))
            .collect(),
    )
    .unwrap();
    println!(
        "the character through the Z/2 quotient extends: dim {} representation",
        rep.dim()
    );
}
