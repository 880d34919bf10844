//! Checking the compatibility relation that makes a pair of matrix
//! assignments a brace representation.
//!
//! A representation of a skew brace over F_q is a pair (beta, rho) where
//! beta is a matrix representation of the dot group, rho one of the circ
//! group, and the two interact through
//!     rho(a) beta(b) = beta(lam^op_a(b)) rho(a)   for all a, b.
//!
//! Run with: cargo run --example relation_check

use bracerep::catalog;
use bracerep::fileio::read_rep_data;
use bracerep::rep::{check_relation, BraceRepresentation, RepData, RepError};
use bracerep::Verdict;

fn main() {
    // A three-dimensional representation of the order-6 brace built from
    // Z/3 with Z/2 acting by inversion, over F_3, shipped as JSON.
    let brace = catalog::semidirect_p2(3).unwrap();
    let path = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/data/semidirect_p2_3_f3.json"
    );
    let data = read_rep_data(path).unwrap();
    println!(
        "loaded dim-{} data over F_{}",
        data.dim(),
        data.field().modulus()
    );

    // The relation holds at all 36 pairs, so the pair is a representation.
    assert_eq!(check_relation(&brace, &data), Ok(Verdict::Holds));
    let rep = BraceRepresentation::new(&brace, data.clone()).unwrap();
    println!("relation holds at all {} pairs", brace.order() * brace.order());

    // The bridge matrices phi(a, b) = beta(a) rho(b) define a module over
    // the semidirect group; the relation is exactly what makes this a
    // homomorphism.
    let lambda_module = rep.to_group_module();
    println!(
        "semidirect group module: group order {}, dim {}",
        lambda_module.group().order(),
        lambda_module.dim()
    );

    // Corrupt one entry of rho(1).  Both sides stay homomorphisms of their
    // own groups only if we are lucky; here the corruption breaks the circ
    // homomorphism itself and the checker pinpoints where.
    let mut rho: Vec<_> = (0..brace.order()).map(|a| data.rho(a).clone()).collect();
    let beta: Vec<_> = (0..brace.order()).map(|a| data.beta(a).clone()).collect();
    rho[1].set(0, 2, 1);
    let bad = RepData::new(data.field(), beta.clone(), rho).unwrap();
    match check_relation(&brace, &bad) {
        Err(RepError::NotAHomomorphism { side, a, b }) => {
            println!("corrupted rho(1): {side} side fails to be a homomorphism at ({a}, {b})");
        }
        Ok(Verdict::Violated((a, b))) => {
            println!("corrupted rho(1): relation fails at ({a}, {b})");
        }
        other => panic!("corruption not caught: {other:?}"),
    }

    // On a trivial brace both groups coincide and lam^op is conjugation, so
    // the relation reads rho(a) beta(b) = beta(a b a^-1) rho(a).  Pairing a
    // faithful alpha with the identity assignment keeps both homomorphisms
    // intact but breaks the relation at the first non-commuting pair...
    let sym3 = catalog::from_spec("trivial:sym:3").unwrap();
    let alpha_path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/trivial_sym3_f7.json");
    let alpha_data = read_rep_data(alpha_path).unwrap();
    let alpha: Vec<_> = (0..sym3.order()).map(|a| alpha_data.beta(a).clone()).collect();
    let identity: Vec<_> = vec![bracerep::linalg::Matrix::identity(alpha_data.field(), 2); 6];
    let alpha_then_id = RepData::new(alpha_data.field(), alpha.clone(), identity.clone()).unwrap();
    match check_relation(&sym3, &alpha_then_id).unwrap() {
        Verdict::Violated((a, b)) => {
            println!("(alpha, id) on the trivial S3 brace: relation fails at ({a}, {b})");
            assert_eq!((a, b), (1, 2));
            // The two sides of the relation really differ there.
            let lhs = alpha_then_id.rho(a).mul(alpha_then_id.beta(b));
            let rhs = alpha_then_id
                .beta(sym3.lambda_op(a, b))
                .mul(alpha_then_id.rho(a));
            assert_ne!(lhs, rhs);
        }
        Verdict::Holds => panic!("expected (alpha, id) to fail"),
    }

    // ...while the opposite order is always valid: the identity on the dot
    // side commutes with everything, so any circ representation extends.
    let id_then_alpha = RepData::new(alpha_data.field(), identity, alpha).unwrap();
    assert_eq!(check_relation(&sym3, &id_then_alpha), Ok(Verdict::Holds));
    println!("(id, alpha) on the trivial S3 brace: relation holds");

    // A representation of the identity-sized brace: the regular one, built
    // from both translation actions, exists over any prime field.
    let regular = bracerep::rep::regular_representation(&brace, 7).unwrap();
    assert_eq!(regular.dim(), brace.order());
    println!(
        "regular representation over F_7 has dimension {}",
        regular.dim()
    );
}
