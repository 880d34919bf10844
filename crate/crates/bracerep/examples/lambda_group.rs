//! The semidirect group attached to a skew brace.
//!
//! The two operations of a brace of order n are tied together by the maps
//! lam^op_a(b) = (a o b) . a^-1, and the resulting semidirect product
//! (A, .) x| (A, o) is a group of order n^2 whose modules are exactly the
//! brace representations.
//!
//! Run with: cargo run --example lambda_group

use bracerep::catalog;

fn main() {
    let brace = catalog::semidirect_p2(3).unwrap();
    let n = brace.order();
    let lambda = brace.lambda_group();
    println!("brace order {n}, semidirect group order {}", lambda.order());
    assert_eq!(lambda.order(), n * n);

    // Elements are pairs (a, b) encoded as a*n + b; the identity is (e, e).
    let enc = |a: usize, b: usize| lambda.pair_index(a, b);
    assert_eq!(lambda.identity(), enc(brace.identity(), brace.identity()));

    // The product twists the first coordinate by the lambda action:
    //     (a, b) (c, d) = (a . lam^op_b(c), b o d).
    let (a, b, c, d) = (1, 2, 3, 4);
    let twisted = brace.lambda_op(b, c);
    let expected = enc(brace.dot(a, twisted), brace.circ(b, d));
    assert_eq!(lambda.product(enc(a, b), enc(c, d)), expected);
    let (x, y) = lambda.unpair(expected);
    println!("(1,2)(3,4) = ({x}, {y})  [lam^op_2(3) = {twisted}]");

    // Associativity of that product is exactly the statement that
    // a |-> lam^op_a is a homomorphism from the circ group.
    let composed = brace.lambda_op(brace.circ(1, 2), 3);
    assert_eq!(composed, brace.lambda_op(1, brace.lambda_op(2, 3)));
    println!("lam^op_(1 o 2) = lam^op_1 after lam^op_2, checked at 3: both give {composed}");

    // Each side embeds as a subgroup: the dot group as pairs (a, e) and the
    // circ group as pairs (e, b).
    let dot_copy: Vec<usize> = (0..n).map(|a| enc(a, brace.identity())).collect();
    let circ_copy: Vec<usize> = (0..n).map(|b| enc(brace.identity(), b)).collect();
    for (name, subgroup) in [("dot", &dot_copy), ("circ", &circ_copy)] {
        let closed = subgroup.iter().all(|&x| {
            subgroup
                .iter()
                .all(|&y| subgroup.contains(&lambda.product(x, y)))
        });
        println!("{name} copy closed under multiplication: {closed}");
        assert!(closed);
    }

    // The dot copy is normal (it is the kernel of projection onto the circ
    // coordinate); the circ copy of this brace is not.
    let is_normal = |subgroup: &[usize]| {
        (0..lambda.order()).all(|g| {
            subgroup.iter().all(|&h| {
                let conj = lambda.product(lambda.product(g, h), lambda.inverse(g));
                subgroup.contains(&conj)
            })
        })
    };
    println!("dot copy normal: {}", is_normal(&dot_copy));
    println!("circ copy normal: {}", is_normal(&circ_copy));
    assert!(is_normal(&dot_copy));
    assert!(!is_normal(&circ_copy));

    // An ideal I of the brace embeds as the normal subgroup I x I of pairs
    // with both coordinates in I.
    let derived = brace.derived_ideal().unwrap();
    let pairs = lambda.embed_subgroup(derived.members());
    println!(
        "derived ideal {:?} embeds as a subgroup of order {}, normal: {}",
        derived.members(),
        pairs.len(),
        is_normal(&pairs)
    );
    assert!(is_normal(&pairs));

    // A small generating set is computed greedily.
    println!("generators (pair indices): {:?}", lambda.generators());
    assert!(lambda.generators().len() <= 4);
}
