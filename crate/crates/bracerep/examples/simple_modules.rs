//! Enumerating the simple representations of a brace over a prime field by
//! factoring the regular module of its semidirect group.
//!
//! Run with: cargo run --example simple_modules

use bracerep::analysis::{is_irreducible, AnalysisBudget};
use bracerep::catalog;
use bracerep::clifford::enumerate_simples;

fn main() {
    let budget = AnalysisBudget::default();

    // For a brace of two-power order in characteristic 2, the only simple
    // module is the trivial one: the semidirect group is a 2-group, and
    // 2-groups have no nontrivial simples in their own characteristic.
    for spec in ["trivial:cyclic:2", "unipotent_p2:2", "trivial:cyclic:4"] {
        let brace = catalog::from_spec(spec).unwrap();
        let simples = enumerate_simples(&brace, 2, &budget).unwrap();
        let dims: Vec<usize> = simples.iter().map(|s| s.dim()).collect();
        println!("{spec:18} over F_2: simple dimensions {dims:?}");
        assert_eq!(dims, vec![1]);
    }

    // Away from that degenerate case nontrivial simples appear.  The
    // order-6 semidirect brace over F_2 has four of dimension 2 next to
    // the trivial module.
    let brace = catalog::semidirect_p2(3).unwrap();
    let simples = enumerate_simples(&brace, 2, &budget).unwrap();
    let dims: Vec<usize> = simples.iter().map(|s| s.dim()).collect();
    println!("semidirect_p2:3    over F_2: simple dimensions {dims:?}");
    assert_eq!(dims, vec![1, 2, 2, 2, 2]);

    // Each returned module really is irreducible, and they are pairwise
    // non-isomorphic by construction.
    for simple in &simples {
        assert!(is_irreducible(simple, &budget).unwrap());
    }
    println!("all verified irreducible and pairwise distinct");

    // Same brace over F_5 (coprime to both 6 and 36): the regular module
    // of the order-36 semidirect group is semisimple, and the simple
    // dimensions found must satisfy the usual bound
    //     sum of d_i^2 <= group order
    // with equality exactly when the field is a splitting field.
    let simples = enumerate_simples(&brace, 5, &budget).unwrap();
    let dims: Vec<usize> = simples.iter().map(|s| s.dim()).collect();
    let square_sum: usize = dims.iter().map(|d| d * d).sum();
    println!(
        "semidirect_p2:3    over F_5: simple dimensions {dims:?}, sum of squares {square_sum} <= 36"
    );
    assert!(square_sum <= 36);

    // Every simple dimension is bounded by the brace order squared
    // (the semidirect group order), and in fact by far less here.
    let n = brace.order();
    for d in &dims {
        assert!(*d <= n * n);
    }

    // The enumeration materializes the full multiplication table of the
    // semidirect group, so it is guarded by an order limit: braces beyond
    // order 8 (semidirect order 64) are rejected rather than attempted.
    match enumerate_simples(&catalog::from_spec("trivial:sym:4").unwrap(), 2, &budget) {
        Err(e) => println!("\ntrivial:sym:4 rejected: {e}"),
        Ok(_) => panic!("expected the order guard to fire"),
    }
}
