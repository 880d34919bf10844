//! Ways to build representations: the regular representation, one-sided
//! extensions, and lifts from the quotient by the derived ideal.
//!
//! Run with: cargo run --example constructions

use bracerep::analysis::{socle_and_semisimplicity, AnalysisBudget};
use bracerep::catalog;
use bracerep::fileio::read_rep_data;
use bracerep::brace::Side;
use bracerep::linalg::{Matrix, PrimeField};
use bracerep::rep::{lift_representation, trivial_side_extension, LiftMode};

fn main() {
    let budget = AnalysisBudget::default();

    // 1. The regular representation: both translation actions on the group
    // algebra.  It exists for every brace and every prime modulus.
    let brace = catalog::qq_prime(7, 3, 2).unwrap();
    let regular = bracerep::rep::regular_representation(&brace, 5).unwrap();
    println!(
        "regular representation of qq_prime:7:3:2 over F_5: dim {}",
        regular.dim()
    );
    assert_eq!(regular.dim(), 21);
    // 5 is coprime to 21, so the module is semisimple.
    let socle = socle_and_semisimplicity(&regular.to_group_module(), &budget).unwrap();
    println!("semisimple over F_5 (coprime order): {}", socle.semisimple);
    assert!(socle.semisimple);

    // 2. One-sided extension: any representation of the circ group becomes
    // a brace representation with the identity on the dot side.  The dot
    // direction instead carries an obstruction: the matrices must be
    // constant on lam^op-orbits.
    let sym3 = catalog::from_spec("trivial:sym:3").unwrap();
    let alpha_data = read_rep_data(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/data/trivial_sym3_f7.json"
    ))
    .unwrap();
    let alpha: Vec<Matrix> = (0..6).map(|a| alpha_data.beta(a).clone()).collect();
    let circ_side = trivial_side_extension(&sym3, Side::Circ, alpha.clone()).unwrap();
    println!(
        "circ-side extension of the faithful S3 representation: dim {}",
        circ_side.dim()
    );
    match trivial_side_extension(&sym3, Side::Dot, alpha) {
        Err(e) => println!("dot-side extension rejected: {e}"),
        Ok(_) => panic!("a faithful alpha cannot be constant on conjugacy classes"),
    }

    // 3. Lifting through the quotient by the derived ideal.  For the
    // order-4 brace with Klein dot group and cyclic circ group, the
    // quotient has order 2; lifting the F_2 assignment
    //     0 -> I,  1 -> [[1,1],[0,1]]
    // diagonally gives a two-dimensional representation in characteristic
    // dividing the order. It is reducible but not a direct sum: the socle
    // is a single line.
    let unipotent = catalog::unipotent_p2(2).unwrap();
    let f2 = PrimeField::new(2).unwrap();
    let alpha_bar = vec![
        Matrix::identity(f2, 2),
        Matrix::from_rows_i64(f2, &[vec![1, 1], vec![0, 1]]),
    ];
    let lifted = lift_representation(&unipotent, &alpha_bar, LiftMode::Diagonal).unwrap();
    println!(
        "diagonal lift on unipotent_p2:2 over F_2: dim {}",
        lifted.dim()
    );
    let shipped = read_rep_data(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/data/unipotent_p2_2_f2.json"
    ))
    .unwrap();
    assert_eq!(*lifted.data(), shipped);
    println!("matches the shipped data file entry for entry");
    let socle = socle_and_semisimplicity(&lifted.to_group_module(), &budget).unwrap();
    println!(
        "socle dimension {} of {}: semisimple = {}",
        socle.socle.dim(),
        lifted.dim(),
        socle.semisimple
    );
    assert!(!socle.semisimple);

    // 4. The tensor lift: beta(a) = alpha(a) (x) I and rho(b) = I (x)
    // alpha(b).  On the order-21 brace the quotient is Z/3; lifting the
    // scalar assignment c -> 4^c over F_7 (4 is a primitive cube root of
    // unity) gives a one-dimensional representation with both sides
    // nontrivial.
    let scalars: Vec<Matrix> = [1i64, 4, 2]
        .iter()
        .map(|&s| Matrix::from_rows_i64(PrimeField::new(7).unwrap(), &[vec![s]]))
        .collect();
    let tensor = lift_representation(&brace, &scalars, LiftMode::Tensor).unwrap();
    println!(
        "tensor lift on qq_prime:7:3:2 over F_7: dim {}, beta(1) = {:?}, rho(1) = {:?}",
        tensor.dim(),
        tensor.beta(1).get(0, 0),
        tensor.rho(1).get(0, 0)
    );
    assert_eq!(tensor.dim(), 1);
    assert!(tensor.beta(1).get(0, 0) != 1 || tensor.rho(1).get(0, 0) != 1);
}
