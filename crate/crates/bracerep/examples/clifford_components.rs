//! Restricting a simple module to an ideal: homogeneous components and the
//! permutation action on them.
//!
//! Run with: cargo run --example clifford_components

use bracerep::analysis::AnalysisBudget;
use bracerep::catalog;
use bracerep::clifford::clifford_decompose;
use bracerep::fileio::read_rep_data;
use bracerep::rep::BraceRepresentation;

fn main() {
    let budget = AnalysisBudget::default();

    // The almost trivial brace on S3: dot is composition, circ is opposite
    // composition.  The shipped representation puts the faithful
    // two-dimensional S3 representation over F_7 on the dot side and the
    // identity on the circ side; it is simple as a brace representation.
    let brace = catalog::from_spec("almost_trivial:sym:3").unwrap();
    let data = read_rep_data(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/data/almost_trivial_sym3_f7.json"
    ))
    .unwrap();
    let rep = BraceRepresentation::new(&brace, data).unwrap();

    // The derived ideal is the copy of A3 = {id, (1 2 3), (1 3 2)},
    // indices {0, 3, 4} in the one-line-rank encoding.
    let ideal = brace.derived_ideal().unwrap();
    println!("derived ideal members: {:?}", ideal.members());
    assert_eq!(ideal.members(), &[0, 3, 4]);

    // Restricting to (the embedded square of) the ideal splits the plane
    // into two eigenlines of the rotation.
    let dec = clifford_decompose(&rep, ideal.members(), &budget).unwrap();
    println!("\nhomogeneous components: {}", dec.components.len());
    for (i, comp) in dec.components.iter().enumerate() {
        println!(
            "  component {i}: basis {:?}, simple dim {}, multiplicity {}",
            comp.basis.rows(),
            comp.simple_dim,
            comp.multiplicity
        );
    }
    assert_eq!(dec.components.len(), 2);
    assert!(dec
        .components
        .iter()
        .all(|c| c.simple_dim == 1 && c.multiplicity == 1));

    // The structure facts: multiplicities agree, simple dimensions agree,
    // and the big group permutes the components transitively.
    println!(
        "\ntransitive: {}, equal multiplicities: {}, equal simple dims: {}",
        dec.transitive, dec.multiplicities_equal, dec.simple_dims_equal
    );
    assert!(dec.transitive && dec.multiplicities_equal && dec.simple_dims_equal);

    // Inside each component the rotation (1 2 3) (element index 3) acts by
    // a primitive cube root of unity mod 7; the two components see the two
    // conjugate roots 2 and 4.
    let n = brace.order();
    let module = rep.to_group_module();
    let rotation_pair = 3 * n; // pair (rotation, identity)
    let mut eigenvalues = Vec::new();
    for comp in &dec.components {
        let row = &comp.basis.rows()[0];
        let image = module.action(rotation_pair).apply(row);
        // image = eigenvalue * row; read the scalar off the first pivot.
        let pivot = row.iter().position(|&x| x != 0).unwrap();
        let field = module.field();
        let scalar = field.mul(image[pivot], field.inv(row[pivot]));
        eigenvalues.push(scalar);
        println!(
            "rotation acts on component with basis {row:?} by {scalar}"
        );
    }
    eigenvalues.sort_unstable();
    assert_eq!(eigenvalues, vec![2, 4]);

    // Elements of the circ copy (pairs (id, b)) act through the identity
    // assignment, so they fix every component pointwise -- their induced
    // permutation is trivial.
    for b in 0..n {
        assert_eq!(dec.permutation_of(b), &[0, 1], "pair (id, {b}) fixes both");
    }
    // A transposition on the dot side swaps the two eigenlines.
    let transposition_pair = n; // pair ((2 3), identity)
    println!(
        "\npair ((2 3), id) induces the permutation {:?}",
        dec.permutation_of(transposition_pair)
    );
    assert_eq!(dec.permutation_of(transposition_pair), &[1, 0]);
    // The rotation itself fixes each eigenline (it acts by a scalar there).
    assert_eq!(dec.permutation_of(rotation_pair), &[0, 1]);

    // Restricting to the improper ideal (the whole brace) keeps the module
    // in one piece: a single component of multiplicity 1.
    let whole: Vec<usize> = (0..n).collect();
    let full = clifford_decompose(&rep, &whole, &budget).unwrap();
    println!(
        "\nrestriction to the whole brace: {} component(s), simple dim {}",
        full.components.len(),
        full.components[0].simple_dim
    );
    assert_eq!(full.components.len(), 1);
    assert_eq!(full.components[0].simple_dim, 2);
}
