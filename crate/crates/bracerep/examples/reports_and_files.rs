//! The on-disk interchange formats and the machine-readable run report.
//!
//! Run with: cargo run --example reports_and_files

use bracerep::brace::SkewBrace;
use bracerep::catalog;
use bracerep::fileio::{brace_json, parse_brace_tables, parse_rep_data, rep_json, FileError};
use bracerep::report::{RunReport, Status};

fn main() {
    // A brace serializes to a JSON object with its order and both row-major
    // multiplication tables; parsing validates shape and entries before any
    // axiom is checked.
    let brace = catalog::unipotent_p2(2).unwrap();
    let text = brace_json(&brace);
    println!("brace file ({} bytes):\n{text}\n", text.len());
    let (dot, circ) = parse_brace_tables(&text).unwrap();
    let reparsed = SkewBrace::verify(&dot, &circ).unwrap();
    assert_eq!(reparsed.dot_table(), brace.dot_table());
    assert_eq!(reparsed.circ_table(), brace.circ_table());

    // Malformed inputs are rejected with positioned messages.
    for (broken, expect) in [
        (r#"{"order": 2, "dot": [[0,1],[1,0]], "circ": [[0,1]]}"#, "circ has 1 rows"),
        (r#"{"order": 2, "dot": [[0,1],[1,2]], "circ": [[0,1],[1,0]]}"#, "out of range"),
        (r#"{"order": 2, "dot": [[0,0],[1,0]], "circ": [[0,1],[1,0]]}"#, "repeats entry"),
    ] {
        match parse_brace_tables(broken) {
            Err(FileError::Malformed(msg)) => {
                println!("rejected: {msg}");
                assert!(msg.contains(expect), "{msg:?} should mention {expect:?}");
            }
            other => panic!("expected a malformed error, got {other:?}"),
        }
    }

    // Representation files carry the modulus, the dimension, and the two
    // matrix families keyed by element index; signed entries are reduced.
    let rep = bracerep::rep::regular_representation(&brace, 3).unwrap();
    let text = rep_json(rep.data());
    let round = parse_rep_data(&text).unwrap();
    assert_eq!(round, *rep.data());
    println!("\nrepresentation file round-trips ({} bytes)", text.len());
    let negative = r#"{
        "modulus": 5, "dim": 1,
        "beta": {"0": [[1]], "1": [[-1]]},
        "rho":  {"0": [[1]], "1": [[4]]}
    }"#;
    let data = parse_rep_data(negative).unwrap();
    assert_eq!(data.beta(1), data.rho(1));
    println!("signed entries reduce into the field: -1 == 4 mod 5");

    // Run reports aggregate named verdicts with optional detail and
    // witness payloads, plus SHA-256 digests of the inputs; the JSON form
    // is stable and the exit code mirrors the worst verdict.
    let mut report = RunReport::new("rep check --catalog unipotent_p2:2");
    report.add_input("catalog:unipotent_p2:2", brace_json(&brace).as_bytes());
    report.pass("dot-homomorphism");
    report.pass("circ-homomorphism");
    report.fail(
        "compatibility-relation",
        serde_json::json!({"a": 1, "b": 2}),
    );
    println!("\n{}", report.to_json());
    println!("{}", report.to_text());
    assert_eq!(report.exit_code(), 1);
    assert!(!report.all_passed());
    assert_eq!(report.verdicts[2].status, Status::Fail);

    // A fully passing report exits 0 and its JSON parses back losslessly.
    let mut ok = RunReport::new("brace verify --catalog unipotent_p2:2");
    ok.add_input("catalog:unipotent_p2:2", brace_json(&brace).as_bytes());
    ok.pass("dot-group");
    ok.pass("circ-group");
    ok.pass("shared-identity");
    ok.pass("brace-relation");
    assert_eq!(ok.exit_code(), 0);
    let parsed: RunReport = serde_json::from_str(&ok.to_json()).unwrap();
    assert_eq!(parsed, ok);
    println!("passing report round-trips; exit code {}", ok.exit_code());
}
