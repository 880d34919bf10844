//! Command-line driver: argument parsing, input loading, and report
//! assembly for the `bracerep` binary.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails (the report
//! carries the witness), 2 on parse or usage errors (diagnostic on
//! stderr).  Braces come from `--catalog family:param:...` specifiers or
//! `--file` JSON tables; representations from `--rep` JSON files.  The
//! default analysis budget can be overridden per run with `--budget` or
//! globally with the `BRACEREP_BUDGET` environment variable.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::analysis::{
    are_equivalent, is_indecomposable, is_irreducible, minimal_submodules,
    socle_and_semisimplicity, AnalysisBudget, AnalysisError,
};
use crate::brace::{check_lambda_subgroup_normal, BraceError, Side, SkewBrace};
use crate::catalog;
use crate::clifford::{clifford_decompose, enumerate_simples};
use crate::fileio;
use crate::linalg::Matrix;
use crate::rep::{
    character_invariance, check_relation, check_right_regular, regular_representation,
    BraceRepresentation, GroupTable, RepData,
};
use crate::report::RunReport;
use crate::Verdict;

pub const BUDGET_ENV_VAR: &str = "BRACEREP_BUDGET";

#[derive(Parser)]
#[command(
    name = "bracerep",
    version,
    about = "Exact-arithmetic toolkit for finite skew braces and their representations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify and inspect skew braces
    #[command(subcommand)]
    Brace(BraceCmd),
    /// Check and analyze brace representations
    #[command(subcommand)]
    Rep(RepCmd),
}

#[derive(Subcommand)]
enum BraceCmd {
    /// Check the group axioms and the brace relation
    Verify(CommonArgs),
    /// List every ideal
    Ideals(CommonArgs),
    /// Print the star table and the derived ideal
    Star(CommonArgs),
    /// Quotient by the derived ideal
    Quotient(CommonArgs),
    /// Describe the associated semidirect-product group
    LambdaGroup(CommonArgs),
}

#[derive(Subcommand)]
enum RepCmd {
    /// Validate a representation file against a brace
    Check {
        #[command(flatten)]
        common: CommonArgs,
        /// Representation JSON file
        #[arg(long)]
        rep: PathBuf,
    },
    /// Report irreducibility, indecomposability, and semisimplicity
    Analyze {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        rep: PathBuf,
    },
    /// Emit the left regular representation over F_q
    Regular {
        #[command(flatten)]
        common: CommonArgs,
        /// Prime modulus q
        #[arg(long)]
        modulus: u64,
    },
    /// Decompose the restriction to an ideal into homogeneous components
    Clifford {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        rep: PathBuf,
        /// Ideal members: comma-separated indices, `derived`, or `all`
        #[arg(long)]
        ideal: String,
    },
    /// Test two representation files for equivalence
    Equiv {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        rep: PathBuf,
        /// Second representation JSON file
        #[arg(long)]
        other: PathBuf,
    },
    /// Enumerate the simple modules of the semidirect product over F_q
    Simples {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        modulus: u64,
    },
    /// Check whether right translations also form a representation
    RightRegular {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Check a character for invariance under the lambda action
    CharInvariance {
        #[command(flatten)]
        common: CommonArgs,
        /// Comma-separated character values, one per element
        #[arg(long)]
        values: String,
    },
}

#[derive(Args)]
struct CommonArgs {
    /// Catalog specifier, e.g. trivial:sym:3 or semidirect_p2:3
    #[arg(long, conflicts_with = "file")]
    catalog: Option<String>,
    /// Brace JSON file
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Override the analysis budget (also: BRACEREP_BUDGET)
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

/// A diagnostic that ends the run with exit code 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type Flow = Result<RunReport, Usage>;

/// Runs the CLI on the given argument list (including the program name),
/// printing the report to stdout, and returns the process exit code.
pub fn run<I: IntoIterator<Item = String>>(args: I) -> i32 {
    let args: Vec<String> = args.into_iter().collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return err.exit_code();
        }
    };
    let command_line = args[1..].join(" ");
    let started = std::time::Instant::now();
    let (flow, format) = dispatch(&cli.command, &command_line);
    match flow {
        Ok(mut report) => {
            report.add_timing("run", started.elapsed().as_millis());
            // Ignore write failures (e.g. a closed pipe) instead of
            // panicking; the exit code still reflects the verdicts.
            use std::io::Write as _;
            let mut out = std::io::stdout();
            let _ = match format {
                Format::Json => writeln!(out, "{}", report.to_json()),
                Format::Text => write!(out, "{}", report.to_text()),
            };
            report.exit_code()
        }
        Err(Usage(message)) => {
            eprintln!("error: {message}");
            2
        }
    }
}

fn dispatch(command: &Command, command_line: &str) -> (Flow, Format) {
    let common = match command {
        Command::Brace(cmd) => match cmd {
            BraceCmd::Verify(c)
            | BraceCmd::Ideals(c)
            | BraceCmd::Star(c)
            | BraceCmd::Quotient(c)
            | BraceCmd::LambdaGroup(c) => c,
        },
        Command::Rep(cmd) => match cmd {
            RepCmd::Check { common, .. }
            | RepCmd::Analyze { common, .. }
            | RepCmd::Regular { common, .. }
            | RepCmd::Clifford { common, .. }
            | RepCmd::Equiv { common, .. }
            | RepCmd::Simples { common, .. }
            | RepCmd::RightRegular { common }
            | RepCmd::CharInvariance { common, .. } => common,
        },
    };
    let mut report = RunReport::new(command_line);
    let flow = (|| match command {
        Command::Brace(cmd) => run_brace(cmd, common, report),
        Command::Rep(cmd) => run_rep(cmd, common, &mut report).map(|()| report),
    })();
    (flow, common.format)
}

fn run_brace(cmd: &BraceCmd, common: &CommonArgs, mut report: RunReport) -> Flow {
    if let BraceCmd::Verify(_) = cmd {
        // Axiom failures are this command's subject matter, so they become
        // fail verdicts rather than usage errors.
        let (dot, circ) = load_tables(common, &mut report)?;
        verify_verdicts(&dot, &circ, &mut report);
        return Ok(report);
    }
    let brace = load_brace(common, &mut report)?;
    match cmd {
        BraceCmd::Verify(_) => unreachable!("handled above"),
        BraceCmd::Ideals(args) => {
            let cap = args.budget.map(|b| b as usize).unwrap_or(64);
            let ideals = brace.ideals(cap).map_err(usage)?;
            let listed: Vec<Value> = ideals
                .iter()
                .map(|i| json!({"order": i.len(), "members": i.members()}))
                .collect();
            report.pass_with("ideals", json!({"count": listed.len(), "ideals": listed}));
        }
        BraceCmd::Star(_) => {
            report.pass_with("star-table", json!(brace.star_table()));
            let derived = brace.derived_ideal().map_err(usage)?;
            report.pass_with(
                "derived-ideal",
                json!({"order": derived.len(), "members": derived.members()}),
            );
        }
        BraceCmd::Quotient(_) => {
            let derived = brace.derived_ideal().map_err(usage)?;
            let (quotient, class_of) = brace.quotient(&derived).map_err(usage)?;
            report.pass_with(
                "quotient",
                json!({
                    "order": quotient.order(),
                    "trivial": quotient.is_trivial(),
                    "dot": quotient.dot_table(),
                    "class_of": class_of,
                }),
            );
        }
        BraceCmd::LambdaGroup(_) => {
            let lambda = brace.lambda_group();
            let pairs = |list: &[usize]| -> Vec<(usize, usize)> {
                list.iter().map(|&p| lambda.unpair(p)).collect()
            };
            report.pass_with(
                "lambda-group",
                json!({
                    "order": lambda.order(),
                    "identity": lambda.unpair(lambda.identity()),
                    "generators": pairs(lambda.generators()),
                }),
            );
            if lambda.order() <= 64 {
                let order = lambda.order();
                let mut mul = vec![0usize; order * order];
                for p in 0..order {
                    for q in 0..order {
                        mul[p * order + q] = lambda.product(p, q);
                    }
                }
                GroupTable::from_flat(order, mul).map_err(usage)?;
                report.pass("group-axioms");
            }
        }
    }
    Ok(report)
}

fn run_rep(cmd: &RepCmd, common: &CommonArgs, report: &mut RunReport) -> Result<(), Usage> {
    let brace = load_brace(common, report)?;
    let budget = resolve_budget(common.budget)?;
    match cmd {
        RepCmd::Check { rep, .. } => {
            let data = load_rep_data(rep, &brace, report)?;
            relation_verdicts(&brace, &data, report);
        }
        RepCmd::Analyze { rep, .. } => {
            let data = load_rep_data(rep, &brace, report)?;
            let rep = BraceRepresentation::new(&brace, data).map_err(usage)?;
            let module = rep.to_group_module();
            let irreducible = is_irreducible(&module, &budget).map_err(budget_usage)?;
            let mut detail = json!({"irreducible": irreducible, "dim": module.dim()});
            if !irreducible {
                if let Some(sub) = some_proper_submodule(&module, &budget) {
                    detail["proper_submodule"] = json!(sub);
                }
            }
            report.pass_with("irreducible", detail);
            let indecomposable = is_indecomposable(&module, &budget).map_err(budget_usage)?;
            report.pass_with("indecomposable", json!(indecomposable));
            let socle = socle_and_semisimplicity(&module, &budget).map_err(budget_usage)?;
            report.pass_with(
                "semisimple",
                json!({
                    "semisimple": socle.semisimple,
                    "radical_dim": socle.radical_dim,
                    "socle_dim": socle.socle.dim(),
                }),
            );
        }
        RepCmd::Regular { modulus, .. } => {
            let rep = regular_representation(&brace, *modulus).map_err(usage)?;
            let file: Value =
                serde_json::from_str(&fileio::rep_json(rep.data())).map_err(usage)?;
            report.pass_with("regular-representation", file);
        }
        RepCmd::Clifford { rep, ideal, .. } => {
            let data = load_rep_data(rep, &brace, report)?;
            let rep = BraceRepresentation::new(&brace, data).map_err(usage)?;
            let members = parse_ideal_spec(ideal, &brace)?;
            clifford_verdicts(&rep, &members, &budget, report)?;
        }
        RepCmd::Equiv { rep, other, .. } => {
            let first = load_rep_data(rep, &brace, report)?;
            let second = load_rep_data(other, &brace, report)?;
            let first = BraceRepresentation::new(&brace, first).map_err(usage)?;
            let second = BraceRepresentation::new(&brace, second).map_err(usage)?;
            match are_equivalent(&first, &second, &budget).map_err(budget_usage)? {
                Some(intertwiner) => report.pass_with(
                    "equivalent",
                    json!({"equivalent": true, "intertwiner": matrix_json(&intertwiner)}),
                ),
                None => report.pass_with("equivalent", json!({"equivalent": false})),
            }
        }
        RepCmd::Simples { modulus, .. } => {
            let simples = enumerate_simples(&brace, *modulus, &budget).map_err(budget_usage)?;
            let dims: Vec<usize> = simples.iter().map(|m| m.dim()).collect();
            report.pass_with(
                "simple-modules",
                json!({"count": dims.len(), "dims": dims}),
            );
            let bound = brace.order() * brace.order();
            match dims.iter().find(|&&d| d > bound) {
                None => report.pass("degree-bound"),
                Some(&d) => report.fail("degree-bound", json!({"dim": d, "bound": bound})),
            }
        }
        RepCmd::RightRegular { .. } => match check_right_regular(&brace) {
            Verdict::Holds => report.pass("right-regular"),
            Verdict::Violated((a, b, c)) => {
                report.fail("right-regular", json!({"a": a, "b": b, "c": c}));
            }
        },
        RepCmd::CharInvariance { values, .. } => {
            let chi: Vec<u32> = values
                .split(',')
                .map(|v| v.trim().parse::<u32>())
                .collect::<Result<_, _>>()
                .map_err(|e| Usage(format!("--values must be comma-separated integers: {e}")))?;
            match character_invariance(&brace, &chi).map_err(usage)? {
                Verdict::Holds => report.pass("character-invariance"),
                Verdict::Violated((a, b)) => report.fail(
                    "character-invariance",
                    json!({
                        "a": a,
                        "b": b,
                        "lambda_op": brace.lambda_op(a, b),
                        "chi_at_image": chi[brace.lambda_op(a, b)],
                        "chi_at_b": chi[b],
                    }),
                ),
            }
        }
    }
    Ok(())
}

/// Runs the full brace verification, mirroring its check order so every
/// verdict reported as passing was actually reached.
fn verify_verdicts(dot: &[Vec<usize>], circ: &[Vec<usize>], report: &mut RunReport) {
    match SkewBrace::verify(dot, circ) {
        Ok(brace) => {
            report.pass("group-axioms-dot");
            report.pass("group-axioms-circ");
            report.pass("shared-identity");
            report.pass("brace-relation");
            report.pass_with("order", json!(brace.order()));
        }
        Err(BraceError::NotAGroup { side, reason }) => {
            if side == Side::Circ {
                report.pass("group-axioms-dot");
            }
            report.fail(
                format!("group-axioms-{side}"),
                json!({"defect": reason.to_string()}),
            );
        }
        Err(BraceError::IdentityMismatch {
            dot_identity,
            circ_identity,
        }) => {
            report.pass("group-axioms-dot");
            report.pass("group-axioms-circ");
            report.fail(
                "shared-identity",
                json!({"dot_identity": dot_identity, "circ_identity": circ_identity}),
            );
        }
        Err(BraceError::BraceRelationViolation { a, b, c }) => {
            report.pass("group-axioms-dot");
            report.pass("group-axioms-circ");
            report.pass("shared-identity");
            report.fail("brace-relation", json!({"a": a, "b": b, "c": c}));
        }
        Err(other) => {
            report.fail("verify", json!({"error": other.to_string()}));
        }
    }
}

/// Staged verdicts for `rep check`: each side's homomorphism property,
/// then the compatibility relation, with matrices in every witness.
fn relation_verdicts(brace: &SkewBrace, data: &RepData, report: &mut RunReport) {
    match check_relation(brace, data) {
        Ok(Verdict::Holds) => {
            report.pass("beta-homomorphism");
            report.pass("rho-homomorphism");
            report.pass("compatibility-relation");
        }
        Ok(Verdict::Violated((a, b))) => {
            report.pass("beta-homomorphism");
            report.pass("rho-homomorphism");
            let image = brace.lambda_op(a, b);
            report.fail(
                "compatibility-relation",
                json!({
                    "a": a,
                    "b": b,
                    "lambda_op": image,
                    "rho_a_beta_b": matrix_json(&data.rho(a).mul(data.beta(b))),
                    "beta_image_rho_a": matrix_json(&data.beta(image).mul(data.rho(a))),
                }),
            );
        }
        Err(crate::rep::RepError::NotUnital { side }) => {
            report.fail(
                check_name_for(side),
                json!({"identity_matrix": false, "element": brace.identity()}),
            );
        }
        Err(crate::rep::RepError::NotAHomomorphism { side, a, b }) => {
            let (assigned, computed, product) = match side {
                Side::Dot => {
                    let p = brace.dot(a, b);
                    (data.beta(p), data.beta(a).mul(data.beta(b)), p)
                }
                Side::Circ => {
                    let p = brace.circ(a, b);
                    (data.rho(p), data.rho(a).mul(data.rho(b)), p)
                }
            };
            report.fail(
                check_name_for(side),
                json!({
                    "a": a,
                    "b": b,
                    "product": product,
                    "assigned": matrix_json(assigned),
                    "computed": matrix_json(&computed),
                }),
            );
        }
        Err(other) => {
            report.fail("rep-check", json!({"error": other.to_string()}));
        }
    }
}

fn check_name_for(side: Side) -> &'static str {
    match side {
        Side::Dot => "beta-homomorphism",
        Side::Circ => "rho-homomorphism",
    }
}

fn clifford_verdicts(
    rep: &BraceRepresentation,
    members: &[usize],
    budget: &AnalysisBudget,
    report: &mut RunReport,
) -> Result<(), Usage> {
    let decomposition = clifford_decompose(rep, members, budget).map_err(budget_usage)?;
    let components: Vec<Value> = decomposition
        .components
        .iter()
        .map(|c| {
            json!({
                "dim": c.basis.dim(),
                "simple_dim": c.simple_dim,
                "multiplicity": c.multiplicity,
                "basis": c.basis.rows(),
            })
        })
        .collect();
    report.pass_with(
        "components",
        json!({
            "count": components.len(),
            "components": components,
            "permutations": decomposition.element_permutations,
        }),
    );
    for (name, holds) in [
        ("transitive", decomposition.transitive),
        ("equal-multiplicities", decomposition.multiplicities_equal),
        ("equal-dimensions", decomposition.simple_dims_equal),
    ] {
        if holds {
            report.pass(name);
        } else {
            report.fail(name, json!({"holds": false}));
        }
    }
    match check_lambda_subgroup_normal(rep.brace(), members).map_err(usage)? {
        Verdict::Holds => report.pass("ideal-normal-in-lambda"),
        Verdict::Violated(w) => {
            report.fail("ideal-normal-in-lambda", json!({"g": w.g, "s": w.s}));
        }
    }
    Ok(())
}

fn load_tables(
    common: &CommonArgs,
    report: &mut RunReport,
) -> Result<(Vec<Vec<usize>>, Vec<Vec<usize>>), Usage> {
    match (&common.catalog, &common.file) {
        (Some(spec), None) => {
            let brace = catalog::from_spec(spec).map_err(usage)?;
            report.add_input(format!("catalog:{spec}"), fileio::brace_json(&brace).as_bytes());
            Ok((brace.dot_table(), brace.circ_table()))
        }
        (None, Some(path)) => {
            let bytes = std::fs::read(path)
                .map_err(|e| Usage(format!("cannot read {}: {e}", path.display())))?;
            let text = String::from_utf8(bytes.clone())
                .map_err(|_| Usage(format!("{} is not UTF-8", path.display())))?;
            let tables = fileio::parse_brace_tables(&text)
                .map_err(|e| Usage(format!("{}: {e}", path.display())))?;
            report.add_input(path.display().to_string(), &bytes);
            Ok(tables)
        }
        _ => Err(Usage(
            "exactly one of --catalog or --file is required".into(),
        )),
    }
}

fn load_brace(common: &CommonArgs, report: &mut RunReport) -> Result<SkewBrace, Usage> {
    let (dot, circ) = load_tables(common, report)?;
    SkewBrace::verify(&dot, &circ)
        .map_err(|e| Usage(format!("input is not a skew brace: {e}")))
}

fn load_rep_data(
    path: &Path,
    brace: &SkewBrace,
    report: &mut RunReport,
) -> Result<RepData, Usage> {
    let bytes = std::fs::read(path)
        .map_err(|e| Usage(format!("cannot read {}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| Usage(format!("{} is not UTF-8", path.display())))?;
    let data = fileio::parse_rep_data(&text).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    if data.elements() != brace.order() {
        return Err(Usage(format!(
            "order mismatch: the brace has {} elements but {} assigns matrices to {}",
            brace.order(),
            path.display(),
            data.elements()
        )));
    }
    report.add_input(path.display().to_string(), &bytes);
    Ok(data)
}

fn parse_ideal_spec(spec: &str, brace: &SkewBrace) -> Result<Vec<usize>, Usage> {
    match spec {
        "derived" => Ok(brace.derived_ideal().map_err(usage)?.members().to_vec()),
        "all" => Ok((0..brace.order()).collect()),
        list => list
            .split(',')
            .map(|v| {
                v.trim()
                    .parse::<usize>()
                    .map_err(|e| Usage(format!("--ideal must be comma-separated indices, `derived`, or `all`: {e}")))
            })
            .collect(),
    }
}

fn resolve_budget(flag: Option<u64>) -> Result<AnalysisBudget, Usage> {
    if let Some(limit) = flag {
        return Ok(AnalysisBudget::uniform(limit));
    }
    match std::env::var(BUDGET_ENV_VAR) {
        Ok(text) => {
            let limit: u64 = text.parse().map_err(|_| {
                Usage(format!("{BUDGET_ENV_VAR} must be an integer, got {text:?}"))
            })?;
            Ok(AnalysisBudget::uniform(limit))
        }
        Err(_) => Ok(AnalysisBudget::default()),
    }
}

fn usage<E: std::fmt::Display>(e: E) -> Usage {
    Usage(e.to_string())
}

/// Budget exhaustion is an operational limit, not a mathematical verdict,
/// so it surfaces as a usage error pointing at `--budget`.
fn budget_usage(e: AnalysisError) -> Usage {
    match e {
        AnalysisError::BudgetExceeded { needed, budget } => Usage(format!(
            "analysis budget exceeded (needed {needed}, budget {budget}); raise --budget or {BUDGET_ENV_VAR}"
        )),
        other => Usage(other.to_string()),
    }
}

/// Best-effort witness for reducibility; budget failures just omit it.
fn some_proper_submodule(
    module: &crate::rep::GroupModule,
    budget: &AnalysisBudget,
) -> Option<Vec<Vec<u32>>> {
    if let Ok(minimals) = minimal_submodules(module, budget) {
        if let Some(first) = minimals.first() {
            if first.dim() < module.dim() {
                return Some(first.rows().to_vec());
            }
        }
    }
    let socle = socle_and_semisimplicity(module, budget).ok()?;
    if socle.socle.dim() < module.dim() {
        return Some(socle.socle.rows().to_vec());
    }
    None
}

fn matrix_json(m: &Matrix) -> Value {
    let rows: Vec<Vec<u32>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j)).collect())
        .collect();
    json!(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_line(line: &str) -> i32 {
        run(line.split_whitespace().map(str::to_string))
    }

    #[test]
    fn verify_and_structure_commands_succeed_on_catalog_braces() {
        assert_eq!(run_line("bracerep brace verify --catalog trivial:cyclic:1"), 0);
        assert_eq!(
            run_line("bracerep brace verify --catalog semidirect_p2:3 --format json"),
            0
        );
        assert_eq!(run_line("bracerep brace ideals --catalog unipotent_p2:2"), 0);
        assert_eq!(run_line("bracerep brace star --catalog semidirect_p2:3"), 0);
        assert_eq!(run_line("bracerep brace quotient --catalog semidirect_p2:3"), 0);
        assert_eq!(
            run_line("bracerep brace lambda-group --catalog trivial:cyclic:2"),
            0
        );
    }

    #[test]
    fn mathematical_failures_exit_one() {
        assert_eq!(
            run_line("bracerep rep right-regular --catalog semidirect_p2:3"),
            1
        );
        assert_eq!(
            run_line("bracerep rep right-regular --catalog trivial:sym:3"),
            0
        );
    }

    #[test]
    fn usage_problems_exit_two() {
        assert_eq!(run_line("bracerep brace verify"), 2);
        assert_eq!(run_line("bracerep brace verify --catalog nope:7"), 2);
        assert_eq!(run_line("bracerep brace verify --file /no/such/file.json"), 2);
        assert_eq!(run_line("bracerep nonsense"), 2);
        assert_eq!(
            run_line("bracerep rep simples --catalog trivial:sym:4 --modulus 5"),
            2
        );
    }

    #[test]
    fn simples_and_analysis_run_end_to_end() {
        assert_eq!(
            run_line("bracerep rep simples --catalog trivial:cyclic:2 --modulus 2 --format json"),
            0
        );
        assert_eq!(
            run_line("bracerep rep char-invariance --catalog trivial:cyclic:2 --values 1,1"),
            0
        );
        assert_eq!(
            run_line("bracerep rep char-invariance --catalog semidirect_p2:3 --values 1,2,3,4,5,6"),
            1
        );
    }
}
