//! `gkm`: command-line access to the GKM graph toolkit. Every command
//! prints one JSON document on standard output.
//!
//! Exit codes: 0 on success, 1 when a validation or assumption check fails
//! (the failing check is part of the JSON), 2 on usage errors.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use gkm::arrangements::{fixture_by_name, gen_klm, KlmSpec};
use gkm::cohomology_engine::{cohomology_basis, verify_iso, VerifyOptions};
use gkm::gkm_graph::{load_graph, serialize_graph, validate_axial, GkmGraph};
use gkm::hyperplane_geometry::{all_hyperplanes, check_assumptions, orient, Halfspace, DEFAULT_SUBSET_CAP};
use gkm::par::Exec;
use gkm::shelling_basis::{
    basis_names, express_in_basis, search_budget_from_env, structure_constants, ShellingBasis,
};
use gkm::gkm_graph::pair_decomposition;
use gkm::Error;

#[derive(Parser)]
#[command(name = "gkm", version, about = "Exact cohomology of GKM graphs modeled on T*C^n")]
struct Cli {
    /// Run every computation on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Graph file; `-` or no argument reads standard input.
    file: Option<PathBuf>,
    /// Built-in fixture, e.g. `fig7_pentagon` or `local_model(2)`.
    #[arg(long, conflicts_with = "file")]
    fixture: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Run all axiom checks on a graph.
    Validate(Input),
    /// List hyperplanes and their oriented halfspaces.
    Hyperplanes(Input),
    /// Check both assumptions of the presentation theorem.
    Assumptions {
        #[command(flatten)]
        input: Input,
        /// Maximum number of hyperplane families examined for assumption (2).
        #[arg(long, default_value_t = DEFAULT_SUBSET_CAP)]
        subset_cap: u64,
    },
    /// Graded ranks and bases of the graph cohomology from the congruence solver.
    Cohomology {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        max_degree: u32,
        /// Work on the x-forgetful graph.
        #[arg(long)]
        forgetful: bool,
    },
    /// Compare the solver with the presentation ring degree by degree.
    VerifyIso {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        max_degree: u32,
        #[arg(long)]
        forgetful: bool,
        /// Compare ranks even when the assumptions fail.
        #[arg(long)]
        ignore_assumptions: bool,
    },
    /// Shelling of the hyperplane complex and the module basis it gives.
    Basis(Input),
    /// Products of basis elements expanded in the basis.
    StructureConstants {
        #[command(flatten)]
        input: Input,
        /// Reduce to ordinary cohomology (all t set to 0).
        #[arg(long)]
        ordinary: bool,
    },
    /// Generate a graph.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Expand a polynomial in the hyperplane classes in the module basis.
    Express {
        #[command(flatten)]
        input: Input,
        /// Polynomial over t1..tn and the hyperplane names, e.g. `Z1^2`.
        #[arg(long)]
        poly: String,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// Arrangement of k horizontal, l vertical and m diagonal lines.
    Klm {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
        /// Write the graph here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Why a command stopped early.
enum Failure {
    /// Bad invocation or unreadable input (exit 2).
    Usage(String),
    /// A check failed; the report is printed (exit 1).
    Check(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Check(error_json(&e))
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse(_) => "parse",
        Error::Structural(_) => "structural",
        Error::NoValidConnection { .. } => "no_valid_connection",
        Error::AmbiguousConnection { .. } => "ambiguous_connection",
        Error::NoPartner { .. } => "no_partner",
        Error::PairNotPreserved { .. } => "pair_not_preserved",
        Error::ClosureFailure { .. } => "closure_failure",
        Error::AssumptionOneViolation { .. } => "assumption (1)",
        Error::CongruenceFailure { .. } => "congruence_failure",
        Error::AssumptionViolation(_) => "assumption_violation",
        Error::PurityFailure(_) => "purity_failure",
        Error::NotShellable { .. } => "not_shellable",
        Error::InvalidShelling(_) => "invalid_shelling",
        Error::InconsistentLambda { .. } => "inconsistent_lambda",
        Error::InexactDivision { .. } => "inexact_division",
        Error::UnknownFixture(_) => "unknown_fixture",
        Error::InvalidHint(_) => "invalid_hint",
        Error::Algebra(_) => "algebra",
    }
}

fn error_json(e: &Error) -> Value {
    json!({ "error": { "kind": error_kind(e), "message": e.to_string() } })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = if cli.sequential { Exec::Sequential } else { Exec::Parallel };
    let (value, code) = match run(cli.command, exec) {
        Ok(Some(v)) => (Some(v), 0),
        Ok(None) => (None, 0),
        Err(Failure::Check(v)) => (Some(v), 1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            (None, 2)
        }
    };
    if let Some(v) = value {
        println!("{}", serde_json::to_string_pretty(&v).expect("json value serializes"));
    }
    ExitCode::from(code)
}

fn read_input(input: &Input) -> Result<String, Failure> {
    match &input.file {
        Some(path) if path.as_os_str() != "-" => {
            std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(format!("cannot read standard input: {e}")))?;
            Ok(s)
        }
    }
}

/// Loads the graph without validating it.
fn load(input: &Input) -> Result<GkmGraph, Failure> {
    if let Some(name) = &input.fixture {
        return fixture_by_name(name).map_err(|e| match e {
            Error::UnknownFixture(_) => Failure::Usage(e.to_string()),
            other => other.into(),
        });
    }
    Ok(load_graph(&read_input(input)?)?)
}

/// Loads the graph and refuses it unless every axiom check passes.
fn load_valid(input: &Input) -> Result<GkmGraph, Failure> {
    let g = load(input)?;
    let report = validate_axial(&g);
    if !report.is_valid() {
        return Err(Failure::Check(json!({ "valid": false, "checks": report.checks })));
    }
    Ok(g)
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report serializes")
}

fn run(command: Command, exec: Exec) -> Result<Option<Value>, Failure> {
    match command {
        Command::Validate(input) => {
            let g = match load(&input) {
                Ok(g) => g,
                Err(Failure::Check(mut v)) => {
                    v["valid"] = json!(false);
                    return Err(Failure::Check(v));
                }
                Err(e) => return Err(e),
            };
            let report = validate_axial(&g);
            let v = json!({
                "valid": report.is_valid(),
                "rank": g.rank(),
                "vertices": g.num_vertices(),
                "edges": g.edges().count(),
                "legs": g.num_legs(),
                "checks": report.checks,
            });
            if report.is_valid() {
                Ok(Some(v))
            } else {
                Err(Failure::Check(v))
            }
        }
        Command::Hyperplanes(input) => {
            let g = load_valid(&input)?;
            Ok(Some(hyperplanes_json(&g)?))
        }
        Command::Assumptions { input, subset_cap } => {
            let g = load_valid(&input)?;
            let pairs = pair_decomposition(&g)?;
            let hyperplanes = all_hyperplanes(&g, &pairs)?;
            let report = check_assumptions(&g, &pairs, &hyperplanes, subset_cap);
            let mut failed = Vec::new();
            if !report.assumption1_holds() {
                failed.push("assumption (1)");
            }
            if !report.assumption2_holds() {
                failed.push("assumption (2)");
            }
            let mut v = to_value(&report);
            v["assumption1_holds"] = json!(report.assumption1_holds());
            v["assumption2_holds"] = json!(report.assumption2_holds());
            v["holds"] = json!(report.holds());
            v["failed"] = json!(failed);
            if report.holds() {
                Ok(Some(v))
            } else {
                Err(Failure::Check(v))
            }
        }
        Command::Cohomology { input, max_degree, forgetful } => {
            let g = load_valid(&input)?;
            let degrees: Vec<u32> = (0..=max_degree).collect();
            let pieces = gkm::par::map(exec, &degrees, |&k| cohomology_basis(&g, k, forgetful));
            let mut out = serde_json::Map::new();
            for (k, piece) in degrees.iter().zip(pieces) {
                let basis: Vec<_> = piece.classes().iter().map(|c| c.to_json(&g)).collect();
                out.insert(k.to_string(), json!({ "rank": piece.rank(), "basis": basis }));
            }
            Ok(Some(json!({ "forgetful": forgetful, "max_degree": max_degree, "degrees": out })))
        }
        Command::VerifyIso { input, max_degree, forgetful, ignore_assumptions } => {
            let g = load_valid(&input)?;
            let options = VerifyOptions { exec, require_assumptions: !ignore_assumptions };
            let report = verify_iso(&g, max_degree, forgetful, options)?;
            let mut v = to_value(&report);
            v["deficit_degrees"] = json!(report.deficit_degrees());
            if report.passed {
                Ok(Some(v))
            } else {
                Err(Failure::Check(v))
            }
        }
        Command::Basis(input) => {
            let g = load_valid(&input)?;
            let sb = ShellingBasis::build(&g, search_budget_from_env())?;
            Ok(Some(basis_json(&sb)))
        }
        Command::StructureConstants { input, ordinary } => {
            let g = load_valid(&input)?;
            let sb = ShellingBasis::build(&g, search_budget_from_env())?;
            Ok(Some(to_value(&structure_constants(&sb, ordinary, exec)?)))
        }
        Command::Express { input, poly } => {
            let g = load_valid(&input)?;
            let sb = ShellingBasis::build(&g, search_budget_from_env())?;
            let f = sb.parse(&poly).map_err(|e| Failure::Usage(format!("cannot parse --poly: {e}")))?;
            let expansion = express_in_basis(&sb, &f)?;
            Ok(Some(json!({ "poly": f.to_string(), "expansion": expansion.to_json(&sb) })))
        }
        Command::Gen { family: GenFamily::Klm { k, l, m, output } } => {
            let spec = KlmSpec::new(k, l, m).map_err(|e| Failure::Usage(e.to_string()))?;
            let text = serialize_graph(&gen_klm(spec)?);
            match output {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
                    Ok(None)
                }
                None => {
                    print!("{text}");
                    Ok(None)
                }
            }
        }
    }
}

fn halfspace_json(g: &GkmGraph, h: &Halfspace) -> Value {
    let names = |vs: Vec<usize>| vs.into_iter().map(|v| g.vertex_id(v).to_string()).collect::<Vec<_>>();
    let normals: serde_json::Map<String, Value> = h
        .boundary_vertices()
        .into_iter()
        .map(|v| (g.vertex_id(v).to_string(), json!(g.dart_id(h.normal(v).expect("boundary vertex has a normal")))))
        .collect();
    json!({ "vertices": names(h.vertices()), "normals": normals })
}

fn hyperplanes_json(g: &GkmGraph) -> Result<Value, Failure> {
    let pairs = pair_decomposition(g)?;
    let hyperplanes = all_hyperplanes(g, &pairs)?;
    let list: Vec<Value> = hyperplanes
        .iter()
        .map(|l| {
            let mut v = json!({
                "name": l.name,
                "vertices": l.vertices.iter().map(|&p| g.vertex_id(p)).collect::<Vec<_>>(),
                "darts": l.darts.iter().map(|&d| g.dart_id(d)).collect::<Vec<_>>(),
            });
            match orient(g, &pairs, l) {
                Ok(o) => {
                    v["positive"] = halfspace_json(g, &o.positive);
                    v["negative"] = halfspace_json(g, &o.negative);
                }
                Err(e) => v["halfspaces"] = error_json(&e)["error"].clone(),
            }
            v
        })
        .collect();
    Ok(json!({ "hyperplanes": list }))
}

fn basis_json(sb: &ShellingBasis) -> Value {
    let names = sb.hyperplane_names();
    let minimal: Vec<Vec<&str>> = sb.shelling.minimal.iter().map(|mu| mu.iter().map(|&i| names[i].as_str()).collect()).collect();
    let order: Vec<&str> = sb.shelling.order.iter().map(|&p| sb.complex.facet_ids[p].as_str()).collect();
    let degrees: Vec<usize> = sb.shelling.minimal.iter().map(Vec::len).collect();
    json!({
        "shelling": order,
        "minimal_faces": minimal,
        "basis": basis_names(sb),
        "degrees": degrees,
        "hyperplanes": sb.orientation,
    })
}
