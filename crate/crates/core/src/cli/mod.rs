//! Command-line driver.

mod error;

pub use error::CliError;

use crate::embedpipe::{
    balance_by_system, involution_system, is_balanced, rescaling_trick, run_pipeline, Embedding, EmbeddingJson,
    PipelineOptions, RescalingOutcome,
};
use crate::exactfield::text::format_complex;
use crate::fixtures::{fixture, ThetaSpec, FIXTURE_NAMES};
use crate::liealg::{build_by_name, build_chevalley, LieAlgebraTable};
use crate::polysolve::{groebner, parse_poly, solve, PolySystemJson, SolutionSetJson};
use crate::realform::{compact_form, real_form_from_involution};
use crate::rootsys::RootSystem;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;
use std::ffi::OsString;
use std::path::{Path, PathBuf};

/// Target algebras above this dimension need `--allow-slow` in the pipeline.
pub const SLOW_TARGET_DIM: usize = 52;

#[derive(Parser, Debug)]
#[command(name = "realforms", version, about = "Real forms of semisimple Lie algebras containing a given real subalgebra")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build the Chevalley basis multiplication table of a semisimple algebra.
    Build {
        /// Type name such as A3, G2 or A1+B2.
        #[arg(long = "type", conflicts_with = "cartan", required_unless_present = "cartan")]
        type_name: Option<String>,
        /// Cartan matrix as JSON, entry (i, j) = <α_i, α_j^∨>.
        #[arg(long)]
        cartan: Option<String>,
        /// Read the Cartan matrix with the opposite convention (entry (i, j) = <α_j, α_i^∨>).
        #[arg(long, requires = "cartan")]
        transposed: bool,
        /// Check the Jacobi identity on all basis triples regardless of rank.
        #[arg(long)]
        full_jacobi: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Report whether an embedding satisfies b = conj(a) on every branching pair.
    CheckBalanced {
        embedding: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Produce a balanced embedding equivalent to the input.
    Balance {
        embedding: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Print the polynomial system Q1 ∪ Q2 for the involutions of the target.
    Involutions {
        embedding: PathBuf,
        theta: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Classify the real form of an algebra given by an involution.
    Classify {
        theta: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Run the full pipeline: balance, solve, classify.
    Pipeline {
        embedding: PathBuf,
        theta: PathBuf,
        /// Comma-separated variable order for the Gröbner basis, largest first.
        #[arg(long, value_delimiter = ',')]
        var_order: Option<Vec<String>>,
        /// Allow targets larger than F4.
        #[arg(long)]
        allow_slow: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Add polynomials to a Gröbner basis, recompute it and solve.
    CaseSplit {
        /// JSON file with "variables" and "polynomials".
        gb: PathBuf,
        /// Polynomials to add, in the basis variables.
        #[arg(required = true)]
        polys: Vec<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Write a built-in fixture (embedding and involution) as JSON.
    Fixture {
        /// Fixture name; omit to list the available ones.
        name: Option<String>,
        /// Directory for NAME.json and NAME.theta.json.
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(cmd: &Command) -> Result<(), CliError> {
    match cmd {
        Command::Build { type_name, cartan, transposed, full_jacobi, out } => {
            let alg = match (type_name, cartan) {
                (Some(name), _) => build_chevalley(&RootSystem::from_name(name).map_err(|e| CliError::Input(e.to_string()))?, *full_jacobi)?,
                (None, Some(text)) => {
                    let mut c: Vec<Vec<i64>> = serde_json::from_str(text)
                        .map_err(|source| CliError::Json { path: "--cartan".into(), source })?;
                    if *transposed {
                        c = transpose(&c);
                    }
                    let rs = RootSystem::new(c).map_err(|e| CliError::Input(e.to_string()))?;
                    build_chevalley(&rs, *full_jacobi)?
                }
                (None, None) => return Err(CliError::Input("one of --type or --cartan is required".into())),
            };
            emit(out, &alg.to_json())
        }
        Command::CheckBalanced { embedding, out } => {
            let emb = load_embedding(embedding)?;
            let chk = is_balanced(&emb)?;
            let rs = emb.target.root_system();
            let witnesses: Vec<_> = chk
                .witnesses
                .iter()
                .map(|(i, beta, mu)| {
                    json!({
                        "simple_root": i + 1,
                        "target_root": rs.root(*beta),
                        "mu": mu.as_ref().map(format_complex),
                    })
                })
                .collect();
            emit(out, &json!({ "balanced": chk.balanced, "witnesses": witnesses }))
        }
        Command::Balance { embedding, out } => {
            let emb = load_embedding(embedding)?;
            let (balanced, method) = if is_balanced(&emb)?.balanced {
                (emb, "already balanced")
            } else {
                match rescaling_trick(&emb)? {
                    RescalingOutcome::Success { embedding, .. } => (embedding, "rescaling"),
                    RescalingOutcome::Failure { .. } => (balance_by_system(&emb)?, "balancing system"),
                }
            };
            emit(out, &json!({ "method": method, "embedding": balanced.to_json() }))
        }
        Command::Involutions { embedding, theta, out } => {
            let emb = load_embedding(embedding)?;
            let th = load_theta(theta, &emb.source)?;
            let sys = involution_system(&emb, &th)?;
            let js = PolySystemJson::new(&sys.variables, &sys.polynomials());
            emit(out, &json!({ "intertwiner_dim": sys.dim(), "q1": sys.q1.len(), "q2": sys.q2.len(), "system": js }))
        }
        Command::Classify { theta, out } => {
            let spec: ThetaSpec = read_json(theta)?;
            let alg = build_by_name(spec.algebra())?;
            let th = spec.build(&alg)?;
            let cd = real_form_from_involution(&alg, &compact_form(&alg), &th)?;
            emit(out, &cd.report)
        }
        Command::Pipeline { embedding, theta, var_order, allow_slow, out } => {
            let emb = load_embedding(embedding)?;
            if emb.target.dim() > SLOW_TARGET_DIM && !allow_slow {
                return Err(CliError::Input(format!(
                    "target {} has dimension {}; pass --allow-slow to run it",
                    emb.target.type_name(),
                    emb.target.dim()
                )));
            }
            let th = load_theta(theta, &emb.source)?;
            let opts = PipelineOptions { var_order: var_order.clone(), ..PipelineOptions::default() };
            let res = run_pipeline(&emb, &th, &opts)?;
            for w in &res.warnings {
                eprintln!("warning: {w}");
            }
            emit(out, &res.to_json())
        }
        Command::CaseSplit { gb, polys, out } => {
            let sys: PolySystemJson = read_json(gb)?;
            let mut all = sys.parse()?;
            for p in polys {
                all.push(parse_poly(p, &sys.variables)?);
            }
            let basis = groebner(&all)?;
            let solutions = solve(&basis, sys.variables.len())?;
            let js = PolySystemJson::new(&sys.variables, &basis);
            emit(
                out,
                &json!({
                    "variables": js.variables,
                    "polynomials": js.polynomials,
                    "solutions": SolutionSetJson::new(&solutions, &sys.variables),
                }),
            )
        }
        Command::Fixture { name: None, .. } => {
            for name in FIXTURE_NAMES {
                let fx = fixture(name)?;
                println!("{:<32}{}{}", name, fx.description, if fx.slow { " (slow)" } else { "" });
            }
            Ok(())
        }
        Command::Fixture { name: Some(name), dir } => {
            let fx = fixture(name)?;
            if fx.slow {
                eprintln!("note: the pipeline on {name} is slow and needs --allow-slow");
            }
            let dir = dir.clone().unwrap_or_else(|| PathBuf::from("."));
            write_json(&dir.join(format!("{name}.json")), &fx.embedding.to_json())?;
            write_json(&dir.join(format!("{name}.theta.json")), &fx.theta)
        }
    }
}

fn transpose(c: &[Vec<i64>]) -> Vec<Vec<i64>> {
    (0..c.first().map_or(0, |r| r.len())).map(|j| c.iter().map(|r| r.get(j).copied().unwrap_or(0)).collect()).collect()
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.into(), source })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json { path: path.display().to_string(), source })
}

fn load_embedding(path: &Path) -> Result<Embedding, CliError> {
    let js: EmbeddingJson = read_json(path)?;
    Ok(Embedding::from_json(&js)?)
}

fn load_theta(path: &Path, source: &LieAlgebraTable) -> Result<crate::realform::Involution, CliError> {
    let spec: ThetaSpec = read_json(path)?;
    let want = build_by_name(spec.algebra())?;
    if want.root_system().cartan_matrix() != source.root_system().cartan_matrix() {
        return Err(CliError::Input(format!(
            "involution is for {} but the embedding source is {}",
            spec.algebra(),
            source.type_name()
        )));
    }
    Ok(spec.build(source)?)
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    std::fs::write(path, to_pretty(value)).map_err(|source| CliError::Write { path: path.into(), source })
}

fn emit<T: Serialize>(out: &Output, value: &T) -> Result<(), CliError> {
    match &out.out {
        Some(p) => write_json(p, value),
        None => {
            print!("{}", to_pretty(value));
            Ok(())
        }
    }
}
