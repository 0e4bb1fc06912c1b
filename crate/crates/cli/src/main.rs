//! `necklace`: command-line front end for the necklace Hopf algebra library.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use necklace::expr::{parse_element, parse_heighted};
use necklace::format::render_lincomb;
use necklace::heights::phi_w;
use necklace::hopf::{antipode, coproduct, counit, star};
use necklace::rep::{check_injectivity, rho_element, weyl_symmetrize, DimVector, RepSpace};
use necklace::suite::{run_suite, Suite, SuiteConfig};
use necklace::symalg::lie::{bracket_l, cobracket_l};
use necklace::{parse_quiver, DoubleQuiver, Error};
use serde_json::{json, Value};

use output::{counterexample_json, diffop_json, hpoly_json, lincomb_json, rep_poly_json};

#[derive(Parser)]
#[command(name = "necklace", version)]
#[command(about = "Exact computations in the necklace Hopf algebra of a quiver")]
struct Cli {
    /// Quiver file (`vertices: ...` / `edges: name: tail -> head, ...`)
    #[arg(short, long, global = true)]
    quiver: Option<PathBuf>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for the enumeration kernels
    #[arg(long, global = true, env = "NECKLACE_WORKERS")]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Star product P *_h R
    Star { p: String, r: String },
    /// Coproduct Δ_h(P)
    Coprod { p: String },
    /// Antipode S(P)
    Antipode { p: String },
    /// Counit ε(P)
    Counit { p: String },
    /// Necklace Lie bracket {a, b} of combinations of single necklaces
    Bracket { a: String, b: String },
    /// Necklace cobracket δ(a)
    Cobracket { a: String },
    /// Height symmetrization Φ_W(P)
    Phiw { p: String },
    /// Trace polynomial tr_l(P)
    Trace {
        p: String,
        /// Dimension vector, one entry per vertex, e.g. `2` or `1,2`
        #[arg(long)]
        dims: String,
    },
    /// Differential operator ρ of a heighted expression such as `(e,1)(e*,2)`
    Rho {
        c: String,
        #[arg(long)]
        dims: String,
    },
    /// Weyl symmetrization of tr_l(P)
    Weyl {
        p: String,
        #[arg(long)]
        dims: String,
    },
    /// Linear independence of tr_l on basis monomials with at most `degree` edges
    Injective {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        dims: String,
        /// Idempotent factors allowed per basis monomial
        #[arg(long, default_value_t = 1)]
        max_idempotents: usize,
    },
    /// Run a check suite; exits 1 on the first counterexample
    Check {
        #[arg(value_parser = suite_name)]
        suite: Suite,
        /// Number of seeded random trials
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge bound of random elements (and of necklace enumeration when
        /// `--exhaustive` is absent)
        #[arg(long, default_value_t = 4)]
        max_edges: usize,
        /// Factor bound of random monomials
        #[arg(long, default_value_t = 3)]
        max_factors: usize,
        /// Also check every basis case with at most this many edges
        #[arg(long)]
        exhaustive: Option<usize>,
        /// Idempotent factors allowed per enumerated monomial
        #[arg(long, default_value_t = 1)]
        max_idempotents: usize,
        /// Dimension vectors (repeatable); default: all with entries 1 and 2
        #[arg(long)]
        dims: Vec<String>,
    },
}

fn suite_name(s: &str) -> Result<Suite, String> {
    Suite::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("unknown suite `{s}`; expected one of {}", names.join(", "))
    })
}

enum Failure {
    Usage(String),
    Counterexample,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn load_quiver(path: &Option<PathBuf>) -> Result<DoubleQuiver, Failure> {
    let path = path
        .as_ref()
        .ok_or_else(|| Failure::Usage("a quiver file is required (-q FILE)".into()))?;
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(DoubleQuiver::new(parse_quiver(&text)?))
}

fn parse_dims(q: &DoubleQuiver, s: &str) -> Result<DimVector, Failure> {
    let entries: Result<Vec<u32>, _> = s.split(',').map(|x| x.trim().parse::<u32>()).collect();
    let entries = entries.map_err(|_| Failure::Usage(format!("invalid dimension vector `{s}`")))?;
    Ok(DimVector::new(q, entries)?)
}

fn emit(format: Format, text: String, value: Value) {
    match format {
        Format::Text => println!("{text}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(&value).expect("serializable")),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let q = load_quiver(&cli.quiver)?;
    let q = &q;
    let fmt = cli.format;
    match &cli.command {
        Command::Star { p, r } => {
            let a = star(q, &parse_element(q, p)?, &parse_element(q, r)?);
            emit(fmt, render_lincomb(q, &a), lincomb_json(q, &a));
        }
        Command::Coprod { p } => {
            let a = coproduct(q, &parse_element(q, p)?);
            emit(fmt, render_lincomb(q, &a), lincomb_json(q, &a));
        }
        Command::Antipode { p } => {
            let a = antipode(&parse_element(q, p)?);
            emit(fmt, render_lincomb(q, &a), lincomb_json(q, &a));
        }
        Command::Counit { p } => {
            let c = counit(&parse_element(q, p)?);
            emit(fmt, c.to_string(), hpoly_json(&c));
        }
        Command::Bracket { a, b } => {
            let x = bracket_l(q, &parse_element(q, a)?, &parse_element(q, b)?)?;
            emit(fmt, render_lincomb(q, &x), lincomb_json(q, &x));
        }
        Command::Cobracket { a } => {
            let x = cobracket_l(q, &parse_element(q, a)?)?;
            emit(fmt, render_lincomb(q, &x), lincomb_json(q, &x));
        }
        Command::Phiw { p } => {
            let x = phi_w(&parse_element(q, p)?);
            emit(fmt, render_lincomb(q, &x), lincomb_json(q, &x));
        }
        Command::Trace { p, dims } => {
            let space = RepSpace::new(q, parse_dims(q, dims)?)?;
            let f = space.trace(&parse_element(q, p)?);
            emit(fmt, space.render_poly(&f), rep_poly_json(&space, &f));
        }
        Command::Rho { c, dims } => {
            let space = RepSpace::new(q, parse_dims(q, dims)?)?;
            let op = rho_element(&space, &parse_heighted(q, c)?);
            emit(fmt, space.render_op(&op), diffop_json(&space, &op));
        }
        Command::Weyl { p, dims } => {
            let space = RepSpace::new(q, parse_dims(q, dims)?)?;
            let op = weyl_symmetrize(&space, &space.trace(&parse_element(q, p)?));
            emit(fmt, space.render_op(&op), diffop_json(&space, &op));
        }
        Command::Injective {
            degree,
            dims,
            max_idempotents,
        } => {
            let space = RepSpace::new(q, parse_dims(q, dims)?)?;
            let independent = check_injectivity(&space, *degree, *max_idempotents);
            let text = if independent { "independent" } else { "dependent" };
            emit(fmt, text.into(), json!({ "independent": independent }));
        }
        Command::Check {
            suite,
            trials,
            seed,
            max_edges,
            max_factors,
            exhaustive,
            max_idempotents,
            dims,
        } => {
            let mut cfg = SuiteConfig::new(q);
            cfg.trials = *trials;
            cfg.seed = *seed;
            cfg.max_edges = *max_edges;
            cfg.max_factors = *max_factors;
            cfg.exhaustive_edges = *exhaustive;
            cfg.max_idempotents = *max_idempotents;
            if !dims.is_empty() {
                cfg.dims = dims.iter().map(|d| parse_dims(q, d)).collect::<Result<_, _>>()?;
            }
            let report = run_suite(q, *suite, &cfg);
            let value = json!({
                "suite": suite.name(),
                "cases": report.cases,
                "passed": report.result.is_ok(),
                "counterexample": report.result.as_ref().err().map(|c| counterexample_json(c)),
            });
            match &report.result {
                Ok(()) => emit(fmt, format!("{}: {} cases passed", suite.name(), report.cases), value),
                Err(c) => {
                    emit(
                        fmt,
                        format!("{}: counterexample after {} cases\n{c}", suite.name(), report.cases),
                        value,
                    );
                    return Err(Failure::Counterexample);
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Counterexample) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
