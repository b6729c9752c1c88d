//! `mcmtop` — verification, enumeration, closure, decomposition and export
//! for the degeneration topology on MCM modules over hypersurface rings.
//!
//! Exit codes: 0 all checks pass, 1 verification failure, 2 usage error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use mcmtop::catalog::{load_catalog, verify_catalog, Catalog};
use mcmtop::degen::{shipped_facts, verify_fact, FactReport};
use mcmtop::error::Error;
use mcmtop::exactalg::{HypersurfaceRing, PolyMatrix};
use mcmtop::order::{
    check_topology_axioms, closure, decompose_e, enumerate_e, export_graph, graph_to_dot,
    GeneratorRule, ModuleVector, FRONTIER_CAP,
};
use mcmtop::truncview::{default_s_max, multiplicity_oracle, ArithMode, DEFAULT_PRIME};

#[derive(Parser)]
#[command(name = "mcmtop", version, about = "Degeneration topology on MCM modules")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// Replay every shipped certificate for a ring: catalog entries,
    /// syzygy witnesses, identifications and all degeneration facts.
    Verify {
        #[arg(long)]
        ring: String,
        /// Family parameter bound for the catalog.
        #[arg(long = "Nmax", default_value_t = 6)]
        param_bound: u32,
        /// Arithmetic mode: rational, modular, or modular:<p>.
        #[arg(long)]
        mode: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the module vectors of total multiplicity d, in canonical order.
    Enumerate {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        d: usize,
        #[arg(long = "Nmax", default_value_t = 6)]
        param_bound: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bounded closure of a generator vector inside E(d).
    Closure {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        d: usize,
        /// Generator vector, e.g. "R^2" or "R + x".
        #[arg(long)]
        generator: String,
        /// Scale bound for the search.
        #[arg(long = "nmax", default_value_t = 6)]
        scale_bound: usize,
        #[arg(long = "Nmax", default_value_t = 6)]
        param_bound: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decompose E(d) into the closures of the ring's generator formula.
    Components {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        d: usize,
        #[arg(long = "nmax", default_value_t = 6)]
        scale_bound: usize,
        #[arg(long = "Nmax", default_value_t = 6)]
        param_bound: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hilbert-Samuel multiplicity of a presentation.
    Oracle {
        #[arg(long)]
        ring: String,
        /// Catalog class name to look up.
        #[arg(long, conflicts_with = "matrix")]
        class: Option<String>,
        /// Path to a file holding a presentation matrix in bracket text,
        /// e.g. [[x, y^2], [0, -x]].
        #[arg(long)]
        matrix: Option<PathBuf>,
        #[arg(long = "Nmax", default_value_t = 6)]
        param_bound: u32,
        /// Truncation bound for stabilization.
        #[arg(long)]
        smax: Option<usize>,
        #[arg(long)]
        mode: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the closure-operator axioms on E(d).
    Axioms {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        d: usize,
        #[arg(long = "nmax", default_value_t = 2)]
        scale_bound: usize,
        #[arg(long = "Nmax", default_value_t = 6)]
        param_bound: u32,
        /// Number of sampled subset pairs (on top of exhaustive checks).
        #[arg(long, default_value_t = 200)]
        pairs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the certified degeneration graph over E(d).
    Graph {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        d: usize,
        #[arg(long = "nmax", default_value_t = 2)]
        scale_bound: usize,
        #[arg(long = "Nmax", default_value_t = 6)]
        param_bound: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_mode(ring: &HypersurfaceRing, text: Option<&str>) -> Result<ArithMode, Error> {
    let mode = match text {
        None => ArithMode::default_for(ring),
        Some("rational") => ArithMode::Rational,
        Some("modular") => ArithMode::Modular(DEFAULT_PRIME),
        Some(other) => match other.strip_prefix("modular:") {
            Some(p) => ArithMode::Modular(
                p.parse()
                    .map_err(|_| Error::Config(format!("bad prime in mode `{other}`")))?,
            ),
            None => {
                return Err(Error::Config(format!(
                    "unknown mode `{other}`; expected rational, modular, or modular:<p>"
                )))
            }
        },
    };
    mode.validate()?;
    Ok(mode)
}

fn emit<T: Serialize>(value: &T, out: Option<&PathBuf>) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match out {
        Some(path) => fs::write(path, text + "\n")?,
        None => println!("{text}"),
    }
    Ok(())
}

fn emit_text(text: &str, out: Option<&PathBuf>) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifyReport {
    ring: String,
    catalog_pass: bool,
    catalog_detail: String,
    facts: Vec<FactReport>,
    pass: bool,
}

fn cmd_verify(
    ring: &str,
    param_bound: u32,
    mode: Option<&str>,
    out: Option<&PathBuf>,
) -> anyhow::Result<bool> {
    let cat = load_catalog(ring, param_bound)?;
    let mode = parse_mode(&cat.ring, mode)?;
    let (catalog_pass, catalog_detail) = match verify_catalog(&cat, mode) {
        Ok(()) => (true, String::new()),
        Err(e) => (false, e.to_string()),
    };
    let store = shipped_facts(&cat)?;
    let mut facts = Vec::new();
    let mut pass = catalog_pass;
    for fact in &store.facts {
        let report = verify_fact(&cat, fact, mode);
        pass &= report.pass;
        facts.push(report);
    }
    eprintln!(
        "catalog {ring}: {} classes, {} facts, {}",
        cat.classes.len(),
        facts.len(),
        if pass { "all checks pass" } else { "FAILURES" }
    );
    for r in &facts {
        if !r.pass {
            for c in &r.checks {
                if !c.pass {
                    eprintln!("  {}: {} — {}", r.fact_id, c.name, c.detail);
                }
            }
        }
    }
    emit(
        &VerifyReport {
            ring: ring.to_string(),
            catalog_pass,
            catalog_detail,
            facts,
            pass,
        },
        out,
    )?;
    Ok(pass)
}

#[derive(Serialize)]
struct EnumerateReport {
    ring: String,
    d: usize,
    param_bound: u32,
    members: Vec<String>,
}

fn load(ring: &str, param_bound: u32) -> Result<Catalog, Error> {
    load_catalog(ring, param_bound)
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match &cli.cmd {
        Cmd::Verify { ring, param_bound, mode, out } => {
            cmd_verify(ring, *param_bound, mode.as_deref(), out.as_ref())
        }
        Cmd::Enumerate { ring, d, param_bound, out } => {
            let cat = load(ring, *param_bound)?;
            let members = enumerate_e(&cat, *d);
            emit(
                &EnumerateReport {
                    ring: ring.clone(),
                    d: *d,
                    param_bound: *param_bound,
                    members: members.iter().map(|v| v.to_string()).collect(),
                },
                out.as_ref(),
            )?;
            Ok(true)
        }
        Cmd::Closure { ring, d, generator, scale_bound, param_bound, out } => {
            let cat = load(ring, *param_bound)?;
            let store = shipped_facts(&cat)?;
            let g = ModuleVector::parse(generator, &cat)?;
            if g.total_e(&cat)? != *d {
                return Err(Error::Config(format!(
                    "generator `{generator}` has multiplicity {}, not d = {d}",
                    g.total_e(&cat)?
                ))
                .into());
            }
            let universe = enumerate_e(&cat, *d);
            let result = closure(&g, &universe, &store, *scale_bound, FRONTIER_CAP);
            emit(&result, out.as_ref())?;
            Ok(true)
        }
        Cmd::Components { ring, d, scale_bound, param_bound, out } => {
            let cat = load(ring, *param_bound)?;
            let store = shipped_facts(&cat)?;
            let report =
                decompose_e(&cat, &store, *d, GeneratorRule::RingFormula, *scale_bound)?;
            let covered = report.fully_covered();
            emit(&report, out.as_ref())?;
            Ok(covered)
        }
        Cmd::Oracle { ring, class, matrix, param_bound, smax, mode, out } => {
            let cat = load(ring, *param_bound)?;
            let mode = parse_mode(&cat.ring, mode.as_deref())?;
            let phi = match (class, matrix) {
                (Some(name), None) => cat.get(name)?.presentation_matrix(&cat.ring),
                (None, Some(path)) => {
                    let text = fs::read_to_string(path)?;
                    PolyMatrix::parse(&text, cat.ring.vars())?
                }
                _ => {
                    return Err(
                        Error::Config("pass exactly one of --class or --matrix".into()).into()
                    )
                }
            };
            let s_max = smax.unwrap_or_else(|| default_s_max(&cat.ring));
            let report = multiplicity_oracle(&phi, &cat.ring, s_max, mode)?;
            emit(&report, out.as_ref())?;
            Ok(true)
        }
        Cmd::Axioms { ring, d, scale_bound, param_bound, pairs, seed, out } => {
            let cat = load(ring, *param_bound)?;
            let store = shipped_facts(&cat)?;
            let report =
                check_topology_axioms(&cat, &store, *d, *scale_bound, *pairs, *seed)?;
            let pass = report.pass;
            emit(&report, out.as_ref())?;
            Ok(pass)
        }
        Cmd::Graph { ring, d, scale_bound, param_bound, format, out } => {
            let cat = load(ring, *param_bound)?;
            let store = shipped_facts(&cat)?;
            let graph = export_graph(&cat, &store, *d, *scale_bound);
            match format {
                Format::Json => emit(&graph, out.as_ref())?,
                Format::Dot => emit_text(&graph_to_dot(&graph), out.as_ref())?,
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            // configuration problems are usage errors; anything else is a
            // verification failure
            let usage = matches!(
                e.downcast_ref::<Error>(),
                Some(Error::Config(_) | Error::UnsupportedRing(_) | Error::UnknownClass(_))
            );
            eprintln!("error: {e}");
            ExitCode::from(if usage { 2 } else { 1 })
        }
    }
}
