//! `reslat`: build, check and compare finite residuated lattices stored as
//! JSON tables.
//!
//! Exit codes: 0 success or true, 1 false, 2 invalid input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use reslat::algebra::{read_algebra, validate, write_algebra, AlgebraJson};
use reslat::builders::{
    direct_product, godel, lukasiewicz, ordinal_sum, rotate, Delta, RotationSpec,
};
use reslat::classops::{var_leq, variety_poset_with};
use reslat::congruence::{congruence_filters, is_simple, is_subdirectly_irreducible, radical};
use reslat::decomposition::{divisibility_index, is_wajsberg, rank, sum_decompose};
use reslat::enumerate::{
    enumerate_rl_with, find_example, Predicate, SearchConstraints, DEFAULT_CAP,
};
use reslat::par::Exec;
use reslat::properties::basic_properties;
use reslat::term::{builtin, parse_statement, satisfies, Assignment, Statement};
use reslat::{FinAlg, RawAlgebra};

#[derive(Parser)]
#[command(
    name = "reslat",
    version,
    about = "Finite residuated lattices and hoops"
)]
struct Cli {
    /// Worker threads; 1 runs everything sequentially.
    #[arg(long, global = true, env = "RESLAT_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every axiom of an algebra file.
    Validate { file: PathBuf },
    /// Write a standard algebra as JSON.
    Build {
        #[command(subcommand)]
        what: BuildCmd,
        /// Output file; stdout when absent.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Decide an equation or quasi-equation.
    Check {
        file: PathBuf,
        #[arg(
            long,
            conflicts_with = "statement",
            required_unless_present = "statement"
        )]
        builtin: Option<String>,
        #[arg(long, requires = "builtin")]
        param: Option<usize>,
        #[arg(long)]
        statement: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Report the basic properties.
    Props {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print the congruence-filter lattice.
    Congruences {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Split an integral chain into sum-irreducible components.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Exit 0 when V(A) ⊆ V(B), 1 otherwise.
    Varleq { a: PathBuf, b: PathBuf },
    /// Variety inclusion poset of several algebras.
    Poset {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Write the Hasse diagram as DOT; stdout when absent.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// List all residuated lattices of a given size.
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        commutative: bool,
        #[arg(long)]
        integral: bool,
        #[arg(long)]
        chain: bool,
        #[arg(long)]
        count_only: bool,
        /// Directory receiving one JSON file per algebra.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Smallest algebra satisfying a property expression such as
    /// `integral & simple & !well-connected`.
    Find {
        #[arg(long)]
        size_max: usize,
        #[arg(long)]
        pred: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
}

#[derive(Subcommand)]
enum BuildCmd {
    Lukasiewicz {
        n: usize,
    },
    Godel {
        n: usize,
    },
    /// Ordinal sum, first file lowest.
    Sum {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    Rotate {
        file: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = DeltaArg::Id)]
        delta: DeltaArg,
    },
    Product {
        a: PathBuf,
        b: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DeltaArg {
    Id,
    One,
}

/// Answer of a command that decides something.
enum Outcome {
    Yes,
    No,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = match configure_jobs(cli.jobs) {
        Ok(e) => e,
        Err(e) => return fail(e),
    };
    match run(cli.command, exec) {
        Ok(Outcome::Yes) => ExitCode::SUCCESS,
        Ok(Outcome::No) => ExitCode::from(1),
        Err(e) => fail(e),
    }
}

fn fail(e: anyhow::Error) -> ExitCode {
    eprintln!("error: {e:#}");
    ExitCode::from(2)
}

fn configure_jobs(jobs: Option<usize>) -> Result<Exec> {
    match jobs {
        Some(0) => bail!("--jobs must be at least 1"),
        Some(1) => Ok(Exec::Sequential),
        #[cfg(feature = "parallel")]
        Some(n) => {
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()?;
            Ok(Exec::Parallel)
        }
        #[cfg(not(feature = "parallel"))]
        Some(_) => Ok(Exec::Sequential),
        None => Ok(Exec::Parallel),
    }
}

fn load(path: &Path) -> Result<FinAlg> {
    read_algebra(path).with_context(|| format!("reading {}", path.display()))
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cmd: Command, exec: Exec) -> Result<Outcome> {
    match cmd {
        Command::Validate { file } => cmd_validate(&file),
        Command::Build { what, out } => {
            let alg = build(what)?;
            emit(&alg.to_json(), out.as_deref())?;
            Ok(Outcome::Yes)
        }
        Command::Check {
            file,
            builtin,
            param,
            statement,
            json,
        } => cmd_check(&load(&file)?, builtin, param, statement, json),
        Command::Props { file, json } => cmd_props(&load(&file)?, json),
        Command::Congruences { file, json } => cmd_congruences(&load(&file)?, json),
        Command::Decompose { file, json } => cmd_decompose(&load(&file)?, json),
        Command::Varleq { a, b } => {
            let (a, b) = (load(&a)?, load(&b)?);
            if a.zero().is_some() != b.zero().is_some() {
                bail!("both algebras must have a zero, or neither");
            }
            let yes = var_leq(&a, &b);
            println!("{yes}");
            Ok(if yes { Outcome::Yes } else { Outcome::No })
        }
        Command::Poset { files, dot } => {
            let algs: Vec<FinAlg> = files
                .iter()
                .map(|f| {
                    let a = load(f)?;
                    let stem = f.file_stem().map(|s| s.to_string_lossy().into_owned());
                    Ok(match (a.name(), stem) {
                        (None, Some(s)) => a.with_name(s),
                        _ => a,
                    })
                })
                .collect::<Result<_>>()?;
            if algs
                .iter()
                .any(|a| a.zero().is_some() != algs[0].zero().is_some())
            {
                bail!("all algebras must have a zero, or none");
            }
            let poset = variety_poset_with(&algs, exec);
            emit(&poset.to_dot(), dot.as_deref())?;
            Ok(Outcome::Yes)
        }
        Command::Enumerate {
            size,
            commutative,
            integral,
            chain,
            count_only,
            out,
            cap,
        } => {
            let c = SearchConstraints::of_size(size)
                .commutative(commutative)
                .integral(integral)
                .chain(chain);
            let found = enumerate_rl_with(&c, exec, cap)?;
            println!("{}", found.len());
            if let (Some(dir), false) = (out, count_only) {
                fs::create_dir_all(&dir)?;
                for (i, a) in found.iter().enumerate() {
                    let name = format!("RL{size}_{i:04}");
                    write_algebra(dir.join(format!("{name}.json")), &a.clone().with_name(name))?;
                }
            }
            Ok(Outcome::Yes)
        }
        Command::Find {
            size_max,
            pred,
            out,
            cap,
        } => {
            let p = Predicate::parse(&pred)?;
            let c = SearchConstraints::of_size(1).predicate(p);
            match find_example(&c, size_max, exec, cap)? {
                Some(a) => {
                    emit(&a.to_json(), out.as_deref())?;
                    Ok(Outcome::Yes)
                }
                None => {
                    eprintln!("no algebra of size at most {size_max} satisfies {pred}");
                    Ok(Outcome::No)
                }
            }
        }
    }
}

fn cmd_validate(file: &Path) -> Result<Outcome> {
    let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let raw: RawAlgebra = serde_json::from_str(&text).context("parsing algebra JSON")?;
    let report = validate(&raw)?;
    if !report.is_ok() {
        bail!("{report}");
    }
    println!("ok");
    Ok(Outcome::Yes)
}

fn build(what: BuildCmd) -> Result<FinAlg> {
    Ok(match what {
        BuildCmd::Lukasiewicz { n } => lukasiewicz(n)?,
        BuildCmd::Godel { n } => godel(n),
        BuildCmd::Sum { files } => {
            let parts: Vec<FinAlg> = files.iter().map(|f| load(f)).collect::<Result<_>>()?;
            ordinal_sum(&parts)?
        }
        BuildCmd::Rotate { file, n, delta } => {
            let base = load(&file)?;
            let delta = match delta {
                DeltaArg::Id => Delta::Identity,
                DeltaArg::One => Delta::ConstantOne,
            };
            rotate(&RotationSpec {
                base: &base,
                n,
                delta,
            })?
            .algebra
        }
        BuildCmd::Product { a, b } => direct_product(&load(&a)?, &load(&b)?),
    })
}

fn format_witness(w: &Assignment) -> String {
    w.iter()
        .map(|(k, v)| format!("{k} -> {v}"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn cmd_check(
    alg: &FinAlg,
    name: Option<String>,
    param: Option<usize>,
    statement: Option<String>,
    as_json: bool,
) -> Result<Outcome> {
    let statements: Vec<Statement> = match (name, statement) {
        (Some(n), _) => builtin(&n, param.as_slice())?,
        (None, Some(s)) => vec![parse_statement(&s)?],
        (None, None) => bail!("give --builtin or --statement"),
    };
    let mut failure = None;
    for s in &statements {
        let v = satisfies(alg, s)?;
        if !v.holds {
            failure = Some((s, v.witness.unwrap_or_default()));
            break;
        }
    }
    if as_json {
        let report = match &failure {
            None => json!({ "holds": true }),
            Some((s, w)) => json!({ "holds": false, "statement": s.to_string(), "witness": w }),
        };
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        match &failure {
            None => println!("true"),
            Some((s, w)) => {
                println!("false");
                println!("statement: {s}");
                println!("witness: {}", format_witness(w));
            }
        }
    }
    Ok(if failure.is_none() {
        Outcome::Yes
    } else {
        Outcome::No
    })
}

fn cmd_props(alg: &FinAlg, as_json: bool) -> Result<Outcome> {
    let r = basic_properties(alg);
    if as_json {
        println!("{}", serde_json::to_string_pretty(&r)?);
        return Ok(Outcome::Yes);
    }
    let flags = [
        ("integral", r.integral),
        ("commutative", r.commutative),
        ("divisible", r.divisible),
        ("cancellative", r.cancellative),
        ("idempotent", r.idempotent),
        ("prelinear", r.prelinear),
        ("representable", r.representable),
        ("one_distributive", r.one_distributive),
        ("normal", r.normal),
        ("well_connected", r.well_connected),
        ("weakly_well_connected", r.weakly_well_connected),
    ];
    for (name, value) in flags {
        match r.witnesses.get(name.replace('_', "-").as_str()) {
            Some(w) if !value => println!("{name}: false ({})", format_witness(w)),
            _ => println!("{name}: {value}"),
        }
    }
    Ok(Outcome::Yes)
}

fn cmd_congruences(alg: &FinAlg, as_json: bool) -> Result<Outcome> {
    let lat = congruence_filters(alg);
    let si = is_subdirectly_irreducible(alg);
    let simple = is_simple(alg);
    let sets: Vec<Vec<usize>> = lat.filters.iter().map(|f| f.members()).collect();
    if as_json {
        let report = json!({ "filters": sets, "hasse": lat.hasse, "si": si, "simple": simple });
        println!("{}", serde_json::to_string_pretty(&report)?);
        return Ok(Outcome::Yes);
    }
    for (i, s) in sets.iter().enumerate() {
        println!("F{i}: {s:?}");
    }
    for (i, j) in &lat.hasse {
        println!("F{i} < F{j}");
    }
    println!("si: {si}");
    println!("simple: {simple}");
    if alg.zero().is_some() {
        println!("radical: {:?}", radical(alg)?.members());
    }
    Ok(Outcome::Yes)
}

fn cmd_decompose(alg: &FinAlg, as_json: bool) -> Result<Outcome> {
    let d = sum_decompose(alg)?;
    let sizes: Vec<usize> = d.components.iter().map(FinAlg::size).collect();
    let wajsberg: Vec<bool> = d.components.iter().map(is_wajsberg).collect();
    let ranks = rank(alg).ok().zip(divisibility_index(alg).ok());
    if as_json {
        let mut report = json!({
            "index": d.index(),
            "sizes": sizes,
            "wajsberg": wajsberg,
            "blocks": d.blocks,
        });
        if let Some((r, k)) = ranks {
            report["rank"] = json!(r);
            report["divisibility_index"] = json!(k);
        }
        println!("{}", serde_json::to_string_pretty(&report)?);
        return Ok(Outcome::Yes);
    }
    println!("index: {}", d.index());
    for (i, ((size, w), block)) in sizes.iter().zip(&wajsberg).zip(&d.blocks).enumerate() {
        println!("component {i}: size {size}, wajsberg {w}, elements {block:?}");
    }
    if let Some((r, k)) = ranks {
        println!("rank: {r}");
        println!("divisibility index: {k}");
    }
    Ok(Outcome::Yes)
}
