//! Command-line frontend: load data files, run checks, print reports.
//!
//! Exit codes: 0 all requested checks pass, 1 a check failed, 2 usage
//! error, 3 unreadable or unparseable input.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use gblocks::category::{check_all, CategoryData, DEFAULT_CONDUCTOR_LIMIT};
use gblocks::covers::{load_cover, load_moves, GluingGraph};
use gblocks::error::DataError;
use gblocks::report::CheckReport;
use gblocks::tau::{load_labeling, CoverLabeling, PathMoves, RelationBounds};

#[derive(Parser)]
#[command(name = "gblocks", version, about = "exact checker for graded fusion data and cover moves")]
struct Cli {
    /// Emit a machine-readable JSON report on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Largest conductor accepted in category files.
    #[arg(long, default_value_t = DEFAULT_CONDUCTOR_LIMIT, global = true)]
    conductor_limit: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CategoryArg {
    /// Category data file (JSON).
    category: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Run the category-level coherence checks.
    Validate(CategoryArg),
    /// Check the block-isomorphism axiom system.
    MsCheck {
        #[command(flatten)]
        cat: CategoryArg,
        /// Largest label-tuple size instantiated.
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
    /// Evaluate the dimension of a labeled cover.
    Dim {
        #[command(flatten)]
        cat: CategoryArg,
        cover: PathBuf,
        labeling: PathBuf,
    },
    /// Apply a move script to a labeled cover and print the matrix.
    Map {
        #[command(flatten)]
        cat: CategoryArg,
        cover: PathBuf,
        labeling: PathBuf,
        script: PathBuf,
    },
    /// Check path independence between two presentations of a cover.
    Paths {
        #[command(flatten)]
        cat: CategoryArg,
        cover_from: PathBuf,
        cover_to: PathBuf,
        labeling: PathBuf,
        /// Longest move path explored.
        #[arg(long, default_value_t = 6)]
        depth: usize,
        /// Exclude braid moves from the search. Braid loops that restore
        /// the block data act by boundary twists, which the data-level
        /// search reports as discrepancies.
        #[arg(long)]
        braid_free: bool,
    },
    /// Check the move relations over small cover families.
    Relations {
        #[command(flatten)]
        cat: CategoryArg,
        /// Boundaries per block in one-block families.
        #[arg(long, default_value_t = 3)]
        bound: usize,
    },
    /// Reconstruct the fusion data from block spaces and compare.
    Roundtrip(CategoryArg),
}

enum Outcome {
    Pass,
    Fail,
    FileError(String),
}

fn load_category(path: &PathBuf, limit: u64) -> Result<CategoryData, (bool, String)> {
    CategoryData::load_path(path, limit).map_err(|e| match e {
        DataError::Io(_) | DataError::Json(_) => (true, e.to_string()),
        other => (false, other.to_string()),
    })
}

fn emit(json: bool, reports: &[CheckReport]) -> Outcome {
    if json {
        println!("{}", serde_json::to_string_pretty(reports).expect("reports serialize"));
    } else {
        for r in reports {
            println!("{}", r.summary());
            for n in &r.notes {
                println!("  note: {n}");
            }
            for f in r.failures.iter().take(5) {
                println!("  at {}: {}", f.witness, f.detail);
            }
        }
    }
    if reports.iter().all(|r| r.passed()) {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

fn load_cover_and_labeling(
    cat: &CategoryData,
    cover: &PathBuf,
    labeling: &PathBuf,
) -> Result<(GluingGraph, CoverLabeling), String> {
    let cover_text = std::fs::read_to_string(cover).map_err(|e| e.to_string())?;
    let graph = load_cover(&cat.group, &cover_text).map_err(|e| e.to_string())?;
    let label_text = std::fs::read_to_string(labeling).map_err(|e| e.to_string())?;
    let lab = load_labeling(cat, &graph, &label_text).map_err(|e| e.to_string())?;
    Ok((graph, lab))
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Validate(arg) => match load_category(&arg.category, cli.conductor_limit) {
            Err((true, msg)) => Outcome::FileError(msg),
            Err((false, msg)) => {
                // A parseable file violating an invariant is a failed check.
                let mut report = CheckReport::new("load");
                report.tick();
                report.fail("category file", msg);
                emit(cli.json, &[report]);
                Outcome::Fail
            }
            Ok(cat) => emit(cli.json, &check_all(&cat)),
        },
        Command::MsCheck { cat, bound } => match load_category(&cat.category, cli.conductor_limit)
        {
            Err((_, msg)) => Outcome::FileError(msg),
            Ok(cat) => emit(cli.json, &gblocks::blocks::check_ms_axioms(&cat, *bound)),
        },
        Command::Dim { cat, cover, labeling } => {
            let cat = match load_category(&cat.category, cli.conductor_limit) {
                Err((_, msg)) => return Outcome::FileError(msg),
                Ok(c) => c,
            };
            let (graph, lab) = match load_cover_and_labeling(&cat, cover, labeling) {
                Err(msg) => return Outcome::FileError(msg),
                Ok(p) => p,
            };
            let dim = gblocks::tau::tau_dim(&cat, &graph, &lab);
            if cli.json {
                println!("{}", serde_json::json!({ "dim": dim }));
            } else {
                println!("{dim}");
            }
            Outcome::Pass
        }
        Command::Map { cat, cover, labeling, script } => {
            let cat = match load_category(&cat.category, cli.conductor_limit) {
                Err((_, msg)) => return Outcome::FileError(msg),
                Ok(c) => c,
            };
            let (graph, lab) = match load_cover_and_labeling(&cat, cover, labeling) {
                Err(msg) => return Outcome::FileError(msg),
                Ok(p) => p,
            };
            let script_text = match std::fs::read_to_string(script) {
                Err(e) => return Outcome::FileError(e.to_string()),
                Ok(t) => t,
            };
            let moves = match load_moves(&cat.group, &script_text) {
                Err(e) => return Outcome::FileError(e.to_string()),
                Ok(m) => m,
            };
            match gblocks::tau::path_map(&cat, &graph, &lab, &moves) {
                Err(e) => {
                    let mut report = CheckReport::new("map");
                    report.tick();
                    report.fail("move script", e.to_string());
                    emit(cli.json, &[report]);
                    Outcome::Fail
                }
                Ok(map) => {
                    if cli.json {
                        println!(
                            "{}",
                            serde_json::json!({
                                "source_dim": map.source.dim(),
                                "target_dim": map.target.dim(),
                                "matrix": map.matrix.render(),
                            })
                        );
                    } else {
                        println!("{}", map.matrix.render());
                    }
                    Outcome::Pass
                }
            }
        }
        Command::Paths { cat, cover_from, cover_to, labeling, depth, braid_free } => {
            let cat = match load_category(&cat.category, cli.conductor_limit) {
                Err((_, msg)) => return Outcome::FileError(msg),
                Ok(c) => c,
            };
            let (graph, lab) = match load_cover_and_labeling(&cat, cover_from, labeling) {
                Err(msg) => return Outcome::FileError(msg),
                Ok(p) => p,
            };
            let to_text = match std::fs::read_to_string(cover_to) {
                Err(e) => return Outcome::FileError(e.to_string()),
                Ok(t) => t,
            };
            let goal = match load_cover(&cat.group, &to_text) {
                Err(e) => return Outcome::FileError(e.to_string()),
                Ok(g) => g,
            };
            let moves = if *braid_free { PathMoves::BraidFree } else { PathMoves::All };
            let report =
                gblocks::tau::check_path_independence(&cat, &graph, &goal, &lab, *depth, moves);
            emit(cli.json, &[report])
        }
        Command::Relations { cat, bound } => {
            let cat = match load_category(&cat.category, cli.conductor_limit) {
                Err((_, msg)) => return Outcome::FileError(msg),
                Ok(c) => c,
            };
            let bounds = RelationBounds { max_boundaries: *bound };
            let mut reports = gblocks::tau::check_relations(&cat, bounds);
            reports.push(gblocks::tau::check_nondegeneracy(&cat));
            emit(cli.json, &reports)
        }
        Command::Roundtrip(arg) => match load_category(&arg.category, cli.conductor_limit) {
            Err((_, msg)) => Outcome::FileError(msg),
            Ok(cat) => emit(cli.json, &[gblocks::roundtrip::roundtrip_check(&cat)]),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Outcome::Pass => ExitCode::from(0),
        Outcome::Fail => ExitCode::from(1),
        Outcome::FileError(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
