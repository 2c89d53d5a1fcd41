//! Command-line front end: grid invariants, PALF construction, the full
//! verification suite, Hurwitz-move scripts and SVG rendering.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error.

use clap::{Parser, Subcommand, ValueEnum};
use gridpalf::construct::{construct_palf, Strategy};
use gridpalf::grid::{parse_grid, GridDiagram};
use gridpalf::monodromy::MonodromyFactorization;
use gridpalf::report;
use gridpalf::verify;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "gridpalf",
    version,
    about = "Lefschetz fibrations with bounded fibers from knots and links in grid position"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Comb,
    Flex,
    Rtl,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Strategy {
        match s {
            StrategyArg::Comb => Strategy::Comb,
            StrategyArg::Flex => Strategy::Flex,
            StrategyArg::Rtl => Strategy::Rtl,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Writhe, corner census and Thurston-Bennequin invariants of a grid file.
    Invariants { path: PathBuf },
    /// Construct the fibration and report fiber, word and factorization.
    Construct {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "flex")]
        strategy: StrategyArg,
        /// Construct the fibration with trivial total space (omit the
        /// guide cycles).
        #[arg(long)]
        no_c0: bool,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Render the fiber to this SVG file.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Run the verification suite; exit 0 only if every check passes.
    Verify {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "flex")]
        strategy: StrategyArg,
        /// Also sweep the twist and torus families up to this size.
        #[arg(long)]
        families: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply a Hurwitz-move script (`L i`, `R i`, `C i` per line) to the
    /// factorization of the constructed fibration.
    Hurwitz {
        path: PathBuf,
        script: PathBuf,
        #[arg(long, value_enum, default_value = "flex")]
        strategy: StrategyArg,
        /// Use the fibration without guide cycles (the default).
        #[arg(long, default_value_t = true)]
        no_c0: bool,
    },
    /// Render the constructed fiber to SVG.
    Render {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "flex")]
        strategy: StrategyArg,
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(ok) => {
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &PathBuf) -> Result<GridDiagram, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_grid(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_out(out: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(p) => std::fs::write(p, content).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            println!("{content}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Invariants { path } => {
            let grid = load(&path)?;
            let doc = report::document(&grid, None, None);
            println!("{}", report::to_json(&doc));
            Ok(true)
        }
        Command::Construct {
            path,
            strategy,
            no_c0,
            out,
            svg,
        } => {
            let grid = load(&path)?;
            let palf = construct_palf(&grid, strategy.into(), !no_c0)
                .map_err(|e| e.to_string())?;
            if let Some(svg_path) = svg {
                std::fs::write(&svg_path, gridpalf::svg::render(&palf))
                    .map_err(|e| format!("{}: {e}", svg_path.display()))?;
            }
            let doc = report::document(&grid, Some(&palf), None);
            write_out(&out, &report::to_json(&doc))?;
            Ok(true)
        }
        Command::Verify {
            path,
            strategy,
            families,
            out,
        } => {
            let grid = load(&path)?;
            let strategy: Strategy = strategy.into();
            let mut all = verify::VerificationReport::default();
            let palf = construct_palf(&grid, strategy, true).map_err(|e| e.to_string())?;
            let sf = construct_palf(&grid, strategy, false).map_err(|e| e.to_string())?;
            let expect = verify::HandlebodyExpectation::trace(&grid);
            if grid.hole().is_none() {
                all.merge(verify::check_total_space(&palf, &expect));
                all.merge(verify::check_trivial_total_space(&sf));
            }
            all.merge(verify::check_framings(&grid, &palf));
            if strategy == Strategy::Flex {
                all.merge(
                    verify::check_translation_principle(&grid).map_err(|e| e.to_string())?,
                );
                all.merge(verify::check_rtl(&grid).map_err(|e| e.to_string())?);
            }
            if let Some(max) = families {
                all.merge(verify::check_twist_family(max).map_err(|e| e.to_string())?);
                all.merge(verify::check_torus_family(max).map_err(|e| e.to_string())?);
            }
            let ok = all.all_pass();
            let doc = report::document(&grid, Some(&palf), Some(all));
            write_out(&out, &report::to_json(&doc))?;
            Ok(ok)
        }
        Command::Hurwitz {
            path,
            script,
            strategy,
            no_c0,
        } => {
            let grid = load(&path)?;
            let palf = construct_palf(&grid, strategy.into(), !no_c0)
                .map_err(|e| e.to_string())?;
            let text = std::fs::read_to_string(&script)
                .map_err(|e| format!("{}: {e}", script.display()))?;
            let mut fac = palf.factorization();
            let total = fac.total_monodromy();
            let mut history = vec![("start".to_string(), fac.names())];
            for (i, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let mut it = line.split_whitespace();
                let op = it.next().unwrap();
                let pos: usize = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| format!("script line {}: bad position", i + 1))?;
                fac = apply_move(&fac, op, pos)
                    .map_err(|e| format!("script line {}: {e}", i + 1))?;
                history.push((format!("{op} {pos}"), fac.names()));
            }
            let invariant = fac.total_monodromy() == total;
            for (step, names) in &history {
                println!("{step:>8}  ({})", names.join(", "));
            }
            println!("total monodromy invariant: {invariant}");
            Ok(invariant)
        }
        Command::Render {
            path,
            strategy,
            out,
        } => {
            let grid = load(&path)?;
            let palf = construct_palf(&grid, strategy.into(), true)
                .map_err(|e| e.to_string())?;
            std::fs::write(&out, gridpalf::svg::render(&palf))
                .map_err(|e| format!("{}: {e}", out.display()))?;
            Ok(true)
        }
    }
}

/// `L i` moves the i-th factor leftward, `R i` rightward, `C i` commutes
/// the adjacent disjoint pair `(V_i, V_{i+1})`.
fn apply_move(
    fac: &MonodromyFactorization,
    op: &str,
    pos: usize,
) -> Result<MonodromyFactorization, String> {
    match op {
        "L" => fac.hurwitz_left(pos.saturating_sub(1)).map_err(|e| e.to_string()),
        "R" => fac.hurwitz_right(pos).map_err(|e| e.to_string()),
        "C" => fac.commute(pos).map_err(|e| e.to_string()),
        other => Err(format!("unknown move `{other}`")),
    }
}
