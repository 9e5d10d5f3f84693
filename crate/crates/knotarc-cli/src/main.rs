use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use knotarc::corpus::{CheckOptions, Corpus, CorpusReport};
use knotarc::diagram::{detect_tangle_structure, parse_pd};
use knotarc::filtered::{
    arc_presentation_from_tree, build_good_spanning_tree, check_theorem_conditions, construct_minus_one,
    construct_nonalternating, search_construction, Construction, SearchOptions,
};
use knotarc::grid::RenderFormat;
use knotarc::invariants::{
    arc_index_bounds, budget_from_env, kauffman_polynomial_with_budget, v_spread, BoundsOptions,
};
use knotarc::{Error, GridDiagram, PlanarKnotDiagram, Result};
use serde_json::json;

#[derive(Parser)]
#[command(name = "knotarc", version, about = "Arc presentations and grid diagrams of knots")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a grid file or a PD code.
    Validate { file: PathBuf },
    /// Knot polynomials.
    #[command(subcommand)]
    Invariant(Invariant),
    /// Lower and upper bounds on the arc index of a PD code.
    Bounds {
        file: PathBuf,
        /// The diagram is known to be prime.
        #[arg(long)]
        prime: bool,
        /// The diagram is known to have minimal crossing number.
        #[arg(long)]
        minimal: bool,
    },
    /// Build a grid diagram from a PD code.
    Construct(ConstructArgs),
    /// Tangle structure and the conditions for saving one more arc.
    Classify { file: PathBuf },
    /// Connected sum of two grids.
    Sum {
        first: PathBuf,
        second: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Draw a grid.
    Render {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// The bundled grid corpus.
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Subcommand)]
enum Invariant {
    /// Kauffman polynomial F(v, z) and its v-spread.
    Kauffman {
        file: PathBuf,
        /// Largest simplified crossing count to evaluate.
        #[arg(long)]
        max_crossings: Option<usize>,
    },
}

#[derive(Subcommand)]
enum CorpusCommand {
    /// Validate every entry.
    Check {
        /// Check this corpus file instead of the bundled one.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Also compute the v-spread of each grid (slow beyond the budget).
        #[arg(long)]
        invariants: bool,
    },
}

#[derive(Args)]
struct ConstructArgs {
    file: PathBuf,
    #[arg(long, value_enum)]
    target: Target,
    /// Root crossing of the spanning tree.
    #[arg(long)]
    root: Option<usize>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    #[value(name = "c+2")]
    Plus2,
    #[value(name = "c")]
    Crossings,
    #[value(name = "c-1")]
    Minus1,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            if cli.json {
                eprintln!("{}", json!({ "error": { "kind": kind(&e), "message": e.to_string() } }));
            } else {
                eprintln!("knotarc: {e}");
            }
            ExitCode::from(1)
        }
    }
}

fn kind(e: &Error) -> &'static str {
    match e {
        Error::Syntax(_) => "syntax",
        Error::InvalidDiagram(_) => "invalid_diagram",
        Error::InvalidGrid(_) => "invalid_grid",
        Error::InvalidArgument(_) => "invalid_argument",
        Error::BudgetExceeded { .. } => "budget_exceeded",
        Error::Construction(_) => "construction",
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Error::InvalidArgument(format!("{}: {e}", p.display()))),
        None => {
            emit(text);
            Ok(())
        }
    }
}

fn looks_like_grid(text: &str) -> bool {
    let first = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty());
    first.is_some_and(|l| l.starts_with("grid") || l.starts_with('{'))
}

enum Input {
    Grid(GridDiagram),
    Pd(PlanarKnotDiagram),
}

fn read_input(path: &Path) -> Result<Input> {
    let text = read(path)?;
    if looks_like_grid(&text) {
        Ok(Input::Grid(GridDiagram::parse_any(&text)?))
    } else {
        Ok(Input::Pd(parse_pd(&text)?))
    }
}

fn read_grid(path: &Path) -> Result<GridDiagram> {
    GridDiagram::parse_any(&read(path)?)
}

fn read_pd(path: &Path) -> Result<PlanarKnotDiagram> {
    parse_pd(&read(path)?)
}

/// Write to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().write_all(text.as_bytes());
}

fn print_json(v: &impl serde::Serialize) {
    emit(&(serde_json::to_string_pretty(v).expect("report serializes") + "\n"));
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Validate { file } => validate(file, cli.json),
        Command::Invariant(Invariant::Kauffman { file, max_crossings }) => {
            let d = match read_input(file)? {
                Input::Grid(g) => g.to_planar_diagram()?,
                Input::Pd(d) => d,
            };
            let f = kauffman_polynomial_with_budget(&d, max_crossings.unwrap_or_else(budget_from_env))?;
            let spread = v_spread(&f)?;
            if cli.json {
                print_json(&json!({ "crossings": d.crossing_count(), "polynomial": f, "spread": spread }));
            } else {
                println!("F = {f}");
                println!("v-spread {spread}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds { file, prime, minimal } => {
            let d = read_pd(file)?;
            let report = arc_index_bounds(&d, &BoundsOptions { prime: *prime, minimal: *minimal, grid: None })?;
            print_json(&report);
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct(args) => construct(args, cli.json),
        Command::Classify { file } => {
            let d = read_pd(file)?;
            let tc = detect_tangle_structure(&d);
            let conditions = check_theorem_conditions(&d, &tc).ok();
            print_json(&json!({ "classification": tc, "conditions": conditions }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Sum { first, second, output } => {
            let g = read_grid(first)?.connected_sum(&read_grid(second)?)?;
            write_out(output.as_deref(), &if cli.json { g.to_json() + "\n" } else { g.to_text() })?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Render { file, format } => {
            let f = match format {
                Format::Ascii => RenderFormat::Ascii,
                Format::Svg => RenderFormat::Svg,
            };
            emit(&read_grid(file)?.render(f));
            Ok(ExitCode::SUCCESS)
        }
        Command::Corpus(CorpusCommand::Check { file, invariants }) => {
            let corpus = match file {
                Some(p) => Corpus::from_json(&read(p)?)?,
                None => Corpus::embedded()?,
            };
            let report = corpus.check(&CheckOptions { invariants: *invariants });
            if cli.json {
                print_json(&report);
            } else {
                print_corpus(&report);
            }
            Ok(if report.all_passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn validate(file: &Path, as_json: bool) -> Result<ExitCode> {
    let text = read(file)?;
    if looks_like_grid(&text) {
        let g = GridDiagram::parse_unchecked(&text)?;
        let violations = g.validate();
        if as_json {
            print_json(
                &json!({ "kind": "grid", "n": g.size(), "valid": violations.is_empty(), "violations": violations }),
            );
        } else if violations.is_empty() {
            println!("valid, n={}", g.size());
        } else {
            println!("invalid, n={}", g.size());
            for v in &violations {
                println!("  {v}");
            }
        }
        return Ok(if violations.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(1) });
    }
    let d = parse_pd(&text)?;
    let c = d.crossing_count();
    if as_json {
        print_json(
            &json!({ "kind": "diagram", "crossings": c, "valid": true, "alternating": d.is_alternating(), "prime": d.is_prime_diagram() }),
        );
    } else {
        println!("valid, c={c}");
    }
    Ok(ExitCode::SUCCESS)
}

fn construct(args: &ConstructArgs, as_json: bool) -> Result<ExitCode> {
    let d = read_pd(&args.file)?;
    let opts = SearchOptions { root: args.root, ..SearchOptions::default() };
    if let Some(r) = args.root {
        if r >= d.crossing_count() {
            return Err(Error::InvalidArgument(format!("root {r} is not a crossing of the diagram")));
        }
    }
    let built: Construction = match args.target {
        Target::Plus2 => arc_presentation_from_tree(&d, &build_good_spanning_tree(&d, &opts)?)?,
        Target::Crossings if args.root.is_some() => {
            if d.is_alternating() {
                return Err(Error::InvalidArgument("the diagram is alternating".into()));
            }
            search_construction(&d, 2, &opts)?
        }
        Target::Crossings => construct_nonalternating(&d)?,
        Target::Minus1 => {
            let tc = detect_tangle_structure(&d);
            let report = check_theorem_conditions(&d, &tc)?;
            construct_minus_one(&d, &tc, &report)?
        }
    };
    if !built.grid.is_valid() {
        return Err(Error::Construction("the contraction produced an invalid grid".into()));
    }
    let text = if as_json {
        serde_json::to_string_pretty(&built).expect("construction serializes") + "\n"
    } else {
        built.grid.to_text()
    };
    write_out(args.output.as_deref(), &text)?;
    eprintln!("{} arcs from {} crossings", built.arc_count(), d.crossing_count());
    Ok(ExitCode::SUCCESS)
}

fn print_corpus(report: &CorpusReport) {
    for e in report.entries.iter().filter(|e| !e.passed) {
        let mut why: Vec<String> = e.violations.iter().map(|v| v.to_string()).collect();
        if e.columns != e.expected_columns {
            why.push(format!("{} columns, expected {}", e.columns, e.expected_columns));
        }
        if let Some(s) = e.spread {
            if s as usize + 2 > e.columns {
                why.push(format!("v-spread {s} exceeds the grid"));
            }
        }
        println!("FAIL {}: {}", e.name, why.join("; "));
    }
    for (cat, n) in &report.categories {
        println!("{cat}: {} passed, {} failed", n.passed, n.failed);
    }
    println!("{} entries, {} passed, {} failed", report.entries.len(), report.passed, report.failed);
}
