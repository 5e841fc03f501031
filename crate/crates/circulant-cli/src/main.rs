//! Command-line front end for the circulant degree/diameter toolkit.
//!
//! One binary, ten subcommands, each a thin adapter over a library
//! operation: counting bounds (`bounds`), set measurement and record-table
//! verification (`verify`), pruned searches (`search`, `maxsearch`),
//! product composition (`combine`, `product`), table rendering (`table`),
//! least-squares fits and derived grids (`fit`, `grid`), and the unpruned
//! reference enumeration (`oracle`).
//!
//! Data goes to stdout (or `--out` files); diagnostics go to stderr, so
//! every output is pipe-safe. Exit codes: 0 success, 1 domain failure
//! (named on stderr), 2 usage error.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use circulant::analysis::{self, Grid, PolyFit, Transform, DEFAULT_DEGREES, DEFAULT_DIAMETERS};
use circulant::bounds::{circulant_upper_bound, moore_bound, triple_loop_max};
use circulant::combine::{combined_search, DEFAULT_REPAIR_BUDGET};
use circulant::constructions::{cartesian_product, ProductWitness};
use circulant::graph::{CirculantGraph, ConnectionSet};
use circulant::pathcount::PruneConfig;
use circulant::records::RecordTable;
use circulant::search::{
    brute_force_oracle, max_order_search_with_budget, search_with_budget, SearchMode,
};

#[derive(Parser)]
#[command(
    name = "circulant",
    version,
    about = "Degree/diameter toolkit for undirected circulant graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,

    /// Record table file used by table-backed subcommands.
    #[arg(long, global = true, default_value = "records.json", value_name = "PATH")]
    records: PathBuf,

    /// Output format where a subcommand supports more than one.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    /// Write the built-in published record table to --records first.
    #[arg(long, global = true)]
    seed_builtin: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Counting bounds: a single cell, or a CSV grid over a range.
    Bounds(BoundsArgs),
    /// Measure a connection set, or re-verify the record table.
    Verify(VerifyArgs),
    /// Enumerate degree-Δ, diameter-D connection sets on n vertices.
    Search(SearchArgs),
    /// Largest order in a range carrying a degree-Δ, diameter-D set.
    Maxsearch(MaxsearchArgs),
    /// Best record-table product composition for a degree/diameter cell.
    Combine(CombineArgs),
    /// Cartesian product of two explicit connection sets.
    Product(ProductArgs),
    /// Render the record table: order, source, bound, percentage per cell.
    Table,
    /// Least-squares polynomial fit of a bound, record, or percentage grid.
    Fit(FitArgs),
    /// Emit a derived grid: fit residuals or record percentages.
    Grid(GridArgs),
    /// Unpruned reference enumeration (small orders only).
    Oracle(OracleArgs),
}

#[derive(Args)]
struct BoundsArgs {
    /// Degree of a single bound cell.
    #[arg(long)]
    deg: Option<u32>,
    /// Diameter of a single bound cell.
    #[arg(long)]
    diam: Option<u32>,
    /// Last diameter column of the grid.
    #[arg(long)]
    dmax: Option<u32>,
    /// Last degree row of the grid.
    #[arg(long = "deg-max")]
    deg_max: Option<u32>,
    /// Bound family.
    #[arg(long, value_enum, default_value_t = BoundKindArg::Circulant)]
    kind: BoundKindArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundKindArg {
    /// General-graph Moore bound.
    Moore,
    /// Circulant counting bound F / F′.
    Circulant,
    /// Triple-loop (degree 6, s₁ = 1) family maximum.
    Triple,
}

#[derive(Args)]
struct VerifyArgs {
    /// Connection set to measure, written `n;s1,s2,...`.
    #[arg(long)]
    set: Option<String>,
    /// Fail (exit 1) unless the measured diameter equals this.
    #[arg(long = "expect-diam")]
    expect_diam: Option<u32>,
    /// Fail (exit 1) unless the measured degree equals this.
    #[arg(long = "expect-deg")]
    expect_deg: Option<u32>,
    /// Restrict record verification to one `degree,diameter` cell.
    #[arg(long, value_name = "DEG,DIAM", conflicts_with = "set")]
    cell: Option<String>,
}

#[derive(Args)]
struct SearchArgs {
    /// Number of vertices.
    #[arg(long)]
    n: u32,
    /// Target degree.
    #[arg(long)]
    deg: u32,
    /// Target diameter.
    #[arg(long)]
    diam: u32,
    /// Prune-ceiling file: a `k <gap>` line plus `i d ceiling` lines.
    #[arg(long = "prune-file", value_name = "PATH")]
    prune_file: Option<PathBuf>,
    /// Enumerate every solution instead of stopping at the first.
    #[arg(long)]
    all: bool,
    /// Let the smallest generator range freely instead of pinning s₁ = 1.
    #[arg(long = "free-s1")]
    free_s1: bool,
    /// Node budget; budgeted runs truncate deterministically.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct MaxsearchArgs {
    /// Target degree.
    #[arg(long)]
    deg: u32,
    /// Target diameter.
    #[arg(long)]
    diam: u32,
    /// Smallest order to try.
    #[arg(long)]
    from: u32,
    /// Largest order to try.
    #[arg(long)]
    to: u32,
    /// Prune-ceiling file: a `k <gap>` line plus `i d ceiling` lines.
    #[arg(long = "prune-file", value_name = "PATH")]
    prune_file: Option<PathBuf>,
    /// Let the smallest generator range freely instead of pinning s₁ = 1.
    #[arg(long = "free-s1")]
    free_s1: bool,
    /// Node budget per order; budgeted runs truncate deterministically.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct CombineArgs {
    /// Target degree.
    #[arg(long)]
    deg: u32,
    /// Target diameter.
    #[arg(long)]
    diam: u32,
    /// Node budget per repair search (0 = recorded witnesses only).
    #[arg(long, default_value_t = DEFAULT_REPAIR_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct ProductArgs {
    /// First factor, written `n;s1,s2,...`.
    set1: String,
    /// Second factor, written `m;s1,s2,...`.
    set2: String,
}

#[derive(Args)]
struct FitArgs {
    /// Data to fit.
    #[arg(long, value_enum)]
    what: FitWhat,
    /// Total degree of the fitted polynomial.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(3..=4))]
    degree: u32,
    /// Fit the natural log of the data instead of the raw values.
    #[arg(long)]
    log: bool,
    /// Write the fitted model as JSON to this file.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FitWhat {
    /// Circulant counting bounds.
    Bounds,
    /// Record orders from the table.
    Records,
    /// Record orders as percentages of the bound.
    Percent,
}

#[derive(Args)]
struct GridArgs {
    /// Which derived grid to emit.
    #[arg(long, value_enum)]
    what: GridWhat,
    /// Destination file (stdout when omitted).
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GridWhat {
    /// Relative residuals of the cubic log-fit against the bound grid.
    Diff,
    /// Record orders as percentages of the bound.
    Percent,
}

#[derive(Args)]
struct OracleArgs {
    /// Number of vertices.
    #[arg(long)]
    n: u32,
    /// Target degree.
    #[arg(long)]
    deg: u32,
    /// Target diameter.
    #[arg(long)]
    diam: u32,
}

/// A failed run: usage errors exit 2 (like flag parsing), domain errors 1.
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<circulant::Error> for Failure {
    fn from(e: circulant::Error) -> Failure {
        Failure::Domain(e.to_string())
    }
}

fn domain(msg: impl Into<String>) -> Failure {
    Failure::Domain(msg.into())
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        // Ignore a second initialization; the pool is process-global.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    if cli.seed_builtin {
        let table = RecordTable::seed_builtin();
        table.save(&cli.records)?;
        eprintln!(
            "seeded {} record entries to {}",
            table.iter().count(),
            cli.records.display()
        );
    }
    let Some(command) = &cli.command else {
        if cli.seed_builtin {
            return Ok(());
        }
        return Err(usage("a subcommand is required (see --help)"));
    };
    match command {
        Command::Bounds(args) => run_bounds(args),
        Command::Verify(args) => run_verify(cli, args),
        Command::Search(args) => run_search(cli, args),
        Command::Maxsearch(args) => run_maxsearch(cli, args),
        Command::Combine(args) => run_combine(cli, args),
        Command::Product(args) => run_product(cli, args),
        Command::Table => run_table(cli),
        Command::Fit(args) => run_fit(cli, args),
        Command::Grid(args) => run_grid(cli, args),
        Command::Oracle(args) => run_oracle(cli, args),
    }
}

/// The record table backing table-dependent subcommands.
fn load_records(cli: &Cli) -> Result<RecordTable, Failure> {
    if !cli.records.exists() {
        return Err(domain(format!(
            "records file `{}` not found (run with --seed-builtin to create it)",
            cli.records.display()
        )));
    }
    Ok(RecordTable::load(&cli.records)?)
}

/// Search configuration shared by `search` and `maxsearch`.
fn prune_config(prune_file: &Option<PathBuf>, free_s1: bool) -> Result<PruneConfig, Failure> {
    let mut cfg = match prune_file {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| domain(format!("cannot read `{}`: {e}", path.display())))?
            .parse::<PruneConfig>()?,
        None => PruneConfig::shipped_defaults(),
    };
    if free_s1 {
        cfg.require_s1_eq_1 = false;
    }
    Ok(cfg)
}

fn run_bounds(args: &BoundsArgs) -> Result<(), Failure> {
    let cell = (args.deg, args.diam);
    let grid = (args.deg_max, args.dmax);
    match (cell, grid) {
        ((Some(deg), Some(diam)), (None, None)) => {
            let value = match args.kind {
                BoundKindArg::Moore => moore_bound(deg, diam),
                BoundKindArg::Circulant => circulant_upper_bound(deg, diam),
                BoundKindArg::Triple if deg == 6 => triple_loop_max(diam),
                BoundKindArg::Triple => {
                    return Err(usage("triple-loop bounds are defined for degree 6 only"))
                }
            };
            println!("{value}");
            Ok(())
        }
        ((None, None), (Some(deg_max), Some(dmax))) => {
            if deg_max < 2 || dmax < 1 {
                return Err(usage("the grid needs --deg-max >= 2 and --dmax >= 1"));
            }
            let mut out = String::new();
            write!(out, "degree").unwrap();
            for d in 1..=dmax {
                write!(out, ",{d}").unwrap();
            }
            out.push('\n');
            let rows: Vec<u32> = match args.kind {
                BoundKindArg::Triple => vec![6],
                _ => (2..=deg_max).collect(),
            };
            for deg in rows {
                write!(out, "{deg}").unwrap();
                for d in 1..=dmax {
                    let value = match args.kind {
                        BoundKindArg::Moore => moore_bound(deg, d),
                        BoundKindArg::Circulant => circulant_upper_bound(deg, d),
                        BoundKindArg::Triple => triple_loop_max(d),
                    };
                    write!(out, ",{value}").unwrap();
                }
                out.push('\n');
            }
            print!("{out}");
            Ok(())
        }
        _ => Err(usage(
            "pass either --deg with --diam (one cell) or --deg-max with --dmax (a grid)",
        )),
    }
}

fn run_verify(cli: &Cli, args: &VerifyArgs) -> Result<(), Failure> {
    if let Some(text) = &args.set {
        let set: ConnectionSet = text.parse()?;
        let graph = CirculantGraph::new(set.clone());
        let degree = graph.degree();
        let diameter = graph
            .diameter()
            .ok_or_else(|| domain(format!("set {set}: graph is disconnected")))?;
        if let Some(expect) = args.expect_deg {
            if degree != expect {
                return Err(domain(format!(
                    "degree mismatch for {set}: expected {expect}, measured {degree}"
                )));
            }
        }
        if let Some(expect) = args.expect_diam {
            if diameter != expect {
                return Err(domain(format!(
                    "diameter mismatch for {set}: expected {expect}, measured {diameter}"
                )));
            }
        }
        match cli.format {
            Format::Json => println!(
                "{}",
                serde_json::json!({
                    "set": set.to_string(),
                    "order": set.n(),
                    "degree": degree,
                    "diameter": diameter,
                })
            ),
            _ => println!("diameter {diameter}, degree {degree}"),
        }
        return Ok(());
    }

    // Table mode: re-verify every set-bearing record, optionally one cell.
    let table = load_records(cli)?;
    let filter = args.cell.as_deref().map(parse_cell).transpose()?;
    let reports: Vec<_> = table
        .verify_all()
        .into_iter()
        .filter(|r| filter.is_none_or(|(deg, diam)| (r.degree, r.diameter) == (deg, diam)))
        .collect();
    if reports.is_empty() {
        let (deg, diam) = filter.expect("an unfiltered table always yields reports");
        return Err(domain(format!(
            "no set-bearing record for cell ({deg}, {diam})"
        )));
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    match cli.format {
        Format::Json => println!(
            "{}",
            serde_json::json!({
                "checked": reports.len(),
                "failed": failed,
                "reports": reports.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            })
        ),
        _ => {
            for report in &reports {
                println!("{report}");
            }
            println!("{} set-bearing records checked, {failed} failed", reports.len());
        }
    }
    if failed > 0 {
        return Err(domain(format!("{failed} record entries fail verification")));
    }
    Ok(())
}

/// Parse a `degree,diameter` cell key.
fn parse_cell(text: &str) -> Result<(u32, u32), Failure> {
    let parse = |part: &str| {
        part.trim()
            .parse::<u32>()
            .map_err(|_| usage(format!("malformed cell `{text}`: expected `degree,diameter`")))
    };
    match text.split_once(',') {
        Some((deg, diam)) => Ok((parse(deg)?, parse(diam)?)),
        None => Err(usage(format!(
            "malformed cell `{text}`: expected `degree,diameter`"
        ))),
    }
}

fn run_search(cli: &Cli, args: &SearchArgs) -> Result<(), Failure> {
    let cfg = prune_config(&args.prune_file, args.free_s1)?;
    let mode = if args.all {
        SearchMode::All
    } else {
        SearchMode::FirstOnly
    };
    let outcome = search_with_budget(args.n, args.deg, args.diam, &cfg, mode, args.budget)?;
    eprintln!(
        "visited {} nodes, pruned {} subtrees, exhaustive: {}",
        outcome.nodes_visited, outcome.pruned, outcome.exhausted
    );
    let mut solutions = outcome.solutions;
    solutions.sort();
    print_solutions(cli.format, &solutions);
    Ok(())
}

fn run_maxsearch(cli: &Cli, args: &MaxsearchArgs) -> Result<(), Failure> {
    let cfg = prune_config(&args.prune_file, args.free_s1)?;
    let found = max_order_search_with_budget(
        args.deg, args.diam, args.from, args.to, &cfg, args.budget,
    );
    match (cli.format, found) {
        (Format::Json, Some((n, set))) => println!(
            "{}",
            serde_json::json!({"order": n, "set": set.to_string()})
        ),
        (Format::Json, None) => println!("{}", serde_json::json!({"order": null, "set": null})),
        (_, Some((_, set))) => println!("{set}"),
        (_, None) => println!("no solutions"),
    }
    Ok(())
}

fn run_combine(cli: &Cli, args: &CombineArgs) -> Result<(), Failure> {
    let table = load_records(cli)?;
    let witness = combined_search(args.deg, args.diam, &table, Some(args.budget))?;
    print_product(cli.format, &witness);
    Ok(())
}

fn run_product(cli: &Cli, args: &ProductArgs) -> Result<(), Failure> {
    let g1 = CirculantGraph::new(args.set1.parse()?);
    let g2 = CirculantGraph::new(args.set2.parse()?);
    let witness = cartesian_product(&g1, &g2)?;
    print_product(cli.format, &witness);
    Ok(())
}

fn print_product(format: Format, witness: &ProductWitness) {
    let (f1, f2) = &witness.factors;
    let style = if witness.measured { "measured" } else { "asserted" };
    match format {
        Format::Json => println!(
            "{}",
            serde_json::json!({
                "set": witness.product.set().to_string(),
                "order": witness.product.order(),
                "degree": witness.degree,
                "diameter": witness.diameter,
                "diameter_style": style,
                "factors": [f1.set().to_string(), f2.set().to_string()],
            })
        ),
        _ => {
            println!("{}", witness.product.set());
            println!(
                "order {} = {} * {}",
                witness.product.order(),
                f1.order(),
                f2.order()
            );
            println!(
                "degree {}, diameter {} ({style})",
                witness.degree, witness.diameter
            );
        }
    }
}

fn print_solutions(format: Format, solutions: &[ConnectionSet]) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::json!(solutions.iter().map(|s| s.to_string()).collect::<Vec<_>>())
        ),
        _ if solutions.is_empty() => println!("no solutions"),
        _ => {
            for set in solutions {
                println!("{set}");
            }
        }
    }
}

fn run_table(cli: &Cli) -> Result<(), Failure> {
    let table = load_records(cli)?;
    match cli.format {
        Format::Json => {
            let rows: Vec<_> = table
                .iter()
                .map(|e| {
                    let bound = circulant_upper_bound(e.degree, e.diameter);
                    serde_json::json!({
                        "degree": e.degree,
                        "diameter": e.diameter,
                        "order": e.order,
                        "set": e.set.as_ref().map(|s| s.to_string()),
                        "source": e.source,
                        "optimal": e.optimal,
                        "verified": e.verified,
                        "bound": bound.to_string(),
                        "percentage": percentage(e.order, e.degree, e.diameter),
                    })
                })
                .collect();
            println!("{}", serde_json::json!(rows));
        }
        Format::Csv => {
            println!("degree,diameter,order,source,bound,percentage");
            for e in table.iter() {
                println!(
                    "{},{},{},{},{},{:.1}",
                    e.degree,
                    e.diameter,
                    e.order,
                    e.source,
                    circulant_upper_bound(e.degree, e.diameter),
                    percentage(e.order, e.degree, e.diameter),
                );
            }
        }
        Format::Text => {
            for e in table.iter() {
                let star = if e.optimal { "*" } else { "" };
                println!(
                    "({:>2}, {:>2})  order {:>7}{star}  bound {:>8}  {:>5.1}%  {}",
                    e.degree,
                    e.diameter,
                    e.order,
                    circulant_upper_bound(e.degree, e.diameter),
                    percentage(e.order, e.degree, e.diameter),
                    e.source,
                );
            }
            println!("* order proved optimal for the cell");
        }
    }
    Ok(())
}

/// Record order as a percentage of the circulant counting bound.
fn percentage(order: u32, degree: u32, diameter: u32) -> f64 {
    circulant::records::bound_percentage(degree, diameter, order)
        .expect("table-range bounds fit in f64")
}

fn run_fit(cli: &Cli, args: &FitArgs) -> Result<(), Failure> {
    let grid = fit_source_grid(cli, args.what)?;
    let transform = if args.log {
        Transform::Log
    } else {
        Transform::Identity
    };
    let fit = analysis::fit_poly(&grid, args.degree, transform)?;
    let what = match args.what {
        FitWhat::Bounds => "bounds",
        FitWhat::Records => "records",
        FitWhat::Percent => "percent",
    };
    let model = fit_model_json(&fit, what, args.log);
    if let Some(path) = &args.out {
        fs::write(path, format!("{model:#}\n"))
            .map_err(|e| domain(format!("cannot write `{}`: {e}", path.display())))?;
        eprintln!("wrote {}", path.display());
    }
    match cli.format {
        Format::Json => println!("{model}"),
        _ => {
            println!("R^2 {}", fit.r_squared);
            for (&(a, b), &c) in &fit.coefficients {
                println!("coef {a} {b} {c}");
            }
        }
    }
    Ok(())
}

/// The grid a `fit` invocation regresses on, over the standard table range.
fn fit_source_grid(cli: &Cli, what: FitWhat) -> Result<Grid, Failure> {
    Ok(match what {
        FitWhat::Bounds => analysis::bound_grid(DEFAULT_DEGREES, DEFAULT_DIAMETERS),
        FitWhat::Records => {
            load_records(cli)?.order_grid_range(DEFAULT_DEGREES, DEFAULT_DIAMETERS)
        }
        FitWhat::Percent => {
            load_records(cli)?.percentage_grid_range(DEFAULT_DEGREES, DEFAULT_DIAMETERS)
        }
    })
}

fn fit_model_json(fit: &PolyFit, what: &str, log: bool) -> serde_json::Value {
    serde_json::json!({
        "what": what,
        "transform": if log { "log" } else { "identity" },
        "max_total_degree": fit.max_total_degree,
        "r_squared": fit.r_squared,
        "coefficients": fit
            .coefficients
            .iter()
            .map(|(&(a, b), &c)| {
                serde_json::json!({
                    "degree_power": a,
                    "diameter_power": b,
                    "value": c,
                })
            })
            .collect::<Vec<_>>(),
    })
}

fn run_grid(cli: &Cli, args: &GridArgs) -> Result<(), Failure> {
    let grid = match args.what {
        GridWhat::Percent => load_records(cli)?.percentage_grid(),
        GridWhat::Diff => {
            let bounds = analysis::bound_grid(DEFAULT_DEGREES, DEFAULT_DIAMETERS);
            let fit = analysis::fit_poly(&bounds, 3, Transform::Log)?;
            analysis::diff_grid(&fit, &bounds.ln()?, true)?
        }
    };
    let csv = grid.to_csv();
    match &args.out {
        Some(path) => {
            fs::write(path, &csv)
                .map_err(|e| domain(format!("cannot write `{}`: {e}", path.display())))?;
            eprintln!("wrote {}", path.display());
        }
        None => print!("{csv}"),
    }
    Ok(())
}

fn run_oracle(cli: &Cli, args: &OracleArgs) -> Result<(), Failure> {
    let mut solutions = brute_force_oracle(args.n, args.deg, args.diam)?;
    solutions.sort();
    print_solutions(cli.format, &solutions);
    Ok(())
}
