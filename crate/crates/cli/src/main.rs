//! Command-line surface: graph ingestion, Koszulness verdicts with
//! certificates, Groebner/colon/Betti computations, and the built-in fixture
//! suite.
//!
//! Exit codes: 0 success (verdicts such as "not closed" or "not Koszul" are
//! successes), 1 failing fixture, 2 parse or configuration error, 3 resource
//! cap exceeded.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use koszul_pairs::bar::{BarLimits, BettiEngine};
use koszul_pairs::closed::{closed_labeling, is_closed, ClosednessCertificate};
use koszul_pairs::decision::{cross_check, decide_pair};
use koszul_pairs::error::{BarError, GbError};
use koszul_pairs::field::{Field, PrimeField, Rationals};
use koszul_pairs::fixtures::{verify_fixture_suite, FixtureStatus, SuiteConfig};
use koszul_pairs::gb::{buchberger_reduced, colon_by, GbLimits, ReducedGB};
use koszul_pairs::graph::Graph;
use koszul_pairs::pair::{linear_quotients_check, pair_ideal_generators, PairRing};
use koszul_pairs::poly::parse_poly;

#[derive(Parser)]
#[command(name = "koszul-pairs", version, about = "Koszulness of binomial edge ideals of pairs of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Field characteristic: a prime, or 0 for the rationals (default 32003,
    /// env KOSZUL_FIELD_P)
    #[arg(long, global = true)]
    p: Option<u64>,
    /// Cap on Groebner basis size (env KOSZUL_CAP_GB)
    #[arg(long, global = true)]
    cap_gb: Option<usize>,
    /// Cap on bar space dimension (env KOSZUL_CAP_BAR)
    #[arg(long, global = true)]
    cap_bar: Option<usize>,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Lex,
    Revlex,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph is closed; print the labeling or obstruction
    CheckGraph { path: PathBuf },
    /// Print a closed labeling and its interval facets, if one exists
    Label { path: PathBuf },
    /// Decide Koszulness of the pair of graphs
    CheckPair {
        path1: PathBuf,
        path2: PathBuf,
        /// Re-verify the verdict with Groebner bases and linear quotients
        #[arg(long)]
        cross_check: bool,
    },
    /// Reduced Groebner basis of the pair ideal
    Gb {
        path1: PathBuf,
        path2: PathBuf,
        #[arg(long, value_enum, default_value_t = OrderArg::Lex)]
        order: OrderArg,
    },
    /// Colon of the pair ideal by a polynomial
    Colon {
        path1: PathBuf,
        path2: PathBuf,
        /// Divisor, e.g. "x[3,1]" or "x[1,1]*x[2,2] - x[1,2]*x[2,1]"
        #[arg(long)]
        by: String,
    },
    /// Linear-quotients walk over the variable sequence
    Quotients { path1: PathBuf, path2: PathBuf },
    /// One graded Betti number of the residue field over the pair algebra
    Betti {
        path1: PathBuf,
        path2: PathBuf,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    /// Run the built-in fixture suite; nonzero exit on any failure
    VerifyPaper,
}

enum CliError {
    Config(String),
    ResourceCap(String),
    FixtureFailure,
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::FixtureFailure => 1,
            CliError::Config(_) => 2,
            CliError::ResourceCap(_) => 3,
        }
    }
}

impl From<GbError> for CliError {
    fn from(e: GbError) -> Self {
        match e {
            GbError::ResourceCap(_) => CliError::ResourceCap(e.to_string()),
            other => CliError::Config(other.to_string()),
        }
    }
}

impl From<BarError> for CliError {
    fn from(e: BarError) -> Self {
        match e {
            BarError::DimCapExceeded { .. } => CliError::ResourceCap(e.to_string()),
            BarError::Gb(g) => g.into(),
            other => CliError::Config(other.to_string()),
        }
    }
}

struct Config {
    p: u64,
    gb: GbLimits,
    bar: BarLimits,
    format: Format,
}

fn env_number<T: std::str::FromStr>(name: &str) -> Result<Option<T>, CliError> {
    match std::env::var(name) {
        Err(_) => Ok(None),
        Ok(raw) => raw
            .parse::<T>()
            .map(Some)
            .map_err(|_| CliError::Config(format!("bad {name}: {raw:?}"))),
    }
}

fn resolve_config(cli: &Cli) -> Result<Config, CliError> {
    let p = match cli.p {
        Some(p) => p,
        None => env_number::<u64>("KOSZUL_FIELD_P")?.unwrap_or(32003),
    };
    let mut gb = GbLimits::default();
    if let Some(cap) = match cli.cap_gb {
        Some(c) => Some(c),
        None => env_number::<usize>("KOSZUL_CAP_GB")?,
    } {
        if cap == 0 {
            return Err(CliError::Config("cap-gb must be positive".into()));
        }
        gb.max_elements = cap;
    }
    let mut bar = BarLimits::default();
    if let Some(cap) = match cli.cap_bar {
        Some(c) => Some(c),
        None => env_number::<usize>("KOSZUL_CAP_BAR")?,
    } {
        if cap == 0 {
            return Err(CliError::Config("cap-bar must be positive".into()));
        }
        bar.dim_cap = cap;
    }
    Ok(Config {
        p,
        gb,
        bar,
        format: cli.format,
    })
}

fn prime_field(cfg: &Config) -> Result<PrimeField, CliError> {
    if cfg.p == 0 {
        return Err(CliError::Config(
            "this command needs a prime characteristic (p > 0)".into(),
        ));
    }
    PrimeField::new(cfg.p).map_err(CliError::from)
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
    Graph::parse(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
}

fn vertex_list(vs: &[usize]) -> String {
    let inner: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

fn certificate_text(cert: &ClosednessCertificate) -> String {
    match cert {
        ClosednessCertificate::ClosedLabeling { labeling, facets } => {
            let facet_text: Vec<String> = facets
                .facets
                .iter()
                .map(|(a, b)| format!("[{a},{b}]"))
                .collect();
            format!(
                "CLOSED\nlabeling: {:?}\nfacets: {}",
                labeling.as_slice(),
                facet_text.join(" ")
            )
        }
        ClosednessCertificate::InducedCycle { vertices } => format!(
            "NOT CLOSED: induced {}-cycle on {}",
            vertices.len(),
            vertex_list(vertices)
        ),
        ClosednessCertificate::Claw(w) => format!(
            "NOT CLOSED: induced claw centered at {} with leaves {}",
            w.center,
            vertex_list(&w.leaves)
        ),
        ClosednessCertificate::Net(w) => {
            format!("NOT CLOSED: induced net on {}", vertex_list(&w.vertices()))
        }
        ClosednessCertificate::Sun(w) => {
            format!("NOT CLOSED: induced 3-sun on {}", vertex_list(&w.vertices()))
        }
    }
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serialization cannot fail")
    );
}

fn cmd_check_graph(path: &Path, cfg: &Config) -> Result<(), CliError> {
    let g = read_graph(path)?;
    let cert = is_closed(&g);
    match cfg.format {
        Format::Json => print_json(&cert),
        Format::Text => println!("{}", certificate_text(&cert)),
    }
    Ok(())
}

fn cmd_label(path: &Path, cfg: &Config) -> Result<(), CliError> {
    let g = read_graph(path)?;
    match closed_labeling(&g) {
        Some((labeling, facets)) => match cfg.format {
            Format::Json => print_json(&serde_json::json!({
                "labeling": labeling,
                "facets": facets,
            })),
            Format::Text => {
                let facet_text: Vec<String> = facets
                    .facets
                    .iter()
                    .map(|(a, b)| format!("[{a},{b}]"))
                    .collect();
                println!("labeling: {:?}", labeling.as_slice());
                println!("facets: {}", facet_text.join(" "));
            }
        },
        None => match cfg.format {
            Format::Json => print_json(&serde_json::json!({ "labeling": null })),
            Format::Text => println!("no closed labeling exists"),
        },
    }
    Ok(())
}

fn cmd_check_pair(
    path1: &Path,
    path2: &Path,
    with_cross_check: bool,
    cfg: &Config,
) -> Result<(), CliError> {
    let g1 = read_graph(path1)?;
    let g2 = read_graph(path2)?;
    let verdict = decide_pair(&g1, &g2);
    let report = if with_cross_check {
        Some(if cfg.p == 0 {
            cross_check(&g1, &g2, &verdict, Rationals, &cfg.gb)
        } else {
            cross_check(&g1, &g2, &verdict, prime_field(cfg)?, &cfg.gb)
        })
    } else {
        None
    };
    match cfg.format {
        Format::Json => print_json(&serde_json::json!({
            "verdict": verdict,
            "cross_check": report,
        })),
        Format::Text => {
            println!("status: {:?}", verdict.status);
            println!("reason: {}", verdict.reason);
            println!("graph 1: {}", certificate_text(&verdict.certificate1));
            println!("graph 2: {}", certificate_text(&verdict.certificate2));
            println!("c-universal: {}", verdict.c_universal);
            if let Some(report) = report {
                println!("cross-check:");
                println!("  lex basis quadratic:    {:?}", report.gb_lex_quadratic);
                println!("  revlex basis quadratic: {:?}", report.gb_revlex_quadratic);
                println!("  linear quotients:       {:?}", report.linear_quotients_ok);
                println!("  all labelings fail:     {:?}", report.all_labelings_fail);
                for w in &report.witnesses {
                    println!("  note: {w}");
                }
                for s in &report.skipped {
                    println!("  skipped: {s}");
                }
                println!("  consistent: {}", report.consistent);
                if !report.consistent {
                    eprintln!(
                        "warning: algebraic cross-check disagrees with the combinatorial verdict; this indicates a bug"
                    );
                }
            }
        }
    }
    Ok(())
}

fn gb_for<F: Field>(
    g1: &Graph,
    g2: &Graph,
    field: F,
    order: OrderArg,
    limits: &GbLimits,
) -> Result<(PairRing<F>, ReducedGB<F>), CliError> {
    let pr = PairRing::new(g1.n(), g2.n(), field);
    let gens = pair_ideal_generators(g1, g2, &pr)?;
    let ord = match order {
        OrderArg::Lex => pr.lex_order(),
        OrderArg::Revlex => pr.revlex_order(),
    };
    let gb = buchberger_reduced(&pr.ring, &gens, &ord, limits)?;
    Ok((pr, gb))
}

fn render_gb<F: Field>(pr: &PairRing<F>, gb: &ReducedGB<F>, order: OrderArg, cfg: &Config) {
    let order_name = match order {
        OrderArg::Lex => "lex",
        OrderArg::Revlex => "revlex",
    };
    let elements: Vec<String> = gb
        .elements()
        .iter()
        .map(|g| g.to_text(&pr.ring, gb.order()))
        .collect();
    match cfg.format {
        Format::Json => print_json(&serde_json::json!({
            "order": order_name,
            "quadratic": gb.is_quadratic(),
            "max_degree": gb.max_degree(),
            "elements": elements,
        })),
        Format::Text => {
            println!("order: {order_name}");
            println!("quadratic: {}", gb.is_quadratic());
            println!("max degree: {}", gb.max_degree());
            for e in &elements {
                println!("  {e}");
            }
        }
    }
}

fn cmd_gb(path1: &Path, path2: &Path, order: OrderArg, cfg: &Config) -> Result<(), CliError> {
    let g1 = read_graph(path1)?;
    let g2 = read_graph(path2)?;
    if cfg.p == 0 {
        let (pr, gb) = gb_for(&g1, &g2, Rationals, order, &cfg.gb)?;
        render_gb(&pr, &gb, order, cfg);
    } else {
        let (pr, gb) = gb_for(&g1, &g2, prime_field(cfg)?, order, &cfg.gb)?;
        render_gb(&pr, &gb, order, cfg);
    }
    Ok(())
}

fn colon_with<F: Field>(
    g1: &Graph,
    g2: &Graph,
    by: &str,
    field: F,
    cfg: &Config,
) -> Result<Vec<String>, CliError> {
    let pr = PairRing::new(g1.n(), g2.n(), field);
    let gens = pair_ideal_generators(g1, g2, &pr)?;
    let f = parse_poly(&pr.ring, by)?;
    let order = pr.lex_order();
    let result = colon_by(&pr.ring, &gens, &f, &order, &cfg.gb)?;
    Ok(result.iter().map(|g| g.to_text(&pr.ring, &order)).collect())
}

fn cmd_colon(path1: &Path, path2: &Path, by: &str, cfg: &Config) -> Result<(), CliError> {
    let g1 = read_graph(path1)?;
    let g2 = read_graph(path2)?;
    let gens = if cfg.p == 0 {
        colon_with(&g1, &g2, by, Rationals, cfg)?
    } else {
        colon_with(&g1, &g2, by, prime_field(cfg)?, cfg)?
    };
    match cfg.format {
        Format::Json => print_json(&serde_json::json!({ "generators": gens })),
        Format::Text => {
            for g in &gens {
                println!("{g}");
            }
        }
    }
    Ok(())
}

fn cmd_quotients(path1: &Path, path2: &Path, cfg: &Config) -> Result<(), CliError> {
    let g1 = read_graph(path1)?;
    let g2 = read_graph(path2)?;
    let report = if cfg.p == 0 {
        let pr = PairRing::new(g1.n(), g2.n(), Rationals);
        linear_quotients_check(&g1, &g2, &pr, &cfg.gb)?
    } else {
        let pr = PairRing::new(g1.n(), g2.n(), prime_field(cfg)?);
        linear_quotients_check(&g1, &g2, &pr, &cfg.gb)?
    };
    match cfg.format {
        Format::Json => print_json(&report),
        Format::Text => {
            for step in &report.steps {
                match &step.witness {
                    None => println!("x[{},{}]: ok", step.var.0, step.var.1),
                    Some(w) => println!("x[{},{}]: FAIL, witness {w}", step.var.0, step.var.1),
                }
            }
            println!(
                "linear quotients: {}",
                if report.all_passed() { "pass" } else { "fail" }
            );
        }
    }
    Ok(())
}

fn cmd_betti(path1: &Path, path2: &Path, i: usize, j: usize, cfg: &Config) -> Result<(), CliError> {
    let g1 = read_graph(path1)?;
    let g2 = read_graph(path2)?;
    let field = prime_field(cfg)?;
    let pr = PairRing::new(g1.n(), g2.n(), field);
    let gens = pair_ideal_generators(&g1, &g2, &pr)?;
    let gb = buchberger_reduced(&pr.ring, &gens, &pr.lex_order(), &cfg.gb)?;
    let mut engine = BettiEngine::new(pr.ring.clone(), &gb, cfg.bar)?;
    let value = engine.betti(i, j)?;
    match cfg.format {
        Format::Json => print_json(&serde_json::json!({
            "i": i, "j": j, "p": cfg.p, "value": value,
        })),
        Format::Text => println!("{value}"),
    }
    Ok(())
}

fn cmd_verify_paper(cfg: &Config) -> Result<(), CliError> {
    let suite = SuiteConfig {
        p: if cfg.p == 0 { 32003 } else { cfg.p },
        gb: cfg.gb,
        bar: cfg.bar,
    };
    let report = verify_fixture_suite(&suite);
    match cfg.format {
        Format::Json => print_json(&report),
        Format::Text => {
            for r in &report.results {
                let status = match &r.status {
                    FixtureStatus::Pass => "pass".to_string(),
                    FixtureStatus::Fail(msg) => format!("FAIL: {msg}"),
                    FixtureStatus::Skipped(msg) => format!("skipped: {msg}"),
                };
                println!("{:<60} {}", r.name, status);
            }
        }
    }
    if report.all_passed() {
        Ok(())
    } else {
        Err(CliError::FixtureFailure)
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let cfg = resolve_config(cli)?;
    match &cli.command {
        Command::CheckGraph { path } => cmd_check_graph(path, &cfg),
        Command::Label { path } => cmd_label(path, &cfg),
        Command::CheckPair {
            path1,
            path2,
            cross_check,
        } => cmd_check_pair(path1, path2, *cross_check, &cfg),
        Command::Gb {
            path1,
            path2,
            order,
        } => cmd_gb(path1, path2, *order, &cfg),
        Command::Colon { path1, path2, by } => cmd_colon(path1, path2, by, &cfg),
        Command::Quotients { path1, path2 } => cmd_quotients(path1, path2, &cfg),
        Command::Betti { path1, path2, i, j } => cmd_betti(path1, path2, *i, *j, &cfg),
        Command::VerifyPaper => cmd_verify_paper(&cfg),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CliError::Config(msg) => eprintln!("error: {msg}"),
                CliError::ResourceCap(msg) => eprintln!("resource cap: {msg}"),
                CliError::FixtureFailure => eprintln!("fixture suite failed"),
            }
            ExitCode::from(e.code())
        }
    }
}
