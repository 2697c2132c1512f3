use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use circulant::diameter::{check_diameter_bounds, family_diam2, family_diam_2r_plus_1, Diameter};
use circulant::extremal::{degree_table, enumerate_integral};
use circulant::parse::{parse_u64_list, GraphInput};
use circulant::quantum::{
    antipodal_criterion, is_scalar_at, period, pst_search, transfer_amplitude_exact,
    AntipodalVariant, RationalAngle,
};
use circulant::report::{self, render, AnalyzeOptions};
use circulant::{CirculantGraph, DivisorSet, Error};

/// Exit status for a failed internal verification (a bound or claimed value
/// that did not hold).
const EXIT_VERIFY: u8 = 1;
/// Exit status for invalid input.
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(
    name = "circulant",
    version,
    about = "Integral circulant graph toolkit"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for randomized sampling.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct GraphArgs {
    /// Number of vertices.
    #[arg(long)]
    n: u64,
    /// Symbol S as a comma-separated list.
    #[arg(long, conflicts_with = "divisors", allow_hyphen_values = true)]
    symbol: Option<String>,
    /// Divisor set D as a comma-separated list.
    #[arg(long, allow_hyphen_values = true)]
    divisors: Option<String>,
}

impl GraphArgs {
    fn graph(&self) -> Result<CirculantGraph, Error> {
        let input = match (&self.symbol, &self.divisors) {
            (Some(s), _) => GraphInput::Symbol(parse_u64_list(s)?),
            (None, Some(d)) => GraphInput::Divisors(parse_u64_list(d)?),
            (None, None) => return Err(Error::Parse("pass --symbol or --divisors".into())),
        };
        input.build(self.n)
    }

    fn integral(&self) -> Result<DivisorSet, Error> {
        self.graph()?
            .integrality_decomposition()
            .ok_or(Error::NotIntegral)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// Product of r ≥ 3 distinct odd primes, D = the primes: diameter 2.
    Diam2,
    /// n = 2m², D = {(m/p)²}: diameter 2r + 1.
    Diam2rp1,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis of one graph.
    Analyze {
        #[command(flatten)]
        graph: GraphArgs,
        /// Include a perfect-state-transfer search.
        #[arg(long)]
        pst: bool,
        /// Denominator bound for the PST search (default 2n).
        #[arg(long)]
        max_q: Option<u64>,
    },
    /// Maximum order of a connected integral circulant for each degree.
    Table {
        #[arg(long, default_value_t = 11)]
        kmax: u64,
        #[arg(long, default_value_t = 500)]
        cap: u64,
    },
    /// Build a member of a prescribed-diameter family and verify it.
    Family {
        kind: Family,
        /// Comma-separated distinct odd primes.
        primes: String,
    },
    /// All connected integral circulants of order n.
    Enumerate {
        #[arg(long)]
        n: u64,
    },
    /// Perfect state transfer search from vertex 0.
    Pst {
        #[command(flatten)]
        graph: GraphArgs,
        /// Denominator bound for times t = πp/q (default 2n).
        #[arg(long)]
        max_q: Option<u64>,
        /// Evaluate a single time `p/q` (meaning πp/q) instead of searching.
        #[arg(long, allow_hyphen_values = true)]
        time: Option<String>,
    },
    /// Period of the walk on an integral graph.
    Period {
        #[command(flatten)]
        graph: GraphArgs,
    },
}

enum Failure {
    Input(String),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .expect("thread pool configured once");
    }
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Verify(report)) => {
            print!("{report}");
            eprintln!("verification failed");
            ExitCode::from(EXIT_VERIFY)
        }
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Analyze { graph, pst, max_q } => {
            let g = graph.graph()?;
            let opts = AnalyzeOptions {
                pst_max_q: pst.then(|| max_q.unwrap_or(2 * g.order())),
                seed: cli.seed,
            };
            let bundle = report::analyze(&g, opts);
            let out = render(&bundle.to_json());
            if bundle.is_consistent() {
                Ok(out)
            } else {
                Err(Failure::Verify(out))
            }
        }
        Command::Table { kmax, cap } => {
            if *kmax < 2 {
                return Err(Failure::Input("--kmax must be at least 2".into()));
            }
            let rows = degree_table(*kmax, *cap, cli.jobs != Some(1));
            Ok(match cli.format {
                Format::Csv => report::table_csv(&rows, *cap),
                Format::Json => render(&report::table_json(&rows, *cap)),
            })
        }
        Command::Family { kind, primes } => {
            let primes = parse_u64_list(primes)?;
            let (d, expected) = match kind {
                Family::Diam2 => (family_diam2(&primes)?, 2),
                Family::Diam2rp1 => (family_diam_2r_plus_1(&primes)?, 2 * primes.len() as u64 + 1),
            };
            let r = check_diameter_bounds(&d)?;
            let ok = r.diameter == Diameter::Finite(expected) && r.bounds_hold();
            let mut v = report::to_value(&r);
            v["expected_diameter"] = json!(expected);
            v["verified"] = json!(ok);
            let out = render(&v);
            if ok {
                Ok(out)
            } else {
                Err(Failure::Verify(out))
            }
        }
        Command::Enumerate { n } => {
            if *n < 2 {
                return Err(Failure::Input("--n must be at least 2".into()));
            }
            let c = enumerate_integral(*n);
            Ok(match cli.format {
                Format::Csv => report::enumeration_csv(*n, &c),
                Format::Json => render(&report::enumeration_json(*n, &c)),
            })
        }
        Command::Pst { graph, max_q, time } => {
            let d = graph.integral()?;
            let n = d.modulus();
            let v = match time {
                Some(t) => {
                    let t: RationalAngle = t.parse()?;
                    let amplitudes: Vec<Value> = (0..n)
                        .map(|b| {
                            let a = transfer_amplitude_exact(&d, 0, b, t).expect("b < n");
                            json!({ "b": b, "unit": a.exact_unit, "modulus": a.modulus })
                        })
                        .collect();
                    let antipodal = |variant| antipodal_criterion(&d, t, variant).ok();
                    json!({
                        "n": n,
                        "D": d.members(),
                        "t": t,
                        "amplitudes": amplitudes,
                        "antipodal_strict": antipodal(AntipodalVariant::Strict),
                        "antipodal_global_phase": antipodal(AntipodalVariant::GlobalPhase),
                    })
                }
                None => {
                    let max_q = max_q.unwrap_or(2 * n);
                    json!({
                        "n": n,
                        "D": d.members(),
                        "max_q": max_q,
                        "pst": if n > 1 { pst_search(&d, max_q) } else { None },
                    })
                }
            };
            Ok(render(&report::normalize(v)))
        }
        Command::Period { graph } => {
            let d = graph.integral()?;
            let p = period(&d);
            let ok = is_scalar_at(&d, p.time);
            let v = json!({
                "n": d.modulus(),
                "D": d.members(),
                "period": p.time,
                "degenerate": p.degenerate,
                "certified": ok,
            });
            if ok {
                Ok(render(&v))
            } else {
                Err(Failure::Verify(render(&v)))
            }
        }
    }
}
