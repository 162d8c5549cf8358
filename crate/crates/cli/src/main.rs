//! `galois-moebius`: apply `[A, σ_i]` to polynomials, list its invariants,
//! count SCRIMs and run the verification suites.
//!
//! Exit statuses: 0 success, 2 parse/usage, 3 math domain, 4 cap or
//! budget, 5 verification mismatch.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use galois_moebius::invariants::{
    bju_scrim_count, construct_scrim, scrim_count, scrim_scan, CensusReport, Method,
};
use galois_moebius::verify::{self, Suite};
use galois_moebius::{arith, Caps, Error, FieldTower, Invariants, PolyRing};

const THREADS_VAR: &str = "GALOIS_MOEBIUS_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "galois-moebius",
    version,
    about = "Möbius–Frobenius invariants over finite fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,

    /// Seed for randomized factorization and property sampling.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    /// Largest q^s for which the divisor polynomial is built.
    #[arg(long, global = true, default_value_t = Caps::default().enum_cap)]
    cap_enum: u128,

    /// Largest candidate space Q^k a census may scan.
    #[arg(long, global = true, default_value_t = Caps::default().census_budget)]
    cap_census: u128,

    /// Include wall-clock timings (makes output nondeterministic).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Fast,
    Census,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ScrimMode {
    Count,
    List,
    Construct,
}

#[derive(Args, Debug)]
struct TowerArgs {
    /// Characteristic.
    #[arg(long)]
    p: u64,
    /// q = p^e.
    #[arg(long)]
    e: u32,
    /// Top field is F_{q^n}.
    #[arg(long)]
    n: u32,
}

#[derive(Args, Debug)]
struct ElementArgs {
    #[command(flatten)]
    tower: TowerArgs,
    /// Matrix "a;b;c;d" with entries in the top-field grammar.
    #[arg(long)]
    matrix: String,
    /// Frobenius index i of [A, σ_i].
    #[arg(long, default_value_t = 1)]
    frob: i64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print [A, σ_i] * f.
    Act {
        #[command(flatten)]
        element: ElementArgs,
        /// Polynomial "c0,c1,...,ck".
        #[arg(long)]
        poly: String,
    },
    /// Monic irreducible [A, σ_i]-invariants of the given degrees.
    Invariants {
        #[command(flatten)]
        element: ElementArgs,
        /// Degrees, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        degree: Vec<usize>,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
    /// SCRIMs over F_{q^2}.
    Scrim {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        degree: u64,
        #[arg(long, value_enum, default_value_t = ScrimMode::Count)]
        mode: ScrimMode,
    },
    /// Run the named property suites.
    Verify {
        /// Suites, comma separated (axioms, equivalence, census, formulas);
        /// all when omitted.
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
    },
}

/// A failure together with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse(_)
            | Error::LevelMismatch(_)
            | Error::InvalidArgument(_)
            | Error::NotPrime(_)
            | Error::ReducibleModulus(_) => 2,
            Error::DegreeTooLarge { .. }
            | Error::BudgetExceeded { .. }
            | Error::FieldTooLarge(_) => 4,
            Error::InvariantCheckFailed(_) => 5,
            _ => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn mismatch(message: impl Into<String>) -> Failure {
    Failure {
        code: 5,
        message: message.into(),
    }
}

type CliResult = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Err(f) = configure_threads() {
        eprintln!("error: {}", f.message);
        return ExitCode::from(f.code);
    }
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().map_err(|_| Failure {
        code: 2,
        message: format!("{THREADS_VAR} must be a positive integer, got {raw:?}"),
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure {
            code: 2,
            message: e.to_string(),
        })
}

fn run(cli: &Cli) -> CliResult {
    let caps = Caps {
        enum_cap: cli.cap_enum,
        census_budget: cli.cap_census,
    };
    match &cli.command {
        Command::Act { element, poly } => act(cli, element, poly),
        Command::Invariants {
            element,
            degree,
            method,
        } => invariants(cli, caps, element, degree, *method),
        Command::Scrim { q, degree, mode } => scrim(cli, *q, *degree, *mode),
        Command::Verify { suite } => run_verify(cli, suite),
    }
}

fn tower(args: &TowerArgs) -> Result<FieldTower, Failure> {
    Ok(FieldTower::new(args.p, args.e, args.n)?)
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct ActOutput<'a> {
    schema: u32,
    matrix: &'a str,
    frob: u32,
    input: String,
    output: String,
    coefficients: serde_json::Value,
}

fn act(cli: &Cli, element: &ElementArgs, poly: &str) -> CliResult {
    let inv = Invariants::new(tower(&element.tower)?, Caps::default());
    let group = inv.group();
    let ring = inv.ring();
    let m = group.parse(&element.matrix)?;
    let g = group.semilinear(&m, element.frob)?;
    let f = ring.parse(poly)?;
    let k = f.degree().unwrap_or(0);
    if k < 2 {
        return Err(Error::DegreeTooSmall(k).into());
    }
    let image = group.semilinear_act(&g, &f)?;
    let text = ring.format(&image);
    Ok(match cli.output {
        Output::Text => format!("{text}\n"),
        Output::Json => json(&ActOutput {
            schema: 1,
            matrix: &group.format(g.mat.rep()),
            frob: g.frob,
            input: ring.format(&f),
            output: text,
            coefficients: ring.to_json(&image),
        }),
    })
}

#[derive(Serialize)]
struct BothOutput {
    schema: u32,
    agree: bool,
    fast: CensusReport,
    census: CensusReport,
}

fn invariants(
    cli: &Cli,
    caps: Caps,
    element: &ElementArgs,
    degrees: &[usize],
    method: MethodArg,
) -> CliResult {
    let inv = Invariants::new(tower(&element.tower)?, caps).with_seed(cli.seed);
    let m = inv.group().parse(&element.matrix)?;
    let g = inv.group().semilinear(&m, element.frob)?;
    if let Some(&k) = degrees.iter().find(|&&k| k <= 2) {
        return Err(Error::DegreeTooSmall(k).into());
    }
    let render = |r: &CensusReport| match cli.output {
        Output::Text => r.to_text(),
        Output::Json => format!("{}\n", r.to_json()),
    };
    match method {
        MethodArg::Fast => Ok(render(&inv.report(
            &g,
            degrees,
            Method::DivisorPolynomials,
            cli.timing,
        )?)),
        MethodArg::Census => Ok(render(&inv.report(
            &g,
            degrees,
            Method::BruteForce,
            cli.timing,
        )?)),
        MethodArg::Both => {
            let fast = inv.report(&g, degrees, Method::DivisorPolynomials, cli.timing)?;
            let census = inv.report(&g, degrees, Method::BruteForce, cli.timing)?;
            let agree = fast.sets() == census.sets();
            let out = match cli.output {
                Output::Text => format!(
                    "{}\n{}\nagree     {}\n",
                    fast.to_text(),
                    census.to_text(),
                    if agree { "yes" } else { "NO" }
                ),
                Output::Json => json(&BothOutput {
                    schema: 1,
                    agree,
                    fast,
                    census,
                }),
            };
            if agree {
                Ok(out)
            } else {
                print!("{out}");
                Err(mismatch(
                    "divisor-polynomial enumeration and census disagree",
                ))
            }
        }
    }
}

#[derive(Serialize)]
struct ScrimOutput {
    schema: u32,
    q: u64,
    degree: u64,
    mode: &'static str,
    count: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    polys: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    srim: Option<String>,
}

fn scrim(cli: &Cli, q: u64, degree: u64, mode: ScrimMode) -> CliResult {
    let count = scrim_count(q, degree)?;
    let other = bju_scrim_count(q, degree)?;
    if count != other {
        return Err(mismatch(format!(
            "Möbius-sum count {count} differs from the φ-sum count {other}"
        )));
    }
    let (p, e) = arith::prime_power(q).expect("checked by scrim_count");
    let mut out = ScrimOutput {
        schema: 1,
        q,
        degree,
        mode: "count",
        count,
        polys: None,
        srim: None,
    };
    match mode {
        ScrimMode::Count => {}
        ScrimMode::List => {
            let tower = FieldTower::new(p, e, 2)?;
            let ring = PolyRing::new(tower.top().clone());
            let found = scrim_scan(&tower, degree as usize, cli.cap_census)?;
            if found.len() as u128 != count {
                return Err(mismatch(format!(
                    "scan found {} SCRIMs, formula says {count}",
                    found.len()
                )));
            }
            out.mode = "list";
            out.polys = Some(found.iter().map(|f| ring.format(f)).collect());
        }
        ScrimMode::Construct => {
            let tower = FieldTower::new(p, e, 2)?;
            let pair = construct_scrim(&tower, degree, cli.seed)?;
            let top = PolyRing::new(tower.top().clone());
            let base = PolyRing::new(tower.base().clone());
            out.mode = "construct";
            out.srim = Some(base.format(&pair.srim));
            out.polys = Some(pair.factors.iter().map(|f| top.format(f)).collect());
        }
    }
    Ok(match cli.output {
        Output::Json => json(&out),
        Output::Text => {
            let mut s = match mode {
                ScrimMode::Count => format!("{count}\n"),
                _ => format!("count {count}\n"),
            };
            if let Some(srim) = &out.srim {
                s.push_str(&format!("srim  {srim}\n"));
            }
            for f in out.polys.iter().flatten() {
                s.push_str(&format!("    {f}\n"));
            }
            s
        }
    })
}

fn run_verify(cli: &Cli, names: &[String]) -> CliResult {
    let suites: Vec<Suite> = if names.is_empty() {
        Suite::ALL.to_vec()
    } else {
        names
            .iter()
            .map(|s| s.parse::<Suite>())
            .collect::<Result<_, _>>()?
    };
    let report = verify::run(&suites, cli.seed)?;
    let out = match cli.output {
        Output::Text => report.to_text(),
        Output::Json => format!("{}\n", report.to_json()),
    };
    if report.passed() {
        Ok(out)
    } else {
        print!("{out}");
        Err(mismatch("verification suite failed"))
    }
}
