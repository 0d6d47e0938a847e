use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use poisson_cohomology::cohomology::Window;
use poisson_cohomology::homology::form_window;
use poisson_cohomology::milnor::check_isolated;
use poisson_cohomology::report::{
    analyze, pairs_text, resolve_window, AnalyzeOptions, Gate, Input, MilnorSummary, EXIT_INVALID, EXIT_MISMATCH,
    EXIT_OK, EXIT_REJECTED,
};
use poisson_cohomology::verify::{parse_suites, SuiteReport, Verifier};
use poisson_cohomology::{Poly, PoissonStructure, WeightSystem};

#[derive(Parser)]
#[command(name = "poisson", version, about = "Poisson cohomology and homology of weight homogeneous surfaces in 3-space")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(clap::Args)]
struct Common {
    /// The polynomial phi, e.g. "x^3+y^3+z^3".
    #[arg(long)]
    phi: String,
    /// Weights of x, y, z.
    #[arg(long, default_value = "1,1,1")]
    weights: WeightSystem,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(clap::Args)]
struct WindowArgs {
    /// Smallest derivation degree to compute (defaults to -|w|).
    #[arg(long, allow_hyphen_values = true)]
    min_degree: Option<i64>,
    /// Largest derivation degree to compute (defaults to 5 deg(phi) - 2|w|).
    #[arg(long, allow_hyphen_values = true)]
    max_degree: Option<i64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Gate, closed forms, brute-force dims and every property suite.
    Analyze {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Prints {f, g}.
    Bracket {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// Runs property suites.
    Verify {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        window: WindowArgs,
        /// identities, koszul, cohomology, homology, surface or all.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// The isolated singularity gate and the Milnor algebra.
    Milnor {
        #[command(flatten)]
        common: Common,
    },
}

fn invalid(msg: impl std::fmt::Display) -> i32 {
    eprintln!("error: {msg}");
    EXIT_INVALID
}

fn parse_poly(text: &str) -> Result<Poly, i32> {
    Poly::parse(text).map_err(|e| invalid(format!("cannot parse {text:?}: {e}")))
}

fn structure(c: &Common) -> Result<PoissonStructure, i32> {
    let phi = parse_poly(&c.phi)?;
    PoissonStructure::new(phi, c.weights).map_err(invalid)
}

fn print_json<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string_pretty(v).expect("output serializes"));
}

fn run(cli: Cli) -> Result<i32, i32> {
    match cli.command {
        Command::Analyze { common, window } => {
            let p = structure(&common)?;
            let opts = AnalyzeOptions {
                min_degree: window.min_degree,
                max_degree: window.max_degree,
                seed: window.seed,
            };
            let report = analyze(&p, &common.phi, opts).map_err(invalid)?;
            match common.format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => print!("{}", report.to_text()),
            }
            if let Some(r) = &report.gate.rejection {
                eprintln!("rejected: {r}");
            } else if let Some(m) = report.first_mismatch() {
                eprintln!("mismatch in {} at degree {}: {}", m.space, degree_text(m.degree), m.detail);
            }
            Ok(report.exit_code())
        }
        Command::Bracket { common, f, g } => {
            let p = structure(&common)?;
            let b = p.bracket(&parse_poly(&f)?, &parse_poly(&g)?);
            let text = b.display_with(p.weights()).to_string();
            match common.format {
                Format::Json => print_json(&serde_json::json!({ "bracket": text })),
                Format::Text => println!("{text}"),
            }
            Ok(EXIT_OK)
        }
        Command::Verify { common, window, suite } => {
            let p = structure(&common)?;
            let suites = parse_suites(&suite).map_err(invalid)?;
            let win = resolve_window(&p, window.min_degree, window.max_degree);
            let gate = check_isolated(p.phi(), p.weights());
            let m = gate.as_ref().ok();
            if m.is_none() && suites.iter().any(|s| s.needs_gate()) {
                let r = gate.as_ref().unwrap_err();
                eprintln!("rejected: {r}");
                return Ok(EXIT_REJECTED);
            }
            let v = Verifier::new(&p, m, win, window.seed);
            let reports = suites
                .iter()
                .map(|s| v.run(*s))
                .collect::<Result<Vec<SuiteReport>, _>>()
                .map_err(invalid)?;
            let out = VerifyOutput {
                input: input(&common, &p, win, window.seed),
                gate: Gate {
                    accepted: gate.is_ok(),
                    rejection: gate.clone().err(),
                },
                passed: reports.iter().all(|r| r.passed),
                suites: reports,
            };
            match common.format {
                Format::Json => print_json(&out),
                Format::Text => print!("{}", verify_text(&out)),
            }
            for r in &out.suites {
                if let Some(c) = r.first_failure() {
                    eprintln!(
                        "suite {} failed: {} in {} at degree {}: {}",
                        r.suite,
                        c.name,
                        c.space.as_deref().unwrap_or("-"),
                        degree_text(c.degree),
                        c.detail.as_deref().unwrap_or("")
                    );
                    return Ok(EXIT_MISMATCH);
                }
            }
            Ok(EXIT_OK)
        }
        Command::Milnor { common } => {
            let p = structure(&common)?;
            let gate = check_isolated(p.phi(), p.weights());
            let out = MilnorOutput {
                phi: common.phi.clone(),
                weights: p.weights().weights(),
                gate: Gate {
                    accepted: gate.is_ok(),
                    rejection: gate.clone().err(),
                },
                milnor: gate.as_ref().ok().map(|m| MilnorSummary::new(&p, m)),
            };
            match common.format {
                Format::Json => print_json(&out),
                Format::Text => print!("{}", milnor_text(&out)),
            }
            match gate {
                Ok(_) => Ok(EXIT_OK),
                Err(r) => {
                    eprintln!("rejected: {r}");
                    Ok(EXIT_REJECTED)
                }
            }
        }
    }
}

fn input(c: &Common, p: &PoissonStructure, window: Window, seed: u64) -> Input {
    Input {
        phi: c.phi.clone(),
        weights: p.weights().weights(),
        window,
        form_window: form_window(p, window),
        seed,
    }
}

fn degree_text(d: Option<i64>) -> String {
    d.map_or_else(|| "-".to_string(), |d| d.to_string())
}

#[derive(Serialize)]
struct VerifyOutput {
    input: Input,
    gate: Gate,
    passed: bool,
    suites: Vec<SuiteReport>,
}

fn verify_text(out: &VerifyOutput) -> String {
    let mut s = format!("phi: {}\nseed: {}\n", out.input.phi, out.input.seed);
    for r in &out.suites {
        s += &format!("suite {}: {}\n", r.suite, if r.passed { "pass" } else { "FAIL" });
        for c in &r.checks {
            s += &format!("  {}: {} ({} cases)\n", c.name, if c.passed { "pass" } else { "FAIL" }, c.cases);
            if let Some(d) = &c.detail {
                s += &format!("    {d}\n");
            }
        }
    }
    s
}

#[derive(Serialize)]
struct MilnorOutput {
    phi: String,
    weights: [i64; 3],
    gate: Gate,
    milnor: Option<MilnorSummary>,
}

fn milnor_text(out: &MilnorOutput) -> String {
    let mut s = format!("phi: {}\n", out.phi);
    match (&out.gate.rejection, &out.milnor) {
        (Some(r), _) => s += &format!("gate: rejected: {r}\n"),
        (None, Some(m)) => {
            s += "gate: accepted\n";
            s += &format!("d = {}, |w| = {}, socle bound = {}, mu = {}\n", m.degree, m.weight_sum, m.socle_bound, m.mu);
            s += &format!("milnor dims: {}\n", pairs_text(&m.graded_dims));
            let basis: Vec<String> = m.basis_u.iter().map(|b| format!("{} ({})", b.monomial, b.degree)).collect();
            s += &format!("basis u: {}\n", basis.join(", "));
        }
        (None, None) => {}
    }
    s
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = run(cli).unwrap_or_else(|c| c);
    ExitCode::from(code as u8)
}

