use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qhakit::compute::{compute, render_computed, ComputeError, What};
use qhakit::format::{parse_structure, parse_twist, serialize_structure, serialize_twist, Document};
use qhakit::render::{render_run, Format};
use qhakit::suites::{run, Options, Suite};
use qhakit::{exit_status, load_input, EXIT_CHECKS_FAILED, EXIT_PASS, EXIT_UNUSABLE};
use qhakit_core::catalog::Structure;
use qhakit_core::qtriangular::{r_twist, Which};
use qhakit_core::random::random_twist;
use qhakit_core::twist::{twist_qha, twist_qt};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Exact verification of quasi-Hopf algebra identities.
#[derive(Parser)]
#[command(name = "qhakit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Common {
    /// Seed for randomized checks.
    #[arg(long, env = "QHAKIT_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
enum Quantity {
    Drinfeld,
    SecondDrinfeld,
    U,
    V,
    Gamma,
    Invariants,
    AcOperator,
}

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
enum ByR {
    R,
    RTilde,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites on a structure file or built-in name.
    Verify {
        input: String,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Random instances per randomized battery.
        #[arg(long, default_value_t = Options::default().samples)]
        samples: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Compute one derived element and print it with its checks.
    Compute {
        input: String,
        #[arg(value_enum)]
        what: Quantity,
        /// Exponent for `invariants`.
        #[arg(allow_negative_numbers = true)]
        m: Option<i64>,
        #[command(flatten)]
        common: Common,
    },
    /// Twist a structure and write the result.
    Twist {
        input: String,
        /// Twist file.
        #[arg(long, conflicts_with_all = ["generator_seed", "by"])]
        twist: Option<PathBuf>,
        /// Draw a random twist from this seed.
        #[arg(long, conflicts_with = "by")]
        generator_seed: Option<u64>,
        /// Twist by the R-matrix or by its tilde variant.
        #[arg(long, value_enum)]
        by: Option<ByR>,
        /// Also write the twist used to this file.
        #[arg(long)]
        save_twist: Option<PathBuf>,
        #[arg(long)]
        output: PathBuf,
    },
    /// Write a structure in canonical file form.
    Export {
        input: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn emit(text: &str, path: Option<&PathBuf>) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(|e| e.to_string())
        }
    }
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("qhakit: {msg}");
    ExitCode::from(code)
}

fn load(input: &str) -> Result<Document, ExitCode> {
    load_input(input).map_err(|e| fail(EXIT_UNUSABLE, format!("{} error: {e}", e.class())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { input, suite, samples, common } => {
            let doc = match load(&input) {
                Ok(d) => d,
                Err(code) => return code,
            };
            let r = match run(&input, &doc, suite, Options { seed: common.seed, samples }) {
                Ok(r) => r,
                Err(e) => return fail(EXIT_UNUSABLE, e),
            };
            if let Err(e) = emit(&render_run(&r, common.format), common.output.as_ref()) {
                return fail(EXIT_UNUSABLE, e);
            }
            ExitCode::from(exit_status(r.passed()))
        }
        Command::Compute { input, what, m, common } => {
            let what = match (what, m) {
                (Quantity::Invariants, Some(m)) => What::Invariants(m),
                (Quantity::Invariants, None) => return fail(EXIT_UNUSABLE, "`invariants` needs an exponent m"),
                (_, Some(_)) => return fail(EXIT_UNUSABLE, "only `invariants` takes an exponent"),
                (Quantity::Drinfeld, None) => What::Drinfeld,
                (Quantity::SecondDrinfeld, None) => What::SecondDrinfeld,
                (Quantity::U, None) => What::U,
                (Quantity::V, None) => What::V,
                (Quantity::Gamma, None) => What::Gamma,
                (Quantity::AcOperator, None) => What::AcOperator,
            };
            let doc = match load(&input) {
                Ok(d) => d,
                Err(code) => return code,
            };
            let c = match compute(&doc, what, common.seed) {
                Ok(c) => c,
                Err(e @ ComputeError::Inapplicable { .. }) => return fail(EXIT_UNUSABLE, e),
                Err(e @ ComputeError::Failed(_)) => return fail(EXIT_CHECKS_FAILED, e),
            };
            if let Err(e) = emit(&render_computed(&input, &c, common.format), common.output.as_ref()) {
                return fail(EXIT_UNUSABLE, e);
            }
            ExitCode::from(exit_status(c.report.passed()))
        }
        Command::Twist { input, twist, generator_seed, by, save_twist, output } => {
            let doc = match load(&input) {
                Ok(d) => d,
                Err(code) => return code,
            };
            let q = doc.structure.qha().qba();
            let f = match (twist, generator_seed, by) {
                (Some(path), _, _) => {
                    let text = match std::fs::read_to_string(&path) {
                        Ok(t) => t,
                        Err(e) => return fail(EXIT_UNUSABLE, format!("cannot read {}: {e}", path.display())),
                    };
                    match parse_twist(&text, q) {
                        Ok(f) => f,
                        Err(e) => return fail(EXIT_UNUSABLE, format!("{} error: {e}", e.class())),
                    }
                }
                (None, Some(seed), _) => random_twist(q, &mut ChaCha8Rng::seed_from_u64(seed)),
                (None, None, Some(which)) => match doc.structure.triangular() {
                    Some(t) => r_twist(t, if matches!(which, ByR::R) { Which::R } else { Which::RTilde }),
                    None => return fail(EXIT_UNUSABLE, "the structure has no R-matrix"),
                },
                (None, None, None) => return fail(EXIT_UNUSABLE, "give one of --twist, --generator-seed or --by"),
            };
            let structure = match &doc.structure {
                Structure::Hopf(h) => Structure::Hopf(twist_qha(h, &f)),
                Structure::Triangular(t) => Structure::Triangular(twist_qt(t, &f)),
            };
            // dynamical families do not carry over to the twisted structure
            let text = serialize_structure(&Document { structure, dynamical: None });
            if let Err(e) = parse_structure(&text) {
                return fail(EXIT_UNUSABLE, format!("twisted structure does not re-verify: {e}"));
            }
            if let Some(p) = save_twist {
                if let Err(e) = emit(&serialize_twist(q, &f), Some(&p)) {
                    return fail(EXIT_UNUSABLE, e);
                }
            }
            match emit(&text, Some(&output)) {
                Ok(()) => ExitCode::from(EXIT_PASS),
                Err(e) => fail(EXIT_UNUSABLE, e),
            }
        }
        Command::Export { input, output } => {
            let doc = match load(&input) {
                Ok(d) => d,
                Err(code) => return code,
            };
            match emit(&serialize_structure(&doc), output.as_ref()) {
                Ok(()) => ExitCode::from(EXIT_PASS),
                Err(e) => fail(EXIT_UNUSABLE, e),
            }
        }
    }
}
