//! Command-line front end.
//!
//! Exit codes: 0 success, 1 law violation, 2 usage, parse or resource error.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::chromatic::{chromatic_poly, count_colorings, count_rainbow, quartet, rainbow_poly, rainbow_quartet};
use crate::coalgebra::{coproduct, CoproductKind};
use crate::error::{Error, Result};
use crate::hgx::{coproduct_json, matrix_json, parse_hgx};
use crate::hypergraph::{Hypergraph, Involution};
use crate::laws::{run_suite, Suite, SuiteConfig};

#[derive(Parser, Debug)]
#[command(name = "hyperquartet", version, about = "Hypergraph coproducts, law checks and chromatic quartets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The four polynomials of h, hᵈ, hᶜ, hᶜᵈ.
    Quartet {
        #[arg(long)]
        rainbow: bool,
        file: String,
    },
    /// One polynomial, coefficients constant term first.
    Poly {
        #[arg(long, value_enum)]
        kind: PolyKind,
        file: String,
    },
    /// Number of colorings with K colors.
    Count {
        #[arg(long = "colors", value_name = "K")]
        colors: u64,
        #[arg(long)]
        rainbow: bool,
        file: String,
    },
    /// A coproduct as a sorted list of terms.
    Coproduct {
        /// Delta, delta, Dprime, Dpp or dpp, optionally suffixed by -d, -c or -cd.
        #[arg(long)]
        kind: String,
        file: String,
    },
    /// Dual, complement or dual-complement.
    Derive {
        #[arg(long)]
        op: String,
        file: String,
    },
    /// Canonical form and key.
    Canon { file: String },
    /// Runs law suites; exits 1 if any law fails.
    Laws {
        #[arg(long = "suite", value_name = "NAME")]
        suites: Vec<String>,
        #[arg(long, default_value_t = 3)]
        max_edges: usize,
        #[arg(long, default_value_t = 3)]
        max_vertices: usize,
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum PolyKind {
    Chi,
    ChiD,
    ChiC,
    ChiCd,
    Rainbow,
    RainbowD,
    RainbowC,
    RainbowCd,
}

impl PolyKind {
    fn split(self) -> (bool, Involution) {
        match self {
            PolyKind::Chi => (false, Involution::Id),
            PolyKind::ChiD => (false, Involution::D),
            PolyKind::ChiC => (false, Involution::C),
            PolyKind::ChiCd => (false, Involution::Cd),
            PolyKind::Rainbow => (true, Involution::Id),
            PolyKind::RainbowD => (true, Involution::D),
            PolyKind::RainbowC => (true, Involution::C),
            PolyKind::RainbowCd => (true, Involution::Cd),
        }
    }
}

fn read_input(file: &str) -> std::result::Result<String, String> {
    if file == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
        return Ok(s);
    }
    std::fs::read_to_string(file).map_err(|e| format!("{file}: {e}"))
}

fn load(file: &str) -> std::result::Result<Hypergraph, String> {
    let text = read_input(file)?;
    parse_hgx(&text).map_err(|e| match e {
        Error::Parse { line, msg } => format!("{file}:{line}: {msg}"),
        e => format!("{file}: {e}"),
    })
}

enum Outcome {
    Ok(String),
    Violations(String),
}

fn execute(cmd: Command) -> std::result::Result<Outcome, String> {
    let fail = |e: Error| e.to_string();
    let text = match cmd {
        Command::Quartet { rainbow, file } => {
            let h = load(&file)?;
            if rainbow {
                rainbow_quartet(&h).map_err(fail)?.to_json("rainbow")
            } else {
                quartet(&h).map_err(fail)?.to_json("chi")
            }
        }
        Command::Poly { kind, file } => {
            let (rainbow, w) = kind.split();
            let h = load(&file)?.derive(w);
            let p = if rainbow { rainbow_poly(&h) } else { chromatic_poly(&h).map_err(fail)? };
            serde_json::to_string(&p).expect("polynomial serializes")
        }
        Command::Count { colors, rainbow, file } => {
            let h = load(&file)?;
            let n = if rainbow { count_rainbow(&h, colors) } else { count_colorings(&h, colors) };
            n.map_err(fail)?.to_string()
        }
        Command::Coproduct { kind, file } => {
            let kind: CoproductKind = kind.parse().map_err(fail)?;
            let h = load(&file)?;
            coproduct_json(&coproduct(kind, &h).map_err(fail)?).to_string()
        }
        Command::Derive { op, file } => {
            let w: Involution = op.parse().map_err(fail)?;
            matrix_json(&load(&file)?.derive(w)).to_string()
        }
        Command::Canon { file } => {
            let k = load(&file)?.canonical_key();
            json!({ "key": k.to_hex(), "canonical": matrix_json(&k.to_hypergraph()) }).to_string()
        }
        Command::Laws { suites, max_edges, max_vertices, samples, seed, json, jobs } => {
            let suites: BTreeSet<Suite> =
                suites.iter().map(|s| s.parse()).collect::<Result<_>>().map_err(fail)?;
            let cfg = SuiteConfig { max_edges, max_vertices, samples, seed, suites, jobs };
            let report = run_suite(&cfg).map_err(fail)?;
            let text = if json {
                report.to_json()
            } else {
                let mut lines: Vec<String> = report
                    .laws
                    .iter()
                    .map(|(name, o)| {
                        let status = if o.failed > 0 { "FAIL" } else { "ok" };
                        let mut line = format!("{status:4} {name} checked={} failed={}", o.checked, o.failed);
                        if o.errors > 0 {
                            line.push_str(&format!(" errors={}", o.errors));
                        }
                        line
                    })
                    .collect();
                let failed = report.failures().count();
                lines.push(format!("{} laws, {} instances, {failed} failing", report.laws.len(), report.checked()));
                lines.join("\n")
            };
            return Ok(if report.passed() { Outcome::Ok(text) } else { Outcome::Violations(text) });
        }
    };
    Ok(Outcome::Ok(text))
}

/// Runs the CLI on `argv` (program name first) and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                return 2;
            }
            let _ = write!(out, "{text}");
            return 0;
        }
    };
    match execute(cli.command) {
        Ok(Outcome::Ok(text)) => {
            let _ = writeln!(out, "{text}");
            0
        }
        Ok(Outcome::Violations(text)) => {
            let _ = writeln!(out, "{text}");
            let _ = writeln!(err, "law violations found");
            1
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}
