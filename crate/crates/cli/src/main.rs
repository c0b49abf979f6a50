use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hessian_lattice::autgroup::{catalog, parse_word, reduce_height};
use hessian_lattice::verify::{self, Report, Suite};

#[derive(Parser)]
#[command(name = "hessian-verify", about = "Exact lattice checks for the quartic Hessian Picard lattice")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print a single JSON document instead of text lines.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Report duration_ms as 0, for byte-identical output.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run one suite.
    Verify {
        #[arg(required_unless_present = "suite")]
        name: Option<String>,
        #[arg(long)]
        suite: Option<String>,
    },
    /// Run a suite; `run all` runs every suite.
    Run {
        #[arg(required_unless_present = "suite")]
        name: Option<String>,
        #[arg(long)]
        suite: Option<String>,
    },
    /// Reduce the height of a word of generators, e.g. `--word tau,p16,g1`.
    Reduce {
        #[arg(long)]
        word: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match &cli.command {
        Command::Verify { name, suite } | Command::Run { name, suite } => {
            let name = suite.as_deref().or(name.as_deref()).unwrap_or("all");
            match name.parse::<Suite>() {
                Ok(s) => report(&verify::run(s, cli.seed, !cli.no_timing), cli.json),
                Err(_) => usage(&format!("unknown suite {name}; expected one of {} or all", verify::SUITES.join(", "))),
            }
        }
        Command::Reduce { word } => reduce(word, cli.json),
    }
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn report(r: &Report, json: bool) -> ExitCode {
    if json {
        println!("{}", serde_json::to_string_pretty(r).expect("report serializes"));
    } else {
        for c in &r.checks {
            println!("{}", c.line());
        }
        let failed = r.failures().count();
        println!("{}: {} checks, {} failed, {} ms", r.suite, r.checks.len(), failed, r.duration_ms);
    }
    ExitCode::from(if r.passed() { 0 } else { 1 })
}

fn reduce(word: &str, json: bool) -> ExitCode {
    let cat = catalog();
    let gamma = match parse_word(cat, word) {
        Ok(g) => g,
        Err(e) => return usage(&e.to_string()),
    };
    let (r, _) = match reduce_height(&gamma) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&r).expect("reduction serializes"));
    } else {
        println!("heights: {}", r.heights.join(" -> "));
        println!("word: {}", if r.word.is_empty() { "(empty)".into() } else { r.word.join(",") });
        println!("residual: {}", r.residual.as_deref().unwrap_or("outside the symmetry group"));
    }
    ExitCode::from(if r.residual.is_some() { 0 } else { 1 })
}
