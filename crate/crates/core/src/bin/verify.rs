use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::Parser;

use agcert::cli::{self, Certificate, CheckState, CliError, RunOptions, Scenario};
use agcert::ideals::Budget;

/// Run a scenario and write its certificate.
///
/// Exit status: 0 if every required check passes, 1 if a check fails or is
/// indeterminate, 2 on bad input or an unknown scenario.
#[derive(Parser, Debug)]
#[command(name = "verify", version)]
struct Args {
    /// Scenario id, or a path to a scenario JSON file.
    id: Option<String>,
    /// Run every built-in scenario.
    #[arg(long)]
    all: bool,
    /// List the built-in scenarios.
    #[arg(long)]
    list: bool,
    /// Print the scenario statement, inputs and expected values instead of running it.
    #[arg(long)]
    describe: bool,
    /// Maximum number of S-pairs per Groebner basis computation.
    #[arg(long)]
    budget_pairs: Option<usize>,
    /// Maximum coefficient size in bits.
    #[arg(long)]
    budget_bits: Option<u64>,
    /// Certificate output file (a JSON object keyed by id with --all).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also run the expensive optional checks.
    #[arg(long)]
    optional: bool,
}

fn resolve(id: &str) -> Result<Scenario, CliError> {
    if id.ends_with(".json") || Path::new(id).is_file() {
        cli::load_scenario(Path::new(id))
    } else {
        cli::scenario(id)
    }
}

fn report(cert: &Certificate) {
    for c in &cert.checks {
        let tag = match (c.state, c.optional) {
            (CheckState::Pass, _) => "pass",
            (CheckState::Skipped, _) => "skip",
            (CheckState::Indeterminate, false) => "INDETERMINATE",
            (CheckState::Indeterminate, true) => "indeterminate (optional)",
            (CheckState::Fail, false) => "FAIL",
            (CheckState::Fail, true) => "fail (optional)",
        };
        println!("  {:<32} {tag}", c.name);
        if !c.pass && c.state != CheckState::Skipped {
            println!("      expected {}", c.expected);
            println!("      computed {}", c.computed);
        }
    }
    println!("{}: {}", cert.scenario, if cert.pass { "PASS" } else { "FAIL" });
}

fn main() -> ExitCode {
    let args = Args::parse();
    match real_main(args) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("verify: {e}");
            ExitCode::from(2)
        }
    }
}

fn real_main(args: Args) -> Result<bool, CliError> {
    if args.list {
        print!("{}", cli::list());
        return Ok(true);
    }
    let scenarios = match (&args.id, args.all) {
        (_, true) => cli::catalogue(),
        (Some(id), false) => vec![resolve(id)?],
        (None, false) => return Err(CliError::Input("give a scenario id, --all or --list".into())),
    };
    if args.describe {
        for s in &scenarios {
            println!("{}", cli::describe(s));
        }
        return Ok(true);
    }

    let mut budget = Budget::default();
    if let Some(p) = args.budget_pairs {
        budget.max_pairs = p;
    }
    if let Some(b) = args.budget_bits {
        budget.max_bits = b;
    }
    let opts = RunOptions { budget, optional: args.optional };

    let mut all_pass = true;
    let mut certs = Vec::new();
    for s in &scenarios {
        let cert = cli::run(s, &opts)?;
        report(&cert);
        all_pass &= cert.pass;
        certs.push(cert);
    }

    if let Some(out) = &args.out {
        let text = if args.all {
            let map: serde_json::Map<String, serde_json::Value> = certs
                .iter()
                .map(|c| (c.scenario.clone(), serde_json::to_value(c).expect("certificate serializes")))
                .collect();
            serde_json::to_string_pretty(&map).expect("value serializes")
        } else {
            certs[0].to_json()
        };
        cli::write_atomic(out, &(text + "\n"))?;
    }
    Ok(all_pass)
}
