use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use systemf::Syntax;
use systemf_cli::{run, Options};

/// Type-check and normalize System F scripts.
#[derive(Parser)]
#[command(version)]
struct Args {
    /// Script to run.
    file: PathBuf,

    /// β-step budget for each `eval`.
    #[arg(long, default_value_t = 1_000_000)]
    steps: u64,

    /// Print with `=>`, `all`, `fun` and `Lam` instead of Unicode symbols.
    #[arg(long)]
    ascii: bool,

    /// Count environment lookups and substitutions, and report them on
    /// stderr.
    #[arg(long)]
    debug: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let file = args.file.display().to_string();
    let src = match std::fs::read_to_string(&args.file) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{file}: io-error: {e}");
            return ExitCode::from(1);
        }
    };
    let opts = Options {
        steps: args.steps,
        syntax: if args.ascii { Syntax::Ascii } else { Syntax::Unicode },
    };
    if args.debug {
        bindbox::debug::set_enabled(true);
    }
    // counters are per thread, so read them on the worker
    let (report, stats) = systemf::with_big_stack(move || {
        let report = run(&src, &opts);
        (report, bindbox::debug::stats())
    });
    print!("{}", report.stdout);
    if let Some(d) = report.outcome.diagnostic() {
        eprintln!("{}", d.render(&file));
    }
    if args.debug {
        eprintln!(
            "debug: {} variable lookups, {} substitutions, {} lookups during substitution",
            stats.lookups, stats.subst_calls, stats.lookups_during_subst
        );
    }
    ExitCode::from(report.outcome.exit_code() as u8)
}
