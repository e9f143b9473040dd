//! Command-line front end: parses flags into an [`InputSpec`] and prints
//! the document produced by [`fibergenus::cli::run`].
//!
//! Exit status: 0 on success, 1 on input errors (including bad flags),
//! 2 when the inputs are well-formed but no formula applies to them.

use clap::Parser;

use fibergenus::cli::{run, InputSpec, OutputMode};

/// Total genus of the curve f(x) = g(y), from the branch data of f and g.
#[derive(Parser)]
#[command(name = "fibergenus", version)]
struct Args {
    /// Ground field: Q, or F<p> with p prime (for example F7).
    #[arg(long)]
    field: String,

    /// The map f, an expression in x (for example "x^5-x" or "(x^2+1)/x").
    #[arg(long)]
    f: String,

    /// The map g, an expression in y.
    #[arg(long)]
    g: String,

    /// Component count of the curve, when known by other means.
    #[arg(long)]
    components: Option<u64>,

    /// Emit the machine-readable JSON document instead of the report.
    #[arg(long)]
    json: bool,

    /// Seed for the randomized factorization steps (results do not depend
    /// on it).
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Include both ramification portraits in the report.
    #[arg(long)]
    verbose: bool,
}

fn main() {
    // Flag mistakes are input errors and must exit with status 1; --help
    // and --version keep their conventional success status.
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let wanted_output = !e.use_stderr();
            let _ = e.print();
            std::process::exit(if wanted_output { 0 } else { 1 });
        }
    };
    let spec = InputSpec {
        field: args.field,
        f_expr: args.f,
        g_expr: args.g,
        components: args.components,
        output: if args.json { OutputMode::Json } else { OutputMode::Report },
        seed: args.seed,
        verbose: args.verbose,
    };
    match run(&spec) {
        Ok(document) => print!("{document}"),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
