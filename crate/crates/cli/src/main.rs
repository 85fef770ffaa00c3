use std::process::ExitCode;

use clap::Parser;
use quiverhom::shell::{self, Options, COMMANDS};

/// Homological invariants of bound quiver algebras.
#[derive(Parser, Debug)]
#[command(name = "quiverhom", version)]
struct Cli {
    /// One of: info, gldim, pd, syzygy, norm, periodic-test, periodic-find, omega-inf,
    /// perfect-paths, gp-list, self-injective, cm-free, co-gorenstein, inj-pd, phi,
    /// phidim-subcat, phidim-bounds, triangular-check
    #[arg(value_parser = clap::builder::PossibleValuesParser::new(COMMANDS))]
    command: String,

    /// Algebra file, or `corpus:NAME` for a built-in example
    #[arg(long)]
    algebra: String,

    /// Module expression, e.g. `path(a.b) + 2*simple(1)` or `M_alpha(1,3) + M_beta(1,3)`
    #[arg(long)]
    module: Option<String>,

    /// Number of syzygy steps, or the step cap of linear probes
    #[arg(long)]
    steps: Option<usize>,

    #[arg(long, default_value_t = 1000)]
    max_steps: usize,

    /// Random trials for isomorphism tests
    #[arg(long, default_value_t = 20)]
    trials: usize,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    #[arg(long)]
    json: bool,

    /// Vertex split file for triangular-check (`gamma: …` and `gamma_bar: …` lines)
    #[arg(long)]
    split: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = Options {
        command: cli.command,
        algebra: cli.algebra,
        module: cli.module,
        steps: cli.steps,
        max_steps: cli.max_steps,
        trials: cli.trials,
        seed: cli.seed,
        json: cli.json,
        split: cli.split,
    };
    let (code, out) = shell::run(&opts);
    if code == 0 || code == 2 {
        println!("{out}");
    } else {
        eprintln!("{out}");
    }
    ExitCode::from(code as u8)
}
