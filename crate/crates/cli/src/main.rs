use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use spinstar_core::spinstar::{Engine, InitialState};
use spinstar_lab::figure::{run_figure, FigureSpec, DEFAULT_BATH, DEFAULT_STEPS, DEFAULT_T_MAX};
use spinstar_lab::sweep::{run_sweep, Format, RunSpec};
use spinstar_lab::validate::{run_validate_with, Mutation};
use spinstar_lab::{CliError, EXIT_OK, EXIT_USAGE, EXIT_VALIDATION};

#[derive(Parser)]
#[command(name = "spinstar-lab", version, about = "Central-pair dynamics of the spin-star model")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Trajectory from the closed-form expressions.
    ClosedForm(SweepArgs),
    /// Trajectory from the invariant-sector engine (any N).
    Sector(SweepArgs),
    /// Trajectory from full-register evolution (N <= 8).
    Oracle(SweepArgs),
    /// Run the consistency suite; exits 1 if any check fails.
    Validate(ValidateArgs),
    /// Write the reference figure data.
    Figure(FigureArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum InitialArg {
    Case1,
    Case2,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Svg,
}

#[derive(Args)]
struct SweepArgs {
    /// Bath size N.
    #[arg(long, default_value_t = DEFAULT_BATH)]
    n: usize,
    /// Coupling ratio r = alpha_B / alpha_A.
    #[arg(long, default_value_t = 1.0)]
    r: f64,
    #[arg(long, default_value_t = 1.0)]
    alpha_a: f64,
    #[arg(long, value_enum, default_value = "case1")]
    initial: InitialArg,
    /// Grid end in units of alpha_A t.
    #[arg(long, default_value_t = DEFAULT_T_MAX)]
    t_max: f64,
    /// Number of grid points, both ends included.
    #[arg(long, default_value_t = DEFAULT_STEPS)]
    steps: usize,
    /// Output file; standard output if absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum MutationArg {
    PrintedFnSign,
    HalvedHamiltonian,
}

#[derive(Args)]
struct ValidateArgs {
    /// Inject a known defect to confirm the suite catches it.
    #[arg(long, value_enum, hide = true)]
    mutate: Option<MutationArg>,
}

#[derive(Args)]
struct FigureArgs {
    /// Figure to write; all three if absent.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    which: Option<u8>,
    #[arg(long, default_value_t = DEFAULT_BATH)]
    n: usize,
    #[arg(long, default_value_t = DEFAULT_T_MAX)]
    t_max: f64,
    #[arg(long, default_value_t = DEFAULT_STEPS)]
    steps: usize,
    /// Output directory.
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// `svg` writes a plot next to the CSV files.
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
}

fn sweep(engine: Engine, a: SweepArgs) -> Result<i32, CliError> {
    let spec = RunSpec {
        engine,
        bath_size: a.n,
        ratio: a.r,
        alpha_a: a.alpha_a,
        initial: match a.initial {
            InitialArg::Case1 => InitialState::Case1,
            InitialArg::Case2 => InitialState::Case2,
        },
        t_max: a.t_max,
        steps: a.steps,
        out: a.out,
        format: match a.format {
            FormatArg::Csv => Format::Csv,
            FormatArg::Svg => Format::Svg,
        },
    };
    if let Some(body) = run_sweep(&spec)? {
        print!("{body}");
    }
    Ok(EXIT_OK)
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::ClosedForm(a) => sweep(Engine::ClosedForm, a),
        Command::Sector(a) => sweep(Engine::Sector, a),
        Command::Oracle(a) => sweep(Engine::Oracle, a),
        Command::Validate(a) => {
            let mutation = match a.mutate {
                None => Mutation::None,
                Some(MutationArg::PrintedFnSign) => Mutation::PrintedFnSign,
                Some(MutationArg::HalvedHamiltonian) => Mutation::HalvedHamiltonian,
            };
            let report = run_validate_with(mutation)?;
            println!("{report}");
            Ok(if report.passed() { EXIT_OK } else { EXIT_VALIDATION })
        }
        Command::Figure(a) => {
            let which = a.which.map_or_else(|| vec![1, 2, 3], |w| vec![w]);
            for w in which {
                let spec = FigureSpec { bath_size: a.n, t_max: a.t_max, steps: a.steps, ..FigureSpec::new(w)? };
                for path in run_figure(&spec, &a.out, matches!(a.format, FormatArg::Svg))? {
                    eprintln!("wrote {}", path.display());
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = run(cli).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        EXIT_USAGE
    });
    ExitCode::from(code as u8)
}
