use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sgchain::commands::{self, ChainOptions, CommandError, RewriteAction, DEFAULT_RADIUS};
use sgchain::instance::{self, Document, Resolved};
use sgchain::verify::{self, Suite, VerifyOptions};
use sgchain::zoo;
use sgchain_core::ideals::Side;

#[derive(Parser)]
#[command(name = "sgchain", version, about = "Green's relations, socles and chain conditions for semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Green structure, ideals, kernel, socles and classification.
    Analyze {
        /// Instance document, `-` for stdin, or `zoo:NAME`.
        file: String,
        /// Word length explored for presentations.
        #[arg(long, env = "SGCHAIN_RADIUS", default_value_t = DEFAULT_RADIUS)]
        radius: usize,
    },
    /// Green's relations and the R-class poset.
    Green { file: String },
    /// Right or left socle decomposition.
    Socle {
        file: String,
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
    },
    /// Antichain and ascending chain certificates for principal right ideals.
    Chains {
        file: String,
        #[arg(long)]
        antichain: Option<usize>,
        #[arg(long)]
        chain: Option<usize>,
        #[arg(long, env = "SGCHAIN_RADIUS", default_value_t = DEFAULT_RADIUS)]
        radius: usize,
        /// Search inside the kernel (the content ideal of one letter) of a presentation.
        #[arg(long)]
        kernel_only: bool,
        /// Search inside the row ideal R_i of a Rees matrix semigroup over the integers (1-based).
        #[arg(long)]
        row: Option<usize>,
    },
    /// Reduce a word, complete the system, or list normal forms.
    Rewrite {
        file: String,
        #[command(flatten)]
        action: RewriteArgs,
    },
    /// Run a verification suite and print its JSON report.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        count: usize,
        /// Corrupt one table entry of this built-in instance before checking.
        #[arg(long)]
        mutate: Option<String>,
        /// Print per-check timings to stderr.
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct RewriteArgs {
    #[arg(long)]
    reduce: Option<String>,
    #[arg(long)]
    complete: bool,
    #[arg(long)]
    normal_forms: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Right,
    Left,
}

fn load(file: &str) -> Result<(Document, Resolved), CommandError> {
    let text = if let Some(name) = file.strip_prefix("zoo:") {
        zoo::text(name)
            .ok_or_else(|| CommandError::Usage(format!("unknown built-in instance {:?}", name)))?
            .to_string()
    } else if file == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CommandError::Usage(format!("reading stdin: {}", e)))?;
        s
    } else {
        std::fs::read_to_string(file).map_err(|e| CommandError::Usage(format!("reading {}: {}", file, e)))?
    };
    Ok(instance::load(&text)?)
}

fn print_out(text: &str) {
    // a closed pipe on stdout is not an error worth reporting
    let _ = writeln!(std::io::stdout().lock(), "{}", text);
}

fn emit(v: serde_json::Value) {
    print_out(&serde_json::to_string_pretty(&v).expect("json"));
}

fn run(cli: Cli) -> Result<ExitCode, CommandError> {
    match cli.command {
        Command::Analyze { file, radius } => {
            let (d, r) = load(&file)?;
            emit(commands::analyze(&d, &r, radius)?);
        }
        Command::Green { file } => {
            let (d, r) = load(&file)?;
            emit(commands::green(&d, &r)?);
        }
        Command::Socle { file, side } => {
            let (d, r) = load(&file)?;
            let side = match side {
                SideArg::Right => Side::Right,
                SideArg::Left => Side::Left,
            };
            emit(commands::socle(&d, &r, side)?);
        }
        Command::Chains {
            file,
            antichain,
            chain,
            radius,
            kernel_only,
            row,
        } => {
            let (d, r) = load(&file)?;
            let opts = ChainOptions {
                antichain,
                chain,
                radius,
                kernel_only,
                row,
            };
            emit(commands::chains(&d, &r, &opts)?);
        }
        Command::Rewrite { file, action } => {
            let (d, r) = load(&file)?;
            let action = match (action.reduce, action.complete, action.normal_forms) {
                (Some(w), _, _) => RewriteAction::Reduce(w),
                (_, true, _) => RewriteAction::Complete,
                (_, _, Some(n)) => RewriteAction::NormalForms(n),
                _ => unreachable!("clap enforces one action"),
            };
            emit(commands::rewrite(&d, &r, &action)?);
        }
        Command::Verify {
            suite,
            seed,
            count,
            mutate,
            timings,
        } => {
            let suite = Suite::parse(&suite).ok_or_else(|| {
                CommandError::Usage(format!("unknown suite {:?} (paper-finite, paper-infinite, all)", suite))
            })?;
            let opts = VerifyOptions {
                suite,
                seed,
                count,
                mutate,
            };
            let out = verify::run(&opts).map_err(CommandError::Usage)?;
            print_out(&out.report.to_json());
            if timings {
                for (id, d) in &out.timings {
                    eprintln!("{:>10.3} ms  {}", d.as_secs_f64() * 1e3, id);
                }
            }
            for r in out.report.failures() {
                eprintln!("FAIL {} on {}: {}", r.check, r.instance, r.witness.as_deref().unwrap_or(""));
            }
            if !out.report.all_pass() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
