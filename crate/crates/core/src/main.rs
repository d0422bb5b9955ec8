use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use colorexpr::cli::{self, StripeEvents, StripeOptions, SwatchFormat, DEFAULT_SWATCH_MODELS};
use colorexpr::{ColorError, EvalContext, Model, Result};

#[derive(Debug, Parser)]
#[command(
    name = "colorexpr",
    version,
    about = "Evaluate, convert and tabulate color expressions"
)]
struct Cli {
    /// Replace the shipped named-color table with this file.
    #[arg(long, global = true, value_name = "FILE")]
    named: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one expression and print its channels and hex code.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Convert the result into this model.
        #[arg(long)]
        model: Option<Model>,
        /// Set the current color `.` before evaluating.
        #[arg(long, allow_hyphen_values = true)]
        current: Option<String>,
        #[arg(long, value_name = "FILE")]
        defs: Option<PathBuf>,
    },
    /// Convert `model:spec` into another model.
    Convert {
        input: String,
        #[arg(long)]
        to: Model,
    },
    /// Print a swatch table for a list of expressions.
    Swatch {
        /// Expressions to show. Options go before these.
        #[arg(allow_hyphen_values = true)]
        exprs: Vec<String>,
        /// Read expressions from a file, one per line.
        #[arg(long, value_name = "FILE")]
        file: Option<PathBuf>,
        /// Comma-separated model columns.
        #[arg(long, value_delimiter = ',')]
        models: Option<Vec<Model>>,
        #[arg(long, default_value = "text")]
        format: SwatchFormat,
        #[arg(long, value_name = "FILE")]
        defs: Option<PathBuf>,
    },
    /// Step through a color series defined in a defs file.
    Series {
        name: String,
        #[arg(long, value_name = "FILE")]
        defs: PathBuf,
        /// Access list such as `+,+,+`, `++ x7` or `[2] x7`.
        #[arg(long)]
        accesses: String,
    },
    /// Trace alternating row colors for a table.
    Stripe {
        #[arg(long)]
        rows: u32,
        #[arg(long, default_value_t = 1)]
        start: u32,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        odd: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        even: String,
        /// Token emitted at the start of every striped row.
        #[arg(long)]
        command: Option<String>,
        #[arg(long, value_name = "FILE")]
        events: Option<PathBuf>,
    },
}

fn context(named: Option<&PathBuf>, defs: Option<&PathBuf>) -> Result<EvalContext> {
    let mut ctx = EvalContext::new();
    if let Some(path) = named {
        ctx.db.load_named_table(&read(path)?)?;
    }
    if let Some(path) = defs {
        cli::apply_defs(&mut ctx, &read(path)?)?;
    }
    Ok(ctx)
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| ColorError::Io(format!("cannot read {}: {e}", path.display())))
}

fn run(args: Cli) -> Result<(String, i32)> {
    let named = args.named.as_ref();
    match args.command {
        Command::Eval {
            expr,
            model,
            current,
            defs,
        } => {
            let mut ctx = context(named, defs.as_ref())?;
            let line = cli::cmd_eval(&mut ctx, &expr, model, current.as_deref())?;
            Ok((line + "\n", 0))
        }
        Command::Convert { input, to } => Ok((cli::cmd_convert(&input, to)? + "\n", 0)),
        Command::Swatch {
            mut exprs,
            file,
            models,
            format,
            defs,
        } => {
            let mut ctx = context(named, defs.as_ref())?;
            if let Some(path) = file {
                exprs.extend(
                    read(&path)?
                        .lines()
                        .map(|l| l.split('#').next().unwrap_or("").trim())
                        .filter(|l| !l.is_empty())
                        .map(String::from),
                );
            }
            let models = models.unwrap_or_else(|| DEFAULT_SWATCH_MODELS.to_vec());
            let report = cli::cmd_swatch(&mut ctx, &exprs, &models, format);
            Ok((report.output, report.exit_code))
        }
        Command::Series {
            name,
            defs,
            accesses,
        } => {
            let mut ctx = context(named, Some(&defs))?;
            Ok((cli::cmd_series(&mut ctx, &name, &accesses)?, 0))
        }
        Command::Stripe {
            rows,
            start,
            odd,
            even,
            command,
            events,
        } => {
            let opts = StripeOptions {
                rows,
                start,
                odd: cli::parse_optional_expr(&odd)?,
                even: cli::parse_optional_expr(&even)?,
                command,
            };
            let events = match events {
                Some(path) => StripeEvents::parse(&read(&path)?)?,
                None => StripeEvents::default(),
            };
            Ok((cli::cmd_stripe(&opts, &events)?, 0))
        }
    }
}

fn main() -> ExitCode {
    let args = Cli::parse();
    match run(args) {
        Ok((output, code)) => {
            print!("{output}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("colorexpr: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
