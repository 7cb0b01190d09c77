use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tdeform::cli::{example, run, CliError, EmitFormat, RunConfig};
use tdeform::scalars::{Backend, Scalar};

#[derive(Parser)]
#[command(name = "tdeform", version, about = "Flat deformations of finite-dimensional algebras by t-rescaling")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the pipeline on a config file or a built-in example.
    Run(RunArgs),
    /// Print the config of a built-in example (cc, m2, wemyss).
    Example {
        name: String,
        /// Example parameter, e.g. `e=2` for wemyss.
        #[arg(long = "param")]
        params: Vec<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Exact,
    Approx,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitArg {
    Text,
    Machine,
}

#[derive(Args)]
struct RunArgs {
    /// Config file (same as --input).
    path: Option<PathBuf>,
    /// Config file.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Built-in example instead of a config file (cc, m2, wemyss).
    #[arg(long)]
    example: Option<String>,
    /// Example parameter, e.g. `e=2` for wemyss.
    #[arg(long = "param")]
    params: Vec<String>,
    /// Scalar backend, overriding the config.
    #[arg(long, value_enum)]
    backend: Option<BackendArg>,
    /// Zero tolerance on the approx backend.
    #[arg(long)]
    tol: Option<f64>,
    /// Longest word enumerated while building the basis (default 2n).
    #[arg(long = "max-word-len")]
    max_word_len: Option<usize>,
    /// Largest t-degree allowed in any image or product.
    #[arg(long = "t-cap")]
    t_cap: Option<usize>,
    /// Specialization point, repeatable (e.g. 1, 1/2, i, "1+2i").
    #[arg(long = "specialize")]
    specialize: Vec<String>,
    /// Relation file to check as a presentation of N_0, one relation per line.
    #[arg(long = "verify-presentation")]
    verify_presentation: Option<PathBuf>,
    /// Report format.
    #[arg(long, value_enum)]
    emit: Option<EmitArg>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_param_e(params: &[String]) -> Result<Option<Scalar>, CliError> {
    let mut e = None;
    for p in params {
        let (key, value) = p.split_once('=').ok_or_else(|| CliError::Config(format!("--param expects KEY=VALUE, got `{p}`")))?;
        match key.trim() {
            "e" => {
                e = Some(value.trim().parse::<Scalar>().map_err(|err| CliError::Config(err.to_string()))?);
            }
            other => return Err(CliError::Config(format!("unknown parameter `{other}`"))),
        }
    }
    Ok(e)
}

fn load_config(args: &RunArgs) -> Result<(RunConfig, Option<PathBuf>), CliError> {
    let file = match (&args.path, &args.input) {
        (Some(_), Some(_)) => return Err(CliError::Config("give the config either positionally or with --input".into())),
        (Some(p), None) | (None, Some(p)) => Some(p.clone()),
        (None, None) => None,
    };
    let e = parse_param_e(&args.params)?;
    match (file, &args.example) {
        (Some(_), Some(_)) => Err(CliError::Config("--input and --example are exclusive".into())),
        (Some(p), None) => {
            let text = std::fs::read_to_string(&p).map_err(|err| CliError::Io(format!("{}: {err}", p.display())))?;
            let dir = p.parent().map(|d| d.to_path_buf());
            Ok((RunConfig::from_json(&text)?, dir))
        }
        (None, Some(name)) => Ok((example(name, e.as_ref())?.config, None)),
        (None, None) => Err(CliError::Config("no input: pass a config path or --example NAME".into())),
    }
}

fn apply_overrides(cfg: &mut RunConfig, args: &RunArgs) -> Result<(), CliError> {
    if let Some(b) = args.backend {
        cfg.backend = match b {
            BackendArg::Exact => Backend::Exact,
            BackendArg::Approx => Backend::Approx,
        };
    }
    if args.tol.is_some() {
        cfg.tol = args.tol;
    }
    if args.max_word_len.is_some() {
        cfg.max_word_len = args.max_word_len;
    }
    if args.t_cap.is_some() {
        cfg.t_cap = args.t_cap;
    }
    if !args.specialize.is_empty() {
        cfg.specialize = args
            .specialize
            .iter()
            .map(|z| z.parse::<Scalar>().map_err(|e| CliError::Config(e.to_string())))
            .collect::<Result<_, _>>()?;
    }
    if let Some(p) = &args.verify_presentation {
        let abs = std::env::current_dir().map(|d| d.join(p)).unwrap_or_else(|_| p.clone());
        cfg.verify_presentation = Some(abs.display().to_string());
    }
    if let Some(e) = args.emit {
        cfg.emit = match e {
            EmitArg::Text => EmitFormat::Text,
            EmitArg::Machine => EmitFormat::Machine,
        };
    }
    Ok(())
}

fn run_command(args: &RunArgs) -> Result<i32, CliError> {
    let (mut cfg, dir) = load_config(args)?;
    apply_overrides(&mut cfg, args)?;
    let outcome = run(&cfg, dir.as_deref())?;
    let text = match cfg.emit {
        EmitFormat::Text => outcome.report.to_text(),
        EmitFormat::Machine => outcome.report.to_machine(),
    };
    match &args.out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(outcome.exit_code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 4 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Run(args) => run_command(args),
        Command::Example { name, params } => parse_param_e(params)
            .and_then(|e| example(name, e.as_ref()))
            .map(|entry| {
                println!("{}", entry.config.to_json());
                0
            }),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
