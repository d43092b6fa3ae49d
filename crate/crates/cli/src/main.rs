use std::io::Read;
use std::net::SocketAddr;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use negdetect_core::evalharness::{evaluate, parse_gold, sweep, GoldSet, OccurrencePolicy};
use negdetect_core::negex::Window;
use negdetect_core::resources;
use negdetect::config::{Format, ResourceArgs};
use negdetect::output;
use negdetect::server::{router, shutdown_signal, AppState};
use tracing_subscriber::EnvFilter;

#[derive(Parser)]
#[command(name = "negdetect", version, about = "Negation detection for German clinical text")]
struct Cli {
    #[command(flatten)]
    resources: ResourceArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Annotate text files (or stdin) and print concepts with their assertions
    Annotate {
        /// Input files; stdin when none are given. Each file is one document.
        inputs: Vec<PathBuf>,

        /// Treat every non-empty input line as a separate document
        #[arg(long)]
        per_line: bool,

        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Score predictions against a gold file (concept TAB sentence TAB label)
    Evaluate {
        gold: PathBuf,

        #[arg(long, default_value = "first")]
        occurrence: OccurrencePolicy,

        /// Also list how often each trigger produced a negation
        #[arg(long)]
        trigger_report: bool,

        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate every trigger set at every window size
    Sweep {
        gold: PathBuf,

        #[arg(long, value_delimiter = ',', default_value = "inf,5,4,3")]
        windows: Vec<Window>,

        /// Built-in set names or trigger files; defaults to --triggers
        #[arg(long, value_delimiter = ',')]
        trigger_sets: Vec<String>,

        #[arg(long, default_value = "first")]
        occurrence: OccurrencePolicy,

        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the HTTP API
    Serve {
        #[arg(long, env = "NEGDETECT_PORT", default_value_t = 8080)]
        port: u16,

        #[arg(long, env = "NEGDETECT_HOST", default_value = "127.0.0.1")]
        host: std::net::IpAddr,

        /// Directory with built workbench assets served under /
        #[arg(long, env = "NEGDETECT_STATIC_DIR")]
        static_dir: Option<PathBuf>,
    },
}

fn read_gold(path: &PathBuf) -> Result<GoldSet> {
    let content = std::fs::read_to_string(path).with_context(|| format!("reading gold file {}", path.display()))?;
    parse_gold(&content).with_context(|| format!("loading gold file {}", path.display()))
}

fn read_inputs(inputs: &[PathBuf], per_line: bool) -> Result<Vec<String>> {
    let mut texts = Vec::new();
    if inputs.is_empty() {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        texts.push(s);
    } else {
        for p in inputs {
            texts.push(std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?);
        }
    }
    Ok(if per_line {
        texts
            .iter()
            .flat_map(|t| t.lines())
            .filter(|l| !l.trim().is_empty())
            .map(String::from)
            .collect()
    } else {
        texts.into_iter().filter(|t| !t.trim().is_empty()).collect()
    })
}

fn run(cli: Cli) -> Result<()> {
    let cfg = cli.resources.load()?;
    match cli.command {
        Command::Annotate {
            inputs,
            per_line,
            format,
        } => {
            let docs = read_inputs(&inputs, per_line)?
                .iter()
                .map(|t| cfg.pipeline.annotate(t))
                .collect::<negdetect_core::Result<Vec<_>>>()?;
            print!("{}", output::documents(&docs, format)?);
        }
        Command::Evaluate {
            gold,
            occurrence,
            trigger_report,
            format,
        } => {
            let gold = read_gold(&gold)?;
            let eval = evaluate(&gold, &cfg.pipeline, occurrence)?;
            print!("{}", output::evaluation(&eval, format, trigger_report)?);
        }
        Command::Sweep {
            gold,
            windows,
            trigger_sets,
            occurrence,
            format,
        } => {
            let sets = if trigger_sets.is_empty() {
                vec![cfg.pipeline.triggers.clone()]
            } else {
                trigger_sets
                    .iter()
                    .map(|s| cli.resources.trigger_set(Some(s)))
                    .collect::<Result<Vec<_>>>()?
            };
            let gold = read_gold(&gold)?;
            let result = sweep(&gold, &cfg.pipeline, &sets, &windows, occurrence)?;
            print!("{}", output::sweep(&result, format)?);
        }
        Command::Serve { port, host, static_dir } => {
            let patterns = if cfg.patterns.is_empty() {
                resources::patterns()
            } else {
                cfg.patterns.clone()
            };
            let extra = vec![resources::ots(), resources::mts()];
            let state = Arc::new(AppState::new(cfg.pipeline, extra, patterns));
            let app = router(state, static_dir);
            let rt = tokio::runtime::Runtime::new()?;
            rt.block_on(async move {
                let addr = SocketAddr::new(host, port);
                let listener = tokio::net::TcpListener::bind(addr)
                    .await
                    .with_context(|| format!("binding {addr}"))?;
                tracing::info!("listening on http://{}", listener.local_addr()?);
                axum::serve(listener, app).with_graceful_shutdown(shutdown_signal()).await?;
                anyhow::Ok(())
            })?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    tracing_subscriber::fmt()
        .with_env_filter(EnvFilter::try_from_default_env().unwrap_or_else(|_| EnvFilter::new("info")))
        .with_writer(std::io::stderr)
        .init();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
