//! `qshuffle`: compute elements, run the identity checks, enumerate Catalan
//! words, export scalar tables and draw lattice paths.

mod config;
mod plot;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use qshuffle::catalan::{self, Embedding, Family, Named, ScalarTable};
use qshuffle::series::{delta_series, named_series, nabla_series};
use qshuffle::verify::{self, CheckReport, Perturbation, VerifyConfig};
use qshuffle::{enumerate_catalan, QElement, Rational, Word};

use config::{CliConfig, Format, Layer, Threads};

#[derive(Parser)]
#[command(name = "qshuffle", version, about = "Exact computations in the two-letter q-shuffle algebra")]
struct Cli {
    #[command(flatten)]
    global: GlobalFlags,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalFlags {
    /// TOML file with defaults for the options below.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Truncation degree of series.
    #[arg(long, global = true)]
    cutoff: Option<usize>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    m_min: Option<i64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    m_max: Option<i64>,
    #[arg(long, global = true)]
    n_max: Option<usize>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long, short, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Worker threads: a positive integer or `auto`.
    #[arg(long, global = true)]
    threads: Option<Threads>,
    /// Shuffle memo table: on or off.
    #[arg(long, global = true, value_parser = config::parse_switch_arg)]
    cache: Option<bool>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an element or a series.
    Compute(ComputeArgs),
    /// Run identity checks; exits 1 if any fails.
    Verify(VerifyArgs),
    /// List the Catalan words of length 2n.
    Enumerate(EnumerateArgs),
    /// Draw the lattice path of a word as SVG.
    Plot {
        /// Word over x and y; "" or "1" is the empty word.
        word: String,
        /// Output file; overrides --output.
        path: Option<PathBuf>,
    },
    /// Export a table of scalars over Catalan words.
    Table {
        /// delta or nabla
        family: String,
        #[arg(allow_hyphen_values = true)]
        m_min: i64,
        #[arg(allow_hyphen_values = true)]
        m_max: i64,
        n_max: usize,
    },
    /// Time each check.
    Bench {
        /// Checks to time; all when omitted.
        names: Vec<String>,
        #[arg(long, default_value_t = 3)]
        repeat: usize,
    },
}

#[derive(Args)]
struct ComputeArgs {
    /// C, D, Gtilde, delta, nabla, damiani, beck, or series:<C|D|Gtilde|delta|nabla>
    kind: String,
    /// Degree; same as --n.
    n: Option<usize>,
    #[arg(long = "n", value_name = "N")]
    n_flag: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<i64>,
    /// Root vector for `damiani`: E0, E1 or Edelta.
    #[arg(long)]
    variant: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check names, as listed by `verify --list`.
    names: Vec<String>,
    #[arg(long)]
    all: bool,
    /// Print the registered check names.
    #[arg(long)]
    list: bool,
    /// Report elapsed time per check.
    #[arg(long)]
    timings: bool,
    /// Fault injection: add 1 to one table entry, as FAMILY:WORD:M.
    #[arg(long, value_name = "FAMILY:WORD:M")]
    perturb_table: Option<String>,
    /// Fault injection: drop the [3]_q factors of the q-Serre relations.
    #[arg(long)]
    drop_serre_factor: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    n: usize,
    #[arg(long)]
    count_only: bool,
    #[arg(long)]
    profiles: bool,
    #[arg(long)]
    elevations: bool,
}

/// Failures that map to exit code 1 rather than 2.
#[derive(Debug)]
struct ChecksFailed;

impl std::fmt::Display for ChecksFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("verification failed")
    }
}

impl std::error::Error for ChecksFailed {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<ChecksFailed>() => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn resolve_config(flags: &GlobalFlags) -> Result<CliConfig> {
    let top = Layer {
        cutoff: flags.cutoff,
        m_min: flags.m_min,
        m_max: flags.m_max,
        n_max: flags.n_max,
        output_format: flags.format,
        output_path: flags.output.clone(),
        cache_enabled: flags.cache,
        threads: flags.threads,
    };
    let env = Layer::from_env(|k| std::env::var(k).ok())?;
    let file = match &flags.config {
        Some(p) => Layer::from_file(p)?,
        None => Layer::default(),
    };
    top.over(env.over(file)).resolve()
}

fn run(cli: Cli) -> Result<()> {
    let mut cfg = resolve_config(&cli.global)?;
    if let Threads::Count(k) = cfg.threads {
        rayon::ThreadPoolBuilder::new().num_threads(k).build_global().context("starting thread pool")?;
    }
    qshuffle::limits::set_cache_enabled(cfg.cache_enabled);
    let text = match cli.command {
        Command::Compute(args) => compute(&args, &cfg)?,
        Command::Verify(args) => return verify_cmd(&args, &cfg),
        Command::Enumerate(args) => {
            let words = enumerate_catalan(args.n)?;
            if args.count_only {
                format!("{}\n", words.len())
            } else {
                render::words(&words, args.profiles, args.elevations, cfg.output_format)?
            }
        }
        Command::Plot { word, path } => {
            let w = Word::parse(&word)?;
            if path.is_some() {
                cfg.output_path = path;
            }
            plot::dyck_svg(&w)
        }
        Command::Table { family, m_min, m_max, n_max } => {
            let family: Family = family.parse()?;
            let table = ScalarTable::<Rational>::build(family, m_min, m_max, n_max)?;
            render::table(&table, cfg.output_format)?
        }
        Command::Bench { names, repeat } => bench(&names, repeat, &cfg)?,
    };
    emit(&cfg, &text)
}

fn emit(cfg: &CliConfig, text: &str) -> Result<()> {
    match &cfg.output_path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn compute(args: &ComputeArgs, cfg: &CliConfig) -> Result<String> {
    let n = args.n_flag.or(args.n);
    let need_n = || n.context("missing degree: pass N or --n N");
    let need_m = || args.m.context("missing --m");
    if let Some(name) = args.kind.strip_prefix("series:") {
        let s = match name {
            "delta" => delta_series(need_m()?, cfg.cutoff)?,
            "nabla" => nabla_series(need_m()?, cfg.cutoff)?,
            other => named_series(other.parse::<Named>()?, cfg.cutoff)?,
        };
        return render::series(&s, cfg.output_format);
    }
    let e: QElement = match args.kind.as_str() {
        "delta" => catalan::delta_element(need_m()?, need_n()?)?,
        "nabla" => catalan::nabla_element(need_m()?, need_n()?)?,
        "damiani" => {
            let v = args.variant.as_deref().context("damiani needs --variant E0, E1 or Edelta")?;
            let kind: Embedding = v.parse()?;
            if kind == Embedding::BeckEdelta {
                bail!("`{v}` is not a damiani variant; use `compute beck`");
            }
            catalan::embedding_image(kind, need_n()?)?
        }
        "beck" => catalan::embedding_image(Embedding::BeckEdelta, need_n()?)?,
        other => match other.parse::<Named>() {
            Ok(kind) => catalan::named_element(kind, need_n()?)?,
            Err(_) => bail!("invalid kind `{other}`"),
        },
    };
    render::element(&e, cfg.output_format)
}

fn verify_config(cfg: &CliConfig, perturbation: Perturbation) -> VerifyConfig {
    VerifyConfig {
        m_min: cfg.m_min,
        m_max: cfg.m_max,
        n_max: cfg.n_max,
        cutoff: cfg.cutoff,
        perturbation,
        ..VerifyConfig::default()
    }
}

fn verify_cmd(args: &VerifyArgs, cfg: &CliConfig) -> Result<()> {
    if args.list {
        let names: Vec<&str> = verify::check_names().collect();
        return emit(cfg, &format!("{}\n", names.join("\n")));
    }
    let names: Vec<&str> = if args.all {
        verify::check_names().collect()
    } else if args.names.is_empty() {
        bail!("name at least one check, or pass --all");
    } else {
        args.names.iter().map(String::as_str).collect()
    };
    let perturbation = match (&args.perturb_table, args.drop_serre_factor) {
        (Some(_), true) => bail!("inject one fault at a time"),
        (Some(entry), false) => {
            let parts: Vec<&str> = entry.splitn(3, ':').collect();
            let [family, word, m] = parts[..] else { bail!("expected FAMILY:WORD:M, got `{entry}`") };
            let p = Perturbation::TableEntry {
                family: family.into(),
                word: word.into(),
                m: m.parse().with_context(|| format!("m in `{entry}`"))?,
            };
            if p.table_entry().is_none() {
                bail!("no table entry `{entry}`");
            }
            p
        }
        (None, true) => Perturbation::DropSerreFactor,
        (None, false) => Perturbation::None,
    };
    let mut reports = verify::run_selected(&names, &verify_config(cfg, perturbation))?;
    if !args.timings {
        for r in &mut reports {
            r.elapsed = Duration::ZERO;
        }
    }
    emit(cfg, &render::reports(&reports, args.timings, cfg.output_format)?)?;
    if verify::all_passed(&reports) {
        Ok(())
    } else {
        Err(ChecksFailed.into())
    }
}

fn bench(names: &[String], repeat: usize, cfg: &CliConfig) -> Result<String> {
    let names: Vec<&str> = if names.is_empty() {
        verify::check_names().collect()
    } else {
        names.iter().map(String::as_str).collect()
    };
    let vcfg = verify_config(cfg, Perturbation::None);
    let mut best: Vec<CheckReport> = Vec::new();
    for name in names {
        let mut fastest: Option<CheckReport> = None;
        for _ in 0..repeat.max(1) {
            let r = verify::run_check(name, &vcfg)?;
            if fastest.as_ref().is_none_or(|f| r.elapsed < f.elapsed) {
                fastest = Some(r);
            }
        }
        best.extend(fastest);
    }
    render::reports(&best, true, cfg.output_format)
}
