use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use symchar::certify::{CertificateRecord, Certifier, CertifyConfig};
use symchar::character::CacheLoad;
use symchar::gaps::SelfConjugateShape;
use symchar::partition::{parse_partition, partitions_of};
use symchar::{CharacterEngine, Error, Partition};

#[derive(Parser)]
#[command(
    name = "symchar",
    version,
    about = "Exact character values of symmetric groups"
)]
struct Cli {
    /// On-disk memo cache, loaded before and extended after the command.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    /// Worker threads for tables, scans and sweeps.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Largest n accepted by table, scan and verify.
    #[arg(long, global = true, env = "SYMCHAR_MAX_N", default_value_t = 14)]
    max_n: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Full character table of S_n.
    Table {
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// A single character value.
    Value { alpha: String, beta: String },
    /// First certificate that fires for a table entry.
    Certify {
        alpha: String,
        beta: String,
        /// Re-check the verdict against the exact value.
        #[arg(long)]
        verify: bool,
        /// Use the exact value when no rule fires.
        #[arg(long)]
        fallback_exact: bool,
    },
    /// Gap set and ladders of a self-conjugate partition.
    Gaps { alpha: String },
    /// Every p-vanishing class of S_n.
    Scan { n: usize, p: u64 },
    /// Certify every entry of the tables up to n and compare with exact values.
    Verify { n: usize },
}

enum Failure {
    Usage(String),
    Inconsistent(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("symchar: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("symchar: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Inconsistent(msg)) => {
            eprintln!("symchar: consistency violation: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let engine = CharacterEngine::new();
    if let Some(path) = &cli.cache {
        if let CacheLoad::Discarded(reason) = engine.load_cache(path)? {
            eprintln!("symchar: ignoring cache {}: {reason}", path.display());
        }
    }
    let mut out = io::stdout().lock();
    match &cli.command {
        Command::Table { n, format } => {
            check_bound(*n, cli.max_n)?;
            let table = engine.character_table(*n);
            match format {
                Format::Csv => table.write_csv(&mut out)?,
                Format::Json => writeln!(out, "{}", table.to_json())?,
            }
        }
        Command::Value { alpha, beta } => {
            let (alpha, beta) = (parse(alpha)?, parse(beta)?);
            writeln!(out, "{}", engine.value(&alpha, &beta)?)?;
        }
        Command::Certify {
            alpha,
            beta,
            verify,
            fallback_exact,
        } => {
            let (alpha, beta) = (parse(alpha)?, parse(beta)?);
            let certifier = Certifier::with_config(
                &engine,
                CertifyConfig {
                    fallback_exact: *fallback_exact,
                    ..CertifyConfig::default()
                },
            );
            let cert = certifier.certify(&alpha, &beta)?;
            let mut record = CertificateRecord::new(&alpha, &beta, cert.as_ref());
            if *verify {
                if let Some(cert) = &cert {
                    let agrees = cert.agrees_with(&engine.value(&alpha, &beta)?);
                    record.verified_by_mn = Some(agrees);
                }
            }
            writeln!(out, "{}", record.to_json())?;
            if record.verified_by_mn == Some(false) {
                return Err(Failure::Inconsistent(format!(
                    "{:?} disagrees with the exact value of {alpha} at {beta}",
                    record.rule
                )));
            }
        }
        Command::Gaps { alpha } => {
            let shape = SelfConjugateShape::new(&parse(alpha)?)?;
            writeln!(
                out,
                "{}",
                serde_json::to_string(&shape.report()).expect("serializes")
            )?;
        }
        Command::Scan { n, p } => {
            check_bound(*n, cli.max_n)?;
            let report = engine.scan_p_vanishing(*n, *p)?;
            writeln!(out, "{}", report.to_json())?;
            if !report.padic_violations.is_empty() {
                return Err(Failure::Inconsistent(format!(
                    "{} p-adic classes are not p-vanishing",
                    report.padic_violations.len()
                )));
            }
        }
        Command::Verify { n } => {
            check_bound(*n, cli.max_n)?;
            verify(&engine, *n, &mut out)?;
        }
    }
    out.flush()?;
    if let Some(path) = &cli.cache {
        engine.save_cache(path)?;
    }
    Ok(())
}

fn parse(text: &str) -> Result<Partition, Failure> {
    Ok(parse_partition(text)?)
}

fn check_bound(n: usize, max_n: usize) -> Outcome {
    if n > max_n {
        return Err(Failure::Usage(format!(
            "n = {n} exceeds the bound {max_n} (raise it with --max-n or SYMCHAR_MAX_N)"
        )));
    }
    Ok(())
}

fn verify(engine: &CharacterEngine, max: usize, out: &mut impl Write) -> Outcome {
    let certifier = Certifier::new(engine);
    let (mut pairs, mut certified) = (0usize, 0usize);
    let mut contradictions = Vec::new();
    for n in 1..=max {
        for alpha in partitions_of(n) {
            for beta in partitions_of(n) {
                pairs += 1;
                let Some(cert) = certifier.certify(&alpha, &beta)? else {
                    continue;
                };
                certified += 1;
                if !cert.agrees_with(&engine.value(&alpha, &beta)?) {
                    let mut record = CertificateRecord::new(&alpha, &beta, Some(&cert));
                    record.verified_by_mn = Some(false);
                    contradictions.push(record);
                }
            }
        }
    }
    let summary = json!({
        "n": max,
        "pairs": pairs,
        "certified": certified,
        "contradictions": contradictions,
    });
    writeln!(out, "{summary}")?;
    if !contradictions.is_empty() {
        return Err(Failure::Inconsistent(format!(
            "{} certificates disagree with exact values",
            contradictions.len()
        )));
    }
    Ok(())
}
