//! `altperm` — count, map, verify, tabulate, and cross-reference
//! pattern-avoiding (optionally alternating) permutations.
//!
//! Exit codes: 0 success (including an empty cross-reference result), 1 for
//! domain failures such as a verification counterexample or a cache mismatch,
//! 2 for usage errors, 3 for network failures.

mod cache;
mod oeis;

use std::fmt;
use std::io;
use std::path::PathBuf;
use std::process;

use clap::{Parser, Subcommand, ValueEnum};

use altperm_core::bijection::BijectionError;
use altperm_core::enumerate::EnumerationError;
use altperm_core::perm::PermError;
use altperm_core::verify::{ClaimStatus, VerifyError};
use altperm_core::{
    corank_forward, corank_inverse, count_avoiders, run_suite, west_forward, west_inverse,
    BijectionTrace, Claim, CountMethod, CountRecord, Pattern, Permutation, SuiteConfig,
    VerificationReport,
};

use oeis::{FixtureClient, HttpClient, OeisLookup};

#[derive(Parser)]
#[command(
    name = "altperm",
    version,
    about = "Pattern-avoiding alternating permutations: counts, bijections, verification"
)]
struct Cli {
    /// Recompute every cached count and fail if any entry does not reproduce.
    #[arg(long)]
    verify_cache: bool,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Count permutations of one length avoiding a pattern.
    Count {
        /// Permutation length n.
        #[arg(long)]
        length: usize,
        /// Pattern to avoid, e.g. `123` or `10,2,1,3,4,5,6,7,8,9`.
        #[arg(long)]
        pattern: String,
        /// Restrict to alternating (up-down) permutations.
        #[arg(long)]
        alternating: bool,
        /// Skip the count cache entirely.
        #[arg(long)]
        no_cache: bool,
        #[arg(long, value_enum, default_value_t = CountFormat::Plain)]
        format: CountFormat,
    },
    /// Apply a rank-based bijection to one permutation.
    Map {
        #[arg(long, value_enum)]
        bijection: BijectionKind,
        /// Pattern-length parameter k (at least 3).
        #[arg(long)]
        k: usize,
        /// Input permutation, e.g. `893624751`.
        #[arg(long)]
        perm: String,
        /// Also print which entries moved and how slots were refilled.
        #[arg(long)]
        trace: bool,
    },
    /// Run verification claims over exhaustive sweeps and report outcomes.
    Verify {
        /// Comma-separated claim names; omit to run every claim.
        #[arg(long, value_delimiter = ',')]
        claims: Option<Vec<String>>,
        /// Largest length to sweep.
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        /// Smallest length to sweep.
        #[arg(long, default_value_t = 0)]
        min_n: usize,
        /// Comma-separated pattern-length parameters.
        #[arg(long, value_delimiter = ',', default_value = "3,4,5")]
        k: Vec<usize>,
        /// Worker threads for running claims concurrently.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Plain)]
        format: ReportFormat,
    },
    /// Tabulate counts over an inclusive length range.
    Table {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        alternating: bool,
        /// Length range `A..B`, both ends included.
        #[arg(long)]
        n_range: String,
        #[arg(long, value_enum, default_value_t = CountFormat::Plain)]
        format: CountFormat,
        #[arg(long)]
        no_cache: bool,
    },
    /// Look up a count sequence in the OEIS.
    Oeis {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        alternating: bool,
        /// Length range `A..B`, both ends included.
        #[arg(long)]
        n_range: String,
        /// Resolve queries from a directory of canned responses instead of
        /// the network.
        #[arg(long, value_name = "DIR")]
        offline: Option<PathBuf>,
        /// Minimum matched prefix length worth reporting.
        #[arg(long, default_value_t = 5)]
        min_match: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CountFormat {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Plain,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum BijectionKind {
    /// Send avoiders of 1..k to avoiders of 1..(k-2),k,(k-1).
    West,
    /// Invert `west`.
    WestInv,
    /// Send avoiders of 1..k to avoiders of 2,1,3..k.
    Corank,
    /// Invert `corank`.
    CorankInv,
}

#[derive(Debug)]
enum AppError {
    Usage(String),
    Domain(String),
    Network(String),
}

impl AppError {
    fn exit_code(&self) -> i32 {
        match self {
            AppError::Usage(_) => 2,
            AppError::Domain(_) => 1,
            AppError::Network(_) => 3,
        }
    }
}

impl fmt::Display for AppError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppError::Usage(msg) | AppError::Domain(msg) | AppError::Network(msg) => {
                f.write_str(msg)
            }
        }
    }
}

impl From<PermError> for AppError {
    fn from(err: PermError) -> Self {
        AppError::Usage(err.to_string())
    }
}

impl From<EnumerationError> for AppError {
    fn from(err: EnumerationError) -> Self {
        AppError::Usage(err.to_string())
    }
}

impl From<VerifyError> for AppError {
    fn from(err: VerifyError) -> Self {
        AppError::Usage(err.to_string())
    }
}

impl From<BijectionError> for AppError {
    fn from(err: BijectionError) -> Self {
        AppError::Domain(err.to_string())
    }
}

impl From<io::Error> for AppError {
    fn from(err: io::Error) -> Self {
        AppError::Domain(err.to_string())
    }
}

impl From<oeis::OeisError> for AppError {
    fn from(err: oeis::OeisError) -> Self {
        AppError::Network(err.to_string())
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            process::exit(err.exit_code());
        }
    }
}

fn run(cli: Cli) -> Result<i32, AppError> {
    if cli.verify_cache {
        if cli.command.is_some() {
            return Err(AppError::Usage(
                "--verify-cache is a standalone maintenance mode; drop the subcommand".to_string(),
            ));
        }
        return cmd_verify_cache();
    }
    let Some(command) = cli.command else {
        return Err(AppError::Usage(
            "a subcommand is required (try `altperm --help`)".to_string(),
        ));
    };
    match command {
        Command::Count {
            length,
            pattern,
            alternating,
            no_cache,
            format,
        } => cmd_count(length, &pattern, alternating, no_cache, format),
        Command::Map {
            bijection,
            k,
            perm,
            trace,
        } => cmd_map(bijection, k, &perm, trace),
        Command::Verify {
            claims,
            max_n,
            min_n,
            k,
            jobs,
            format,
        } => cmd_verify(claims, min_n, max_n, k, jobs, format),
        Command::Table {
            pattern,
            alternating,
            n_range,
            format,
            no_cache,
        } => cmd_table(&pattern, alternating, &n_range, format, no_cache),
        Command::Oeis {
            pattern,
            alternating,
            n_range,
            offline,
            min_match,
        } => cmd_oeis(&pattern, alternating, &n_range, offline, min_match),
    }
}

/// Computes one count, consulting and feeding the memo file unless disabled.
fn counted_record(
    n: usize,
    pattern: &Pattern,
    alternating: bool,
    no_cache: bool,
) -> Result<CountRecord, AppError> {
    let path = if no_cache { None } else { cache::cache_path() };
    let key = pattern.to_string();
    if let Some(path) = &path {
        if let Some(count) = cache::lookup(path, n, &key, alternating)? {
            let method = if alternating {
                CountMethod::PrunedAlternating
            } else {
                CountMethod::Exhaustive
            };
            return Ok(CountRecord {
                n,
                pattern: pattern.clone(),
                alternating_only: alternating,
                count,
                method,
            });
        }
    }
    let record = count_avoiders(n, pattern, alternating)?;
    if let Some(path) = &path {
        cache::append(path, &record)?;
    }
    Ok(record)
}

fn cmd_count(
    length: usize,
    pattern: &str,
    alternating: bool,
    no_cache: bool,
    format: CountFormat,
) -> Result<i32, AppError> {
    let pattern: Pattern = pattern.parse()?;
    let record = counted_record(length, &pattern, alternating, no_cache)?;
    match format {
        CountFormat::Plain => println!("{}", record.count),
        CountFormat::Json => println!(
            "{}",
            serde_json::to_string_pretty(&record).expect("count records serialize")
        ),
        CountFormat::Csv => {
            println!("{}", csv_header());
            println!("{}", csv_row(&record));
        }
    }
    Ok(0)
}

fn cmd_map(bijection: BijectionKind, k: usize, perm: &str, trace: bool) -> Result<i32, AppError> {
    let perm: Permutation = perm.parse()?;
    let (image, trace_data): (Permutation, BijectionTrace) = match bijection {
        BijectionKind::West => west_forward(&perm, k)?,
        BijectionKind::WestInv => west_inverse(&perm, k)?,
        BijectionKind::Corank => corank_forward(&perm, k)?,
        BijectionKind::CorankInv => corank_inverse(&perm, k)?,
    };
    println!("{image}");
    if trace {
        println!("moved positions: [{}]", join(trace_data.moved_positions()));
        println!("moved values: [{}]", join(trace_data.moved_values()));
        let fills: Vec<String> = trace_data
            .assignments()
            .iter()
            .map(|(pos, value)| format!("{pos} <- {value}"))
            .collect();
        println!("fill order: [{}]", fills.join(", "));
    }
    Ok(0)
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(T::to_string).collect();
    parts.join(", ")
}

fn cmd_verify(
    claims: Option<Vec<String>>,
    min_n: usize,
    max_n: usize,
    k: Vec<usize>,
    jobs: usize,
    format: ReportFormat,
) -> Result<i32, AppError> {
    let claims = match claims {
        Some(names) => {
            let mut parsed = Vec::with_capacity(names.len());
            for name in names {
                parsed.push(name.trim().parse::<Claim>()?);
            }
            parsed
        }
        None => Claim::ALL.to_vec(),
    };
    let config = SuiteConfig {
        claims,
        n_min: min_n,
        n_max: max_n,
        k_set: k,
        jobs,
    };
    let reports = run_suite(&config)?;
    match format {
        ReportFormat::Plain => {
            for report in &reports {
                print_report(report);
            }
        }
        ReportFormat::Json => println!(
            "{}",
            serde_json::to_string_pretty(&reports).expect("reports serialize")
        ),
    }
    let blocking = reports.iter().filter(|r| r.is_blocking_failure()).count();
    let exploratory_failures = reports
        .iter()
        .filter(|r| r.exploratory && r.status == ClaimStatus::Counterexample)
        .count();
    if exploratory_failures > 0 {
        eprintln!(
            "warning: {exploratory_failures} exploratory claim(s) found counterexamples (non-fatal)"
        );
    }
    if blocking > 0 {
        eprintln!("verification failed: {blocking} claim(s) have counterexamples");
        Ok(1)
    } else {
        Ok(0)
    }
}

fn print_report(report: &VerificationReport) {
    let status = match report.status {
        ClaimStatus::Verified => "verified",
        ClaimStatus::Counterexample => "counterexample",
        ClaimStatus::Skipped => "skipped",
    };
    let k_list = {
        let parts: Vec<String> = report.k_set.iter().map(usize::to_string).collect();
        parts.join(",")
    };
    let tag = if report.exploratory {
        " [exploratory]"
    } else {
        ""
    };
    println!(
        "{}: {status}{tag} — {} instance(s), lengths {}..={}, k {{{k_list}}}",
        report.claim, report.checked_instances, report.n_min, report.n_max
    );
    for row in &report.counts_table {
        println!("  n={}: {} vs {}", row.n, side(&row.left), side(&row.right));
    }
    for witness in &report.witnesses {
        println!("  witness {}: {}", witness.permutation, witness.note);
    }
    for note in &report.notes {
        println!("  note: {note}");
    }
}

/// Renders one side of a counts row in the usual `S_n(q)` / `A_n(q)`
/// class notation.
fn side(record: &CountRecord) -> String {
    let class = if record.alternating_only { "A" } else { "S" };
    format!("{class}_{}({}) = {}", record.n, record.pattern, record.count)
}

fn cmd_table(
    pattern: &str,
    alternating: bool,
    n_range: &str,
    format: CountFormat,
    no_cache: bool,
) -> Result<i32, AppError> {
    let pattern: Pattern = pattern.parse()?;
    let (lo, hi) = parse_range(n_range)?;
    let mut records = Vec::with_capacity(hi - lo + 1);
    for n in lo..=hi {
        records.push(counted_record(n, &pattern, alternating, no_cache)?);
    }
    match format {
        CountFormat::Plain => {
            let counts: Vec<String> = records.iter().map(|r| r.count.to_string()).collect();
            println!("{}", counts.join(","));
        }
        CountFormat::Json => println!(
            "{}",
            serde_json::to_string_pretty(&records).expect("count records serialize")
        ),
        CountFormat::Csv => {
            println!("{}", csv_header());
            for record in &records {
                println!("{}", csv_row(record));
            }
        }
    }
    Ok(0)
}

fn cmd_oeis(
    pattern: &str,
    alternating: bool,
    n_range: &str,
    offline: Option<PathBuf>,
    min_match: usize,
) -> Result<i32, AppError> {
    let pattern: Pattern = pattern.parse()?;
    let (lo, hi) = parse_range(n_range)?;
    let mut terms = Vec::with_capacity(hi - lo + 1);
    for n in lo..=hi {
        terms.push(count_avoiders(n, &pattern, alternating)?.count);
    }
    let matches = match offline {
        Some(dir) => FixtureClient::new(dir).search(&terms)?,
        None => HttpClient::from_env().search(&terms)?,
    };
    let mut reported = 0;
    for m in &matches {
        if m.matched_prefix_length >= min_match {
            println!(
                "{} {} (matched {} of {} terms)",
                m.sequence_id,
                m.name,
                m.matched_prefix_length,
                terms.len()
            );
            reported += 1;
        }
    }
    if reported == 0 {
        println!("no matches with at least {min_match} leading terms");
    }
    Ok(0)
}

fn cmd_verify_cache() -> Result<i32, AppError> {
    let Some(path) = cache::cache_path() else {
        println!("no cache location configured (set ALTPERM_CACHE or HOME)");
        return Ok(0);
    };
    let entries = cache::load_entries(&path)?;
    if entries.is_empty() {
        println!("cache ok (0 entries) at {}", path.display());
        return Ok(0);
    }
    let mut failures = 0usize;
    for entry in &entries {
        let described = format!(
            "n={} pattern={} alternating={}",
            entry.n, entry.pattern, entry.alternating
        );
        match entry.pattern.parse::<Pattern>() {
            Ok(pattern) => match count_avoiders(entry.n, &pattern, entry.alternating) {
                Ok(record) if record.count == entry.count => {}
                Ok(record) => {
                    failures += 1;
                    eprintln!(
                        "mismatch ({described}): cached {} but recomputed {} \
                         (entry written by version {} at epoch {})",
                        entry.count, record.count, entry.tool_version, entry.created_at
                    );
                }
                Err(err) => {
                    failures += 1;
                    eprintln!("cannot recompute ({described}): {err}");
                }
            },
            Err(err) => {
                failures += 1;
                eprintln!("bad pattern in entry ({described}): {err}");
            }
        }
    }
    if failures > 0 {
        Err(AppError::Domain(format!(
            "cache verification failed: {failures} of {} entries did not reproduce",
            entries.len()
        )))
    } else {
        println!("cache ok ({} entries) at {}", entries.len(), path.display());
        Ok(0)
    }
}

fn parse_range(text: &str) -> Result<(usize, usize), AppError> {
    let usage = || {
        AppError::Usage(format!(
            "length range must look like A..B with A <= B (got `{text}`)"
        ))
    };
    let (lo, hi) = text.split_once("..").ok_or_else(usage)?;
    let lo: usize = lo.trim().parse().map_err(|_| usage())?;
    let hi: usize = hi.trim().parse().map_err(|_| usage())?;
    if lo > hi {
        return Err(usage());
    }
    Ok((lo, hi))
}

fn csv_header() -> &'static str {
    "n,pattern,alternating,count,method"
}

fn csv_row(record: &CountRecord) -> String {
    let method = match record.method {
        CountMethod::Exhaustive => "exhaustive",
        CountMethod::PrunedAlternating => "pruned-alternating",
    };
    format!(
        "{},{},{},{},{}",
        record.n,
        csv_field(&record.pattern.to_string()),
        record.alternating_only,
        record.count,
        method
    )
}

/// Quotes a field only when it would break the comma layout.
fn csv_field(text: &str) -> String {
    if text.contains(',') || text.contains('"') {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}
