//! Command-line entry points: `verify` runs suites and emits a report,
//! `table` precomputes and persists commutator-table entries, `pbw` compares
//! normal-word counts against the generating-function dimensions.
//!
//! Exit codes: 0 all checks pass, 1 at least one check fails, 2 usage or
//! configuration error.

use crate::suites::{self, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

/// Environment variable naming the default cache directory; the `--cache`
/// flag overrides it.
pub const CACHE_DIR_ENV: &str = "YOSP_CACHE_DIR";

const CACHE_FILE_NAME: &str = "table.cache";

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "yosp",
    about = "Exact verification of orthosymplectic-Yangian presentations",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run verification suites and write a report.
    Verify(RunConfig),
    /// Precompute and persist commutator-table entries.
    Table(TableConfig),
    /// Compare enumerated normal-word counts with series coefficients.
    Pbw(PbwConfig),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
pub struct RunConfig {
    /// Rank of the underlying superalgebra (1..=3).
    #[arg(long = "m", default_value_t = 1)]
    pub m: usize,
    /// Truncation order for every series (1..=8).
    #[arg(long, default_value_t = 4)]
    pub order: usize,
    /// Suite id, or `all`.
    #[arg(long, default_value = "all")]
    pub suite: String,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Table-cache file; defaults to $YOSP_CACHE_DIR/table.cache when set.
    #[arg(long)]
    pub cache: Option<PathBuf>,
    /// Report destination; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for the randomized property checks.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Zero out timing fields for byte-reproducible reports.
    #[arg(long = "stable-output", default_value_t = false)]
    pub stable_output: bool,
}

#[derive(Args, Debug)]
pub struct TableConfig {
    #[arg(long = "m", default_value_t = 1)]
    pub m: usize,
    /// Maximum superscript sum r + s of generated entries (1..=10).
    #[arg(long, default_value_t = 4)]
    pub order: usize,
    /// Cache file to write; defaults to $YOSP_CACHE_DIR/table.cache.
    #[arg(long)]
    pub cache: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct PbwConfig {
    #[arg(long = "m", default_value_t = 1)]
    pub m: usize,
    /// Maximum filtration degree (<= 4 at m = 1, <= 3 at m = 2).
    #[arg(long, default_value_t = 2)]
    pub order: usize,
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn default_cache(flag: &Option<PathBuf>) -> Option<PathBuf> {
    if let Some(p) = flag {
        return Some(p.clone());
    }
    std::env::var_os(CACHE_DIR_ENV).map(|dir| Path::new(&dir).join(CACHE_FILE_NAME))
}

/// Writes this engine's table entries into the cache file, preserving any
/// entries recorded for other ranks. Output is sorted, so reruns are
/// byte-identical.
fn save_cache_merged(engine: &crate::REngine, path: &Path) -> std::io::Result<()> {
    let mut foreign: Vec<String> = Vec::new();
    if let Ok(existing) = fs::read_to_string(path) {
        for line in existing.lines().skip(1) {
            if line.trim().is_empty() {
                continue;
            }
            match line.split_once(';') {
                Some((m, _)) if m == engine.ix.m.to_string() => {}
                _ => foreign.push(line.to_string()),
            }
        }
    }
    let mut own = Vec::new();
    engine.save_cache(&mut own)?;
    let own_text = String::from_utf8(own).expect("cache text is ascii");
    let mut lines: Vec<&str> = own_text.lines().skip(1).collect();
    let foreign_refs: Vec<&str> = foreign.iter().map(|s| s.as_str()).collect();
    lines.extend(foreign_refs);
    lines.sort_unstable();
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            fs::create_dir_all(dir)?;
        }
    }
    let mut out = fs::File::create(path)?;
    writeln!(out, "yosp-table-cache v1")?;
    for line in lines {
        writeln!(out, "{line}")?;
    }
    Ok(())
}

fn load_cache_if_present(engine: &crate::REngine, path: &Path) -> Result<usize, String> {
    match fs::File::open(path) {
        Ok(file) => engine
            .load_cache(std::io::BufReader::new(file))
            .map_err(|e| e.to_string()),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(0),
        Err(e) => Err(format!("cannot read cache {}: {e}", path.display())),
    }
}

pub fn cmd_verify(cfg: &RunConfig) -> i32 {
    if !(1..=3).contains(&cfg.m) {
        return usage_error("--m must be between 1 and 3");
    }
    if !(1..=8).contains(&cfg.order) {
        return usage_error("--order must be between 1 and 8");
    }
    if let Err(e) = suites::resolve_suites(&cfg.suite, cfg.m) {
        return usage_error(&e.to_string());
    }
    let jobs = cfg.jobs.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    });
    if jobs == 0 {
        return usage_error("--jobs must be positive");
    }
    let ctx = Context::build(cfg.m, cfg.order, cfg.seed);
    let cache_path = default_cache(&cfg.cache);
    if let Some(path) = &cache_path {
        if let Err(e) = load_cache_if_present(&ctx.engine, path) {
            return usage_error(&e);
        }
    }
    let mut report = match suites::run_suite_in(&ctx, &cfg.suite, jobs) {
        Ok(r) => r,
        Err(e) => return usage_error(&e.to_string()),
    };
    if let Some(path) = &cache_path {
        if let Err(e) = save_cache_merged(&ctx.engine, path) {
            return usage_error(&format!("cannot write cache {}: {e}", path.display()));
        }
    }
    if cfg.stable_output {
        report.strip_timings();
    }
    let rendered = match cfg.format {
        Format::Json => {
            let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
            text.push('\n');
            text
        }
        Format::Text => report.to_text(),
    };
    if let Some(out) = &cfg.out {
        if let Err(e) = fs::write(out, rendered) {
            return usage_error(&format!("cannot write report {}: {e}", out.display()));
        }
    } else {
        print!("{rendered}");
    }
    if report.all_passed() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

pub fn cmd_table(cfg: &TableConfig) -> i32 {
    if !(1..=3).contains(&cfg.m) {
        return usage_error("--m must be between 1 and 3");
    }
    if !(1..=10).contains(&cfg.order) {
        return usage_error("--order (maximum superscript sum) must be between 1 and 10");
    }
    let Some(path) = default_cache(&cfg.cache) else {
        return usage_error(&format!(
            "no cache path: pass --cache or set {CACHE_DIR_ENV}"
        ));
    };
    let engine = suites::engine_for(cfg.m);
    if let Err(e) = load_cache_if_present(&engine, &path) {
        return usage_error(&e);
    }
    let entries = engine.fill_table(cfg.order);
    if let Err(e) = save_cache_merged(&engine, &path) {
        return usage_error(&format!("cannot write cache {}: {e}", path.display()));
    }
    println!("{entries} table entries (m={}, r+s <= {})", cfg.m, cfg.order);
    EXIT_PASS
}

pub fn cmd_pbw(cfg: &PbwConfig) -> i32 {
    if !(1..=2).contains(&cfg.m) {
        return usage_error("--m must be 1 or 2");
    }
    let dmax_bound = if cfg.m == 1 { 4 } else { 3 };
    if cfg.order > dmax_bound {
        return usage_error(&format!("--order must be <= {dmax_bound} at m = {}", cfg.m));
    }
    let engine = suites::engine_for(cfg.m);
    let mut ok = true;
    for d in 0..=cfg.order {
        let enumerated = engine.enumerate_normal_words(d).len() as i128;
        let series = engine.pbw_series_count(d);
        println!("({d}, {enumerated}, {series})");
        ok &= enumerated == series;
    }
    if ok {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

pub fn run(cli: &Cli) -> i32 {
    match &cli.command {
        Command::Verify(cfg) => cmd_verify(cfg),
        Command::Table(cfg) => cmd_table(cfg),
        Command::Pbw(cfg) => cmd_pbw(cfg),
    }
}
