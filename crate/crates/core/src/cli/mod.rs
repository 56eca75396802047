//! Command-line front end: `eval`, `check`, `suite`, `table` and `catalog`.
//!
//! Exit codes: 0 on success (disputed identities never fail), 1 when an
//! asserted identity fails, 2 on usage, configuration or domain errors.

mod config;
mod eval;
mod render;
mod table;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};

use crate::error::{Error, Result};
use crate::identities::{
    catalog, catalog_json, check_identity, find_identity, parse_value, run_suite, write_csv, write_json_lines,
    GridOverride, IdentityCheckReport, Point, Status, Verdict,
};

pub use config::{CliConfig, Format};
pub use eval::{evaluate, parse_rational, Evaluation, FUNCTIONS};
pub use render::{complex15, parse_complex, sig15};
pub use table::{table, TableKind, TableRow, MAX_TABLE_INDEX};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "eulerzeta", version, about = "Hurwitz-type Euler zeta functions and an identity checker")]
struct Cli {
    /// key = value file; flags given on the command line win
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true)]
    tol_abs: Option<f64>,
    #[arg(long, global = true)]
    tol_rel: Option<f64>,
    /// Grid override, `axis=start:stop:step` or `axis=v1,v2,...` (repeatable)
    #[arg(long, global = true, allow_hyphen_values = true)]
    grid: Vec<String>,
    /// Also print wall-clock timings
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a function: `eval lambda --s 2`
    Eval {
        function: String,
        #[arg(trailing_var_arg = true, allow_hyphen_values = true, value_name = "--NAME VALUE")]
        params: Vec<String>,
    },
    /// Check one identity at one point: `check EULER-PROD --m 1 --n 1`
    Check {
        id: String,
        #[arg(trailing_var_arg = true, allow_hyphen_values = true, value_name = "--NAME VALUE")]
        params: Vec<String>,
    },
    /// Run every identity matching the filter over its grid
    Suite {
        /// Comma-separated id globs, e.g. "PROD-*,MEAN"
        #[arg(long, default_value = "")]
        filter: String,
    },
    /// Closed-form special values next to numerical evaluations
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        max_index: usize,
    },
    /// List the identity catalog
    Catalog,
}

/// Splits `--name value` pairs. Names of global options found among them
/// (`--format json` after the positional arguments) are returned separately.
fn named_pairs(raw: &[String]) -> Result<(BTreeMap<String, String>, Vec<(String, String)>)> {
    const GLOBAL: &[&str] = &["config", "format", "out", "threads", "tol-abs", "tol-rel", "grid"];
    let mut params = BTreeMap::new();
    let mut globals = Vec::new();
    let mut it = raw.iter();
    while let Some(flag) = it.next() {
        let Some(name) = flag.strip_prefix("--") else {
            return Err(Error::Config(format!("expected --name value, got `{flag}`")));
        };
        let (name, value) = match name.split_once('=') {
            Some((n, v)) => (n.to_string(), v.to_string()),
            None => {
                if name == "timings" {
                    globals.push((name.to_string(), String::new()));
                    continue;
                }
                let v = it.next().ok_or_else(|| Error::Config(format!("--{name} needs a value")))?;
                (name.to_string(), v.clone())
            }
        };
        if GLOBAL.contains(&name.as_str()) {
            globals.push((name, value));
        } else if params.insert(name.clone(), value).is_some() {
            return Err(Error::Config(format!("--{name} given twice")));
        }
    }
    Ok((params, globals))
}

struct Settings {
    cfg: CliConfig,
    timings: bool,
}

fn settings(cli: &Cli, trailing: &[(String, String)]) -> Result<Settings> {
    let mut config_path = cli.config.clone();
    for (k, v) in trailing {
        if k == "config" {
            config_path = Some(PathBuf::from(v));
        }
    }
    let mut cfg = match &config_path {
        Some(p) => CliConfig::load(p)?,
        None => CliConfig::default(),
    };
    let mut timings = cli.timings || !cfg.deterministic;
    if let Some(f) = cli.format {
        cfg.format = f;
    }
    if let Some(o) = &cli.out {
        cfg.out = Some(o.clone());
    }
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(Error::Config("--threads must be positive".into()));
        }
        cfg.threads = Some(t);
    }
    let tol = |name: &str, v: f64| {
        if v.is_finite() && v >= 0.0 {
            Ok(v)
        } else {
            Err(Error::Config(format!("--{name} must be a nonnegative number")))
        }
    };
    if let Some(t) = cli.tol_abs {
        cfg.tol_abs = Some(tol("tol-abs", t)?);
    }
    if let Some(t) = cli.tol_rel {
        cfg.tol_rel = Some(tol("tol-rel", t)?);
    }
    let mut grid: Vec<GridOverride> = cli.grid.iter().map(|g| g.parse()).collect::<Result<_>>()?;
    for (k, v) in trailing {
        match k.as_str() {
            "format" => cfg.format = v.parse()?,
            "out" => cfg.out = Some(PathBuf::from(v)),
            "threads" => {
                cfg.threads = Some(
                    v.parse::<usize>()
                        .ok()
                        .filter(|&n| n > 0)
                        .ok_or_else(|| Error::Config(format!("--threads must be a positive integer, got `{v}`")))?,
                )
            }
            "tol-abs" => cfg.tol_abs = Some(tol(k, v.parse().map_err(|_| Error::Config(format!("bad --{k}")))?)?),
            "tol-rel" => cfg.tol_rel = Some(tol(k, v.parse().map_err(|_| Error::Config(format!("bad --{k}")))?)?),
            "grid" => grid.push(v.parse()?),
            "timings" => timings = true,
            _ => {}
        }
    }
    if !grid.is_empty() {
        cfg.grid = grid;
    }
    Ok(Settings { cfg, timings })
}

/// Where the main output goes: the `--out` file or the given stdout.
fn sink<'a>(cfg: &CliConfig, stdout: &'a mut dyn Write) -> Result<Box<dyn Write + 'a>> {
    match &cfg.out {
        Some(path) => {
            let f = File::create(path).map_err(|e| Error::Config(format!("cannot create {}: {e}", path.display())))?;
            Ok(Box::new(BufWriter::new(f)))
        }
        None => Ok(Box::new(stdout)),
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Config(format!("i/o: {e}"))
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{text}");
            } else {
                let _ = write!(stdout, "{text}");
            }
            return code;
        }
    };
    match dispatch(&cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Eval { function, params } => {
            let (params, globals) = named_pairs(params)?;
            let s = settings(cli, &globals)?;
            cmd_eval(function, params, &s.cfg, stdout)
        }
        Command::Check { id, params } => {
            let (params, globals) = named_pairs(params)?;
            let s = settings(cli, &globals)?;
            cmd_check(id, params, &s.cfg, stdout)
        }
        Command::Suite { filter } => {
            let s = settings(cli, &[])?;
            cmd_suite(filter, &s, stdout, stderr)
        }
        Command::Table { kind, max_index } => {
            let s = settings(cli, &[])?;
            cmd_table(*kind, *max_index, &s.cfg, stdout)
        }
        Command::Catalog => {
            let s = settings(cli, &[])?;
            cmd_catalog(&s.cfg, stdout)
        }
    }
}

fn cmd_eval(function: &str, params: BTreeMap<String, String>, cfg: &CliConfig, stdout: &mut dyn Write) -> Result<i32> {
    let v = evaluate(function, params)?;
    let mut w = sink(cfg, stdout)?;
    match cfg.format {
        Format::Human => {
            writeln!(w, "value     = {}", complex15(v.value.into())).map_err(io)?;
            if let Some(exact) = &v.exact {
                writeln!(w, "exact     = {exact}").map_err(io)?;
            }
            writeln!(w, "est_error = {}", sig15(v.est_error)).map_err(io)?;
            writeln!(w, "method    = {}", v.method).map_err(io)?;
        }
        Format::Json => {
            serde_json::to_writer(&mut w, &v).map_err(|e| Error::Config(e.to_string()))?;
            writeln!(w).map_err(io)?;
        }
        Format::Csv => {
            let mut c = csv::Writer::from_writer(&mut w);
            c.write_record(["function", "re", "im", "est_error", "method", "exact"])
                .map_err(|e| Error::Config(e.to_string()))?;
            c.write_record([
                function.to_string(),
                v.value.re.to_string(),
                v.value.im.to_string(),
                v.est_error.to_string(),
                v.method.clone(),
                v.exact.clone().unwrap_or_default(),
            ])
            .map_err(|e| Error::Config(e.to_string()))?;
            c.flush().map_err(io)?;
        }
    }
    w.flush().map_err(io)?;
    Ok(EXIT_OK)
}

fn side_line(label: &str, z: Option<crate::identities::ComplexValue>, exact: Option<&str>) -> String {
    let value = z.map_or_else(|| "-".to_string(), |z| complex15(z.into()));
    match exact {
        Some(e) => format!("{label:9}= {value}  (exact {e})"),
        None => format!("{label:9}= {value}"),
    }
}

fn write_human_report(w: &mut dyn Write, r: &IdentityCheckReport, note: Option<&str>) -> Result<()> {
    writeln!(w, "{}  {}", r.id, r.point).map_err(io)?;
    if r.status == Status::Disputed {
        writeln!(w, "  DISPUTED: {}", note.unwrap_or("reported for information only")).map_err(io)?;
    }
    let ex = r.exact.as_ref();
    writeln!(w, "  {}", side_line("lhs", r.lhs, ex.map(|e| e.lhs.as_str()))).map_err(io)?;
    writeln!(w, "  {}", side_line("rhs", r.rhs, ex.map(|e| e.rhs.as_str()))).map_err(io)?;
    if let Some(a) = r.abs_err {
        let rel = r.rel_err.map_or_else(|| "undefined".to_string(), sig15);
        writeln!(w, "  abs_err  = {}   rel_err = {rel}", sig15(a)).map_err(io)?;
    }
    writeln!(w, "  tol      = abs {} / rel {}", sig15(r.tol_abs), sig15(r.tol_rel)).map_err(io)?;
    if let Some(q) = r.quadrature {
        writeln!(
            w,
            "  quadrature: {} evaluations, {} subdivisions{}",
            q.evaluations,
            q.subdivisions,
            if q.converged { "" } else { ", NOT converged" }
        )
        .map_err(io)?;
    }
    if let Some(d) = &r.diagnostic {
        writeln!(w, "  note     = {d}").map_err(io)?;
    }
    let verdict = match (r.status, r.verdict) {
        (Status::Disputed, v) => format!("{v} (disputed, informational)"),
        (_, v) => v.to_string(),
    };
    writeln!(w, "  verdict  = {verdict}").map_err(io)
}

fn cmd_check(id: &str, params: BTreeMap<String, String>, cfg: &CliConfig, stdout: &mut dyn Write) -> Result<i32> {
    let spec = find_identity(id)?;
    let mut partial = Point::new();
    for (k, v) in &params {
        partial = partial.with(k, parse_value(v)?);
    }
    let point = spec.domain.complete(&partial)?;
    let report = check_identity(spec, &point, &cfg.check_options());
    let mut w = sink(cfg, stdout)?;
    match cfg.format {
        Format::Human => write_human_report(&mut w, &report, spec.note)?,
        Format::Json => write_json_lines(&mut w, std::slice::from_ref(&report))?,
        Format::Csv => write_csv(&mut w, std::slice::from_ref(&report))?,
    }
    w.flush().map_err(io)?;
    Ok(match (report.status, report.verdict) {
        (Status::Disputed, Verdict::Skipped) | (Status::Asserted, Verdict::Skipped) => EXIT_USAGE,
        (Status::Disputed, _) | (_, Verdict::Pass) => EXIT_OK,
        (_, Verdict::Fail) => EXIT_FAIL,
    })
}

fn cmd_suite(filter: &str, s: &Settings, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    let cfg = &s.cfg;
    let start = Instant::now();
    let run = run_suite(filter, &cfg.grid, &cfg.check_options())?;
    let elapsed = start.elapsed();
    let sum = run.summary;
    let counts = format!(
        "total {}  pass {}  fail {}  skipped {}  disputed {}",
        sum.total, sum.pass, sum.fail, sum.skipped, sum.disputed
    );
    // the report stream owns stdout only for json/csv without --out
    let report_on_stdout = cfg.out.is_none() && cfg.format != Format::Human;
    {
        let mut w = sink(cfg, stdout)?;
        match cfg.format {
            Format::Csv => write_csv(&mut w, &run.reports)?,
            Format::Json => write_json_lines(&mut w, &run.reports)?,
            Format::Human if cfg.out.is_some() => write_json_lines(&mut w, &run.reports)?,
            Format::Human => write_suite_table(&mut w, &run.reports)?,
        }
        w.flush().map_err(io)?;
    }
    let summary_out: &mut dyn Write = if report_on_stdout { stderr } else { stdout };
    if cfg.out.is_some() && cfg.format == Format::Human {
        // the table goes to the terminal, the JSON lines to the file
        write_suite_table(summary_out, &run.reports)?;
    }
    writeln!(summary_out, "{counts}").map_err(io)?;
    if s.timings {
        writeln!(summary_out, "elapsed {:.3}s", elapsed.as_secs_f64()).map_err(io)?;
    }
    Ok(if sum.ok() { EXIT_OK } else { EXIT_FAIL })
}

fn write_suite_table(w: &mut dyn Write, reports: &[IdentityCheckReport]) -> Result<()> {
    writeln!(w, "{:<24}{:>7}{:>7}{:>7}{:>7}  {:<9}{:>12}", "id", "points", "pass", "fail", "skip", "status", "max_abs_err")
        .map_err(io)?;
    let mut i = 0;
    while i < reports.len() {
        let id = &reports[i].id;
        let group: Vec<&IdentityCheckReport> = reports[i..].iter().take_while(|r| &r.id == id).collect();
        i += group.len();
        let count = |v: Verdict| group.iter().filter(|r| r.verdict == v).count();
        let max_err = group.iter().filter_map(|r| r.abs_err).fold(0.0, f64::max);
        let status = match group[0].status {
            Status::Asserted => "asserted",
            Status::Disputed => "disputed",
        };
        writeln!(
            w,
            "{:<24}{:>7}{:>7}{:>7}{:>7}  {:<9}{:>12.3e}",
            id,
            group.len(),
            count(Verdict::Pass),
            count(Verdict::Fail),
            count(Verdict::Skipped),
            status,
            max_err
        )
        .map_err(io)?;
    }
    Ok(())
}

fn cmd_table(kind: TableKind, max_index: usize, cfg: &CliConfig, stdout: &mut dyn Write) -> Result<i32> {
    let rows = table(kind, max_index)?;
    let mut w = sink(cfg, stdout)?;
    match cfg.format {
        Format::Human => {
            writeln!(w, "{:>5}  {:<28}{:>24}{:>24}  {:>9}  agree", "index", "closed form", "closed value", "numeric", "abs diff")
                .map_err(io)?;
            for r in &rows {
                writeln!(
                    w,
                    "{:>5}  {:<28}{:>24}{:>24}  {:>9.2e}  {}",
                    r.index,
                    r.closed_form,
                    sig15(r.closed_value),
                    sig15(r.numeric),
                    r.abs_diff,
                    if r.agree { "yes" } else { "NO" }
                )
                .map_err(io)?;
            }
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut w, &rows).map_err(|e| Error::Config(e.to_string()))?;
            writeln!(w).map_err(io)?;
        }
        Format::Csv => {
            let mut c = csv::Writer::from_writer(&mut w);
            for r in &rows {
                c.serialize(r).map_err(|e| Error::Config(e.to_string()))?;
            }
            c.flush().map_err(io)?;
        }
    }
    w.flush().map_err(io)?;
    Ok(EXIT_OK)
}

fn cmd_catalog(cfg: &CliConfig, stdout: &mut dyn Write) -> Result<i32> {
    let mut w = sink(cfg, stdout)?;
    match cfg.format {
        Format::Json => writeln!(w, "{}", catalog_json()).map_err(io)?,
        Format::Csv => {
            let mut c = csv::Writer::from_writer(&mut w);
            c.write_record(["id", "status", "points", "title", "reference"])
                .map_err(|e| Error::Config(e.to_string()))?;
            for s in catalog() {
                let status = if s.status == Status::Disputed { "disputed" } else { "asserted" };
                c.write_record([s.id, status, &s.domain.points().len().to_string(), s.title, s.reference])
                    .map_err(|e| Error::Config(e.to_string()))?;
            }
            c.flush().map_err(io)?;
        }
        Format::Human => {
            for s in catalog() {
                let flag = if s.status == Status::Disputed { " [disputed]" } else { "" };
                writeln!(w, "{:<24}{:>5} pts  {}{flag}", s.id, s.domain.points().len(), s.title).map_err(io)?;
            }
        }
    }
    w.flush().map_err(io)?;
    Ok(EXIT_OK)
}
