//! Runs part of the identity catalog and writes JSON-lines and CSV reports.
//!
//! `cargo run --release --example run_suite -- "PROD-*,MEAN" s=-3:0:0.5`

use std::fs::File;
use std::io::BufWriter;

use eulerzeta::identities::{run_suite, write_csv, write_json_lines, CheckOptions, GridOverride, Status};

fn main() -> eulerzeta::Result<()> {
    let mut args = std::env::args().skip(1);
    let filter = args.next().unwrap_or_else(|| "PROD-*,EULER-*".to_string());
    let overrides: Vec<GridOverride> = args.map(|a| a.parse()).collect::<eulerzeta::Result<_>>()?;

    let run = run_suite(&filter, &overrides, &CheckOptions::default())?;
    let dir = std::env::temp_dir();
    let jsonl = dir.join("eulerzeta-report.jsonl");
    let csv = dir.join("eulerzeta-report.csv");
    let open = |p: &std::path::Path| File::create(p).map(BufWriter::new).expect("temp dir is writable");
    write_json_lines(open(&jsonl), &run.reports)?;
    write_csv(open(&csv), &run.reports)?;

    let s = run.summary;
    println!("{filter}: {} points, pass {}, fail {}, skipped {}, disputed {}", s.total, s.pass, s.fail, s.skipped, s.disputed);
    let worst = run
        .reports
        .iter()
        .filter(|r| r.status == Status::Asserted)
        .filter_map(|r| r.abs_err.map(|e| (e, r))).max_by(|a, b| a.0.total_cmp(&b.0));
    if let Some((e, r)) = worst {
        println!("largest abs error among asserted identities {e:.2e} at {} {}", r.id, r.point);
    }
    println!("reports: {} and {}", jsonl.display(), csv.display());
    Ok(())
}
