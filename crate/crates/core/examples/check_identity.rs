//! Checks single identities at chosen points and prints the reports.
//!
//! `cargo run --example check_identity -- FOUR-SIN s=-1.25 k=2`

use eulerzeta::identities::{check_identity, find_identity, CheckOptions, ParamValue, Point};

fn parse_point(args: &[String]) -> Point {
    args.iter().fold(Point::new(), |p, kv| {
        let (k, v) = kv.split_once('=').expect("parameters look like name=value");
        let value = v.parse::<i64>().map(ParamValue::Int).unwrap_or_else(|_| ParamValue::Real(v.parse().expect("number")));
        p.with(k, value)
    })
}

fn main() -> eulerzeta::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cases: Vec<(String, Point)> = if args.is_empty() {
        vec![
            ("EULER-PROD".into(), parse_point(&["m=1".into(), "n=1".into()])),
            ("FOUR-SIN".into(), parse_point(&["s=-1.25".into(), "k=2".into()])),
            ("CATALAN".into(), Point::new()),
            ("EXP-SUM".into(), parse_point(&["m=3".into(), "alpha=1".into(), "n=1".into()])),
        ]
    } else {
        vec![(args[0].clone(), parse_point(&args[1..]))]
    };
    for (id, partial) in cases {
        let spec = find_identity(&id)?;
        let point = spec.domain.complete(&partial)?;
        let r = check_identity(spec, &point, &CheckOptions::default());
        println!("{} at {}  [{:?}]", spec.id, r.point, spec.status);
        println!("  {}", spec.reference.replace('\n', "\n  "));
        println!("  lhs = {:?}\n  rhs = {:?}\n  abs_err = {:?}  verdict = {}", r.lhs, r.rhs, r.abs_err, r.verdict);
        if let Some(e) = &r.exact {
            println!("  exact: {} vs {}", e.lhs, e.rhs);
        }
        if let Some(note) = spec.note {
            println!("  note: {note}");
        }
        println!();
    }
    Ok(())
}
