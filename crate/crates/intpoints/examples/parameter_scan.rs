//! Sweep a parameter range with worker threads, then read the JSONL records
//! back and print the solution-count histogram. Rerunning the same job with
//! `resume: true` only computes missing parameters.

use intpoints::scan::{read_records, run_scan, stats, ScanFamily, ScanJob};

fn main() {
    let dir = std::env::temp_dir().join("intpoints_example_scan");
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("hessian_small.jsonl");
    let _ = std::fs::remove_file(&out);

    let job = ScanJob {
        family: ScanFamily::Hessian,
        lo: -500,
        hi: 500,
        budget: 1_000_000_000,
        seed: 42,
        out: out.clone(),
        resume: false,
    };
    let summary = run_scan(&job, 4).unwrap();
    println!(
        "{} records written to {} ({} errors)",
        summary.total,
        summary.out.display(),
        summary.errors
    );

    let records = read_records(&out).unwrap();
    let report = stats(&records, 6);
    println!("\nsolution-count histogram:");
    for (count, how_many) in &report.histogram {
        println!("  {count} solutions: {how_many} parameters");
    }
    println!("parameters with nontrivial points: {}", report.nontrivial_records);
    println!("\nparameters with at least 6 solutions:");
    for (params, count) in &report.over_threshold {
        println!("  d = {} ({count})", params["d"]);
    }
}
