//! Parallel, resumable sweeps over curve-family parameter ranges.
//!
//! One JSONL record per parameter value, written incrementally so an
//! interrupted sweep resumes by re-reading its own output; a final pass
//! rewrites the file sorted by parameter, making the artifact independent of
//! the worker count (up to the `elapsed_ms` timing field). Degenerate
//! parameters and exhausted factorization budgets become records with an
//! error flag rather than aborting the sweep.

use crate::arith::Integer;
use crate::curves::{
    balady_solve, hessian_solve, quartic_ab_solve, CurveError, CurveSolutions, SolveOptions,
};
use crate::factor::{FactorError, FactorOptions};
use crate::poly::RationalPoly;
use num_traits::{One, ToPrimitive};
use std::collections::BTreeMap;
use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;
use std::time::Instant;

/// Parameters are handed out to workers in chunks of this size; cost is
/// dominated by factorization variance, so chunks stay small.
const CHUNK: usize = 64;

#[derive(Debug, thiserror::Error)]
pub enum ScanError {
    #[error("output file {0} already exists; pass resume to continue it")]
    OutputExists(PathBuf),
    #[error("corrupted resume file at line {line}: {msg}")]
    CorruptResume { line: usize, msg: String },
    #[error("invalid scan job: {0}")]
    BadJob(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QabMode {
    /// `Q_{4u,4}`: parameter `u`, curve coefficient `a = 4u`.
    FourU,
    /// `Q_{2u,4}` over odd `u` only.
    TwoU,
}

#[derive(Debug, Clone)]
pub enum ScanFamily {
    /// `H_d` over every integer `d` in range (`d = -3` is recorded as
    /// degenerate).
    Hessian,
    /// `X_T` over even `T` in range (`T = ±8` recorded as singular).
    Balady,
    /// `X_{T(t)}` for a polynomial parameter family, swept over integer `t`.
    BaladyFamily { poly: RationalPoly },
    /// `Q_{a,4}` with `a` derived from the swept `u` by the mode.
    QuarticAb { mode: QabMode },
}

impl ScanFamily {
    pub fn family_name(&self) -> &'static str {
        match self {
            ScanFamily::Hessian => "hessian",
            ScanFamily::Balady | ScanFamily::BaladyFamily { .. } => "balady",
            ScanFamily::QuarticAb { .. } => "quartic_ab",
        }
    }

    /// The JSONL key of the swept parameter.
    pub fn primary_key(&self) -> &'static str {
        match self {
            ScanFamily::Hessian => "d",
            ScanFamily::Balady => "T",
            ScanFamily::BaladyFamily { .. } => "t",
            ScanFamily::QuarticAb { .. } => "u",
        }
    }

    /// Swept parameter values within `[lo, hi]`, honoring parity
    /// constraints.
    fn values(&self, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi)
            .filter(|v| match self {
                ScanFamily::Balady => v % 2 == 0,
                ScanFamily::QuarticAb { mode: QabMode::TwoU } => v % 2 != 0,
                _ => true,
            })
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct ScanJob {
    pub family: ScanFamily,
    pub lo: i64,
    pub hi: i64,
    /// Rho-iteration budget per parameter value.
    pub budget: u64,
    pub seed: u64,
    pub out: PathBuf,
    pub resume: bool,
}

#[derive(Debug, Clone, serde::Serialize, serde::Deserialize, PartialEq, Eq)]
pub struct RecordFlags {
    /// Per-solution classification, parallel to `solutions`.
    pub classes: Vec<String>,
    #[serde(default)]
    pub error: Option<String>,
    #[serde(default)]
    pub incomplete: bool,
}

/// One parameter's outcome. Solutions are decimal strings so arbitrarily
/// large coordinates survive JSON exactly.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize, PartialEq, Eq)]
pub struct ScanRecord {
    pub family: String,
    pub params: BTreeMap<String, i64>,
    pub solutions: Vec<[String; 2]>,
    pub flags: RecordFlags,
    pub elapsed_ms: u64,
}

impl ScanRecord {
    pub fn has_error(&self) -> bool {
        self.flags.error.is_some()
    }

    /// Number of solutions outside the family's trivial set.
    pub fn nontrivial_count(&self) -> usize {
        self.flags.classes.iter().filter(|c| *c != "trivial").count()
    }

    pub fn primary_value(&self, key: &str) -> Option<i64> {
        self.params.get(key).copied()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanSummary {
    pub total: usize,
    pub computed: usize,
    pub skipped_existing: usize,
    pub errors: usize,
    pub out: PathBuf,
}

fn record_from_solutions(
    family: &ScanFamily,
    params: BTreeMap<String, i64>,
    sols: &CurveSolutions,
    elapsed_ms: u64,
) -> ScanRecord {
    let mut solutions = Vec::with_capacity(sols.len());
    let mut classes = Vec::with_capacity(sols.len());
    for (p, class) in sols.classified() {
        solutions.push([p.x.to_string(), p.y.to_string()]);
        classes.push(class.to_string());
    }
    ScanRecord {
        family: family.family_name().to_string(),
        params,
        solutions,
        flags: RecordFlags {
            classes,
            error: None,
            incomplete: false,
        },
        elapsed_ms,
    }
}

fn record_error(
    family: &ScanFamily,
    params: BTreeMap<String, i64>,
    err: &CurveError,
    elapsed_ms: u64,
) -> ScanRecord {
    let incomplete = matches!(err, CurveError::Factor(FactorError::Incomplete { .. }));
    ScanRecord {
        family: family.family_name().to_string(),
        params,
        solutions: Vec::new(),
        flags: RecordFlags {
            classes: Vec::new(),
            error: Some(err.to_string()),
            incomplete,
        },
        elapsed_ms,
    }
}

/// Solve one swept parameter value into its record.
fn solve_param(family: &ScanFamily, value: i64, opts: &SolveOptions) -> ScanRecord {
    let started = Instant::now();
    let mut params = BTreeMap::new();
    params.insert(family.primary_key().to_string(), value);
    let outcome: Result<CurveSolutions, CurveError> = match family {
        ScanFamily::Hessian => hessian_solve(&Integer::from(value), opts),
        ScanFamily::Balady => {
            params.insert("T".into(), value);
            balady_solve(&Integer::from(value), opts)
        }
        ScanFamily::BaladyFamily { poly } => {
            let tv = poly.eval_integer(&Integer::from(value));
            if !tv.denom().is_one() {
                let err = CurveError::Degenerate(format!(
                    "family polynomial evaluates to the non-integer {} at t = {value}",
                    crate::arith::format_rational(&tv)
                ));
                return record_error(family, params, &err, ms(started));
            }
            let t = tv.to_integer();
            match t.to_i64() {
                Some(ti) => {
                    params.insert("T".into(), ti);
                }
                None => {
                    let err =
                        CurveError::OutOfRange(format!("curve parameter {t} exceeds 64 bits"));
                    return record_error(family, params, &err, ms(started));
                }
            }
            balady_solve(&t, opts)
        }
        ScanFamily::QuarticAb { mode } => {
            let a = match mode {
                QabMode::FourU => 4 * value,
                QabMode::TwoU => 2 * value,
            };
            params.insert("a".into(), a);
            params.insert("b".into(), 4);
            quartic_ab_solve(&Integer::from(a), &Integer::from(4), opts)
        }
    };
    match outcome {
        Ok(sols) => record_from_solutions(family, params, &sols, ms(started)),
        Err(err) => record_error(family, params, &err, ms(started)),
    }
}

fn ms(started: Instant) -> u64 {
    started.elapsed().as_millis() as u64
}

/// Parse an existing output file. A trailing line that fails to parse is
/// treated as an interrupted write and dropped (its parameter will be
/// recomputed); malformed lines anywhere else are an error.
pub fn read_records(path: &Path) -> Result<Vec<ScanRecord>, ScanError> {
    let file = fs::File::open(path)?;
    let reader = BufReader::new(file);
    let mut records: Vec<ScanRecord> = Vec::new();
    let mut pending_error: Option<(usize, String)> = None;
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        if let Some((line_no, msg)) = pending_error.take() {
            // the malformed line was not the final one
            return Err(ScanError::CorruptResume { line: line_no, msg });
        }
        match serde_json::from_str::<ScanRecord>(&line) {
            Ok(r) => records.push(r),
            Err(e) => pending_error = Some((idx + 1, e.to_string())),
        }
    }
    Ok(records)
}

/// Run a sweep. Output is one JSONL record per parameter, appended as
/// results arrive and rewritten in sorted order at the end. With
/// `job.resume`, parameters already present in the output are skipped.
pub fn run_scan(job: &ScanJob, workers: usize) -> Result<ScanSummary, ScanError> {
    if job.lo > job.hi {
        return Err(ScanError::BadJob(format!(
            "empty range [{}, {}]",
            job.lo, job.hi
        )));
    }
    let workers = workers.max(1);
    let key = job.family.primary_key();

    let mut existing: Vec<ScanRecord> = Vec::new();
    if job.out.exists() {
        if !job.resume {
            return Err(ScanError::OutputExists(job.out.clone()));
        }
        existing = read_records(&job.out)?;
        for (i, r) in existing.iter().enumerate() {
            if r.family != job.family.family_name() || !r.params.contains_key(key) {
                return Err(ScanError::CorruptResume {
                    line: i + 1,
                    msg: format!("record does not belong to a {} sweep", job.family.family_name()),
                });
            }
        }
    }
    let done: std::collections::BTreeSet<i64> = existing
        .iter()
        .filter_map(|r| r.primary_value(key))
        .collect();

    let all_values = job.family.values(job.lo, job.hi);
    let todo: Vec<i64> = all_values
        .iter()
        .copied()
        .filter(|v| !done.contains(v))
        .collect();
    let skipped_existing = all_values.len() - todo.len();

    let opts = SolveOptions {
        factor: FactorOptions {
            rho_budget: job.budget,
            seed: job.seed,
        },
    };

    let mut records = existing;
    if !todo.is_empty() {
        let file = fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(&job.out)?;
        let mut writer = BufWriter::new(file);
        let cursor = AtomicUsize::new(0);
        let (tx, rx) = mpsc::channel::<ScanRecord>();
        let family = &job.family;
        let todo_ref = &todo;
        let cursor_ref = &cursor;
        std::thread::scope(|scope| -> Result<(), ScanError> {
            for _ in 0..workers {
                let tx = tx.clone();
                scope.spawn(move || loop {
                    let start = cursor_ref.fetch_add(CHUNK, Ordering::Relaxed);
                    if start >= todo_ref.len() {
                        break;
                    }
                    let end = (start + CHUNK).min(todo_ref.len());
                    for &value in &todo_ref[start..end] {
                        if tx.send(solve_param(family, value, &opts)).is_err() {
                            return;
                        }
                    }
                });
            }
            drop(tx);
            // single writer serializes the stream
            for record in rx {
                serde_json::to_writer(&mut writer, &record)
                    .map_err(|e| ScanError::Io(e.into()))?;
                writer.write_all(b"\n")?;
                writer.flush()?;
                records.push(record);
            }
            Ok(())
        })?;
    }

    records.sort_by_key(|r| r.primary_value(key).unwrap_or(i64::MAX));
    let tmp = job.out.with_extension("jsonl.tmp");
    {
        let mut writer = BufWriter::new(fs::File::create(&tmp)?);
        for record in &records {
            serde_json::to_writer(&mut writer, record).map_err(|e| ScanError::Io(e.into()))?;
            writer.write_all(b"\n")?;
        }
        writer.flush()?;
    }
    fs::rename(&tmp, &job.out)?;

    Ok(ScanSummary {
        total: records.len(),
        computed: todo.len(),
        skipped_existing,
        errors: records.iter().filter(|r| r.has_error()).count(),
        out: job.out.clone(),
    })
}

/// Histogram of solution counts plus the parameters at or above a
/// threshold. Error records land in the 0-solutions bucket so totals always
/// equal the record count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatsReport {
    pub total: usize,
    pub histogram: BTreeMap<usize, usize>,
    pub nontrivial_records: usize,
    pub error_records: usize,
    pub over_threshold: Vec<(BTreeMap<String, i64>, usize)>,
}

pub fn stats(records: &[ScanRecord], threshold: usize) -> StatsReport {
    let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
    let mut nontrivial_records = 0;
    let mut error_records = 0;
    let mut over_threshold = Vec::new();
    for r in records {
        *histogram.entry(r.solutions.len()).or_insert(0) += 1;
        if r.nontrivial_count() > 0 {
            nontrivial_records += 1;
        }
        if r.has_error() {
            error_records += 1;
        }
        if r.solutions.len() >= threshold {
            over_threshold.push((r.params.clone(), r.solutions.len()));
        }
    }
    StatsReport {
        total: records.len(),
        histogram,
        nontrivial_records,
        error_records,
        over_threshold,
    }
}

/// CSV export: `family,param,x,y,class`, one row per solution.
pub fn write_csv(
    records: &[ScanRecord],
    primary_key: &str,
    out: &mut impl Write,
) -> std::io::Result<()> {
    writeln!(out, "family,param,x,y,class")?;
    for r in records {
        let param = r
            .primary_value(primary_key)
            .map(|v| v.to_string())
            .unwrap_or_default();
        for (sol, class) in r.solutions.iter().zip(&r.flags.classes) {
            writeln!(out, "{},{},{},{},{}", r.family, param, sol[0], sol[1], class)?;
        }
    }
    Ok(())
}
