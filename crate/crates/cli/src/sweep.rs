use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde_json::Value;
use tkmotive_core::{
    verify, FormulaSet, MotiveGroup, PrimeChoice, TorusKnotParams, VerifyGroup, VerifyOptions,
};

use crate::args::{SweepArgs, SweepFormat};
use crate::motive::Listing;
use crate::render;
use crate::verify::count_options;
use crate::{Failure, EXIT_MISMATCH, EXIT_OK};

struct SweepRow {
    listing: Listing,
    verified_q: Option<u64>,
    verified: Option<bool>,
}

impl SweepRow {
    fn to_json(&self) -> Value {
        let mut v = self.listing.to_json();
        v["verified_q"] = self.verified_q.into();
        v["verified"] = self.verified.into();
        v
    }
}

/// Coprime `(m, n)` with `2 <= m < n <= max`, lexicographically.
pub fn coprime_pairs(max: u32) -> impl Iterator<Item = TorusKnotParams> {
    (2..=max).flat_map(move |m| (m + 1..=max).filter_map(move |n| TorusKnotParams::new(m, n).ok()))
}

fn infer_format(path: &Path) -> SweepFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some(ext) if ext.eq_ignore_ascii_case("json") => SweepFormat::Json,
        _ => SweepFormat::Csv,
    }
}

fn verification_group(group: MotiveGroup) -> VerifyGroup {
    match group {
        MotiveGroup::Agl1 => VerifyGroup::Agl1,
        MotiveGroup::Agl2 => VerifyGroup::Agl2,
        MotiveGroup::Gl2 | MotiveGroup::Gl2Irr => VerifyGroup::Gl2,
    }
}

/// Verifies one row. Errors (no admissible prime, field too large) count as
/// failures so the sweep can finish.
fn check(params: &TorusKnotParams, group: MotiveGroup, args: &SweepArgs) -> (Option<u64>, bool) {
    let opts = VerifyOptions {
        groups: [verification_group(group)].into(),
        formulas: args.formulas.into(),
        count: count_options(args.threads, args.budget),
    };
    match verify(params, PrimeChoice::Auto { cap: args.max_q }, &opts) {
        Ok(report) => {
            let matches = report.item(group.as_str()).is_some_and(|i| i.matches);
            (Some(report.q), matches && report.admissible)
        }
        Err(e) => {
            eprintln!("{params}: verification failed: {e}");
            (None, false)
        }
    }
}

fn write_csv(path: &Path, rows: &[SweepRow]) -> Result<(), Failure> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record([
        "m",
        "n",
        "group",
        "degree",
        "coefficients",
        "verified_q",
        "verified",
    ])?;
    for row in rows {
        let l = &row.listing;
        w.write_record([
            l.params.m().to_string(),
            l.params.n().to_string(),
            l.group.as_str().to_string(),
            render::degree_field(&l.total),
            l.total.to_semicolon_list(),
            row.verified_q.map(|q| q.to_string()).unwrap_or_default(),
            row.verified.map(|v| v.to_string()).unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn write_json(path: &Path, rows: &[SweepRow]) -> Result<(), Failure> {
    let mut w = BufWriter::new(File::create(path)?);
    let rows: Vec<Value> = rows.iter().map(SweepRow::to_json).collect();
    serde_json::to_writer_pretty(&mut w, &rows)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

pub fn run(args: &SweepArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    let group: MotiveGroup = args.group.into();
    let set: FormulaSet = args.formulas.into();
    let format = args.format.unwrap_or_else(|| infer_format(&args.out));
    let mut rows = Vec::new();
    for params in coprime_pairs(args.max) {
        let listing = Listing::build(params, group, set, group == MotiveGroup::Agl2)?;
        let (verified_q, verified) = if args.verify {
            let (q, ok) = check(&params, group, args);
            (q, Some(ok))
        } else {
            (None, None)
        };
        rows.push(SweepRow {
            listing,
            verified_q,
            verified,
        });
    }
    match format {
        SweepFormat::Csv => write_csv(&args.out, &rows)?,
        SweepFormat::Json => write_json(&args.out, &rows)?,
    }
    let failed = rows.iter().filter(|r| r.verified == Some(false)).count();
    write!(out, "wrote {} rows to {}", rows.len(), args.out.display())?;
    if args.verify {
        write!(out, "; {} verified, {failed} failed", rows.len() - failed)?;
    }
    writeln!(out)?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_MISMATCH })
}
