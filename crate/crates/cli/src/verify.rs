use std::collections::BTreeSet;
use std::io::Write;

use tkmotive_core::{
    verify, CountOptions, PrimeChoice, TorusKnotParams, VerificationReport, VerifyGroup,
    VerifyOptions,
};

use crate::args::{ReportFormat, VerifyArgs};
use crate::{Failure, EXIT_MISMATCH, EXIT_OK};

pub fn count_options(threads: Option<usize>, budget: u128) -> CountOptions {
    CountOptions { threads, budget }
}

/// 0 when every item matches and the prime is admissible (or the caller
/// accepts an inadmissible one), 1 otherwise.
pub fn exit_code(report: &VerificationReport, allow_inadmissible: bool) -> u8 {
    if report.all_match() && (report.admissible || allow_inadmissible) {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

pub fn run(args: &VerifyArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    let params = TorusKnotParams::new(args.m, args.n)?;
    let prime = match args.q {
        Some(q) => PrimeChoice::Fixed(q),
        None => PrimeChoice::Auto { cap: args.max_q },
    };
    let mut groups: BTreeSet<VerifyGroup> = if args.groups.is_empty() {
        VerifyGroup::DEFAULT.into_iter().collect()
    } else {
        args.groups.iter().map(|&g| g.into()).collect()
    };
    if args.strata {
        groups.insert(VerifyGroup::Strata);
    }
    let opts = VerifyOptions {
        groups,
        formulas: args.formulas.into(),
        count: count_options(args.threads, args.budget),
    };
    let report = verify(&params, prime, &opts)?;
    match args.format {
        ReportFormat::Human => writeln!(out, "{report}")?,
        ReportFormat::Json => {
            writeln!(out, "{}", serde_json::to_string_pretty(&report.to_json())?)?
        }
    }
    Ok(exit_code(&report, args.allow_inadmissible))
}
