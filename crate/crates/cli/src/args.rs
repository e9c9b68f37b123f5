use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use tkmotive_core::count::DEFAULT_BUDGET;
use tkmotive_core::knot::MAX_PARAM;
use tkmotive_core::{FormulaSet, MotiveGroup, VerifyGroup};

#[derive(Debug, Parser)]
#[command(
    name = "tkmotive",
    version,
    about = "Motives of AGL1/AGL2 representation varieties of torus knots, checked by counting points over F_q"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the motive of a representation variety as a polynomial in q.
    Motive(MotiveArgs),
    /// Compare motives evaluated at a prime q with exhaustive point counts.
    Verify(VerifyArgs),
    /// Tabulate motives for every coprime pair 2 <= m < n <= MAX.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroupArg {
    Agl1,
    Agl2,
    Gl2,
    #[value(name = "gl2-irr")]
    Gl2Irr,
}

impl From<GroupArg> for MotiveGroup {
    fn from(g: GroupArg) -> Self {
        match g {
            GroupArg::Agl1 => MotiveGroup::Agl1,
            GroupArg::Agl2 => MotiveGroup::Agl2,
            GroupArg::Gl2 => MotiveGroup::Gl2,
            GroupArg::Gl2Irr => MotiveGroup::Gl2Irr,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormulasArg {
    /// Published formulas as printed.
    Published,
    /// Published formulas with the A3 stratum fixed and the non-commuting
    /// reducible strata D1-D3 added.
    Corrected,
}

impl From<FormulasArg> for FormulaSet {
    fn from(f: FormulasArg) -> Self {
        match f {
            FormulasArg::Published => FormulaSet::Published,
            FormulasArg::Corrected => FormulaSet::Corrected,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyGroupArg {
    Agl1,
    Agl2,
    Gl2,
    Strata,
}

impl From<VerifyGroupArg> for VerifyGroup {
    fn from(g: VerifyGroupArg) -> Self {
        match g {
            VerifyGroupArg::Agl1 => VerifyGroup::Agl1,
            VerifyGroupArg::Agl2 => VerifyGroup::Agl2,
            VerifyGroupArg::Gl2 => VerifyGroup::Gl2,
            VerifyGroupArg::Strata => VerifyGroup::Strata,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MotiveFormat {
    Human,
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Human,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepFormat {
    Csv,
    Json,
}

fn knot_param() -> clap::builder::RangedI64ValueParser<u32> {
    clap::value_parser!(u32).range(1..=i64::from(MAX_PARAM))
}

#[derive(Debug, Args)]
pub struct MotiveArgs {
    /// Group whose representation variety is computed.
    #[arg(long, value_enum)]
    pub group: GroupArg,
    /// Torus knot parameter m, coprime to n.
    #[arg(long, value_parser = knot_param())]
    pub m: u32,
    /// Torus knot parameter n.
    #[arg(long, value_parser = knot_param())]
    pub n: u32,
    /// Also print every stratum (agl2) or reducible class (gl2).
    #[arg(long)]
    pub strata: bool,
    #[arg(long, value_enum, default_value_t = MotiveFormat::Human)]
    pub format: MotiveFormat,
    #[arg(long, value_enum, default_value_t = FormulasArg::Published)]
    pub formulas: FormulasArg,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("prime").required(true).args(["q", "auto_q"])))]
pub struct VerifyArgs {
    /// Torus knot parameter m, coprime to n.
    #[arg(long, value_parser = knot_param())]
    pub m: u32,
    /// Torus knot parameter n.
    #[arg(long, value_parser = knot_param())]
    pub n: u32,
    /// Count over F_Q.
    #[arg(long)]
    pub q: Option<u64>,
    /// Use the smallest prime q = 1 (mod mn), searching up to --max-q.
    #[arg(long)]
    pub auto_q: bool,
    /// Largest prime considered when choosing q automatically.
    #[arg(long, default_value_t = 1000)]
    pub max_q: u64,
    /// Comma-separated subset of agl1,agl2,gl2,strata [default: agl1,agl2,gl2]
    #[arg(long, value_enum, value_delimiter = ',')]
    pub groups: Vec<VerifyGroupArg>,
    /// Add per-stratum comparisons (same as including `strata` in --groups).
    #[arg(long)]
    pub strata: bool,
    /// Worker threads for counting [default: one per core]
    #[arg(long, env = "TKMOTIVE_THREADS")]
    pub threads: Option<usize>,
    /// Exit 0 when everything matches even if q is not 1 mod mn.
    #[arg(long)]
    pub allow_inadmissible: bool,
    #[arg(long, value_enum, default_value_t = FormulasArg::Published)]
    pub formulas: FormulasArg,
    #[arg(long, value_enum, default_value_t = ReportFormat::Human)]
    pub format: ReportFormat,
    /// Largest |GL2(F_q)| the enumeration may index.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Largest n (and m) in the sweep.
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..=i64::from(MAX_PARAM)))]
    pub max: u32,
    /// Group whose representation variety is computed.
    #[arg(long, value_enum)]
    pub group: GroupArg,
    /// Output file.
    #[arg(long)]
    pub out: PathBuf,
    /// Output format; inferred from the --out extension when omitted.
    #[arg(long, value_enum)]
    pub format: Option<SweepFormat>,
    /// Check every row at its smallest admissible prime.
    #[arg(long)]
    pub verify: bool,
    /// Largest prime considered when choosing q automatically.
    #[arg(long, default_value_t = 1000)]
    pub max_q: u64,
    /// Worker threads for counting [default: one per core]
    #[arg(long, env = "TKMOTIVE_THREADS")]
    pub threads: Option<usize>,
    #[arg(long, value_enum, default_value_t = FormulasArg::Published)]
    pub formulas: FormulasArg,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,
}
