//! Compares motive polynomials evaluated at `q` with point counts over `F_q`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde_json::json;

use crate::count::{count_agl1, count_agl2, CountOptions};
use crate::error::{Error, Result};
use crate::field::{is_admissible, smallest_admissible_prime};
use crate::knot::{
    agl2_breakdown, gl2_breakdown, group_motive, FormulaSet, MotiveGroup, StratumGroup,
    StratumLabel, TorusKnotParams,
};
use crate::motive::QPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VerifyGroup {
    Agl1,
    Agl2,
    Gl2,
    Strata,
}

impl VerifyGroup {
    pub const DEFAULT: [VerifyGroup; 3] = [Self::Agl1, Self::Agl2, Self::Gl2];

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Agl1 => "agl1",
            Self::Agl2 => "agl2",
            Self::Gl2 => "gl2",
            Self::Strata => "strata",
        }
    }
}

impl FromStr for VerifyGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "agl1" => Ok(Self::Agl1),
            "agl2" => Ok(Self::Agl2),
            "gl2" => Ok(Self::Gl2),
            "strata" => Ok(Self::Strata),
            _ => Err(Error::Parse(format!("unknown verification group {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimeChoice {
    Fixed(u64),
    /// Smallest admissible prime up to `cap`.
    Auto {
        cap: u64,
    },
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub groups: BTreeSet<VerifyGroup>,
    pub formulas: FormulaSet,
    pub count: CountOptions,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            groups: VerifyGroup::DEFAULT.into_iter().collect(),
            formulas: FormulaSet::Published,
            count: CountOptions::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationItem {
    pub name: String,
    pub expected: BigInt,
    pub observed: BigInt,
    pub matches: bool,
}

impl VerificationItem {
    fn new(name: impl Into<String>, poly: &QPolynomial, q: u64, observed: BigInt) -> Self {
        let expected = poly.eval_u64(q);
        Self {
            name: name.into(),
            matches: expected == observed,
            expected,
            observed,
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub params: TorusKnotParams,
    pub q: u64,
    pub admissible: bool,
    pub formulas: FormulaSet,
    pub items: Vec<VerificationItem>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn all_match(&self) -> bool {
        self.items.iter().all(|i| i.matches)
    }

    pub fn passed(&self) -> bool {
        self.all_match() && self.admissible
    }

    pub fn item(&self, name: &str) -> Option<&VerificationItem> {
        self.items.iter().find(|i| i.name == name)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "m": self.params.m(),
            "n": self.params.n(),
            "q": self.q,
            "admissible": self.admissible,
            "formulas": self.formulas.as_str(),
            "pass": self.passed(),
            "elapsed_ms": self.elapsed.as_millis() as u64,
            "items": self.items.iter().map(|i| json!({
                "name": i.name,
                "expected": i.expected.to_string(),
                "observed": i.observed.to_string(),
                "match": i.matches,
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "torus knot {} over F_{} ({}), {} formulas",
            self.params,
            self.q,
            if self.admissible {
                "admissible"
            } else {
                "inadmissible"
            },
            self.formulas.as_str(),
        )?;
        let width = self
            .items
            .iter()
            .map(|i| i.name.len())
            .max()
            .unwrap_or(4)
            .max(4);
        writeln!(
            f,
            "{:<width$}  {:>20}  {:>20}  result",
            "item", "expected", "observed"
        )?;
        for i in &self.items {
            writeln!(
                f,
                "{:<width$}  {:>20}  {:>20}  {}",
                i.name,
                i.expected.to_string(),
                i.observed.to_string(),
                if i.matches { "match" } else { "MISMATCH" },
            )?;
        }
        write!(
            f,
            "{} ({} ms)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.elapsed.as_millis()
        )
    }
}

pub fn resolve_prime(params: &TorusKnotParams, choice: PrimeChoice) -> Result<u64> {
    match choice {
        PrimeChoice::Fixed(q) => Ok(q),
        PrimeChoice::Auto { cap } => smallest_admissible_prime(params, cap),
    }
}

/// Runs the requested comparisons. Mismatches are reported, never masked.
pub fn verify(
    params: &TorusKnotParams,
    prime: PrimeChoice,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let q = resolve_prime(params, prime)?;
    let set = opts.formulas;
    let mut items = Vec::new();

    if opts.groups.contains(&VerifyGroup::Agl1) {
        let observed = count_agl1(params, q)?.agl_total.into();
        let poly = group_motive(params, MotiveGroup::Agl1, set)?;
        items.push(VerificationItem::new("agl1", &poly, q, observed));
    }

    let needs_agl2 = [VerifyGroup::Agl2, VerifyGroup::Gl2, VerifyGroup::Strata]
        .iter()
        .any(|g| opts.groups.contains(g));
    if needs_agl2 {
        let counts = count_agl2(params, q, &opts.count)?;

        if opts.groups.contains(&VerifyGroup::Agl2) {
            let poly = group_motive(params, MotiveGroup::Agl2, set)?;
            items.push(VerificationItem::new(
                "agl2",
                &poly,
                q,
                counts.agl_total.clone().into(),
            ));
        }

        if opts.groups.contains(&VerifyGroup::Gl2) {
            let poly = group_motive(params, MotiveGroup::Gl2, set)?;
            items.push(VerificationItem::new(
                "gl2",
                &poly,
                q,
                counts.gl_total().into(),
            ));
            // The irr/A/B/C classes agree between formula sets.
            let groups = gl2_breakdown(params, FormulaSet::Corrected)?;
            for group in StratumGroup::ALL {
                let poly = match (group, set) {
                    (StratumGroup::D, FormulaSet::Published) => QPolynomial::zero(),
                    _ => groups[&group].clone(),
                };
                let name = match group {
                    StratumGroup::Irr => "gl2-irr".to_string(),
                    g => format!("gl2-red-{g}"),
                };
                items.push(VerificationItem::new(
                    name,
                    &poly,
                    q,
                    counts.gl_group(group).into(),
                ));
            }
        }

        if opts.groups.contains(&VerifyGroup::Strata) {
            let breakdown = agl2_breakdown(params, set)?;
            for label in StratumLabel::ALL {
                let poly = breakdown.get(label).cloned().unwrap_or_default();
                items.push(VerificationItem::new(
                    label.as_str(),
                    &poly,
                    q,
                    counts.stratum(label).into(),
                ));
            }
        }
    }

    Ok(VerificationReport {
        params: *params,
        q,
        admissible: is_admissible(params, q),
        formulas: set,
        items,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_control() {
        let p = TorusKnotParams::new(2, 3).unwrap();
        let opts = VerifyOptions {
            groups: [VerifyGroup::Agl1].into(),
            ..VerifyOptions::default()
        };
        let r = verify(&p, PrimeChoice::Fixed(5), &opts).unwrap();
        assert!(!r.admissible);
        let item = r.item("agl1").unwrap();
        assert_eq!(item.expected, BigInt::from(60));
        assert_eq!(item.observed, BigInt::from(20));
        assert!(!r.passed());
    }

    #[test]
    fn auto_prime_and_not_prime() {
        let p = TorusKnotParams::new(2, 3).unwrap();
        let opts = VerifyOptions {
            groups: [VerifyGroup::Agl1].into(),
            ..VerifyOptions::default()
        };
        let r = verify(&p, PrimeChoice::Auto { cap: 1000 }, &opts).unwrap();
        assert_eq!(r.q, 7);
        assert!(r.passed());
        let p = TorusKnotParams::new(3, 5).unwrap();
        assert!(matches!(
            verify(&p, PrimeChoice::Fixed(20), &opts),
            Err(Error::NotPrime(20))
        ));
    }

    #[test]
    fn corrected_strata_match_at_seven() {
        let p = TorusKnotParams::new(2, 3).unwrap();
        let opts = VerifyOptions {
            groups: VerifyGroup::DEFAULT
                .into_iter()
                .chain([VerifyGroup::Strata])
                .collect(),
            formulas: FormulaSet::Corrected,
            count: CountOptions::default(),
        };
        let r = verify(&p, PrimeChoice::Fixed(7), &opts).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.items.len(), 1 + 1 + 6 + 15);
    }
}
