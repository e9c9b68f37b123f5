//! Exhaustive point counts of torus-knot representation varieties over `F_q`.
//!
//! `Rep(GL2)(F_q)` is enumerated through an index of `GL2(F_q)` keyed by
//! `B0^m`: every `A0` probes the index with `A0^n`. Affine translation parts
//! are never enumerated; a solution pair contributes `q^(4 - rank)` points,
//! where `rank` is the rank of `(alpha, beta) -> Phi_n(A0)alpha - Phi_m(B0)beta`.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Mat2, PrimeField};
use crate::knot::{StratumGroup, StratumLabel, TorusKnotParams};

/// Default ceiling on `|GL2(F_q)|`; admits every prime up to 47.
pub const DEFAULT_BUDGET: u128 = 5_000_000;

/// Primes up to this bound also run the naive `AGL1` count as a self-check.
pub const NAIVE_AGL1_LIMIT: u64 = 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountOptions {
    /// Worker threads; `None` uses rayon's default.
    pub threads: Option<usize>,
    /// Largest `|GL2(F_q)|` the enumeration may index.
    pub budget: u128,
}

impl Default for CountOptions {
    fn default() -> Self {
        Self {
            threads: None,
            budget: DEFAULT_BUDGET,
        }
    }
}

impl CountOptions {
    pub fn with_threads(threads: usize) -> Self {
        Self {
            threads: Some(threads),
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub q: u64,
    /// `F_q`-points of `Rep(AGL2)` per stratum, fiber-weighted.
    pub per_stratum: BTreeMap<StratumLabel, BigUint>,
    /// Solution pairs `(A0, B0)` per stratum.
    pub gl_per_stratum: BTreeMap<StratumLabel, BigUint>,
    /// Points of the affine representation variety (`AGL1` or `AGL2`).
    pub agl_total: BigUint,
    pub elapsed: Duration,
    pub thread_count: usize,
}

impl CountReport {
    pub fn gl_total(&self) -> BigUint {
        self.gl_per_stratum.values().sum()
    }

    pub fn gl_group(&self, group: StratumGroup) -> BigUint {
        self.gl_per_stratum
            .iter()
            .filter(|(label, _)| label.group() == group)
            .map(|(_, count)| count)
            .sum()
    }

    pub fn gl_irr(&self) -> BigUint {
        self.gl_group(StratumGroup::Irr)
    }

    pub fn stratum(&self, label: StratumLabel) -> BigUint {
        self.per_stratum.get(&label).cloned().unwrap_or_default()
    }

    /// Counts only, without timing or thread metadata.
    pub fn same_counts(&self, other: &CountReport) -> bool {
        self.q == other.q
            && self.per_stratum == other.per_stratum
            && self.gl_per_stratum == other.gl_per_stratum
            && self.agl_total == other.agl_total
    }
}

fn pool(threads: Option<usize>) -> rayon::ThreadPool {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t.max(1));
    }
    builder.build().expect("thread pool construction")
}

/// Points of `Rep(AGL1)(F_q)`: over each `t` in `F_q*`, the fiber is the
/// annihilator of `(Phi_n(t^m), Phi_m(t^n))`.
pub fn count_agl1(params: &TorusKnotParams, q: u64) -> Result<CountReport> {
    let start = Instant::now();
    let f = PrimeField::new(q)?;
    let (m, n) = (params.m(), params.n());
    let qq = u128::from(q);
    let mut total: u128 = 0;
    for t in 1..f.order() as u32 {
        let x = f.phi(n, f.pow(t, m.into()));
        let y = f.phi(m, f.pow(t, n.into()));
        total += if x == 0 && y == 0 { qq * qq } else { qq };
    }
    if q <= NAIVE_AGL1_LIMIT {
        assert_eq!(
            total,
            naive_agl1(&f, params),
            "AGL1 fibration count disagrees with the naive count at q = {q}"
        );
    }
    Ok(CountReport {
        q,
        per_stratum: BTreeMap::new(),
        gl_per_stratum: BTreeMap::new(),
        agl_total: BigUint::from(total),
        elapsed: start.elapsed(),
        thread_count: 1,
    })
}

/// Every `(a0, b0, alpha, beta)` with `a0^n = b0^m` and
/// `Phi_n(a0) alpha = Phi_m(b0) beta`.
fn naive_agl1(f: &PrimeField, params: &TorusKnotParams) -> u128 {
    let (m, n) = (params.m(), params.n());
    let q = f.order() as u32;
    let mut count = 0;
    for a0 in 1..q {
        for b0 in 1..q {
            if f.pow(a0, n.into()) != f.pow(b0, m.into()) {
                continue;
            }
            let (x, y) = (f.phi(n, a0), f.phi(m, b0));
            for alpha in 0..q {
                for beta in 0..q {
                    if f.mul(x, alpha) == f.mul(y, beta) {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

/// Precomputed data for one `GL2(F_q)` element.
#[derive(Clone, Copy, Debug)]
struct Entry {
    mat: Mat2,
    phi: Mat2,
}

/// `GL2(F_q)` indexed by `B0^m`, ready to be probed with `A0^n`.
pub struct SolutionIndex {
    params: TorusKnotParams,
    field: PrimeField,
    elements: Vec<Mat2>,
    a_side: Vec<(u64, Mat2)>,
    /// Sorted by key.
    b_keys: Vec<u64>,
    b_entries: Vec<Entry>,
}

impl SolutionIndex {
    pub fn build(params: &TorusKnotParams, q: u64, budget: u128) -> Result<Self> {
        let field = PrimeField::new(q)?;
        let size = field.gl2_order();
        if size > budget {
            return Err(Error::CapExceeded { q, size, budget });
        }
        let (m, n) = (params.m(), params.n());
        let elements = field.gl2_elements();

        let mut b_side: Vec<(u64, Entry)> = elements
            .par_iter()
            .map(|b| {
                let key = field.encode(&field.mat_pow(b, m.into()));
                (
                    key,
                    Entry {
                        mat: *b,
                        phi: field.phi_mat(m, b),
                    },
                )
            })
            .collect();
        b_side.par_sort_unstable_by_key(|(key, entry)| (*key, entry.mat));
        let (b_keys, b_entries) = b_side.into_iter().unzip();

        let a_side = elements
            .par_iter()
            .map(|a| {
                (
                    field.encode(&field.mat_pow(a, n.into())),
                    field.phi_mat(n, a),
                )
            })
            .collect();

        Ok(Self {
            params: *params,
            field,
            elements,
            a_side,
            b_keys,
            b_entries,
        })
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn elements(&self) -> &[Mat2] {
        &self.elements
    }

    fn partners(&self, key: u64) -> &[Entry] {
        let lo = self.b_keys.partition_point(|&k| k < key);
        let hi = self.b_keys.partition_point(|&k| k <= key);
        &self.b_entries[lo..hi]
    }

    /// All `(A0, B0)` with `A0^n = B0^m`, ordered by `A0` then `B0^m`-bucket.
    pub fn pairs(&self) -> impl Iterator<Item = (Mat2, Mat2)> + '_ {
        self.elements
            .iter()
            .zip(&self.a_side)
            .flat_map(move |(a, (key, _))| {
                self.partners(*key).iter().map(move |b| {
                    debug_assert_eq!(
                        self.field.mat_pow(a, self.params.n().into()),
                        self.field.mat_pow(&b.mat, self.params.m().into())
                    );
                    (*a, b.mat)
                })
            })
    }

    fn tally(&self, range: std::ops::Range<usize>) -> Result<Tally> {
        let q = u128::from(self.field.order());
        let weights = [q.pow(4), q.pow(3), q.pow(2)];
        let mut tally = Tally::default();
        for i in range {
            let a = &self.elements[i];
            let (key, phi_a) = &self.a_side[i];
            for b in self.partners(*key) {
                let (label, rank) = classify_with(&self.field, a, phi_a, &b.mat, &b.phi)?;
                let slot = label.index();
                tally.weighted[slot] += weights[rank];
                tally.pairs[slot] += 1;
            }
        }
        Ok(tally)
    }
}

/// Per-chunk accumulator. `u128` cannot overflow within the budget:
/// at most `budget^2` pairs, each weighing at most `q^4`.
#[derive(Clone, Copy, Debug, Default)]
struct Tally {
    weighted: [u128; StratumLabel::ALL.len()],
    pairs: [u128; StratumLabel::ALL.len()],
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        for i in 0..self.weighted.len() {
            self.weighted[i] += other.weighted[i];
            self.pairs[i] += other.pairs[i];
        }
        self
    }
}

/// All `(A0, B0)` in `GL2(F_q)^2` with `A0^n = B0^m`, each exactly once.
pub fn enumerate_gl2_solutions(
    params: &TorusKnotParams,
    q: u64,
    budget: u128,
) -> Result<Vec<(Mat2, Mat2)>> {
    Ok(SolutionIndex::build(params, q, budget)?.pairs().collect())
}

/// Stratum of a solution pair.
///
/// Irreducible pairs are split by the ranks of `Phi_n(A0)` and `Phi_m(B0)`.
/// Reducible pairs are `B` (both scalar), `D` (not commuting), `C` (both with
/// a repeated eigenvalue) or `A` (the rest), then split by the rank of the
/// translation map.
pub fn classify_gl2_pair(
    a0: &Mat2,
    b0: &Mat2,
    params: &TorusKnotParams,
    field: &PrimeField,
) -> Result<StratumLabel> {
    let phi_a = field.phi_mat(params.n(), a0);
    let phi_b = field.phi_mat(params.m(), b0);
    classify_with(field, a0, &phi_a, b0, &phi_b).map(|(label, _)| label)
}

/// Returns the label and the rank of the translation map.
fn classify_with(
    f: &PrimeField,
    a: &Mat2,
    phi_a: &Mat2,
    b: &Mat2,
    phi_b: &Mat2,
) -> Result<(StratumLabel, usize)> {
    use StratumLabel::*;

    let rank = f.rank_2x4(phi_a, phi_b);
    let fail = |reason: String| Error::Classification {
        a0: *a,
        b0: *b,
        reason,
    };
    let label = if f.pair_algebra_rank(a, b) == 4 {
        match (f.rank_2x2(phi_a), f.rank_2x2(phi_b)) {
            (0, 0) => Irr1,
            (0, 1) => Irr2,
            (1, 0) => Irr3,
            (1, 1) => Irr4,
            (2, 2) => Irr5,
            (ra, rb) => {
                return Err(fail(format!(
                    "irreducible pair with Phi ranks ({ra}, {rb})"
                )))
            }
        }
    } else {
        let by_rank = |labels: [Option<StratumLabel>; 3], group: &str| {
            labels[rank].ok_or_else(|| fail(format!("{group} pair with translation rank {rank}")))
        };
        if a.is_scalar() && b.is_scalar() {
            by_rank([Some(B1), None, Some(B2)], "scalar")?
        } else if !f.commutes(a, b) {
            by_rank([Some(D1), Some(D2), Some(D3)], "non-commuting")?
        } else if f.has_repeated_eigenvalue(a) && f.has_repeated_eigenvalue(b) {
            by_rank([None, Some(C1), Some(C2)], "unipotent-type")?
        } else {
            by_rank([Some(A1), Some(A2), Some(A3)], "diagonal")?
        }
    };
    Ok((label, rank))
}

/// Points of `Rep(AGL2)(F_q)` per stratum, with the matching census of
/// `Rep(GL2)(F_q)`. Results do not depend on the thread count.
pub fn count_agl2(params: &TorusKnotParams, q: u64, opts: &CountOptions) -> Result<CountReport> {
    let start = Instant::now();
    let pool = pool(opts.threads);
    let thread_count = pool.current_num_threads();
    let (index, tally) = pool.install(|| -> Result<_> {
        let index = SolutionIndex::build(params, q, opts.budget)?;
        let len = index.elements.len();
        let chunk = (len / (thread_count * 16)).clamp(64, 1 << 16);
        let starts: Vec<usize> = (0..len).step_by(chunk).collect();
        let tally = starts
            .into_par_iter()
            .map(|s| index.tally(s..(s + chunk).min(len)))
            .try_reduce(Tally::default, |x, y| Ok(x.merge(y)))?;
        Ok((index, tally))
    })?;
    drop(index);

    let mut per_stratum = BTreeMap::new();
    let mut gl_per_stratum = BTreeMap::new();
    for label in StratumLabel::ALL {
        let i = label.index();
        per_stratum.insert(label, BigUint::from(tally.weighted[i]));
        gl_per_stratum.insert(label, BigUint::from(tally.pairs[i]));
    }
    let agl_total = per_stratum.values().sum();
    Ok(CountReport {
        q,
        per_stratum,
        gl_per_stratum,
        agl_total,
        elapsed: start.elapsed(),
        thread_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(m: u32, n: u32) -> TorusKnotParams {
        TorusKnotParams::new(m, n).unwrap()
    }

    #[test]
    fn agl1_counts() {
        assert_eq!(
            count_agl1(&params(2, 3), 7).unwrap().agl_total,
            BigUint::from(126u32)
        );
        assert_eq!(
            count_agl1(&params(2, 3), 5).unwrap().agl_total,
            BigUint::from(20u32)
        );
        assert_eq!(
            count_agl1(&params(1, 1), 5).unwrap().agl_total,
            BigUint::from(20u32)
        );
        assert!(matches!(
            count_agl1(&params(2, 3), 9),
            Err(Error::NotPrime(9))
        ));
    }

    #[test]
    fn degenerate_relation_pairs_every_matrix_with_itself() {
        let pairs = enumerate_gl2_solutions(&params(1, 1), 5, DEFAULT_BUDGET).unwrap();
        assert_eq!(pairs.len(), 480);
        assert!(pairs.iter().all(|(a, b)| a == b));
    }

    #[test]
    fn solution_count_small() {
        let pairs = enumerate_gl2_solutions(&params(2, 3), 7, DEFAULT_BUDGET).unwrap();
        assert_eq!(pairs.len(), 18144);
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            enumerate_gl2_solutions(&params(2, 3), 7, 1000),
            Err(Error::CapExceeded {
                q: 7,
                size: 2016,
                budget: 1000
            })
        ));
    }

    #[test]
    fn classification_examples() {
        let p = params(2, 3);
        let f = PrimeField::new(7).unwrap();
        assert_eq!(
            classify_gl2_pair(&Mat2::IDENTITY, &Mat2::IDENTITY, &p, &f).unwrap(),
            StratumLabel::B2
        );
        // Jordan pair (t^m + x N, t^n + y N) with t = 1: 3x = 2y.
        let a = f.mat(1, 0, 2, 1);
        let b = f.mat(1, 0, 3, 1);
        assert_eq!(f.mat_pow(&a, 3), f.mat_pow(&b, 2));
        assert_eq!(classify_gl2_pair(&a, &b, &p, &f).unwrap(), StratumLabel::C2);
        // A0 of order 3 and B0 of order 2 sharing one eigenline.
        let a = f.mat(2, 0, 0, 1);
        let b = f.mat(1, 0, 1, 6);
        assert_eq!(f.mat_pow(&a, 3), f.mat_pow(&b, 2));
        assert!(!f.commutes(&a, &b));
        assert_eq!(
            classify_gl2_pair(&a, &b, &p, &f).unwrap().group(),
            StratumGroup::D
        );
    }

    #[test]
    fn irreducible_example_is_classified() {
        let p = params(2, 3);
        let f = PrimeField::new(7).unwrap();
        // Eigenvalues 2, 4 (cube roots of unity) against an involution.
        let a = f.mat(2, 0, 0, 4);
        let b = f.mat(0, 1, 1, 0);
        assert_eq!(f.mat_pow(&a, 3), f.mat_pow(&b, 2));
        assert_eq!(f.pair_algebra_rank(&a, &b), 4);
        // Phi_3(A0) = 0 and Phi_2(B0) = I + B0 has rank 1.
        assert!(f.phi_mat(3, &a).is_zero());
        assert_eq!(f.rank_2x2(&f.phi_mat(2, &b)), 1);
        assert_eq!(
            classify_gl2_pair(&a, &b, &p, &f).unwrap(),
            StratumLabel::Irr2
        );
    }

    #[test]
    fn agl2_small_counts() {
        let r = count_agl2(&params(1, 2), 7, &CountOptions::default()).unwrap();
        assert_eq!(r.agl_total, BigUint::from(98_784u32));
        let r = count_agl2(&params(2, 3), 7, &CountOptions::with_threads(2)).unwrap();
        assert_eq!(r.gl_irr(), BigUint::from(12096u32));
        assert_eq!(r.gl_total(), BigUint::from(18144u32));
        assert_eq!(r.agl_total, BigUint::from(2_272_032u32));
    }
}
