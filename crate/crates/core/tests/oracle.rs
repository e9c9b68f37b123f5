use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use tkmotive_core::knot::gl2_class;
use tkmotive_core::{
    classify_gl2_pair, count_agl1, count_agl2, enumerate_gl2_solutions, group_motive, CountOptions,
    Error, FormulaSet, Mat2, MotiveGroup, PrimeField, StratumGroup, StratumLabel, TorusKnotParams,
};

const BUDGET: u128 = 5_000_000;

fn params(m: u32, n: u32) -> TorusKnotParams {
    TorusKnotParams::new(m, n).unwrap()
}

fn eval(p: &TorusKnotParams, group: MotiveGroup, set: FormulaSet, q: u64) -> BigInt {
    group_motive(p, group, set).unwrap().eval_u64(q)
}

#[test]
fn index_enumeration_matches_naive_double_loop() {
    for q in [2, 3, 5, 7] {
        let f = PrimeField::new(q).unwrap();
        let all = f.gl2_elements();
        for (m, n) in [(1, 1), (1, 2), (2, 3), (3, 4), (2, 5), (3, 5)] {
            let p = params(m, n);
            let a_pow: Vec<Mat2> = all.iter().map(|a| f.mat_pow(a, n.into())).collect();
            let b_pow: Vec<Mat2> = all.iter().map(|b| f.mat_pow(b, m.into())).collect();
            let mut naive = Vec::new();
            for (a, an) in all.iter().zip(&a_pow) {
                for (b, bm) in all.iter().zip(&b_pow) {
                    if an == bm {
                        naive.push((*a, *b));
                    }
                }
            }
            let mut fast = enumerate_gl2_solutions(&p, q, BUDGET).unwrap();
            fast.sort();
            naive.sort();
            assert_eq!(fast, naive, "{p} over F_{q}");
        }
    }
}

#[test]
fn trivial_relation_gives_the_diagonal() {
    let f = PrimeField::new(5).unwrap();
    let pairs = enumerate_gl2_solutions(&params(1, 1), 5, BUDGET).unwrap();
    assert_eq!(pairs.len() as u128, f.gl2_order());
    assert!(pairs.iter().all(|(a, b)| a == b));
}

/// Translation part of `(A, alpha)^k` for the affine map `x -> A x + alpha`.
fn affine_translation(f: &PrimeField, a: &Mat2, alpha: [u32; 2], k: u32) -> [u32; 2] {
    let mut t = [0, 0];
    for _ in 0..k {
        let [a11, a12, a21, a22] = a.entries();
        t = [
            f.add(f.add(f.mul(a11, t[0]), f.mul(a12, t[1])), alpha[0]),
            f.add(f.add(f.mul(a21, t[0]), f.mul(a22, t[1])), alpha[1]),
        ];
    }
    t
}

/// Counts `(alpha, beta)` with `(A, alpha)^n = (B, beta)^m` by composing the
/// affine maps directly, then compares with the rank formula.
#[test]
fn fiber_weight_law_on_a_sample() {
    let q = 7u64;
    let f = PrimeField::new(q).unwrap();
    let vectors: Vec<[u32; 2]> = (0..q as u32)
        .flat_map(|x| (0..q as u32).map(move |y| [x, y]))
        .collect();
    let mut rng = StdRng::seed_from_u64(0x7013);
    let mut checked = 0;
    for (m, n) in [(2, 3), (3, 4), (2, 5)] {
        let p = params(m, n);
        let mut pairs = enumerate_gl2_solutions(&p, q, BUDGET).unwrap();
        pairs.shuffle(&mut rng);
        for (a, b) in pairs.into_iter().take(334) {
            let left: Vec<[u32; 2]> = vectors
                .iter()
                .map(|v| affine_translation(&f, &a, *v, n))
                .collect();
            let right: Vec<[u32; 2]> = vectors
                .iter()
                .map(|v| affine_translation(&f, &b, *v, m))
                .collect();
            let naive = left
                .iter()
                .map(|l| right.iter().filter(|r| *r == l).count() as u64)
                .sum::<u64>();
            let rank = f.rank_2x4(&f.phi_mat(n, &a), &f.phi_mat(m, &b));
            assert_eq!(naive, q.pow(4 - rank as u32), "{p}: {a:?} {b:?}");
            classify_gl2_pair(&a, &b, &p, &f).unwrap();
            checked += 1;
        }
    }
    assert!(checked >= 1000);
}

#[test]
fn agl1_counts() {
    let p = params(2, 3);
    assert_eq!(count_agl1(&p, 7).unwrap().agl_total, 126u32.into());
    assert_eq!(count_agl1(&p, 5).unwrap().agl_total, 20u32.into());
    assert_eq!(
        count_agl1(&params(1, 1), 5).unwrap().agl_total,
        20u32.into()
    );
    assert!(matches!(count_agl1(&p, 9), Err(Error::NotPrime(9))));
}

#[test]
fn counts_do_not_depend_on_thread_count() {
    let max = std::thread::available_parallelism().map_or(4, |n| n.get());
    for (m, n, q) in [(2, 3, 7), (2, 5, 11), (3, 4, 7)] {
        let p = params(m, n);
        let reports: Vec<_> = [1, 2, max]
            .into_iter()
            .map(|t| count_agl2(&p, q, &CountOptions::with_threads(t)).unwrap())
            .collect();
        assert_eq!(reports[0].thread_count, 1);
        for r in &reports[1..] {
            assert!(reports[0].same_counts(r), "{p} over F_{q}");
        }
    }
}

#[test]
fn report_partitions_are_consistent() {
    let p = params(2, 3);
    let r = count_agl2(&p, 7, &CountOptions::default()).unwrap();
    let strata: num_bigint::BigUint = StratumLabel::ALL.iter().map(|l| r.stratum(*l)).sum();
    assert_eq!(strata, r.agl_total);
    let groups: num_bigint::BigUint = StratumGroup::ALL.iter().map(|g| r.gl_group(*g)).sum();
    assert_eq!(groups, r.gl_total());
    assert_eq!(r.gl_irr(), 12096u32.into());
    assert_eq!(r.gl_total(), 18144u32.into());
    assert_eq!(r.agl_total, 2_272_032u32.into());
}

#[test]
fn degenerate_knot_counts_the_whole_group() {
    let r = count_agl2(&params(1, 2), 7, &CountOptions::default()).unwrap();
    assert_eq!(r.agl_total, 98_784u32.into());
    assert_eq!(
        BigInt::from(r.agl_total.clone()),
        gl2_class().eval_u64(7) * 49
    );
}

#[test]
fn budget_is_enforced() {
    let opts = CountOptions {
        threads: Some(1),
        budget: 1000,
    };
    assert!(matches!(
        count_agl2(&params(2, 3), 7, &opts),
        Err(Error::CapExceeded { .. })
    ));
}

/// At admissible primes every count equals the corrected polynomials, while
/// the published GL2/AGL2 totals fall short.
#[test]
fn admissible_prime_equality() {
    for (m, n, q) in [(2, 3, 7), (2, 5, 11), (3, 4, 13), (2, 7, 29), (3, 5, 31)] {
        let p = params(m, n);
        assert_eq!(q % u64::from(m * n), 1);
        let agl1 = count_agl1(&p, q).unwrap();
        for set in [FormulaSet::Published, FormulaSet::Corrected] {
            assert_eq!(
                BigInt::from(agl1.agl_total.clone()),
                eval(&p, MotiveGroup::Agl1, set, q)
            );
        }

        let r = count_agl2(&p, q, &CountOptions::default()).unwrap();
        let gl = BigInt::from(r.gl_total());
        let agl = BigInt::from(r.agl_total.clone());
        let irr = BigInt::from(r.gl_irr());
        let c = FormulaSet::Corrected;
        assert_eq!(gl, eval(&p, MotiveGroup::Gl2, c, q), "{p} gl2");
        assert_eq!(agl, eval(&p, MotiveGroup::Agl2, c, q), "{p} agl2");
        assert_eq!(
            irr,
            eval(&p, MotiveGroup::Gl2Irr, FormulaSet::Published, q),
            "{p} gl2-irr"
        );

        let breakdown = tkmotive_core::agl2_breakdown(&p, c).unwrap();
        for label in StratumLabel::ALL {
            let expected = breakdown
                .get(label)
                .cloned()
                .unwrap_or_default()
                .eval_u64(q);
            assert_eq!(BigInt::from(r.stratum(label)), expected, "{p} {label}");
        }

        assert_ne!(
            gl,
            eval(&p, MotiveGroup::Gl2, FormulaSet::Published, q),
            "{p}"
        );
        assert_ne!(
            agl,
            eval(&p, MotiveGroup::Agl2, FormulaSet::Published, q),
            "{p}"
        );
    }
}
