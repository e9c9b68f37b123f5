use proptest::prelude::*;
use tkmotive_core::{
    is_admissible, is_prime, smallest_admissible_prime, Mat2, PrimeField, TorusKnotParams,
};

const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

fn field_and_matrix() -> impl Strategy<Value = (PrimeField, Mat2)> {
    prop::sample::select(PRIMES.to_vec()).prop_flat_map(|q| {
        let f = PrimeField::new(q).unwrap();
        let q = q as i64;
        (0..q, 0..q, 0..q, 0..q).prop_map(move |(a, b, c, d)| (f, f.mat(a, b, c, d)))
    })
}

fn invertible(f: &PrimeField) -> impl Strategy<Value = Mat2> {
    let f = *f;
    let q = f.order() as i64;
    (0..q, 0..q, 0..q, 0..q)
        .prop_map(move |(a, b, c, d)| f.mat(a, b, c, d))
        .prop_filter("invertible", move |m| f.is_invertible(m))
}

fn field_and_triple() -> impl Strategy<Value = (PrimeField, Mat2, Mat2, Mat2)> {
    prop::sample::select(PRIMES.to_vec()).prop_flat_map(|q| {
        let f = PrimeField::new(q).unwrap();
        let q = q as i64;
        let any = move || (0..q, 0..q, 0..q, 0..q).prop_map(move |(a, b, c, d)| f.mat(a, b, c, d));
        (Just(f), any(), any(), invertible(&f))
    })
}

proptest! {
    /// `(M - I) Phi_l(M) = M^l - I`.
    #[test]
    fn phi_telescopes((f, m) in field_and_matrix(), l in 1u32..40) {
        let lhs = f.mat_mul(&f.mat_sub(&m, &Mat2::IDENTITY), &f.phi_mat(l, &m));
        let rhs = f.mat_sub(&f.mat_pow(&m, l.into()), &Mat2::IDENTITY);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn scalar_phi_telescopes((f, m) in field_and_matrix(), l in 1u32..40) {
        let x = m.a.into();
        let lhs = f.mul(f.sub(x, 1), f.phi(l, x));
        let rhs = f.sub(f.pow(x, l.into()), 1);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn algebra_rank_is_conjugation_invariant((f, a, b, p) in field_and_triple()) {
        let p_inv = inverse(&f, &p);
        let conj = |x: &Mat2| f.mat_mul(&f.mat_mul(&p, x), &p_inv);
        prop_assert_eq!(f.pair_algebra_rank(&a, &b), f.pair_algebra_rank(&conj(&a), &conj(&b)));
        prop_assert_eq!(f.rank_2x2(&a), f.rank_2x2(&conj(&a)));
        prop_assert_eq!(f.has_repeated_eigenvalue(&a), f.has_repeated_eigenvalue(&conj(&a)));
    }

    /// The translation rank only depends on the row space, which a common
    /// invertible left factor does not change.
    #[test]
    fn block_rank_is_left_invariant((f, a, b, p) in field_and_triple()) {
        prop_assert_eq!(f.rank_2x4(&a, &b), f.rank_2x4(&f.mat_mul(&p, &a), &f.mat_mul(&p, &b)));
        prop_assert!(f.rank_2x4(&a, &b) >= f.rank_2x2(&a).max(f.rank_2x2(&b)));
    }

    #[test]
    fn commuting_pairs_are_reducible((f, a, b, _p) in field_and_triple()) {
        if f.commutes(&a, &b) {
            prop_assert!(f.pair_algebra_rank(&a, &b) < 4);
        }
    }

    #[test]
    fn admissible_primes((m, n) in (1u32..15, 1u32..15)) {
        prop_assume!(num_integer::gcd(m, n) == 1);
        let params = TorusKnotParams::new(m, n).unwrap();
        let q = smallest_admissible_prime(&params, 10_000).unwrap();
        prop_assert!(is_prime(q));
        prop_assert!((q - 1).is_multiple_of(u64::from(m * n)));
        prop_assert!(is_admissible(&params, q));
        for smaller in 2..q {
            prop_assert!(!is_admissible(&params, smaller));
        }
    }
}

fn inverse(f: &PrimeField, m: &Mat2) -> Mat2 {
    let det_inv = f.inv(f.det(m)).unwrap();
    let [a, b, c, d] = m.entries();
    let s = |x: u32| i64::from(f.mul(det_inv, x));
    f.mat(s(d), s(f.neg(b)), s(f.neg(c)), s(a))
}

#[test]
fn gl2_enumeration_size() {
    for q in PRIMES {
        let f = PrimeField::new(q).unwrap();
        let all = f.gl2_elements();
        assert_eq!(all.len() as u128, f.gl2_order());
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn field_errors() {
    assert!(PrimeField::new(20).is_err());
    assert!(PrimeField::new(65_537).is_err());
    assert!(PrimeField::new(65_521).is_ok());
}
