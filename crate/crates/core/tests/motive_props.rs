use num_bigint::BigInt;
use proptest::prelude::*;
use tkmotive_core::{EquivariantClass, Error, QPolynomial, RationalScalar};

fn poly() -> impl Strategy<Value = QPolynomial> {
    prop::collection::vec(-1000i64..1000, 0..8).prop_map(|c| QPolynomial::from_i64s(&c))
}

fn class() -> impl Strategy<Value = EquivariantClass> {
    (poly(), poly()).prop_map(|(plus, minus)| EquivariantClass { plus, minus })
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, QPolynomial::zero());
        prop_assert_eq!(&a * &QPolynomial::one(), a.clone());
        prop_assert_eq!(-(-a.clone()), a);
    }

    #[test]
    fn eval_is_a_ring_homomorphism(a in poly(), b in poly(), x in -50i64..50) {
        let x = BigInt::from(x);
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
    }

    #[test]
    fn degree_of_product(a in poly(), b in poly()) {
        let prod = &a * &b;
        match (a.degree(), b.degree()) {
            (Some(da), Some(db)) => prop_assert_eq!(prod.degree(), Some(da + db)),
            _ => prop_assert!(prod.is_zero()),
        }
    }

    #[test]
    fn canonical_form_has_no_trailing_zero(a in poly(), b in poly()) {
        let s = &a - &b;
        if let Some(lc) = s.leading_coefficient() {
            prop_assert_ne!(lc, &BigInt::from(0));
        }
    }

    #[test]
    fn json_round_trip(a in poly()) {
        prop_assert_eq!(QPolynomial::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn scaling_by_integral_rational_is_exact(a in poly(), k in -20i64..20, d in 1i64..12) {
        let scaled = a.scale_int(d);
        let s = RationalScalar::new(k, d);
        prop_assert_eq!(scaled.scale(&s).unwrap(), a.scale_int(k));
    }

    #[test]
    fn equivariant_totals_multiply(x in class(), y in class()) {
        prop_assert_eq!(x.product(&y).total(), x.total() * y.total());
    }
}

#[test]
fn non_integral_scaling_is_an_error() {
    let p = QPolynomial::from_i64s(&[1, 1]);
    let err = p.scale(&RationalScalar::new(1, 2)).unwrap_err();
    assert!(matches!(err, Error::NonIntegralScale { .. }));
    let half = RationalScalar::new(2, 4);
    assert_eq!(
        QPolynomial::from_i64s(&[2, 4]).scale(&half).unwrap(),
        QPolynomial::from_i64s(&[1, 2])
    );
}

#[test]
fn renderings() {
    let p = QPolynomial::from_i64s(&[0, -3, 3]);
    assert_eq!(p.to_string(), "3*q^2 - 3*q");
    assert_eq!(p.to_latex(), "3q^{2} - 3q");
    assert_eq!(p.to_semicolon_list(), "0;-3;3");
    assert_eq!(QPolynomial::zero().to_string(), "0");
    assert_eq!(
        QPolynomial::from_i64s(&[-1, 0, 0, -1]).to_string(),
        "-q^3 - 1"
    );
}

#[test]
fn equivariant_constants() {
    let q = QPolynomial::q();
    let torus = EquivariantClass::torus_off_diagonal();
    assert_eq!(torus.plus, (&q - 1) * (&q - 1));
    assert_eq!(torus.minus, 1 - &q);
    assert_eq!(torus.total(), (&q - 1) * (&q - 2));
    let quotient = EquivariantClass::gl2_mod_torus();
    assert_eq!(quotient.plus, &q * &q);
    assert_eq!(quotient.minus, q.clone());
    // Product of the two gives the class of (C*)^2 - diagonal, quotiented.
    assert_eq!(
        torus.product(&quotient).total(),
        &q * (&q + 1) * (&q - 1) * (&q - 2)
    );
}
