//! Motives of `AGL1(C)`- and `AGL2(C)`-representation varieties of torus
//! knots, and an exhaustive `F_q` point-counting oracle to check them.
//!
//! * [`motive`]: integer polynomials in the Lefschetz motive `q` and
//!   `Z2`-equivariant classes.
//! * [`knot`]: per-stratum closed forms and grand totals.
//! * [`field`]: prime fields and 2x2 matrices.
//! * [`count`]: parallel enumeration of `Rep(GL2)(F_q)` and fiber-weighted
//!   counts of `Rep(AGL2)(F_q)`.
//! * [`verify`]: polynomial evaluations against counts.

pub mod count;
pub mod error;
pub mod field;
pub mod knot;
pub mod motive;
pub mod verify;

pub use count::{
    classify_gl2_pair, count_agl1, count_agl2, enumerate_gl2_solutions, CountOptions, CountReport,
};
pub use error::{Error, Result};
pub use field::{is_admissible, is_prime, smallest_admissible_prime, Mat2, PrimeField};
pub use knot::{
    agl1_motive, agl2_breakdown, agl2_closed_form, agl2_closed_form_unchecked, agl2_irr_strata,
    agl2_motive, agl2_red_strata, gl2_breakdown, gl2_irr_motive, gl2_motive, group_motive,
    omega_size, FormulaSet, MotiveGroup, StratumBreakdown, StratumGroup, StratumLabel,
    TorusKnotParams,
};
pub use motive::{EquivariantClass, QPolynomial, RationalScalar};
pub use num_bigint::{BigInt, BigUint};
pub use verify::{
    verify, PrimeChoice, VerificationItem, VerificationReport, VerifyGroup, VerifyOptions,
};
