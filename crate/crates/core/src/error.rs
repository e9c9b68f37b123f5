use thiserror::Error;

use crate::field::Mat2;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid torus knot parameters ({m},{n}): {reason}")]
    InvalidParams { m: u32, n: u32, reason: String },

    #[error("closed form requires m, n >= 2; got ({m},{n})")]
    UnsupportedRange { m: u32, n: u32 },

    #[error("scaling by {scalar} leaves a non-integral coefficient in {poly}")]
    NonIntegralScale { scalar: String, poly: String },

    #[error("consistency check `{check}` failed for ({m},{n}): {left} != {right}")]
    Consistency {
        check: &'static str,
        m: u32,
        n: u32,
        left: String,
        right: String,
    },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("no prime q <= {cap} with q = 1 (mod {modulus})")]
    NoAdmissiblePrime { modulus: u64, cap: u64 },

    #[error("|GL2(F_{q})| = {size} exceeds the enumeration budget of {budget} matrices")]
    CapExceeded { q: u64, size: u128, budget: u128 },

    #[error("field size {0} exceeds the supported maximum of 65536")]
    FieldTooLarge(u64),

    #[error("cannot classify pair A0={a0:?}, B0={b0:?}: {reason}")]
    Classification { a0: Mat2, b0: Mat2, reason: String },

    #[error("malformed polynomial encoding: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
