//! Criterion benchmarks for the tkmotive core crate, which is re-exported here.

pub use tkmotive_core::*;
