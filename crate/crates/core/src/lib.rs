//! Exact exponential sums, certified root isolation, free-generator
//! certificates and explicit witness functions.
//!
//! An exponential sum `Σ a_i exp(β_i t)` has rational coefficients and
//! exponents written exactly over a basis of ℚ-independent reals, so the
//! zero test is structural. Real evaluation goes through outward-rounded
//! interval arithmetic.

pub mod basis;
pub mod expsum;
pub mod freealg;
pub mod interval;
pub mod props;
pub mod rootiso;
pub mod witnesses;

pub use basis::{Basis, BasisError, BasisSymbol};
pub use expsum::{ExpSum, ExpSumError, ExponentVector, Term};
pub use freealg::{
    certify_free_combination, check_q_independence, compose_with_witness, induce, FreeAlgError,
    FreeCertificate, GeneratorSet, PolynomialNC,
};
pub use interval::{Interval, DEFAULT_PRECISION};
pub use rootiso::{
    isolate_roots, monotone_decomposition, preimage_count, tail_radius, Direction, IsolationConfig,
    MonotonePiece, NumericExpSum, RootCertificate, RootError,
};
pub use witnesses::{RealFunction, Value, WitnessError, WitnessHandle};

/// Re-exported so downstream crates share the same arbitrary-precision types.
pub use rug;
