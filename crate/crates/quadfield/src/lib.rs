//! Arithmetic in the prime field `F_p` and its quadratic extension
//! `F_p(√n)`, where `n` is a quadratic nonresidue mod `p`.
//!
//! The crate is organized around the norm map `N(a + b√n) = a² − nb²`,
//! which is a surjective group homomorphism `F_{p²}* → F_p*` with kernel
//! of size `p + 1`. Its companion map `f(u) = u²/N(u)` lands in that
//! kernel, and together they decide whether `u` generates `F_{p²}*`:
//! `u` is a generator exactly when `N(u)` generates `F_p*` and `f(u)`
//! generates the kernel of `N`. The [`generators`] module implements
//! that criterion, an independent brute-force oracle, and an exhaustive
//! cross-verification harness.
//!
//! Supported range: `p` must be an odd prime below 2³¹ so that
//! `p² − 1` and every intermediate product fit comfortably in `u64`
//! arithmetic (multiplications widen through `u128`).

mod arith;
pub mod error;
pub mod factor;
pub mod generators;
pub mod modular;
pub mod quadext;

pub use error::Error;
pub use factor::{factorize, multiplicative_order, Factorization};
pub use generators::{
    benchmark_classification, brute_force_order, classify, enumerate_generators, find_generator,
    verify_classification, BenchmarkSummary, ClassificationResult, Mismatch, VerificationReport,
};
pub use modular::{
    is_prime, is_primitive_root, is_quadratic_nonresidue, legendre_symbol, quadratic_residues,
    smallest_nonresidue, FpElement,
};
pub use quadext::{FieldContext, Fp2Element};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
