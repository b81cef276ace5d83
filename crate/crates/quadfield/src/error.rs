//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The modulus is not an odd prime (2 is rejected everywhere).
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    /// The modulus exceeds the supported range.
    #[error("modulus {0} exceeds the supported maximum {max}", max = crate::quadext::MAX_MODULUS)]
    ModulusTooLarge(u64),

    /// The value reduces to zero mod p where a unit is required.
    #[error("{value} is divisible by the modulus {modulus}")]
    DividesModulus { value: i64, modulus: u64 },

    /// A quadratic nonresidue was required.
    #[error("{value} is a quadratic residue mod {modulus}")]
    QuadraticResidue { value: u64, modulus: u64 },

    /// Zero has no multiplicative inverse.
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    /// The operation is only defined on nonzero elements.
    #[error("operation requires a nonzero element")]
    ZeroElement,

    /// Two elements belong to different field contexts.
    #[error("elements belong to different field contexts")]
    ContextMismatch,

    /// The element does not lie in a group of the claimed order.
    #[error("element does not lie in a group of order {group_order}")]
    NotInGroup { group_order: u64 },

    /// A hand-built factorization violates its invariants.
    #[error("invalid factorization: {0}")]
    InvalidFactorization(&'static str),
}
