use num_bigint::BigInt;
use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A value expected to lie in `Q` still carries a `√14` component, or a
    /// value expected to be an integer has a nontrivial denominator. Either
    /// way a closed-form transcription is wrong somewhere upstream.
    #[error("not a rational integer: {0}")]
    NotRational(String),

    /// Division by zero in exact arithmetic.
    #[error("division by zero")]
    DivisionByZero,

    /// The chain index must be at least 1.
    #[error("chain index must be >= 1, got {0}")]
    InvalidN(i64),

    /// Two matrices that must share an order do not.
    #[error("matrix order mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    /// `P_L != P_{L_A} * P_{L_S}`; carries the first differing coefficient.
    #[error("factorization mismatch at coefficient {index}: {lhs} vs {rhs}")]
    FactorizationMismatch {
        index: usize,
        lhs: BigInt,
        rhs: BigInt,
    },

    /// A quantity that must be an integer is not.
    #[error("expected an integer: {0}")]
    NonInteger(String),

    /// Convolution and closed form of a partial sum `D_j` disagree.
    #[error("partial sum D{which} mismatch: convolution {convolution}, closed form {closed}")]
    PartialSumMismatch {
        which: u8,
        convolution: BigInt,
        closed: String,
    },

    /// Two routes to the same coefficient disagree.
    #[error("coefficient mismatch for {what}: {lhs} vs {rhs}")]
    CoefficientMismatch {
        what: String,
        lhs: BigInt,
        rhs: BigInt,
    },

    /// An exact linear system that must be regular turned out singular.
    #[error("singular system while {0}")]
    SingularSystem(String),

    /// The iterative eigenvalue computation did not converge.
    #[error("eigenvalue iteration failed to converge for order {0}")]
    ConvergenceFailure(usize),

    /// Unknown object name passed to the dump interface.
    #[error("unknown dump object: {0}")]
    UnknownObject(String),
}

pub type Result<T> = std::result::Result<T, Error>;
