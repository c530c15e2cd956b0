use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Power-series division or expansion needs a nonzero constant term.
    #[error("constant term of the denominator is zero")]
    ZeroConstantDenominator,

    /// A rational function was evaluated at a root of its denominator.
    #[error("denominator vanishes at the evaluation point")]
    DenominatorVanishes,

    /// The argument must be p^r with p prime.
    #[error("{0} is not a prime power")]
    NotAPrimePower(u64),

    /// The requested case has no closed form here (e.g. Q_2 via the
    /// prime-power formula; use the dedicated floor formula instead).
    #[error("unsupported case: {0}")]
    UnsupportedCase(String),

    /// The evaluation point does not satisfy the required domain predicate.
    /// The payload is the exact predicate that failed.
    #[error("domain violation: {0}")]
    DomainError(String),

    /// The geometric tail estimate does not apply at this truncation depth.
    #[error("tail bound diverges: x^(N+1)/(1-x) >= 1")]
    TailDiverges,

    /// The family is not defined at this index. B_k in particular needs
    /// closed-form generating functions for all Q_j with j < k; none is
    /// known for j = 6, so k > 6 is refused rather than approximated.
    #[error("the requested family is not defined at k = {0}")]
    UnsupportedK(u64),

    /// The low-order coefficients that must vanish during bound assembly
    /// did not; this indicates an implementation bug, not a valid state.
    #[error("cancellation failure: x^{0} coefficient survived in the numerator")]
    CancellationFailure(usize),

    /// Malformed textual input (rationals, subsets, flags).
    #[error("parse error: {0}")]
    ParseError(String),

    /// A closed-form value disagreed with the brute-force histogram.
    #[error("closed form disagrees with brute force at n={n}, k={k}")]
    ClosedFormMismatch { n: u64, k: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
