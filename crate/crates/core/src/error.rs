use num_bigint::BigInt;

/// Errors shared across the crate.
///
/// Most functions that can fail do so for structural reasons (a reducible
/// defining polynomial, a singular curve, a prime of bad reduction) rather
/// than numeric ones; exact arithmetic cannot overflow or lose precision.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero divisor encountered in quotient algebra")]
    ZeroDivisor,
    #[error("defining polynomial is not irreducible over Q")]
    ReduciblePolynomial,
    #[error("number field degree {0} exceeds the supported cap of {1}")]
    DegreeCap(usize, usize),
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("denominator not invertible modulo {0}")]
    BadPrime(BigInt),
    #[error("curve is singular (discriminant zero)")]
    SingularCurve,
    #[error("point does not lie on the curve")]
    OffCurve,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("curve has no rational 2-torsion point")]
    NoTwoTorsion,
    #[error("{0}")]
    Unsupported(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
