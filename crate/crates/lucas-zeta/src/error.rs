//! Error types shared by every module of the crate.

use num_complex::Complex64;
use std::fmt;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Which clause of the parameter assumption a candidate (P, Q) violates.
///
/// The admissible domain is P > 0, Q != 0, and Q <= P - 1 (strict when
/// 0 < P <= 2). It guarantees real roots a > 1 > |b| > 0 of
/// x^2 - P x + Q, so U_n grows like a^n and every series in the crate
/// converges where documented.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamViolation {
    /// P <= 0.
    NonPositiveP,
    /// Q == 0 (degenerate; see the dedicated Q = 0 geometric suite).
    ZeroQ,
    /// P > 2 but Q > P - 1.
    QAbovePMinusOne,
    /// 0 < P <= 2 and Q >= P - 1 (equality not allowed in this range).
    QAbovePMinusOneStrict,
}

impl fmt::Display for ParamViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamViolation::NonPositiveP => write!(f, "requires P > 0"),
            ParamViolation::ZeroQ => write!(f, "requires Q != 0 (use the Q = 0 geometric suite)"),
            ParamViolation::QAbovePMinusOne => write!(f, "requires Q <= P - 1 when P > 2"),
            ParamViolation::QAbovePMinusOneStrict => {
                write!(f, "requires Q < P - 1 when 0 < P <= 2")
            }
        }
    }
}

/// All failure modes surfaced by the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input outside a function's mathematical domain.
    Domain(String),
    /// (P, Q) outside the admissible parameter region.
    InvalidParams(ParamViolation),
    /// Evaluation point closer than the configured guard distance to a pole.
    NearPole { s: Complex64, distance: f64 },
    /// Gamma or digamma requested at a non-positive integer.
    GammaPole { s: Complex64 },
    /// A series or iteration hit its cap before reaching tolerance.
    NonConvergence { context: &'static str },
    /// Adaptive quadrature could not certify the requested tolerance.
    QuadratureTolerance { requested: f64, achieved: f64 },
    /// Sequence index beyond the f64 overflow horizon.
    Overflow { n: u32, limit: u32 },
    /// Log-log slope fit impossible (a difference underflowed to zero).
    DegenerateFit,
    /// Lattice index pair outside the admissible index set.
    IndexNotAdmissible { k: u32, n: i64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::InvalidParams(v) => write!(f, "invalid Lucas parameters: {v}"),
            Error::NearPole { s, distance } => {
                write!(f, "evaluation point {s} is within {distance:.3e} of a pole")
            }
            Error::GammaPole { s } => write!(f, "gamma pole at {s}"),
            Error::NonConvergence { context } => write!(f, "no convergence: {context}"),
            Error::QuadratureTolerance {
                requested,
                achieved,
            } => write!(
                f,
                "quadrature tolerance not met: requested {requested:.3e}, achieved {achieved:.3e}"
            ),
            Error::Overflow { n, limit } => {
                write!(f, "sequence index {n} beyond f64 overflow horizon {limit}")
            }
            Error::DegenerateFit => write!(f, "degenerate slope fit: a difference underflowed"),
            Error::IndexNotAdmissible { k, n } => {
                write!(
                    f,
                    "index n = {n} is excluded from the admissible set for k = {k}"
                )
            }
        }
    }
}

impl std::error::Error for Error {}
