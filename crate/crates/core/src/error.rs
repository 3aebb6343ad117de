//! Crate-wide error type. Every variant names the violated precondition.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("input must satisfy D < 0 and D = 0, 1 mod 4; got D = {0}")]
    NotADiscriminant(i64),

    #[error("matrix is not positive definite: (u, v, w) = ({u}, {v}, {w})")]
    NotPositiveDefinite { u: i64, v: i64, w: i64 },

    #[error("d = {d} is not in the divisor set S_T (requires d | c(T), gcd(d, Np) = 1, -D_T/d^2 = 0, 1 mod 4)")]
    NotInDivisorSet { d: i64 },

    #[error("discriminant {delta} must be positive, nonsquare and coprime to the level {level}")]
    InvalidHeegnerDiscriminant { delta: i64, level: u64 },

    #[error("no delta with delta^2 = {delta} mod 4N exists for N = {level}; the Heegner hypothesis fails")]
    NoSquareRootMod4N { delta: i64, level: u64 },

    #[error("form is not a Heegner form for this structure (requires N | A, B = delta mod N, primitive, matching discriminant)")]
    NotAHeegnerForm,

    #[error("form action requires det = 1; got {0}")]
    NotUnimodular(String),

    #[error("leading coefficient A must be nonzero")]
    ZeroLeadingCoefficient,

    #[error("genus character undefined: {0} is not a fundamental discriminant dividing the form discriminant compatibly")]
    InvalidGenusSplitting(i64),

    #[error("no represented value coprime to {d} found within the search bound; refusing to guess")]
    NoCoprimeRepresentedValue { d: i64 },

    #[error("level {level} exceeds the configured bound {bound}")]
    LevelBound { level: u64, bound: u64 },

    #[error("no rational newform eigenline at level {level} matches the selector")]
    NoRationalEigenline { level: u64 },

    #[error("newform selector is ambiguous at level {level}: {count} rational eigenlines found")]
    AmbiguousEigenline { level: u64, count: usize },

    #[error("{0} must be coprime to the level")]
    NotCoprimeToLevel(i64),

    #[error("Atkin-Lehner sign requires a prime exactly dividing the level; got {ell} at level {level}")]
    BadAtkinLehnerPrime { ell: u64, level: u64 },

    #[error("discriminant {0} is not of type II")]
    NotTypeII(i64),

    #[error("discriminant {0} is not fundamental")]
    NotFundamental(i64),

    #[error("missing coefficient data: {0}")]
    MissingCoefficient(String),

    #[error("weight {k} is invalid: {reason}")]
    BadWeight { k: i64, reason: String },

    #[error("denominator vanishes: {0}")]
    VanishingDenominator(String),

    #[error("p-adic operation error: {0}")]
    Padic(String),

    #[error("catastrophic p-adic precision loss: {0}")]
    PrecisionExhausted(String),

    #[error("duplicate sample weight k = {0} in series")]
    DuplicateSampleWeight(i64),

    #[error("series needs at least {need} samples, got {got}")]
    NotEnoughSamples { need: usize, got: usize },

    #[error("sample nodes of the two series do not match")]
    NodeMismatch,

    #[error("malformed input file: {0}")]
    Parse(String),

    #[error("gauge mismatch in cached table: cache has {cache}, current computation has {current}")]
    GaugeMismatch { cache: String, current: String },

    #[error("no anchor discriminant with nonvanishing twisted central value found below {bound}")]
    NoAnchor { bound: i64 },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
