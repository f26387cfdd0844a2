//! Exact computation of Hilbert series and Hilbert coefficients for powers
//! `I^s` of quadratic ideals in polynomial rings.
//!
//! Two engines produce the per-degree dimension data of the Artinian quotient
//! `S_n / I^s`:
//!
//! * [`ideal`] — exact standard-monomial counting for quadratic monomial
//!   ideals that contain all squares of the variables,
//! * [`generic`] — slice-rank computation over a large prime field for ideals
//!   generated by `r` quadratic forms (random "general" forms, or explicit
//!   ones given in text form).
//!
//! On top of those sit [`fit`] (exact extraction of Hilbert coefficients from
//! length samples), [`formulas`] (closed-form evaluators for the known and
//! conjectured series), and [`verify`] (a registry of checks that compare the
//! engines against the closed forms and emit machine-readable reports).
//!
//! Everything is exact: lengths and dimensions are arbitrary-precision
//! integers, coefficient fits are solved over the rationals, and the only
//! randomness (coefficients of "general" forms) is reproducible from an
//! explicit seed. No floating point is used anywhere.

pub mod combinatorics;
pub mod fit;
pub mod formulas;
pub mod generic;
pub mod hilbert;
pub mod ideal;
pub mod modp;
pub mod monomial;
pub mod parse;
pub mod verify;

use thiserror::Error;

/// Errors shared by the engine and fitting modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable index {index} out of range 1..={n}")]
    VariableOutOfRange { index: usize, n: usize },
    #[error("monomial rank {rank} out of range; degree {degree} in {n} variables has {count} monomials")]
    RankOutOfRange {
        n: usize,
        degree: u32,
        rank: usize,
        count: usize,
    },
    #[error("ideal must contain the squares of all {n} variables (x{missing}^2 is missing)")]
    MissingSquare { n: usize, missing: usize },
    #[error("need at least {needed} consecutive samples, got {got}")]
    NotEnoughSamples { needed: usize, got: usize },
    #[error("sample indices must be consecutive integers; gap after s = {after}")]
    NonConsecutiveSamples { after: u64 },
    #[error("fit window produced a non-integral coefficient e_{index} = {value}")]
    NonIntegralFit { index: usize, value: String },
    #[error("no window of samples extends consistently: fitted tail disagrees at s = {s} (sample {sample}, fitted {fitted})")]
    NonPolynomialTail { s: u64, sample: String, fitted: String },
    #[error("degenerate sample set (all lengths zero)")]
    DegenerateSamples,
    #[error("{r} generators in {n} variables cannot give an Artinian quotient; need r >= n")]
    TooFewGenerators { r: usize, n: usize },
    #[error("modulus {p} is too small; need a prime >= {min}")]
    ModulusTooSmall { p: u64, min: u64 },
    #[error("modulus {p} is not prime")]
    ModulusNotPrime { p: u64 },
    #[error("form has {got} coefficients, expected {expected} for {n} variables")]
    BadFormLength { n: usize, expected: usize, got: usize },
    #[error("syntax error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
}

pub type Result<T> = std::result::Result<T, Error>;
