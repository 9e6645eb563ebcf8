use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{name} must be finite and strictly positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    #[error("{name} must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },

    #[error("strong-user SNR {s1} is below weak-user SNR {s2}; use SnrPair::ordered to sort")]
    Unordered { s1: f64, s2: f64 },

    #[error("{name} = {value} is outside [0, 1]")]
    KnobOutOfRange { name: &'static str, value: f64 },

    #[error("rate {rate} bits/use is outside the feasible interval [{min}, {max}]")]
    RateOutOfRange { rate: f64, min: f64, max: f64 },

    #[error("rate shift {delta} bits/use is outside the feasible interval (0, {max}]")]
    ShiftOutOfRange { delta: f64, max: f64 },

    #[error(
        "finite gain is 0/0 at the sum-rate corner r1 = {corner}; use relative_gain for the limit"
    )]
    IndeterminateAtCorner { corner: f64 },

    #[error("high-SNR approximation needs s2 > 1, got s2 = {s2}")]
    HighSnrDomain { s2: f64 },

    #[error("finite-difference step h = {h} must lie in (0, 0.01)")]
    StepOutOfRange { h: f64 },

    #[error("finite difference degenerate: |dR1| = {delta_r1:e} is below 1e-15")]
    DegenerateDifference { delta_r1: f64 },

    #[error("{name} must be at least {min}, got {value}")]
    TooFew {
        name: &'static str,
        value: usize,
        min: usize,
    },

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),
}
