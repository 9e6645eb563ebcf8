//! Two-user downlink broadcast channel: superposition coding (NOMA) versus
//! time sharing (OMA).
//!
//! The crate computes both achievable rate regions, the corner slopes at the
//! sum-rate optimal point, the relative gain of NOMA with its bounds and
//! regime approximations, the finite rate-shift study, and numerical oracles
//! that check the closed forms independently.
//!
//! ```
//! use noma_core::{gain_report, SnrPair};
//!
//! let pair = SnrPair::from_linear(20.0, 1.0).unwrap();
//! let report = gain_report(&pair);
//! assert!((report.gain - 2.306).abs() < 1e-3);
//! ```

pub mod allocation;
pub mod error;
pub mod export;
pub mod gain;
pub mod oracle;
pub mod region;
pub mod snr;

pub use allocation::{
    corner_rate, finite_gain, noma_split_for_rate1, oma_share_for_rate1, rate_shift_study,
    ShiftReport,
};
pub use error::{Error, Result};
pub use gain::{
    classify_regime, classify_regime_with, gain_bound, gain_bound_log, gain_bound_ratio,
    gain_report, gain_report_with, high_snr_approx, mixed_regime_approx, relative_gain,
    rule_of_thumb, slope_noma, slope_oma, GainReport, Regime, RegimeThresholds,
};
pub use oracle::{
    region_dominance_check, sinr_monte_carlo, slope_fd, DominanceReport, LinkConfig, SinrEstimate,
};
pub use region::{
    noma_frontier, noma_rates, oma_frontier, oma_rates, FrontierSample, Knob, PowerSplit, RatePair,
    Scheme, TimeShare,
};
pub use snr::{db_to_linear, linear_to_db, snr_from_link, Snr, SnrPair};
