//! Slopes of the two region boundaries at the sum-rate corner
//! `(log2(1 + S1), 0)`, the relative gain of NOMA over OMA, its upper bounds
//! and the asymptotic approximations for each SNR regime.
//!
//! All approximations are computed unconditionally; use [`classify_regime`]
//! to decide which one is meaningful for a given pair.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::region::log2_1p;
use crate::snr::{Snr, SnrPair};

/// `-dR2/dR1` of the time-sharing segment: `log2(1 + S2) / log2(1 + S1)`.
pub fn slope_oma(pair: &SnrPair) -> f64 {
    log2_1p(pair.s2()) / log2_1p(pair.s1())
}

/// `-dR2/dR1` of the superposition-coding boundary at `a = 1`:
/// `(S2 / S1) (1 + S1) / (1 + S2)`.
pub fn slope_noma(pair: &SnrPair) -> f64 {
    let (s1, s2) = (pair.s1(), pair.s2());
    (s2 / s1) * (1.0 + s1) / (1.0 + s2)
}

/// Ratio of the two corner slopes. This is the limiting ratio of weak-user
/// rates for a common strong-user rate approaching the corner.
pub fn relative_gain(pair: &SnrPair) -> f64 {
    slope_noma(pair) / slope_oma(pair)
}

/// Upper bound from `log2(1 + x) >= log2(e) x / (1 + x)` applied to the weak
/// user: `ln(1 + S1) (1 + S1) / S1`. Independent of `S2`.
pub fn gain_bound_log(pair: &SnrPair) -> f64 {
    let s1 = pair.s1();
    log2_1p(s1) / std::f64::consts::LOG2_E * (1.0 + s1) / s1
}

/// Upper bound from `slope_noma <= 1`: `log2(1 + S1) / log2(1 + S2)`.
pub fn gain_bound_ratio(pair: &SnrPair) -> f64 {
    log2_1p(pair.s1()) / log2_1p(pair.s2())
}

pub fn gain_bound(pair: &SnrPair) -> f64 {
    gain_bound_log(pair).min(gain_bound_ratio(pair))
}

/// `S1 >> 1`, `S2 << 1`: `log2(S1) / log2(e) = ln(S1)`. Not positive for `S1 <= 1`.
pub fn mixed_regime_approx(pair: &SnrPair) -> f64 {
    pair.s1().log2() / std::f64::consts::LOG2_E
}

/// Both users at high SNR: `log2(S1) / log2(S2)`. Requires `S2 > 1`.
pub fn high_snr_approx(pair: &SnrPair) -> Result<f64> {
    let s2 = pair.s2();
    if s2 <= 1.0 {
        return Err(Error::HighSnrDomain { s2 });
    }
    Ok(pair.s1().log2() / s2.log2())
}

/// Large-`S1` rule of thumb with the weak user at 0 dB: `log2(S1) / 2`.
pub fn rule_of_thumb(s1: Snr) -> f64 {
    0.5 * s1.value().log2()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Regime {
    Low,
    Mixed,
    High,
    Transitional,
}

/// Linear SNR thresholds standing in for "much less than 1" (strictly below
/// `low`) and "much greater than 1" (at or above `high`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegimeThresholds {
    pub low: f64,
    pub high: f64,
}

impl Default for RegimeThresholds {
    fn default() -> Self {
        RegimeThresholds {
            low: 0.1,
            high: 10.0,
        }
    }
}

pub fn classify_regime(pair: &SnrPair) -> Regime {
    classify_regime_with(pair, RegimeThresholds::default())
}

pub fn classify_regime_with(pair: &SnrPair, th: RegimeThresholds) -> Regime {
    let (s1, s2) = (pair.s1(), pair.s2());
    if s1 < th.low {
        Regime::Low
    } else if s1 >= th.high && s2 < th.low {
        Regime::Mixed
    } else if s2 >= th.high {
        Regime::High
    } else {
        Regime::Transitional
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GainReport {
    pub pair: SnrPair,
    pub slope_oma: f64,
    pub slope_noma: f64,
    pub gain: f64,
    pub bound_log: f64,
    pub bound_ratio: f64,
    pub bound_min: f64,
    pub mixed_approx: f64,
    /// `None` when `S2 <= 1`, where the approximation is undefined.
    pub high_snr_approx: Option<f64>,
    pub rule_of_thumb: f64,
    pub regime: Regime,
}

pub fn gain_report(pair: &SnrPair) -> GainReport {
    gain_report_with(pair, RegimeThresholds::default())
}

pub fn gain_report_with(pair: &SnrPair, th: RegimeThresholds) -> GainReport {
    let slope_oma = slope_oma(pair);
    let slope_noma = slope_noma(pair);
    let bound_log = gain_bound_log(pair);
    let bound_ratio = gain_bound_ratio(pair);
    GainReport {
        pair: *pair,
        slope_oma,
        slope_noma,
        gain: slope_noma / slope_oma,
        bound_log,
        bound_ratio,
        bound_min: bound_log.min(bound_ratio),
        mixed_approx: mixed_regime_approx(pair),
        high_snr_approx: high_snr_approx(pair).ok(),
        rule_of_thumb: rule_of_thumb(pair.strong()),
        regime: classify_regime_with(pair, th),
    }
}
