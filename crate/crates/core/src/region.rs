//! Achievable rate regions of superposition coding (NOMA) and time sharing
//! (OMA) on the two-user degraded Gaussian broadcast channel.
//!
//! Rates are in bits per complex channel use. Both regions are parameterized
//! by a single scalar knob in `[0, 1]`: the power fraction `a` of the strong
//! user for NOMA and the time fraction `alpha` of the strong user for OMA.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::snr::SnrPair;

/// `log2(1 + x)`, accurate for small `x`.
#[inline]
pub(crate) fn log2_1p(x: f64) -> f64 {
    x.ln_1p() * std::f64::consts::LOG2_E
}

fn check_unit(name: &'static str, value: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(Error::KnobOutOfRange { name, value })
    }
}

/// Fraction of total transmit power given to the strong user.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct PowerSplit(f64);

impl PowerSplit {
    pub fn new(a: f64) -> Result<Self> {
        check_unit("power split", a).map(PowerSplit)
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Fraction of channel uses given to the strong user.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct TimeShare(f64);

impl TimeShare {
    pub fn new(alpha: f64) -> Result<Self> {
        check_unit("time share", alpha).map(TimeShare)
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RatePair {
    /// Strong-user rate, bits per complex channel use.
    pub r1: f64,
    /// Weak-user rate, bits per complex channel use.
    pub r2: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scheme {
    Noma,
    Oma,
}

impl Scheme {
    pub fn name(self) -> &'static str {
        match self {
            Scheme::Noma => "noma",
            Scheme::Oma => "oma",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Knob {
    PowerSplit(PowerSplit),
    TimeShare(TimeShare),
}

impl Knob {
    pub fn value(self) -> f64 {
        match self {
            Knob::PowerSplit(a) => a.value(),
            Knob::TimeShare(alpha) => alpha.value(),
        }
    }

    pub fn scheme(self) -> Scheme {
        match self {
            Knob::PowerSplit(_) => Scheme::Noma,
            Knob::TimeShare(_) => Scheme::Oma,
        }
    }

    /// Re-evaluates the region map that produced a sample at this knob.
    pub fn rates(self, pair: &SnrPair) -> RatePair {
        match self {
            Knob::PowerSplit(a) => noma_rates(pair, a),
            Knob::TimeShare(alpha) => oma_rates(pair, alpha),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FrontierSample {
    pub knob: Knob,
    pub rates: RatePair,
}

/// Superposition coding with SIC at the strong user:
/// `r1 = log2(1 + a S1)`, `r2 = log2(1 + (1 - a) S2 / (1 + a S2))`.
pub fn noma_rates(pair: &SnrPair, split: PowerSplit) -> RatePair {
    let a = split.value();
    let s2 = pair.s2();
    RatePair {
        r1: log2_1p(a * pair.s1()),
        r2: log2_1p((1.0 - a) * s2 / (1.0 + a * s2)),
    }
}

/// Time sharing: `r1 = alpha log2(1 + S1)`, `r2 = (1 - alpha) log2(1 + S2)`.
pub fn oma_rates(pair: &SnrPair, share: TimeShare) -> RatePair {
    let alpha = share.value();
    RatePair {
        r1: alpha * log2_1p(pair.s1()),
        r2: (1.0 - alpha) * log2_1p(pair.s2()),
    }
}

/// Knob values `0, 1/(n-1), ..., 1`. The last point is exactly 1.
fn uniform_knobs(n: usize) -> Result<impl Iterator<Item = f64>> {
    if n < 2 {
        return Err(Error::TooFew {
            name: "frontier sample count",
            value: n,
            min: 2,
        });
    }
    let last = (n - 1) as f64;
    Ok((0..n).map(move |i| i as f64 / last))
}

pub fn noma_frontier(pair: &SnrPair, n: usize) -> Result<Vec<FrontierSample>> {
    Ok(uniform_knobs(n)?
        .map(|a| {
            let split = PowerSplit(a);
            FrontierSample {
                knob: Knob::PowerSplit(split),
                rates: noma_rates(pair, split),
            }
        })
        .collect())
}

pub fn oma_frontier(pair: &SnrPair, n: usize) -> Result<Vec<FrontierSample>> {
    Ok(uniform_knobs(n)?
        .map(|alpha| {
            let share = TimeShare(alpha);
            FrontierSample {
                knob: Knob::TimeShare(share),
                rates: oma_rates(pair, share),
            }
        })
        .collect())
}

pub fn frontier(pair: &SnrPair, scheme: Scheme, n: usize) -> Result<Vec<FrontierSample>> {
    match scheme {
        Scheme::Noma => noma_frontier(pair, n),
        Scheme::Oma => oma_frontier(pair, n),
    }
}
