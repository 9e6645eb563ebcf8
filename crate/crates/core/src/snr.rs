//! Linear SNR values and the ordered strong/weak user pair.

use serde::Serialize;

use crate::error::{Error, Result};

/// Linear (not dB) signal-to-noise ratio. Always finite and strictly positive.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct Snr(f64);

impl Snr {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value > 0.0 {
            Ok(Snr(value))
        } else {
            Err(Error::NonPositive { name: "snr", value })
        }
    }

    pub fn from_db(db: f64) -> Result<Self> {
        if !db.is_finite() {
            return Err(Error::NonFinite {
                name: "snr_db",
                value: db,
            });
        }
        Snr::new(10f64.powf(db / 10.0))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn to_db(self) -> f64 {
        10.0 * self.0.log10()
    }
}

pub fn db_to_linear(db: f64) -> Result<Snr> {
    Snr::from_db(db)
}

pub fn linear_to_db(s: Snr) -> f64 {
    s.to_db()
}

/// SNR of a link with transmit power `power`, channel gain `gain` = |h|² and
/// noise power `noise`.
pub fn snr_from_link(power: f64, gain: f64, noise: f64) -> Result<Snr> {
    for (name, value) in [("power", power), ("gain", gain), ("noise", noise)] {
        if !(value.is_finite() && value > 0.0) {
            return Err(Error::NonPositive { name, value });
        }
    }
    Snr::new(power * gain / noise)
}

/// Strong user (`s1`) and weak user (`s2`) SNRs with `s1 >= s2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SnrPair {
    s1: Snr,
    s2: Snr,
}

impl SnrPair {
    /// Rejects pairs where the first SNR is smaller than the second.
    pub fn new(s1: Snr, s2: Snr) -> Result<Self> {
        if s1.0 < s2.0 {
            return Err(Error::Unordered { s1: s1.0, s2: s2.0 });
        }
        Ok(SnrPair { s1, s2 })
    }

    /// Sorts the two SNRs so the larger one becomes the strong user.
    pub fn ordered(a: Snr, b: Snr) -> Self {
        if a.0 >= b.0 {
            SnrPair { s1: a, s2: b }
        } else {
            SnrPair { s1: b, s2: a }
        }
    }

    pub fn from_linear(s1: f64, s2: f64) -> Result<Self> {
        SnrPair::new(Snr::new(s1)?, Snr::new(s2)?)
    }

    pub fn from_db(s1_db: f64, s2_db: f64) -> Result<Self> {
        SnrPair::new(Snr::from_db(s1_db)?, Snr::from_db(s2_db)?)
    }

    pub fn strong(&self) -> Snr {
        self.s1
    }

    pub fn weak(&self) -> Snr {
        self.s2
    }

    /// Linear SNR of the strong user.
    pub fn s1(&self) -> f64 {
        self.s1.0
    }

    /// Linear SNR of the weak user.
    pub fn s2(&self) -> f64 {
        self.s2.0
    }
}
