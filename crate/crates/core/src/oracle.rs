//! Numerical cross-checks that do not go through the closed-form slope and
//! gain expressions: finite-difference corner slopes, a grid test of region
//! containment, and a symbol-level Monte-Carlo simulation of the
//! superposition signal.

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rand_distr::{Distribution, Normal};
use serde::Serialize;

use crate::allocation::noma_split_for_rate1;
use crate::error::{Error, Result};
use crate::region::{noma_rates, oma_rates, PowerSplit, RatePair, Scheme, TimeShare};
use crate::snr::{snr_from_link, SnrPair};

pub const MIN_MC_SAMPLES: usize = 10_000;

fn rates_at(pair: &SnrPair, scheme: Scheme, knob: f64) -> Result<RatePair> {
    Ok(match scheme {
        Scheme::Noma => noma_rates(pair, PowerSplit::new(knob)?),
        Scheme::Oma => oma_rates(pair, TimeShare::new(knob)?),
    })
}

/// One-sided difference quotient `-dR2/dR1` between knob values `1 - h` and 1.
pub fn slope_fd(pair: &SnrPair, scheme: Scheme, h: f64) -> Result<f64> {
    if !(h > 0.0 && h < 0.01) {
        return Err(Error::StepOutOfRange { h });
    }
    let near = rates_at(pair, scheme, 1.0 - h)?;
    let corner = rates_at(pair, scheme, 1.0)?;
    let delta_r1 = corner.r1 - near.r1;
    if delta_r1.abs() < 1e-15 {
        return Err(Error::DegenerateDifference { delta_r1 });
    }
    Ok(-(corner.r2 - near.r2) / delta_r1)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DominanceReport {
    pub points: usize,
    /// Largest `r2_oma - r2_noma` over the grid. Non-positive means the OMA
    /// boundary lies inside the NOMA region at every grid point.
    pub max_violation: f64,
    /// Largest `r2_noma - r2_oma` over the grid.
    pub max_slack: f64,
}

/// Walks `n` evenly spaced time shares, matches each OMA strong-user rate with
/// the NOMA power split that gives the same rate, and compares weak-user rates.
pub fn region_dominance_check(pair: &SnrPair, n: usize) -> Result<DominanceReport> {
    if n < 2 {
        return Err(Error::TooFew {
            name: "grid size",
            value: n,
            min: 2,
        });
    }
    let mut max_violation = f64::NEG_INFINITY;
    let mut max_slack = f64::NEG_INFINITY;
    for i in 0..n {
        let alpha = TimeShare::new(i as f64 / (n - 1) as f64)?;
        let oma = oma_rates(pair, alpha);
        let noma = noma_rates(pair, noma_split_for_rate1(pair, oma.r1)?);
        max_violation = max_violation.max(oma.r2 - noma.r2);
        max_slack = max_slack.max(noma.r2 - oma.r2);
    }
    Ok(DominanceReport {
        points: n,
        max_violation,
        max_slack,
    })
}

/// Physical link parameters: transmit power, common noise power and the
/// squared channel magnitudes of the two users.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LinkConfig {
    pub power: f64,
    pub noise: f64,
    pub gain1: f64,
    pub gain2: f64,
}

impl LinkConfig {
    pub fn snr_pair(&self) -> Result<SnrPair> {
        SnrPair::new(
            snr_from_link(self.power, self.gain1, self.noise)?,
            snr_from_link(self.power, self.gain2, self.noise)?,
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SinrEstimate {
    /// Strong user after ideal cancellation of the weak user's signal.
    pub user1_sinr: f64,
    /// Weak user, strong user's signal treated as noise.
    pub user2_sinr: f64,
    pub user1_target: f64,
    pub user2_target: f64,
    pub rel_err1: f64,
    pub rel_err2: f64,
    /// Empirical mean of `|x|^2`.
    pub tx_power: f64,
    pub samples: usize,
}

fn rel_err(estimate: f64, target: f64) -> f64 {
    if target == 0.0 {
        estimate.abs()
    } else {
        ((estimate - target) / target).abs()
    }
}

fn ratio_or_zero(signal: f64, rest: f64) -> f64 {
    if signal == 0.0 {
        0.0
    } else {
        signal / rest
    }
}

/// Simulates `x = sqrt(a P) x1 + sqrt((1 - a) P) x2`, `y_i = h_i x + n_i` with
/// unit-power circularly-symmetric complex Gaussian `x1`, `x2` and noise of
/// power `N`, and measures per-user SINR as ratios of empirical powers.
///
/// A user with no allocated power reports SINR 0. Single-threaded; a given
/// seed always yields the same estimate.
pub fn sinr_monte_carlo(
    config: &LinkConfig,
    split: PowerSplit,
    samples: usize,
    seed: u64,
) -> Result<SinrEstimate> {
    if samples < MIN_MC_SAMPLES {
        return Err(Error::TooFew {
            name: "Monte-Carlo samples",
            value: samples,
            min: MIN_MC_SAMPLES,
        });
    }
    let pair = config.snr_pair()?;
    let a = split.value();

    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    // Each quadrature carries half the unit symbol power.
    let unit = Normal::new(0.0, std::f64::consts::FRAC_1_SQRT_2).expect("finite std dev");
    let mut draw = || (unit.sample(&mut rng), unit.sample(&mut rng));

    let amp1 = (a * config.power).sqrt();
    let amp2 = ((1.0 - a) * config.power).sqrt();
    let h1 = config.gain1.sqrt();
    let h2 = config.gain2.sqrt();
    let noise_amp = config.noise.sqrt();

    let (mut sig1, mut noise1) = (0.0, 0.0);
    let (mut sig2, mut interf2) = (0.0, 0.0);
    let mut tx = 0.0;
    for _ in 0..samples {
        let (x1r, x1i) = draw();
        let (x2r, x2i) = draw();
        let (n1r, n1i) = draw();
        let (n2r, n2i) = draw();
        let (s1r, s1i) = (amp1 * x1r, amp1 * x1i);
        let (s2r, s2i) = (amp2 * x2r, amp2 * x2i);
        let (xr, xi) = (s1r + s2r, s1i + s2i);
        tx += xr * xr + xi * xi;

        // User 1: y1 - h1 s2 after SIC leaves h1 s1 + n1.
        let (u1r, u1i) = (h1 * s1r, h1 * s1i);
        let (w1r, w1i) = (noise_amp * n1r, noise_amp * n1i);
        sig1 += u1r * u1r + u1i * u1i;
        noise1 += w1r * w1r + w1i * w1i;

        // User 2: y2 = h2 s2 + (h2 s1 + n2).
        let (u2r, u2i) = (h2 * s2r, h2 * s2i);
        let (v2r, v2i) = (h2 * s1r + noise_amp * n2r, h2 * s1i + noise_amp * n2i);
        sig2 += u2r * u2r + u2i * u2i;
        interf2 += v2r * v2r + v2i * v2i;
    }

    let user1_sinr = ratio_or_zero(sig1, noise1);
    let user2_sinr = ratio_or_zero(sig2, interf2);
    let (s1, s2) = (pair.s1(), pair.s2());
    let user1_target = a * s1;
    let user2_target = (1.0 - a) * s2 / (1.0 + a * s2);
    Ok(SinrEstimate {
        user1_sinr,
        user2_sinr,
        user1_target,
        user2_target,
        rel_err1: rel_err(user1_sinr, user1_target),
        rel_err2: rel_err(user2_sinr, user2_target),
        tx_power: tx / samples as f64,
        samples,
    })
}
