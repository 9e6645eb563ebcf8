//! CSV and JSON serialization for the command-line front end, plus the
//! sweep and validation routines behind its subcommands.
//!
//! CSV is written by hand: `.` decimals, `,` separators, LF line endings and
//! a single header row. Rust's float formatting is locale independent and
//! prints the shortest string that round-trips.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::gain::{gain_bound_log, gain_bound_ratio, relative_gain, slope_noma, slope_oma};
use crate::oracle::{region_dominance_check, sinr_monte_carlo, slope_fd, LinkConfig};
use crate::region::{frontier, FrontierSample, PowerSplit, Scheme};
use crate::snr::SnrPair;

pub const REGION_HEADER: &str = "knob,r1_bits,r2_bits";
pub const FIG2_HEADER: &str = "s1_db,gain,bound_log,bound_ratio,bound_min";
pub const REGION_UNITS_COMMENT: &str = "# rates in bits per complex channel use (log base 2)";

/// Significant digits kept in JSON output.
pub const JSON_DIGITS: usize = 12;

/// Rounds `x` to `digits` significant decimal digits.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", digits.saturating_sub(1), x)
        .parse()
        .unwrap_or(x)
}

fn round_numbers(v: &mut Value) {
    match v {
        Value::Number(n) => {
            if let Some(f) = n.as_f64().filter(|_| n.is_f64()) {
                if let Some(r) = serde_json::Number::from_f64(round_sig(f, JSON_DIGITS)) {
                    *n = r;
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_numbers),
        Value::Object(map) => map.values_mut().for_each(round_numbers),
        _ => {}
    }
}

/// Pretty JSON with every float rounded to [`JSON_DIGITS`] significant digits.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut v = serde_json::to_value(value).expect("report types serialize");
    round_numbers(&mut v);
    let mut s = serde_json::to_string_pretty(&v).expect("json value serializes");
    s.push('\n');
    s
}

/// Region boundary samples as CSV, one block per scheme in the given order.
pub fn region_csv(pair: &SnrPair, schemes: &[Scheme], n: usize) -> Result<String> {
    let mut out = String::new();
    out.push_str(REGION_UNITS_COMMENT);
    out.push('\n');
    out.push_str(REGION_HEADER);
    out.push('\n');
    for &scheme in schemes {
        for s in frontier(pair, scheme, n)? {
            let _ = writeln!(out, "{},{},{}", s.knob.value(), s.rates.r1, s.rates.r2);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct RegionExport {
    pub pair: SnrPair,
    pub samples: Vec<FrontierSample>,
}

pub fn region_export(pair: &SnrPair, schemes: &[Scheme], n: usize) -> Result<RegionExport> {
    let mut samples = Vec::with_capacity(schemes.len() * n);
    for &scheme in schemes {
        samples.extend(frontier(pair, scheme, n)?);
    }
    Ok(RegionExport {
        pair: *pair,
        samples,
    })
}

/// Strong-user SNR sweep at a fixed dB gap to the weak user.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepSpec {
    pub s1_db_start: f64,
    pub s1_db_stop: f64,
    pub points: usize,
    pub gap_db: f64,
}

impl Default for SweepSpec {
    fn default() -> Self {
        SweepSpec {
            s1_db_start: -20.0,
            s1_db_stop: 60.0,
            points: 161,
            gap_db: 15.0,
        }
    }
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.points < 2 {
            return Err(Error::InvalidSweep(format!(
                "need at least 2 points, got {}",
                self.points
            )));
        }
        if !(self.s1_db_start.is_finite() && self.s1_db_stop.is_finite() && self.gap_db.is_finite())
        {
            return Err(Error::InvalidSweep(
                "sweep bounds and gap must be finite".into(),
            ));
        }
        if self.s1_db_start >= self.s1_db_stop {
            return Err(Error::InvalidSweep(format!(
                "start {} dB must be below stop {} dB",
                self.s1_db_start, self.s1_db_stop
            )));
        }
        if self.gap_db < 0.0 {
            return Err(Error::InvalidSweep(format!(
                "gap must be non-negative, got {} dB",
                self.gap_db
            )));
        }
        Ok(())
    }

    pub fn s1_db_values(&self) -> impl Iterator<Item = f64> + '_ {
        let step = (self.s1_db_stop - self.s1_db_start) / (self.points - 1) as f64;
        (0..self.points).map(move |i| {
            if i + 1 == self.points {
                self.s1_db_stop
            } else {
                self.s1_db_start + i as f64 * step
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Fig2Row {
    pub s1_db: f64,
    pub gain: f64,
    pub bound_log: f64,
    pub bound_ratio: f64,
    pub bound_min: f64,
}

/// Relative gain and its bound envelope along a sweep.
pub fn fig2_rows(spec: &SweepSpec) -> Result<Vec<Fig2Row>> {
    spec.validate()?;
    spec.s1_db_values()
        .map(|s1_db| {
            let pair = SnrPair::from_db(s1_db, s1_db - spec.gap_db)?;
            let bound_log = gain_bound_log(&pair);
            let bound_ratio = gain_bound_ratio(&pair);
            Ok(Fig2Row {
                s1_db,
                gain: relative_gain(&pair),
                bound_log,
                bound_ratio,
                bound_min: bound_log.min(bound_ratio),
            })
        })
        .collect()
}

pub fn fig2_csv(rows: &[Fig2Row]) -> String {
    let mut out = String::from(FIG2_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            r.s1_db, r.gain, r.bound_log, r.bound_ratio, r.bound_min
        );
    }
    out
}

/// Header row plus one value row for a flat JSON object. Nested objects are
/// flattened with `.` separators; nulls become empty fields.
pub fn flat_csv<T: Serialize>(value: &T) -> String {
    fn walk(prefix: &str, v: &Value, keys: &mut Vec<String>, vals: &mut Vec<String>) {
        match v {
            Value::Object(map) => {
                for (k, child) in map {
                    let key = if prefix.is_empty() {
                        k.clone()
                    } else {
                        format!("{prefix}.{k}")
                    };
                    walk(&key, child, keys, vals);
                }
            }
            Value::Null => {
                keys.push(prefix.to_string());
                vals.push(String::new());
            }
            Value::String(s) => {
                keys.push(prefix.to_string());
                vals.push(s.clone());
            }
            other => {
                keys.push(prefix.to_string());
                vals.push(other.to_string());
            }
        }
    }
    let v = serde_json::to_value(value).expect("report types serialize");
    let (mut keys, mut vals) = (Vec::new(), Vec::new());
    walk("", &v, &mut keys, &mut vals);
    format!("{}\n{}\n", keys.join(","), vals.join(","))
}

/// Tolerances of the validation suite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ValidationTolerances {
    pub slope_fd_noma: f64,
    pub slope_fd_oma: f64,
    pub dominance: f64,
    pub balanced_coincidence: f64,
    pub bound_dominance: f64,
    pub mc_rel_err: f64,
}

impl Default for ValidationTolerances {
    fn default() -> Self {
        ValidationTolerances {
            slope_fd_noma: 1e-4,
            slope_fd_oma: 1e-12,
            dominance: 1e-12,
            balanced_coincidence: 1e-9,
            bound_dominance: 1e-12,
            mc_rel_err: 0.01,
        }
    }
}

impl ValidationTolerances {
    pub fn scaled(self, factor: f64) -> Self {
        ValidationTolerances {
            slope_fd_noma: self.slope_fd_noma * factor,
            slope_fd_oma: self.slope_fd_oma * factor,
            dominance: self.dominance * factor,
            balanced_coincidence: self.balanced_coincidence * factor,
            bound_dominance: self.bound_dominance * factor,
            mc_rel_err: self.mc_rel_err * factor,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub max_deviation: f64,
    pub tolerance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationSummary {
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl ValidationSummary {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Knob step of the one-sided difference on the curved NOMA boundary.
pub const FD_STEP_NOMA: f64 = 1e-6;
/// Knob step on the straight OMA segment, where only rounding matters.
pub const FD_STEP_OMA: f64 = 5e-3;
pub const MC_SAMPLES: usize = 1_000_000;
pub const DOMINANCE_GRID: usize = 1001;

fn check(name: &'static str, max_deviation: f64, tolerance: f64) -> CheckResult {
    CheckResult {
        name,
        passed: max_deviation <= tolerance,
        max_deviation,
        tolerance,
    }
}

/// Draws a pair with `S1` log-uniform on `[s1_lo_db, s1_hi_db]` and `S2`
/// log-uniform between `S1 - 60 dB` and `S1`.
pub fn random_pair<R: Rng>(rng: &mut R, s1_lo_db: f64, s1_hi_db: f64) -> SnrPair {
    let s1_db = rng.gen_range(s1_lo_db..=s1_hi_db);
    let gap = rng.gen_range(0.0..60.0);
    SnrPair::from_db(s1_db, s1_db - gap).expect("finite dB values")
}

/// Runs every numerical oracle and collects pass/fail per check.
pub fn run_validation(seed: u64, tol: ValidationTolerances) -> Result<ValidationSummary> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut checks = Vec::new();

    let mut fd_noma: f64 = 0.0;
    let mut fd_oma: f64 = 0.0;
    for _ in 0..50 {
        let pair = random_pair(&mut rng, -20.0, 40.0);
        fd_noma =
            fd_noma.max((slope_fd(&pair, Scheme::Noma, FD_STEP_NOMA)? - slope_noma(&pair)).abs());
        fd_oma = fd_oma.max((slope_fd(&pair, Scheme::Oma, FD_STEP_OMA)? - slope_oma(&pair)).abs());
    }
    checks.push(check("slope_fd_noma", fd_noma, tol.slope_fd_noma));
    checks.push(check("slope_fd_oma", fd_oma, tol.slope_fd_oma));

    let mut pairs = vec![
        SnrPair::from_linear(100.0, 10.0)?,
        SnrPair::from_linear(100.0, 2.0)?,
    ];
    pairs.extend((0..20).map(|_| random_pair(&mut rng, -20.0, 60.0)));
    let mut violation = f64::NEG_INFINITY;
    for pair in &pairs {
        violation = violation.max(region_dominance_check(pair, DOMINANCE_GRID)?.max_violation);
    }
    checks.push(check("region_dominance", violation.max(0.0), tol.dominance));

    let mut balanced: f64 = 0.0;
    for s in [0.01, 1.0, 100.0] {
        let r = region_dominance_check(&SnrPair::from_linear(s, s)?, DOMINANCE_GRID)?;
        balanced = balanced.max(r.max_violation.abs()).max(r.max_slack.abs());
    }
    checks.push(check(
        "balanced_coincidence",
        balanced,
        tol.balanced_coincidence,
    ));

    let mut excess: f64 = 0.0;
    for pair in log_grid_pairs(40, -3.0, 6.0) {
        let g = relative_gain(&pair);
        let bound = gain_bound_log(&pair).min(gain_bound_ratio(&pair));
        excess = excess.max(g - bound).max(slope_noma(&pair) - 1.0);
    }
    checks.push(check("bound_dominance", excess, tol.bound_dominance));

    let link = LinkConfig {
        power: 1.0,
        noise: 1.0,
        gain1: 20.0,
        gain2: 1.0,
    };
    let est = sinr_monte_carlo(&link, PowerSplit::new(0.475)?, MC_SAMPLES, seed)?;
    checks.push(check("mc_sinr_user1", est.rel_err1, tol.mc_rel_err));
    checks.push(check("mc_sinr_user2", est.rel_err2, tol.mc_rel_err));

    Ok(ValidationSummary {
        seed,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

/// All ordered pairs from an `n`-point log grid on `[10^lo, 10^hi]`.
pub fn log_grid_pairs(n: usize, lo_exp: f64, hi_exp: f64) -> Vec<SnrPair> {
    let grid: Vec<f64> = (0..n)
        .map(|i| 10f64.powf(lo_exp + (hi_exp - lo_exp) * i as f64 / (n - 1) as f64))
        .collect();
    let mut pairs = Vec::new();
    for (i, &s1) in grid.iter().enumerate() {
        for &s2 in &grid[..=i] {
            pairs.push(SnrPair::from_linear(s1, s2).expect("grid is positive and sorted"));
        }
    }
    pairs
}
