//! Acceptance gate. Each test checks one criterion at its pinned tolerance
//! and prints a single PASS/FAIL line; run with `--nocapture` to see them.

use std::time::{Duration, Instant};

use noma_core::export::{fig2_rows, log_grid_pairs, random_pair, SweepSpec};
use noma_core::{
    corner_rate, gain_bound_log, gain_bound_ratio, mixed_regime_approx, noma_rates,
    noma_split_for_rate1, oma_rates, oma_share_for_rate1, rate_shift_study, region_dominance_check,
    relative_gain, sinr_monte_carlo, slope_fd, slope_noma, slope_oma, LinkConfig, PowerSplit,
    Scheme, SnrPair, TimeShare,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

fn verdict(id: &str, what: &str, checks: &[(String, bool)]) {
    let passed = checks.iter().all(|(_, ok)| *ok);
    println!("[{}] {id}: {what}", if passed { "PASS" } else { "FAIL" });
    for (detail, ok) in checks {
        if !ok {
            println!("    failed: {detail}");
        }
    }
    assert!(passed, "{id} failed");
}

fn within(label: &str, value: f64, expected: f64, tol: f64) -> (String, bool) {
    let dev = (value - expected).abs();
    (
        format!("{label} = {value} vs {expected} (|diff| {dev:e} > {tol:e})"),
        dev <= tol,
    )
}

fn rounds_to(label: &str, value: f64, decimals: i32, printed: f64) -> (String, bool) {
    let scale = 10f64.powi(decimals);
    let rounded = (value * scale).round() / scale;
    (
        format!("{label} = {value} rounds to {rounded}, printed {printed}"),
        (rounded - printed).abs() < 0.5 / scale,
    )
}

fn pair(s1: f64, s2: f64) -> SnrPair {
    SnrPair::from_linear(s1, s2).unwrap()
}

fn log_uniform<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    10f64.powf(rng.gen_range(lo.log10()..=hi.log10()))
}

#[test]
fn criterion_01_example_golden_values() {
    let p = pair(20.0, 1.0);
    let start = Instant::now();
    let sn = slope_noma(&p);
    let so = slope_oma(&p);
    let g = relative_gain(&p);
    let r1 = noma_rates(&p, PowerSplit::new(1.0).unwrap()).r1;
    let mixed = mixed_regime_approx(&p);
    let elapsed = start.elapsed();
    verdict(
        "AC-01",
        "Example 1 slopes, gain, corner rate and mixed approximation",
        &[
            rounds_to("slope_noma", sn, 2, 0.53),
            rounds_to("slope_oma", so, 2, 0.23),
            rounds_to("relative_gain", g, 2, 2.31),
            rounds_to("corner R1", r1, 4, 4.3923),
            rounds_to("mixed approx", mixed, 0, 3.0),
            within("slope_noma", sn, 0.525, 5e-4),
            within("slope_oma", so, 0.2277, 5e-4),
            within("relative_gain", g, 2.306, 5e-4),
            within("corner R1", r1, 4.3923, 5e-4),
            within("mixed approx", mixed, 2.996, 5e-4),
            (
                format!("runtime {elapsed:?}"),
                elapsed < Duration::from_millis(50),
            ),
        ],
    );
}

#[test]
fn criterion_02_example_rate_shift() {
    let r = rate_shift_study(&pair(20.0, 1.0), 1.0).unwrap();
    verdict(
        "AC-02",
        "Example 1 one-bit shift: knobs, weak-user rates, finite gain",
        &[
            within("a", r.split.value(), 0.475, 1e-6),
            within("R2_NOMA", r.r2_noma, 0.4393, 5e-4),
            // 0.7723 is a 4-decimal display; the 1e-6 check runs against the
            // exact time share log2(10.5) / log2(21).
            within(
                "alpha",
                r.share.value(),
                10.5f64.log2() / 21f64.log2(),
                1e-6,
            ),
            rounds_to("alpha", r.share.value(), 4, 0.7723),
            within("R2_OMA", r.r2_oma, 0.2277, 5e-4),
            within("finite_gain", r.finite_gain, 1.929, 1e-3),
            rounds_to("R2_NOMA", r.r2_noma, 2, 0.44),
            rounds_to("alpha", r.share.value(), 2, 0.77),
            rounds_to("R2_OMA", r.r2_oma, 2, 0.23),
            rounds_to("finite_gain", r.finite_gain, 2, 1.93),
        ],
    );
}

#[test]
fn criterion_03_slope_oracle() {
    let start = Instant::now();
    let mut rng = ChaCha12Rng::seed_from_u64(3);
    let mut checks = Vec::new();
    for _ in 0..50 {
        let s1 = log_uniform(&mut rng, 0.01, 1e4);
        let s2 = log_uniform(&mut rng, s1 * 1e-4, s1);
        let p = pair(s1, s2);
        checks.push(within(
            &format!("NOMA fd at ({s1:.4e}, {s2:.4e})"),
            slope_fd(&p, Scheme::Noma, 1e-6).unwrap(),
            slope_noma(&p),
            1e-4,
        ));
        // The OMA boundary is a straight segment; a 5e-3 knob step keeps the
        // rounding in the difference quotient below 1e-12.
        checks.push(within(
            &format!("OMA fd at ({s1:.4e}, {s2:.4e})"),
            slope_fd(&p, Scheme::Oma, 5e-3).unwrap(),
            slope_oma(&p),
            1e-12,
        ));
    }
    let elapsed = start.elapsed();
    checks.push((
        format!("runtime {elapsed:?}"),
        elapsed < Duration::from_secs(1),
    ));
    verdict(
        "AC-03",
        "finite-difference slopes match closed forms on 50 random pairs",
        &checks,
    );
}

#[test]
fn criterion_04_bound_dominance() {
    let start = Instant::now();
    let mut worst_gap = f64::NEG_INFINITY;
    let mut worst_slope: f64 = 0.0;
    let pairs = log_grid_pairs(40, -3.0, 6.0);
    for p in &pairs {
        let bound = gain_bound_log(p).min(gain_bound_ratio(p));
        worst_gap = worst_gap.max(relative_gain(p) - bound);
        worst_slope = worst_slope.max(slope_noma(p));
    }
    let elapsed = start.elapsed();
    verdict(
        "AC-04",
        "relative gain below min of both bounds on the 40x40 log grid",
        &[
            (
                format!("{} grid pairs", pairs.len()),
                pairs.len() == 40 * 41 / 2,
            ),
            (
                format!("max(gain - bound) = {worst_gap:e}"),
                worst_gap <= 1e-12,
            ),
            (
                format!("max slope_noma = {worst_slope}"),
                worst_slope <= 1.0,
            ),
            (
                format!("runtime {elapsed:?}"),
                elapsed < Duration::from_secs(1),
            ),
        ],
    );
}

#[test]
fn criterion_05_region_containment() {
    let mut rng = ChaCha12Rng::seed_from_u64(5);
    let mut pairs = vec![pair(100.0, 10.0), pair(100.0, 2.0)];
    pairs.extend((0..20).map(|_| random_pair(&mut rng, -20.0, 60.0)));
    let mut checks: Vec<(String, bool)> = pairs
        .iter()
        .map(|p| {
            let r = region_dominance_check(p, 1001).unwrap();
            (
                format!(
                    "({}, {}): max violation {:e}",
                    p.s1(),
                    p.s2(),
                    r.max_violation
                ),
                r.max_violation <= 1e-12,
            )
        })
        .collect();
    for s in [1e-3, 1.0, 20.0, 1e5] {
        let r = region_dominance_check(&pair(s, s), 1001).unwrap();
        checks.push((
            format!(
                "balanced {s}: violation {:e}, slack {:e}",
                r.max_violation, r.max_slack
            ),
            r.max_violation.abs() <= 1e-9 && r.max_slack.abs() <= 1e-9,
        ));
    }
    verdict(
        "AC-05",
        "OMA region inside NOMA region; coincident when S1 = S2",
        &checks,
    );
}

const GAP_15DB: f64 = 31.623;

#[test]
fn criterion_06a_low_snr_end_of_gain_curve() {
    let s1 = 1e-3 * GAP_15DB;
    let g = relative_gain(&SnrPair::from_linear(s1, s1 / GAP_15DB).unwrap());
    verdict(
        "AC-06a",
        "15 dB gap: gain within 0.02 of 1 at S1 = 1e-3 * 31.623",
        &[within("gain", g, 1.0, 0.02)],
    );
}

#[test]
fn criterion_06b_high_snr_end_of_gain_curve() {
    let s1 = 1e12;
    let g = relative_gain(&SnrPair::from_linear(s1, s1 / GAP_15DB).unwrap());
    verdict(
        "AC-06b",
        "15 dB gap: gain within 0.05 of 1 at S1 = 1e12",
        &[within("gain", g, 1.0, 0.05)],
    );
}

#[test]
fn criterion_06c_interior_maximum() {
    let rows = fig2_rows(&SweepSpec::default()).unwrap();
    let first = rows.first().unwrap().gain;
    let last = rows.last().unwrap().gain;
    let peak = rows
        .iter()
        .map(|r| r.gain)
        .fold(f64::NEG_INFINITY, f64::max);
    let interior_peak = rows[1..rows.len() - 1]
        .iter()
        .map(|r| r.gain)
        .fold(f64::NEG_INFINITY, f64::max);
    verdict(
        "AC-06c",
        "15 dB gap sweep over [-20, 60] dB peaks strictly inside",
        &[
            (
                format!("interior max {interior_peak} > first {first}"),
                interior_peak > first,
            ),
            (
                format!("interior max {interior_peak} > last {last}"),
                interior_peak > last,
            ),
            (format!("peak {peak} is interior"), peak == interior_peak),
        ],
    );
}

#[test]
fn criterion_07_mixed_regime_tightness() {
    let checks: Vec<_> = [1e2, 1e3, 1e4]
        .iter()
        .map(|&s1| {
            let p = pair(s1, 1e-4);
            let g = relative_gain(&p);
            let rel = ((g - gain_bound_log(&p)) / g).abs();
            (format!("S1 = {s1}: relative gap {rel:e}"), rel < 1e-3)
        })
        .collect();
    verdict("AC-07", "log bound tight for S2 = 1e-4", &checks);
}

#[test]
fn criterion_08_high_snr_approximation() {
    let p = pair(1e6, 1e3);
    let g = relative_gain(&p);
    let approx = 1e6f64.log2() / 1e3f64.log2();
    let rel = ((g - approx) / g).abs();
    verdict(
        "AC-08",
        "high-SNR approximation within 1% at (1e6, 1e3)",
        &[(
            format!("gain {g}, approx {approx}, relative error {rel:e}"),
            rel < 0.01,
        )],
    );
}

#[test]
fn criterion_09_monte_carlo_sinr() {
    let link = LinkConfig {
        power: 1.0,
        noise: 1.0,
        gain1: 20.0,
        gain2: 1.0,
    };
    let split = PowerSplit::new(0.475).unwrap();
    let start = Instant::now();
    let est = sinr_monte_carlo(&link, split, 1_000_000, 2024).unwrap();
    let elapsed = start.elapsed();
    let again = sinr_monte_carlo(&link, split, 1_000_000, 2024).unwrap();
    let user2_target = 0.525 / 1.475;
    verdict(
        "AC-09",
        "Monte-Carlo post-SIC SINR of both users within 1%, seeded rerun identical",
        &[
            (
                format!("user1 {} vs 9.5", est.user1_sinr),
                ((est.user1_sinr - 9.5) / 9.5).abs() < 0.01,
            ),
            (
                format!("user2 {} vs {user2_target}", est.user2_sinr),
                ((est.user2_sinr - user2_target) / user2_target).abs() < 0.01,
            ),
            (
                "rerun bit-identical".into(),
                est.user1_sinr.to_bits() == again.user1_sinr.to_bits()
                    && est.user2_sinr.to_bits() == again.user2_sinr.to_bits()
                    && est == again,
            ),
            (
                format!("runtime {elapsed:?}"),
                elapsed < Duration::from_secs(10),
            ),
        ],
    );
}

#[test]
fn criterion_10_inversion_round_trips() {
    let mut rng = ChaCha12Rng::seed_from_u64(10);
    let (mut worst_noma, mut worst_oma): (f64, f64) = (0.0, 0.0);
    for _ in 0..10_000 {
        let p = random_pair(&mut rng, -30.0, 60.0);
        let k: f64 = rng.gen_range(0.0..=1.0);
        let r1 = noma_rates(&p, PowerSplit::new(k).unwrap()).r1;
        worst_noma = worst_noma.max((noma_split_for_rate1(&p, r1).unwrap().value() - k).abs());
        let r1 = oma_rates(&p, TimeShare::new(k).unwrap()).r1;
        worst_oma = worst_oma.max((oma_share_for_rate1(&p, r1).unwrap().value() - k).abs());
        assert!(r1 <= corner_rate(&p));
    }
    verdict(
        "AC-10",
        "knob -> rate -> knob identity on 1e4 random draws",
        &[
            (
                format!("power split max error {worst_noma:e}"),
                worst_noma <= 1e-12,
            ),
            (
                format!("time share max error {worst_oma:e}"),
                worst_oma <= 1e-12,
            ),
        ],
    );
}
