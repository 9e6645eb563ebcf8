//! Inverse region maps (strong-user rate to resource knob) and the finite
//! rate-shift study away from the sum-rate corner.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gain::relative_gain;
use crate::region::{log2_1p, noma_rates, oma_rates, PowerSplit, TimeShare};
use crate::snr::SnrPair;

/// Strong-user rate at the sum-rate corner, `log2(1 + S1)`.
pub fn corner_rate(pair: &SnrPair) -> f64 {
    log2_1p(pair.s1())
}

fn check_rate(pair: &SnrPair, r1: f64) -> Result<f64> {
    let max = corner_rate(pair);
    if (0.0..=max).contains(&r1) {
        Ok(max)
    } else {
        Err(Error::RateOutOfRange {
            rate: r1,
            min: 0.0,
            max,
        })
    }
}

/// Power split giving the strong user rate `r1`: `a = (2^r1 - 1) / S1`.
pub fn noma_split_for_rate1(pair: &SnrPair, r1: f64) -> Result<PowerSplit> {
    check_rate(pair, r1)?;
    let a = (r1 * std::f64::consts::LN_2).exp_m1() / pair.s1();
    // At the corner rounding may overshoot 1 by an ulp.
    PowerSplit::new(a.min(1.0))
}

/// Time share giving the strong user rate `r1`: `alpha = r1 / log2(1 + S1)`.
pub fn oma_share_for_rate1(pair: &SnrPair, r1: f64) -> Result<TimeShare> {
    let max = check_rate(pair, r1)?;
    TimeShare::new((r1 / max).min(1.0))
}

/// Weak-user rates `(noma, oma)` at a common strong-user rate.
fn weak_rates(pair: &SnrPair, r1: f64) -> Result<(PowerSplit, TimeShare, f64, f64)> {
    let split = noma_split_for_rate1(pair, r1)?;
    let share = oma_share_for_rate1(pair, r1)?;
    Ok((
        split,
        share,
        noma_rates(pair, split).r2,
        oma_rates(pair, share).r2,
    ))
}

/// Ratio of weak-user rates (NOMA over OMA) at strong-user rate `r1`.
///
/// Undefined at the corner itself, where both weak-user rates vanish; the
/// limit there is [`relative_gain`].
pub fn finite_gain(pair: &SnrPair, r1: f64) -> Result<f64> {
    let corner = check_rate(pair, r1)?;
    let (_, _, r2_noma, r2_oma) = weak_rates(pair, r1)?;
    if r1 >= corner || r2_oma <= 0.0 {
        return Err(Error::IndeterminateAtCorner { corner });
    }
    Ok(r2_noma / r2_oma)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ShiftReport {
    pub pair: SnrPair,
    pub delta: f64,
    pub r1_target: f64,
    pub split: PowerSplit,
    pub share: TimeShare,
    pub r2_noma: f64,
    pub r2_oma: f64,
    pub finite_gain: f64,
    pub asymptotic_gain: f64,
}

/// Moves `delta` bits per use from the strong user's corner rate and reports
/// what each scheme gives the weak user in exchange.
pub fn rate_shift_study(pair: &SnrPair, delta: f64) -> Result<ShiftReport> {
    let corner = corner_rate(pair);
    if !(delta > 0.0 && delta <= corner) {
        return Err(Error::ShiftOutOfRange { delta, max: corner });
    }
    let r1_target = if delta == corner { 0.0 } else { corner - delta };
    let (split, share, r2_noma, r2_oma) = weak_rates(pair, r1_target)?;
    if r2_oma <= 0.0 {
        return Err(Error::IndeterminateAtCorner { corner });
    }
    Ok(ShiftReport {
        pair: *pair,
        delta,
        r1_target,
        split,
        share,
        r2_noma,
        r2_oma,
        finite_gain: r2_noma / r2_oma,
        asymptotic_gain: relative_gain(pair),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pair(s1: f64, s2: f64) -> SnrPair {
        SnrPair::from_linear(s1, s2).unwrap()
    }

    #[test]
    fn example_inversions() {
        let p = pair(20.0, 1.0);
        let r1 = 21f64.log2() - 1.0;
        assert!((noma_split_for_rate1(&p, r1).unwrap().value() - 0.475).abs() < 1e-12);
        assert!((oma_share_for_rate1(&p, r1).unwrap().value() - 0.7723).abs() < 5e-5);
        assert_eq!(noma_split_for_rate1(&p, 0.0).unwrap().value(), 0.0);
        assert_eq!(oma_share_for_rate1(&p, 0.0).unwrap().value(), 0.0);
        assert_eq!(
            oma_share_for_rate1(&p, corner_rate(&p)).unwrap().value(),
            1.0
        );
        assert_eq!(
            noma_split_for_rate1(&p, corner_rate(&p)).unwrap().value(),
            1.0
        );
    }

    #[test]
    fn fig1_pair_half_corner_split() {
        let p = pair(100.0, 10.0);
        let r1 = 101f64.log2() / 2.0;
        let a = noma_split_for_rate1(&p, r1).unwrap();
        assert!((a.value() - 0.09050).abs() < 5e-6);
        assert!((a.value() - (101f64.sqrt() - 1.0) / 100.0).abs() < 1e-15);
        assert!((noma_rates(&p, a).r1 - r1).abs() < 1e-12);
    }

    #[test]
    fn out_of_range_rates_carry_interval() {
        let p = pair(20.0, 1.0);
        match noma_split_for_rate1(&p, 5.0) {
            Err(Error::RateOutOfRange { min, max, .. }) => {
                assert_eq!(min, 0.0);
                assert_eq!(max, corner_rate(&p));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(oma_share_for_rate1(&p, -0.1).is_err());
        assert!(oma_share_for_rate1(&p, f64::NAN).is_err());
    }

    #[test]
    fn example_shift() {
        let r = rate_shift_study(&pair(20.0, 1.0), 1.0).unwrap();
        assert!((r.split.value() - 0.475).abs() < 1e-6);
        assert!((r.share.value() - 0.7723).abs() < 5e-5);
        assert!((r.r2_noma - 0.4393).abs() < 5e-4);
        assert!((r.r2_oma - 0.2277).abs() < 5e-4);
        assert!((r.finite_gain - 1.929).abs() < 1e-3);
        assert!((r.asymptotic_gain - 2.306).abs() < 5e-4);
    }

    #[test]
    fn small_shift_approaches_slope_ratio() {
        let r = rate_shift_study(&pair(20.0, 1.0), 0.01).unwrap();
        assert!((r.finite_gain - 2.30).abs() < 0.01);
    }

    #[test]
    fn full_shift_gives_unit_gain() {
        let p = pair(20.0, 1.0);
        let r = rate_shift_study(&p, corner_rate(&p)).unwrap();
        assert_eq!(r.r1_target, 0.0);
        assert_eq!(r.finite_gain, 1.0);
    }

    #[test]
    fn shift_rejects_bad_delta() {
        let p = pair(20.0, 1.0);
        assert!(matches!(
            rate_shift_study(&p, 0.0),
            Err(Error::ShiftOutOfRange { .. })
        ));
        assert!(rate_shift_study(&p, 4.5).is_err());
        assert!(rate_shift_study(&p, f64::NAN).is_err());
    }

    #[test]
    fn balanced_shift_rates_agree() {
        for delta in [0.1, 0.5, 1.0, 2.0] {
            let r = rate_shift_study(&pair(10.0, 10.0), delta).unwrap();
            assert!((r.r2_noma - r.r2_oma).abs() < 1e-9);
        }
    }

    #[test]
    fn finite_gain_values() {
        let p = pair(20.0, 1.0);
        assert!((finite_gain(&p, 21f64.log2() - 1.0).unwrap() - 1.929).abs() < 1e-3);
        assert_eq!(finite_gain(&p, 0.0).unwrap(), 1.0);
        assert!((finite_gain(&p, 4.34).unwrap() - 2.27).abs() < 0.02);
        assert!(matches!(
            finite_gain(&p, corner_rate(&p)),
            Err(Error::IndeterminateAtCorner { .. })
        ));
    }

    fn any_pair() -> impl Strategy<Value = SnrPair> {
        (-30.0f64..60.0, 0.0f64..60.0)
            .prop_map(|(s1_db, gap)| SnrPair::from_db(s1_db, s1_db - gap).unwrap())
    }

    proptest! {
        #[test]
        fn knob_round_trips(p in any_pair(), k in 0.0f64..=1.0) {
            let a = PowerSplit::new(k).unwrap();
            let back = noma_split_for_rate1(&p, noma_rates(&p, a).r1).unwrap();
            prop_assert!((back.value() - k).abs() < 1e-12);
            let alpha = TimeShare::new(k).unwrap();
            let back = oma_share_for_rate1(&p, oma_rates(&p, alpha).r1).unwrap();
            prop_assert!((back.value() - k).abs() < 1e-12);
        }

        #[test]
        fn finite_gain_at_least_one(p in any_pair(), frac in 0.0f64..0.999) {
            let g = finite_gain(&p, frac * corner_rate(&p)).unwrap();
            prop_assert!(g >= 1.0 - 1e-12);
        }
    }
}
