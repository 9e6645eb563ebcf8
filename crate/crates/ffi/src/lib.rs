//! C ABI over `noma-core`.
//!
//! Every fallible function returns a [`NomaStatus`] and writes its result
//! through an out-pointer. On failure the out-pointer is left untouched and a
//! message is available from [`noma_last_error_message`] on the same thread.
//! SNR pairs cross the boundary as opaque handles created by
//! [`noma_snr_pair_new`] and released with [`noma_snr_pair_free`]; everything
//! else is a plain `#[repr(C)]` value.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use noma_core::{
    Error, GainReport, LinkConfig, PowerSplit, Regime, Scheme, ShiftReport, SinrEstimate, Snr,
    SnrPair, TimeShare,
};

/// Result code of every fallible call. Enum arguments passed in from C must
/// hold one of the listed values.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NomaStatus {
    Ok = 0,
    NullPointer = 1,
    /// Non-finite, non-positive or otherwise malformed argument.
    InvalidArgument = 2,
    /// Strong-user SNR below weak-user SNR.
    Unordered = 3,
    /// Knob, rate, shift or step outside its feasible interval.
    OutOfRange = 4,
    /// Finite gain requested at the sum-rate corner (0/0).
    Indeterminate = 5,
    /// Formula undefined for this input (e.g. high-SNR approximation with S2 <= 1).
    Domain = 6,
    /// A Rust panic was caught at the boundary.
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NomaScheme {
    Noma = 0,
    Oma = 1,
}

impl From<NomaScheme> for Scheme {
    fn from(s: NomaScheme) -> Self {
        match s {
            NomaScheme::Noma => Scheme::Noma,
            NomaScheme::Oma => Scheme::Oma,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum NomaRegime {
    Low = 0,
    Mixed = 1,
    High = 2,
    #[default]
    Transitional = 3,
}

impl From<Regime> for NomaRegime {
    fn from(r: Regime) -> Self {
        match r {
            Regime::Low => NomaRegime::Low,
            Regime::Mixed => NomaRegime::Mixed,
            Regime::High => NomaRegime::High,
            Regime::Transitional => NomaRegime::Transitional,
        }
    }
}

/// Opaque ordered SNR pair.
pub struct NomaSnrPair(SnrPair);

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct NomaRatePair {
    pub r1: f64,
    pub r2: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct NomaGainReport {
    pub s1: f64,
    pub s2: f64,
    pub slope_oma: f64,
    pub slope_noma: f64,
    pub gain: f64,
    pub bound_log: f64,
    pub bound_ratio: f64,
    pub bound_min: f64,
    pub mixed_approx: f64,
    /// NaN when `has_high_snr_approx` is false.
    pub high_snr_approx: f64,
    pub has_high_snr_approx: bool,
    pub rule_of_thumb: f64,
    pub regime: NomaRegime,
}

impl From<GainReport> for NomaGainReport {
    fn from(r: GainReport) -> Self {
        NomaGainReport {
            s1: r.pair.s1(),
            s2: r.pair.s2(),
            slope_oma: r.slope_oma,
            slope_noma: r.slope_noma,
            gain: r.gain,
            bound_log: r.bound_log,
            bound_ratio: r.bound_ratio,
            bound_min: r.bound_min,
            mixed_approx: r.mixed_approx,
            high_snr_approx: r.high_snr_approx.unwrap_or(f64::NAN),
            has_high_snr_approx: r.high_snr_approx.is_some(),
            rule_of_thumb: r.rule_of_thumb,
            regime: r.regime.into(),
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct NomaShiftReport {
    pub delta: f64,
    pub r1_target: f64,
    pub split: f64,
    pub share: f64,
    pub r2_noma: f64,
    pub r2_oma: f64,
    pub finite_gain: f64,
    pub asymptotic_gain: f64,
}

impl From<ShiftReport> for NomaShiftReport {
    fn from(r: ShiftReport) -> Self {
        NomaShiftReport {
            delta: r.delta,
            r1_target: r.r1_target,
            split: r.split.value(),
            share: r.share.value(),
            r2_noma: r.r2_noma,
            r2_oma: r.r2_oma,
            finite_gain: r.finite_gain,
            asymptotic_gain: r.asymptotic_gain,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct NomaDominanceReport {
    pub points: usize,
    pub max_violation: f64,
    pub max_slack: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct NomaLinkConfig {
    pub power: f64,
    pub noise: f64,
    pub gain1: f64,
    pub gain2: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct NomaSinrEstimate {
    pub user1_sinr: f64,
    pub user2_sinr: f64,
    pub user1_target: f64,
    pub user2_target: f64,
    pub rel_err1: f64,
    pub rel_err2: f64,
    pub tx_power: f64,
    pub samples: usize,
}

impl From<SinrEstimate> for NomaSinrEstimate {
    fn from(e: SinrEstimate) -> Self {
        NomaSinrEstimate {
            user1_sinr: e.user1_sinr,
            user2_sinr: e.user2_sinr,
            user1_target: e.user1_target,
            user2_target: e.user2_target,
            rel_err1: e.rel_err1,
            rel_err2: e.rel_err2,
            tx_power: e.tx_power,
            samples: e.samples,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|e| {
        let mut bytes = e.into_vec();
        bytes.retain(|&b| b != 0);
        CString::new(bytes).expect("nul bytes removed")
    });
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

struct Failure {
    status: NomaStatus,
    message: String,
}

impl Failure {
    fn null(name: &str) -> Self {
        Failure {
            status: NomaStatus::NullPointer,
            message: format!("{name} is null"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::NonPositive { .. }
            | Error::NonFinite { .. }
            | Error::TooFew { .. }
            | Error::InvalidSweep(_) => NomaStatus::InvalidArgument,
            Error::Unordered { .. } => NomaStatus::Unordered,
            Error::KnobOutOfRange { .. }
            | Error::RateOutOfRange { .. }
            | Error::ShiftOutOfRange { .. }
            | Error::StepOutOfRange { .. } => NomaStatus::OutOfRange,
            Error::IndeterminateAtCorner { .. } => NomaStatus::Indeterminate,
            Error::HighSnrDomain { .. } | Error::DegenerateDifference { .. } => NomaStatus::Domain,
        };
        Failure {
            status,
            message: e.to_string(),
        }
    }
}

fn run(f: impl FnOnce() -> Result<(), Failure>) -> NomaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            NomaStatus::Ok
        }
        Ok(Err(failure)) => {
            set_last_error(failure.message);
            failure.status
        }
        Err(_) => {
            set_last_error("panic in noma-core".into());
            NomaStatus::Panic
        }
    }
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::null("out"));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_pair(out: *mut *mut NomaSnrPair, pair: SnrPair) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::null("out"));
    }
    out.write(Box::into_raw(Box::new(NomaSnrPair(pair))));
    Ok(())
}

unsafe fn pair_ref<'a>(pair: *const NomaSnrPair) -> Result<&'a SnrPair, Failure> {
    pair.as_ref()
        .map(|p| &p.0)
        .ok_or_else(|| Failure::null("pair"))
}

/// Static description of a status code. Never null; never free it.
#[no_mangle]
pub extern "C" fn noma_status_message(status: NomaStatus) -> *const c_char {
    let s: &'static CStr = match status {
        NomaStatus::Ok => c"ok",
        NomaStatus::NullPointer => c"null pointer argument",
        NomaStatus::InvalidArgument => c"invalid argument",
        NomaStatus::Unordered => c"strong-user SNR below weak-user SNR",
        NomaStatus::OutOfRange => c"argument outside its feasible interval",
        NomaStatus::Indeterminate => c"indeterminate at the sum-rate corner",
        NomaStatus::Domain => c"formula undefined for this input",
        NomaStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

/// Message of the last failed call on this thread, or null after a success.
/// The pointer stays valid until the next call into this library on the same
/// thread.
#[no_mangle]
pub extern "C" fn noma_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Creates a pair from linear SNRs; `s1` must not be below `s2`.
///
/// # Safety
/// `out` must be null or valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn noma_snr_pair_new(
    s1: f64,
    s2: f64,
    out: *mut *mut NomaSnrPair,
) -> NomaStatus {
    run(|| put_pair(out, SnrPair::from_linear(s1, s2)?))
}

/// Creates a pair from SNRs in dB.
///
/// # Safety
/// `out` must be null or valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn noma_snr_pair_from_db(
    s1_db: f64,
    s2_db: f64,
    out: *mut *mut NomaSnrPair,
) -> NomaStatus {
    run(|| put_pair(out, SnrPair::from_db(s1_db, s2_db)?))
}

/// Creates a pair from two SNRs in either order.
///
/// # Safety
/// `out` must be null or valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn noma_snr_pair_ordered(
    a: f64,
    b: f64,
    out: *mut *mut NomaSnrPair,
) -> NomaStatus {
    run(|| put_pair(out, SnrPair::ordered(Snr::new(a)?, Snr::new(b)?)))
}

/// # Safety
/// `pair` must be null or a handle from one of the constructors that has not
/// been freed yet.
#[no_mangle]
pub unsafe extern "C" fn noma_snr_pair_free(pair: *mut NomaSnrPair) {
    if !pair.is_null() {
        drop(Box::from_raw(pair));
    }
}

/// Writes the linear strong-user and weak-user SNRs.
///
/// # Safety
/// `pair` must be a live handle; `s1`, `s2` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn noma_snr_pair_values(
    pair: *const NomaSnrPair,
    s1: *mut f64,
    s2: *mut f64,
) -> NomaStatus {
    run(|| {
        let p = pair_ref(pair)?;
        if s2.is_null() {
            return Err(Failure::null("s2"));
        }
        put(s1, p.s1())?;
        put(s2, p.s2())
    })
}

/// # Safety
/// `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn noma_db_to_linear(db: f64, out: *mut f64) -> NomaStatus {
    run(|| put(out, Snr::from_db(db)?.value()))
}

/// # Safety
/// `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn noma_linear_to_db(linear: f64, out: *mut f64) -> NomaStatus {
    run(|| put(out, Snr::new(linear)?.to_db()))
}

/// SNR `power * gain / noise` of a link.
///
/// # Safety
/// `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn noma_snr_from_link(
    power: f64,
    gain: f64,
    noise: f64,
    out: *mut f64,
) -> NomaStatus {
    run(|| put(out, noma_core::snr_from_link(power, gain, noise)?.value()))
}

/// Superposition-coding rates at power split `a`.
///
/// # Safety
/// `pair` must be a live handle; `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn noma_superposition_rates(
    pair: *const NomaSnrPair,
    a: f64,
    out: *mut NomaRatePair,
) -> NomaStatus {
    run(|| {
        let r = noma_core::noma_rates(pair_ref(pair)?, PowerSplit::new(a)?);
        put(out, NomaRatePair { r1: r.r1, r2: r.r2 })
    })
}

/// Time-sharing rates at share `alpha`.
///
/// # Safety
/// `pair` must be a live handle; `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn noma_time_sharing_rates(
    pair: *const NomaSnrPair,
    alpha: f64,
    out: *mut NomaRatePair,
) -> NomaStatus {
    run(|| {
        let r = noma_core::oma_rates(pair_ref(pair)?, TimeShare::new(alpha)?);
        put(out, NomaRatePair { r1: r.r1, r2: r.r2 })
    })
}

/// Fills `n` boundary samples, uniform in the knob, into caller-owned arrays
/// of length `n` each.
///
/// # Safety
/// `pair` must be a live handle; `knobs`, `r1`, `r2` must each be valid for
/// writing `n` doubles.
#[no_mangle]
pub unsafe extern "C" fn noma_frontier(
    pair: *const NomaSnrPair,
    scheme: NomaScheme,
    n: usize,
    knobs: *mut f64,
    r1: *mut f64,
    r2: *mut f64,
) -> NomaStatus {
    run(|| {
        let samples = noma_core::region::frontier(pair_ref(pair)?, scheme.into(), n)?;
        for (name, p) in [("knobs", knobs), ("r1", r1), ("r2", r2)] {
            if p.is_null() {
                return Err(Failure::null(name));
            }
        }
        let knobs = std::slice::from_raw_parts_mut(knobs, n);
        let r1 = std::slice::from_raw_parts_mut(r1, n);
        let r2 = std::slice::from_raw_parts_mut(r2, n);
        for (i, s) in samples.iter().enumerate() {
            knobs[i] = s.knob.value();
            r1[i] = s.rates.r1;
            r2[i] = s.rates.r2;
        }
        Ok(())
    })
}

/// # Safety
/// `pair` must be a live handle; `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn noma_gain_report(
    pair: *const NomaSnrPair,
    out: *mut NomaGainReport,
) -> NomaStatus {
    run(|| put(out, noma_core::gain_report(pair_ref(pair)?).into()))
}

/// Gain report with custom regime thresholds (`0 < low <= high`).
///
/// # Safety
/// `pair` must be a live handle; `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn noma_gain_report_with_thresholds(
    pair: *const NomaSnrPair,
    low: f64,
    high: f64,
    out: *mut NomaGainReport,
) -> NomaStatus {
    run(|| {
        if !(low > 0.0 && low <= high && high.is_finite()) {
            return Err(Failure {
                status: NomaStatus::InvalidArgument,
                message: format!("need 0 < low <= high, got {low} and {high}"),
            });
        }
        let th = noma_core::RegimeThresholds { low, high };
        put(out, noma_core::gain_report_with(pair_ref(pair)?, th).into())
    })
}

/// # Safety
/// `pair` must be a live handle; `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn noma_relative_gain(pair: *const NomaSnrPair, out: *mut f64) -> NomaStatus {
    run(|| put(out, noma_core::relative_gain(pair_ref(pair)?)))
}

/// # Safety
/// `pair` must be a live handle; `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn noma_high_snr_approx(
    pair: *const NomaSnrPair,
    out: *mut f64,
) -> NomaStatus {
    run(|| put(out, noma_core::high_snr_approx(pair_ref(pair)?)?))
}

/// Power split giving the strong user rate `r1`.
///
/// # Safety
/// `pair` must be a live handle; `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn noma_split_for_rate1(
    pair: *const NomaSnrPair,
    r1: f64,
    out: *mut f64,
) -> NomaStatus {
    run(|| {
        put(
            out,
            noma_core::noma_split_for_rate1(pair_ref(pair)?, r1)?.value(),
        )
    })
}

/// Time share giving the strong user rate `r1`.
///
/// # Safety
/// `pair` must be a live handle; `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn noma_share_for_rate1(
    pair: *const NomaSnrPair,
    r1: f64,
    out: *mut f64,
) -> NomaStatus {
    run(|| {
        put(
            out,
            noma_core::oma_share_for_rate1(pair_ref(pair)?, r1)?.value(),
        )
    })
}

/// # Safety
/// `pair` must be a live handle; `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn noma_finite_gain(
    pair: *const NomaSnrPair,
    r1: f64,
    out: *mut f64,
) -> NomaStatus {
    run(|| put(out, noma_core::finite_gain(pair_ref(pair)?, r1)?))
}

/// # Safety
/// `pair` must be a live handle; `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn noma_rate_shift_study(
    pair: *const NomaSnrPair,
    delta: f64,
    out: *mut NomaShiftReport,
) -> NomaStatus {
    run(|| {
        put(
            out,
            noma_core::rate_shift_study(pair_ref(pair)?, delta)?.into(),
        )
    })
}

/// # Safety
/// `pair` must be a live handle; `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn noma_slope_fd(
    pair: *const NomaSnrPair,
    scheme: NomaScheme,
    h: f64,
    out: *mut f64,
) -> NomaStatus {
    run(|| put(out, noma_core::slope_fd(pair_ref(pair)?, scheme.into(), h)?))
}

/// # Safety
/// `pair` must be a live handle; `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn noma_region_dominance_check(
    pair: *const NomaSnrPair,
    n: usize,
    out: *mut NomaDominanceReport,
) -> NomaStatus {
    run(|| {
        let r = noma_core::region_dominance_check(pair_ref(pair)?, n)?;
        put(
            out,
            NomaDominanceReport {
                points: r.points,
                max_violation: r.max_violation,
                max_slack: r.max_slack,
            },
        )
    })
}

/// Seeded Monte-Carlo SINR estimate of the superposition signal.
///
/// # Safety
/// `config` and `out` must be valid for reading and writing respectively.
#[no_mangle]
pub unsafe extern "C" fn noma_sinr_monte_carlo(
    config: *const NomaLinkConfig,
    a: f64,
    samples: usize,
    seed: u64,
    out: *mut NomaSinrEstimate,
) -> NomaStatus {
    run(|| {
        let c = config.as_ref().ok_or_else(|| Failure::null("config"))?;
        let link = LinkConfig {
            power: c.power,
            noise: c.noise,
            gain1: c.gain1,
            gain2: c.gain2,
        };
        let est = noma_core::sinr_monte_carlo(&link, PowerSplit::new(a)?, samples, seed)?;
        put(out, est.into())
    })
}
