#ifndef NOMA_H
#define NOMA_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum NomaRegime {
  NOMA_REGIME_LOW = 0,
  NOMA_REGIME_MIXED = 1,
  NOMA_REGIME_HIGH = 2,
  NOMA_REGIME_TRANSITIONAL = 3,
} NomaRegime;

typedef enum NomaScheme {
  NOMA_SCHEME_NOMA = 0,
  NOMA_SCHEME_OMA = 1,
} NomaScheme;

// Result code of every fallible call. Enum arguments passed in from C must
// hold one of the listed values.
typedef enum NomaStatus {
  NOMA_STATUS_OK = 0,
  NOMA_STATUS_NULL_POINTER = 1,
  // Non-finite, non-positive or otherwise malformed argument.
  NOMA_STATUS_INVALID_ARGUMENT = 2,
  // Strong-user SNR below weak-user SNR.
  NOMA_STATUS_UNORDERED = 3,
  // Knob, rate, shift or step outside its feasible interval.
  NOMA_STATUS_OUT_OF_RANGE = 4,
  // Finite gain requested at the sum-rate corner (0/0).
  NOMA_STATUS_INDETERMINATE = 5,
  // Formula undefined for this input (e.g. high-SNR approximation with S2 <= 1).
  NOMA_STATUS_DOMAIN = 6,
  // A Rust panic was caught at the boundary.
  NOMA_STATUS_PANIC = 7,
} NomaStatus;

// Opaque ordered SNR pair.
typedef struct NomaSnrPair NomaSnrPair;

typedef struct NomaRatePair {
  double r1;
  double r2;
} NomaRatePair;

typedef struct NomaGainReport {
  double s1;
  double s2;
  double slope_oma;
  double slope_noma;
  double gain;
  double bound_log;
  double bound_ratio;
  double bound_min;
  double mixed_approx;
  // NaN when `has_high_snr_approx` is false.
  double high_snr_approx;
  bool has_high_snr_approx;
  double rule_of_thumb;
  enum NomaRegime regime;
} NomaGainReport;

typedef struct NomaShiftReport {
  double delta;
  double r1_target;
  double split;
  double share;
  double r2_noma;
  double r2_oma;
  double finite_gain;
  double asymptotic_gain;
} NomaShiftReport;

typedef struct NomaDominanceReport {
  size_t points;
  double max_violation;
  double max_slack;
} NomaDominanceReport;

typedef struct NomaLinkConfig {
  double power;
  double noise;
  double gain1;
  double gain2;
} NomaLinkConfig;

typedef struct NomaSinrEstimate {
  double user1_sinr;
  double user2_sinr;
  double user1_target;
  double user2_target;
  double rel_err1;
  double rel_err2;
  double tx_power;
  size_t samples;
} NomaSinrEstimate;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Static description of a status code. Never null; never free it.
const char *noma_status_message(enum NomaStatus status);

// Message of the last failed call on this thread, or null after a success.
// The pointer stays valid until the next call into this library on the same
// thread.
const char *noma_last_error_message(void);

// Creates a pair from linear SNRs; `s1` must not be below `s2`.
//
// # Safety
// `out` must be null or valid for writing one pointer.
enum NomaStatus noma_snr_pair_new(double s1, double s2, struct NomaSnrPair **out);

// Creates a pair from SNRs in dB.
//
// # Safety
// `out` must be null or valid for writing one pointer.
enum NomaStatus noma_snr_pair_from_db(double s1_db, double s2_db, struct NomaSnrPair **out);

// Creates a pair from two SNRs in either order.
//
// # Safety
// `out` must be null or valid for writing one pointer.
enum NomaStatus noma_snr_pair_ordered(double a, double b, struct NomaSnrPair **out);

// # Safety
// `pair` must be null or a handle from one of the constructors that has not
// been freed yet.
void noma_snr_pair_free(struct NomaSnrPair *pair);

// Writes the linear strong-user and weak-user SNRs.
//
// # Safety
// `pair` must be a live handle; `s1`, `s2` must be valid for writing.
enum NomaStatus noma_snr_pair_values(const struct NomaSnrPair *pair, double *s1, double *s2);

// # Safety
// `out` must be valid for writing.
enum NomaStatus noma_db_to_linear(double db, double *out);

// # Safety
// `out` must be valid for writing.
enum NomaStatus noma_linear_to_db(double linear, double *out);

// SNR `power * gain / noise` of a link.
//
// # Safety
// `out` must be valid for writing.
enum NomaStatus noma_snr_from_link(double power, double gain, double noise, double *out);

// Superposition-coding rates at power split `a`.
//
// # Safety
// `pair` must be a live handle; `out` must be valid for writing.
enum NomaStatus noma_superposition_rates(const struct NomaSnrPair *pair,
                                         double a,
                                         struct NomaRatePair *out);

// Time-sharing rates at share `alpha`.
//
// # Safety
// `pair` must be a live handle; `out` must be valid for writing.
enum NomaStatus noma_time_sharing_rates(const struct NomaSnrPair *pair,
                                        double alpha,
                                        struct NomaRatePair *out);

// Fills `n` boundary samples, uniform in the knob, into caller-owned arrays
// of length `n` each.
//
// # Safety
// `pair` must be a live handle; `knobs`, `r1`, `r2` must each be valid for
// writing `n` doubles.
enum NomaStatus noma_frontier(const struct NomaSnrPair *pair,
                              enum NomaScheme scheme,
                              size_t n,
                              double *knobs,
                              double *r1,
                              double *r2);

// # Safety
// `pair` must be a live handle; `out` must be valid for writing.
enum NomaStatus noma_gain_report(const struct NomaSnrPair *pair, struct NomaGainReport *out);

// Gain report with custom regime thresholds (`0 < low <= high`).
//
// # Safety
// `pair` must be a live handle; `out` must be valid for writing.
enum NomaStatus noma_gain_report_with_thresholds(const struct NomaSnrPair *pair,
                                                 double low,
                                                 double high,
                                                 struct NomaGainReport *out);

// # Safety
// `pair` must be a live handle; `out` must be valid for writing.
enum NomaStatus noma_relative_gain(const struct NomaSnrPair *pair, double *out);

// # Safety
// `pair` must be a live handle; `out` must be valid for writing.
enum NomaStatus noma_high_snr_approx(const struct NomaSnrPair *pair, double *out);

// Power split giving the strong user rate `r1`.
//
// # Safety
// `pair` must be a live handle; `out` must be valid for writing.
enum NomaStatus noma_split_for_rate1(const struct NomaSnrPair *pair, double r1, double *out);

// Time share giving the strong user rate `r1`.
//
// # Safety
// `pair` must be a live handle; `out` must be valid for writing.
enum NomaStatus noma_share_for_rate1(const struct NomaSnrPair *pair, double r1, double *out);

// # Safety
// `pair` must be a live handle; `out` must be valid for writing.
enum NomaStatus noma_finite_gain(const struct NomaSnrPair *pair, double r1, double *out);

// # Safety
// `pair` must be a live handle; `out` must be valid for writing.
enum NomaStatus noma_rate_shift_study(const struct NomaSnrPair *pair,
                                      double delta,
                                      struct NomaShiftReport *out);

// # Safety
// `pair` must be a live handle; `out` must be valid for writing.
enum NomaStatus noma_slope_fd(const struct NomaSnrPair *pair,
                              enum NomaScheme scheme,
                              double h,
                              double *out);

// # Safety
// `pair` must be a live handle; `out` must be valid for writing.
enum NomaStatus noma_region_dominance_check(const struct NomaSnrPair *pair,
                                            size_t n,
                                            struct NomaDominanceReport *out);

// Seeded Monte-Carlo SINR estimate of the superposition signal.
//
// # Safety
// `config` and `out` must be valid for reading and writing respectively.
enum NomaStatus noma_sinr_monte_carlo(const struct NomaLinkConfig *config,
                                      double a,
                                      size_t samples,
                                      uint64_t seed,
                                      struct NomaSinrEstimate *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NOMA_H */
