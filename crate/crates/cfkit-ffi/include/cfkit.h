#ifndef CFKIT_H
#define CFKIT_H

/* Generated by cbindgen from cfkit-ffi. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum {
  CFKIT_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  CFKIT_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  CFKIT_STATUS_INVALID_UTF8 = 2,
  /**
   * Bad input text or arguments (expressions, rationals, presets, files).
   */
  CFKIT_STATUS_PARSE_ERROR = 3,
  /**
   * A numeric failure during evaluation (pole, undefined convergent,
   * uncertifiable bracket).
   */
  CFKIT_STATUS_NUMERIC_ERROR = 4,
  /**
   * The library panicked; state is unchanged but the call did nothing.
   */
  CFKIT_STATUS_INTERNAL_ERROR = 5,
} CfkitStatus;

/**
 * Opaque continued fraction handle.
 */
typedef struct CfkitCf CfkitCf;

/**
 * Verification outcome; `verified` holds exactly when
 * `achieved_decimals >= requested_decimals`. `achieved_decimals` of
 * `UINT32_MAX` encodes an exact rational hit.
 */
typedef struct {
  bool verified;
  uint32_t achieved_decimals;
  uint32_t requested_decimals;
  uint32_t depth_used;
} CfkitVerifyResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null if none.
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *cfkit_last_error_message(void);

/**
 * Builds one of the built-in fractions: "conjecture-pi4", "euler-pi4" or
 * "gauss-pi4".
 *
 * # Safety
 * `name` must be a valid nul-terminated string; `out` a valid pointer.
 */
CfkitStatus cfkit_cf_preset(const char *name, CfkitCf **out);

/**
 * Builds a fraction from closed forms for a_n and b_n plus an optional
 * leading term b0 ("p/q"; null means 0).
 *
 * # Safety
 * Expression pointers must be valid nul-terminated strings (`b0` may be
 * null); `out` must be a valid pointer.
 */
CfkitStatus cfkit_cf_from_exprs(const char *a_expr,
                                const char *b_expr,
                                const char *b0,
                                CfkitCf **out);

/**
 * Parses a CF-spec JSON document (the same format the CLI emits).
 *
 * # Safety
 * `json` must be a valid nul-terminated string; `out` a valid pointer.
 */
CfkitStatus cfkit_cf_from_json(const char *json, CfkitCf **out);

/**
 * Serializes the fraction as CF-spec JSON.
 *
 * # Safety
 * `cf` must be a live handle; `out` a valid pointer. Free the string with
 * `cfkit_string_free`.
 */
CfkitStatus cfkit_cf_to_json(const CfkitCf *cf, char **out);

/**
 * Releases a handle. Null is a no-op.
 *
 * # Safety
 * `cf` must be null or a handle from this library, freed at most once.
 */
void cfkit_cf_free(CfkitCf *cf);

/**
 * Convergent f_depth as an exact rational string "p/q".
 *
 * # Safety
 * `cf` must be a live handle; `out` a valid pointer.
 */
CfkitStatus cfkit_convergent(const CfkitCf *cf, uint32_t depth, char **out);

/**
 * Convergent f_depth as a decimal string truncated at `digits` places.
 *
 * # Safety
 * `cf` must be a live handle; `out` a valid pointer.
 */
CfkitStatus cfkit_convergent_decimal(const CfkitCf *cf,
                                     uint32_t depth,
                                     uint32_t digits,
                                     char **out);

/**
 * Applies the equivalence transformation given by the scaling closed form
 * (e.g. "-(2*n-1)"), producing a new handle.
 *
 * # Safety
 * `cf` must be a live handle; `scale_expr` a valid nul-terminated string;
 * `out` a valid pointer.
 */
CfkitStatus cfkit_transform_scale(const CfkitCf *cf, const char *scale_expr, CfkitCf **out);

/**
 * Ratio-test diagnostics as a JSON object
 * {"limit", "regime", "rho_monotone_from", "abs_b_sum_diverges"}.
 *
 * # Safety
 * `cf` must be a live handle; `out` a valid pointer.
 */
CfkitStatus cfkit_diagnose(const CfkitCf *cf, uint32_t probe_depth, char **out);

/**
 * Verifies the fraction against a constant target (e.g. "-pi/4") to
 * `digits` certified decimals, searching depths up to `max_depth`. Returns
 * Ok with `result->verified` false when the precision is not reached.
 *
 * # Safety
 * `cf` must be a live handle; `target` a valid nul-terminated string;
 * `result` a valid pointer.
 */
CfkitStatus cfkit_verify(const CfkitCf *cf,
                         const char *target,
                         uint32_t digits,
                         uint32_t max_depth,
                         CfkitVerifyResult *result);

/**
 * π truncated to `digits` decimal places, certified by the interval oracle.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
CfkitStatus cfkit_pi_decimal(uint32_t digits, char **out);

/**
 * Releases a string returned by this library. Null is a no-op.
 *
 * # Safety
 * `s` must be null or a string from this library, freed at most once.
 */
void cfkit_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CFKIT_H */
