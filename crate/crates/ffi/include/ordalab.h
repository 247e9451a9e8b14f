#ifndef ORDALAB_H
#define ORDALAB_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. `ORDALAB_STATUS_OK` is zero; every other value is an error.
 */
typedef enum OrdalabStatus {
  ORDALAB_STATUS_OK = 0,
  ORDALAB_STATUS_NULL_POINTER = 1,
  ORDALAB_STATUS_INVALID_UTF8 = 2,
  ORDALAB_STATUS_PARSE = 3,
  ORDALAB_STATUS_INVALID_ARGUMENT = 4,
  ORDALAB_STATUS_UNKNOWN = 5,
  ORDALAB_STATUS_NOT_POSITIVE = 6,
  ORDALAB_STATUS_CAPABILITY = 7,
  ORDALAB_STATUS_PRECONDITION = 8,
  ORDALAB_STATUS_NOT_INVERTIBLE = 9,
  ORDALAB_STATUS_EVALUATION = 10,
  ORDALAB_STATUS_DIMENSION = 11,
  ORDALAB_STATUS_OUT_OF_RANGE = 12,
  ORDALAB_STATUS_PANIC = 13,
} OrdalabStatus;

/**
 * Convergence tests for [`ordalab_series`].
 */
typedef enum OrdalabSeriesTest {
  ORDALAB_SERIES_TEST_CONDENSATION = 0,
  ORDALAB_SERIES_TEST_RATIO = 1,
  ORDALAB_SERIES_TEST_ALTERNATING = 2,
} OrdalabSeriesTest;

/**
 * Outcome of one check record.
 */
typedef enum OrdalabRecordStatus {
  ORDALAB_RECORD_STATUS_PASS = 0,
  ORDALAB_RECORD_STATUS_VIOLATION = 1,
  ORDALAB_RECORD_STATUS_UNVERIFIABLE = 2,
} OrdalabRecordStatus;

/**
 * An exact rational number.
 */
typedef struct OrdalabRational OrdalabRational;

/**
 * Records of one run and their JSON-lines rendering.
 */
typedef struct OrdalabReport OrdalabReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *ordalab_version(void);

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next ordalab call on the same thread.
 */
const char *ordalab_last_error(void);

/**
 * Free a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` is null or was returned through a `char **` out-parameter of this
 * library and not yet freed.
 */
void ordalab_string_free(char *s);

/**
 * Number of registered structures.
 */
size_t ordalab_structure_count(void);

/**
 * Registry key of structure `index` as an owned string.
 *
 * # Safety
 * `out` is valid for a pointer-sized write.
 */
OrdalabStatus ordalab_structure_key(size_t index, char **out);

/**
 * Run `ordalab check` from a JSON configuration with keys `structure`,
 * `suite`, and optionally `grid`, `horizon`, `seed`.
 *
 * # Safety
 * `config_json` is a NUL-terminated string; `out` is valid for a
 * pointer-sized write.
 */
OrdalabStatus ordalab_check(const char *config_json, OrdalabReport **out);

/**
 * Run a convergence test on `Σ_{n≥1} expr` in the structure `structure`.
 *
 * # Safety
 * `expr` and `structure` are NUL-terminated strings; `out` is valid for a
 * pointer-sized write.
 */
OrdalabStatus ordalab_series(const char *expr,
                             const char *structure,
                             OrdalabSeriesTest test,
                             uint64_t horizon,
                             OrdalabReport **out);

/**
 * Run the Albert pseudonorm suite on an algebra given as a JSON table
 * `{"name": ..., "n": ..., "gamma": [...]}`.
 *
 * # Safety
 * `table_json` is a NUL-terminated string; `out` is valid for a
 * pointer-sized write.
 */
OrdalabStatus ordalab_algebra(const char *table_json,
                              uint64_t seed,
                              bool associativity,
                              OrdalabReport **out);

/**
 * Process exit code of the report: 0 all pass, 1 a violation, 3
 * unverifiable; -1 for a null report.
 *
 * # Safety
 * `report` is null or a live report.
 */
int32_t ordalab_report_exit_code(const OrdalabReport *report);

/**
 * Number of records; 0 for a null report.
 *
 * # Safety
 * `report` is null or a live report.
 */
size_t ordalab_report_len(const OrdalabReport *report);

/**
 * Status of record `index`.
 *
 * # Safety
 * `report` is a live report; `out` is valid for a write.
 */
OrdalabStatus ordalab_report_record_status(const OrdalabReport *report,
                                           size_t index,
                                           OrdalabRecordStatus *out);

/**
 * JSON-lines rendering, owned by the report; null for a null report.
 *
 * # Safety
 * `report` is null or a live report.
 */
const char *ordalab_report_json(const OrdalabReport *report);

/**
 * Free a report. Null is ignored.
 *
 * # Safety
 * `report` is null or a report from this library not yet freed.
 */
void ordalab_report_free(OrdalabReport *report);

/**
 * Parse `"a"` or `"a/b"` into an exact rational.
 *
 * # Safety
 * `text` is a NUL-terminated string; `out` is valid for a pointer-sized
 * write.
 */
OrdalabStatus ordalab_rational_parse(const char *text, OrdalabRational **out);

/**
 * Reduced `"a/b"` form (or `"a"` for integers) as an owned string.
 *
 * # Safety
 * `value` is a live rational; `out` is valid for a pointer-sized write.
 */
OrdalabStatus ordalab_rational_to_string(const OrdalabRational *value, char **out);

/**
 * Free a rational. Null is ignored.
 *
 * # Safety
 * `value` is null or a rational from this library not yet freed.
 */
void ordalab_rational_free(OrdalabRational *value);

/**
 * p-adic norm `|value|_p = p^exponent`, with `*is_zero` set for zero.
 *
 * # Safety
 * `value` is a live rational; `is_zero` and `exponent` are valid for writes.
 */
OrdalabStatus ordalab_padic_norm(const OrdalabRational *value,
                                 uint64_t p,
                                 bool *is_zero,
                                 int64_t *exponent);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ORDALAB_H */
