/* C interface for the oddparts library. Generated by cbindgen; do not edit. */

#ifndef ODDPARTS_H
#define ODDPARTS_H



#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call in this ABI.
typedef enum OddpartsStatus {
  ODDPARTS_STATUS_OK = 0,
  // A required pointer argument was NULL.
  ODDPARTS_STATUS_NULL_POINTER = 1,
  // A string argument was not valid UTF-8.
  ODDPARTS_STATUS_INVALID_UTF8 = 2,
  // A string argument did not parse (rational, family, suite name).
  ODDPARTS_STATUS_PARSE_ERROR = 3,
  // The evaluation point violates the required domain predicate.
  ODDPARTS_STATUS_DOMAIN_ERROR = 4,
  // The argument must be a prime power.
  ODDPARTS_STATUS_NOT_A_PRIME_POWER = 5,
  // The requested case has no closed form (for example p^r = 2).
  ODDPARTS_STATUS_UNSUPPORTED_CASE = 6,
  // The family is not defined at the requested index k.
  ODDPARTS_STATUS_UNSUPPORTED_K = 7,
  // The tail estimate diverges at this truncation depth.
  ODDPARTS_STATUS_TAIL_DIVERGES = 8,
  // An index is outside the object's range, or a count does not fit
  // in 64 bits.
  ODDPARTS_STATUS_OUT_OF_RANGE = 9,
  // A library invariant failed; not a valid input condition.
  ODDPARTS_STATUS_INTERNAL_ERROR = 10,
} OddpartsStatus;

// Opaque handle: the brute-force Q_k(n) histogram table.
typedef struct OddpartsQTable OddpartsQTable;

// Opaque handle: a power series truncated at a fixed order, with exact
// rational coefficients.
typedef struct OddpartsSeries OddpartsSeries;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Static description of a status code; never free the result.
const char *oddparts_status_describe(enum OddpartsStatus status);

// Release a string returned by this library. NULL is a no-op.
//
// # Safety
// `s` must be a pointer previously returned through an out-parameter of
// this library and not yet freed.
void oddparts_string_free(char *s);

// q(n), the number of partitions of n into odd parts, as a decimal
// string (the value outgrows 64 bits near n = 900).
//
// # Safety
// `out` must be a valid pointer.
enum OddpartsStatus oddparts_q_string(uint64_t n, char **out);

// F_n with F_0 = 0, F_1 = 1, as a decimal string.
//
// # Safety
// `out` must be a valid pointer.
enum OddpartsStatus oddparts_fibonacci_string(uint64_t n, char **out);

// Q_1(n): the number of odd divisors of n (0 when n = 0).
//
// # Safety
// `out` must be a valid pointer.
enum OddpartsStatus oddparts_q1(uint64_t n, uint64_t *out);

// Q_2(n) in closed form: 0 for odd n, floor(n/4) for even n.
//
// # Safety
// `out` must be a valid pointer.
enum OddpartsStatus oddparts_q2(uint64_t n, uint64_t *out);

// Q_{p^r}(n) in closed form, for prime powers p^r except 2.
//
// # Safety
// `out` must be a valid pointer.
enum OddpartsStatus oddparts_q_prime_power(uint64_t pr, uint64_t n, uint64_t *out);

// Build the table for n = 1..=max_n by enumerating every odd partition
// of every n; cost grows rapidly, n <= 100 stays comfortable. When
// `annotate` is set, every entry with a known closed form is
// cross-checked against it (InternalError on disagreement).
//
// # Safety
// `out` must be a valid pointer.
enum OddpartsStatus oddparts_qtable_build(uint64_t max_n,
                                          bool annotate,
                                          struct OddpartsQTable **out);

// Release a table handle. NULL is a no-op.
//
// # Safety
// `table` must come from `oddparts_qtable_build` and not be used after.
void oddparts_qtable_free(struct OddpartsQTable *table);

// Largest n covered by the table; 0 if `table` is NULL.
//
// # Safety
// `table` must be a live handle or NULL.
uint64_t oddparts_qtable_max_n(const struct OddpartsQTable *table);

// Q_k(n) from the table. OutOfRange when n is not a table row.
//
// # Safety
// `table` must be a live handle; `out` must be a valid pointer.
enum OddpartsStatus oddparts_qtable_entry(const struct OddpartsQTable *table,
                                          uint64_t n,
                                          uint64_t k,
                                          uint64_t *out);

// q(n) as the row total of the table. OutOfRange when n is not a row
// or the count exceeds 64 bits.
//
// # Safety
// `table` must be a live handle; `out` must be a valid pointer.
enum OddpartsStatus oddparts_qtable_q(const struct OddpartsQTable *table,
                                      uint64_t n,
                                      uint64_t *out);

// prod_{j>=1} (1 + x^j) through x^order: the coefficients are q(n).
//
// # Safety
// `out` must be a valid pointer.
enum OddpartsStatus oddparts_series_pochhammer(uint64_t order, struct OddpartsSeries **out);

// prod_{j>=0} (1 - x^{2j+1}) through x^order: the reciprocal of the
// previous series.
//
// # Safety
// `out` must be a valid pointer.
enum OddpartsStatus oddparts_series_odd_pochhammer(uint64_t order, struct OddpartsSeries **out);

// sum_{m>=1} x^m/(1 - x^{2m}) through x^order: coefficient n counts the
// odd divisors of n.
//
// # Safety
// `out` must be a valid pointer.
enum OddpartsStatus oddparts_series_lambert(uint64_t order, struct OddpartsSeries **out);

// The Q_{p^r} generating function through x^order, prime powers > 2.
//
// # Safety
// `out` must be a valid pointer.
enum OddpartsStatus oddparts_series_prime_power_gf(uint64_t pr,
                                                   uint64_t order,
                                                   struct OddpartsSeries **out);

// Release a series handle. NULL is a no-op.
//
// # Safety
// `series` must come from a series constructor and not be used after.
void oddparts_series_free(struct OddpartsSeries *series);

// Truncation order of the series; 0 if `series` is NULL.
//
// # Safety
// `series` must be a live handle or NULL.
uint64_t oddparts_series_order(const struct OddpartsSeries *series);

// Coefficient of x^n as an exact `p/q` string (`p` alone when the
// coefficient is an integer). OutOfRange beyond the truncation order.
//
// # Safety
// `series` must be a live handle; `out` must be a valid pointer.
enum OddpartsStatus oddparts_series_coeff(const struct OddpartsSeries *series,
                                          uint64_t n,
                                          char **out);

// Evaluate one bound family member at the exact rational `x` ("p/q").
// `k` indexes the Ak/Bk/Bk-closed/Rk/mixed2/mixed3 families and must be
// negative for the corollaries; `pset` is a comma-separated subset of P
// for the corollaries (NULL means {3}) and is ignored otherwise. The
// result is written as an exact `p/q` string.
//
// # Safety
// `family` and `x` must be NUL-terminated strings; `pset` must be one
// or NULL; `out` must be a valid pointer.
enum OddpartsStatus oddparts_bound(const char *family,
                                   int64_t k,
                                   const char *x,
                                   const char *pset,
                                   char **out);

// Enclose sum_{n>=1} x^n/(1-x^{2n}) with `terms` exact terms plus a
// certified tail bound: the sum lies in [lo, hi].
//
// # Safety
// `x` must be a NUL-terminated string; the out-pointers must be valid.
enum OddpartsStatus oddparts_enclose_sum(const char *x,
                                         uint64_t terms,
                                         char **out_lo,
                                         char **out_hi);

// Enclose prod_{n>=1} (1 + x^n). TailDiverges when the tail estimate
// does not apply at this depth; `oddparts_product_partial` still gives
// the certified lower bound then.
//
// # Safety
// `x` must be a NUL-terminated string; the out-pointers must be valid.
enum OddpartsStatus oddparts_enclose_product(const char *x,
                                             uint64_t terms,
                                             char **out_lo,
                                             char **out_hi);

// The exact partial product prod_{n=1}^{terms} (1 + x^n), always a
// valid lower bound on the infinite product.
//
// # Safety
// `x` must be a NUL-terminated string; `out` must be a valid pointer.
enum OddpartsStatus oddparts_product_partial(const char *x, uint64_t terms, char **out);

// Run one verification suite by name ("qk-sums", "fine", ...). Zero for
// `max_n`/`max_k` keeps that suite default. On Ok, `out_passed` tells
// whether the scan found no counterexample.
//
// # Safety
// `name` must be a NUL-terminated string; `out_passed` must be valid.
enum OddpartsStatus oddparts_verify_suite(const char *name,
                                          uint64_t max_n,
                                          uint64_t max_k,
                                          bool *out_passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ODDPARTS_H */
