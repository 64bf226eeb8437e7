#ifndef KNOTTING_H
#define KNOTTING_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum KnottingStatus {
  KNOTTING_STATUS_OK = 0,
  KNOTTING_STATUS_NULL_POINTER = 1,
  KNOTTING_STATUS_INVALID_UTF8 = 2,
  KNOTTING_STATUS_PARSE_ERROR = 3,
  KNOTTING_STATUS_INVALID_KNOT = 4,
  KNOTTING_STATUS_INVALID_INPUT = 5,
  KNOTTING_STATUS_OVERFLOW = 6,
  KNOTTING_STATUS_INCONCLUSIVE = 7,
  KNOTTING_STATUS_NOT_NORMALIZED = 8,
  KNOTTING_STATUS_PANIC = 9,
} KnottingStatus;

typedef enum KnottingVerdict {
  KNOTTING_VERDICT_HOLDS = 0,
  KNOTTING_VERDICT_FAILS = 1,
  KNOTTING_VERDICT_INCONCLUSIVE = 2,
} KnottingVerdict;

typedef struct KnottingKnot KnottingKnot;

typedef struct KnottingLaurent KnottingLaurent;

typedef struct KnottingPresentation KnottingPresentation;

typedef struct KnottingSw KnottingSw;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next call into the library on the same thread.
 */
const char *knotting_last_error(void);

/**
 * Library version as a static string.
 */
const char *knotting_version(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void knotting_string_free(char *s);

/**
 * Parses a knot expression such as `"trefoil # torus(2,5)"`.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be valid for writes.
 */
enum KnottingStatus knotting_knot_parse(const char *text, struct KnottingKnot **out);

/**
 * # Safety
 * `knot` must be null or a handle from this library, not yet freed.
 */
void knotting_knot_free(struct KnottingKnot *knot);

/**
 * # Safety
 * `knot` must be a live handle; `out` must be valid for writes.
 */
enum KnottingStatus knotting_knot_to_string(const struct KnottingKnot *knot, char **out);

/**
 * Normalized Alexander polynomial.
 *
 * # Safety
 * `knot` must be a live handle; `out` must be valid for writes.
 */
enum KnottingStatus knotting_knot_alexander(const struct KnottingKnot *knot,
                                            struct KnottingLaurent **out);

/**
 * `|Δ(-1)|` as a decimal string.
 *
 * # Safety
 * `knot` must be a live handle; `out` must be valid for writes.
 */
enum KnottingStatus knotting_knot_determinant(const struct KnottingKnot *knot, char **out);

/**
 * # Safety
 * `poly` must be null or a handle from this library, not yet freed.
 */
void knotting_laurent_free(struct KnottingLaurent *poly);

/**
 * Text form, e.g. `t - 1 + t^-1`.
 *
 * # Safety
 * `poly` must be a live handle; `out` must be valid for writes.
 */
enum KnottingStatus knotting_laurent_to_string(const struct KnottingLaurent *poly, char **out);

/**
 * JSON form `{"min_exp": .., "coeffs": [..]}`.
 *
 * # Safety
 * `poly` must be a live handle; `out` must be valid for writes.
 */
enum KnottingStatus knotting_laurent_to_json(const struct KnottingLaurent *poly, char **out);

/**
 * # Safety
 * `poly` must be a live handle; `out` must be valid for writes.
 */
enum KnottingStatus knotting_laurent_term_count(const struct KnottingLaurent *poly, size_t *out);

/**
 * # Safety
 * `poly` must be a live handle; `out` must be valid for writes.
 */
enum KnottingStatus knotting_laurent_degree(const struct KnottingLaurent *poly, uint64_t *out);

/**
 * Parses `"gens: a b ; rels: a^6 b^6, ..."` or the JSON form.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be valid for writes.
 */
enum KnottingStatus knotting_presentation_parse(const char *text,
                                                struct KnottingPresentation **out);

/**
 * Complement presentation of the degree-2k maximal nest curve with the
 * given annulus left unpunctured.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum KnottingStatus knotting_presentation_complement(int64_t k,
                                                     int64_t membrane,
                                                     struct KnottingPresentation **out);

/**
 * # Safety
 * `p` must be null or a handle from this library, not yet freed.
 */
void knotting_presentation_free(struct KnottingPresentation *p);

/**
 * # Safety
 * `p` must be a live handle; `out` must be valid for writes.
 */
enum KnottingStatus knotting_presentation_to_string(const struct KnottingPresentation *p,
                                                    char **out);

/**
 * Abelian invariants as JSON `{"free_rank": .., "torsion": [..]}`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid for writes.
 */
enum KnottingStatus knotting_presentation_abelianization_json(const struct KnottingPresentation *p,
                                                              char **out);

/**
 * Group order by coset enumeration. Returns `KNOTTING_STATUS_OVERFLOW` and
 * leaves `out` untouched when more than `max_cosets` cosets are needed.
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid for writes.
 */
enum KnottingStatus knotting_presentation_order(const struct KnottingPresentation *p,
                                                size_t max_cosets,
                                                size_t *out);

/**
 * Decides whether the group is cyclic of order `n`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid for writes.
 */
enum KnottingStatus knotting_presentation_is_cyclic(const struct KnottingPresentation *p,
                                                    uint64_t n,
                                                    size_t max_cosets,
                                                    enum KnottingVerdict *out);

/**
 * Parses `{"terms": [{"base": .., "n": .., "coeff": ..}, ..]}`.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be valid for writes.
 */
enum KnottingStatus knotting_sw_from_json(const char *json, struct KnottingSw **out);

/**
 * Two classes `±beta` with coefficient 1.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum KnottingStatus knotting_sw_fixture(struct KnottingSw **out);

/**
 * # Safety
 * `sw` must be null or a handle from this library, not yet freed.
 */
void knotting_sw_free(struct KnottingSw *sw);

/**
 * # Safety
 * `sw` must be a live handle; `out` must be valid for writes.
 */
enum KnottingStatus knotting_sw_to_json(const struct KnottingSw *sw, char **out);

/**
 * Annulus rim surgery via `knot`, i.e. multiplication by `Δ_{K#K}`.
 *
 * # Safety
 * `sw` and `knot` must be live handles; `out` must be valid for writes.
 */
enum KnottingStatus knotting_sw_annulus_rim_surgery(const struct KnottingSw *sw,
                                                    const struct KnottingKnot *knot,
                                                    struct KnottingSw **out);

/**
 * # Safety
 * `sw` must be a live handle; `out` must be valid for writes.
 */
enum KnottingStatus knotting_sw_basic_class_count(const struct KnottingSw *sw, size_t *out);

/**
 * Basic-class counts for the first `count` connected sums of trefoils as
 * JSON `{"counts", "pairwise_distinct", "citations"}`. `sw` may be null for
 * the two-class fixture.
 *
 * # Safety
 * `sw` must be null or a live handle; `out` must be valid for writes.
 */
enum KnottingStatus knotting_distinguish_trefoil_json(uint32_t count,
                                                      const struct KnottingSw *sw,
                                                      char **out);

/**
 * Invariants of the degree-2k maximal nest curve and the cyclicity verdict
 * for each annulus membrane, as JSON. Returns `KNOTTING_STATUS_INCONCLUSIVE`
 * (with `out` still written) when some verdict could not be certified.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum KnottingStatus knotting_nest_report_json(int64_t k, size_t max_cosets, char **out);

/**
 * Smith normal form of a JSON integer matrix, as JSON
 * `{"divisors", "u", "v"}` with `U * M * V = diag(divisors)`.
 *
 * # Safety
 * `matrix_json` must be a nul-terminated string; `out` must be valid for writes.
 */
enum KnottingStatus knotting_snf_json(const char *matrix_json, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KNOTTING_H */
