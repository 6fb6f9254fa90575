#ifndef SCGT_H
#define SCGT_H

/* Generated by cbindgen from scgt-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible entry point.
typedef enum ScgtStatus {
  // Success.
  SCGT_STATUS_OK = 0,
  // A required pointer argument was null.
  SCGT_STATUS_NULL_POINTER = 1,
  // Malformed input: bad JSON, out-of-range vertex ids, bad weights.
  SCGT_STATUS_INVALID_INPUT = 2,
  // Structurally valid input that violates a precondition: infeasible
  // coalitions, purity or matroid requirements, scale limits.
  SCGT_STATUS_INFEASIBLE = 3,
  // A panic was caught at the boundary; this is a bug in the library.
  SCGT_STATUS_INTERNAL = 4,
} ScgtStatus;

// Opaque handle to an immutable simplicial complex.
typedef struct ScgtComplex ScgtComplex;

// Opaque handle to a worth function on a complex.
typedef struct ScgtGame ScgtGame;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// A pointer to the message of the last failure on this thread, or null.
// Valid until the next failing call on the same thread.
const char *scgt_last_error_message(void);

// Builds a complex from flattened facets: `member_counts[i]` vertices of
// facet `i` are consumed from `members` in order. Dominated facets are
// reduced away, as in the JSON loader.
//
// # Safety
// `members` must hold the sum of `member_counts` u32 values and
// `member_counts` must hold `facet_count` usize values; `out` must be a
// valid destination pointer.
enum ScgtStatus scgt_complex_from_facets(uint32_t n,
                                         const uint32_t *members,
                                         const uintptr_t *member_counts,
                                         uintptr_t facet_count,
                                         struct ScgtComplex **out);

// Parses the JSON complex format (`{"n", "labels"?, "facets"}`).
//
// # Safety
// `json` must be a NUL-terminated string and `out` a valid destination.
enum ScgtStatus scgt_complex_from_json(const char *json, struct ScgtComplex **out);

// # Safety
// `complex` must come from a constructor of this library and not have
// been freed; null is ignored.
void scgt_complex_free(struct ScgtComplex *complex);

// Ground-set size; 0 when the handle is null.
//
// # Safety
// `complex` must be a live handle or null.
uint32_t scgt_complex_n(const struct ScgtComplex *complex);

// # Safety
// `complex` must be a live handle or null.
uintptr_t scgt_complex_facet_count(const struct ScgtComplex *complex);

// # Safety
// `complex` must be a live handle or null.
uintptr_t scgt_complex_rank(const struct ScgtComplex *complex);

// # Safety
// `complex` must be a live handle or null.
uint64_t scgt_complex_face_count(const struct ScgtComplex *complex);

// # Safety
// `complex` must be a live handle or null.
bool scgt_complex_is_pure(const struct ScgtComplex *complex);

// # Safety
// `complex` must be a live handle or null.
bool scgt_complex_is_matroid(const struct ScgtComplex *complex);

// Membership of a coalition given as an array of 1-based vertex ids.
//
// # Safety
// Pointer arguments must satisfy the usual slice contracts.
enum ScgtStatus scgt_complex_contains(const struct ScgtComplex *complex,
                                      const uint32_t *members,
                                      uintptr_t len,
                                      bool *out);

// Creates the zero game on a complex.
//
// # Safety
// `complex` must be a live handle; `out` a valid destination.
enum ScgtStatus scgt_game_new(const struct ScgtComplex *complex, struct ScgtGame **out);

// Assigns a worth to one coalition, replacing any previous assignment.
// The coalition must be feasible; the empty coalition only accepts zero.
//
// # Safety
// `game` must be a live handle; `members` a readable array of `len` ids.
enum ScgtStatus scgt_game_set_worth(struct ScgtGame *game,
                                    const uint32_t *members,
                                    uintptr_t len,
                                    double value);

// Worth of a coalition; infeasible queries report `Infeasible`.
//
// # Safety
// Pointer arguments must satisfy the usual slice contracts.
enum ScgtStatus scgt_game_worth(const struct ScgtGame *game,
                                const uint32_t *members,
                                uintptr_t len,
                                double *out);

// # Safety
// `game` must come from [`scgt_game_new`] and not have been freed; null
// is ignored.
void scgt_game_free(struct ScgtGame *game);

// The facet-distribution-weighted Shapley group value. `weights` holds
// one probability per facet in canonical facet order, or null for the
// uniform distribution; `out_values` receives one value per vertex.
//
// # Safety
// `out_values` must hold `scgt_complex_n` doubles; other pointers follow
// the usual contracts.
enum ScgtStatus scgt_shapley_reduce(const struct ScgtComplex *complex,
                                    const struct ScgtGame *game,
                                    const double *weights,
                                    double *out_values);

// Participation influences `w^P({i})` per vertex, for a facet
// distribution given as in [`scgt_shapley_reduce`].
//
// # Safety
// `out_values` must hold `scgt_complex_n` doubles.
enum ScgtStatus scgt_influence_vector(const struct ScgtComplex *complex,
                                      const double *weights,
                                      double *out_values);

// Facet-polytope membership of a point of length `scgt_complex_n`.
// On membership, a witness distribution is written to `out_weights`
// (one weight per facet, canonical order) unless it is null.
//
// # Safety
// `point` must hold `scgt_complex_n` doubles; `out_weights`, when not
// null, must hold `scgt_complex_facet_count` doubles.
enum ScgtStatus scgt_polytope_member(const struct ScgtComplex *complex,
                                     const double *point,
                                     double tolerance,
                                     double *out_weights,
                                     bool *out_member);

// Evaluates a quasi-probabilistic value given as flattened link
// coefficients: `face_members`/`face_counts` encode `count` faces the
// same way as [`scgt_complex_from_facets`], with `coefficients[i]` the
// weight of face `i`.
//
// # Safety
// Pointer arguments must satisfy the usual slice contracts; `out_value`
// must be a valid destination.
enum ScgtStatus scgt_quasi_eval(const struct ScgtComplex *complex,
                                const struct ScgtGame *game,
                                uint32_t player,
                                const uint32_t *face_members,
                                const uintptr_t *face_counts,
                                const double *coefficients,
                                uintptr_t count,
                                double *out_value);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCGT_H */
