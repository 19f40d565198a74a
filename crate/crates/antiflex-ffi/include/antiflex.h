/* C interface of the antiflex exact-arithmetic algebra workbench. */

#ifndef ANTIFLEX_H
#define ANTIFLEX_H

/* Generated by cbindgen from the antiflex-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>
typedef struct AfAlgebra AfAlgebra;
typedef struct AfLinearMap AfLinearMap;
typedef struct AfBimodule AfBimodule;

// Result of every entry point. `Ok` and `CheckFailed` both mean the call
// completed; `CheckFailed` is the verdict of a failed identity or operator
// check, with the witness in the report string.
typedef enum AfStatus {
  AF_STATUS_OK = 0,
  AF_STATUS_CHECK_FAILED = 1,
  AF_STATUS_PARSE_ERROR = 2,
  AF_STATUS_DIMENSION_MISMATCH = 3,
  AF_STATUS_FIELD_MISMATCH = 4,
  AF_STATUS_CHARACTERISTIC_OBSTRUCTION = 5,
  AF_STATUS_PRECONDITION_FAILED = 6,
  AF_STATUS_UNKNOWN_IDENTITY = 7,
  AF_STATUS_BUDGET_EXCEEDED = 8,
  AF_STATUS_NULL_ARGUMENT = 9,
  AF_STATUS_INTERNAL_ERROR = 10,
} AfStatus;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Short name of a status code, e.g. for log lines.
const char *af_status_name(enum AfStatus status);

// Releases a string returned by this library.
//
// # Safety
// `s` must have been returned by an antiflex function and not freed yet.
void af_string_free(char *s);

// Parses an algebra from its JSON document.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be a valid pointer.
enum AfStatus af_algebra_parse(const char *json, AfAlgebra **out);

// Canonical JSON of an algebra; free with [`af_string_free`].
//
// # Safety
// `a` must be a live algebra handle or null.
char *af_algebra_to_json(const AfAlgebra *a);

// Dimension of an algebra, or SIZE_MAX for a null handle.
//
// # Safety
// `a` must be a live algebra handle or null.
uintptr_t af_algebra_dim(const AfAlgebra *a);

// # Safety
// `a` must be a live algebra handle or null; it is invalid afterwards.
void af_algebra_free(AfAlgebra *a);

// Parses a matrix from its JSON document.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be a valid pointer.
enum AfStatus af_linear_map_parse(const char *json, AfLinearMap **out);

// # Safety
// `m` must be a live matrix handle or null; it is invalid afterwards.
void af_linear_map_free(AfLinearMap *m);

// Parses a bimodule from its JSON document.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be a valid pointer.
enum AfStatus af_bimodule_parse(const char *json, AfBimodule **out);

// # Safety
// `b` must be a live bimodule handle or null; it is invalid afterwards.
void af_bimodule_free(AfBimodule *b);

// Checks a named identity; `out_report` (nullable) receives the report
// JSON. Returns `Ok` on pass, `CheckFailed` on a witnessed failure.
//
// # Safety
// `a` must be a live algebra handle, `identity` a NUL-terminated string;
// `out_report` may be null.
enum AfStatus af_check_identity(const AfAlgebra *a, const char *identity, char **out_report);

// Checks the weighted operator identity; the weight is parsed in the
// algebra's field from its text form (e.g. "0", "-1", "1/2").
//
// # Safety
// `a` and `m` must be live handles, `weight` a NUL-terminated string;
// `out_report` may be null.
enum AfStatus af_check_rota_baxter(const AfAlgebra *a,
                                   const AfLinearMap *m,
                                   const char *weight,
                                   char **out_report);

// Checks that the torsion of the operator vanishes.
//
// # Safety
// `a` and `m` must be live handles; `out_report` may be null.
enum AfStatus af_check_nijenhuis(const AfAlgebra *a, const AfLinearMap *m, char **out_report);

// Checks the module operator identity against a bimodule.
//
// # Safety
// `b` and `m` must be live handles; `out_report` may be null.
enum AfStatus af_check_o_operator(const AfBimodule *b, const AfLinearMap *m, char **out_report);

// Builds the deformed product `a*b = aR(b) + R(a)b + w ab` as a new
// algebra handle.
//
// # Safety
// `a` and `m` must be live handles, `weight` a NUL-terminated string;
// `out` must be a valid pointer.
enum AfStatus af_rb_induced_product(const AfAlgebra *a,
                                    const AfLinearMap *m,
                                    const char *weight,
                                    AfAlgebra **out);

// Builds the deformed product `x*y = N(x)y + xN(y) - N(xy)` as a new
// algebra handle.
//
// # Safety
// `a` and `m` must be live handles; `out` must be a valid pointer.
enum AfStatus af_nj_induced_product(const AfAlgebra *a, const AfLinearMap *m, AfAlgebra **out);

// Builds the semidirect product algebra of a bimodule.
//
// # Safety
// `b` must be a live handle; `out` must be a valid pointer.
enum AfStatus af_semidirect_product(const AfBimodule *b, AfAlgebra **out);

// Builds the dual bimodule of an algebra.
//
// # Safety
// `a` must be a live handle; `out` must be a valid pointer.
enum AfStatus af_dual_bimodule(const AfAlgebra *a, AfBimodule **out);

// Canonical JSON of a bimodule; free with [`af_string_free`].
//
// # Safety
// `b` must be a live bimodule handle or null.
char *af_bimodule_to_json(const AfBimodule *b);

// Runs the built-in fixture concordance and returns its JSON report; free
// with [`af_string_free`].
char *af_demo_report(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ANTIFLEX_H */
