#ifndef HOPFCROSS_H
#define HOPFCROSS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible function.
typedef enum HcStatus {
  HC_STATUS_OK = 0,
  // A required pointer argument was null.
  HC_STATUS_NULL_POINTER = 1,
  // A string argument was not valid UTF-8.
  HC_STATUS_INVALID_UTF8 = 2,
  // Unreadable or malformed input.
  HC_STATUS_INVALID_INPUT = 3,
  // The input is well formed but fails a mathematical requirement.
  HC_STATUS_MATH_FAILURE = 4,
  // An internal panic was caught at the boundary.
  HC_STATUS_PANIC = 5,
} HcStatus;

// A finite-dimensional Hopf algebra.
typedef struct HcHopf HcHopf;

// A crossed system, certified or not.
typedef struct HcSystem HcSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failure on this thread, or null. Owned by the library.
const char *hc_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be freed twice.
void hc_string_free(char *s);

// Loads a Hopf algebra document. `field` may be null.
//
// # Safety
// `path` and `field` must be NUL-terminated strings or null; `out` must be writable.
enum HcStatus hc_hopf_load(const char *path, const char *field, struct HcHopf **out);

// Dimension of a Hopf algebra, or 0 for null.
//
// # Safety
// `h` must be a live handle or null.
size_t hc_hopf_dim(const struct HcHopf *h);

// Checks every Hopf axiom. `report_json` may be null.
//
// # Safety
// `h` must be a live handle; `passed` must be writable.
enum HcStatus hc_hopf_verify(const struct HcHopf *h, bool *passed, char **report_json);

// Serializes a Hopf algebra in the document format.
//
// # Safety
// `h` must be a live handle; `out` must be writable.
enum HcStatus hc_hopf_to_json(const struct HcHopf *h, char **out);

// # Safety
// `h` must come from this library and not be freed twice. Null is ignored.
void hc_hopf_free(struct HcHopf *h);

// Loads a crossed system document. `field` may be null.
//
// # Safety
// `path` and `field` must be NUL-terminated strings or null; `out` must be writable.
enum HcStatus hc_system_load(const char *path, const char *field, struct HcSystem **out);

// Checks the crossed system axioms. `report_json` may be null.
//
// # Safety
// `s` must be a live handle; `passed` must be writable.
enum HcStatus hc_system_verify(const struct HcSystem *s, bool *passed, char **report_json);

// Certifies the system and builds its crossed product.
//
// # Safety
// `s` must be a live handle; `out` must be writable.
enum HcStatus hc_system_build(const struct HcSystem *s, struct HcHopf **out);

// # Safety
// `s` must come from this library and not be freed twice. Null is ignored.
void hc_system_free(struct HcSystem *s);

// Assembles σ from a quadruple document and renders it as a labelled TSV table.
//
// # Safety
// `s` must be a live handle; `quadruple_path` a NUL-terminated string; `out` writable.
enum HcStatus hc_braid_table(const struct HcSystem *s, const char *quadruple_path, char **out);

// Closed-form σ(XᵃYᵇ, XᶜYᵈ) on the polynomial example. `params` is
// `"s_p,s_tau,s_u,s_v"`; `field` may be null for the rationals.
//
// # Safety
// `params` and `field` must be NUL-terminated strings or null; `out` writable.
enum HcStatus hc_poly_sigma(uint32_t a,
                            uint32_t b,
                            uint32_t c,
                            uint32_t d,
                            const char *params,
                            const char *field,
                            char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOPFCROSS_H */
