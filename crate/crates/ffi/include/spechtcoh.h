#ifndef SPECHTCOH_H
#define SPECHTCOH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Outcome of a call.
typedef enum SpechtcohStatus {
  SPECHTCOH_STATUS_OK = 0,
  SPECHTCOH_STATUS_VERIFICATION_FAILED = 1,
  SPECHTCOH_STATUS_USAGE = 2,
  SPECHTCOH_STATUS_RESOURCE_CAP = 3,
  SPECHTCOH_STATUS_NULL_POINTER = 4,
  SPECHTCOH_STATUS_INTERNAL = 5,
} SpechtcohStatus;

// A checked candidate vector.
typedef struct SpechtcohCertificate SpechtcohCertificate;

// Outcome of the H¹ decision for one partition and prime.
typedef struct SpechtcohDecision SpechtcohDecision;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. The pointer is
// valid until the next call into this library on the same thread.
const char *spechtcoh_last_error(void);

// Writes whether `H⁰(Σ_d, S^λ)` is nonzero, i.e. `f_λ ∈ S^λ`.
//
// # Safety
// `parts` must point to `len` readable values; `out_nonzero` must be writable.
enum SpechtcohStatus spechtcoh_h0(uint32_t p, const size_t *parts, size_t len, bool *out_nonzero);

// Decides `H¹(Σ_d, S^λ) ≠ 0` for odd `p` with default limits.
//
// # Safety
// `parts` must point to `len` readable values; `out` must be writable.
enum SpechtcohStatus spechtcoh_h1_decide(uint32_t p,
                                         const size_t *parts,
                                         size_t len,
                                         struct SpechtcohDecision **out);

// # Safety
// `decision` must be null or a live handle.
bool spechtcoh_decision_nonvanishing(const struct SpechtcohDecision *decision);

// `dim W - dim(S^λ + span f_λ)`; only its positivity is established.
//
// # Safety
// `decision` must be null or a live handle.
size_t spechtcoh_decision_diagnostic_dim(const struct SpechtcohDecision *decision);

// # Safety
// `decision` must be null or a live handle.
size_t spechtcoh_decision_dim_specht(const struct SpechtcohDecision *decision);

// # Safety
// `decision` must be null or a live handle.
size_t spechtcoh_decision_dim_permutation(const struct SpechtcohDecision *decision);

// Copies out the decision's certificate. Writes null when the answer is zero.
//
// # Safety
// `decision` must be a live handle; `out` must be writable.
enum SpechtcohStatus spechtcoh_decision_certificate(const struct SpechtcohDecision *decision,
                                                    struct SpechtcohCertificate **out);

// # Safety
// `decision` must be null or a handle not yet freed.
void spechtcoh_decision_free(struct SpechtcohDecision *decision);

// Parses a certificate record and re-verifies it. On `OK` or
// `VERIFICATION_FAILED` a handle is written and must be freed.
//
// # Safety
// `json` must be a nul-terminated string; `out` must be writable.
enum SpechtcohStatus spechtcoh_certificate_from_json(const char *json,
                                                     struct SpechtcohCertificate **out);

// Builds and verifies a named family: `"eq-4.1"` (parameters ignored),
// `"thm-5.11"` with `p, a, b`, or `"papa"` with `p, a`.
//
// # Safety
// `name` must be a nul-terminated string; `out` must be writable.
enum SpechtcohStatus spechtcoh_certificate_family(const char *name,
                                                  uint32_t p,
                                                  uint32_t a,
                                                  uint32_t b,
                                                  struct SpechtcohCertificate **out);

// # Safety
// `cert` must be null or a live handle.
bool spechtcoh_certificate_verified(const struct SpechtcohCertificate *cert);

// Ambient dimension of the certificate vector.
//
// # Safety
// `cert` must be null or a live handle.
size_t spechtcoh_certificate_ambient_dim(const struct SpechtcohCertificate *cert);

// The certificate record as JSON, to be released with
// [`spechtcoh_string_free`]; null on a null handle.
//
// # Safety
// `cert` must be null or a live handle.
char *spechtcoh_certificate_to_json(const struct SpechtcohCertificate *cert);

// # Safety
// `cert` must be null or a handle not yet freed.
void spechtcoh_certificate_free(struct SpechtcohCertificate *cert);

// # Safety
// `s` must be null or a string returned by this library and not yet freed.
void spechtcoh_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* SPECHTCOH_H */
