/* gradecheck: graded-ring invariants and countable-type obstruction checks.
 *
 * C interface to the shared library. All state lives behind the opaque
 * session handle; functions return status codes and never throw across the
 * boundary. Returned strings are owned by the session and stay valid until
 * the next call on the same session (or gc_session_free).
 */
#ifndef GRADECHECK_H
#define GRADECHECK_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gc_session gc_session;

/* Status codes double as CLI exit codes. */
enum gc_status {
  GC_OK = 0,           /* computed */
  GC_ERROR = 1,        /* internal error or resource budget exceeded */
  GC_PRECONDITION = 2  /* parse error or violated precondition (e.g. non-CM) */
};

gc_session* gc_session_new(void);
void gc_session_free(gc_session* s);

/* Seed for every generic choice; GRADECHECK_SEED handling is the caller's
 * job. Reports embed the seed, so identical (input, seed, options) give
 * byte-identical output. */
int gc_session_set_seed(gc_session* s, uint64_t seed);

/* Integer options: "audit" (0/1), "budget", "samples", "retries",
 * "audit_samples", "degree_bound", "t", "m", "family_degree".
 * Set "budget" before gc_session_parse; it applies to the parsed ring. */
int gc_session_set_option(gc_session* s, const char* key, long long value);

/* Parses the ring description language:
 *   ring GF(32003)[x,y]
 *   ideal x^3*y - x*y^3
 */
int gc_session_parse(gc_session* s, const char* text);

/* Full report; as_json selects JSON or text. On GC_PRECONDITION the output
 * is still produced (verdicts needing the failed precondition are null). */
int gc_run_report(gc_session* s, int as_json, const char** out);

/* Focused checks. command: "hilbert", "hvector", "stretched", "ss",
 * "ss-sop" (argument: the hsop, e.g. "(x+2*y)^2"), "reduction" (argument:
 * the linear forms), "identities" (argument: "colon" | "frobenius" |
 * "delta"), "family" (argument: "principal" | "onedim" | "ideal").
 * Output is a JSON fragment. */
int gc_run_check(gc_session* s, const char* command, const char* argument,
                 const char** out);

/* Accumulated parse warnings (one per line; empty string when none). */
const char* gc_session_warnings(gc_session* s);

/* Message for the last non-OK status. */
const char* gc_session_error(gc_session* s);

const char* gc_version(void);

#ifdef __cplusplus
}
#endif

#endif /* GRADECHECK_H */
