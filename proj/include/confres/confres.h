/* Resolution prover for K(n) with confluence axioms: C interface.
 *
 * All functions taking a prover handle are safe to call with NULL, which
 * yields CONFRES_ERR_ARGUMENT (or NULL / 0 for accessors). Returned strings
 * are owned by the handle and stay valid until the next call on it.
 */
#ifndef CONFRES_CONFRES_H
#define CONFRES_CONFRES_H

#include <stddef.h>

#if defined(_WIN32)
#define CONFRES_API __declspec(dllexport)
#elif defined(__GNUC__)
#define CONFRES_API __attribute__((visibility("default")))
#else
#define CONFRES_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct confres_prover confres_prover;

typedef enum confres_status {
  CONFRES_OK = 0,
  CONFRES_ERR_PARSE = 1,    /* malformed formula, clause or logic string */
  CONFRES_ERR_ARGUMENT = 2, /* bad handle, value out of range */
  CONFRES_ERR_STATE = 3,    /* e.g. run before any input was loaded */
  CONFRES_ERR_BUDGET = 4,   /* model search bound above the budget */
  CONFRES_ERR_INTERNAL = 5
} confres_status;

typedef enum confres_mode { CONFRES_MODE_VALID = 0, CONFRES_MODE_SAT = 1 } confres_mode;

typedef enum confres_verdict {
  CONFRES_VERDICT_VALID = 0,
  CONFRES_VERDICT_NOT_VALID = 1,
  CONFRES_VERDICT_SAT = 2,
  CONFRES_VERDICT_UNSAT = 3,
  CONFRES_VERDICT_UNKNOWN = 4 /* resource limit reached */
} confres_verdict;

typedef struct confres_stats {
  size_t clauses;           /* records in the derivation */
  size_t generated;         /* conclusions produced, including duplicates */
  size_t selected;
  size_t forward_subsumed;
  size_t backward_subsumed;
  double seconds;
} confres_stats;

CONFRES_API const char* confres_version(void);
CONFRES_API const char* confres_verdict_name(confres_verdict v);

CONFRES_API confres_prover* confres_prover_new(void);
CONFRES_API void confres_prover_free(confres_prover* p);

/* Message of the last failing call on `p`, or "" after a success. */
CONFRES_API const char* confres_last_error(const confres_prover* p);

/* "1:T,5;2:K"; families K T D B Ban F 5 G1 G0111. Empty means plain K. */
CONFRES_API confres_status confres_set_logic(confres_prover* p, const char* logic);
/* 0 infers the count from the logic string and the input. */
CONFRES_API confres_status confres_set_agents(confres_prover* p, int agents);
CONFRES_API confres_status confres_set_mode(confres_prover* p, confres_mode mode);
CONFRES_API confres_status confres_set_limits(confres_prover* p, size_t max_clauses, double max_seconds);
/* Enable both rules of every family instead of the default one. */
CONFRES_API confres_status confres_set_all_rules(confres_prover* p, int on);
/* Emit definition clauses for every literal before saturation. By default
 * only literals under a modal operator get them up front; the others are
 * added when a rule first introduces their definition symbol. */
CONFRES_API confres_status confres_set_eager_definitions(confres_prover* p, int on);

CONFRES_API confres_status confres_load_formula(confres_prover* p, const char* formula);
/* Clause set in the SNF text format, taken as the set to refute. */
CONFRES_API confres_status confres_load_snf(confres_prover* p, const char* clauses);

/* Clause set handed to saturation, definition clauses included. */
CONFRES_API const char* confres_snf_text(confres_prover* p);

CONFRES_API confres_status confres_run(confres_prover* p, confres_verdict* verdict);
/* Proof of the last refutation, or NULL. */
CONFRES_API const char* confres_proof_text(confres_prover* p);
CONFRES_API confres_status confres_get_stats(const confres_prover* p, confres_stats* out);

/* Bounded model search (at most `max_worlds` worlds, refused above `budget`).
 * Sets *found; the model is then available through the two accessors below. */
CONFRES_API confres_status confres_search_model(confres_prover* p, int max_worlds, int budget, int* found);
CONFRES_API const char* confres_model_text(confres_prover* p);
CONFRES_API const char* confres_model_json(confres_prover* p);

#ifdef __cplusplus
}
#endif

#endif
