/* C ABI for the projembed library.
 *
 * Handles are opaque; every function returning pe_status sets a
 * thread-local message readable through pe_last_error() on failure.
 * Strings returned through out-parameters are heap-allocated and must be
 * released with pe_string_free().
 */

#ifndef PROJEMBED_H
#define PROJEMBED_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pe_status {
  PE_OK = 0,
  PE_ERR_PARSE = 1,
  PE_ERR_INCONSISTENT = 2,
  PE_ERR_BUDGET = 3,
  PE_ERR_INVALID = 4,
  PE_ERR_UNKNOWN_ENTRY = 5,
  PE_ERR_NULL = 6,
  PE_ERR_PANIC = 7,
} pe_status;

/* A loaded covering 1 -> A -> G* -> G -> 1 with its cached character
 * table. Not thread-safe; use one handle per thread. */
typedef struct pe_group pe_group;

/* Version of the JSON schemas returned by the *_json functions. */
uint32_t pe_schema_version(void);

/* Message for the most recent error on the calling thread. The pointer
 * stays valid until the next failing call on the same thread. */
const char *pe_last_error(void);

/* Load a covering from the built-in catalog (see `projembed catalog` for
 * names). p is the prime parameter objects, k the secondary parameter
 * (pass 1 when unused). */
pe_status pe_covering_from_catalog(const char *name, uint64_t p, uint32_t k,
                                   pe_group **out);

/* Load from presentation grammar text: either a covering (a pcgroup block
 * followed by kernel/quotient lines) or a plain presentation, which is
 * treated as its own trivial covering. */
pe_status pe_covering_from_text(const char *text, pe_group **out);

void pe_group_free(pe_group *handle);

/* Structural summary of the quotient group G as JSON. */
pe_status pe_group_info_json(const pe_group *handle, char **out_json);

/* Projective embedding degree report as JSON; pass irreducible = 0 for
 * tau(G) and nonzero for tau_irr(G). */
pe_status pe_tau_json(pe_group *handle, int irreducible, char **out_json);

/* Verify one of the built-in result tables ("p3", "2to4", "p4", "p5") at a
 * prime; the row-by-row report is returned as JSON with timing zeroed. */
pe_status pe_verify_table_json(const char *table, uint64_t p, int high_budget,
                               char **out_json);

void pe_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif /* PROJEMBED_H */
