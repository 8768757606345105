/* C interface to the hyperjack library.
 *
 * All functions that produce data return it as a JSON string allocated with
 * malloc; release it with hj_string_free. On any status other than HJ_OK the
 * out parameters are left untouched and hj_session_last_error holds a
 * message. Sessions are not thread-safe; use one per thread.
 */
#ifndef HYPERJACK_H
#define HYPERJACK_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hj_session hj_session;

typedef enum hj_status {
  HJ_OK = 0,
  HJ_ERR_INVALID_ARGUMENT = 1,
  HJ_ERR_DOMAIN = 2,
  HJ_ERR_IO = 3,
  HJ_ERR_INTERNAL = 4
} hj_status;

hj_session* hj_session_new(void);
void hj_session_free(hj_session* s);

/* Worker threads used by hj_verify and hj_hyperdet. Values < 1 are an error.
 * Until this is called, hj_verify follows the grid config's thread count. */
hj_status hj_session_set_threads(hj_session* s, int n);

/* Message for the most recent failing call on this session ("" when none).
 * The pointer stays valid until the next call on the session. */
const char* hj_session_last_error(const hj_session* s);

const char* hj_version(void);

void hj_string_free(char* s);

/* Jack polynomial in the monomial basis.
 * parts: weakly decreasing nonnegative integers (nparts may be 0);
 * alpha: rational literal "p/q" or "p"; norm: 'P', 'Q' or 'J'.
 * Result: {"partition": [...], "alpha": "...", "norm": "P", "jack": SymFunc}. */
hj_status hj_jack(hj_session* s, const int* parts, size_t nparts, const char* alpha,
                  char norm, char** out_json);

/* Hyperdeterminant of the tensor stored in a JSON file (format in README).
 * Result: {"order": .., "dim": .., "ring": .., "value": ring element}. */
hj_status hj_hyperdet(hj_session* s, const char* tensor_path, char** out_json);

/* Monomial expansion of the (2k)-th power of the n-variable Vandermonde
 * determinant. Result: {"n": .., "k": .., "poly": LaurentPoly}. */
hj_status hj_vandermonde_expand(hj_session* s, int n, int k, char** out_json);

/* Schur expansion of the same power via alternant coefficients; for n <= 3 the
 * coefficients are cross-checked against the deformed scalar product route and
 * a mismatch is reported as an error. Result:
 * {"n": .., "k": .., "coeffs": [{"partition": [...], "coeff": ".."}],
 *  "scalar_product_checked": bool}. */
hj_status hj_vandermonde_schur(hj_session* s, int n, int k, char** out_json);

/* Run identity checks over a parameter grid.
 * ids/nids: identity names to run, or nids = 0 for the full registry;
 * grid: "default", "small", NULL (= "default"), or a path to a JSON grid file;
 * include_timings: nonzero to embed per-case millisecond timings.
 * out_json receives the report (schema in README); all_ok (may be NULL) is set
 * to 1 iff every requested identity met its acceptance mode. */
hj_status hj_verify(hj_session* s, const char* const* ids, size_t nids, const char* grid,
                    int include_timings, char** out_json, int* all_ok);

#ifdef __cplusplus
}
#endif

#endif /* HYPERJACK_H */
