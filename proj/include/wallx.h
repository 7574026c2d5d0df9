#ifndef WALLX_H
#define WALLX_H

/* C interface to the wallx exact wall-crossing / localization pairing
 * library. All operations report through a status code; on failure a
 * human-readable message is kept on the context. Output strings are
 * heap-allocated and must be released with wx_string_free; Lie
 * expressions are opaque handles released with wx_lie_free.
 *
 * Exact rational values are rendered as "p/q" (or "p" when the
 * denominator is 1). Weight literals are comma-separated polynomials
 * in the infinitesimal 'e' (e.g. "0,1-e,1-e^2"), or the keywords
 * "plus" / "minus".
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wx_status {
    WX_OK = 0,
    WX_ERR_DOMAIN = 1,   /* violated precondition */
    WX_ERR_PARSE = 2,    /* malformed literal or JSON */
    WX_ERR_INTERNAL = 3
} wx_status;

typedef struct wx_ctx wx_ctx;
typedef struct wx_lie wx_lie;

wx_ctx* wx_ctx_new(void);
void wx_ctx_free(wx_ctx* ctx);
/* Message for the most recent failing call on this context; owned by
 * the context, valid until the next call that uses it. */
const char* wx_ctx_last_error(const wx_ctx* ctx);

void wx_string_free(char* s);
void wx_lie_free(wx_lie* e);

const char* wx_version(void);

/* Worker threads for fixed-point sums; results are independent of the
 * job count. */
wx_status wx_set_jobs(wx_ctx* ctx, int jobs);

/* ---- exact arithmetic ------------------------------------------- */

wx_status wx_bernoulli_poly_at(wx_ctx* ctx, long long n, const char* x, char** out);

/* coeffs_csv lists the coefficients of d^0, d^1, ... as rationals. */
wx_status wx_zeta_reg_sum(wx_ctx* ctx, const char* coeffs_csv, char** out);

/* ---- n points on the projective line ----------------------------- */

/* mode: "odd" (n = n_or_r odd), or "resolution" | "desing" |
 * "correction" (n = 2*n_or_r even). `a` may be NULL for the zero
 * exponent vector. */
wx_status wx_npoints_pairing(wx_ctx* ctx, const char* mode, long long n_or_r, long long m,
                             const long long* a, size_t a_len, char** out);

/* JSON array of the coefficients of z^0..z^max_degree. */
wx_status wx_npoints_ih_series(wx_ctx* ctx, long long r, long long max_degree, char** out_json);

/* ---- rank-2 / rank-3 pairing engines ------------------------------ */

wx_status wx_rank2_jk(wx_ctx* ctx, long long g, long long m, char** out);

/* out_route_json receives {"jk": "...", "blowup1": "...", "blowup2": "..."};
 * pass NULL if not wanted. raw != 0 multiplies the total by n!. */
wx_status wx_rank2_jkkw(wx_ctx* ctx, long long g, long long m, long long n, int raw,
                        char** out_total, char** out_route_json);

/* m_l given as parallel arrays ls[i] -> mults[i]. */
wx_status wx_rank3_bracket(wx_ctx* ctx, long long g, const long long* ls,
                           const long long* mults, size_t len, long long k, char** out);

/* ---- wall-crossing Lie expressions -------------------------------- */

wx_status wx_jk_minus_joyce_special(wx_ctx* ctx, long long r, long long d, char sign,
                                    wx_lie** out);
wx_status wx_jk_minus_joyce_general(wx_ctx* ctx, long long r, long long d,
                                    const char* weights, wx_lie** out);
wx_status wx_pi_pair_expansion(wx_ctx* ctx, long long r, long long d, wx_lie** out);
/* JK_{r,d}(c) minus the pair-class projection, for strongly generic c. */
wx_status wx_jk_minus_pi_pairs(wx_ctx* ctx, long long r, long long d, const char* weights,
                               wx_lie** out);
wx_status wx_joyce_recursion(wx_ctx* ctx, long long r, long long d, wx_lie** lhs,
                             wx_lie** rhs);

wx_status wx_lie_render(wx_ctx* ctx, const wx_lie* e, char** out);
wx_status wx_lie_to_json(wx_ctx* ctx, const wx_lie* e, char** out);
int wx_lie_equal(const wx_lie* a, const wx_lie* b);
int wx_lie_is_zero(const wx_lie* e);

/* ---- combinatorial coefficient tables ----------------------------- */

/* classes_json: [{"r":1,"d":0,"f":[1,0],"v":0}, ...] (f, v optional);
 * tau_json / tau_prime_json: {"weights":"0,1-e","pair_weight":"1/2"}
 * (pair_weight optional). Returns rows with S, U and the solved
 * Utilde per permutation. */
wx_status wx_wcf_tables(wx_ctx* ctx, const char* classes_json, const char* tau_json,
                        const char* tau_prime_json, char** out_json);

/* ---- golden-value regression table -------------------------------- */

/* Renders a pass/fail report; *failures receives the number of
 * mismatching rows. */
wx_status wx_verify(wx_ctx* ctx, char** out_report, int* failures);

#ifdef __cplusplus
}
#endif

#endif /* WALLX_H */
