/* Compiled as plain C: the public header must be consumable without a
 * C++ toolchain, and the basic call/ownership protocol must work. */

#include <stdio.h>
#include <string.h>

#include "wallx.h"

static int failures = 0;

static void expect_str(const char* name, const char* got, const char* want) {
    if (got == NULL || strcmp(got, want) != 0) {
        printf("FAIL  %s: got %s, expected %s\n", name, got ? got : "(null)", want);
        ++failures;
    } else {
        printf("PASS  %s\n", name);
    }
}

int main(void) {
    wx_ctx* ctx = wx_ctx_new();
    char* out = NULL;

    if (wx_zeta_reg_sum(ctx, "0,1", &out) == WX_OK) {
        expect_str("regularized sum", out, "-1/12");
        wx_string_free(out);
    } else {
        printf("FAIL  regularized sum: %s\n", wx_ctx_last_error(ctx));
        ++failures;
    }

    {
        long long ls[1] = {3};
        long long mults[1] = {1};
        if (wx_rank3_bracket(ctx, 2, ls, mults, 1, 7, &out) == WX_OK) {
            expect_str("rank-3 pairing", out, "70/9");
            wx_string_free(out);
        } else {
            printf("FAIL  rank-3 pairing: %s\n", wx_ctx_last_error(ctx));
            ++failures;
        }
    }

    {
        wx_lie* expr = NULL;
        if (wx_jk_minus_joyce_special(ctx, 3, 0, '-', &expr) == WX_OK) {
            if (wx_lie_render(ctx, expr, &out) == WX_OK) {
                expect_str("bracket difference", out, "1/6 [J(2,0),J(1,0)]");
                wx_string_free(out);
            }
            wx_lie_free(expr);
        } else {
            printf("FAIL  bracket difference: %s\n", wx_ctx_last_error(ctx));
            ++failures;
        }
    }

    /* error path keeps the message on the context */
    if (wx_rank2_jk(ctx, 1, 0, &out) != WX_ERR_DOMAIN ||
        strlen(wx_ctx_last_error(ctx)) == 0) {
        printf("FAIL  error reporting\n");
        ++failures;
    } else {
        printf("PASS  error reporting\n");
    }

    wx_ctx_free(ctx);
    return failures;
}
