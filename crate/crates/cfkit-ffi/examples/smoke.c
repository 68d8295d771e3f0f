/* Minimal C client: build the -pi/4 fraction two ways, verify to ten
 * decimals, and print the certified value.
 *
 *   cc smoke.c -I ../include -L ../../../target/debug -lcfkit_ffi \
 *      -lpthread -ldl -lm -o smoke
 */
#include <stdio.h>
#include <string.h>

#include "cfkit.h"

static int check(CfkitStatus status, const char *what) {
    if (status != CFKIT_STATUS_OK) {
        const char *msg = cfkit_last_error_message();
        fprintf(stderr, "%s failed (%d): %s\n", what, (int)status,
                msg ? msg : "unknown");
        return 1;
    }
    return 0;
}

int main(void) {
    CfkitCf *gauss = NULL;
    CfkitCf *scaled = NULL;
    char *text = NULL;
    CfkitVerifyResult result;
    int rc = 0;

    rc |= check(cfkit_cf_preset("gauss-pi4", &gauss), "preset");
    rc |= check(cfkit_transform_scale(gauss, "-(2*n-1)", &scaled), "transform");
    if (rc) return rc;

    rc |= check(cfkit_convergent(scaled, 4, &text), "convergent");
    if (rc) return rc;
    if (strcmp(text, "-40/51") != 0) {
        fprintf(stderr, "unexpected convergent: %s\n", text);
        return 1;
    }
    printf("f_4 = %s\n", text);
    cfkit_string_free(text);

    rc |= check(cfkit_verify(scaled, "-pi/4", 10, 30, &result), "verify");
    if (rc) return rc;
    if (!result.verified) {
        fprintf(stderr, "verification failed at depth %u\n", result.depth_used);
        return 1;
    }
    printf("verified to %u decimals at depth %u\n", result.achieved_decimals,
           result.depth_used);

    rc |= check(cfkit_pi_decimal(20, &text), "pi");
    if (rc) return rc;
    printf("pi = %s\n", text);
    cfkit_string_free(text);

    cfkit_cf_free(gauss);
    cfkit_cf_free(scaled);
    return 0;
}
