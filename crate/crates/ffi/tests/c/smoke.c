#include <stdio.h>
#include <string.h>
#include "spechtcoh.h"

int main(void) {
    size_t parts[] = {3, 3};
    SpechtcohDecision *d = NULL;
    if (spechtcoh_h1_decide(3, parts, 2, &d) != SPECHTCOH_STATUS_OK) return 10;
    if (!spechtcoh_decision_nonvanishing(d)) return 11;
    if (spechtcoh_decision_dim_specht(d) != 5) return 12;

    SpechtcohCertificate *c = NULL;
    if (spechtcoh_decision_certificate(d, &c) != SPECHTCOH_STATUS_OK || c == NULL) return 13;
    char *json = spechtcoh_certificate_to_json(c);
    if (json == NULL || strstr(json, "\"provenance\":\"searched\"") == NULL) return 14;
    spechtcoh_string_free(json);
    spechtcoh_certificate_free(c);
    spechtcoh_decision_free(d);

    if (spechtcoh_h1_decide(2, parts, 2, &d) != SPECHTCOH_STATUS_USAGE) return 15;
    const char *msg = spechtcoh_last_error();
    if (msg == NULL) return 16;
    printf("ok: %s\n", msg);
    return 0;
}
