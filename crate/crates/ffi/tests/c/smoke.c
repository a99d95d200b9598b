#include <stdio.h>
#include <string.h>
#include "groupring.h"

int main(void) {
    GrGroup *g = NULL;
    if (gr_group_new("A4", 250, &g) != GR_STATUS_OK) return 1;
    size_t n = 0;
    bool sn = false, ssn = false;
    if (gr_group_order(g, &n) != GR_STATUS_OK || n != 12) return 2;
    if (gr_group_is_sn(g, &sn) != GR_STATUS_OK || !sn) return 3;
    if (gr_group_is_ssn(g, &ssn) != GR_STATUS_OK || !ssn) return 4;
    GrNdVerdict v;
    if (gr_group_nd_verdict(g, 1000, &v) != GR_STATUS_OK || v != GR_ND_VERDICT_HAS_ND) return 5;
    GrReport *r = NULL;
    if (gr_group_analyze(g, 1000, &r) != GR_STATUS_OK) return 6;
    if (strstr(gr_report_json(r), "\"schema\": 1") == NULL) return 7;
    gr_report_free(r);
    gr_group_free(g);

    GrGroup *bad = NULL;
    if (gr_group_new("C(", 250, &bad) != GR_STATUS_PARSE || bad != NULL) return 8;
    if (strlen(gr_last_error()) == 0) return 9;
    printf("ok %s\n", gr_version());
    return 0;
}
