#include <stdio.h>
#include <string.h>

#include "knotting.h"

#define CHECK(cond)                                                   \
    do {                                                              \
        if (!(cond)) {                                                \
            fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__,    \
                    __LINE__, #cond);                                 \
            return 1;                                                 \
        }                                                             \
    } while (0)

int main(void) {
    KnottingKnot *knot = NULL;
    KnottingLaurent *poly = NULL;
    KnottingPresentation *group = NULL;
    char *text = NULL;
    size_t order = 0;

    CHECK(knotting_knot_parse("trefoil # trefoil", &knot) == KNOTTING_STATUS_OK);
    CHECK(knotting_knot_alexander(knot, &poly) == KNOTTING_STATUS_OK);
    CHECK(knotting_laurent_to_string(poly, &text) == KNOTTING_STATUS_OK);
    CHECK(strcmp(text, "t^2 - 2*t + 3 - 2*t^-1 + t^-2") == 0);
    knotting_string_free(text);
    knotting_laurent_free(poly);
    knotting_knot_free(knot);

    CHECK(knotting_knot_parse("torus(2,4)", &knot) == KNOTTING_STATUS_INVALID_KNOT);
    CHECK(knotting_last_error() != NULL);

    CHECK(knotting_presentation_complement(3, 1, &group) == KNOTTING_STATUS_OK);
    CHECK(knotting_presentation_order(group, 10000, &order) == KNOTTING_STATUS_OK);
    CHECK(order == 6);
    knotting_presentation_free(group);

    printf("knotting %s: ok\n", knotting_version());
    return 0;
}
