/* Minimal consumer of the tsax C API.
 *
 * Build (from the workspace root):
 *   cargo build --release -p tsax-capi
 *   cc crates/tsax-capi/examples/demo.c \
 *      -Icrates/tsax-capi/include \
 *      target/release/libtsax_capi.a -lm -o demo
 */
#include <stdio.h>
#include <stdlib.h>

#include "tsax.h"

#define CHECK(call)                                                  \
    do {                                                             \
        TsaxStatus s = (call);                                       \
        if (s != TSAX_STATUS_OK) {                                   \
            fprintf(stderr, "%s: %s\n", #call, tsax_status_message(s)); \
            exit(1);                                                 \
        }                                                            \
    } while (0)

int main(void) {
    TsaxTable *table = NULL;
    CHECK(tsax_table_new(4, &table));

    double rising[16], falling[16];
    for (int i = 0; i < 16; i++) {
        rising[i] = (double)i;
        falling[i] = (double)(15 - i);
    }

    TsaxRepr *a = NULL, *b = NULL;
    CHECK(tsax_repr_new(rising, 16, 4, table, &a));
    CHECK(tsax_repr_new(falling, 16, 4, table, &b));

    uint8_t symbols[4], trends[4];
    CHECK(tsax_repr_symbols(a, symbols, 4));
    CHECK(tsax_repr_trends(a, trends, 4));
    printf("word:  ");
    for (int i = 0; i < 4; i++) putchar('a' + symbols[i]);
    printf("\ntrends:");
    for (int i = 0; i < 4; i++) printf(" %s", trends[i] ? "up" : "down");
    putchar('\n');

    double mindist = 0.0, dist = 0.0;
    CHECK(tsax_mindist(a, b, table, &mindist));
    CHECK(tsax_dist(a, b, table, -1.0, 1.0, &dist));
    printf("mindist: %.6f\ntsax distance: %.6f\n", mindist, dist);

    tsax_repr_free(a);
    tsax_repr_free(b);
    tsax_table_free(table);
    return 0;
}
