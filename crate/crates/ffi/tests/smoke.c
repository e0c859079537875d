#include <stdio.h>
#include "hopfcross.h"

int main(int argc, char **argv) {
    if (argc < 2) return 2;
    HcHopf *h = NULL;
    if (hc_hopf_load(argv[1], NULL, &h) != HC_STATUS_OK) {
        fprintf(stderr, "%s\n", hc_last_error());
        return 1;
    }
    bool passed = false;
    if (hc_hopf_verify(h, &passed, NULL) != HC_STATUS_OK || !passed) return 1;
    printf("dim %zu ok\n", hc_hopf_dim(h));
    hc_hopf_free(h);
    return 0;
}
