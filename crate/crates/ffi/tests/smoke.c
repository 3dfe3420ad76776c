#include <stdio.h>
#include <string.h>
#include "fockspace.h"

#define CHECK(cond) do { if (!(cond)) { fprintf(stderr, "failed: %s\n", #cond); return 1; } } while (0)

int main(void) {
    size_t depths[] = {3, 1};
    FsDiagram *d = NULL;
    CHECK(fs_diagram_new(2, 0, depths, 2, &d) == FS_STATUS_OK);
    size_t eps = 9, phi = 9;
    CHECK(fs_diagram_epsilon(d, 1, &eps) == FS_STATUS_OK && eps == 1);
    CHECK(fs_diagram_phi(d, 1, &phi) == FS_STATUS_OK && phi == 1);

    char *json = NULL;
    CHECK(fs_act(d, "F1", FS_CONVENTION_UPPER, &json) == FS_STATUS_OK);
    CHECK(strstr(json, "\"coeff\"") != NULL);
    fs_string_free(json);

    CHECK(fs_diagram_new(1, 0, NULL, 0, &d) == FS_STATUS_INVALID_ARGUMENT);
    CHECK(fs_last_error_message() != NULL);

    FsGraph *g = NULL;
    CHECK(fs_graph_new(2, 0, 5, &g) == FS_STATUS_OK);
    CHECK(fs_graph_node_count(g) == 12);
    fs_graph_free(g);
    fs_diagram_free(d);
    puts("ok");
    return 0;
}
