// Regenerates the corpus TSV (stdout): the built-in E6/B section plus the
// derived list of minimal non-generalized-line-graphs.
#include <iostream>

#include "verify.hpp"

int main() {
    std::cout << minev::render_corpus();
    return 0;
}
