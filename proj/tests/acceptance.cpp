// Acceptance suite: one PASS/FAIL line per criterion. Optional arguments select criteria by id.
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "casimir/validation.hpp"

int main(int argc, char** argv) {
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) {
        ids.push_back(std::atoi(argv[i]));
    }
    if (ids.empty()) {
        for (int id = 1; id <= casimir::validation::criterion_count(); ++id) {
            ids.push_back(id);
        }
    }
    int failed = 0;
    for (int id : ids) {
        const auto r = casimir::validation::run_criterion(id);
        std::printf("%s\n", casimir::validation::format_result(r).c_str());
        std::fflush(stdout);
        failed += r.passed ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(ids.size()) - failed, ids.size());
    return failed == 0 ? 0 : 1;
}
