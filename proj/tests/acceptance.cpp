// Acceptance suite: runs every verification suite at its default bound
// and prints one line per criterion.  Exits nonzero on any failure.

#include <cstdio>
#include <string>
#include <vector>

#include "qsymtab/verify.hpp"

namespace {

struct Criterion {
    const char* label;
    std::vector<std::string> suites;
};

}  // namespace

int main() {
    using qsymtab::verify::run_suite;
    using qsymtab::verify::SuiteResult;

    const std::vector<Criterion> criteria = {
        {"1. Fig. 5: SSYRT enumeration and R(1,2,1,2) in four variables", {"fig5"}},
        {"2. Fig. 8: fundamental expansion of R(2,3) and its descent sets", {"fig8"}},
        {"3. Figs. 2/6/9: standardization, rho and the reading word", {"figures-std"}},
        {"4. Fig. 10: insertion result and bump path", {"fig10"}},
        {"5. Schur decomposition s = sum of R over conjugate shapes, n <= 6", {"schur-sum"}},
        {"6. Z-basis: R-to-F matrices upper uni-triangular, n <= 7", {"zbasis"}},
        {"7. Skew functions: combinatorial route equals Hopf route, n <= 6", {"skew-routes"}},
        {"8. Restriction/gluing round trip and descent composition law, n <= 6", {"restrict-glue"}},
        {"9. Omega sends S to reversed-variable R, n <= 6", {"omega"}},
        {"10. Littlewood-Richardson rule, insertion commutation and f-transport", {"lr", "fig13"}},
        {"11. Skew Schur sums via h and the S/R shape-class identity", {"skew-schur"}},
        {"12. rho/standardization and f/phi commutation squares", {"commute"}},
    };

    bool all_passed = true;
    for (const Criterion& criterion : criteria) {
        bool passed = true;
        long long cases = 0;
        double seconds = 0.0;
        std::string detail;
        for (const std::string& suite : criterion.suites) {
            SuiteResult r = run_suite(suite);
            passed = passed && r.passed;
            cases += r.cases;
            seconds += r.seconds;
            if (!r.passed && detail.empty()) detail = r.detail;
        }
        all_passed = all_passed && passed;
        std::printf("%s  %s  [%lld checks, %.2fs]\n", passed ? "PASS" : "FAIL",
                    criterion.label, cases, seconds);
        if (!passed) std::printf("      %s\n", detail.c_str());
    }
    std::printf("%s\n", all_passed ? "ACCEPTANCE: all criteria passed"
                                   : "ACCEPTANCE: FAILURES PRESENT");
    return all_passed ? 0 : 1;
}
