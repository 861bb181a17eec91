// Acceptance run: one PASS/FAIL line per criterion. A criterion passes when
// every check in its suites passes and the wall time stays under its limit.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "simpcoh/suites.hpp"

using namespace simpcoh;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> suites;
    double limit_seconds;
    SuiteOptions options;
};

SuiteOptions with(int cap, int M, int max_n = 2) {
    SuiteOptions o;
    o.cap = cap;
    o.M = M;
    o.max_n = max_n;
    o.seed = 20240601;
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Eilenberg-Zilber decomposition", {"ez"}, 10, with(4, 4)},
        {2, "cocycles vs homomorphisms", {"cocycle-hom"}, 30, with(3, 4)},
        {3, "K(pi,n) facts", {"em"}, 60, with(4, 4)},
        {4, "Postnikov quotients", {"postnikov"}, 30, with(4, 4)},
        {5, "fundamental group and K(1)", {"f-group"}, 60, with(3, 4)},
        {6, "unraveling chains c_n, k_n", {"cn", "kn"}, 120, with(4, 8)},
        {7, "averaging", {"coherence", "averaging-cochain"}, 30, with(3, 4)},
        {8, "main homotopy", {"main-homotopy"}, 120, with(3, 8)},
        {9, "K(pi,n)-bundle translations",
         {"translation-cocycle", "cocycles-translations", "translations-composition", "transitivity-bundle"}, 120, with(3, 4)},
        {10, "Milnor and Segal models", {"milnor-space", "segal-space", "nice-quotient"}, 60, with(3, 5)},
        {11, "semi-norm LP", {"seminorm-lp"}, 60, with(3, 4)},
        {12, "isometry reports", {"isometry"}, 60, with(3, 5)},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::size_t checks = 0;
        std::string first_failure;
        for (const auto& id : c.suites) {
            auto r = run_suite(id, c.options);
            checks += r.checks.size();
            for (const auto& ch : r.checks)
                if (!ch.pass && first_failure.empty()) first_failure = id + ": " + ch.name + " " + ch.witness;
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool pass = first_failure.empty() && seconds < c.limit_seconds;
        if (!pass) ++failures;
        std::printf("%s %2d %-32s %4zu checks  %7.2fs / %.0fs%s%s\n", pass ? "PASS" : "FAIL", c.number, c.title.c_str(), checks,
                    seconds, c.limit_seconds, first_failure.empty() ? "" : "  ", first_failure.c_str());
    }
    return failures == 0 ? 0 : 1;
}
