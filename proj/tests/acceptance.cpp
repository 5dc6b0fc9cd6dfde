// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Exit status is nonzero when any criterion fails.

#include "properties.hpp"

#include "qgr/verify.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

namespace {

struct Outcome {
    bool pass = false;
    std::string summary;
};

Outcome suites(const std::vector<std::string>& names) {
    Outcome out{true, {}};
    for (const auto& name : names) {
        const qgr::SuiteReport r = qgr::run_suite(name);
        if (!out.summary.empty()) out.summary += ", ";
        out.summary += name + " " + std::to_string(r.passed()) + "/" + std::to_string(r.cases.size());
        if (r.cases.empty() || !r.all_pass()) out.pass = false;
        for (const auto& c : r.cases)
            if (!c.pass) out.summary += " [FAIL " + c.key + ": " + c.detail + "]";
    }
    return out;
}

Outcome properties() {
    Outcome out{true, {}};
    int total = 0;
    for (const auto& p : qgr::props::run_all()) {
        total += p.cases;
        if (p.pass() && p.cases >= 100) continue;
        out.pass = false;
        out.summary += " [FAIL " + p.name + " " + std::to_string(p.failures) + "/" + std::to_string(p.cases) +
                       ": " + p.first_failure + "]";
    }
    out.summary = std::to_string(total) + " cases" + out.summary;
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        Outcome (*run)();
    };
    const std::vector<Criterion> criteria = {
        {1, "G_q(2,4) commutation and Plucker relations", [] { return suites({"relations24"}); }},
        {2, "generalized Plucker relations vanish", [] { return suites({"pluecker"}); }},
        {3, "preferred tableaux form a basis", [] { return suites({"basis"}); }},
        {4, "commutation relations between generators", [] { return suites({"commr"}); }},
        {5, "generators q-commute with the top minor", [] { return suites({"mincomm"}); }},
        {6, "gamma and tau on quantum minors", [] { return suites({"gamma", "tau"}); }},
        {7, "poset, Hilbert function and GK dimension", [] { return suites({"hilbert"}); }},
        {8, "rho respects relations and is injective", [] { return suites({"rho"}); }},
        {9, "brace generators generate", [] { return suites({"gens"}); }},
        {10, "maximal minors are semi-invariant under the coaction", [] { return suites({"coinv"}); }},
        {11, "delta maps relations to relations", [] { return suites({"delta"}); }},
        {12, "randomized identities (>= 100 cases each)", properties},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failed;
        std::printf("%s criterion %2d: %s (%s; %.2fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.summary.c_str(), secs);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
