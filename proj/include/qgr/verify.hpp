#pragma once

// Named verification suites: each enumerates a fixed set of exact identities
// and reports every case.

#include "qgr/qmatrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qgr {

struct CaseResult {
    std::string key;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseResult> cases;  // sorted by key

    std::size_t passed() const;
    std::size_t failed() const { return cases.size() - passed(); }
    bool all_pass() const { return failed() == 0; }
};

struct SuiteOptions {
    /// Restricts the suite to one ambient instead of its default list.
    std::optional<Ambient> ambient;
    /// Keeps only cases whose key contains this substring.
    std::string filter;
};

/// relations24, commr, mincomm, gamma, tau, pluecker, basis, hilbert (alias
/// poset), rho, gens, coinv, delta.
std::vector<std::string> suite_names();

/// Throws std::invalid_argument for an unknown suite or an ambient the suite
/// cannot use.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

/// The 15 pairwise commutation relations of G_q(2,4) and its Plucker
/// relation, as (lhs, rhs) expression texts.
const std::vector<std::pair<std::string, std::string>>& g24_relations();

/// Reference table of the 30 cover edges (upper, lower) of the generator
/// poset of G_q(3,6), written out by hand.
const std::vector<std::pair<std::string, std::string>>& hasse_36_table();

}  // namespace qgr
