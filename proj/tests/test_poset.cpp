#include "qgr/poset.hpp"

#include "qgr/grassmann.hpp"
#include "qgr/verify.hpp"

#include <catch_amalgamated.hpp>
#include <set>

using namespace qgr;

namespace {

// Hook-content formula: preferred tableaux with d rows of m columns are
// semistandard tableaux of the m x d rectangle with entries in 1..n.
Rational hook_content(int m, int n, int d) {
    Rational out(1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < d; ++j) {
            Rational f(n + j - i, (d - j - 1) + (m - i - 1) + 1);
            f.canonicalize();
            out *= f;
        }
    return out;
}

// Hook-length formula for standard tableaux of the m x k rectangle; these are
// the maximal chains of the generator poset.
Rational standard_tableaux(int m, int k) {
    Rational out(1);
    for (int c = 1; c <= m * k; ++c) out *= c;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < k; ++j) out /= (k - j - 1) + (m - i - 1) + 1;
    return out;
}

IndexSet digits(const std::string& s) {
    std::vector<int> v;
    for (char c : s) v.push_back(c - '0');
    return IndexSet(v);
}

}  // namespace

TEST_CASE("Hilbert function matches the hook-content formula", "[poset][oracle]") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 4}, {2, 5}, {3, 6}, {2, 6}, {4, 7}})
        for (int d = 0; d <= 5; ++d) {
            INFO(m << " " << n << " " << d);
            CHECK(Rational(static_cast<unsigned long>(hilbert_dimension(m, n, d))) == hook_content(m, n, d));
        }
    std::vector<std::uint64_t> dims;
    for (int d = 0; d <= 6; ++d) dims.push_back(hilbert_dimension(2, 4, d));
    CHECK(dims == std::vector<std::uint64_t>{1, 6, 20, 50, 105, 196, 336});
}

TEST_CASE("maximal paths", "[poset][oracle]") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}, {1, 4}, {2, 6}}) {
        INFO(m << " " << n);
        const auto paths = maximal_paths(m, n);
        CHECK(Rational(static_cast<unsigned long>(paths.size())) == standard_tableaux(m, n - m));
        for (const auto& p : paths) {
            CHECK(static_cast<int>(p.size()) == gk_dimension(m, n));
            CHECK(p.front() == IndexSet::range(1, m));
            CHECK(p.back() == IndexSet::range(n - m + 1, n));
        }
        CHECK(maximal_path_length(m, n) == m * (n - m) + 1);
    }
    CHECK(maximal_path_length(3, 6) == 10);
}

TEST_CASE("componentwise order is a partial order", "[poset]") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}}) {
        const GeneratorPoset p = generator_poset(m, n);
        for (const auto& a : p.elements) {
            CHECK(p.leq(a, a));
            for (const auto& b : p.elements) {
                if (a != b) CHECK_FALSE((p.leq(a, b) && p.leq(b, a)));
                for (const auto& c : p.elements)
                    if (p.leq(a, b) && p.leq(b, c)) CHECK(p.leq(a, c));
            }
        }
    }
}

TEST_CASE("cover relations", "[poset]") {
    CHECK(covers({1, 3}, 4) == std::vector<IndexSet>{{1, 4}, {2, 3}});
    CHECK(covers({3, 4}, 4).empty());

    std::set<std::pair<IndexSet, IndexSet>> computed;
    for (const auto& e : hasse_edges(3, 6)) computed.insert(e);
    std::set<std::pair<IndexSet, IndexSet>> table;
    for (const auto& [upper, lower] : hasse_36_table()) table.insert({digits(lower), digits(upper)});
    CHECK(computed == table);
    CHECK(computed.size() == 30);

    const GeneratorPoset p = generator_poset(2, 4);
    CHECK(p.elements.size() == 6);
    CHECK(p.leq({1, 3}, {2, 4}));
    CHECK_FALSE(p.leq({1, 4}, {2, 3}));
    CHECK_THROWS_AS(generator_poset(5, 4), std::invalid_argument);
}

TEST_CASE("Hasse diagram in DOT", "[poset]") {
    const std::string dot = hasse_dot(2, 4);
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("\"[1 3]\" -> \"[1 4]\"") != std::string::npos);
}

TEST_CASE("GK dimension and growth", "[poset]") {
    CHECK(gk_dimension(2, 4) == 5);
    CHECK(gk_dimension(3, 6) == 10);
    CHECK(hilbert_growth_degree(2, 4, 8) == 4);
    CHECK(hilbert_growth_degree(2, 5, 10) == gk_dimension(2, 5) - 1);
    CHECK(hilbert_growth_degree(1, 3, 6) == 2);
}
