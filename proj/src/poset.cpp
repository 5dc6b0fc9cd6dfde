#include "qgr/poset.hpp"

#include "qgr/grassmann.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qgr {

namespace {

void check_shape(int m, int n) {
    if (m < 1 || m > n) throw std::invalid_argument("need 1 <= m <= n");
}

}  // namespace

bool GeneratorPoset::leq(const IndexSet& a, const IndexSet& b) const { return star_leq(a, b); }

GeneratorPoset generator_poset(int m, int n) {
    check_shape(m, n);
    return {Ambient{m, n}, m_subsets(n, m)};
}

std::vector<IndexSet> covers(const IndexSet& a, int n) {
    std::vector<IndexSet> out;
    const std::size_t m = a.size();
    for (std::size_t i = 0; i < m; ++i) {
        const int bound = i + 1 < m ? a[i + 1] : n + 1;
        if (a[i] + 1 < bound) {
            std::vector<int> raised = a.elems();
            ++raised[i];
            out.emplace_back(std::move(raised));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<IndexSet, IndexSet>> hasse_edges(int m, int n) {
    std::vector<std::pair<IndexSet, IndexSet>> edges;
    for (const auto& a : generator_poset(m, n).elements)
        for (auto& b : covers(a, n)) edges.emplace_back(a, std::move(b));
    return edges;
}

std::string hasse_dot(int m, int n) {
    auto label = [](const IndexSet& s) {
        std::string out;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(s[i]);
        }
        return "\"[" + out + "]\"";
    };
    std::ostringstream os;
    os << "digraph G_q_" << m << "_" << n << " {\n  rankdir=BT;\n";
    for (const auto& a : generator_poset(m, n).elements) os << "  " << label(a) << ";\n";
    for (const auto& [lo, hi] : hasse_edges(m, n)) os << "  " << label(lo) << " -> " << label(hi) << ";\n";
    os << "}\n";
    return os.str();
}

std::vector<Path> maximal_paths(int m, int n) {
    check_shape(m, n);
    const IndexSet bottom = IndexSet::range(1, m);
    const IndexSet top = IndexSet::range(n - m + 1, n);
    std::vector<Path> out;
    Path current{bottom};
    auto walk = [&](auto&& self) -> void {
        if (current.back() == top) {
            out.push_back(current);
            return;
        }
        for (const auto& next : covers(current.back(), n)) {
            current.push_back(next);
            self(self);
            current.pop_back();
        }
    };
    walk(walk);
    return out;
}

int maximal_path_length(int m, int n) {
    check_shape(m, n);
    // Longest chain of covers ending at top, by memoized search.
    const IndexSet top = IndexSet::range(n - m + 1, n);
    std::map<IndexSet, int> longest;
    auto search = [&](auto&& self, const IndexSet& a) -> int {
        if (a == top) return 1;
        auto it = longest.find(a);
        if (it != longest.end()) return it->second;
        int best = 0;
        for (const auto& b : covers(a, n)) best = std::max(best, self(self, b));
        const int len = best == 0 ? 0 : best + 1;
        longest.emplace(a, len);
        return len;
    };
    return search(search, IndexSet::range(1, m));
}

std::uint64_t hilbert_dimension(int m, int n, int d) {
    check_shape(m, n);
    if (d < 0) throw std::invalid_argument("degree must be nonnegative");
    if (d == 0) return 1;
    const auto elems = generator_poset(m, n).elements;
    // chains[k] = number of weakly increasing sequences ending at elems[k]
    std::vector<std::uint64_t> chains(elems.size(), 1);
    for (int step = 1; step < d; ++step) {
        std::vector<std::uint64_t> next(elems.size(), 0);
        for (std::size_t b = 0; b < elems.size(); ++b)
            for (std::size_t a = 0; a < elems.size(); ++a)
                if (star_leq(elems[a], elems[b])) next[b] += chains[a];
        chains = std::move(next);
    }
    std::uint64_t total = 0;
    for (auto c : chains) total += c;
    return total;
}

int hilbert_growth_degree(int m, int n, int samples) {
    std::vector<long double> diffs;
    std::vector<std::int64_t> values;
    for (int d = 1; d <= samples; ++d) values.push_back(static_cast<std::int64_t>(hilbert_dimension(m, n, d)));
    int order = 0;
    while (!values.empty()) {
        if (std::all_of(values.begin(), values.end(), [](std::int64_t v) { return v == 0; })) return order - 1;
        std::vector<std::int64_t> next;
        for (std::size_t i = 0; i + 1 < values.size(); ++i) next.push_back(values[i + 1] - values[i]);
        values = std::move(next);
        ++order;
    }
    return order - 1;
}

int gk_dimension(int m, int n) {
    check_shape(m, n);
    return m * (n - m) + 1;
}

}  // namespace qgr
