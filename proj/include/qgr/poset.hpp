#pragma once

// The componentwise order on the generating minors of G_q(m,n): covers,
// saturated and maximal paths, Hilbert function, GK dimension.

#include "qgr/qmatrix.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qgr {

using Path = std::vector<IndexSet>;

struct GeneratorPoset {
    Ambient amb;
    std::vector<IndexSet> elements;  // all m-subsets, lexicographic

    bool leq(const IndexSet& a, const IndexSet& b) const;
};

/// Throws std::invalid_argument unless 1 <= m <= n.
GeneratorPoset generator_poset(int m, int n);

/// Upper covers of A: raise one entry a_i to a_i + 1 while keeping the set
/// strictly increasing and inside 1..n.
std::vector<IndexSet> covers(const IndexSet& a, int n);

/// Cover relations of the whole poset, as (lower, upper) pairs.
std::vector<std::pair<IndexSet, IndexSet>> hasse_edges(int m, int n);
std::string hasse_dot(int m, int n);

/// Every saturated path from {1..m} to {n-m+1..n}.
std::vector<Path> maximal_paths(int m, int n);
/// Number of nodes on a longest saturated path from bottom to top.
int maximal_path_length(int m, int n);

/// Number of preferred m-tableaux with d rows, i.e. weakly increasing
/// sequences of d generators; dim of the degree-d part of G_q(m,n).
std::uint64_t hilbert_dimension(int m, int n, int d);

/// Least k such that the (k+1)-th finite differences of d -> hilbert_dimension
/// vanish on d = 1..samples. Needs samples >= k + 2 to be meaningful.
int hilbert_growth_degree(int m, int n, int samples);

/// m(n-m) + 1
int gk_dimension(int m, int n);

}  // namespace qgr
