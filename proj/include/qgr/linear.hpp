#pragma once

// Incremental row echelon form over Q(q) for sparse vectors.

#include "qgr/coeff.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace qgr {

template <class Key>
using SparseVec = std::map<Key, Scalar>;

template <class Key>
void axpy(SparseVec<Key>& y, const Scalar& a, const SparseVec<Key>& x) {
    if (a.is_zero()) return;
    for (const auto& [k, v] : x) {
        auto [it, inserted] = y.try_emplace(k, a * v);
        if (!inserted) {
            it->second += a * v;
            if (it->second.is_zero()) y.erase(it);
        }
    }
}

/// Vectors are inserted one at a time; each inserted vector gets the index
/// of its insert() call. Dependent vectors are rejected and not stored.
template <class Key>
class EchelonBasis {
public:
    using Vec = SparseVec<Key>;

    /// Returns false when v lies in the span of the vectors already stored.
    bool insert(Vec v) {
        const std::size_t index = inserted_++;
        std::map<std::size_t, Scalar> comb{{index, Scalar(1)}};
        reduce(v, comb);
        if (v.empty()) return false;
        auto pivot = choose_pivot(v);
        rows_.push_back(Row{pivot, std::move(v), std::move(comb)});
        return true;
    }

    std::size_t rank() const { return rows_.size(); }
    std::size_t inserted() const { return inserted_; }

    /// Coordinates of target over the inserted vectors (dense, by insert
    /// index), or nullopt if target is outside their span.
    std::optional<std::vector<Scalar>> solve(Vec target) const {
        std::map<std::size_t, Scalar> comb;
        std::vector<Scalar> coords(inserted_);
        for (const auto& row : rows_) {
            auto it = target.find(row.pivot);
            if (it == target.end()) continue;
            const Scalar f = it->second / row.vec.at(row.pivot);
            axpy(target, -f, row.vec);
            for (const auto& [i, c] : row.comb) coords[i] += f * c;
        }
        if (!target.empty()) return std::nullopt;
        return coords;
    }

private:
    struct Row {
        Key pivot;
        Vec vec;
        std::map<std::size_t, Scalar> comb;
    };

    void reduce(Vec& v, std::map<std::size_t, Scalar>& comb) const {
        for (const auto& row : rows_) {
            auto it = v.find(row.pivot);
            if (it == v.end()) continue;
            const Scalar f = it->second / row.vec.at(row.pivot);
            axpy(v, -f, row.vec);
            axpy(comb, -f, row.comb);
        }
    }

    // Prefer a pivot whose entry is +-q^k so elimination stays in Z[q, q^-1].
    static Key choose_pivot(const Vec& v) {
        const Key* best = nullptr;
        std::size_t best_cost = static_cast<std::size_t>(-1);
        for (const auto& [k, c] : v) {
            std::size_t cost = c.num().terms().size() + 4 * (c.den().terms().size() - 1);
            if (c.num().is_monomial() && c.is_laurent() && abs(c.num().trailing_coeff()) == 1) cost = 0;
            if (cost < best_cost) {
                best_cost = cost;
                best = &k;
                if (cost == 0) break;
            }
        }
        return *best;
    }

    std::vector<Row> rows_;
    std::size_t inserted_ = 0;
};

}  // namespace qgr
