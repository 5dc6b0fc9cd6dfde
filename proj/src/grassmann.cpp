#include "qgr/grassmann.hpp"

#include "qgr/linear.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

namespace qgr {

// ---------------------------------------------------------------------------
// Tableaux and elements

Tableau concat(const Tableau& a, const Tableau& b) {
    Tableau t = a;
    t.rows.insert(t.rows.end(), b.rows.begin(), b.rows.end());
    return t;
}

std::string to_string(const Tableau& t) {
    if (t.empty()) return "1";
    std::string out;
    for (const auto& row : t.rows) {
        out += '[';
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(row[i]);
        }
        out += ']';
    }
    return out;
}

int Content::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

void check_tableau(Ambient amb, const Tableau& t) {
    for (const auto& row : t.rows) {
        if (static_cast<int>(row.size()) != amb.m)
            throw std::invalid_argument("tableau row " + to_string(row) + " does not have m = " +
                                        std::to_string(amb.m) + " columns");
        if (row.elems().front() < 1 || row.elems().back() > amb.n)
            throw std::out_of_range("tableau row " + to_string(row) + " outside 1.." + std::to_string(amb.n));
    }
}

GrassElem::GrassElem(Ambient amb, Terms terms) : amb_(amb) {
    for (auto& [t, c] : terms) add_term(t, c);
}

GrassElem GrassElem::one(Ambient amb) { return scalar(amb, Scalar(1)); }

GrassElem GrassElem::scalar(Ambient amb, const Scalar& c) {
    GrassElem g(amb);
    g.add_term(Tableau{}, c);
    return g;
}

GrassElem GrassElem::minor(Ambient amb, const IndexSet& cols) { return tableau(amb, Tableau{{cols}}); }

GrassElem GrassElem::tableau(Ambient amb, const Tableau& t) {
    GrassElem g(amb);
    g.add_term(t, Scalar(1));
    return g;
}

Scalar GrassElem::coeff(const Tableau& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Scalar() : it->second;
}

void GrassElem::add_term(const Tableau& t, const Scalar& c) {
    if (c.is_zero()) return;
    check_tableau(amb_, t);
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GrassElem& GrassElem::operator+=(const GrassElem& o) {
    if (o.amb_ != amb_) throw std::invalid_argument("ambient mismatch");
    for (const auto& [t, c] : o.terms_) add_term(t, c);
    return *this;
}

GrassElem& GrassElem::operator-=(const GrassElem& o) {
    if (o.amb_ != amb_) throw std::invalid_argument("ambient mismatch");
    for (const auto& [t, c] : o.terms_) add_term(t, -c);
    return *this;
}

GrassElem& GrassElem::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [t, coeff] : terms_) coeff *= c;
    return *this;
}

GrassElem operator*(const GrassElem& a, const GrassElem& b) {
    if (a.amb_ != b.amb_) throw std::invalid_argument("ambient mismatch");
    GrassElem out(a.amb_);
    for (const auto& [ta, ca] : a.terms_)
        for (const auto& [tb, cb] : b.terms_) out.add_term(concat(ta, tb), ca * cb);
    return out;
}

std::string to_string(const GrassElem& g) {
    if (g.is_zero()) return "0";
    std::string out;
    for (auto it = g.terms().rbegin(); it != g.terms().rend(); ++it)
        append_term(out, it->second, it->first.empty() ? std::string() : to_string(it->first));
    return out;
}

// ---------------------------------------------------------------------------
// Combinatorics

std::vector<IndexSet> subsets_of_size(const IndexSet& s, std::size_t k) {
    std::vector<IndexSet> out;
    if (k > s.size()) return out;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::vector<int> elems;
        for (auto i : idx) elems.push_back(s[i]);
        out.emplace_back(std::move(elems));
        // advance to the next combination
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == s.size() - k + pos - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::vector<IndexSet> m_subsets(int n, int m) { return subsets_of_size(IndexSet::range(1, n), static_cast<std::size_t>(m)); }

bool star_leq(const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

ColumnComparison compare_column_sets(const IndexSet& a, const IndexSet& b) { return {a < b, star_leq(a, b)}; }

bool is_preferred(const Tableau& t) {
    for (std::size_t r = 0; r + 1 < t.rows.size(); ++r)
        if (!star_leq(t.rows[r], t.rows[r + 1])) return false;
    return true;
}

Content content(const Tableau& t, int n) {
    Content c{std::vector<int>(static_cast<std::size_t>(n), 0)};
    for (const auto& row : t.rows)
        for (int x : row) ++c.counts[static_cast<std::size_t>(x - 1)];
    return c;
}

int ell(const IndexSet& i, const IndexSet& j) {
    int count = 0;
    for (int a : i)
        for (int b : j)
            if (a > b) ++count;
    return count;
}

namespace {

bool disjoint_union(const IndexSet& a, const IndexSet& b, IndexSet& out) {
    std::vector<int> v = a.elems();
    v.insert(v.end(), b.begin(), b.end());
    return IndexSet::try_make(std::move(v), out);
}

}  // namespace

GrassElem pluecker_relation(const IndexSet& j1, const IndexSet& j2, const IndexSet& k, Ambient amb) {
    const int m = amb.m;
    const int s1 = static_cast<int>(j1.size()), s2 = static_cast<int>(j2.size());
    const int sk = static_cast<int>(k.size());
    if (s1 > m || s2 > m) throw std::invalid_argument("Plucker relation needs |J1|, |J2| <= m");
    if (sk != 2 * m - s1 - s2) throw std::invalid_argument("Plucker relation needs |K| = 2m - |J1| - |J2|");
    if (sk <= m) throw std::invalid_argument("Plucker relation needs |K| > m");
    GrassElem rel(amb);
    for (const auto& kp : subsets_of_size(k, static_cast<std::size_t>(m - s1))) {
        const IndexSet kpp = k.minus(kp);
        IndexSet left, right;
        // A minor with a repeated column is zero.
        if (!disjoint_union(j1, kp, left) || !disjoint_union(kpp, j2, right)) continue;
        const int e = ell(j1, kp) + ell(kp, kpp) + ell(kpp, j2);
        rel.add_term(Tableau{{left, right}}, Scalar::neg_q_power(e));
    }
    return rel;
}

// ---------------------------------------------------------------------------
// Embedding

namespace {

std::shared_mutex g_embed_mu;
std::map<std::pair<Ambient, Tableau>, MatAlgElem> g_embed_cache;

}  // namespace

MatAlgElem embed(const Tableau& t, Ambient amb) {
    check_tableau(amb, t);
    auto key = std::make_pair(amb, t);
    {
        std::shared_lock lock(g_embed_mu);
        auto it = g_embed_cache.find(key);
        if (it != g_embed_cache.end()) return it->second;
    }
    const IndexSet rows = IndexSet::range(1, amb.m);
    MatAlgElem prod = MatAlgElem::one(amb);
    if (!t.empty()) {
        // Reuse the embedding of the tableau without its last row.
        Tableau head = t;
        head.rows.pop_back();
        prod = mul(embed(head, amb), quantum_minor(rows, t.rows.back(), amb));
    }
    std::unique_lock lock(g_embed_mu);
    g_embed_cache.emplace(key, prod);
    return prod;
}

MatAlgElem embed(const GrassElem& g) {
    MatAlgElem out(g.ambient());
    for (const auto& [t, c] : g.terms()) out += c * embed(t, g.ambient());
    return out;
}

// ---------------------------------------------------------------------------
// Straightening

std::vector<Tableau> preferred_tableaux(Ambient amb, const Content& c) {
    std::vector<Tableau> out;
    const int total = c.total();
    if (static_cast<int>(c.counts.size()) != amb.n || total % amb.m != 0) return out;
    const int rows = total / amb.m;
    std::vector<int> remaining = c.counts;
    Tableau current;
    // Rows are chosen in weakly increasing componentwise order.
    auto recurse = [&](auto&& self) -> void {
        if (static_cast<int>(current.size()) == rows) {
            out.push_back(current);
            return;
        }
        std::vector<int> avail;
        for (int i = 1; i <= amb.n; ++i)
            if (remaining[static_cast<std::size_t>(i - 1)] > 0) avail.push_back(i);
        for (const auto& row : subsets_of_size(IndexSet(avail), static_cast<std::size_t>(amb.m))) {
            if (!current.empty() && !star_leq(current.rows.back(), row)) continue;
            for (int x : row) --remaining[static_cast<std::size_t>(x - 1)];
            current.rows.push_back(row);
            self(self);
            current.rows.pop_back();
            for (int x : row) ++remaining[static_cast<std::size_t>(x - 1)];
        }
    };
    recurse(recurse);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct StraighteningSystem {
    std::vector<Tableau> basis;
    EchelonBasis<PbwMonomial> echelon;
};

std::mutex g_system_mu;
std::map<std::pair<Ambient, Content>, std::shared_ptr<const StraighteningSystem>> g_systems;

std::shared_ptr<const StraighteningSystem> system_for(Ambient amb, const Content& c) {
    auto key = std::make_pair(amb, c);
    {
        std::lock_guard lock(g_system_mu);
        auto it = g_systems.find(key);
        if (it != g_systems.end()) return it->second;
    }
    auto sys = std::make_shared<StraighteningSystem>();
    sys->basis = preferred_tableaux(amb, c);
    for (const auto& t : sys->basis) {
        const MatAlgElem e = embed(t, amb);
        if (!sys->echelon.insert(SparseVec<PbwMonomial>(e.terms().begin(), e.terms().end())))
            throw std::logic_error("preferred products of content are linearly dependent");
    }
    std::lock_guard lock(g_system_mu);
    return g_systems.emplace(key, sys).first->second;
}

std::map<Content, GrassElem> by_content(const GrassElem& g) {
    std::map<Content, GrassElem> parts;
    for (const auto& [t, c] : g.terms()) {
        auto [it, inserted] = parts.try_emplace(content(t, g.ambient().n), g.ambient());
        it->second.add_term(t, c);
    }
    return parts;
}

}  // namespace

GrassElem straighten(const GrassElem& g) {
    const Ambient amb = g.ambient();
    GrassElem out(amb);
    for (const auto& [c, part] : by_content(g)) {
        const bool already = std::all_of(part.terms().begin(), part.terms().end(),
                                         [](const auto& kv) { return is_preferred(kv.first); });
        if (already) {
            out += part;
            continue;
        }
        auto sys = system_for(amb, c);
        const MatAlgElem e = embed(part);
        auto coords = sys->echelon.solve(SparseVec<PbwMonomial>(e.terms().begin(), e.terms().end()));
        if (!coords) throw std::logic_error("straightening system is inconsistent");
        for (std::size_t i = 0; i < coords->size(); ++i) out.add_term(sys->basis[i], (*coords)[i]);
    }
    return out;
}

GrassElem straighten_by_pluecker(const GrassElem& g) {
    const Ambient amb = g.ambient();
    GrassElem out(amb);
    GrassElem work = g;
    // Each rewrite strictly lowers the tableau in lexicographic row order, so
    // processing the largest tableau first terminates.
    while (!work.is_zero()) {
        auto it = std::prev(work.terms().end());
        const Tableau t = it->first;
        const Scalar c = it->second;
        work.add_term(t, -c);
        std::size_t r = 0;
        while (r + 1 < t.size() && star_leq(t.rows[r], t.rows[r + 1])) ++r;
        if (r + 1 >= t.size()) {
            out.add_term(t, c);
            continue;
        }
        const IndexSet& upper = t.rows[r];
        const IndexSet& lower = t.rows[r + 1];
        std::size_t p = 0;
        while (upper[p] <= lower[p]) ++p;
        std::vector<int> head(upper.begin(), upper.begin() + static_cast<std::ptrdiff_t>(p));
        std::vector<int> tail(lower.begin() + static_cast<std::ptrdiff_t>(p) + 1, lower.end());
        std::vector<int> kcols(upper.begin() + static_cast<std::ptrdiff_t>(p), upper.end());
        kcols.insert(kcols.end(), lower.begin(), lower.begin() + static_cast<std::ptrdiff_t>(p) + 1);
        const GrassElem rel = pluecker_relation(IndexSet(head), IndexSet(tail), IndexSet(kcols), amb);
        const Tableau pair{{upper, lower}};
        const Scalar lead = rel.coeff(pair);
        if (lead.is_zero()) throw std::logic_error("Plucker rewrite lost its leading term");
        for (const auto& [rt, rc] : rel.terms()) {
            if (rt == pair) continue;
            Tableau replaced = t;
            replaced.rows[r] = rt.rows[0];
            replaced.rows[r + 1] = rt.rows[1];
            work.add_term(replaced, -c * rc / lead);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Commutation and normality

CommutationReport commutation_check(const IndexSet& i, const IndexSet& j, Ambient amb) {
    if (!(i < j)) throw std::invalid_argument("commutation check needs I <lex J");
    check_tableau(amb, Tableau{{i, j}});
    CommutationReport rep;
    const IndexSet common = i.intersected(j);
    const IndexSet all = i.united(j);
    rep.s = amb.m - static_cast<int>(common.size());
    const GrassElem lhs = GrassElem::tableau(amb, Tableau{{i, j}});
    const GrassElem rhs = Scalar::q_power(rep.s) * GrassElem::tableau(amb, Tableau{{j, i}});
    rep.defect = straighten(lhs - rhs);

    // L ranges over m-subsets of I u J containing I n J, below I.
    EchelonBasis<Tableau> span;
    for (const auto& extra : subsets_of_size(all.minus(common), static_cast<std::size_t>(amb.m) - common.size())) {
        const IndexSet l = common.united(extra);
        if (!(l < i)) continue;
        const IndexSet lp = common.united(all.minus(l));
        const Tableau t{{l, lp}};
        rep.allowed.push_back(t);
        const GrassElem st = straighten(GrassElem::tableau(amb, t));
        span.insert(SparseVec<Tableau>(st.terms().begin(), st.terms().end()));
    }
    rep.structural = std::all_of(rep.defect.terms().begin(), rep.defect.terms().end(), [&](const auto& kv) {
        return std::find(rep.allowed.begin(), rep.allowed.end(), kv.first) != rep.allowed.end();
    });
    rep.conforms = span.solve(SparseVec<Tableau>(rep.defect.terms().begin(), rep.defect.terms().end())).has_value();
    return rep;
}

NormalityReport normality_mod_ideal_check(const IndexSet& i, Ambient amb) {
    NormalityReport rep{true, true};
    for (const auto& j : m_subsets(amb.n, amb.m)) {
        if (j == i) continue;
        const IndexSet& lo = i < j ? i : j;
        const IndexSet& hi = i < j ? j : i;
        const int s = amb.m - static_cast<int>(lo.intersected(hi).size());
        const GrassElem defect = straighten(GrassElem::tableau(amb, Tableau{{lo, hi}}) -
                                           Scalar::q_power(s) * GrassElem::tableau(amb, Tableau{{hi, lo}}));
        if (!defect.is_zero()) rep.normal = false;
        for (const auto& [t, c] : defect.terms())
            if (t.empty() || !(t.rows.front() < i)) rep.normal_mod_lower = false;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// delta

GrassElem delta_map(const GrassElem& g) {
    const Ambient amb = g.ambient();
    GrassElem out(amb);
    for (const auto& [t, c] : g.terms()) {
        Tableau image;
        for (const auto& row : t.rows) {
            std::vector<int> cols;
            for (int x : row) cols.push_back(amb.n + 1 - x);
            image.rows.emplace_back(std::move(cols));
        }
        out.add_term(image, c.invert_q());
    }
    return out;
}

}  // namespace qgr
