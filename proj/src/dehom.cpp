#include "qgr/dehom.hpp"

#include "qgr/linear.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgr {

IndexSet top_set(Ambient amb) { return IndexSet::range(amb.n - amb.m + 1, amb.n); }

int s_exponent(const IndexSet& i, Ambient amb) {
    return amb.m - static_cast<int>(i.intersected(top_set(amb)).size());
}

bool mincomm_check(const IndexSet& i, Ambient amb) {
    const IndexSet b = top_set(amb);
    const MatAlgElem lhs = embed(Tableau{{i, b}}, amb);
    const MatAlgElem rhs = Scalar::q_power(s_exponent(i, amb)) * embed(Tableau{{b, i}}, amb);
    return lhs == rhs;
}

namespace {

int row_weight(const Tableau& t, Ambient amb) {
    int total = 0;
    for (const auto& row : t.rows) total += s_exponent(row, amb);
    return total;
}

}  // namespace

GrassElem sigma(const GrassElem& g, int k) {
    GrassElem out(g.ambient());
    for (const auto& [t, c] : g.terms()) out.add_term(t, c * Scalar::q_power(-k * row_weight(t, g.ambient())));
    return out;
}

// ---------------------------------------------------------------------------
// DhomElem

DhomElem DhomElem::from_powers(Ambient amb, Powers powers) {
    DhomElem out(amb);
    for (auto& [c, r] : powers) {
        if (r.ambient() != amb) throw std::invalid_argument("ambient mismatch");
        if (!r.is_zero()) out.powers_.emplace(c, std::move(r));
    }
    return out;
}

DhomElem DhomElem::one(Ambient amb) { return scalar(amb, Scalar(1)); }

DhomElem DhomElem::scalar(Ambient amb, const Scalar& c) {
    return from_powers(amb, {{0, GrassElem::scalar(amb, c)}});
}

DhomElem DhomElem::fraction(const GrassElem& r, int c) {
    return normalize_dhom(from_powers(r.ambient(), {{c, r}}));
}

DhomElem DhomElem::brace(Ambient amb, const IndexSet& cols) { return fraction(GrassElem::minor(amb, cols), 1); }

DhomElem& DhomElem::operator+=(const DhomElem& o) {
    if (amb_ != o.amb_) throw std::invalid_argument("ambient mismatch");
    for (const auto& [c, r] : o.powers_) {
        auto [it, inserted] = powers_.try_emplace(c, r);
        if (!inserted) {
            it->second += r;
            if (it->second.is_zero()) powers_.erase(it);
        }
    }
    return *this;
}

DhomElem& DhomElem::operator-=(const DhomElem& o) { return *this += Scalar(-1) * o; }

DhomElem& DhomElem::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        powers_.clear();
        return *this;
    }
    for (auto& [p, r] : powers_) r *= c;
    return *this;
}

DhomElem operator*(const DhomElem& a, const DhomElem& b) { return dhom_mul(a, b); }

namespace {

// Pieces r_c of degree c + degree: straighten, then move trailing top rows down.
DhomElem::Powers normalize_pieces(Ambient amb, const DhomElem::Powers& in, int degree) {
    const IndexSet b = top_set(amb);
    DhomElem::Powers pieces;
    for (const auto& [c, r] : in) {
        if (c < 0) throw std::invalid_argument("negative denominator power");
        if (r.ambient() != amb) throw std::invalid_argument("ambient mismatch");
        for (const auto& [t, coeff] : r.terms())
            if (static_cast<int>(t.size()) != c + degree)
                throw std::invalid_argument("numerator " + to_string(t) + " is not of degree " +
                                            std::to_string(c + degree));
        GrassElem s = straighten(r);
        if (!s.is_zero()) pieces.emplace(c, std::move(s));
    }
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
        const int c = it->first;
        if (c == 0) break;
        GrassElem keep(amb), lowered(amb);
        for (const auto& [t, coeff] : it->second.terms()) {
            if (!t.empty() && t.rows.back() == b) {
                lowered.add_term(Tableau{std::vector<IndexSet>(t.rows.begin(), t.rows.end() - 1)}, coeff);
            } else {
                keep.add_term(t, coeff);
            }
        }
        it->second = std::move(keep);
        if (!lowered.is_zero()) {
            auto [below, inserted] = pieces.try_emplace(c - 1, lowered);
            if (!inserted) below->second += lowered;
        }
    }
    std::erase_if(pieces, [](const auto& kv) { return kv.second.is_zero(); });
    return pieces;
}

// (r b^-c)(s b^-e) = r sigma^-c(s) b^-(c+e)
DhomElem::Powers multiply_pieces(const DhomElem::Powers& a, const DhomElem::Powers& b) {
    DhomElem::Powers out;
    for (const auto& [c, r] : a) {
        for (const auto& [e, s] : b) {
            GrassElem prod = r * sigma(s, -c);
            auto [it, inserted] = out.try_emplace(c + e, prod);
            if (!inserted) it->second += prod;
        }
    }
    return out;
}

void add_pieces(DhomElem::Powers& into, const DhomElem::Powers& from) {
    for (const auto& [c, r] : from) {
        auto [it, inserted] = into.try_emplace(c, r);
        if (!inserted) {
            it->second += r;
            if (it->second.is_zero()) into.erase(it);
        }
    }
}

}  // namespace

DhomElem normalize_dhom(const DhomElem& a) {
    return DhomElem::from_powers(a.ambient(), normalize_pieces(a.ambient(), a.powers(), 0));
}

DhomElem dhom_mul(const DhomElem& a, const DhomElem& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient mismatch");
    return DhomElem::from_powers(a.ambient(),
                                 normalize_pieces(a.ambient(), multiply_pieces(a.powers(), b.powers()), 0));
}

// ---------------------------------------------------------------------------
// LocalElem

LocalElem LocalElem::from_grass(const GrassElem& g) {
    int degree = -1;
    for (const auto& [t, c] : g.terms()) {
        if (degree >= 0 && static_cast<int>(t.size()) != degree)
            throw std::invalid_argument("element is not homogeneous");
        degree = static_cast<int>(t.size());
    }
    LocalElem out(g.ambient(), std::max(degree, 0));
    if (!g.is_zero()) out.powers_ = normalize_pieces(g.ambient(), {{0, g}}, out.degree_);
    return out;
}

LocalElem LocalElem::from_dhom(const DhomElem& a) {
    LocalElem out(a.ambient(), 0);
    out.powers_ = a.powers();
    return out;
}

LocalElem LocalElem::b_power(Ambient amb, int k) {
    LocalElem out(amb, k);
    if (k >= 0) {
        out.powers_.emplace(0, GrassElem::tableau(amb, Tableau{std::vector<IndexSet>(static_cast<std::size_t>(k), top_set(amb))}));
    } else {
        out.powers_.emplace(-k, GrassElem::one(amb));
    }
    return out;
}

LocalElem& LocalElem::operator+=(const LocalElem& o) {
    if (amb_ != o.amb_) throw std::invalid_argument("ambient mismatch");
    if (o.is_zero()) return *this;
    if (is_zero()) {
        degree_ = o.degree_;
    } else if (degree_ != o.degree_) {
        throw std::invalid_argument("cannot add elements of degree " + std::to_string(degree_) + " and " +
                                    std::to_string(o.degree_));
    }
    add_pieces(powers_, o.powers_);
    return *this;
}

LocalElem& LocalElem::operator-=(const LocalElem& o) {
    LocalElem neg = o;
    neg *= Scalar(-1);
    return *this += neg;
}

LocalElem& LocalElem::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        powers_.clear();
        return *this;
    }
    for (auto& [p, r] : powers_) r *= c;
    return *this;
}

LocalElem operator*(const LocalElem& a, const LocalElem& b) {
    if (a.amb_ != b.amb_) throw std::invalid_argument("ambient mismatch");
    LocalElem out(a.amb_, a.degree_ + b.degree_);
    out.powers_ = normalize_pieces(a.amb_, multiply_pieces(a.powers_, b.powers_), out.degree_);
    return out;
}

DhomElem LocalElem::to_dhom() const {
    if (!is_zero() && degree_ != 0)
        throw std::invalid_argument("element of degree " + std::to_string(degree_) + " is not in Dhom");
    return DhomElem::from_powers(amb_, powers_);
}

GrassElem clear_to_power(const DhomElem& a, int c) {
    if (c < a.max_power()) throw std::invalid_argument("power below the largest denominator");
    const Ambient amb = a.ambient();
    GrassElem out(amb);
    for (const auto& [k, r] : a.powers()) {
        Tableau bs{std::vector<IndexSet>(static_cast<std::size_t>(c - k), top_set(amb))};
        out += r * GrassElem::tableau(amb, bs);
    }
    return straighten(out);
}

namespace {

std::string brace_word(const std::vector<IndexSet>& word) {
    std::string out;
    for (const auto& s : word) {
        out += '{';
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(s[i]);
        }
        out += '}';
    }
    return out;
}

}  // namespace

std::string to_string(const DhomElem& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (auto p = a.powers().rbegin(); p != a.powers().rend(); ++p) {
        for (auto it = p->second.terms().rbegin(); it != p->second.terms().rend(); ++it) {
            const auto& rows = it->first.rows;
            int shift = 0;
            for (std::size_t k = 0; k < rows.size(); ++k) shift += static_cast<int>(k) * s_exponent(rows[k], a.ambient());
            append_term(out, it->second * Scalar::q_power(-shift), brace_word(rows));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Brace polynomials

std::string to_string(const BracePoly& p) {
    std::string out;
    for (const auto& [word, c] : p)
        if (!c.is_zero()) append_term(out, c, brace_word(word));
    return out.empty() ? "0" : out;
}

DhomElem evaluate(const BracePoly& p, Ambient amb) {
    DhomElem out(amb);
    for (const auto& [word, c] : p) {
        DhomElem term = DhomElem::scalar(amb, c);
        for (const auto& cols : word) term = dhom_mul(term, DhomElem::brace(amb, cols));
        out += term;
    }
    return out;
}

bool is_brace_generator(const IndexSet& i, Ambient amb) {
    return static_cast<int>(i.size()) == amb.m && i.minus(top_set(amb)).size() == 1;
}

BracePoly gens_expand(const IndexSet& i, Ambient amb) {
    check_tableau(amb, Tableau{{i}});
    const IndexSet top = top_set(amb);
    if (i == top) return {{BraceWord{}, Scalar(1)}};
    if (is_brace_generator(i, amb)) return {{BraceWord{i}, Scalar(1)}};

    const int i1 = i[0];
    const IndexSet j2 = i.minus(IndexSet{i1});
    const IndexSet k = top.united(IndexSet{i1});
    const GrassElem rel = pluecker_relation(IndexSet{}, j2, k, amb);
    const Tableau lead{{top, i}};
    const Scalar c_lead = rel.coeff(lead);
    if (c_lead.is_zero()) throw std::logic_error("Plucker instance lacks the b[I] term");

    // b[I] = sum_l c_l [A_l][B_l], hence {I} = sum_l c_l q^{s(A_l)} {A_l}{B_l}.
    BracePoly out;
    for (const auto& [t, c] : rel.terms()) {
        if (t == lead) continue;
        const IndexSet& a = t.rows[0];
        const IndexSet& b = t.rows[1];
        if (!is_brace_generator(a, amb)) throw std::logic_error("unexpected Plucker term " + to_string(t));
        const Scalar coeff = -c / c_lead * Scalar::q_power(s_exponent(a, amb));
        for (const auto& [word, d] : gens_expand(b, amb)) {
            BraceWord w{a};
            w.insert(w.end(), word.begin(), word.end());
            Scalar& slot = out[w];
            slot += coeff * d;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

// ---------------------------------------------------------------------------
// rho

DhomElem rho_generator(int i, int j, Ambient amb) {
    if (i < 1 || i > amb.m || j < 1 || j > amb.n - amb.m)
        throw std::out_of_range("rho generator index out of range");
    const IndexSet cols = top_set(amb).minus(IndexSet{amb.n - i + 1}).united(IndexSet{j});
    return DhomElem::brace(amb, cols);
}

DhomElem rho(const MatAlgElem& x, Ambient amb) {
    const Ambient small{amb.m, amb.n - amb.m};
    if (x.ambient() != small) throw std::invalid_argument("rho expects an element of O_q(M_{m,n-m})");
    std::vector<DhomElem> images;
    for (int g = 0; g < small.generators(); ++g) images.push_back(rho_generator(g / small.n + 1, g % small.n + 1, amb));
    DhomElem out(amb);
    for (const auto& [mono, c] : x.terms()) {
        DhomElem term = DhomElem::scalar(amb, c);
        for (int g : mono.word()) term = dhom_mul(term, images[static_cast<std::size_t>(g)]);
        out += term;
    }
    return out;
}

bool RhoReport::all_pass() const {
    return std::all_of(instances.begin(), instances.end(), [](const RhoInstance& r) { return r.pass; });
}

std::size_t RhoReport::count(const std::string& family) const {
    return static_cast<std::size_t>(
        std::count_if(instances.begin(), instances.end(), [&](const RhoInstance& r) { return r.family == family; }));
}

RhoReport verify_rho_relations(Ambient amb) {
    if (amb.m >= amb.n) throw std::invalid_argument("rho needs m < n");
    const int m = amb.m;
    const int p = amb.n - amb.m;
    auto x = [&](int i, int j) { return rho_generator(i, j, amb); };
    auto name = [](int i, int j) { return "X[" + std::to_string(i) + "," + std::to_string(j) + "]"; };
    const Scalar q = Scalar::q();
    RhoReport report;
    auto record = [&](std::string family, std::string relation, bool pass) {
        report.instances.push_back({std::move(family), std::move(relation), pass});
    };

    for (int j = 1; j <= p; ++j)
        for (int i = 1; i <= m; ++i)
            for (int l = i + 1; l <= m; ++l)
                record("same-column", name(i, j) + "*" + name(l, j) + " = q*" + name(l, j) + "*" + name(i, j),
                       x(i, j) * x(l, j) == q * (x(l, j) * x(i, j)));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= p; ++j)
            for (int r = j + 1; r <= p; ++r)
                record("same-row", name(i, j) + "*" + name(i, r) + " = q*" + name(i, r) + "*" + name(i, j),
                       x(i, j) * x(i, r) == q * (x(i, r) * x(i, j)));
    for (int i = 1; i <= m; ++i)
        for (int l = i + 1; l <= m; ++l)
            for (int j = 1; j <= p; ++j)
                for (int r = j + 1; r <= p; ++r) {
                    record("crossing",
                           name(i, j) + "*" + name(l, r) + " - " + name(l, r) + "*" + name(i, j) + " = (q - q^-1)*" +
                               name(i, r) + "*" + name(l, j),
                           x(i, j) * x(l, r) - x(l, r) * x(i, j) == (q - q.inverse()) * (x(i, r) * x(l, j)));
                    record("commuting", name(i, r) + "*" + name(l, j) + " = " + name(l, j) + "*" + name(i, r),
                           x(i, r) * x(l, j) == x(l, j) * x(i, r));
                }
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= p; ++j) {
            const GrassElem numer = x(i, j).powers().at(1);
            record("phi", "sigma(" + name(i, j) + ") = q^-1*" + name(i, j), sigma(numer) == q.inverse() * numer);
        }
    return report;
}

RankReport rho_injectivity_rank(Ambient amb, int d) {
    const Ambient small{amb.m, amb.n - amb.m};
    const int gens = small.generators();
    std::vector<DhomElem> images;
    for (int g = 0; g < gens; ++g) images.push_back(rho_generator(g / small.n + 1, g % small.n + 1, amb));

    RankReport report;
    EchelonBasis<Tableau> basis;
    // Nondecreasing generator sequences are exactly the PBW monomials.
    auto walk = [&](auto&& self, int next, int left, const DhomElem& value) -> void {
        ++report.monomials;
        const GrassElem cleared = clear_to_power(value, d);
        basis.insert(SparseVec<Tableau>(cleared.terms().begin(), cleared.terms().end()));
        if (left == 0) return;
        for (int g = next; g < gens; ++g) self(self, g, left - 1, dhom_mul(value, images[static_cast<std::size_t>(g)]));
    };
    walk(walk, 0, d, DhomElem::one(amb));
    report.rank = basis.rank();
    return report;
}

}  // namespace qgr
