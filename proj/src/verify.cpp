#include "qgr/verify.hpp"

#include "qgr/dehom.hpp"
#include "qgr/expr.hpp"
#include "qgr/grassmann.hpp"
#include "qgr/linear.hpp"
#include "qgr/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace qgr {

std::size_t SuiteReport::passed() const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; }));
}

const std::vector<std::pair<std::string, std::string>>& g24_relations() {
    static const std::vector<std::pair<std::string, std::string>> table = {
        {"[12][13]", "q[13][12]"},
        {"[12][14]", "q[14][12]"},
        {"[12][23]", "q[23][12]"},
        {"[12][24]", "q[24][12]"},
        {"[12][34]", "q^2[34][12]"},
        {"[13][14]", "q[14][13]"},
        {"[13][23]", "q[23][13]"},
        {"[13][24]", "[24][13] + (q - q^-1)[14][23]"},
        {"[13][34]", "q[34][13]"},
        {"[14][23]", "[23][14]"},
        {"[14][24]", "q[24][14]"},
        {"[14][34]", "q[34][14]"},
        {"[23][24]", "q[24][23]"},
        {"[23][34]", "q[34][23]"},
        {"[24][34]", "q[34][24]"},
        {"[12][34] - q[13][24] + q^2[14][23]", "0"},
    };
    return table;
}

const std::vector<std::pair<std::string, std::string>>& hasse_36_table() {
    static const std::vector<std::pair<std::string, std::string>> table = {
        {"456", "356"}, {"356", "346"}, {"356", "256"}, {"346", "345"}, {"346", "246"}, {"256", "246"},
        {"256", "156"}, {"345", "245"}, {"246", "245"}, {"246", "146"}, {"246", "236"}, {"156", "146"},
        {"245", "235"}, {"245", "145"}, {"236", "235"}, {"236", "136"}, {"146", "145"}, {"146", "136"},
        {"235", "234"}, {"235", "135"}, {"145", "135"}, {"136", "135"}, {"136", "126"}, {"234", "134"},
        {"135", "134"}, {"135", "125"}, {"126", "125"}, {"134", "124"}, {"125", "124"}, {"124", "123"},
    };
    return table;
}

namespace {

IndexSet digits_set(const std::string& s) {
    std::vector<int> v;
    for (char c : s) v.push_back(c - '0');
    return IndexSet(std::move(v));
}

std::string amb_key(Ambient a) { return to_string(a); }

std::string minor_key(const IndexSet& s) { return to_string(Tableau{{s}}); }

std::string brace_key(const IndexSet& s) {
    std::string out = minor_key(s);
    out.front() = '{';
    out.back() = '}';
    return out;
}

// Collects cases; an exception inside a check fails that case with its message.
class Recorder {
public:
    explicit Recorder(std::string suite) { report_.suite = std::move(suite); }

    void check(const std::string& key, const std::function<bool(std::string&)>& body) {
        CaseResult r{key, false, {}};
        try {
            r.pass = body(r.detail);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        report_.cases.push_back(std::move(r));
    }

    SuiteReport finish(const std::string& filter) {
        std::erase_if(report_.cases, [&](const CaseResult& c) { return c.key.find(filter) == std::string::npos; });
        std::stable_sort(report_.cases.begin(), report_.cases.end(),
                         [](const CaseResult& a, const CaseResult& b) { return a.key < b.key; });
        return std::move(report_);
    }

private:
    SuiteReport report_;
};

std::vector<Ambient> ambients_for(const SuiteOptions& opt, std::vector<Ambient> defaults) {
    if (opt.ambient) return {*opt.ambient};
    return defaults;
}

bool contains(const std::vector<Ambient>& list, Ambient a) { return std::find(list.begin(), list.end(), a) != list.end(); }

// Relations of O_q(M_{m,p}) evaluated on images of the generators.
template <class V>
void check_matrix_relations(Recorder& rec, const std::string& prefix, int m, int p,
                            const std::function<V(int, int)>& x, const std::function<V(const V&, const V&)>& mul,
                            const std::function<V(const Scalar&, const V&)>& scale) {
    auto name = [](int i, int j) { return "X[" + std::to_string(i) + "," + std::to_string(j) + "]"; };
    const Scalar q = Scalar::q();
    for (int j = 1; j <= p; ++j)
        for (int i = 1; i <= m; ++i)
            for (int l = i + 1; l <= m; ++l)
                rec.check(prefix + " " + name(i, j) + name(l, j) + " = q" + name(l, j) + name(i, j),
                          [&](std::string&) { return mul(x(i, j), x(l, j)) == scale(q, mul(x(l, j), x(i, j))); });
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= p; ++j)
            for (int r = j + 1; r <= p; ++r)
                rec.check(prefix + " " + name(i, j) + name(i, r) + " = q" + name(i, r) + name(i, j),
                          [&](std::string&) { return mul(x(i, j), x(i, r)) == scale(q, mul(x(i, r), x(i, j))); });
    for (int i = 1; i <= m; ++i)
        for (int l = i + 1; l <= m; ++l)
            for (int j = 1; j <= p; ++j)
                for (int r = j + 1; r <= p; ++r) {
                    rec.check(prefix + " " + name(i, r) + name(l, j) + " = " + name(l, j) + name(i, r),
                              [&](std::string&) { return mul(x(i, r), x(l, j)) == mul(x(l, j), x(i, r)); });
                    rec.check(prefix + " " + name(i, j) + name(l, r) + " - " + name(l, r) + name(i, j) +
                                  " = (q - q^-1)" + name(i, r) + name(l, j),
                              [&](std::string&) {
                                  const V lhs = mul(x(i, j), x(l, r));
                                  const V rhs = mul(x(l, r), x(i, j)) + scale(q - q.inverse(), mul(x(i, r), x(l, j)));
                                  return lhs == rhs;
                              });
                }
}

// ---------------------------------------------------------------------------

void suite_relations24(Recorder& rec, const SuiteOptions& opt) {
    const Ambient a{2, 4};
    if (opt.ambient && *opt.ambient != a) throw std::invalid_argument("relations24 is defined for (2,4) only");
    for (const auto& [lhs, rhs] : g24_relations()) {
        rec.check("(2,4) " + lhs + " = " + rhs, [&](std::string& detail) {
            const MatAlgElem diff = embed(parse_grass(lhs, a) - parse_grass(rhs, a));
            if (!diff.is_zero()) detail = "difference " + to_string(diff);
            return diff.is_zero();
        });
    }
}

void suite_commr(Recorder& rec, const SuiteOptions& opt) {
    const auto ambs = ambients_for(opt, {{2, 4}, {2, 5}});
    for (Ambient a : ambs) {
        const auto gens = m_subsets(a.n, a.m);
        for (std::size_t x = 0; x < gens.size(); ++x)
            for (std::size_t y = x + 1; y < gens.size(); ++y)
                rec.check("commute " + amb_key(a) + " " + minor_key(gens[x]) + minor_key(gens[y]),
                          [&](std::string& detail) {
                              const auto r = commutation_check(gens[x], gens[y], a);
                              detail = "s=" + std::to_string(r.s) + " defect " + to_string(r.defect) +
                                       (r.structural ? "" : " (not literally of the [L][L'] shape)");
                              return r.conforms;
                          });
    }
    const Ambient normal_amb = opt.ambient ? *opt.ambient : Ambient{2, 4};
    for (const auto& i : m_subsets(normal_amb.n, normal_amb.m))
        rec.check("normal " + amb_key(normal_amb) + " " + minor_key(i), [&](std::string& detail) {
            const auto r = normality_mod_ideal_check(i, normal_amb);
            if (r.normal) detail = "normal";
            return r.normal_mod_lower;
        });
}

void suite_mincomm(Recorder& rec, const SuiteOptions& opt) {
    for (Ambient a : ambients_for(opt, {{2, 4}, {2, 5}, {3, 5}}))
        for (const auto& i : m_subsets(a.n, a.m))
            rec.check(amb_key(a) + " " + minor_key(i), [&](std::string& detail) {
                detail = "s=" + std::to_string(s_exponent(i, a));
                return mincomm_check(i, a);
            });
}

std::vector<int> square_sizes(const SuiteOptions& opt, const std::string& suite) {
    if (!opt.ambient) return {2, 3};
    if (!opt.ambient->square()) throw std::invalid_argument(suite + " needs a square ambient");
    return {opt.ambient->m};
}

void suite_gamma(Recorder& rec, const SuiteOptions& opt) {
    for (int u : square_sizes(opt, "gamma")) {
        const Ambient a{u, u};
        const MatAlgElem d = quantum_determinant(a);
        for (int r = 1; r <= u; ++r)
            for (const auto& i : m_subsets(u, r))
                for (const auto& j : m_subsets(u, r)) {
                    const std::string key = "u=" + std::to_string(u) + " [" + to_string(i) + "|" + to_string(j) + "]";
                    const Scalar sign = Scalar::neg_q_power(i.sum() - j.sum());
                    const MatAlgElem dpow = power(d, r - 1);
                    rec.check("gamma " + key, [&](std::string&) {
                        return gamma(quantum_minor(i, j, a)) ==
                               sign * mul(quantum_minor(j.complement(u), i.complement(u), a), dpow);
                    });
                    rec.check("gamma-tau " + key, [&](std::string&) {
                        return gamma_tau(quantum_minor(i, j, a)) ==
                               Scalar::neg_q_power(j.sum() - i.sum()) * mul(quantum_minor(i.complement(u), j.complement(u), a), dpow);
                    });
                }
    }
}

void suite_tau(Recorder& rec, const SuiteOptions& opt) {
    for (int u : square_sizes(opt, "tau")) {
        const Ambient a{u, u};
        check_matrix_relations<MatAlgElem>(
            rec, "relation u=" + std::to_string(u), u, u, [&](int i, int j) { return tau(MatAlgElem::generator(a, i, j)); },
            [](const MatAlgElem& x, const MatAlgElem& y) { return mul(x, y); },
            [](const Scalar& c, const MatAlgElem& x) { return c * x; });
        for (int r = 1; r <= u; ++r)
            for (const auto& i : m_subsets(u, r))
                for (const auto& j : m_subsets(u, r))
                    rec.check("minor u=" + std::to_string(u) + " [" + to_string(i) + "|" + to_string(j) + "]",
                              [&](std::string&) { return tau(quantum_minor(i, j, a)) == quantum_minor(j, i, a); });
    }
}

void suite_pluecker(Recorder& rec, const SuiteOptions& opt) {
    for (Ambient a : ambients_for(opt, {{2, 4}, {2, 5}, {3, 5}})) {
        const IndexSet all = IndexSet::range(1, a.n);
        for (int s1 = 0; s1 <= a.m - 1; ++s1) {
            const int s2 = a.m - 1 - s1;
            for (const auto& j1 : subsets_of_size(all, static_cast<std::size_t>(s1)))
                for (const auto& j2 : subsets_of_size(all, static_cast<std::size_t>(s2))) {
                    const IndexSet rest = all.minus(j1.united(j2));
                    for (const auto& k : subsets_of_size(rest, static_cast<std::size_t>(a.m + 1)))
                        rec.check(amb_key(a) + " J1=" + to_string(j1) + " J2=" + to_string(j2) + " K=" + to_string(k),
                                  [&](std::string& detail) {
                                      const GrassElem rel = pluecker_relation(j1, j2, k, a);
                                      detail = to_string(rel);
                                      return !rel.is_zero() && embed(rel).is_zero();
                                  });
                }
        }
    }
}

std::vector<Tableau> all_preferred(Ambient a, int d) {
    std::vector<Tableau> out;
    const auto gens = m_subsets(a.n, a.m);
    Tableau t;
    auto walk = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(t.size()) == d) {
            out.push_back(t);
            return;
        }
        for (std::size_t g = from; g < gens.size(); ++g) {
            if (!t.empty() && !star_leq(t.rows.back(), gens[g])) continue;
            t.rows.push_back(gens[g]);
            self(self, g);
            t.rows.pop_back();
        }
    };
    walk(walk, 0);
    return out;
}

std::uint64_t brute_force_chains(Ambient a, int d) {
    const auto gens = m_subsets(a.n, a.m);
    std::uint64_t count = 0;
    std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
    for (;;) {
        bool ok = true;
        for (int k = 1; k < d && ok; ++k) ok = star_leq(gens[idx[k - 1]], gens[idx[k]]);
        if (ok) ++count;
        int pos = d - 1;
        while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == gens.size()) idx[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
    }
    return count;
}

void suite_basis(Recorder& rec, const SuiteOptions& opt) {
    const Ambient a = opt.ambient ? *opt.ambient : Ambient{2, 4};
    const bool default_amb = a == Ambient{2, 4};
    const std::vector<std::uint64_t> expected = {1, 6, 20};
    for (int d = 0; d <= 3; ++d) {
        rec.check(amb_key(a) + " degree " + std::to_string(d) + " independent", [&](std::string& detail) {
            const auto tabs = all_preferred(a, d);
            EchelonBasis<PbwMonomial> basis;
            for (const auto& t : tabs) {
                const MatAlgElem e = embed(t, a);
                basis.insert(SparseVec<PbwMonomial>(e.terms().begin(), e.terms().end()));
            }
            const std::uint64_t brute = d == 0 ? 1 : brute_force_chains(a, d);
            detail = "count " + std::to_string(tabs.size()) + ", rank " + std::to_string(basis.rank()) +
                     ", brute force " + std::to_string(brute);
            bool ok = basis.rank() == tabs.size() && tabs.size() == brute;
            if (default_amb && d < static_cast<int>(expected.size())) ok = ok && brute == expected[static_cast<std::size_t>(d)];
            return ok;
        });
    }
    const auto gens = m_subsets(a.n, a.m);
    for (const auto& x : gens)
        for (const auto& y : gens) {
            const Tableau t{{x, y}};
            if (is_preferred(t)) continue;
            rec.check(amb_key(a) + " straighten " + to_string(t), [&](std::string& detail) {
                const GrassElem g = GrassElem::tableau(a, t);
                const GrassElem s = straighten(g);
                detail = to_string(s);
                const bool preferred = std::all_of(s.terms().begin(), s.terms().end(),
                                                   [](const auto& kv) { return is_preferred(kv.first); });
                return preferred && (embed(s) - embed(g)).is_zero() && straighten_by_pluecker(g) == s;
            });
        }
}

std::vector<IndexSet> brute_force_covers(const IndexSet& x, const std::vector<IndexSet>& all) {
    std::vector<IndexSet> out;
    for (const auto& y : all) {
        if (y == x || !star_leq(x, y)) continue;
        const bool between = std::any_of(all.begin(), all.end(), [&](const IndexSet& z) {
            return z != x && z != y && star_leq(x, z) && star_leq(z, y);
        });
        if (!between) out.push_back(y);
    }
    return out;
}

void suite_hilbert(Recorder& rec, const SuiteOptions& opt) {
    const auto ambs = ambients_for(opt, {{2, 4}, {2, 5}, {3, 6}, {1, 2}});
    for (Ambient a : ambs) {
        const int gk = gk_dimension(a.m, a.n);
        rec.check(amb_key(a) + " longest path", [&](std::string& detail) {
            const int len = maximal_path_length(a.m, a.n);
            detail = std::to_string(len) + " nodes, m(n-m)+1 = " + std::to_string(gk);
            return len == gk;
        });
        rec.check(amb_key(a) + " covers", [&](std::string&) {
            const auto all = m_subsets(a.n, a.m);
            return std::all_of(all.begin(), all.end(),
                               [&](const IndexSet& x) { return covers(x, a.n) == brute_force_covers(x, all); });
        });
        for (int d = 1; d <= 3; ++d)
            rec.check(amb_key(a) + " dimension d=" + std::to_string(d), [&](std::string& detail) {
                const auto dp = hilbert_dimension(a.m, a.n, d);
                const auto brute = brute_force_chains(a, d);
                detail = std::to_string(dp) + " vs brute force " + std::to_string(brute);
                return dp == brute;
            });
        if (a.m * (a.n - a.m) <= 6)
            rec.check(amb_key(a) + " maximal paths", [&](std::string& detail) {
                const auto paths = maximal_paths(a.m, a.n);
                detail = std::to_string(paths.size()) + " paths";
                return !paths.empty() && std::all_of(paths.begin(), paths.end(), [&](const Path& p) {
                    return static_cast<int>(p.size()) == gk;
                });
            });
        rec.check(amb_key(a) + " growth", [&](std::string& detail) {
            // Degree of d -> dim G_d is m(n-m), the GK dimension of the
            // dehomogenisation; summing over d adds one.
            const int samples = gk + 2;
            const int deg = hilbert_growth_degree(a.m, a.n, samples);
            detail = "degree " + std::to_string(deg) + " over d=1.." + std::to_string(samples);
            return deg == gk - 1;
        });
    }
    if (contains(ambs, Ambient{2, 4}))
        rec.check("(2,4) dimensions d=0..6", [&](std::string& detail) {
            std::vector<std::int64_t> v;
            for (int d = 1; d <= 6; ++d) v.push_back(static_cast<std::int64_t>(hilbert_dimension(2, 4, d)));
            for (auto x : v) detail += std::to_string(x) + " ";
            std::vector<std::int64_t> diff = v;
            std::int64_t fourth = 0;
            for (int order = 1; order <= 5; ++order) {
                for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
                diff.pop_back();
                if (order == 4) fourth = diff.front();
            }
            detail += "| 5th difference " + std::to_string(diff.front()) + ", 4th " + std::to_string(fourth);
            return hilbert_dimension(2, 4, 0) == 1 && v[0] == 6 && v[1] == 20 && diff.front() == 0 && fourth != 0;
        });
    if (contains(ambs, Ambient{3, 6}))
        rec.check("(3,6) hasse diagram", [&](std::string& detail) {
            std::set<std::pair<IndexSet, IndexSet>> table, computed;
            std::set<IndexSet> vertices;
            for (const auto& [hi, lo] : hasse_36_table()) {
                table.emplace(digits_set(lo), digits_set(hi));
                vertices.insert(digits_set(lo));
                vertices.insert(digits_set(hi));
            }
            for (const auto& e : hasse_edges(3, 6)) computed.insert(e);
            detail = std::to_string(vertices.size()) + " vertices, " + std::to_string(computed.size()) + " edges";
            return vertices.size() == 20 && table == computed;
        });
}

void suite_rho(Recorder& rec, const SuiteOptions& opt) {
    const auto ambs = ambients_for(opt, {{2, 4}, {2, 5}});
    for (Ambient a : ambs) {
        const RhoReport report = verify_rho_relations(a);
        for (const auto& inst : report.instances)
            rec.check(amb_key(a) + " " + inst.family + " " + inst.relation, [&](std::string&) { return inst.pass; });
    }
    if (!contains(ambs, Ambient{2, 4})) return;
    const Ambient a{2, 4};
    const std::vector<std::pair<std::string, std::string>> table = {
        {"X[1,1]", "{13}"}, {"X[1,2]", "{23}"}, {"X[2,1]", "{14}"}, {"X[2,2]", "{24}"},
        {"X[1,1]X[2,2] - qX[1,2]X[2,1]", "{12}"}};
    for (const auto& [x, brace] : table)
        rec.check("(2,4) correspondence " + x + " -> " + brace, [&](std::string& detail) {
            const DhomElem image = rho(parse_matalg(x, Ambient{2, 2}), a);
            detail = to_string(image);
            return image == parse_dhom(brace, a);
        });
    const std::vector<std::pair<std::string, std::string>> relations = {
        {"{13}{23}", "q{23}{13}"},
        {"{13}{14}", "q{14}{13}"},
        {"{13}{24}", "{24}{13} + (q - q^-1){23}{14}"},
        {"{14}{23}", "{23}{14}"},
        {"{14}{24}", "q{24}{14}"},
        {"{23}{24}", "q{24}{23}"},
        {"{12}", "{13}{24} - q{23}{14}"},
        {"{12}", "[12][34]^-1"},
    };
    for (const auto& [lhs, rhs] : relations)
        rec.check("(2,4) identity " + lhs + " = " + rhs,
                  [&](std::string&) { return parse_dhom(lhs, a) == parse_dhom(rhs, a); });
    rec.check("(2,4) injectivity degree<=2", [&](std::string& detail) {
        const RankReport r = rho_injectivity_rank(a, 2);
        detail = std::to_string(r.monomials) + " monomials, rank " + std::to_string(r.rank);
        return r.monomials == 15 && r.rank == r.monomials;
    });
}

void suite_gens(Recorder& rec, const SuiteOptions& opt) {
    for (Ambient a : ambients_for(opt, {{2, 4}, {2, 5}, {3, 5}}))
        for (const auto& i : m_subsets(a.n, a.m))
            rec.check(amb_key(a) + " " + brace_key(i), [&](std::string& detail) {
                const BracePoly p = gens_expand(i, a);
                detail = to_string(p);
                const bool only_generators = std::all_of(p.begin(), p.end(), [&](const auto& kv) {
                    return std::all_of(kv.first.begin(), kv.first.end(),
                                       [&](const IndexSet& s) { return is_brace_generator(s, a); });
                });
                return only_generators && evaluate(p, a) == DhomElem::brace(a, i);
            });
}

void suite_coinv(Recorder& rec, const SuiteOptions& opt) {
    for (Ambient a : ambients_for(opt, {{2, 4}, {2, 5}})) {
        const Ambient left{a.m, a.m};
        const MatAlgElem d = quantum_determinant(left);
        const IndexSet rows = IndexSet::range(1, a.m);
        for (const auto& j : m_subsets(a.n, a.m))
            rec.check(amb_key(a) + " " + minor_key(j), [&](std::string&) {
                const MatAlgElem minor = quantum_minor(rows, j, a);
                return lambda_coaction(minor) == TensorElem::pure(d, minor);
            });
    }
}

void suite_delta(Recorder& rec, const SuiteOptions& opt) {
    const auto ambs = ambients_for(opt, {{2, 4}, {2, 5}, {3, 5}, {3, 6}});
    if (contains(ambs, Ambient{2, 4})) {
        const Ambient a{2, 4};
        for (const auto& [lhs, rhs] : g24_relations())
            rec.check("(2,4) relation " + lhs + " = " + rhs, [&](std::string& detail) {
                const GrassElem image = straighten(delta_map(parse_grass(lhs, a) - parse_grass(rhs, a)));
                detail = to_string(image);
                return image.is_zero();
            });
    }
    for (Ambient a : ambs)
        rec.check(amb_key(a) + " bottom to top", [&](std::string& detail) {
            const GrassElem image = delta_map(GrassElem::minor(a, IndexSet::range(1, a.m)));
            detail = to_string(image);
            return image == GrassElem::minor(a, top_set(a));
        });
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"relations24", "commr", "mincomm", "gamma", "tau", "pluecker", "basis", "hilbert", "rho", "gens", "coinv", "delta"};
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
    static const std::map<std::string, void (*)(Recorder&, const SuiteOptions&)> suites = {
        {"relations24", suite_relations24}, {"commr", suite_commr}, {"mincomm", suite_mincomm},
        {"gamma", suite_gamma},             {"tau", suite_tau},     {"pluecker", suite_pluecker}, {"plücker", suite_pluecker},
        {"basis", suite_basis},             {"hilbert", suite_hilbert}, {"poset", suite_hilbert},
        {"rho", suite_rho},                 {"gens", suite_gens},   {"coinv", suite_coinv},
        {"delta", suite_delta},
    };
    auto it = suites.find(name);
    if (it == suites.end()) throw std::invalid_argument("unknown suite '" + name + "'");
    if (options.ambient && (options.ambient->m < 1 || options.ambient->m > options.ambient->n))
        throw std::invalid_argument("need 1 <= m <= n");
    Recorder rec(name);
    it->second(rec, options);
    return rec.finish(options.filter);
}

}  // namespace qgr
