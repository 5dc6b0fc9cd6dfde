// qgr: command-line front end for the qgr library.

#include "qgr/dehom.hpp"
#include "qgr/expr.hpp"
#include "qgr/grassmann.hpp"
#include "qgr/io.hpp"
#include "qgr/poset.hpp"
#include "qgr/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace qgr;

constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Common {
    int m = 2;
    int n = 4;
    bool json = false;
    std::string q_at;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--m", c.m, "rows of the quantum matrix / size of the minors")->capture_default_str();
    sub->add_option("--n", c.n, "columns of the quantum matrix")->capture_default_str();
    sub->add_flag("--json", c.json, "print JSON instead of text");
    sub->add_option("--q-at", c.q_at, "evaluate coefficients at the rational q = p/r");
}

Ambient ambient_of(const Common& c) {
    if (c.m < 1 || c.m > c.n) throw std::invalid_argument("need 1 <= m <= n");
    return Ambient{c.m, c.n};
}

std::optional<Rational> q_value(const Common& c) {
    if (c.q_at.empty()) return std::nullopt;
    Rational r;
    if (r.set_str(c.q_at, 10) != 0) throw std::invalid_argument("--q-at expects p or p/r, got '" + c.q_at + "'");
    r.canonicalize();
    if (r == 0) throw std::invalid_argument("--q-at needs a nonzero value");
    return r;
}

Scalar at(const Scalar& s, const std::optional<Rational>& q) { return q ? Scalar(s.evaluate(*q)) : s; }

MatAlgElem at(const MatAlgElem& a, const std::optional<Rational>& q) {
    if (!q) return a;
    MatAlgElem out(a.ambient());
    for (const auto& [mono, c] : a.terms()) out.add_term(mono, at(c, q));
    return out;
}

GrassElem at(const GrassElem& g, const std::optional<Rational>& q) {
    if (!q) return g;
    GrassElem out(g.ambient());
    for (const auto& [t, c] : g.terms()) out.add_term(t, at(c, q));
    return out;
}

DhomElem at(const DhomElem& d, const std::optional<Rational>& q) {
    if (!q) return d;
    DhomElem::Powers powers;
    for (const auto& [c, r] : d.powers()) powers.emplace(c, at(r, q));
    return DhomElem::from_powers(d.ambient(), std::move(powers));
}

template <class T>
void emit(const T& value, const Common& c) {
    const auto v = at(value, q_value(c));
    if (c.json) std::cout << to_json(v).dump() << "\n";
    else std::cout << to_string(v) << "\n";
}

IndexSet parse_index_set(const std::string& text, int bound, const std::string& what) {
    std::string cleaned;
    for (char ch : text) cleaned += (ch == ',' || ch == '{' || ch == '}' || ch == '[' || ch == ']') ? ' ' : ch;
    std::istringstream is(cleaned);
    std::vector<std::string> tokens;
    for (std::string tok; is >> tok;) {
        if (tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument(what + ": '" + tok + "' is not an index");
        tokens.push_back(tok);
    }
    std::vector<int> values;
    if (tokens.size() == 1 && tokens[0].size() > 1 && bound <= 9) {
        for (char d : tokens[0]) values.push_back(d - '0');
    } else {
        for (const auto& tok : tokens) values.push_back(tok.size() > 6 ? -1 : std::stoi(tok));
    }
    for (int v : values)
        if (v < 1 || v > bound) throw std::out_of_range(what + ": index " + std::to_string(v) + " outside 1.." + std::to_string(bound));
    IndexSet out;
    if (!IndexSet::try_make(values, out)) throw std::invalid_argument(what + ": repeated index");
    return out;
}

void print_report(const SuiteReport& r, bool json) {
    if (json) {
        Json cases = Json::array();
        for (const auto& c : r.cases) cases.push_back({{"key", c.key}, {"pass", c.pass}, {"detail", c.detail}});
        std::cout << Json{{"suite", r.suite}, {"passed", r.passed()}, {"failed", r.failed()}, {"cases", cases}}.dump(2)
                  << "\n";
        return;
    }
    for (const auto& c : r.cases) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.key;
        if (!c.pass && !c.detail.empty()) std::cout << "  -- " << c.detail;
        std::cout << "\n";
    }
    std::cout << r.suite << ": " << r.passed() << "/" << r.cases.size() << " passed\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in quantum matrices and quantum Grassmannians"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "show help for every subcommand");

    Common common;
    std::string expr_text;
    int result = 0;
    std::function<int()> action;

    auto* normal = app.add_subcommand("normal-form", "PBW normal form of an element of O_q(M_mn)");
    add_common(normal, common);
    normal->add_option("expr", expr_text, "e.g. \"X[2,2]*X[1,1]\"")->required();
    normal->callback([&] { action = [&] { emit(parse_matalg(expr_text, ambient_of(common)), common); return 0; }; });

    std::string rows_text, cols_text;
    auto* minor = app.add_subcommand("minor", "expand the quantum minor [rows|cols]");
    add_common(minor, common);
    minor->add_option("cols", cols_text, "column set, e.g. \"1 3\"")->required();
    minor->add_option("--rows", rows_text, "row set (default 1..size of cols)");
    minor->callback([&] {
        action = [&] {
            const Ambient amb = ambient_of(common);
            const IndexSet cols = parse_index_set(cols_text, amb.n, "cols");
            const IndexSet rows = rows_text.empty() ? IndexSet::range(1, static_cast<int>(cols.size()))
                                                    : parse_index_set(rows_text, amb.m, "rows");
            emit(quantum_minor(rows, cols, amb), common);
            return 0;
        };
    });

    std::string method = "linear";
    auto* straight = app.add_subcommand("straighten", "rewrite a Grassmannian element over preferred tableaux");
    add_common(straight, common);
    straight->add_option("expr", expr_text, "e.g. \"[2 4]*[1 3]\"")->required();
    straight->add_option("--method", method, "linear or pluecker")->check(CLI::IsMember({"linear", "pluecker"}));
    straight->callback([&] {
        action = [&] {
            const GrassElem g = parse_grass(expr_text, ambient_of(common));
            emit(method == "linear" ? straighten(g) : straighten_by_pluecker(g), common);
            return 0;
        };
    });

    std::string j1_text, j2_text, k_text;
    auto* pl = app.add_subcommand("pluecker", "generalised quantum Plucker relation for (J1, J2, K)");
    add_common(pl, common);
    pl->add_option("--j1", j1_text, "J1 (may be empty)");
    pl->add_option("--j2", j2_text, "J2 (may be empty)");
    pl->add_option("--k", k_text, "K")->required();
    pl->callback([&] {
        action = [&] {
            const Ambient amb = ambient_of(common);
            const GrassElem rel = pluecker_relation(parse_index_set(j1_text, amb.n, "J1"),
                                                    parse_index_set(j2_text, amb.n, "J2"),
                                                    parse_index_set(k_text, amb.n, "K"), amb);
            emit(rel, common);
            return embed(rel).is_zero() ? 0 : kVerifyFailed;
        };
    });

    std::string i_text, j_text;
    auto* comm = app.add_subcommand("commutation", "straightened defect of [I][J] - q^s [J][I] for I <lex J");
    add_common(comm, common);
    comm->add_option("I", i_text)->required();
    comm->add_option("J", j_text)->required();
    comm->callback([&] {
        action = [&] {
            const Ambient amb = ambient_of(common);
            const auto r = commutation_check(parse_index_set(i_text, amb.n, "I"), parse_index_set(j_text, amb.n, "J"), amb);
            const GrassElem defect = at(r.defect, q_value(common));
            if (common.json) {
                std::cout << Json{{"s", r.s}, {"defect", to_json(defect)}, {"conforms", r.conforms},
                                  {"structural", r.structural}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << "s = " << r.s << "\ndefect = " << to_string(defect)
                          << "\nconforms = " << (r.conforms ? "yes" : "no")
                          << "\nstructural = " << (r.structural ? "yes" : "no") << "\n";
            }
            return r.conforms ? 0 : kVerifyFailed;
        };
    });

    int degree = 4;
    auto* hil = app.add_subcommand("hilbert", "dimensions of the graded pieces of G_q(m,n)");
    add_common(hil, common);
    hil->add_option("--degree", degree, "largest degree")->capture_default_str()->check(CLI::NonNegativeNumber);
    hil->callback([&] {
        action = [&] {
            ambient_of(common);
            std::vector<std::uint64_t> dims;
            for (int d = 0; d <= degree; ++d) dims.push_back(hilbert_dimension(common.m, common.n, d));
            if (common.json) {
                std::cout << Json{{"ambient", {common.m, common.n}}, {"dimensions", dims}}.dump() << "\n";
            } else {
                for (int d = 0; d <= degree; ++d) std::cout << d << " " << dims[static_cast<std::size_t>(d)] << "\n";
            }
            return 0;
        };
    });

    bool dot = false, list_all = false;
    auto* paths = app.add_subcommand("paths", "maximal paths in the generator poset");
    add_common(paths, common);
    paths->add_flag("--dot", dot, "print the Hasse diagram in DOT format");
    paths->add_flag("--all", list_all, "list every maximal path");
    paths->callback([&] {
        action = [&] {
            ambient_of(common);
            if (dot) {
                std::cout << hasse_dot(common.m, common.n);
                return 0;
            }
            const int len = maximal_path_length(common.m, common.n);
            if (!list_all) {
                if (common.json) std::cout << Json{{"maximal_path_length", len}}.dump() << "\n";
                else std::cout << len << "\n";
                return 0;
            }
            const auto all = maximal_paths(common.m, common.n);
            Json arr = Json::array();
            for (const auto& p : all) {
                Json path = Json::array();
                std::string line;
                for (const auto& s : p) {
                    path.push_back(s.elems());
                    line += (line.empty() ? "" : " < ") + to_string(Tableau{{s}});
                }
                arr.push_back(path);
                if (!common.json) std::cout << line << "\n";
            }
            if (common.json) std::cout << Json{{"maximal_path_length", len}, {"paths", arr}}.dump() << "\n";
            return 0;
        };
    });

    auto* gk = app.add_subcommand("gk", "GK dimension of G_q(m,n)");
    add_common(gk, common);
    gk->callback([&] {
        action = [&] {
            ambient_of(common);
            const int value = gk_dimension(common.m, common.n);
            if (common.json) std::cout << Json{{"gk_dimension", value}}.dump() << "\n";
            else std::cout << value << "\n";
            return 0;
        };
    });

    auto* dh = app.add_subcommand("dehom-eval", "evaluate in the dehomogenisation at b = [n-m+1..n]");
    add_common(dh, common);
    dh->add_option("expr", expr_text, "e.g. \"{1 3}*{2 4}\" or \"[1 3]*[3 4]^-1\"")->required();
    dh->callback([&] { action = [&] { emit(parse_dhom(expr_text, ambient_of(common)), common); return 0; }; });

    auto* gx = app.add_subcommand("gens-expand", "write {I} as a polynomial in the generators {j, top minus one}");
    add_common(gx, common);
    gx->add_option("I", i_text)->required();
    gx->callback([&] {
        action = [&] {
            const Ambient amb = ambient_of(common);
            const IndexSet i = parse_index_set(i_text, amb.n, "I");
            const BracePoly p = gens_expand(i, amb);
            const bool ok = evaluate(p, amb) == DhomElem::brace(amb, i);
            if (common.json) {
                Json terms = Json::array();
                for (const auto& [word, c] : p) {
                    Json w = Json::array();
                    for (const auto& s : word) w.push_back(s.elems());
                    terms.push_back({{"word", w}, {"coeff", to_json(at(c, q_value(common)))}});
                }
                std::cout << Json{{"terms", terms}, {"validated", ok}}.dump() << "\n";
            } else {
                BracePoly shown;
                for (const auto& [word, c] : p) shown.emplace(word, at(c, q_value(common)));
                std::cout << to_string(shown) << "\n";
            }
            return ok ? 0 : kVerifyFailed;
        };
    });

    auto* co = app.add_subcommand("coinv-check", "check lambda([J]) = D_q (x) [J] for every maximal minor");
    add_common(co, common);
    co->callback([&] {
        action = [&] {
            SuiteOptions opts;
            opts.ambient = ambient_of(common);
            const SuiteReport r = run_suite("coinv", opts);
            print_report(r, common.json);
            return r.all_pass() ? 0 : kVerifyFailed;
        };
    });

    std::string suite, filter;
    bool ambient_given = false;
    auto* ver = app.add_subcommand("verify", "run a verification suite (or 'all')");
    ver->add_option("suite", suite, "relations24, commr, mincomm, gamma, tau, pluecker, basis, hilbert, rho, gens, "
                                    "coinv, delta, all")
        ->required();
    auto* mo = ver->add_option("--m", common.m, "restrict to this ambient");
    auto* no = ver->add_option("--n", common.n, "restrict to this ambient");
    mo->needs(no);
    no->needs(mo);
    ver->add_flag("--json", common.json, "print JSON");
    ver->add_option("--suite-filter", filter, "keep cases whose key contains this text");
    ver->callback([&] {
        ambient_given = mo->count() > 0;
        action = [&] {
            SuiteOptions opts;
            if (ambient_given) opts.ambient = ambient_of(common);
            opts.filter = filter;
            std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
            bool ok = true;
            for (const auto& name : names) {
                const SuiteReport r = run_suite(name, opts);
                print_report(r, common.json);
                ok = ok && r.all_pass();
            }
            return ok ? 0 : kVerifyFailed;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        result = action();
    } catch (const ExprError& e) {
        std::cerr << "qgr: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "qgr: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "qgr: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "qgr: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "qgr: internal error: " << e.what() << "\n";
        return kVerifyFailed;
    }
    return result;
}
