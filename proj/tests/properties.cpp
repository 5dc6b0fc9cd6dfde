#include "properties.hpp"

#include "qgr/expr.hpp"
#include "qgr/io.hpp"

#include <exception>
#include <functional>

namespace qgr::props {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(v.size()) - 1))];
}

PropertyResult run(const std::string& name, int cases, std::uint64_t seed,
                   const std::function<bool(Rng&, std::string&)>& body) {
    PropertyResult out{name, 0, 0, {}};
    Rng rng(seed);
    for (int i = 0; i < cases; ++i) {
        std::string detail;
        bool ok = false;
        try {
            ok = body(rng, detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        ++out.cases;
        if (!ok) {
            if (out.failures == 0) out.first_failure = "case " + std::to_string(i) + ": " + detail;
            ++out.failures;
        }
    }
    return out;
}

// Denominators that stay nonzero at q = 3/2.
const std::vector<LaurentPoly>& denominators() {
    static const std::vector<LaurentPoly> dens = {
        LaurentPoly({{0, Rational(1)}, {1, Rational(1)}}),
        LaurentPoly({{0, Rational(1)}, {2, Rational(1)}}),
        LaurentPoly({{0, Rational(1)}, {1, Rational(-1)}, {2, Rational(1)}}),
        LaurentPoly({{0, Rational(-1)}, {2, Rational(1)}}),
    };
    return dens;
}

const Rational kEvalPoint(3, 2);

}  // namespace

Scalar random_scalar(Rng& rng, bool allow_fraction) {
    std::vector<LaurentPoly::Term> terms;
    const int count = uniform(rng, 1, 3);
    for (int i = 0; i < count; ++i) {
        int c = uniform(rng, -4, 4);
        if (c == 0) c = 1;
        Rational r(c, uniform(rng, 1, 3) == 3 ? 2 : 1);
        r.canonicalize();
        terms.emplace_back(uniform(rng, -3, 3), r);
    }
    LaurentPoly num(std::move(terms));
    if (num.is_zero()) num = LaurentPoly(1);
    if (allow_fraction && uniform(rng, 0, 3) == 0) return Scalar(num, pick(rng, denominators()));
    return Scalar(num);
}

Word random_word(Rng& rng, Ambient amb, int max_len) {
    Word w(static_cast<std::size_t>(uniform(rng, 0, max_len)));
    for (auto& g : w) g = GenIndex{uniform(rng, 1, amb.m), uniform(rng, 1, amb.n)};
    return w;
}

MatAlgElem random_matalg(Rng& rng, Ambient amb, int max_terms, int max_len) {
    MatAlgElem out(amb);
    const int count = uniform(rng, 1, max_terms);
    for (int i = 0; i < count; ++i) out += random_scalar(rng) * normal_form(random_word(rng, amb, max_len), amb);
    return out;
}

Tableau random_tableau(Rng& rng, Ambient amb, int rows) {
    const auto subsets = m_subsets(amb.n, amb.m);
    Tableau t;
    for (int r = 0; r < rows; ++r) t.rows.push_back(pick(rng, subsets));
    return t;
}

GrassElem random_grass(Rng& rng, Ambient amb, int max_terms, int max_rows) {
    GrassElem out(amb);
    const int count = uniform(rng, 1, max_terms);
    for (int i = 0; i < count; ++i)
        out.add_term(random_tableau(rng, amb, uniform(rng, 0, max_rows)), random_scalar(rng));
    return out;
}

DhomElem random_dhom(Rng& rng, Ambient amb, int max_terms, int max_len) {
    const auto subsets = m_subsets(amb.n, amb.m);
    BracePoly p;
    const int count = uniform(rng, 1, max_terms);
    for (int i = 0; i < count; ++i) {
        BraceWord w(static_cast<std::size_t>(uniform(rng, 0, max_len)));
        for (auto& s : w) s = pick(rng, subsets);
        p[w] += random_scalar(rng);
    }
    return evaluate(p, amb);
}

PropertyResult check_scalar_field(int cases, std::uint64_t seed) {
    return run("scalar field laws", cases, seed, [](Rng& rng, std::string& detail) {
        const Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        detail = to_string(a) + " | " + to_string(b) + " | " + to_string(c);
        if ((a + b) * c != a * c + b * c) return false;
        if (a * b != b * a || (a * b) * c != a * (b * c)) return false;
        if (a * a.inverse() != Scalar(1) || (a - a) != Scalar(0)) return false;
        if (a.invert_q().invert_q() != a) return false;
        // Equal fractions normalize to identical representations.
        if (normalize(a.num(), a.den()) != a) return false;
        const Scalar f = random_scalar(rng, false);
        if (normalize(a.num() * f.num(), a.den() * f.num()) != a) return false;
        return (a * b + c).evaluate(kEvalPoint) == a.evaluate(kEvalPoint) * b.evaluate(kEvalPoint) + c.evaluate(kEvalPoint);
    });
}

PropertyResult check_confluence(int cases, std::uint64_t seed) {
    const std::vector<Ambient> ambs = {{2, 3}, {3, 3}};
    return run("rewriting confluence", cases, seed, [&](Rng& rng, std::string& detail) {
        const Ambient amb = pick(rng, ambs);
        const Word w = random_word(rng, amb, 6);
        for (const auto& g : w) detail += "X[" + std::to_string(g.row) + "," + std::to_string(g.col) + "]";
        const MatAlgElem nf = normal_form(w, amb);
        return nf == normal_form_by_rewriting(w, amb, RewriteStrategy::leftmost) &&
               nf == normal_form_by_rewriting(w, amb, RewriteStrategy::rightmost);
    });
}

PropertyResult check_associativity(int cases, std::uint64_t seed) {
    const std::vector<Ambient> ambs = {{2, 2}, {2, 3}, {3, 2}};
    return run("matrix algebra associativity", cases, seed, [&](Rng& rng, std::string& detail) {
        const Ambient amb = pick(rng, ambs);
        const MatAlgElem a = random_matalg(rng, amb, 2, 3), b = random_matalg(rng, amb, 2, 3),
                         c = random_matalg(rng, amb, 2, 3);
        detail = to_string(a) + " | " + to_string(b) + " | " + to_string(c);
        if (!a.is_zero() && !b.is_zero() && mul(a, b).is_zero()) return false;
        return mul(mul(a, b), c) == mul(a, mul(b, c)) && mul(a, b + c) == mul(a, b) + mul(a, c);
    });
}

PropertyResult check_determinant_central(int cases, std::uint64_t seed) {
    const std::vector<Ambient> ambs = {{2, 2}, {3, 3}};
    return run("quantum determinant is central", cases, seed, [&](Rng& rng, std::string& detail) {
        const Ambient amb = pick(rng, ambs);
        const MatAlgElem x = random_matalg(rng, amb, 2, 3);
        detail = to_string(x);
        const MatAlgElem d = quantum_determinant(amb);
        return mul(d, x) == mul(x, d);
    });
}

PropertyResult check_coaction_multiplicative(int cases, std::uint64_t seed) {
    const std::vector<Ambient> ambs = {{2, 2}, {2, 3}, {2, 4}};
    return run("coaction is multiplicative", cases, seed, [&](Rng& rng, std::string& detail) {
        const Ambient amb = pick(rng, ambs);
        const MatAlgElem a = random_matalg(rng, amb, 2, 2), b = random_matalg(rng, amb, 2, 2);
        detail = to_string(a) + " | " + to_string(b);
        return lambda_coaction(mul(a, b)) == tensor_mul(lambda_coaction(a), lambda_coaction(b));
    });
}

PropertyResult check_straightening(int cases, std::uint64_t seed) {
    return run("straightening soundness", cases, seed, [](Rng& rng, std::string& detail) {
        const bool small = uniform(rng, 0, 2) != 0;
        const Ambient amb = small ? Ambient{2, 4} : Ambient{3, 6};
        const int rows = small ? uniform(rng, 2, 3) : 2;
        GrassElem g(amb);
        const int count = uniform(rng, 1, 2);
        for (int i = 0; i < count; ++i) g.add_term(random_tableau(rng, amb, rows), random_scalar(rng));
        detail = to_string(g);
        const GrassElem s = straighten(g);
        for (const auto& [t, c] : s.terms())
            if (!is_preferred(t)) return false;
        return embed(s) == embed(g) && straighten_by_pluecker(g) == s;
    });
}

PropertyResult check_sigma_conjugation(int cases, std::uint64_t seed) {
    const std::vector<Ambient> ambs = {{2, 4}, {2, 5}, {3, 5}};
    return run("b x = sigma(x) b", cases, seed, [&](Rng& rng, std::string& detail) {
        const Ambient amb = pick(rng, ambs);
        const GrassElem g = random_grass(rng, amb, 2, 2);
        const GrassElem b = GrassElem::minor(amb, top_set(amb));
        const GrassElem h = random_grass(rng, amb, 2, 2);
        detail = to_string(g) + " | " + to_string(h);
        if (sigma(straighten(g * h)) != straighten(sigma(g) * sigma(h))) return false;
        return embed(b * g) == embed(sigma(g) * b) && sigma(sigma(g, 2), -2) == g;
    });
}

PropertyResult check_dhom_associativity(int cases, std::uint64_t seed) {
    const std::vector<Ambient> ambs = {{2, 4}, {2, 5}};
    return run("dehomogenised associativity", cases, seed, [&](Rng& rng, std::string& detail) {
        const Ambient amb = pick(rng, ambs);
        const DhomElem a = random_dhom(rng, amb, 2, 2), b = random_dhom(rng, amb, 2, 1),
                       c = random_dhom(rng, amb, 2, 2);
        detail = to_string(a) + " | " + to_string(b) + " | " + to_string(c);
        return (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c;
    });
}

PropertyResult check_normalize_idempotent(int cases, std::uint64_t seed) {
    const std::vector<Ambient> ambs = {{2, 4}, {2, 5}, {3, 5}};
    return run("normalization idempotent", cases, seed, [&](Rng& rng, std::string& detail) {
        const Ambient amb = pick(rng, ambs);
        DhomElem::Powers raw;
        const int pieces = uniform(rng, 1, 2);
        for (int i = 0; i < pieces; ++i) {
            const int c = uniform(rng, 0, 2);
            GrassElem r(amb);
            r.add_term(random_tableau(rng, amb, c), random_scalar(rng));
            auto [it, inserted] = raw.try_emplace(c, r);
            if (!inserted) it->second += r;
        }
        const DhomElem once = normalize_dhom(DhomElem::from_powers(amb, raw));
        detail = to_string(once);
        for (const auto& [c, r] : once.powers())
            for (const auto& [t, coeff] : r.terms())
                if (static_cast<int>(t.size()) != c || !is_preferred(t)) return false;
        return normalize_dhom(once) == once;
    });
}

PropertyResult check_localization(int cases, std::uint64_t seed) {
    const std::vector<Ambient> ambs = {{2, 4}, {2, 5}, {3, 5}};
    return run("localization consistency", cases, seed, [&](Rng& rng, std::string& detail) {
        const Ambient amb = pick(rng, ambs);
        const int c = uniform(rng, 1, 2);
        GrassElem r(amb);
        r.add_term(random_tableau(rng, amb, c), random_scalar(rng));
        r.add_term(random_tableau(rng, amb, c), random_scalar(rng));
        detail = to_string(r);
        const GrassElem b = GrassElem::minor(amb, top_set(amb));
        const DhomElem a = DhomElem::fraction(r, c);
        if ((LocalElem::from_grass(r) * LocalElem::b_power(amb, -c)).to_dhom() != a) return false;
        if (DhomElem::fraction(r * b, c + 1) != a) return false;
        if (embed(clear_to_power(a, c + 1)) != embed(r * b)) return false;

        // Cross-multiplied form of a product: (r b^-c)(s b^-e) = r sigma^-c(s) b^-(c+e).
        const DhomElem x = random_dhom(rng, amb, 2, 2);
        const int e = x.max_power();
        const GrassElem s = clear_to_power(x, e);
        return embed(clear_to_power(a * x, c + e)) == embed(r * sigma(s, -c));
    });
}

PropertyResult check_rho_multiplicative(int cases, std::uint64_t seed) {
    const std::vector<Ambient> ambs = {{2, 4}, {2, 5}};
    return run("rho is multiplicative", cases, seed, [&](Rng& rng, std::string& detail) {
        const Ambient amb = pick(rng, ambs);
        const Ambient mat{amb.m, amb.n - amb.m};
        const MatAlgElem x = random_matalg(rng, mat, 2, 2), y = random_matalg(rng, mat, 2, 2);
        detail = to_string(x) + " | " + to_string(y);
        return rho(mul(x, y), amb) == rho(x, amb) * rho(y, amb);
    });
}

PropertyResult check_parser_roundtrip(int cases, std::uint64_t seed) {
    return run("print/parse round trip", cases, seed, [](Rng& rng, std::string& detail) {
        switch (uniform(rng, 0, 3)) {
        case 0: {
            const Scalar s = random_scalar(rng);
            detail = to_string(s);
            return parse_scalar(detail) == s;
        }
        case 1: {
            const Ambient amb{2, 3};
            const MatAlgElem a = random_matalg(rng, amb, 3, 4);
            detail = to_string(a);
            return parse_matalg(detail, amb) == a;
        }
        case 2: {
            const Ambient amb{2, 4};
            const GrassElem g = random_grass(rng, amb, 3, 3);
            detail = to_string(g);
            return parse_grass(detail, amb) == g;
        }
        default: {
            const Ambient amb{2, 4};
            const DhomElem d = random_dhom(rng, amb, 2, 2);
            detail = to_string(d);
            return parse_dhom(detail, amb) == d;
        }
        }
    });
}

PropertyResult check_json_roundtrip(int cases, std::uint64_t seed) {
    return run("JSON round trip", cases, seed, [](Rng& rng, std::string& detail) {
        auto reparse = [&](const Json& j) {
            detail = j.dump();
            return Json::parse(detail);
        };
        switch (uniform(rng, 0, 3)) {
        case 0: {
            const Scalar s = random_scalar(rng);
            return scalar_from_json(reparse(to_json(s))) == s;
        }
        case 1: {
            const MatAlgElem a = random_matalg(rng, {3, 2}, 3, 4);
            return matalg_from_json(reparse(to_json(a))) == a;
        }
        case 2: {
            const GrassElem g = random_grass(rng, {3, 5}, 3, 3);
            return grass_from_json(reparse(to_json(g))) == g;
        }
        default: {
            const DhomElem d = random_dhom(rng, {2, 5}, 2, 2);
            return dhom_from_json(reparse(to_json(d))) == d;
        }
        }
    });
}

std::vector<PropertyResult> run_all() {
    return {
        check_scalar_field(200, 11),
        check_confluence(200, 12),
        check_associativity(100, 13),
        check_determinant_central(100, 14),
        check_coaction_multiplicative(100, 15),
        check_straightening(100, 16),
        check_sigma_conjugation(100, 17),
        check_dhom_associativity(100, 18),
        check_normalize_idempotent(100, 19),
        check_localization(100, 20),
        check_rho_multiplicative(100, 21),
        check_parser_roundtrip(200, 22),
        check_json_roundtrip(200, 23),
    };
}

}  // namespace qgr::props
