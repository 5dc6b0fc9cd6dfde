#include "qgr/io.hpp"

#include <stdexcept>

namespace qgr {

namespace {

Json poly_to_json(const LaurentPoly& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, c.get_str()}));
    return out;
}

LaurentPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of [exp, \"p/r\"] pairs");
    std::vector<LaurentPoly::Term> terms;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_string())
            throw std::invalid_argument("polynomial term must be [exp, \"p/r\"]");
        Rational c;
        if (c.set_str(t[1].get<std::string>(), 10) != 0) throw std::invalid_argument("bad rational " + t[1].dump());
        c.canonicalize();
        terms.emplace_back(t[0].get<int>(), c);
    }
    return LaurentPoly(std::move(terms));
}

Ambient ambient_from_json(const Json& j) {
    const Json& a = j.at("ambient");
    if (!a.is_array() || a.size() != 2) throw std::invalid_argument("ambient must be [m, n]");
    return Ambient{a[0].get<int>(), a[1].get<int>()};
}

Json ambient_to_json(Ambient amb) { return Json::array({amb.m, amb.n}); }

}  // namespace

Json to_json(const Scalar& s) { return {{"num", poly_to_json(s.num())}, {"den", poly_to_json(s.den())}}; }

Scalar scalar_from_json(const Json& j) {
    try {
        return Scalar(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("malformed scalar: ") + e.what());
    }
}

Json to_json(const MatAlgElem& a) {
    const Ambient amb = a.ambient();
    Json terms = Json::array();
    for (const auto& [mono, c] : a.terms()) {
        Json factors = Json::array();
        for (int g = 0; g < mono.generators(); ++g)
            if (mono.exponent(g) != 0) factors.push_back(Json::array({g / amb.n + 1, g % amb.n + 1, mono.exponent(g)}));
        terms.push_back({{"mono", factors}, {"coeff", to_json(c)}});
    }
    return {{"ambient", ambient_to_json(amb)}, {"terms", terms}};
}

MatAlgElem matalg_from_json(const Json& j) {
    try {
        const Ambient amb = ambient_from_json(j);
        MatAlgElem out(amb);
        for (const auto& t : j.at("terms")) {
            PbwMonomial mono(amb.generators());
            for (const auto& f : t.at("mono")) {
                const GenIndex g{f.at(0).get<int>(), f.at(1).get<int>()};
                check_generator(amb, g);
                const int e = f.at(2).get<int>();
                if (e < 0 || e > 255) throw std::invalid_argument("exponent out of range");
                for (int k = 0; k < e; ++k) mono = mono.times_in_order((g.row - 1) * amb.n + (g.col - 1));
            }
            out.add_term(mono, scalar_from_json(t.at("coeff")));
        }
        return out;
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("malformed matrix algebra element: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw std::invalid_argument(e.what());
    }
}

Json to_json(const GrassElem& g) {
    Json terms = Json::array();
    for (const auto& [t, c] : g.terms()) {
        Json rows = Json::array();
        for (const auto& row : t.rows) rows.push_back(row.elems());
        terms.push_back({{"tableau", rows}, {"coeff", to_json(c)}});
    }
    return {{"ambient", ambient_to_json(g.ambient())}, {"terms", terms}};
}

GrassElem grass_from_json(const Json& j) {
    try {
        const Ambient amb = ambient_from_json(j);
        GrassElem out(amb);
        for (const auto& t : j.at("terms")) {
            Tableau tab;
            for (const auto& row : t.at("tableau")) tab.rows.emplace_back(row.get<std::vector<int>>());
            out.add_term(tab, scalar_from_json(t.at("coeff")));
        }
        return out;
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("malformed Grassmannian element: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw std::invalid_argument(e.what());
    }
}

Json to_json(const DhomElem& d) {
    Json powers = Json::array();
    for (const auto& [c, r] : d.powers()) powers.push_back({{"c", c}, {"numer", to_json(r)}});
    return {{"ambient", ambient_to_json(d.ambient())}, {"powers", powers}};
}

DhomElem dhom_from_json(const Json& j) {
    try {
        const Ambient amb = ambient_from_json(j);
        DhomElem::Powers powers;
        for (const auto& p : j.at("powers")) {
            GrassElem r = grass_from_json(p.at("numer"));
            auto [it, inserted] = powers.try_emplace(p.at("c").get<int>(), r);
            if (!inserted) it->second += r;
        }
        return normalize_dhom(DhomElem::from_powers(amb, std::move(powers)));
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("malformed dehomogenised element: ") + e.what());
    }
}

}  // namespace qgr
