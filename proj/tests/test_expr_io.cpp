#include "check_property.hpp"

#include "qgr/expr.hpp"
#include "qgr/io.hpp"

using namespace qgr;

namespace {

std::size_t error_offset(const std::string& text, Ambient amb) {
    try {
        parse_expr(text, amb);
    } catch (const ExprError& e) {
        return e.offset();
    }
    return std::string::npos;
}

}  // namespace

TEST_CASE("scalar expressions", "[expr]") {
    const Scalar q = Scalar::q();
    CHECK(parse_scalar("q - q^-1") == q - q.inverse());
    CHECK(parse_scalar("(q^2 - 1)/(q - 1)") == q + Scalar(1));
    CHECK(parse_scalar("-3/2 q^(-2)") == Scalar(Rational(-3, 2)) * Scalar::q_power(-2));
    CHECK(parse_scalar("2(q + 1)^2") == Scalar(2) * (q + Scalar(1)) * (q + Scalar(1)));
}

TEST_CASE("matrix algebra expressions", "[expr]") {
    const Ambient a{2, 2};
    CHECK(parse_matalg("X[2,2]*X[1,1]", a) == MatAlgElem::generator(a, 2, 2) * MatAlgElem::generator(a, 1, 1));
    CHECK(parse_matalg("[12|12]", a) == quantum_determinant(a));
    CHECK(parse_matalg("[1 2]", a) == quantum_determinant(a));
    CHECK(parse_matalg("[2|1]", a) == MatAlgElem::generator(a, 2, 1));
    CHECK(parse_matalg("X[1,1]^0", a) == MatAlgElem::one(a));
}

TEST_CASE("Grassmannian expressions stay formal", "[expr]") {
    const Ambient a{2, 4};
    const GrassElem g = parse_grass("[2 4][1 3]", a);
    CHECK(g.terms().size() == 1);
    CHECK(g.terms().begin()->first == Tableau{{{2, 4}, {1, 3}}});
    CHECK(parse_grass("[1,3]*[2,4]", a) == parse_grass("[13][24]", a));
    CHECK(parse_grass("[12]^2", a) == parse_grass("[12][12]", a));

    const Ambient wide{2, 12};
    CHECK(parse_grass("[3 11]", wide) == GrassElem::minor(wide, {3, 11}));
}

TEST_CASE("syntax errors carry positions", "[expr]") {
    const Ambient a{2, 4};
    CHECK(error_offset("[12", a) == 3);
    CHECK(error_offset("[12] + ", a) == 7);
    CHECK(error_offset("X[3,1]", a) != std::string::npos);
    CHECK(error_offset("[15]", a) != std::string::npos);
    CHECK(error_offset("[12] $", a) == 5);
    try {
        parse_expr("[12]\n + [1", a);
        FAIL("expected an error");
    } catch (const ExprError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 6);
    }
    CHECK_THROWS_AS(parse_scalar("X[1,1]"), ExprError);
    CHECK_THROWS_AS(parse_grass("[12]/[13]", a), ExprError);
    CHECK_THROWS_AS(parse_dhom("[13]", a), ExprError);
    CHECK_THROWS_AS(parse_dhom("[12]^-1[34]", a), ExprError);
    CHECK_THROWS_AS(parse_scalar("1/(q - q)"), ExprError);
}

TEST_CASE("JSON shapes", "[io]") {
    const Scalar s = Scalar::q() - Scalar(Rational(1, 2));
    CHECK(to_json(s) == Json::parse(R"({"num": [[0, "-1/2"], [1, "1"]], "den": [[0, "1"]]})"));

    const Ambient a{2, 4};
    const Json g = to_json(parse_grass("q[13][24]", a));
    CHECK(g["ambient"] == Json::array({2, 4}));
    CHECK(g["terms"][0]["tableau"] == Json::parse("[[1, 3], [2, 4]]"));

    const Json d = to_json(DhomElem::brace(a, {1, 3}));
    CHECK(d["powers"][0]["c"] == 1);

    const Json x = to_json(MatAlgElem::generator(Ambient{2, 2}, 2, 1));
    CHECK(x["terms"][0]["mono"] == Json::parse("[[2, 1, 1]]"));
}

TEST_CASE("malformed JSON is rejected", "[io]") {
    CHECK_THROWS_AS(scalar_from_json(Json::parse(R"({"num": 3})")), std::invalid_argument);
    CHECK_THROWS_AS(scalar_from_json(Json::parse(R"({"num": [[0, "x"]], "den": [[0, "1"]]})")), std::invalid_argument);
    CHECK_THROWS_AS(grass_from_json(Json::parse(R"({"ambient": [2, 4], "terms": [{"tableau": [[1, 5]], "coeff": {"num": [[0, "1"]], "den": [[0, "1"]]}}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(matalg_from_json(Json::parse(R"({"ambient": [2, 2], "terms": [{"mono": [[3, 1, 1]], "coeff": {"num": [], "den": [[0, "1"]]}}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(dhom_from_json(Json::parse(R"({"ambient": [2, 4]})")), std::invalid_argument);
    CHECK_THROWS_AS(scalar_from_json(Json::parse(R"({"num": [[0, "1"]], "den": []})")), DivisionByZero);
}

TEST_CASE("printed elements parse back to themselves", "[expr][property]") {
    require_property(props::check_parser_roundtrip(200, 501), 200);
}

TEST_CASE("JSON forms read back to themselves", "[io][property]") {
    require_property(props::check_json_roundtrip(200, 502), 200);
}
