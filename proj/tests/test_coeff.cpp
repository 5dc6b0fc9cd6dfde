#include "check_property.hpp"

#include "qgr/coeff.hpp"

#include <catch_amalgamated.hpp>

using namespace qgr;

namespace {

LaurentPoly poly(std::vector<LaurentPoly::Term> t) { return LaurentPoly(std::move(t)); }

}  // namespace

TEST_CASE("Laurent polynomial arithmetic", "[coeff]") {
    const LaurentPoly q = LaurentPoly::q_power(1);
    const LaurentPoly qi = LaurentPoly::q_power(-1);
    CHECK((q - qi) * (q + qi) == LaurentPoly::q_power(2) - LaurentPoly::q_power(-2));
    CHECK((q - q).is_zero());
    CHECK(LaurentPoly(3).is_monomial());
    CHECK(poly({{2, 1}, {-1, 5}, {2, -1}}) == LaurentPoly::monomial(5, -1));
    CHECK(poly({{1, 1}, {3, 2}}).inverted() == poly({{-1, 1}, {-3, 2}}));
    CHECK(poly({{1, 1}, {3, 2}}).shifted(-2) == poly({{-1, 1}, {1, 2}}));
    CHECK(poly({{-1, 2}, {2, 1}}).evaluate(Rational(2)) == Rational(5));
}

TEST_CASE("polynomial division and gcd", "[coeff]") {
    const LaurentPoly a = poly({{0, -1}, {2, 1}});  // q^2 - 1
    const LaurentPoly b = poly({{0, 1}, {1, 1}});   // q + 1
    auto [quo, rem] = poly_divmod(a, b);
    CHECK(quo == poly({{0, -1}, {1, 1}}));
    CHECK(rem.is_zero());
    CHECK(poly_gcd(a, poly({{0, 2}, {1, 4}, {2, 2}})) == b);
    CHECK(poly_gcd(LaurentPoly(), LaurentPoly()).is_zero());
}

TEST_CASE("scalars are kept in lowest terms", "[coeff]") {
    const Scalar s(poly({{0, -1}, {2, 1}}), poly({{0, -1}, {1, 1}}));
    CHECK(s == Scalar(poly({{0, 1}, {1, 1}})));
    CHECK(s.is_laurent());

    // 1/(2q - 2) has denominator q - 1 with the 2 moved up.
    const Scalar t(LaurentPoly(1), poly({{0, -2}, {1, 2}}));
    CHECK(t.den() == poly({{0, -1}, {1, 1}}));
    CHECK(t.num() == LaurentPoly(Rational(1, 2)));

    // A q-power in the denominator is absorbed into the numerator.
    CHECK(Scalar(LaurentPoly(1), LaurentPoly::q_power(3)) == Scalar::q_power(-3));
    CHECK(Scalar::neg_q_power(3) == -Scalar::q_power(3));
    CHECK(Scalar::neg_q_power(-2) == Scalar::q_power(-2));
}

TEST_CASE("scalar field operations", "[coeff]") {
    const Scalar q = Scalar::q();
    const Scalar a = (q + Scalar(1)) / (q - Scalar(1));
    CHECK(a * a.inverse() == Scalar(1));
    CHECK(a.evaluate(Rational(3)) == Rational(2));
    CHECK(a.invert_q() == -a);
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
    CHECK_THROWS_AS(a.evaluate(Rational(1)), DivisionByZero);
    CHECK(scalar_arith(a, q, ScalarOp::sub) == a - q);
    CHECK(normalize(a.num(), a.den()) == a);
}

TEST_CASE("scalar text form", "[coeff]") {
    const Scalar q = Scalar::q();
    CHECK(to_string(q - q.inverse()) == "q - q^-1");
    CHECK(to_string(Scalar(Rational(1, 2)) - Scalar(2) * Scalar::q_power(3)) == "-2*q^3 + 1/2");
    CHECK(to_string(Scalar(0)) == "0");
    CHECK(to_string(Scalar(1) / (q + Scalar(1))) == "(1)/(q + 1)");

    std::string sum;
    append_term(sum, Scalar(1), "x");
    append_term(sum, -q, "y");
    append_term(sum, q + Scalar(1), "z");
    CHECK(sum == "x - q*y + (q + 1)*z");
}

// Oracle: evaluation at rational points is a ring homomorphism, so random
// expressions can be compared against plain rational arithmetic.
TEST_CASE("evaluation agrees with rational arithmetic", "[coeff][property]") {
    props::Rng rng(7);
    const std::vector<Rational> points = {Rational(2), Rational(-3, 5), Rational(7, 3)};
    int checked = 0;
    for (int i = 0; i < 150; ++i) {
        const Scalar a = props::random_scalar(rng), b = props::random_scalar(rng);
        for (const auto& x : points) {
            Rational va, vb;
            try {
                va = a.evaluate(x);
                vb = b.evaluate(x);
            } catch (const DivisionByZero&) {
                continue;
            }
            CHECK((a - b).evaluate(x) == va - vb);
            CHECK((a * b).evaluate(x) == va * vb);
            if (vb != 0 && !b.is_zero()) CHECK((a / b).evaluate(x) == va / vb);
            ++checked;
        }
    }
    CHECK(checked >= 300);
}

TEST_CASE("scalar field laws hold on random inputs", "[coeff][property]") {
    require_property(props::check_scalar_field(200, 101), 200);
}
