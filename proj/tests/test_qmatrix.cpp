#include "check_property.hpp"

#include "qgr/grassmann.hpp"
#include "qgr/qmatrix.hpp"

#include <algorithm>
#include <catch_amalgamated.hpp>

using namespace qgr;

namespace {

MatAlgElem X(Ambient amb, int i, int j) { return MatAlgElem::generator(amb, i, j); }

// Permutation expansion of a minor where every word is reduced by the naive
// single-pair rewriter instead of the memoized normal form.
MatAlgElem minor_by_permutations(const IndexSet& rows, const IndexSet& cols, Ambient amb) {
    std::vector<int> perm(cols.elems());
    MatAlgElem out(amb);
    do {
        int inv = 0;
        for (std::size_t a = 0; a < perm.size(); ++a)
            for (std::size_t b = a + 1; b < perm.size(); ++b)
                if (perm[a] > perm[b]) ++inv;
        Word w;
        for (std::size_t k = 0; k < perm.size(); ++k) w.push_back({rows[k], perm[k]});
        out += Scalar::neg_q_power(inv) * normal_form_by_rewriting(w, amb, RewriteStrategy::rightmost);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace

TEST_CASE("defining relations", "[qmatrix]") {
    const Ambient a{2, 2};
    const Scalar q = Scalar::q();
    const MatAlgElem a11 = X(a, 1, 1), a12 = X(a, 1, 2), a21 = X(a, 2, 1), a22 = X(a, 2, 2);
    CHECK(a12 * a11 == q.inverse() * (a11 * a12));
    CHECK(a21 * a11 == q.inverse() * (a11 * a21));
    CHECK(a21 * a12 == a12 * a21);
    CHECK(a22 * a11 == a11 * a22 - (q - q.inverse()) * (a12 * a21));
    CHECK(to_string(a22 * a11) == "X[1,1]*X[2,2] + (-q + q^-1)*X[1,2]*X[2,1]");
}

TEST_CASE("PBW monomials", "[qmatrix]") {
    PbwMonomial m(6);
    m = m.times_in_order(1).times_in_order(1).times_in_order(4);
    CHECK(m.degree() == 3);
    CHECK(m.last_generator() == 4);
    CHECK(m.word() == std::vector<int>{1, 1, 4});
    CHECK(m.without_one(1).degree() == 2);
    CHECK(PbwMonomial(6).is_one());
}

TEST_CASE("quantum minors match the permutation expansion", "[qmatrix][oracle]") {
    for (Ambient a : {Ambient{3, 3}, Ambient{2, 4}, Ambient{3, 4}}) {
        for (std::size_t r = 1; r <= static_cast<std::size_t>(a.m); ++r) {
            const auto row_sets = subsets_of_size(IndexSet::range(1, a.m), r);
            const auto col_sets = subsets_of_size(IndexSet::range(1, a.n), r);
            for (const auto& rows : row_sets)
                for (const auto& cols : col_sets) {
                    INFO(to_string(a) << " " << to_string(rows) << "|" << to_string(cols));
                    CHECK(quantum_minor(rows, cols, a) == minor_by_permutations(rows, cols, a));
                }
        }
    }
}

TEST_CASE("2x2 quantum determinant", "[qmatrix]") {
    const Ambient a{2, 2};
    const Scalar q = Scalar::q();
    const MatAlgElem d = quantum_determinant(a);
    CHECK(d == X(a, 1, 1) * X(a, 2, 2) - q * (X(a, 1, 2) * X(a, 2, 1)));
    CHECK(d == X(a, 2, 2) * X(a, 1, 1) - q.inverse() * (X(a, 1, 2) * X(a, 2, 1)));
    CHECK(quantum_minor({}, {}, a) == MatAlgElem::one(a));
}

TEST_CASE("row expansion of the 3x3 determinant", "[qmatrix]") {
    const Ambient a{3, 3};
    MatAlgElem sum(a);
    for (int j = 1; j <= 3; ++j)
        sum += Scalar::neg_q_power(j - 1) * (X(a, 1, j) * quantum_minor({2, 3}, IndexSet{j}.complement(3), a));
    CHECK(sum == quantum_determinant(a));
}

TEST_CASE("gamma is a two-sided inverse up to the determinant", "[qmatrix]") {
    for (int u : {2, 3}) {
        const Ambient a{u, u};
        const MatAlgElem d = quantum_determinant(a);
        for (int i = 1; i <= u; ++i)
            for (int j = 1; j <= u; ++j) {
                MatAlgElem left(a), right(a);
                for (int k = 1; k <= u; ++k) {
                    left += X(a, i, k) * gamma(X(a, k, j));
                    right += gamma(X(a, i, k)) * X(a, k, j);
                }
                const MatAlgElem expected = i == j ? d : MatAlgElem(a);
                CHECK(left == expected);
                CHECK(right == expected);
            }
    }
}

TEST_CASE("tau and gamma respect products", "[qmatrix][property]") {
    props::Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        const Ambient a = i % 2 ? Ambient{2, 2} : Ambient{3, 3};
        const MatAlgElem x = props::random_matalg(rng, a, 2, 2), y = props::random_matalg(rng, a, 2, 2);
        CHECK(tau(x * y) == tau(x) * tau(y));
        CHECK(tau(tau(x)) == x);
        CHECK(gamma(x * y) == gamma(y) * gamma(x));
        CHECK(gamma_tau(x) == gamma(tau(x)));
    }
}

TEST_CASE("coaction on generators", "[qmatrix]") {
    const Ambient a{2, 3}, left{2, 2};
    const TensorElem image = lambda_coaction(X(a, 1, 3));
    TensorElem expected(left, a);
    expected += TensorElem::pure(X(left, 1, 1), X(a, 1, 3));
    expected += TensorElem::pure(X(left, 1, 2), X(a, 2, 3));
    CHECK(image == expected);
    CHECK(lambda_coaction(MatAlgElem::one(a)) == TensorElem::one(left, a));
}

TEST_CASE("errors", "[qmatrix]") {
    const Ambient a{2, 3};
    CHECK_THROWS_AS(X(a, 3, 1), std::out_of_range);
    CHECK_THROWS_AS(mul(X(a, 1, 1), X(Ambient{2, 2}, 1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(quantum_minor({1, 2}, {1}, a), std::invalid_argument);
    CHECK_THROWS_AS(tau(X(a, 1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(IndexSet({1, 1}), std::invalid_argument);
}

TEST_CASE("memo cache can be cleared", "[qmatrix]") {
    const Ambient a{3, 3};
    const MatAlgElem before = quantum_determinant(a) * X(a, 1, 1);
    CHECK(rewrite_cache_size() > 0);
    clear_rewrite_cache();
    CHECK(rewrite_cache_size() == 0);
    CHECK(quantum_determinant(a) * X(a, 1, 1) == before);
}

TEST_CASE("rewriting is confluent", "[qmatrix][property]") { require_property(props::check_confluence(200, 201), 200); }

TEST_CASE("multiplication is associative", "[qmatrix][property]") {
    require_property(props::check_associativity(100, 202), 100);
}

TEST_CASE("quantum determinant is central", "[qmatrix][property]") {
    require_property(props::check_determinant_central(100, 203), 100);
}

TEST_CASE("coaction is multiplicative", "[qmatrix][property]") {
    require_property(props::check_coaction_multiplicative(100, 204), 100);
}
