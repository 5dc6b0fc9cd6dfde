#pragma once

// The quantum matrix algebra O_q(M_mn) in PBW normal form.
//
// Generators X[i,j] are ordered lexicographically by (row, col); a PBW
// monomial is a product of generators in that order. Multiplication reduces
// out-of-order adjacent pairs with the four defining q-commutation
// relations, for 1 <= i < k <= m and 1 <= j < l <= n:
//
//   X[i,j] X[i,l] = q X[i,l] X[i,j]
//   X[i,j] X[k,j] = q X[k,j] X[i,j]
//   X[i,l] X[k,j] = X[k,j] X[i,l]
//   X[i,j] X[k,l] - X[k,l] X[i,j] = (q - q^-1) X[i,l] X[k,j]

#include "qgr/coeff.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qgr {

struct Ambient {
    int m = 0;
    int n = 0;

    int generators() const { return m * n; }
    bool square() const { return m == n; }
    friend auto operator<=>(const Ambient&, const Ambient&) = default;
};

std::string to_string(const Ambient& a);

struct GenIndex {
    int row = 0;  // 1-based
    int col = 0;  // 1-based
    friend auto operator<=>(const GenIndex&, const GenIndex&) = default;
};

using Word = std::vector<GenIndex>;

/// Sorted set of distinct positive integers (row or column labels).
class IndexSet {
public:
    IndexSet() = default;
    /// Sorts; throws std::invalid_argument on repeated entries.
    explicit IndexSet(std::vector<int> elems);
    IndexSet(std::initializer_list<int> elems) : IndexSet(std::vector<int>(elems)) {}
    /// Builds from a sorted-or-not list that may contain repeats; returns
    /// false when a repeat is present.
    static bool try_make(std::vector<int> elems, IndexSet& out);
    static IndexSet range(int first, int last);  // {first, ..., last}

    const std::vector<int>& elems() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    int operator[](std::size_t i) const { return elems_[i]; }
    bool contains(int x) const;
    int sum() const;

    IndexSet united(const IndexSet& o) const;
    IndexSet intersected(const IndexSet& o) const;
    IndexSet minus(const IndexSet& o) const;
    /// Complement inside {1..u}.
    IndexSet complement(int u) const;

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }
    /// Lexicographic comparison of the sorted sequences.
    friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

private:
    std::vector<int> elems_;
};

std::string to_string(const IndexSet& s);

/// Dense exponent vector over the generators of one ambient, indexed by
/// (row-1)*n + (col-1). Ordered by comparing the underlying generator words
/// lexicographically.
class PbwMonomial {
public:
    PbwMonomial() = default;
    explicit PbwMonomial(int generators) : exps_(static_cast<std::size_t>(generators), 0) {}

    int generators() const { return static_cast<int>(exps_.size()); }
    int exponent(int g) const { return exps_[static_cast<std::size_t>(g)]; }
    int degree() const;
    bool is_one() const;
    /// Largest generator index with nonzero exponent, or -1.
    int last_generator() const;
    PbwMonomial times_in_order(int g) const;  // exponent of g + 1
    PbwMonomial without_one(int g) const;     // exponent of g - 1
    /// The ordered generator indices, with repetition.
    std::vector<int> word() const;
    const std::vector<std::uint8_t>& raw() const { return exps_; }

    friend bool operator==(const PbwMonomial& a, const PbwMonomial& b) { return a.exps_ == b.exps_; }
    friend bool operator<(const PbwMonomial& a, const PbwMonomial& b);

private:
    std::vector<std::uint8_t> exps_;
};

using MonoTerms = std::map<PbwMonomial, Scalar>;

/// Element of O_q(M_mn): sparse PBW expansion with nonzero coefficients.
class MatAlgElem {
public:
    MatAlgElem() = default;
    explicit MatAlgElem(Ambient amb) : amb_(amb) {}
    MatAlgElem(Ambient amb, MonoTerms terms);

    static MatAlgElem one(Ambient amb);
    static MatAlgElem scalar(Ambient amb, const Scalar& c);
    /// Throws std::out_of_range on indices outside the ambient.
    static MatAlgElem generator(Ambient amb, int row, int col);

    const Ambient& ambient() const { return amb_; }
    const MonoTerms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of a monomial (zero if absent).
    Scalar coeff(const PbwMonomial& mono) const;

    void add_term(const PbwMonomial& mono, const Scalar& c);
    MatAlgElem& operator+=(const MatAlgElem& o);
    MatAlgElem& operator-=(const MatAlgElem& o);
    MatAlgElem& operator*=(const Scalar& c);
    friend MatAlgElem operator+(MatAlgElem a, const MatAlgElem& b) { return a += b; }
    friend MatAlgElem operator-(MatAlgElem a, const MatAlgElem& b) { return a -= b; }
    friend MatAlgElem operator*(const Scalar& c, MatAlgElem a) { return a *= c; }
    friend MatAlgElem operator*(const MatAlgElem& a, const MatAlgElem& b);
    friend bool operator==(const MatAlgElem& a, const MatAlgElem& b) {
        return a.amb_ == b.amb_ && a.terms_ == b.terms_;
    }

private:
    Ambient amb_{};
    MonoTerms terms_;
};

std::string to_string(const MatAlgElem& a);

/// Checks 1 <= row <= m and 1 <= col <= n.
void check_generator(Ambient amb, GenIndex g);

/// PBW normal form of an arbitrary word (memoized insertion algorithm).
MatAlgElem normal_form(const Word& w, Ambient amb);

/// Which out-of-order adjacent pair a naive rewriting pass reduces first.
enum class RewriteStrategy { leftmost, rightmost };
/// Normal form by repeated single-pair rewriting of a sum of words. No
/// caching; used as an independent route to check confluence.
MatAlgElem normal_form_by_rewriting(const Word& w, Ambient amb, RewriteStrategy strategy);

/// Product in O_q(M_mn). Throws std::invalid_argument on ambient mismatch.
MatAlgElem mul(const MatAlgElem& a, const MatAlgElem& b);
MatAlgElem power(const MatAlgElem& a, int e);

/// [I|J] = sum over sigma of (-q)^{inv(sigma)} X[i1, j_sigma(1)] ... X[ir, j_sigma(r)].
/// Empty sets give 1. Throws std::invalid_argument on size mismatch and
/// std::out_of_range on indices outside the ambient.
MatAlgElem quantum_minor(const IndexSet& rows, const IndexSet& cols, Ambient amb);
/// D_q of a square ambient.
MatAlgElem quantum_determinant(Ambient amb);

/// Transpose automorphism X[i,j] -> X[j,i]; square ambients only.
MatAlgElem tau(const MatAlgElem& a);
/// Anti-endomorphism with X[i,j] -> (-q)^{i-j} [{j}~ | {i}~]; square only.
MatAlgElem gamma(const MatAlgElem& a);
/// gamma(tau(a)).
MatAlgElem gamma_tau(const MatAlgElem& a);

/// Element of O_q(M_m) (x) O_q(M_mn); both legs kept in PBW normal form.
class TensorElem {
public:
    using Key = std::pair<PbwMonomial, PbwMonomial>;

    TensorElem() = default;
    TensorElem(Ambient left, Ambient right) : left_(left), right_(right) {}

    static TensorElem one(Ambient left, Ambient right);
    /// x (x) y expanded over both PBW bases.
    static TensorElem pure(const MatAlgElem& x, const MatAlgElem& y);

    const Ambient& left_ambient() const { return left_; }
    const Ambient& right_ambient() const { return right_; }
    const std::map<Key, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const PbwMonomial& l, const PbwMonomial& r, const Scalar& c);
    TensorElem& operator+=(const TensorElem& o);
    TensorElem& operator-=(const TensorElem& o);
    friend bool operator==(const TensorElem& a, const TensorElem& b) {
        return a.left_ == b.left_ && a.right_ == b.right_ && a.terms_ == b.terms_;
    }

private:
    Ambient left_{};
    Ambient right_{};
    std::map<Key, Scalar> terms_;
};

std::string to_string(const TensorElem& t);

/// (x (x) y)(x' (x) y') = xx' (x) yy'. Throws on ambient mismatch.
TensorElem tensor_mul(const TensorElem& a, const TensorElem& b);

/// Left coaction Z[i,j] -> sum_k T[i,k] (x) Z[k,j], extended multiplicatively;
/// lands in O_q(M_m) (x) O_q(M_mn).
TensorElem lambda_coaction(const MatAlgElem& a);

/// Number of cached (monomial, generator) products across all ambients.
std::size_t rewrite_cache_size();
/// Drops all memoized products and minors.
void clear_rewrite_cache();

}  // namespace qgr
