#pragma once

// Exact arithmetic in Q(q): Laurent polynomials with rational coefficients
// and their fraction field.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qgr {

using Rational = mpq_class;

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero in Q(q)") {}
};

/// Laurent polynomial in q over Q. Terms are kept sorted by ascending
/// exponent with no zero coefficients; the empty term list is 0.
class LaurentPoly {
public:
    using Term = std::pair<int, Rational>;

    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
    explicit LaurentPoly(const Rational& c);
    /// Takes arbitrary (exp, coeff) pairs; combines and drops zeros.
    explicit LaurentPoly(std::vector<Term> terms);

    static LaurentPoly monomial(const Rational& c, int exp);
    static LaurentPoly q_power(int exp) { return monomial(Rational(1), exp); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    // Precondition for the accessors below: nonzero.
    int min_exp() const { return terms_.front().first; }
    int max_exp() const { return terms_.back().first; }
    const Rational& leading_coeff() const { return terms_.back().second; }
    const Rational& trailing_coeff() const { return terms_.front().second; }

    LaurentPoly shifted(int k) const;
    LaurentPoly scaled(const Rational& c) const;
    /// q -> q^-1
    LaurentPoly inverted() const;
    Rational evaluate(const Rational& q) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

private:
    std::vector<Term> terms_;
};

/// Polynomial division with remainder. Both arguments must have no negative
/// exponents; b must be nonzero.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b);
/// Monic gcd of two polynomials (nonnegative exponents). gcd(0, 0) = 0.
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);

/// Element of Q(q) in canonical form: the denominator is a polynomial with
/// nonzero constant term, integer coprime coefficients and positive leading
/// coefficient; num and den are coprime. Structural equality is value equality.
class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    Scalar(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    Scalar(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
    /// Throws DivisionByZero when den is zero.
    Scalar(LaurentPoly num, LaurentPoly den);

    static Scalar q() { return Scalar(LaurentPoly::q_power(1)); }
    static Scalar q_power(int e) { return Scalar(LaurentPoly::q_power(e)); }
    /// (-q)^e
    static Scalar neg_q_power(int e);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }

    Scalar inverse() const;
    Scalar invert_q() const;
    /// Value at a rational q; throws DivisionByZero when the denominator vanishes.
    Rational evaluate(const Rational& q) const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(const Scalar& a);
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

private:
    struct Raw {};
    Scalar(Raw, LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

/// Canonical form of num/den. Idempotent on already-normalized values.
Scalar normalize(const LaurentPoly& num, const LaurentPoly& den);

enum class ScalarOp { add, sub, mul, div };
Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op);

/// Text form, exponents descending: "q - q^-1", "-2*q^3 + 1/2".
std::string to_string(const LaurentPoly& p);
/// Laurent scalars print as their polynomial; proper fractions as "(num)/(den)".
std::string to_string(const Scalar& s);

/// Appends "c*body" to a sum being printed: " + " / " - " separators, unit
/// coefficients omitted, multi-term coefficients parenthesized. An empty
/// body prints the bare coefficient.
void append_term(std::string& out, const Scalar& c, const std::string& body);

}  // namespace qgr
