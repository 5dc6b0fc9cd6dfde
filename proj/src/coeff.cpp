#include "qgr/coeff.hpp"

#include <algorithm>
#include <sstream>

namespace qgr {

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_.emplace_back(0, Rational(c));
}

LaurentPoly::LaurentPoly(const Rational& c) {
    if (sgn(c) != 0) terms_.emplace_back(0, c);
}

LaurentPoly::LaurentPoly(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& t : terms) {
        if (!terms_.empty() && terms_.back().first == t.first) {
            terms_.back().second += t.second;
            if (sgn(terms_.back().second) == 0) terms_.pop_back();
        } else if (sgn(t.second) != 0) {
            terms_.push_back(std::move(t));
        }
    }
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exp) {
    LaurentPoly p;
    if (sgn(c) != 0) p.terms_.emplace_back(exp, c);
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.first += k;
    return p;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    if (sgn(c) == 0) return {};
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.second *= c;
    return p;
}

LaurentPoly LaurentPoly::inverted() const {
    LaurentPoly p;
    p.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        p.terms_.emplace_back(-it->first, it->second);
    return p;
}

Rational LaurentPoly::evaluate(const Rational& q) const {
    if (terms_.empty()) return 0;
    if (sgn(q) == 0 && min_exp() < 0) throw DivisionByZero();
    // Horner on the shifted polynomial, then rescale by q^min_exp.
    Rational acc = 0;
    int e = max_exp();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        while (e > it->first) {
            acc *= q;
            --e;
        }
        acc += it->second;
    }
    while (e > min_exp()) {
        acc *= q;
        --e;
    }
    Rational scale = 1;
    int k = min_exp();
    Rational base = k < 0 ? Rational(1) / q : q;
    for (int i = 0; i < std::abs(k); ++i) scale *= base;
    return acc * scale;
}

namespace {

template <class Combine>
std::vector<LaurentPoly::Term> merge(const std::vector<LaurentPoly::Term>& a,
                                     const std::vector<LaurentPoly::Term>& b, Combine combine,
                                     bool negate_b) {
    std::vector<LaurentPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, negate_b ? Rational(-b[j].second) : b[j].second);
            ++j;
        } else {
            Rational c = combine(a[i].second, b[j].second);
            if (sgn(c) != 0) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    terms_ = merge(terms_, o.terms_, [](const Rational& x, const Rational& y) { return Rational(x + y); },
                   false);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge(terms_, o.terms_, [](const Rational& x, const Rational& y) { return Rational(x - y); },
                   true);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    if (a.is_zero() || b.is_zero()) return p;
    if (a.is_monomial()) {
        p = b.scaled(a.terms_[0].second).shifted(a.terms_[0].first);
        return p;
    }
    if (b.is_monomial()) return a.scaled(b.terms_[0].second).shifted(b.terms_[0].first);
    const int lo = a.min_exp() + b.min_exp();
    const int hi = a.max_exp() + b.max_exp();
    std::vector<Rational> dense(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) dense[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
    for (std::size_t k = 0; k < dense.size(); ++k)
        if (sgn(dense[k]) != 0) p.terms_.emplace_back(lo + static_cast<int>(k), std::move(dense[k]));
    return p;
}

LaurentPoly operator-(const LaurentPoly& a) { return a.scaled(Rational(-1)); }

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    std::vector<LaurentPoly::Term> quot;
    LaurentPoly rem = a;
    const int db = b.max_exp();
    const Rational& lb = b.leading_coeff();
    while (!rem.is_zero() && rem.max_exp() >= db) {
        Rational c = rem.leading_coeff() / lb;
        int e = rem.max_exp() - db;
        quot.emplace_back(e, c);
        rem -= b.scaled(c).shifted(e);
    }
    return {LaurentPoly(std::move(quot)), rem};
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
    while (!b.is_zero()) {
        auto r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(Rational(1) / a.leading_coeff());
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    normalize();
}

Scalar Scalar::neg_q_power(int e) {
    return Scalar(LaurentPoly::monomial(Rational((e % 2 == 0) ? 1 : -1), e));
}

Scalar normalize(const LaurentPoly& num, const LaurentPoly& den) { return Scalar(num, den); }

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    if (den_.is_monomial()) {
        const auto& [e, c] = den_.terms().front();
        num_ = num_.scaled(Rational(1) / c).shifted(-e);
        den_ = LaurentPoly(1);
        return;
    }
    // Clear q-powers from both sides, then cancel the polynomial gcd.
    const int dshift = den_.min_exp();
    const int nshift = num_.min_exp();
    LaurentPoly d = den_.shifted(-dshift);
    LaurentPoly n = num_.shifted(-nshift);
    LaurentPoly g = poly_gcd(n, d);
    if (!(g.is_one())) {
        n = poly_divmod(n, g).first;
        d = poly_divmod(d, g).first;
    }
    n = n.shifted(nshift - dshift);
    if (d.is_monomial()) {
        // d has a nonzero constant term, so it is a constant here.
        num_ = n.scaled(Rational(1) / d.trailing_coeff());
        den_ = LaurentPoly(1);
        return;
    }
    // Make d primitive over Z with positive leading coefficient.
    mpz_class lcm_den = 1;
    for (const auto& t : d.terms()) lcm_den = lcm(lcm_den, mpz_class(t.second.get_den()));
    mpz_class g_num = 0;
    for (const auto& t : d.terms()) g_num = gcd(g_num, mpz_class(t.second.get_num() * (lcm_den / t.second.get_den())));
    Rational scale(lcm_den, g_num);
    scale.canonicalize();
    if (sgn(d.leading_coeff()) < 0) scale = -scale;
    num_ = n.scaled(scale);
    den_ = d.scaled(scale);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Scalar(den_, num_);
}

Scalar Scalar::invert_q() const { return Scalar(num_.inverted(), den_.inverted()); }

Rational Scalar::evaluate(const Rational& q) const {
    Rational d = den_.evaluate(q);
    if (sgn(d) == 0) throw DivisionByZero();
    return num_.evaluate(q) / d;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_.is_one() && o.den_.is_one()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = Scalar();
    num_ = num_ * o.num_;
    if (o.den_.is_one()) {
        if (den_.is_one()) return *this;
    } else {
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar operator-(const Scalar& a) { return Scalar(Scalar::Raw{}, -a.num_, a.den_); }

Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op) {
    switch (op) {
        case ScalarOp::add: return a + b;
        case ScalarOp::sub: return a - b;
        case ScalarOp::mul: return a * b;
        case ScalarOp::div: return a / b;
    }
    return {};
}

// ---------------------------------------------------------------------------
// Text

namespace {

std::string monomial_body(const Rational& abs_c, int e) {
    std::ostringstream os;
    const bool unit = abs_c == 1;
    if (e == 0) {
        os << abs_c.get_str();
    } else {
        if (!unit) os << abs_c.get_str() << '*';
        os << 'q';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

}  // namespace

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const bool neg = sgn(it->second) < 0;
        Rational mag = abs(it->second);
        if (first) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        out += monomial_body(mag, it->first);
        first = false;
    }
    return out;
}

std::string to_string(const Scalar& s) {
    if (s.is_laurent()) return to_string(s.num());
    return "(" + to_string(s.num()) + ")/(" + to_string(s.den()) + ")";
}

void append_term(std::string& out, const Scalar& c, const std::string& body) {
    const bool first = out.empty();
    Scalar coeff = c;
    const bool neg = coeff.is_laurent() && coeff.num().is_monomial() && sgn(coeff.num().trailing_coeff()) < 0;
    if (neg) coeff = -coeff;
    if (!first) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    std::string cs;
    if (!coeff.is_one()) {
        if (coeff.is_laurent() && !coeff.num().is_monomial()) cs = "(" + to_string(coeff) + ")";
        else cs = to_string(coeff);
    }
    if (body.empty()) out += cs.empty() ? "1" : cs;
    else if (cs.empty()) out += body;
    else out += cs + "*" + body;
}

}  // namespace qgr
