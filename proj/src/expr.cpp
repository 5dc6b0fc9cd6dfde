#include "qgr/expr.hpp"

#include <cctype>
#include <utility>

namespace qgr {

namespace {

std::pair<int, int> line_column(const std::string& text, std::size_t offset) {
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

}  // namespace

ExprError::ExprError(const std::string& text, std::size_t offset, const std::string& message)
    : std::invalid_argument([&] {
          auto [line, column] = line_column(text, offset);
          return "error at offset " + std::to_string(offset) + " (line " + std::to_string(line) + ", column " +
                 std::to_string(column) + "): " + message;
      }()),
      offset_(offset) {
    std::tie(line_, column_) = line_column(text, offset);
}

bool Expr::scalar_only() const {
    switch (kind) {
        case Kind::generator:
        case Kind::minor:
        case Kind::brace:
            return false;
        default:
            for (const auto& c : children)
                if (!c.scalar_only()) return false;
            return true;
    }
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    Parser(const std::string& text, Ambient amb) : text_(text), amb_(amb) {}

    Expr parse() {
        Expr e = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) fail(pos_, std::string("unexpected '") + text_[pos_] + "'");
        return e;
    }

private:
    [[noreturn]] void fail(std::size_t at, const std::string& msg) const { throw ExprError(text_, at, msg); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void expect(char c) {
        if (peek() != c) fail(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }

    Expr parse_sum() {
        Expr sum;
        sum.kind = Expr::Kind::sum;
        sum.offset = (skip_ws(), pos_);
        bool neg = false;
        if (peek() == '+' || peek() == '-') {
            neg = peek() == '-';
            ++pos_;
        }
        sum.children.push_back(parse_product());
        sum.negated.push_back(neg);
        while (peek() == '+' || peek() == '-') {
            neg = text_[pos_] == '-';
            ++pos_;
            sum.children.push_back(parse_product());
            sum.negated.push_back(neg);
        }
        if (sum.children.size() == 1 && !neg) return std::move(sum.children.front());
        return sum;
    }

    static bool starts_atom(char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == 'X' || c == '[' || c == '{' || c == '(';
    }

    Expr parse_product() {
        Expr acc = parse_power();
        for (;;) {
            const char c = peek();
            if (c == '/') {
                const std::size_t at = pos_++;
                Expr q;
                q.kind = Expr::Kind::quotient;
                q.offset = at;
                q.children.push_back(std::move(acc));
                q.children.push_back(parse_power());
                acc = std::move(q);
                continue;
            }
            if (c == '*') {
                ++pos_;
            } else if (!starts_atom(c)) {
                break;
            }
            if (acc.kind != Expr::Kind::product) {
                Expr p;
                p.kind = Expr::Kind::product;
                p.offset = acc.offset;
                p.children.push_back(std::move(acc));
                acc = std::move(p);
            }
            acc.children.push_back(parse_power());
        }
        return acc;
    }

    Expr parse_power() {
        Expr base = parse_atom();
        if (peek() != '^') return base;
        const std::size_t at = pos_++;
        bool paren = false;
        if (peek() == '(') {
            paren = true;
            ++pos_;
        }
        bool neg = false;
        if (peek() == '-' || peek() == '+') {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        skip_ws();
        const std::size_t digits_at = pos_;
        const std::string digits = read_digits();
        if (digits.empty()) fail(digits_at, "expected an integer exponent");
        if (digits.size() > 6) fail(digits_at, "exponent too large");
        if (paren) expect(')');
        Expr p;
        p.kind = Expr::Kind::power;
        p.offset = at;
        p.exponent = (neg ? -1 : 1) * std::stoi(digits);
        p.children.push_back(std::move(base));
        return p;
    }

    std::string read_digits() {
        std::string out;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) out += text_[pos_++];
        return out;
    }

    Expr parse_atom() {
        const char c = peek();
        Expr e;
        e.offset = pos_;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            e.kind = Expr::Kind::number;
            e.number = Rational(mpz_class(read_digits()));
            return e;
        }
        if (c == 'q') {
            ++pos_;
            e.kind = Expr::Kind::q;
            return e;
        }
        if (c == '(') {
            ++pos_;
            Expr inner = parse_sum();
            expect(')');
            return inner;
        }
        if (c == 'X') {
            ++pos_;
            expect('[');
            e.kind = Expr::Kind::generator;
            e.gen.row = read_int();
            expect(',');
            e.gen.col = read_int();
            expect(']');
            require_scalars_allowed(e.offset, "generator");
            if (e.gen.row < 1 || e.gen.row > amb_.m || e.gen.col < 1 || e.gen.col > amb_.n)
                fail(e.offset, "generator X[" + std::to_string(e.gen.row) + "," + std::to_string(e.gen.col) +
                                   "] outside " + to_string(amb_));
            return e;
        }
        if (c == '[') {
            ++pos_;
            e.kind = Expr::Kind::minor;
            auto first = read_index_list("]|");
            if (peek() == '|') {
                ++pos_;
                auto second = read_index_list("]");
                expect(']');
                require_scalars_allowed(e.offset, "minor");
                e.rows = make_set(first, amb_.m, "row");
                e.cols = make_set(second, amb_.n, "column");
                if (e.rows->size() != e.cols.size()) fail(e.offset, "minor needs as many rows as columns");
            } else {
                expect(']');
                require_scalars_allowed(e.offset, "minor");
                e.cols = make_set(first, amb_.n, "column");
                if (static_cast<int>(e.cols.size()) != amb_.m)
                    fail(e.offset, "minor [cols] needs m = " + std::to_string(amb_.m) + " columns");
            }
            return e;
        }
        if (c == '{') {
            ++pos_;
            e.kind = Expr::Kind::brace;
            auto list = read_index_list("}");
            expect('}');
            require_scalars_allowed(e.offset, "brace");
            e.cols = make_set(list, amb_.n, "column");
            if (static_cast<int>(e.cols.size()) != amb_.m)
                fail(e.offset, "brace needs m = " + std::to_string(amb_.m) + " columns");
            return e;
        }
        if (c == '\0') fail(pos_, "unexpected end of input");
        fail(pos_, std::string("unexpected '") + c + "'");
    }

    void require_scalars_allowed(std::size_t at, const std::string& what) const {
        if (amb_.m == 0) fail(at, what + " not allowed in a scalar");
    }

    int read_int() {
        skip_ws();
        const std::size_t at = pos_;
        const std::string d = read_digits();
        if (d.empty()) fail(at, "expected an integer");
        if (d.size() > 6) fail(at, "index too large");
        return std::stoi(d);
    }

    struct Entry {
        std::size_t offset;
        int value;
    };

    // Integers separated by commas or blanks, up to one of the stop characters.
    std::vector<Entry> read_index_list(const std::string& stops) {
        std::vector<std::pair<std::size_t, std::string>> raw;
        for (;;) {
            skip_ws();
            if (pos_ >= text_.size() || stops.find(text_[pos_]) != std::string::npos) break;
            if (!raw.empty() && text_[pos_] == ',') {
                ++pos_;
                skip_ws();
            }
            const std::size_t at = pos_;
            std::string d = read_digits();
            if (d.empty()) {
                if (pos_ >= text_.size()) break;
                fail(at, "expected an index");
            }
            raw.emplace_back(at, std::move(d));
        }
        if (raw.empty()) fail(pos_, "expected an index");
        std::vector<Entry> out;
        if (raw.size() == 1 && raw[0].second.size() > 1 && amb_.n > 0 && amb_.n <= 9) {
            for (std::size_t i = 0; i < raw[0].second.size(); ++i)
                out.push_back({raw[0].first + i, raw[0].second[i] - '0'});
            return out;
        }
        for (const auto& [at, d] : raw) {
            if (d.size() > 6) fail(at, "index too large");
            out.push_back({at, std::stoi(d)});
        }
        return out;
    }

    IndexSet make_set(const std::vector<Entry>& entries, int bound, const std::string& what) const {
        std::vector<int> values;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const auto& [at, v] = entries[i];
            if (v < 1 || v > bound) fail(at, what + " index " + std::to_string(v) + " outside 1.." + std::to_string(bound));
            if (i > 0 && v <= values.back()) fail(at, what + " indices must be strictly increasing");
            values.push_back(v);
        }
        return IndexSet(std::move(values));
    }

    const std::string& text_;
    Ambient amb_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(const std::string& text, Ambient amb) { return Parser(text, amb).parse(); }

// ---------------------------------------------------------------------------
// Evaluation

Scalar eval_scalar(const Expr& e, const std::string& text) {
    try {
        switch (e.kind) {
            case Expr::Kind::number:
                return Scalar(e.number);
            case Expr::Kind::q:
                return Scalar::q();
            case Expr::Kind::sum: {
                Scalar acc;
                for (std::size_t i = 0; i < e.children.size(); ++i) {
                    const Scalar v = eval_scalar(e.children[i], text);
                    acc = e.negated[i] ? acc - v : acc + v;
                }
                return acc;
            }
            case Expr::Kind::product: {
                Scalar acc(1);
                for (const auto& c : e.children) acc *= eval_scalar(c, text);
                return acc;
            }
            case Expr::Kind::quotient:
                return eval_scalar(e.children[0], text) / eval_scalar(e.children[1], text);
            case Expr::Kind::power: {
                const Scalar base = eval_scalar(e.children[0], text);
                if (base.is_laurent() && base.num().is_monomial()) {
                    const auto& [k, c] = base.num().terms().front();
                    Rational coeff = 1;
                    for (int i = 0; i < std::abs(e.exponent); ++i) coeff *= c;
                    if (e.exponent < 0) coeff = 1 / coeff;
                    return Scalar(LaurentPoly::monomial(coeff, k * e.exponent));
                }
                Scalar acc(1);
                for (int i = 0; i < std::abs(e.exponent); ++i) acc *= base;
                return e.exponent < 0 ? acc.inverse() : acc;
            }
            default:
                throw ExprError(text, e.offset, "expected a scalar");
        }
    } catch (const ExprError&) {
        throw;
    } catch (const std::exception& ex) {
        throw ExprError(text, e.offset, ex.what());
    }
}

namespace {

template <class Policy>
typename Policy::Value eval_with(const Expr& e, const std::string& text, const Policy& p) {
    using Value = typename Policy::Value;
    if (e.scalar_only()) return p.lift(eval_scalar(e, text));
    try {
        switch (e.kind) {
            case Expr::Kind::sum: {
                Value acc = p.lift(Scalar());
                for (std::size_t i = 0; i < e.children.size(); ++i) {
                    Value v = eval_with(e.children[i], text, p);
                    if (e.negated[i]) acc -= v;
                    else acc += v;
                }
                return acc;
            }
            case Expr::Kind::product: {
                Value acc = eval_with(e.children[0], text, p);
                for (std::size_t i = 1; i < e.children.size(); ++i) acc = p.mul(acc, eval_with(e.children[i], text, p));
                return acc;
            }
            case Expr::Kind::quotient: {
                if (!e.children[1].scalar_only()) throw ExprError(text, e.children[1].offset, "can only divide by a scalar");
                Value v = eval_with(e.children[0], text, p);
                v *= eval_scalar(e.children[1], text).inverse();
                return v;
            }
            case Expr::Kind::power: {
                if (e.exponent < 0) return p.negative_power(e.children[0], e.exponent, text);
                const Value base = eval_with(e.children[0], text, p);
                Value acc = p.lift(Scalar(1));
                for (int i = 0; i < e.exponent; ++i) acc = p.mul(acc, base);
                return acc;
            }
            default:
                return p.atom(e, text);
        }
    } catch (const ExprError&) {
        throw;
    } catch (const std::exception& ex) {
        throw ExprError(text, e.offset, ex.what());
    }
}

struct MatPolicy {
    using Value = MatAlgElem;
    Ambient amb;

    Value lift(const Scalar& c) const { return MatAlgElem::scalar(amb, c); }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value negative_power(const Expr& base, int, const std::string& text) const {
        throw ExprError(text, base.offset, "negative power of a non-scalar");
    }
    Value atom(const Expr& e, const std::string& text) const {
        switch (e.kind) {
            case Expr::Kind::generator:
                return MatAlgElem::generator(amb, e.gen.row, e.gen.col);
            case Expr::Kind::minor:
                return quantum_minor(e.rows ? *e.rows : IndexSet::range(1, amb.m), e.cols, amb);
            default:
                throw ExprError(text, e.offset, "brace literals need a dehomogenised context");
        }
    }
};

struct GrassPolicy {
    using Value = GrassElem;
    Ambient amb;

    Value lift(const Scalar& c) const { return GrassElem::scalar(amb, c); }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value negative_power(const Expr& base, int, const std::string& text) const {
        throw ExprError(text, base.offset, "negative power of a non-scalar");
    }
    Value atom(const Expr& e, const std::string& text) const {
        if (e.kind == Expr::Kind::minor) {
            if (e.rows && *e.rows != IndexSet::range(1, amb.m))
                throw ExprError(text, e.offset, "Grassmannian minors use rows 1..m");
            return GrassElem::minor(amb, e.cols);
        }
        if (e.kind == Expr::Kind::generator)
            throw ExprError(text, e.offset, "generators X[i,j] are not in the Grassmannian");
        throw ExprError(text, e.offset, "brace literals need a dehomogenised context");
    }
};

struct LocalPolicy {
    using Value = LocalElem;
    Ambient amb;

    Value lift(const Scalar& c) const {
        Value v = LocalElem::b_power(amb, 0);
        v *= c;
        return v;
    }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value negative_power(const Expr& base, int k, const std::string& text) const {
        if (base.kind != Expr::Kind::minor || (base.rows && *base.rows != IndexSet::range(1, amb.m)) ||
            base.cols != top_set(amb))
            throw ExprError(text, base.offset, "only the minor " + to_string(Tableau{{top_set(amb)}}) + " may be inverted");
        return LocalElem::b_power(amb, k);
    }
    Value atom(const Expr& e, const std::string& text) const {
        if (e.kind == Expr::Kind::brace) return LocalElem::from_dhom(DhomElem::brace(amb, e.cols));
        if (e.kind == Expr::Kind::minor) {
            if (e.rows && *e.rows != IndexSet::range(1, amb.m))
                throw ExprError(text, e.offset, "Grassmannian minors use rows 1..m");
            return LocalElem::from_grass(GrassElem::minor(amb, e.cols));
        }
        throw ExprError(text, e.offset, "generators X[i,j] are not in the Grassmannian");
    }
};

}  // namespace

MatAlgElem eval_matalg(const Expr& e, const std::string& text, Ambient amb) {
    return eval_with(e, text, MatPolicy{amb});
}

GrassElem eval_grass(const Expr& e, const std::string& text, Ambient amb) {
    return eval_with(e, text, GrassPolicy{amb});
}

DhomElem eval_dhom(const Expr& e, const std::string& text, Ambient amb) {
    const LocalElem v = eval_with(e, text, LocalPolicy{amb});
    if (!v.is_zero() && v.degree() != 0)
        throw ExprError(text, e.offset, "expression has degree " + std::to_string(v.degree()) + ", not 0");
    return v.to_dhom();
}

Scalar parse_scalar(const std::string& text) { return eval_scalar(parse_expr(text, Ambient{0, 0}), text); }

MatAlgElem parse_matalg(const std::string& text, Ambient amb) { return eval_matalg(parse_expr(text, amb), text, amb); }

GrassElem parse_grass(const std::string& text, Ambient amb) { return eval_grass(parse_expr(text, amb), text, amb); }

DhomElem parse_dhom(const std::string& text, Ambient amb) { return eval_dhom(parse_expr(text, amb), text, amb); }

}  // namespace qgr
