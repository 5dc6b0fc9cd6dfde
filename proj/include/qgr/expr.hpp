#pragma once

// Text expressions for elements of Q(q), O_q(M_mn), G_q(m,n) and its
// dehomogenisation.
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (('*' | '/' | juxtaposition) factor)*
//   factor  := atom ('^' ['-'] int)?
//   atom    := int | 'q' | 'X[' int ',' int ']' | '[' ints ('|' ints)? ']'
//            | '{' ints '}' | '(' expr ')'
//   ints    := int ((',' | ' ') int)*
//
// Division is by scalar expressions only. When n <= 9 a single multi-digit
// entry inside brackets is read digit by digit, so "[12]" means [1 2].

#include "qgr/coeff.hpp"
#include "qgr/dehom.hpp"
#include "qgr/grassmann.hpp"
#include "qgr/qmatrix.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgr {

/// Syntax or evaluation error tied to a position in the input text.
class ExprError : public std::invalid_argument {
public:
    ExprError(const std::string& text, std::size_t offset, const std::string& message);
    std::size_t offset() const { return offset_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    std::size_t offset_;
    int line_;
    int column_;
};

struct Expr {
    enum class Kind { sum, product, quotient, power, number, q, generator, minor, brace };

    Kind kind = Kind::number;
    std::size_t offset = 0;
    std::vector<Expr> children;
    std::vector<bool> negated;  // sum: sign of each child
    Rational number;            // number
    int exponent = 0;           // power
    GenIndex gen;               // generator
    std::optional<IndexSet> rows;  // minor; absent means {1..m}
    IndexSet cols;              // minor, brace

    /// No generator, minor or brace below this node.
    bool scalar_only() const;
};

/// Parses and checks every index against the ambient.
Expr parse_expr(const std::string& text, Ambient amb);

Scalar eval_scalar(const Expr& e, const std::string& text);
MatAlgElem eval_matalg(const Expr& e, const std::string& text, Ambient amb);
/// Products of minors stay formal (tableaux are not straightened).
GrassElem eval_grass(const Expr& e, const std::string& text, Ambient amb);
/// Minors are [J] = {J} b; only the top minor may carry a negative exponent.
/// The value must have degree 0.
DhomElem eval_dhom(const Expr& e, const std::string& text, Ambient amb);

Scalar parse_scalar(const std::string& text);
MatAlgElem parse_matalg(const std::string& text, Ambient amb);
GrassElem parse_grass(const std::string& text, Ambient amb);
DhomElem parse_dhom(const std::string& text, Ambient amb);

}  // namespace qgr
