#pragma once

// The quantum Grassmannian G_q(m,n): the subalgebra of O_q(M_mn) generated
// by the maximal quantum minors [J] = [1..m | J].

#include "qgr/coeff.hpp"
#include "qgr/qmatrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace qgr {

/// Rows of an m-tableau; the product [J1][J2]...[Js]. Ordered by comparing
/// the row sequences lexicographically.
struct Tableau {
    std::vector<IndexSet> rows;

    std::size_t size() const { return rows.size(); }
    bool empty() const { return rows.empty(); }
    friend auto operator<=>(const Tableau&, const Tableau&) = default;
};

Tableau concat(const Tableau& a, const Tableau& b);
std::string to_string(const Tableau& t);

struct Content {
    std::vector<int> counts;  // counts[i-1] = occurrences of column i
    int total() const;
    friend auto operator<=>(const Content&, const Content&) = default;
};

/// Formal combination of tableaux. Two GrassElems are equal as elements of
/// G_q(m,n) iff their embeddings agree; operator== is structural only.
class GrassElem {
public:
    using Terms = std::map<Tableau, Scalar>;

    GrassElem() = default;
    explicit GrassElem(Ambient amb) : amb_(amb) {}
    /// Validates every tableau against the ambient.
    GrassElem(Ambient amb, Terms terms);

    static GrassElem one(Ambient amb);
    static GrassElem scalar(Ambient amb, const Scalar& c);
    static GrassElem minor(Ambient amb, const IndexSet& cols);
    static GrassElem tableau(Ambient amb, const Tableau& t);

    const Ambient& ambient() const { return amb_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const Tableau& t) const;

    void add_term(const Tableau& t, const Scalar& c);
    GrassElem& operator+=(const GrassElem& o);
    GrassElem& operator-=(const GrassElem& o);
    GrassElem& operator*=(const Scalar& c);
    friend GrassElem operator+(GrassElem a, const GrassElem& b) { return a += b; }
    friend GrassElem operator-(GrassElem a, const GrassElem& b) { return a -= b; }
    friend GrassElem operator*(const Scalar& c, GrassElem a) { return a *= c; }
    /// Formal product: concatenation of tableaux.
    friend GrassElem operator*(const GrassElem& a, const GrassElem& b);
    friend bool operator==(const GrassElem& a, const GrassElem& b) {
        return a.amb_ == b.amb_ && a.terms_ == b.terms_;
    }

private:
    Ambient amb_{};
    Terms terms_;
};

/// Terms in decreasing tableau order: "q^-2*[1 3][2 4] + (q^-1 - q^-3)*[1 2][3 4]".
std::string to_string(const GrassElem& g);

/// Throws std::invalid_argument unless each row has m columns, and
/// std::out_of_range for a column outside 1..n.
void check_tableau(Ambient amb, const Tableau& t);

/// All m-subsets of {1..n} in lexicographic order.
std::vector<IndexSet> m_subsets(int n, int m);
/// All size-k subsets of a set, lexicographic.
std::vector<IndexSet> subsets_of_size(const IndexSet& s, std::size_t k);

/// Componentwise order on sorted sets of equal size.
bool star_leq(const IndexSet& a, const IndexSet& b);

struct ColumnComparison {
    bool lex_less = false;
    bool star_leq = false;
};
ColumnComparison compare_column_sets(const IndexSet& a, const IndexSet& b);

/// Rows weakly increase for the componentwise order.
bool is_preferred(const Tableau& t);

Content content(const Tableau& t, int n);

/// |{(i, j) in I x J : i > j}|
int ell(const IndexSet& i, const IndexSet& j);

/// Sum over K' u K'' = K of (-q)^{l(J1;K') + l(K';K'') + l(K'';J2)} [J1 u K'][K'' u J2],
/// restricted to splittings with |J1 u K'| = m; terms with a repeated column
/// vanish. Throws std::invalid_argument unless |J1|,|J2| <= m and
/// |K| = 2m - |J1| - |J2| > m.
GrassElem pluecker_relation(const IndexSet& j1, const IndexSet& j2, const IndexSet& k, Ambient amb);

/// Replaces each tableau by the product of its row minors in O_q(M_mn).
MatAlgElem embed(const GrassElem& g);
MatAlgElem embed(const Tableau& t, Ambient amb);

/// Preferred tableaux of a given content, in increasing tableau order.
std::vector<Tableau> preferred_tableaux(Ambient amb, const Content& c);

/// Rewrites g over preferred tableaux by solving, per content component, the
/// exact linear system of PBW expansions. The result is unique.
GrassElem straighten(const GrassElem& g);

/// Alternative straightening: repeatedly applies one Plucker relation to the
/// first adjacent row pair violating the componentwise order.
GrassElem straighten_by_pluecker(const GrassElem& g);

struct CommutationReport {
    int s = 0;                  // m - |I n J|
    GrassElem defect;           // straighten([I][J] - q^s [J][I])
    bool conforms = false;      // defect lies in the span of the [L][L'] below
    bool structural = false;    // every defect tableau is literally some [L][L']
    std::vector<Tableau> allowed;  // the [L][L'] with L <lex I
};

/// Requires I <lex J; throws std::invalid_argument otherwise.
CommutationReport commutation_check(const IndexSet& i, const IndexSet& j, Ambient amb);

struct NormalityReport {
    bool normal_mod_lower = false;  // every defect tableau starts with a row <lex I
    bool normal = false;            // every defect is zero
};

/// [I] is normal modulo the ideal generated by the generators below it in
/// lexicographic order, tested through first rows of straightened defects.
NormalityReport normality_mod_ideal_check(const IndexSet& i, Ambient amb);

/// Rows J -> w0 J with w0(i) = n+1-i and coefficients q -> q^-1. The result
/// lives in G_{q^-1}(m,n) with coefficients written in that algebra's own
/// parameter, so it is straightened with the same rules as G_q(m,n).
GrassElem delta_map(const GrassElem& g);

}  // namespace qgr
