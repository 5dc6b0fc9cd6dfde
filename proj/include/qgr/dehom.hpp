#pragma once

// Dehomogenisation of G_q(m,n) at b = [n-m+1 .. n]: the degree-zero part of
// G_q(m,n)[b^-1], its generators {I} = [I] b^-1, and the map
// rho : O_q(M_{m,n-m}) -> Dhom sending X[i,j] to {j, n-m+1 .. ^(n-i+1) .. n}.

#include "qgr/grassmann.hpp"

#include <map>
#include <string>
#include <vector>

namespace qgr {

/// {n-m+1, ..., n}
IndexSet top_set(Ambient amb);

/// m - |I n top|; b [I] b^-1 = q^{-s(I)} [I].
int s_exponent(const IndexSet& i, Ambient amb);

/// Checks [I] b = q^{s(I)} b [I] in O_q(M_mn).
bool mincomm_check(const IndexSet& i, Ambient amb);

/// sigma^k where sigma(x) = b x b^-1: scales each tableau by
/// q^{-k * sum of s(row)}.
GrassElem sigma(const GrassElem& g, int k = 1);

/// sum_c r_c b^-c with r_c straightened and homogeneous of degree c. Kept
/// normalized: no preferred tableau of r_c (c > 0) ends in the row top_set,
/// which makes the representation unique and == a value comparison.
class DhomElem {
public:
    using Powers = std::map<int, GrassElem>;

    DhomElem() = default;
    explicit DhomElem(Ambient amb) : amb_(amb) {}

    static DhomElem one(Ambient amb);
    static DhomElem scalar(Ambient amb, const Scalar& c);
    /// r b^-c; r must be homogeneous of degree c. Straightens and normalizes.
    static DhomElem fraction(const GrassElem& r, int c);
    /// {I} = [I] b^-1
    static DhomElem brace(Ambient amb, const IndexSet& cols);

    const Ambient& ambient() const { return amb_; }
    const Powers& powers() const { return powers_; }
    bool is_zero() const { return powers_.empty(); }
    int max_power() const { return powers_.empty() ? 0 : powers_.rbegin()->first; }

    DhomElem& operator+=(const DhomElem& o);
    DhomElem& operator-=(const DhomElem& o);
    DhomElem& operator*=(const Scalar& c);
    friend DhomElem operator+(DhomElem a, const DhomElem& b) { return a += b; }
    friend DhomElem operator-(DhomElem a, const DhomElem& b) { return a -= b; }
    friend DhomElem operator*(const Scalar& c, DhomElem a) { return a *= c; }
    friend DhomElem operator*(const DhomElem& a, const DhomElem& b);
    friend bool operator==(const DhomElem& a, const DhomElem& b) {
        return a.amb_ == b.amb_ && a.powers_ == b.powers_;
    }

    /// Builds from raw pieces without straightening; used by normalize_dhom
    /// and the JSON reader.
    static DhomElem from_powers(Ambient amb, Powers powers);

private:
    Ambient amb_{};
    Powers powers_;
};

/// Homogeneous element of degree d of G_q(m,n)[b^-1]: sum_c r_c b^-c with
/// r_c of degree c + d, normalized as for DhomElem. Degree 0 is Dhom itself;
/// other degrees arise as intermediate values such as [1 3]*[3 4]^-2.
class LocalElem {
public:
    LocalElem() = default;
    LocalElem(Ambient amb, int degree) : amb_(amb), degree_(degree) {}

    /// Throws std::invalid_argument unless g is homogeneous (zero counts as degree 0).
    static LocalElem from_grass(const GrassElem& g);
    static LocalElem from_dhom(const DhomElem& a);
    /// b^k for any integer k.
    static LocalElem b_power(Ambient amb, int k);

    const Ambient& ambient() const { return amb_; }
    int degree() const { return degree_; }
    const DhomElem::Powers& powers() const { return powers_; }
    bool is_zero() const { return powers_.empty(); }

    /// Zero is compatible with every degree; otherwise degrees must agree.
    LocalElem& operator+=(const LocalElem& o);
    LocalElem& operator-=(const LocalElem& o);
    LocalElem& operator*=(const Scalar& c);
    friend LocalElem operator*(const LocalElem& a, const LocalElem& b);

    /// Throws std::invalid_argument unless the degree is 0 or the value is 0.
    DhomElem to_dhom() const;

private:
    Ambient amb_{};
    int degree_ = 0;
    DhomElem::Powers powers_;
};

/// Straightens every piece and moves trailing top rows down one power at a
/// time. Throws std::invalid_argument if a piece is not homogeneous of
/// degree equal to its power.
DhomElem normalize_dhom(const DhomElem& a);

/// (r b^-c)(s b^-e) = r sigma^-c(s) b^-(c+e). Throws on ambient mismatch.
DhomElem dhom_mul(const DhomElem& a, const DhomElem& b);

/// The numerator N with a = N b^-c, straightened. Requires c >= max_power().
GrassElem clear_to_power(const DhomElem& a, int c);

/// Brace form, using [J1]...[Jc] b^-c = q^{-sum_k (k-1) s(Jk)} {J1}...{Jc}:
/// "{2 4}{1 3} + (q - q^-1)*{1 4}{2 3}".
std::string to_string(const DhomElem& a);

/// Words in brace generators with coefficients; the empty word is 1.
using BraceWord = std::vector<IndexSet>;
using BracePoly = std::map<BraceWord, Scalar>;

std::string to_string(const BracePoly& p);
/// Multiplies out with dhom_mul.
DhomElem evaluate(const BracePoly& p, Ambient amb);

/// True when I has exactly one column outside top_set, i.e. {I} is one of
/// the images rho(X[i,j]).
bool is_brace_generator(const IndexSet& i, Ambient amb);

/// {I} as a polynomial in the brace generators, by induction on the number
/// of columns outside top_set: a Plucker relation with K = {i1} u top,
/// J2 = I \ {i1} expresses b[I] through products [A][B] with one fewer.
BracePoly gens_expand(const IndexSet& i, Ambient amb);

/// rho(X[i,j]) for 1 <= i <= m, 1 <= j <= n-m; throws std::out_of_range.
DhomElem rho_generator(int i, int j, Ambient amb);
/// rho applied to an element of O_q(M_{m,n-m}); amb is the Grassmannian's.
DhomElem rho(const MatAlgElem& x, Ambient amb);

struct RhoInstance {
    std::string family;     // "same-column", "same-row", "crossing", "commuting", "phi"
    std::string relation;   // e.g. "X[1,1]*X[2,1] = q*X[2,1]*X[1,1]"
    bool pass = false;
};

struct RhoReport {
    std::vector<RhoInstance> instances;
    bool all_pass() const;
    std::size_t count(const std::string& family) const;
};

/// Checks the defining relations of O_q(M_{m,n-m}) on rho-images, and that
/// sigma scales every generator numerator by q^-1. Requires m < n.
RhoReport verify_rho_relations(Ambient amb);

struct RankReport {
    std::size_t monomials = 0;
    std::size_t rank = 0;
};

/// rho-images of all PBW monomials of O_q(M_{m,n-m}) of degree <= d,
/// cleared to b^-d, and the rank of their span in G_q(m,n).
RankReport rho_injectivity_rank(Ambient amb, int d);

}  // namespace qgr
