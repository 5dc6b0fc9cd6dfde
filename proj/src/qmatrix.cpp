#include "qgr/qmatrix.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace qgr {

std::string to_string(const Ambient& a) {
    return "(" + std::to_string(a.m) + "," + std::to_string(a.n) + ")";
}

// ---------------------------------------------------------------------------
// IndexSet

IndexSet::IndexSet(std::vector<int> elems) {
    if (!try_make(std::move(elems), *this)) throw std::invalid_argument("index set has a repeated entry");
}

bool IndexSet::try_make(std::vector<int> elems, IndexSet& out) {
    std::sort(elems.begin(), elems.end());
    if (std::adjacent_find(elems.begin(), elems.end()) != elems.end()) return false;
    out.elems_ = std::move(elems);
    return true;
}

IndexSet IndexSet::range(int first, int last) {
    IndexSet s;
    for (int i = first; i <= last; ++i) s.elems_.push_back(i);
    return s;
}

bool IndexSet::contains(int x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

int IndexSet::sum() const { return std::accumulate(elems_.begin(), elems_.end(), 0); }

IndexSet IndexSet::united(const IndexSet& o) const {
    IndexSet s;
    std::set_union(begin(), end(), o.begin(), o.end(), std::back_inserter(s.elems_));
    return s;
}

IndexSet IndexSet::intersected(const IndexSet& o) const {
    IndexSet s;
    std::set_intersection(begin(), end(), o.begin(), o.end(), std::back_inserter(s.elems_));
    return s;
}

IndexSet IndexSet::minus(const IndexSet& o) const {
    IndexSet s;
    std::set_difference(begin(), end(), o.begin(), o.end(), std::back_inserter(s.elems_));
    return s;
}

IndexSet IndexSet::complement(int u) const { return range(1, u).minus(*this); }

std::string to_string(const IndexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(s[i]);
    }
    return out + "}";
}

// ---------------------------------------------------------------------------
// PbwMonomial

int PbwMonomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool PbwMonomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](std::uint8_t e) { return e == 0; });
}

int PbwMonomial::last_generator() const {
    for (int g = generators() - 1; g >= 0; --g)
        if (exps_[static_cast<std::size_t>(g)] != 0) return g;
    return -1;
}

PbwMonomial PbwMonomial::times_in_order(int g) const {
    PbwMonomial p = *this;
    ++p.exps_[static_cast<std::size_t>(g)];
    return p;
}

PbwMonomial PbwMonomial::without_one(int g) const {
    PbwMonomial p = *this;
    --p.exps_[static_cast<std::size_t>(g)];
    return p;
}

std::vector<int> PbwMonomial::word() const {
    std::vector<int> w;
    for (int g = 0; g < generators(); ++g)
        for (int k = 0; k < exps_[static_cast<std::size_t>(g)]; ++k) w.push_back(g);
    return w;
}

bool operator<(const PbwMonomial& a, const PbwMonomial& b) {
    const std::size_t len = std::min(a.exps_.size(), b.exps_.size());
    for (std::size_t g = 0; g < len; ++g) {
        if (a.exps_[g] == b.exps_[g]) continue;
        // The word with more copies of g continues with g where the other
        // continues with a larger generator, unless the other word ends.
        const auto& longer = a.exps_[g] > b.exps_[g] ? a : b;
        const auto& shorter = a.exps_[g] > b.exps_[g] ? b : a;
        const bool shorter_ends =
            std::all_of(shorter.exps_.begin() + static_cast<std::ptrdiff_t>(g) + 1, shorter.exps_.end(),
                        [](std::uint8_t e) { return e == 0; });
        const bool a_is_longer = &longer == &a;
        return shorter_ends ? !a_is_longer : a_is_longer;
    }
    return a.exps_.size() < b.exps_.size();
}

// ---------------------------------------------------------------------------
// Caches

namespace {

std::size_t memo_limit() {
    static const std::size_t limit = [] {
        const char* env = std::getenv("QGR_MEMO_LIMIT");
        if (env == nullptr || *env == '\0') return static_cast<std::size_t>(-1);
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        return static_cast<std::size_t>(v);
    }();
    return limit;
}

std::atomic<std::size_t> g_cached_products{0};

struct AlgebraCache {
    std::shared_mutex mu;
    std::unordered_map<std::string, std::shared_ptr<const MonoTerms>> products;
    std::map<std::pair<IndexSet, IndexSet>, MatAlgElem> minors;
    std::map<int, MatAlgElem> gamma_images;
};

std::mutex g_registry_mu;
std::map<Ambient, std::unique_ptr<AlgebraCache>> g_registry;

AlgebraCache& cache_for(Ambient amb) {
    std::lock_guard lock(g_registry_mu);
    auto& slot = g_registry[amb];
    if (!slot) slot = std::make_unique<AlgebraCache>();
    return *slot;
}

const Scalar& q_inv() {
    static const Scalar s = Scalar::q_power(-1);
    return s;
}

const Scalar& minus_q_minus_q_inv() {
    static const Scalar s = -(Scalar::q() - Scalar::q_power(-1));
    return s;
}

struct PairTerm {
    const Scalar* coeff;
    int first;
    int second;
};

// X_y X_g for y > g, rewritten as a sum of in-order products X_a X_b.
int rewrite_pair(Ambient amb, int y, int g, PairTerm out[2]) {
    static const Scalar one(1);
    const int i = g / amb.n, j = g % amb.n;  // g = X[i,j]
    const int k = y / amb.n, l = y % amb.n;  // y = X[k,l], (i,j) < (k,l)
    if (i == k || j == l) {
        out[0] = {&q_inv(), g, y};
        return 1;
    }
    if (l < j) {
        out[0] = {&one, g, y};
        return 1;
    }
    out[0] = {&one, g, y};
    out[1] = {&minus_q_minus_q_inv(), i * amb.n + l, k * amb.n + j};
    return 2;
}

void accumulate(MonoTerms& terms, const PbwMonomial& mono, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

std::string product_key(const PbwMonomial& mono, int g) {
    std::string key(mono.raw().begin(), mono.raw().end());
    key.push_back(static_cast<char>(g));
    return key;
}

std::shared_ptr<const MonoTerms> times_generator(Ambient amb, AlgebraCache& cache, const PbwMonomial& mono,
                                                 int g) {
    const int last = mono.last_generator();
    if (last <= g) {
        auto t = std::make_shared<MonoTerms>();
        t->emplace(mono.times_in_order(g), Scalar(1));
        return t;
    }
    const std::string key = product_key(mono, g);
    {
        std::shared_lock lock(cache.mu);
        auto it = cache.products.find(key);
        if (it != cache.products.end()) return it->second;
    }
    PairTerm pairs[2];
    const int count = rewrite_pair(amb, last, g, pairs);
    const PbwMonomial prefix = mono.without_one(last);
    auto out = std::make_shared<MonoTerms>();
    for (int p = 0; p < count; ++p) {
        auto left = times_generator(amb, cache, prefix, pairs[p].first);
        for (const auto& [m1, c1] : *left) {
            auto right = times_generator(amb, cache, m1, pairs[p].second);
            const Scalar c = *pairs[p].coeff * c1;
            for (const auto& [m2, c2] : *right) accumulate(*out, m2, c * c2);
        }
    }
    if (g_cached_products.load(std::memory_order_relaxed) < memo_limit()) {
        std::unique_lock lock(cache.mu);
        if (cache.products.emplace(key, out).second) g_cached_products.fetch_add(1, std::memory_order_relaxed);
    }
    return out;
}

MonoTerms times_generator(Ambient amb, AlgebraCache& cache, const MonoTerms& terms, int g) {
    MonoTerms out;
    for (const auto& [mono, c] : terms) {
        auto prod = times_generator(amb, cache, mono, g);
        for (const auto& [m2, c2] : *prod) accumulate(out, m2, c * c2);
    }
    return out;
}

int gen_index(Ambient amb, GenIndex g) { return (g.row - 1) * amb.n + (g.col - 1); }

}  // namespace

std::size_t rewrite_cache_size() { return g_cached_products.load(); }

void clear_rewrite_cache() {
    std::lock_guard lock(g_registry_mu);
    g_registry.clear();
    g_cached_products = 0;
}

// ---------------------------------------------------------------------------
// MatAlgElem

MatAlgElem::MatAlgElem(Ambient amb, MonoTerms terms) : amb_(amb) {
    for (auto& [mono, c] : terms)
        if (!c.is_zero()) terms_.emplace(mono, std::move(c));
}

MatAlgElem MatAlgElem::one(Ambient amb) { return scalar(amb, Scalar(1)); }

MatAlgElem MatAlgElem::scalar(Ambient amb, const Scalar& c) {
    MatAlgElem e(amb);
    e.add_term(PbwMonomial(amb.generators()), c);
    return e;
}

MatAlgElem MatAlgElem::generator(Ambient amb, int row, int col) {
    check_generator(amb, {row, col});
    MatAlgElem e(amb);
    e.add_term(PbwMonomial(amb.generators()).times_in_order(gen_index(amb, {row, col})), Scalar(1));
    return e;
}

Scalar MatAlgElem::coeff(const PbwMonomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Scalar() : it->second;
}

void MatAlgElem::add_term(const PbwMonomial& mono, const Scalar& c) { accumulate(terms_, mono, c); }

MatAlgElem& MatAlgElem::operator+=(const MatAlgElem& o) {
    if (o.amb_ != amb_) throw std::invalid_argument("ambient mismatch");
    for (const auto& [mono, c] : o.terms_) accumulate(terms_, mono, c);
    return *this;
}

MatAlgElem& MatAlgElem::operator-=(const MatAlgElem& o) {
    if (o.amb_ != amb_) throw std::invalid_argument("ambient mismatch");
    for (const auto& [mono, c] : o.terms_) accumulate(terms_, mono, -c);
    return *this;
}

MatAlgElem& MatAlgElem::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, coeff] : terms_) coeff *= c;
    return *this;
}

MatAlgElem operator*(const MatAlgElem& a, const MatAlgElem& b) { return mul(a, b); }

void check_generator(Ambient amb, GenIndex g) {
    if (g.row < 1 || g.row > amb.m || g.col < 1 || g.col > amb.n)
        throw std::out_of_range("generator X[" + std::to_string(g.row) + "," + std::to_string(g.col) +
                                "] outside ambient " + to_string(amb));
}

MatAlgElem mul(const MatAlgElem& a, const MatAlgElem& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient mismatch");
    const Ambient amb = a.ambient();
    if (a.is_zero() || b.is_zero()) return MatAlgElem(amb);
    AlgebraCache& cache = cache_for(amb);
    MonoTerms out;
    for (const auto& [mb, cb] : b.terms()) {
        MonoTerms partial = a.terms();
        for (int g : mb.word()) partial = times_generator(amb, cache, partial, g);
        for (const auto& [mono, c] : partial) accumulate(out, mono, c * cb);
    }
    return MatAlgElem(amb, std::move(out));
}

MatAlgElem power(const MatAlgElem& a, int e) {
    if (e < 0) throw std::invalid_argument("negative power in O_q(M_mn)");
    MatAlgElem r = MatAlgElem::one(a.ambient());
    for (int i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

MatAlgElem normal_form(const Word& w, Ambient amb) {
    for (const auto& g : w) check_generator(amb, g);
    AlgebraCache& cache = cache_for(amb);
    MonoTerms terms;
    terms.emplace(PbwMonomial(amb.generators()), Scalar(1));
    for (const auto& g : w) terms = times_generator(amb, cache, terms, gen_index(amb, g));
    return MatAlgElem(amb, std::move(terms));
}

MatAlgElem normal_form_by_rewriting(const Word& w, Ambient amb, RewriteStrategy strategy) {
    for (const auto& g : w) check_generator(amb, g);
    std::map<std::vector<int>, Scalar> pending;
    std::vector<int> start;
    for (const auto& g : w) start.push_back(gen_index(amb, g));
    pending.emplace(start, Scalar(1));
    MatAlgElem done(amb);
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        std::vector<int> word = std::move(node.key());
        const Scalar coeff = std::move(node.mapped());
        std::ptrdiff_t pos = -1;
        for (std::size_t t = 0; t + 1 < word.size(); ++t) {
            const std::size_t at = strategy == RewriteStrategy::leftmost ? t : word.size() - 2 - t;
            if (word[at] > word[at + 1]) {
                pos = static_cast<std::ptrdiff_t>(at);
                break;
            }
        }
        if (pos < 0) {
            PbwMonomial mono(amb.generators());
            for (int g : word) mono = mono.times_in_order(g);
            done.add_term(mono, coeff);
            continue;
        }
        PairTerm pairs[2];
        const auto upos = static_cast<std::size_t>(pos);
        const int count = rewrite_pair(amb, word[upos], word[upos + 1], pairs);
        for (int p = 0; p < count; ++p) {
            std::vector<int> next = word;
            next[upos] = pairs[p].first;
            next[upos + 1] = pairs[p].second;
            Scalar c = coeff * *pairs[p].coeff;
            auto [it, inserted] = pending.try_emplace(std::move(next), c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) pending.erase(it);
            }
        }
    }
    return done;
}

// ---------------------------------------------------------------------------
// Minors

namespace {

int inversions(const std::vector<int>& perm) {
    int inv = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b]) ++inv;
    return inv;
}

}  // namespace

MatAlgElem quantum_minor(const IndexSet& rows, const IndexSet& cols, Ambient amb) {
    if (rows.size() != cols.size()) throw std::invalid_argument("quantum minor needs |I| = |J|");
    for (int r : rows)
        if (r < 1 || r > amb.m) throw std::out_of_range("minor row outside ambient");
    for (int c : cols)
        if (c < 1 || c > amb.n) throw std::out_of_range("minor column outside ambient");
    AlgebraCache& cache = cache_for(amb);
    auto key = std::make_pair(rows, cols);
    {
        std::shared_lock lock(cache.mu);
        auto it = cache.minors.find(key);
        if (it != cache.minors.end()) return it->second;
    }
    const std::size_t r = rows.size();
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    MatAlgElem out(amb);
    do {
        Word w;
        for (std::size_t a = 0; a < r; ++a) w.push_back({rows[a], cols[static_cast<std::size_t>(perm[a])]});
        MatAlgElem term = normal_form(w, amb);
        term *= Scalar::neg_q_power(inversions(perm));
        out += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::unique_lock lock(cache.mu);
    cache.minors.emplace(key, out);
    return out;
}

MatAlgElem quantum_determinant(Ambient amb) {
    if (!amb.square()) throw std::invalid_argument("quantum determinant needs a square ambient");
    return quantum_minor(IndexSet::range(1, amb.m), IndexSet::range(1, amb.n), amb);
}

// ---------------------------------------------------------------------------
// tau and Gamma

namespace {

void require_square(Ambient amb, const char* what) {
    if (!amb.square()) throw std::invalid_argument(std::string(what) + " needs a square ambient");
}

// Image of each PBW monomial under a map given on generators, multiplied in
// word order (anti = reversed order).
template <class GenImage>
MatAlgElem apply_on_generators(const MatAlgElem& a, GenImage image, bool anti) {
    const Ambient amb = a.ambient();
    MatAlgElem out(amb);
    for (const auto& [mono, c] : a.terms()) {
        std::vector<int> word = mono.word();
        if (anti) std::reverse(word.begin(), word.end());
        MatAlgElem prod = MatAlgElem::one(amb);
        for (int g : word) prod = mul(prod, image(g / amb.n + 1, g % amb.n + 1));
        prod *= c;
        out += prod;
    }
    return out;
}

}  // namespace

MatAlgElem tau(const MatAlgElem& a) {
    const Ambient amb = a.ambient();
    require_square(amb, "tau");
    return apply_on_generators(
        a, [amb](int i, int j) { return MatAlgElem::generator(amb, j, i); }, false);
}

MatAlgElem gamma(const MatAlgElem& a) {
    const Ambient amb = a.ambient();
    require_square(amb, "Gamma");
    AlgebraCache& cache = cache_for(amb);
    auto image = [&](int i, int j) {
        const int key = (i - 1) * amb.n + (j - 1);
        {
            std::shared_lock lock(cache.mu);
            auto it = cache.gamma_images.find(key);
            if (it != cache.gamma_images.end()) return it->second;
        }
        MatAlgElem img = quantum_minor(IndexSet{j}.complement(amb.m), IndexSet{i}.complement(amb.n), amb);
        img *= Scalar::neg_q_power(i - j);
        std::unique_lock lock(cache.mu);
        cache.gamma_images.emplace(key, img);
        return img;
    };
    return apply_on_generators(a, image, true);
}

MatAlgElem gamma_tau(const MatAlgElem& a) { return gamma(tau(a)); }

// ---------------------------------------------------------------------------
// Text

std::string to_string(const MatAlgElem& a) {
    if (a.is_zero()) return "0";
    const Ambient amb = a.ambient();
    std::string out;
    for (const auto& [mono, c] : a.terms()) {
        std::string body;
        for (int g = 0; g < mono.generators(); ++g) {
            const int e = mono.exponent(g);
            if (e == 0) continue;
            if (!body.empty()) body += '*';
            body += "X[" + std::to_string(g / amb.n + 1) + "," + std::to_string(g % amb.n + 1) + "]";
            if (e != 1) body += "^" + std::to_string(e);
        }
        append_term(out, c, body);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Tensor products and the coaction

TensorElem TensorElem::one(Ambient left, Ambient right) {
    TensorElem t(left, right);
    t.add_term(PbwMonomial(left.generators()), PbwMonomial(right.generators()), Scalar(1));
    return t;
}

TensorElem TensorElem::pure(const MatAlgElem& x, const MatAlgElem& y) {
    TensorElem t(x.ambient(), y.ambient());
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) t.add_term(mx, my, cx * cy);
    return t;
}

void TensorElem::add_term(const PbwMonomial& l, const PbwMonomial& r, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(Key{l, r}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
    if (o.left_ != left_ || o.right_ != right_) throw std::invalid_argument("tensor ambient mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& o) {
    if (o.left_ != left_ || o.right_ != right_) throw std::invalid_argument("tensor ambient mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

TensorElem tensor_mul(const TensorElem& a, const TensorElem& b) {
    if (a.left_ambient() != b.left_ambient() || a.right_ambient() != b.right_ambient())
        throw std::invalid_argument("tensor ambient mismatch");
    TensorElem out(a.left_ambient(), a.right_ambient());
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            MatAlgElem l = mul(MatAlgElem(a.left_ambient(), {{ka.first, Scalar(1)}}),
                               MatAlgElem(a.left_ambient(), {{kb.first, Scalar(1)}}));
            MatAlgElem r = mul(MatAlgElem(a.right_ambient(), {{ka.second, Scalar(1)}}),
                               MatAlgElem(a.right_ambient(), {{kb.second, Scalar(1)}}));
            const Scalar c = ca * cb;
            for (const auto& [ml, cl] : l.terms())
                for (const auto& [mr, cr] : r.terms()) out.add_term(ml, mr, c * cl * cr);
        }
    }
    return out;
}

TensorElem lambda_coaction(const MatAlgElem& a) {
    const Ambient right = a.ambient();
    const Ambient left{right.m, right.m};
    auto image = [&](int i, int j) {
        TensorElem t(left, right);
        for (int k = 1; k <= right.m; ++k)
            t += TensorElem::pure(MatAlgElem::generator(left, i, k), MatAlgElem::generator(right, k, j));
        return t;
    };
    TensorElem out(left, right);
    for (const auto& [mono, c] : a.terms()) {
        TensorElem prod = TensorElem::one(left, right);
        for (int g : mono.word()) prod = tensor_mul(prod, image(g / right.n + 1, g % right.n + 1));
        for (const auto& [k, ck] : prod.terms()) out.add_term(k.first, k.second, c * ck);
    }
    return out;
}

std::string to_string(const TensorElem& t) {
    if (t.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : t.terms()) {
        if (!first) out += " + ";
        first = false;
        MatAlgElem l(t.left_ambient(), {{k.first, Scalar(1)}});
        MatAlgElem r(t.right_ambient(), {{k.second, Scalar(1)}});
        out += "(" + to_string(c) + ")*(" + to_string(l) + ")@(" + to_string(r) + ")";
    }
    return out;
}

}  // namespace qgr
