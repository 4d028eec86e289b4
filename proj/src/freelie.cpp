#include "emc/freelie.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "emc/homotopy.hpp"

namespace emc::freelie {

namespace {

// Lyndon words are stored as strings over the byte alphabet 0..b-1, so
// lexicographic word order is plain std::string order.
using Word = std::string;
using SparseVec = std::map<int, i64>;  // basis index (0-based) -> coefficient

bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    for (size_t s = 1; s < w.size(); ++s)
        if (w.compare(w.substr(s)) >= 0) return false;
    return true;
}

// Standard right factorization of a Lyndon word of length >= 2: the right
// factor is the lexicographically least proper suffix (equivalently the
// longest proper Lyndon suffix).
std::pair<Word, Word> std_factorization(const Word& w) {
    size_t pos = 1;
    for (size_t s = 2; s < w.size(); ++s)
        if (w.compare(s, Word::npos, w, pos, Word::npos) < 0) pos = s;
    return {w.substr(0, pos), w.substr(pos)};
}

// All Lyndon words of length <= max_len over b letters, emitted in
// lexicographic order (Duval's generation), bucketed by length.
std::vector<std::vector<Word>> lyndon_words_upto(int b, int max_len) {
    std::vector<std::vector<Word>> out(max_len + 1);
    if (b < 1 || max_len < 1) return out;
    Word w(1, 0);
    while (true) {
        out[w.size()].push_back(w);
        size_t k = w.size();
        while (w.size() < static_cast<size_t>(max_len)) w.push_back(w[w.size() % k]);
        while (!w.empty() && w.back() == static_cast<char>(b - 1)) w.pop_back();
        if (w.empty()) break;
        ++w.back();
    }
    return out;
}

// Per-b basis enumeration and memoized bracket rewriting. Guarded by a
// single mutex per context; all public entry points take the lock once.
class Context {
public:
    explicit Context(int b) : b_(b) {}

    std::mutex mu;

    void ensure_degree(int l) {
        if (l <= max_degree_) return;
        auto buckets = lyndon_words_upto(b_, l);
        words_.assign(buckets.begin(), buckets.end());
        index_.clear();
        for (size_t len = 1; len < words_.size(); ++len)
            for (size_t k = 0; k < words_[len].size(); ++k)
                index_[words_[len][k]] = static_cast<int>(k);
        max_degree_ = l;
    }

    const std::vector<Word>& words(int l) {
        ensure_degree(l);
        return words_[l];
    }

    int index_of(const Word& w) const {
        auto it = index_.find(w);
        if (it == index_.end()) throw std::logic_error("freelie: word not in basis table");
        return it->second;
    }

    // [x, y] for basis words x, y in the degree-(|x|+|y|) Lyndon basis.
    SparseVec bracket_words(const Word& x, const Word& y) {
        if (x == y) return {};
        if (x < y) return rewrite(x, y);
        SparseVec res = rewrite(y, x);
        for (auto& [k, c] : res) c = -c;
        return res;
    }

private:
    SparseVec rewrite(const Word& u, const Word& v) {
        auto key = std::make_pair(u, v);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        if (!in_progress_.insert(key).second)
            throw std::logic_error("freelie: bracket rewriting cycle");

        ensure_degree(static_cast<int>(u.size() + v.size()));
        SparseVec res;
        Word w = u + v;
        if (is_lyndon(w) && std_factorization(w) == key) {
            res[index_of(w)] = 1;
        } else {
            // (u, v) is not a standard pair, so u is composite: split it and
            // apply Jacobi, [u1 u2, v] = [u1, [u2, v]] - [u2, [u1, v]].
            if (u.size() < 2) throw std::logic_error("freelie: letter in non-standard pair");
            auto [u1, u2] = std_factorization(u);
            const int dm = static_cast<int>(u2.size() + v.size());
            for (const auto& [m, c] : bracket_words(u2, v))
                for (const auto& [k, ck] : bracket_words(u1, words_[dm][m]))
                    res[k] += c * ck;
            const int dm2 = static_cast<int>(u1.size() + v.size());
            for (const auto& [m, c] : bracket_words(u1, v))
                for (const auto& [k, ck] : bracket_words(u2, words_[dm2][m]))
                    res[k] -= c * ck;
            std::erase_if(res, [](const auto& kv) { return kv.second == 0; });
        }
        in_progress_.erase(key);
        memo_.emplace(std::move(key), res);
        return res;
    }

    int b_;
    int max_degree_ = 0;
    std::vector<std::vector<Word>> words_;
    std::unordered_map<Word, int> index_;
    std::map<std::pair<Word, Word>, SparseVec> memo_;
    std::set<std::pair<Word, Word>> in_progress_;
};

Context& ctx(int b) {
    static std::mutex registry_mu;
    static std::map<int, std::unique_ptr<Context>> registry;
    std::lock_guard lock(registry_mu);
    auto& slot = registry[b];
    if (!slot) slot = std::make_unique<Context>(b);
    return *slot;
}

void check_b(int b) {
    if (b < 1) throw std::invalid_argument("freelie: generator count must be >= 1");
}

Word to_word(const std::vector<int>& letters) {
    Word w;
    w.reserve(letters.size());
    for (int c : letters) w.push_back(static_cast<char>(c - 1));
    return w;
}

std::vector<int> from_word(const Word& w) {
    std::vector<int> letters;
    letters.reserve(w.size());
    for (char c : w) letters.push_back(static_cast<int>(c) + 1);
    return letters;
}

}  // namespace

long long witt_dimension(int b, int l) {
    check_b(b);
    if (l < 1) throw std::invalid_argument("freelie: degree must be >= 1");
    Int total = 0;
    for (i64 d = 1; d <= l; ++d) {
        if (l % d != 0) continue;
        Int pw = boost::multiprecision::pow(Int(b), static_cast<unsigned>(l / d));
        total += mobius(d) * pw;
    }
    total /= l;
    if (total > INT64_MAX) throw std::overflow_error("witt_dimension: result exceeds 64-bit range");
    return static_cast<long long>(total);
}

std::vector<HallBasisElement> hall_basis(int b, int l) {
    check_b(b);
    if (l < 1) throw std::invalid_argument("freelie: degree must be >= 1");
    auto& c = ctx(b);
    std::lock_guard lock(c.mu);
    const auto& ws = c.words(l);
    std::vector<HallBasisElement> out;
    out.reserve(ws.size());
    for (size_t k = 0; k < ws.size(); ++k)
        out.push_back({l, static_cast<int>(k) + 1, from_word(ws[k])});
    return out;
}

std::string bracket_string(const HallBasisElement& e) {
    struct Render {
        std::string operator()(const Word& w) const {
            if (w.size() == 1) return "e" + std::to_string(static_cast<int>(w[0]) + 1);
            auto [u, v] = std_factorization(w);
            return "[" + (*this)(u) + "," + (*this)(v) + "]";
        }
    };
    return Render{}(to_word(e.word));
}

LieElement LieElement::zero(int b) {
    check_b(b);
    return {b, {}};
}

LieElement LieElement::generator(int b, int i) {
    check_b(b);
    if (i < 1 || i > b) throw std::invalid_argument("generator index out of range");
    LieElement x{b, {}};
    x.components[1] = std::vector<i64>(b, 0);
    x.components[1][i - 1] = 1;
    return x;
}

LieElement LieElement::basis(int b, int degree, int index) {
    check_b(b);
    long long d = witt_dimension(b, degree);
    if (index < 1 || index > d) throw std::invalid_argument("basis index out of range");
    LieElement x{b, {}};
    x.components[degree] = std::vector<i64>(d, 0);
    x.components[degree][index - 1] = 1;
    return x;
}

bool LieElement::is_zero() const {
    for (const auto& [l, v] : components)
        for (i64 c : v)
            if (c != 0) return false;
    return true;
}

void LieElement::normalize() {
    std::erase_if(components, [](const auto& kv) {
        return std::all_of(kv.second.begin(), kv.second.end(), [](i64 c) { return c == 0; });
    });
}

namespace {

void check_same_b(const LieElement& a, const LieElement& c) {
    if (a.b != c.b) throw std::invalid_argument("freelie: elements over different generator counts");
}

void check_shape(const LieElement& a) {
    for (const auto& [l, v] : a.components)
        if (static_cast<long long>(v.size()) != witt_dimension(a.b, l))
            throw std::invalid_argument("freelie: component length does not match Witt dimension");
}

}  // namespace

LieElement add(const LieElement& a, const LieElement& c) {
    check_same_b(a, c);
    LieElement out = a;
    for (const auto& [l, v] : c.components) {
        auto& dst = out.components[l];
        if (dst.empty()) dst.assign(v.size(), 0);
        for (size_t k = 0; k < v.size(); ++k) dst[k] += v[k];
    }
    out.normalize();
    return out;
}

LieElement scale(i64 s, const LieElement& a) {
    LieElement out = a;
    for (auto& [l, v] : out.components)
        for (auto& c : v) c *= s;
    out.normalize();
    return out;
}

LieElement bracket(const LieElement& a, const LieElement& c) {
    check_same_b(a, c);
    check_shape(a);
    check_shape(c);
    auto& context = ctx(a.b);
    std::lock_guard lock(context.mu);
    LieElement out{a.b, {}};
    for (const auto& [la, va] : a.components) {
        for (const auto& [lc, vc] : c.components) {
            const int l = la + lc;
            // ensure degree l first: extending the tables reallocates them
            auto& dst = out.components[l];
            if (dst.empty()) dst.assign(context.words(l).size(), 0);
            const auto& wa = context.words(la);
            const auto& wc = context.words(lc);
            for (size_t i = 0; i < va.size(); ++i) {
                if (va[i] == 0) continue;
                for (size_t j = 0; j < vc.size(); ++j) {
                    if (vc[j] == 0) continue;
                    for (const auto& [k, s] : context.bracket_words(wa[i], wc[j]))
                        dst[k] += va[i] * vc[j] * s;
                }
            }
        }
    }
    out.normalize();
    return out;
}

LieElement gl_action(const IntMatrix& g, const LieElement& x) {
    check_shape(x);
    const int b = x.b;
    if (static_cast<int>(g.size()) != b || !is_square(g))
        throw std::invalid_argument("gl_action: matrix shape does not match generator count");
    Int d = det_bareiss(g);
    if (d != 1 && d != -1)
        throw std::invalid_argument("gl_action: matrix is not integrally invertible");

    // Images of basis words, built up by degree through the standard
    // factorization. images[l][k] = action on the k-th degree-l word.
    int max_deg = x.components.empty() ? 0 : x.components.rbegin()->first;
    std::vector<std::vector<Word>> basis_words(max_deg + 1);
    for (int l = 1; l <= max_deg; ++l)
        for (const auto& e : hall_basis(b, l)) basis_words[l].push_back(to_word(e.word));
    auto index_in = [&](const Word& w) {
        const auto& ws = basis_words[w.size()];
        return std::lower_bound(ws.begin(), ws.end(), w) - ws.begin();
    };

    std::vector<std::vector<LieElement>> images(max_deg + 1);
    if (max_deg >= 1) {
        images[1].reserve(b);
        for (int i = 1; i <= b; ++i) {
            LieElement img = LieElement::zero(b);
            img.components[1] = g[i - 1];
            img.normalize();
            images[1].push_back(std::move(img));
        }
    }
    for (int l = 2; l <= max_deg; ++l) {
        images[l].reserve(basis_words[l].size());
        for (const Word& w : basis_words[l]) {
            auto [u, v] = std_factorization(w);
            images[l].push_back(bracket(images[u.size()][index_in(u)],
                                        images[v.size()][index_in(v)]));
        }
    }

    LieElement out = LieElement::zero(b);
    for (const auto& [l, v] : x.components)
        for (size_t k = 0; k < v.size(); ++k)
            if (v[k] != 0) out = add(out, scale(v[k], images[l][k]));
    return out;
}

i64 orbit_invariant(const LieElement& x, int l) {
    auto it = x.components.find(l);
    if (it == x.components.end()) return 0;
    i64 g = 0;
    for (i64 c : it->second) g = std::gcd(g, c);
    return g;
}

IntMatrix whitehead_matrix(int b, int m) {
    check_b(b);
    if (m != 5 && m != 6) throw std::invalid_argument("whitehead_matrix: m must be 5 or 6");
    auto& context = ctx(b);
    std::lock_guard lock(context.mu);
    const auto& dom = context.words(m - 1);
    const auto& cod = context.words(m);
    IntMatrix mat(cod.size(), std::vector<i64>(b * dom.size(), 0));
    for (int j = 0; j < b; ++j) {
        const Word gen(1, static_cast<char>(j));
        for (size_t k = 0; k < dom.size(); ++k) {
            const size_t col = static_cast<size_t>(j) * dom.size() + k;
            for (const auto& [row, c] : context.bracket_words(dom[k], gen))
                mat[row][col] = c;
        }
    }
    return mat;
}

namespace {

// Free rank of the j-th summand of the domain of the degree-m Whitehead
// map, read off the sphere-homotopy table: (b-1) inclusion summands of
// pi_m(S^2) plus d_w summands of pi_m(S^{w+1}) per commutator weight w.
long long lambda_free_rank_per_slot(int b, int m) {
    long long total = static_cast<long long>(b - 1) * sphere_pi(m, 2).free_rank;
    for (int w = 2; w + 1 <= m; ++w)
        total += witt_dimension(b, w) * sphere_pi(m, w + 1).free_rank;
    return total;
}

// Free rank of the codomain (weight >= 2 summands of pi_m of the wedge).
long long pi_free_rank(int b, int m) {
    long long total = 0;
    for (int w = 2; w + 1 <= m; ++w)
        total += witt_dimension(b, w) * sphere_pi(m, w + 1).free_rank;
    return total;
}

}  // namespace

long long rank_ker_w5(int b) {
    check_b(b);
    return static_cast<long long>(b) * lambda_free_rank_per_slot(b, 5) -
           rank_integer(whitehead_matrix(b, 5));
}

long long rank_coker_w6(int b) {
    check_b(b);
    return pi_free_rank(b, 7) - rank_integer(whitehead_matrix(b, 6));
}

long long rank_L(int b) { return rank_coker_w6(b) + rank_ker_w5(b); }

// The torsion factor Z_2^b contributes nothing to the free rank.
long long rank_FL(int b) { return rank_L(b); }

}  // namespace emc::freelie
