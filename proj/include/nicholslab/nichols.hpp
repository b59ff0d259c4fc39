#ifndef NICHOLSLAB_NICHOLS_HPP
#define NICHOLSLAB_NICHOLS_HPP

#include "exactnum.hpp"
#include "ydbraiding.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

namespace nicholslab {

/// Monomial v_{a_1} ... v_{a_n}; letters are 0-based rack elements.
using Word = std::vector<std::uint32_t>;

/// "v1v2v1v3"
inline std::string word_to_string(const Word& w)
{
    if (w.empty()) return "1";
    std::string s;
    for (auto a : w) s += "v" + std::to_string(a + 1);
    return s;
}

/// Parses "v1v2v1v3" (1-based); also accepts "1,2,1,3".
inline Word parse_monomial(const std::string& text)
{
    Word w;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char ch = text[pos];
        if (ch == 'v' || ch == ',' || ch == ' ' || ch == '*') {
            ++pos;
            continue;
        }
        std::size_t used = 0;
        const unsigned long i = std::stoul(text.substr(pos), &used);
        if (i == 0) throw std::invalid_argument("monomial letters are 1-based in '" + text + "'");
        w.push_back(static_cast<std::uint32_t>(i - 1));
        pos += used;
    }
    return w;
}

/// Parses a chain as written, e.g. "d2d1d4" or "2,1,4"; returns 0-based indices in written order.
inline std::vector<std::uint32_t> parse_chain(const std::string& text)
{
    std::vector<std::uint32_t> c;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char ch = text[pos];
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            ++pos;
            continue;
        }
        std::size_t used = 0;
        const unsigned long i = std::stoul(text.substr(pos), &used);
        if (i == 0) throw std::invalid_argument("chain indices are 1-based");
        c.push_back(static_cast<std::uint32_t>(i - 1));
        pos += used;
    }
    return c;
}

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept
    {
        std::size_t h = 1469598103934665603ull;
        for (auto a : w) h = (h ^ a) * 1099511628211ull;
        return h;
    }
};

/// Element of the free algebra on V: word ↦ coefficient (zero coefficients dropped).
template <typename Field>
using FreeElement = std::map<Word, typename Field::value_type>;

// ---------------------------------------------------------------------------
// Skew-derivations on words
// ---------------------------------------------------------------------------

/// g_j acting on a word: each letter a becomes q_{j,a} v_{j⊳a}.
template <typename Field>
std::pair<Word, typename Field::value_type> twist(const Cocycle<Field>& c, std::uint32_t j, const Word& w)
{
    const auto& f = c.field();
    auto s = f.one();
    Word out(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
        s = f.mul(s, c.q(j, w[k]));
        out[k] = c.rack().op(j, w[k]);
    }
    return {out, s};
}

/// ∂_j(v_{a_1}...v_{a_n}) = Σ_{p : a_p = j} v_{a_1}...v_{a_{p-1}} · g_j(v_{a_{p+1}}...v_{a_n}).
template <typename Field>
FreeElement<Field> derive(const Cocycle<Field>& c, const Word& w, std::uint32_t j)
{
    const auto& f = c.field();
    FreeElement<Field> out;
    for (std::size_t p = 0; p < w.size(); ++p) {
        if (w[p] != j) continue;
        Word term(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
        auto [tail, s] = twist(c, j, Word(w.begin() + static_cast<std::ptrdiff_t>(p) + 1, w.end()));
        term.insert(term.end(), tail.begin(), tail.end());
        auto it = out.find(term);
        if (it == out.end()) {
            out.emplace(std::move(term), s);
        } else {
            it->second = f.add(it->second, s);
            if (f.is_zero(it->second)) out.erase(it);
        }
    }
    return out;
}

template <typename Field>
FreeElement<Field> derive(const Cocycle<Field>& c, const FreeElement<Field>& x, std::uint32_t j)
{
    const auto& f = c.field();
    FreeElement<Field> out;
    for (const auto& [w, a] : x)
        for (const auto& [t, b] : derive(c, w, j)) {
            auto& slot = out.try_emplace(t, f.zero()).first->second;
            slot = f.add(slot, f.mul(a, b));
        }
    for (auto it = out.begin(); it != out.end();)
        it = f.is_zero(it->second) ? out.erase(it) : std::next(it);
    return out;
}

/// Applies a chain written as ∂_{c_1} ∂_{c_2} ... ∂_{c_n} (so c_n acts first) to m and
/// returns the resulting scalar. Terms are merged after every step.
template <typename Field>
typename Field::value_type evaluate_chain(const Cocycle<Field>& c, const Word& m, const std::vector<std::uint32_t>& chain,
                                          std::size_t* peak_terms = nullptr)
{
    const auto& f = c.field();
    if (chain.size() != m.size()) throw std::invalid_argument("chain length must equal the monomial degree");
    using V = typename Field::value_type;
    std::unordered_map<Word, V, WordHash> cur{{m, f.one()}}, next;
    std::size_t peak = 1;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        const std::uint32_t j = *it;
        next.clear();
        for (const auto& [w, a] : cur) {
            // derive(w, j), inlined to avoid intermediate maps
            for (std::size_t p = 0; p < w.size(); ++p) {
                if (w[p] != j) continue;
                Word term(w.size() - 1);
                auto s = a;
                for (std::size_t k = 0; k < p; ++k) term[k] = w[k];
                for (std::size_t k = p + 1; k < w.size(); ++k) {
                    s = f.mul(s, c.q(j, w[k]));
                    term[k - 1] = c.rack().op(j, w[k]);
                }
                auto [slot, inserted] = next.try_emplace(std::move(term), s);
                if (!inserted) slot->second = f.add(slot->second, s);
            }
        }
        cur.clear();
        for (auto& [w, a] : next)
            if (!f.is_zero(a)) cur.emplace(w, std::move(a));
        peak = std::max(peak, cur.size());
        if (cur.empty()) break;
    }
    if (peak_terms) *peak_terms = peak;
    auto it = cur.find(Word{});
    return it == cur.end() ? f.zero() : it->second;
}

// ---------------------------------------------------------------------------
// Graded engine
// ---------------------------------------------------------------------------

class ResourceCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EngineOptions {
    std::size_t max_degree = 64;
    std::size_t threads = 1;
    std::size_t max_dim = 0;  // per degree; 0 = unlimited
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

template <typename Field>
class GradedBasis {
public:
    using value_type = typename Field::value_type;
    using Vec = SparseVec<Field>;

    struct Degree {
        std::vector<Word> words;                                   // basis words
        std::vector<std::pair<std::uint32_t, std::uint32_t>> source;  // basis t = v_j · (basis b' of degree n-1)
        std::vector<std::vector<Vec>> left;    // left[j][b'] = coords of v_j · b' (b' in degree n-1)
        std::vector<std::vector<Vec>> deriv;   // deriv[i][t] = ∂_i(t) in degree n-1
        std::vector<std::vector<Vec>> twist;   // twist[i][t] = g_i · t in degree n
    };

    GradedBasis(Cocycle<Field> c, EngineOptions opts = {}) : c_(std::move(c)), opts_(opts)
    {
        const auto& f = c_.field();
        Degree zero;
        zero.words.push_back({});
        zero.twist.assign(c_.size(), std::vector<Vec>(1));
        for (auto& t : zero.twist) t[0].push(0, f.one());
        degrees_.push_back(std::move(zero));
        while (degrees_.back().words.size() > 0 && degrees_.size() <= opts_.max_degree) extend();
        finite_ = degrees_.back().words.empty();
        if (finite_) degrees_.pop_back();
    }

    const Cocycle<Field>& cocycle() const { return c_; }
    const Field& field() const { return c_.field(); }

    /// True if a zero degree was reached; otherwise the result stops at max_degree.
    bool finite() const { return finite_; }
    bool truncated() const { return !finite_; }

    std::vector<std::size_t> dims() const
    {
        std::vector<std::size_t> out;
        for (const auto& d : degrees_) out.push_back(d.words.size());
        return out;
    }
    std::size_t top_degree() const { return degrees_.size() - 1; }
    std::size_t dim(std::size_t n) const { return n < degrees_.size() ? degrees_[n].words.size() : 0; }
    std::size_t total() const
    {
        std::size_t s = 0;
        for (const auto& d : degrees_) s += d.words.size();
        return s;
    }
    const Degree& degree(std::size_t n) const { return degrees_.at(n); }

    /// Coordinates of a monomial in the basis of its degree (empty if the degree vanishes).
    Vec coordinates(const Word& w) const
    {
        const auto& f = field();
        Vec x;
        x.push(0, f.one());
        for (std::size_t k = w.size(); k-- > 0;) {
            const std::size_t n = w.size() - k;
            if (n >= degrees_.size()) return {};
            x = combine(degrees_[n].left[w[k]], x, degrees_[n].words.size());
            if (x.empty()) return {};
        }
        return x;
    }

    /// ∂_i applied to an element of degree n given by coordinates.
    Vec derivative(std::size_t n, std::uint32_t i, const Vec& x) const
    {
        if (n == 0 || n >= degrees_.size()) return {};
        return combine(degrees_[n].deriv[i], x, degrees_[n - 1].words.size());
    }

    /// Chain as written (last entry applied first), evaluated on basis coordinates.
    value_type evaluate_chain_in_basis(const Word& m, const std::vector<std::uint32_t>& chain) const
    {
        const auto& f = field();
        if (chain.size() != m.size()) throw std::invalid_argument("chain length must equal the monomial degree");
        Vec x = coordinates(m);
        std::size_t n = m.size();
        for (auto it = chain.rbegin(); it != chain.rend() && !x.empty(); ++it) x = derivative(n--, *it, x);
        return x.empty() ? f.zero() : x.val[0];
    }

    /// A chain (as written) whose evaluation on x is nonzero: at each step the least i with ∂_i ≠ 0.
    std::optional<std::vector<std::uint32_t>> witness_chain(std::size_t n, Vec x) const
    {
        std::vector<std::uint32_t> applied;
        for (; n > 0; --n) {
            bool found = false;
            for (std::uint32_t i = 0; i < c_.size(); ++i) {
                Vec y = derivative(n, i, x);
                if (!y.empty()) {
                    applied.push_back(i);
                    x = std::move(y);
                    found = true;
                    break;
                }
            }
            if (!found) return std::nullopt;
        }
        return std::vector<std::uint32_t>(applied.rbegin(), applied.rend());
    }

private:
    Vec combine(const std::vector<Vec>& columns, const Vec& x, std::size_t dim) const
    {
        SparseAccumulator<Field> acc(field(), dim);
        for (std::size_t k = 0; k < x.size(); ++k) acc.add_scaled(columns[x.idx[k]], x.val[k]);
        return acc.take();
    }

    void extend()
    {
        const auto& f = field();
        const std::size_t n = degrees_.size();
        const Degree& prev = degrees_.back();
        const std::size_t d = c_.size();
        const std::size_t m = prev.words.size();
        Degree cur;
        cur.left.assign(d, std::vector<Vec>(m));
        cur.deriv.assign(d, {});

        // joint derivative of v_j · b' in ⊕_i B_{n-1}, block i at offset i*m:
        // ∂_i(v_j y) = v_j ∂_i(y) + δ_ij g_i(y)
        auto candidate = [&](std::uint32_t j, std::uint32_t b, SparseAccumulator<Field>& acc) {
            for (std::uint32_t i = 0; i < d; ++i) {
                if (n >= 2) {
                    const Vec& dy = prev.deriv[i][b];
                    for (std::size_t k = 0; k < dy.size(); ++k) {
                        const Vec& col = prev.left[j][dy.idx[k]];
                        for (std::size_t t = 0; t < col.size(); ++t)
                            acc.add(static_cast<std::uint32_t>(i * m + col.idx[t]), f.mul(col.val[t], dy.val[k]));
                    }
                }
                if (i == j) {
                    const Vec& gy = prev.twist[i][b];
                    for (std::size_t t = 0; t < gy.size(); ++t)
                        acc.add(static_cast<std::uint32_t>(i * m + gy.idx[t]), gy.val[t]);
                }
            }
            return acc.take();
        };

        IncrementalEchelon<Field> ech(f, d * m);
        const std::size_t threads = std::max<std::size_t>(1, opts_.threads);
        // candidates are assembled in parallel per generator j, inserted in order
        for (std::uint32_t j = 0; j < d; ++j) {
            if (opts_.deadline && std::chrono::steady_clock::now() > *opts_.deadline)
                throw ResourceCapExceeded("time budget exhausted in degree " + std::to_string(n));
            std::vector<Vec> vecs(m);
            auto work = [&](std::size_t lo, std::size_t hi) {
                SparseAccumulator<Field> acc(f, d * m);
                for (std::size_t b = lo; b < hi; ++b) vecs[b] = candidate(j, static_cast<std::uint32_t>(b), acc);
            };
            if (threads == 1 || m < 64) {
                work(0, m);
            } else {
                std::vector<std::thread> pool;
                const std::size_t chunk = (m + threads - 1) / threads;
                for (std::size_t lo = 0; lo < m; lo += chunk) pool.emplace_back(work, lo, std::min(m, lo + chunk));
                for (auto& t : pool) t.join();
            }
            for (std::uint32_t b = 0; b < m; ++b) {
                auto ins = ech.insert(vecs[b]);
                if (ins.independent) {
                    if (opts_.max_dim && cur.words.size() >= opts_.max_dim)
                        throw ResourceCapExceeded("dimension cap exceeded in degree " + std::to_string(n));
                    Word w{j};
                    w.insert(w.end(), prev.words[b].begin(), prev.words[b].end());
                    cur.words.push_back(std::move(w));
                    cur.source.emplace_back(j, b);
                    std::vector<Vec> blocks(d);
                    for (std::size_t k = 0; k < vecs[b].size(); ++k) {
                        const auto idx = vecs[b].idx[k];
                        blocks[idx / m].push(static_cast<std::uint32_t>(idx % m), vecs[b].val[k]);
                    }
                    for (std::uint32_t i = 0; i < d; ++i) cur.deriv[i].push_back(std::move(blocks[i]));
                }
                cur.left[j][b] = std::move(ins.coordinates);
            }
        }
        const std::size_t dim = cur.words.size();
        cur.twist.assign(d, std::vector<Vec>(dim));
        for (std::uint32_t i = 0; i < d; ++i)
            for (std::size_t t = 0; t < dim; ++t) {
                // g_i(v_j b') = q_ij v_{i⊳j} g_i(b')
                const auto [j, b] = cur.source[t];
                Vec v = combine(cur.left[c_.rack().op(i, j)], prev.twist[i][b], dim);
                for (auto& x : v.val) x = f.mul(x, c_.q(i, j));
                cur.twist[i][t] = std::move(v);
            }
        degrees_.push_back(std::move(cur));
    }

    Cocycle<Field> c_;
    EngineOptions opts_;
    std::vector<Degree> degrees_;
    bool finite_ = false;
};

template <typename Field>
GradedBasis<Field> graded_dims(const Cocycle<Field>& c, std::optional<std::size_t> limit = std::nullopt,
                               std::size_t threads = 1)
{
    EngineOptions o;
    if (limit) o.max_degree = *limit;
    o.threads = threads;
    return GradedBasis<Field>(c, o);
}

template <typename Field>
GradedBasis<Field> graded_dims(const Cocycle<Field>& c, EngineOptions o)
{
    return GradedBasis<Field>(c, o);
}

// ---------------------------------------------------------------------------
// Quantum symmetrizer
// ---------------------------------------------------------------------------

class SymmetrizerGuard : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Bubble-sort reduced word (positions of adjacent transpositions s_k = (k k+1)) for each
/// permutation of {0..n-1}, applied right to left.
inline std::vector<std::vector<std::uint32_t>> reduced_words(std::size_t n)
{
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<std::vector<std::uint32_t>> out;
    do {
        std::vector<std::uint32_t> p = perm, word;
        // bubble sort p to the identity, recording swaps
        for (std::size_t pass = 0; pass < n; ++pass)
            for (std::size_t k = 0; k + 1 < n; ++k)
                if (p[k] > p[k + 1]) {
                    std::swap(p[k], p[k + 1]);
                    word.push_back(static_cast<std::uint32_t>(k));
                }
        out.push_back(std::move(word));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Rank of S_n = Σ_{w ∈ S_n} (Matsumoto lift of w) on V^{⊗n}.
template <typename Field>
std::size_t symmetrizer_rank(const Cocycle<Field>& c, std::size_t n)
{
    if (n > 6) throw SymmetrizerGuard("symmetrizer_rank is limited to n <= 6");
    const auto& f = c.field();
    const std::size_t d = c.size();
    if (n == 0) return 1;
    std::size_t total = 1;
    for (std::size_t k = 0; k < n; ++k) total *= d;
    const auto words = reduced_words(n);
    auto index_of = [&](const Word& w) {
        std::size_t x = 0;
        for (auto a : w) x = x * d + a;
        return static_cast<std::uint32_t>(x);
    };
    IncrementalEchelon<Field> ech(f, total);
    SparseAccumulator<Field> acc(f, total);
    Word w(n);
    for (std::size_t x = 0; x < total; ++x) {
        std::size_t y = x;
        for (std::size_t k = n; k-- > 0;) {
            w[k] = static_cast<std::uint32_t>(y % d);
            y /= d;
        }
        for (const auto& red : words) {
            Word u = w;
            auto s = f.one();
            for (auto it = red.rbegin(); it != red.rend(); ++it) {
                const auto k = *it;
                s = f.mul(s, c.q(u[k], u[k + 1]));
                const auto a = u[k];
                u[k] = c.rack().op(a, u[k + 1]);
                u[k + 1] = a;
            }
            acc.add(index_of(u), s);
        }
        ech.insert(acc.take());
    }
    return ech.rank();
}

// ---------------------------------------------------------------------------
// Hilbert series
// ---------------------------------------------------------------------------

/// Coefficients of ∏ (n_i)_t.
inline std::vector<std::size_t> expand_blocks(const std::vector<std::size_t>& blocks)
{
    std::vector<std::size_t> poly{1};
    for (auto n : blocks) {
        if (n == 0) throw std::invalid_argument("block length must be positive");
        std::vector<std::size_t> next(poly.size() + n - 1, 0);
        for (std::size_t i = 0; i < poly.size(); ++i)
            for (std::size_t k = 0; k < n; ++k) next[i + k] += poly[i];
        poly = std::move(next);
    }
    return poly;
}

/// Writes h as a product of (n)_t with n ≥ 2, if possible; blocks sorted ascending.
/// Depth-first over nondecreasing block lengths, so the first factorization found is
/// the lexicographically least.
inline std::optional<std::vector<std::size_t>> hilbert_factor(const std::vector<std::size_t>& h)
{
    if (h.empty() || h[0] != 1) return std::nullopt;
    std::vector<long long> poly(h.begin(), h.end());
    while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
    std::vector<std::size_t> blocks;

    // exact division by 1 + t + ... + t^{n-1}; nullopt if not divisible
    auto divide = [](const std::vector<long long>& p, std::size_t n) -> std::optional<std::vector<long long>> {
        if (p.size() < n) return std::nullopt;
        std::vector<long long> rem = p, quo(p.size() - n + 1, 0);
        for (std::size_t i = quo.size(); i-- > 0;) {
            const long long c = rem[i + n - 1];
            quo[i] = c;
            for (std::size_t k = 0; k < n; ++k) rem[i + k] -= c;
        }
        for (auto r : rem)
            if (r != 0) return std::nullopt;
        for (auto q : quo)
            if (q < 0) return std::nullopt;
        return quo;
    };

    std::function<bool(const std::vector<long long>&, std::size_t)> search = [&](const std::vector<long long>& p,
                                                                                 std::size_t min_n) -> bool {
        if (p.size() == 1) return p[0] == 1;
        for (std::size_t n = min_n; n <= p.size(); ++n) {
            if (auto q = divide(p, n)) {
                blocks.push_back(n);
                if (search(*q, n)) return true;
                blocks.pop_back();
            }
        }
        return false;
    };
    if (!search(poly, 2)) return std::nullopt;
    return blocks;
}

/// Hilbert series with optional factorization; the factorization is re-expanded before it is reported.
struct HilbertSeries {
    std::vector<std::size_t> coefficients;
    std::optional<std::vector<std::size_t>> factorization;

    static HilbertSeries of(const std::vector<std::size_t>& h)
    {
        HilbertSeries s{h, hilbert_factor(h)};
        if (s.factorization && expand_blocks(*s.factorization) != h) s.factorization.reset();
        return s;
    }

    std::size_t total() const { return std::accumulate(coefficients.begin(), coefficients.end(), std::size_t{0}); }

    bool palindromic() const
    {
        for (std::size_t k = 0; k < coefficients.size(); ++k)
            if (coefficients[k] != coefficients[coefficients.size() - 1 - k]) return false;
        return true;
    }
};

inline std::string blocks_to_string(const std::vector<std::size_t>& blocks)
{
    std::map<std::size_t, std::size_t> count;
    for (auto b : blocks) ++count[b];
    std::string s;
    for (const auto& [n, e] : count) {
        s += "(" + std::to_string(n) + ")";
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Integrals
// ---------------------------------------------------------------------------

template <typename Field>
struct IntegralReport {
    bool top_degree = false;      // |m| is the top degree
    bool top_dim_one = false;
    bool nonzero = false;
    std::vector<std::uint32_t> chain;  // witness, as written
    typename Field::value_type chain_value{};

    bool is_integral() const { return top_degree && top_dim_one && nonzero; }
};

/// Uses the given chain when provided; otherwise searches a witness chain greedily.
template <typename Field>
IntegralReport<Field> verify_integral(const GradedBasis<Field>& b, const Word& m,
                                      std::optional<std::vector<std::uint32_t>> chain = std::nullopt)
{
    const auto& f = b.field();
    IntegralReport<Field> rep;
    rep.chain_value = f.zero();
    rep.top_degree = b.finite() && m.size() == b.top_degree();
    rep.top_dim_one = b.finite() && b.dim(b.top_degree()) == 1;
    const auto x = b.coordinates(m);
    rep.nonzero = !x.empty();
    if (chain) {
        rep.chain = *chain;
        rep.chain_value = b.evaluate_chain_in_basis(m, *chain);
    } else if (rep.nonzero) {
        if (auto w = b.witness_chain(m.size(), x)) {
            rep.chain = *w;
            rep.chain_value = b.evaluate_chain_in_basis(m, *w);
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Field change
// ---------------------------------------------------------------------------

struct TauDegree {
    std::size_t n = 0;
    std::size_t dim_q = 0;
    std::size_t dim_p = 0;
    std::size_t lattice_rank = 0;   // rank of the saturated Q-relations among candidate words
    bool lattice_contained = false; // every saturated relation vanishes mod p in B_n(τ_p V)
};

struct TauReport {
    std::uint32_t p = 0;
    std::vector<TauDegree> degrees;
    bool inequality = true;
    std::optional<std::size_t> first_strict_drop;
    bool top_survives = false;   // F_p-dimension at the Q-top degree is nonzero
    bool equality_if_top = true; // top survives ⇒ equal in all degrees
    bool lattice_ok = true;
    std::size_t total_q = 0, total_p = 0;

    bool ok() const { return inequality && equality_if_top && lattice_ok; }
};

class TheoremViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Compares B(V) over Q with B(τ_p V) over F_p degree by degree up to `limit`.
inline TauReport tau_p_compare(const Cocycle<RationalField>& cq, std::uint32_t p, std::size_t limit, std::size_t threads = 1)
{
    const PrimeField fp(p);
    const Cocycle<PrimeField> cp = cq.reduce_to(fp);
    const GradedBasis<RationalField> bq = graded_dims(cq, limit, threads);
    const GradedBasis<PrimeField> bp = graded_dims(cp, limit, threads);
    TauReport rep;
    rep.p = p;
    const std::size_t top = std::max(bq.dims().size(), bp.dims().size());
    for (std::size_t n = 0; n < top && n <= limit; ++n) {
        TauDegree t;
        t.n = n;
        t.dim_q = bq.dim(n);
        t.dim_p = bp.dim(n);
        rep.total_q += t.dim_q;
        rep.total_p += t.dim_p;
        if (t.dim_p > t.dim_q) rep.inequality = false;
        if (t.dim_p < t.dim_q && !rep.first_strict_drop) rep.first_strict_drop = n;
        t.lattice_contained = true;
        if (n >= 1 && n < bq.dims().size()) {
            // candidate words v_j · w, w running over the Q-basis of degree n-1
            const auto& prev = bq.degree(n - 1);
            const auto& cur = bq.degree(n);
            std::vector<Word> cands;
            for (std::uint32_t j = 0; j < cq.size(); ++j)
                for (const auto& w : prev.words) {
                    Word x{j};
                    x.insert(x.end(), w.begin(), w.end());
                    cands.push_back(std::move(x));
                }
            Matrix<RationalField> m(RationalField{}, cur.words.size(), cands.size());
            for (std::uint32_t j = 0; j < cq.size(); ++j)
                for (std::size_t b = 0; b < prev.words.size(); ++b) {
                    const auto& col = cur.left[j][b];
                    for (std::size_t k = 0; k < col.size(); ++k) m(col.idx[k], j * prev.words.size() + b) = col.val[k];
                }
            const auto rk = rank_and_kernel(m);
            const IntegerLattice lat = saturate_lattice(rk.kernel_basis, cands.size());
            t.lattice_rank = lat.rank();
            // reduce each relation mod p and evaluate it in B_n(τ_p V)
            std::vector<SparseVec<PrimeField>> coords;
            for (const auto& w : cands) coords.push_back(bp.coordinates(w));
            const std::size_t dim_p = bp.dim(n);
            for (const auto& rel : lat.basis) {
                SparseAccumulator<PrimeField> acc(fp, std::max<std::size_t>(dim_p, 1));
                for (std::size_t k = 0; k < rel.size(); ++k) {
                    if (rel[k] == 0) continue;
                    acc.add_scaled(coords[k], fp.from_rational(Rational(rel[k])));
                }
                if (!acc.take().empty()) {
                    t.lattice_contained = false;
                    break;
                }
            }
        }
        if (!t.lattice_contained) rep.lattice_ok = false;
        rep.degrees.push_back(t);
    }
    if (bq.finite()) {
        rep.top_survives = bp.dim(bq.top_degree()) > 0;
        if (rep.top_survives)
            for (const auto& t : rep.degrees) rep.equality_if_top = rep.equality_if_top && t.dim_p == t.dim_q;
    }
    if (!rep.inequality)
        throw TheoremViolation("dim over F_" + std::to_string(p) + " exceeds dim over Q in some degree");
    return rep;
}

// ---------------------------------------------------------------------------
// Characteristic-2 presentation for the tetrahedron rack
// ---------------------------------------------------------------------------

/// Normal words of the graded algebra F_2<a,b,c,d>/(relations) under deg-lex with
/// a<b<c<d, computed degree by degree: the ideal's degree-n part is spanned by u r w,
/// and its leading words are found by elimination with columns in decreasing order.
/// This is the truncated Gröbner basis computation done as linear algebra.
struct Char2Algebra {
    std::vector<std::vector<std::string>> relations;  // each relation: sum of words (letters a..d)
    std::size_t max_degree = 7;

    struct DegreeResult {
        std::vector<std::string> normal_words;  // ascending
        std::vector<std::string> leading_words; // of a basis of I_n, ascending
    };

    static Char2Algebra tetrahedron()
    {
        Char2Algebra a;
        a.relations = {{"aa"},
                       {"bb"},
                       {"cc"},
                       {"dd"},
                       {"ba", "db", "ad"},
                       {"ca", "bc", "ab"},
                       {"da", "cd", "ac"},
                       {"cb", "dc", "bd"},
                       {"cad", "bac", "dab"}};
        return a;
    }

    std::vector<DegreeResult> compute() const
    {
        const PrimeField f2(2);
        std::vector<DegreeResult> out;
        for (std::size_t n = 0; n <= max_degree; ++n) {
            std::size_t total = 1;
            for (std::size_t k = 0; k < n; ++k) total *= 4;
            // column index 0 is the largest word dd...d
            auto column = [&](const std::string& w) {
                std::size_t x = 0;
                for (char ch : w) x = x * 4 + static_cast<std::size_t>(ch - 'a');
                return static_cast<std::uint32_t>(total - 1 - x);
            };
            auto word_of = [&](std::size_t col) {
                std::size_t x = total - 1 - col;
                std::string w(n, 'a');
                for (std::size_t k = n; k-- > 0;) {
                    w[k] = static_cast<char>('a' + x % 4);
                    x /= 4;
                }
                return w;
            };
            IncrementalEchelon<PrimeField> ech(f2, total);
            std::vector<char> pivot(total, 0);
            for (const auto& rel : relations) {
                const std::size_t k = rel.front().size();
                if (k > n) continue;
                std::size_t outer = 1;
                for (std::size_t t = 0; t < n - k; ++t) outer *= 4;
                for (std::size_t left = 0; left <= n - k; ++left) {
                    const std::size_t right = n - k - left;
                    for (std::size_t x = 0; x < outer; ++x) {
                        std::string u = word_of_len(x / pow4(right), left), w = word_of_len(x % pow4(right), right);
                        SparseAccumulator<PrimeField> acc(f2, total);
                        for (const auto& m : rel) acc.add(column(u + m + w), 1);
                        auto v = acc.take();
                        if (!v.empty()) ech.insert(v);
                    }
                }
            }
            DegreeResult dr;
            // the pivots of the echelon form are exactly the leading words of I_n
            for (auto pcol : ech.pivot_columns()) pivot[pcol] = 1;
            for (std::size_t col = total; col-- > 0;) {
                if (pivot[col]) dr.leading_words.push_back(word_of(col));
                else dr.normal_words.push_back(word_of(col));
            }
            out.push_back(std::move(dr));
        }
        return out;
    }

private:
    static std::size_t pow4(std::size_t k)
    {
        std::size_t x = 1;
        for (std::size_t t = 0; t < k; ++t) x *= 4;
        return x;
    }
    static std::string word_of_len(std::size_t x, std::size_t len)
    {
        std::string w(len, 'a');
        for (std::size_t k = len; k-- > 0;) {
            w[k] = static_cast<char>('a' + x % 4);
            x /= 4;
        }
        return w;
    }
};

struct Char2Report {
    std::vector<std::size_t> rewriting_dims;
    std::vector<std::size_t> nichols_dims;
    bool dims_match = false;
    std::vector<std::vector<std::string>> normal_words;  // per degree
    std::vector<std::vector<std::string>> listed_words;  // the published listing, per degree
    std::vector<bool> listing_matches;                   // per degree
    bool relations_hold_in_nichols = false;
    std::string top_word;
};

/// The published basis listing, split by degree as printed.
inline std::vector<std::vector<std::string>> tchar2_published_listing()
{
    return {{""},
            {"a", "b", "c", "d"},
            {"ab", "ac", "ad", "ba", "bc", "bd", "cb", "cd"},
            {"aba", "abc", "abd", "acb", "acd", "bac", "bad", "bcb", "bcd", "cbd"},
            {"abac", "abad", "abcb", "abcd", "acbd", "bacb", "bacd", "bcbd"},
            {"abac", "baba", "cdab", "cbdb", "acbd"},
            {"abacbd"}};
}

/// Letters a, b, c, d as generators: a in V_{x_1}, b in V_{x_4}, c in V_{x_3}, d in V_{x_2}.
inline std::vector<std::uint32_t> tchar2_letter_map() { return {0, 3, 2, 1}; }

inline Char2Report char2_basis_check()
{
    Char2Report rep;
    const auto alg = Char2Algebra::tetrahedron().compute();
    for (const auto& d : alg) {
        rep.rewriting_dims.push_back(d.normal_words.size());
        rep.normal_words.push_back(d.normal_words);
    }
    while (!rep.rewriting_dims.empty() && rep.rewriting_dims.back() == 0) {
        rep.rewriting_dims.pop_back();
        rep.normal_words.pop_back();
    }
    const PrimeField f2(2);
    const Rack t = rack_T();
    const auto c = cocycle_from_character(t, CharacterSpec::parse("x1=-1,x4x2=1"), f2);
    const auto b = graded_dims(c);
    rep.nichols_dims = b.dims();
    rep.dims_match = rep.nichols_dims == rep.rewriting_dims;
    rep.listed_words = tchar2_published_listing();
    for (std::size_t n = 0; n < rep.listed_words.size(); ++n) {
        auto listed = rep.listed_words[n];
        std::sort(listed.begin(), listed.end());
        rep.listing_matches.push_back(n < rep.normal_words.size() && listed == rep.normal_words[n]);
    }
    if (!rep.normal_words.empty() && rep.normal_words.back().size() == 1) rep.top_word = rep.normal_words.back().front();
    // the defining relations vanish in B(V) over F_2
    const auto map = tchar2_letter_map();
    rep.relations_hold_in_nichols = true;
    for (const auto& rel : Char2Algebra::tetrahedron().relations) {
        SparseAccumulator<PrimeField> acc(f2, b.dim(rel.front().size()) + 1);
        for (const auto& m : rel) {
            Word w;
            for (char ch : m) w.push_back(map[static_cast<std::size_t>(ch - 'a')]);
            acc.add_scaled(b.coordinates(w), 1);
        }
        if (!acc.take().empty()) rep.relations_hold_in_nichols = false;
    }
    return rep;
}

}  // namespace nicholslab

#endif  // NICHOLSLAB_NICHOLS_HPP
