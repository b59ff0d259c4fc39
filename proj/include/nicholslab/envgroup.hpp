#ifndef NICHOLSLAB_ENVGROUP_HPP
#define NICHOLSLAB_ENVGROUP_HPP

#include "braidorbits.hpp"
#include "permgroup.hpp"
#include "rack.hpp"

#include <cctype>
#include <cstdlib>
#include <functional>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nicholslab {

/// A word in the generators x_i^{±1}; generator indices are 0-based.
struct GradedWord {
    std::vector<std::pair<std::uint32_t, int>> letters;

    long degree() const
    {
        long d = 0;
        for (const auto& l : letters) d += l.second;
        return d;
    }

    GradedWord operator*(const GradedWord& o) const
    {
        GradedWord w = *this;
        w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
        return w;
    }

    GradedWord inverse() const
    {
        GradedWord w;
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back({it->first, -it->second});
        return w;
    }

    GradedWord pow(long e) const
    {
        GradedWord base = e < 0 ? inverse() : *this, w;
        for (long i = 0; i < std::labs(e); ++i) w = w * base;
        return w;
    }

    static GradedWord gen(std::uint32_t i, int e = 1) { return GradedWord{{{i, e}}}; }

    /// Letter-exponent notation, e.g. "x1^2 x3^-1".
    std::string to_string() const
    {
        if (letters.empty()) return "1";
        std::string s;
        std::size_t i = 0;
        while (i < letters.size()) {
            std::size_t j = i;
            long e = 0;
            while (j < letters.size() && letters[j].first == letters[i].first &&
                   (letters[j].second > 0) == (letters[i].second > 0)) {
                e += letters[j].second;
                ++j;
            }
            if (!s.empty()) s += ' ';
            s += "x" + std::to_string(letters[i].first + 1);
            if (e != 1) s += "^" + std::to_string(e);
            i = j;
        }
        return s;
    }
};

/// Parses words such as "x4x2", "x1^4", "(x4x2)^2", "x8 x9^-1".
inline GradedWord parse_word(const std::string& text)
{
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto exponent = [&]() -> long {
        skip();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip();
            std::size_t used = 0;
            long e = std::stol(text.substr(pos), &used);
            pos += used;
            return e;
        }
        return 1;
    };
    std::function<GradedWord()> sequence = [&]() -> GradedWord {
        GradedWord w;
        for (;;) {
            skip();
            if (pos >= text.size() || text[pos] == ')') return w;
            if (text[pos] == '(') {
                ++pos;
                GradedWord inner = sequence();
                skip();
                if (pos >= text.size() || text[pos] != ')') throw std::invalid_argument("unbalanced parentheses in '" + text + "'");
                ++pos;
                w = w * inner.pow(exponent());
            } else if (text[pos] == 'x') {
                ++pos;
                std::size_t used = 0;
                unsigned long i = std::stoul(text.substr(pos), &used);
                if (i == 0) throw std::invalid_argument("generator indices are 1-based in '" + text + "'");
                pos += used;
                w = w * GradedWord::gen(static_cast<std::uint32_t>(i - 1)).pow(exponent());
            } else if (text[pos] == '1' && w.letters.empty()) {
                ++pos;
            } else {
                throw std::invalid_argument("cannot parse word '" + text + "'");
            }
        }
    };
    GradedWord w = sequence();
    if (pos != text.size()) throw std::invalid_argument("cannot parse word '" + text + "'");
    return w;
}

/// Prod(x, y; n) = x y x y ... with n factors.
inline GradedWord prod_word(std::uint32_t x, std::uint32_t y, std::size_t n)
{
    GradedWord w;
    for (std::size_t k = 0; k < n; ++k) w.letters.push_back({k % 2 == 0 ? x : y, 1});
    return w;
}

/// Finite presentation of a quotient of G_X: conjugation relators plus x_r^{m_r}
/// for one representative r of each inner orbit.
struct Presentation {
    std::size_t d = 0;
    std::vector<GradedWord> relators;
    std::vector<std::size_t> orbit_of;           // generator -> orbit index
    std::vector<std::uint32_t> orbit_rep;        // orbit index -> representative
    std::vector<std::size_t> power;              // orbit index -> m_r

    /// One relator per line.
    std::string dump() const
    {
        std::ostringstream os;
        for (const auto& r : relators) os << r.to_string() << '\n';
        return os.str();
    }
};

/// multiplier 1 gives Ḡ_X (x_r^n with n = order of φ_r), multiplier 2 gives Ĝ_X.
inline Presentation make_presentation(const Rack& r, std::size_t multiplier = 1)
{
    Presentation p;
    p.d = r.size();
    for (std::uint32_t i = 0; i < r.size(); ++i)
        for (std::uint32_t j = 0; j < r.size(); ++j)
            p.relators.push_back(GradedWord{{{i, 1}, {j, 1}, {i, -1}, {r.op(i, j), -1}}});
    const auto orbits = inner_orbits(r);
    p.orbit_of.assign(r.size(), 0);
    for (std::size_t o = 0; o < orbits.size(); ++o) {
        for (auto x : orbits[o]) p.orbit_of[x] = o;
        const std::uint32_t rep = orbits[o].front();
        p.orbit_rep.push_back(rep);
        p.power.push_back(r.phi(rep).order() * multiplier);
        p.relators.push_back(GradedWord::gen(rep).pow(static_cast<long>(p.power.back())));
    }
    return p;
}

class CosetEnumerationFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CosetLimits {
    std::size_t max_cosets = 100'000;
};

/// A finite quotient of G_X realized on the cosets of the trivial subgroup.
class QuotientGroup {
public:
    QuotientGroup(Presentation p, std::vector<Perm> images)
        : pres_(std::move(p)), images_(std::move(images)),
          group_(FinGroup::closure(images_.empty() ? 1 : images_.front().degree(), images_,
                                   GroupLimits{images_.empty() ? 1 : images_.front().degree()}))
    {
    }

    const Presentation& presentation() const { return pres_; }
    const FinGroup& group() const { return group_; }
    std::size_t order() const { return group_.order(); }
    const std::vector<Perm>& generator_images() const { return images_; }
    const Perm& image(std::uint32_t i) const { return images_.at(i); }

    Perm evaluate(const GradedWord& w) const
    {
        Perm p = group_.identity();
        for (const auto& [g, e] : w.letters) {
            const Perm& x = images_.at(g);
            const Perm xi = x.inverse();
            for (int k = 0; k < std::abs(e); ++k) p = p * (e > 0 ? x : xi);
        }
        return p;
    }

    /// Degree per inner orbit (the Z^orbits grading of G_X).
    std::vector<long> multidegree(const GradedWord& w) const
    {
        std::vector<long> deg(pres_.orbit_rep.size(), 0);
        for (const auto& [g, e] : w.letters) deg[pres_.orbit_of.at(g)] += e;
        return deg;
    }

    /// Equality in G_X: equal multidegree and equal image in the quotient.
    bool graded_equal(const GradedWord& a, const GradedWord& b) const
    {
        return multidegree(a) == multidegree(b) && evaluate(a) == evaluate(b);
    }

private:
    Presentation pres_;
    std::vector<Perm> images_;
    FinGroup group_;
};

namespace detail {

class CosetTable {
public:
    CosetTable(std::size_t ngens, std::size_t cap) : cols_(2 * ngens), cap_(cap)
    {
        new_coset();
    }

    static std::size_t col(std::uint32_t g, int sign) { return 2 * g + (sign > 0 ? 0 : 1); }
    static std::size_t inv(std::size_t c) { return c ^ 1u; }

    std::size_t size() const { return parent_.size(); }
    bool live(std::size_t c) const { return parent_[c] == c; }
    long entry(std::size_t c, std::size_t x) const { return table_[c * cols_ + x]; }

    void scan_and_fill(std::size_t alpha, const std::vector<std::size_t>& w)
    {
        if (w.empty()) return;
        std::size_t f = alpha, b = alpha;
        long i = 0, j = static_cast<long>(w.size()) - 1;
        for (;;) {
            while (i <= j && entry(f, w[i]) >= 0) f = static_cast<std::size_t>(entry(f, w[i++]));
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j >= i && entry(b, inv(w[j])) >= 0) b = static_cast<std::size_t>(entry(b, inv(w[j--])));
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (i == j) {
                set(f, w[i], b);
                return;
            }
            define(f, w[i]);
        }
    }

    void define(std::size_t c, std::size_t x) { set(c, x, new_coset()); }

    std::size_t find(std::size_t c)
    {
        while (parent_[c] != c) {
            parent_[c] = parent_[parent_[c]];
            c = parent_[c];
        }
        return c;
    }

    std::size_t cols() const { return cols_; }

private:
    std::size_t new_coset()
    {
        if (parent_.size() >= cap_)
            throw CosetEnumerationFailed("coset enumeration did not close within " + std::to_string(cap_) + " cosets");
        parent_.push_back(parent_.size());
        table_.resize(table_.size() + cols_, -1);
        return parent_.size() - 1;
    }

    void set(std::size_t c, std::size_t x, std::size_t d)
    {
        table_[c * cols_ + x] = static_cast<long>(d);
        table_[d * cols_ + inv(x)] = static_cast<long>(c);
    }

    void merge(std::size_t a, std::size_t b, std::vector<std::size_t>& queue)
    {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent_[b] = a;
        queue.push_back(b);
    }

    void coincidence(std::size_t a, std::size_t b)
    {
        std::vector<std::size_t> queue;
        merge(a, b, queue);
        for (std::size_t q = 0; q < queue.size(); ++q) {
            const std::size_t g = queue[q];
            for (std::size_t x = 0; x < cols_; ++x) {
                const long dl = entry(g, x);
                if (dl < 0) continue;
                const std::size_t dcos = static_cast<std::size_t>(dl);
                table_[dcos * cols_ + inv(x)] = -1;
                const std::size_t mu = find(g), nu = find(dcos);
                if (entry(mu, x) >= 0) {
                    merge(nu, static_cast<std::size_t>(entry(mu, x)), queue);
                } else if (entry(nu, inv(x)) >= 0) {
                    merge(mu, static_cast<std::size_t>(entry(nu, inv(x))), queue);
                } else {
                    set(mu, x, nu);
                }
            }
        }
    }

    std::size_t cols_, cap_;
    std::vector<std::size_t> parent_;
    std::vector<long> table_;
};

}  // namespace detail

/// HLT Todd–Coxeter enumeration of the cosets of the trivial subgroup.
inline QuotientGroup coset_enumerate(const Presentation& p, CosetLimits limits = {})
{
    detail::CosetTable t(p.d, limits.max_cosets);
    std::vector<std::vector<std::size_t>> rels;
    for (const auto& r : p.relators) {
        std::vector<std::size_t> w;
        for (const auto& [g, e] : r.letters)
            for (int k = 0; k < std::abs(e); ++k) w.push_back(detail::CosetTable::col(g, e));
        rels.push_back(std::move(w));
    }
    for (std::size_t alpha = 0; alpha < t.size(); ++alpha) {
        for (const auto& w : rels) {
            if (!t.live(alpha)) break;
            t.scan_and_fill(alpha, w);
        }
        for (std::size_t x = 0; x < t.cols() && t.live(alpha); ++x)
            if (t.entry(alpha, x) < 0) t.define(alpha, x);
    }
    std::vector<long> renumber(t.size(), -1);
    std::size_t n = 0;
    for (std::size_t c = 0; c < t.size(); ++c)
        if (t.live(c)) renumber[c] = static_cast<long>(n++);
    // x acts by c ↦ c·x^{-1}, so that the map to permutations is a homomorphism
    std::vector<Perm> images;
    for (std::uint32_t g = 0; g < p.d; ++g) {
        std::vector<std::uint32_t> img(n);
        for (std::size_t c = 0; c < t.size(); ++c) {
            if (!t.live(c)) continue;
            const long target = t.entry(c, detail::CosetTable::col(g, -1));
            img[static_cast<std::size_t>(renumber[c])] =
                static_cast<std::uint32_t>(renumber[t.find(static_cast<std::size_t>(target))]);
        }
        images.emplace_back(std::move(img));
    }
    QuotientGroup q(p, std::move(images));
    if (q.order() != n) throw std::logic_error("coset table does not describe a regular action");
    return q;
}

inline QuotientGroup bar_group(const Rack& r, CosetLimits limits = {})
{
    return coset_enumerate(make_presentation(r, 1), limits);
}

inline QuotientGroup hat_group(const Rack& r, CosetLimits limits = {})
{
    return coset_enumerate(make_presentation(r, 2), limits);
}

/// Whether i ↦ x_i is injective: images distinct within each inner orbit (other
/// pairs already differ in multidegree).
inline bool injectivity(const Rack& r, CosetLimits limits = {})
{
    const QuotientGroup g = bar_group(r, limits);
    for (std::uint32_t i = 0; i < r.size(); ++i)
        for (std::uint32_t j = i + 1; j < r.size(); ++j)
            if (g.presentation().orbit_of[i] == g.presentation().orbit_of[j] && g.image(i) == g.image(j)) return false;
    return true;
}

inline RackProperties full_properties(const Rack& r, CosetLimits limits = {})
{
    RackProperties p = properties(r);
    p.injective = injectivity(r, limits);
    return p;
}

struct RelationCheck {
    std::string lhs, rhs;
    bool holds = false;
};

struct CentralizerReport {
    std::size_t group_order = 0;
    std::size_t centralizer_order = 0;
    std::size_t generated_order = 0;
    bool in_centralizer = false;
    bool generates = false;
    bool abelian = false;
    bool cyclic = false;
    std::vector<RelationCheck> relations;
    std::vector<std::string> failures;

    bool certified() const { return failures.empty(); }
};

/// Checks that the claimed words generate C_Ḡ(π x_1) and that each relation holds in G_X.
inline CentralizerReport centralizer_report(const Rack& r, const std::vector<GradedWord>& claimed,
                                            const std::vector<std::pair<GradedWord, GradedWord>>& relations = {},
                                            CosetLimits limits = {})
{
    CentralizerReport rep;
    const QuotientGroup q = bar_group(r, limits);
    rep.group_order = q.order();
    const FinGroup cent = q.group().centralizer(q.image(0));
    rep.centralizer_order = cent.order();
    std::vector<Perm> imgs;
    rep.in_centralizer = true;
    for (const auto& w : claimed) {
        imgs.push_back(q.evaluate(w));
        if (!cent.contains(imgs.back())) {
            rep.in_centralizer = false;
            rep.failures.push_back("image of " + w.to_string() + " does not centralize x1");
        }
    }
    if (rep.in_centralizer) {
        const FinGroup h = cent.generated_by(imgs);
        rep.generated_order = h.order();
        rep.generates = h.order() == cent.order();
        if (!rep.generates)
            rep.failures.push_back("claimed generators span order " + std::to_string(h.order()) + " of " +
                                   std::to_string(cent.order()));
        rep.abelian = h.is_abelian();
        for (const auto& e : h.elements())
            if (e.order() == h.order()) rep.cyclic = true;
    }
    for (const auto& [a, b] : relations) {
        RelationCheck c{a.to_string(), b.to_string(), q.graded_equal(a, b)};
        if (!c.holds) rep.failures.push_back("relation " + c.lhs + " = " + c.rhs + " fails");
        rep.relations.push_back(std::move(c));
    }
    return rep;
}

}  // namespace nicholslab

#endif  // NICHOLSLAB_ENVGROUP_HPP
