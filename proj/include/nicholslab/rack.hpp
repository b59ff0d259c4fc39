#ifndef NICHOLSLAB_RACK_HPP
#define NICHOLSLAB_RACK_HPP

#include "permgroup.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

namespace nicholslab {

/// Raised when a table violates a rack axiom; the message names the axiom and a witness (1-based).
class RackValidationError : public std::invalid_argument {
public:
    RackValidationError(std::string axiom, std::string witness)
        : std::invalid_argument(axiom + " violated: " + witness), axiom_(std::move(axiom))
    {
    }
    const std::string& axiom() const { return axiom_; }

private:
    std::string axiom_;
};

/// A finite rack on {0..d-1}. All public construction and printing is 1-based.
class Rack {
public:
    using Table = std::vector<std::vector<std::uint32_t>>;

    /// Validates (R1) and (R2). `one_based[i][j]` is (i+1) ⊳ (j+1).
    static Rack from_table(const Table& one_based)
    {
        const std::size_t d = one_based.size();
        if (d == 0) throw std::invalid_argument("a rack must be non-empty");
        Table t(d, std::vector<std::uint32_t>(d));
        for (std::size_t i = 0; i < d; ++i) {
            if (one_based[i].size() != d) throw std::invalid_argument("rack table must be square");
            for (std::size_t j = 0; j < d; ++j) {
                const auto v = one_based[i][j];
                if (v < 1 || v > d)
                    throw std::invalid_argument("table entry out of range 1.." + std::to_string(d));
                t[i][j] = v - 1;
            }
        }
        return from_zero_based(std::move(t));
    }

    static Rack from_zero_based(Table t)
    {
        Rack r(std::move(t));
        r.validate();
        return r;
    }

    /// Rack given by its left translations φ_i in 1-based cycle notation.
    static Rack from_phi_cycles(const std::vector<std::vector<std::vector<std::uint32_t>>>& phis)
    {
        const std::size_t d = phis.size();
        Table t(d, std::vector<std::uint32_t>(d));
        for (std::size_t i = 0; i < d; ++i) {
            Perm p = Perm::from_cycles(d, phis[i]);
            for (std::size_t j = 0; j < d; ++j) t[i][j] = p(static_cast<std::uint32_t>(j));
        }
        return from_zero_based(std::move(t));
    }

    std::size_t size() const { return table_.size(); }
    std::uint32_t op(std::uint32_t i, std::uint32_t j) const { return table_[i][j]; }
    const Table& table() const { return table_; }

    Table one_based_table() const
    {
        Table t = table_;
        for (auto& row : t)
            for (auto& v : row) ++v;
        return t;
    }

    Perm phi(std::uint32_t i) const { return Perm(table_[i]); }
    std::vector<Perm> phis() const
    {
        std::vector<Perm> out;
        for (std::uint32_t i = 0; i < size(); ++i) out.push_back(phi(i));
        return out;
    }

    bool operator==(const Rack& o) const { return table_ == o.table_; }

private:
    explicit Rack(Table t) : table_(std::move(t)) {}

    void validate() const
    {
        const std::size_t d = size();
        for (std::size_t i = 0; i < d; ++i) {
            if (table_[i].size() != d) throw std::invalid_argument("rack table must be square");
            std::vector<char> seen(d, 0);
            for (std::size_t j = 0; j < d; ++j) {
                if (table_[i][j] >= d) throw std::invalid_argument("table entry out of range");
                if (seen[table_[i][j]])
                    throw RackValidationError("R1", "row " + std::to_string(i + 1) + " repeats value " +
                                                        std::to_string(table_[i][j] + 1));
                seen[table_[i][j]] = 1;
            }
        }
        for (std::uint32_t i = 0; i < d; ++i)
            for (std::uint32_t j = 0; j < d; ++j)
                for (std::uint32_t k = 0; k < d; ++k)
                    if (op(i, op(j, k)) != op(op(i, j), op(i, k)))
                        throw RackValidationError("R2", "(i,j,k) = (" + std::to_string(i + 1) + "," +
                                                            std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
    }

    Table table_;
};

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

/// i ⊳ j = 2i - j mod n on labels 1..n (label n stands for the residue 0).
inline Rack dihedral_rack(std::uint32_t n)
{
    if (n < 1) throw std::invalid_argument("dihedral rack needs n >= 1");
    Rack::Table t(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) t[i][j] = static_cast<std::uint32_t>((2 * i + n - j % n) % n);
    return Rack::from_zero_based(std::move(t));
}

inline Rack trivial_rack(std::uint32_t n)
{
    Rack::Table t(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) t[i][j] = j;
    return Rack::from_zero_based(std::move(t));
}

/// Field element carried by label `label` (0-based) of Aff(q, α): label i is the residue i.
inline std::uint32_t affine_element(std::uint32_t label) { return label; }

/// Affine (Alexander) rack over the prime field F_q: x ⊳ y = (1-α)x + αy.
/// Only prime q is supported.
inline Rack affine_rack(std::uint32_t q, std::uint32_t alpha)
{
    if (!is_prime(q)) throw std::invalid_argument("affine rack: q must be prime (prime powers unsupported), got " + std::to_string(q));
    alpha %= q;
    if (alpha == 0 || alpha == 1)
        throw std::invalid_argument("affine rack: alpha must not be 0 or 1 mod q");
    Rack::Table t(q, std::vector<std::uint32_t>(q));
    for (std::uint32_t x = 0; x < q; ++x)
        for (std::uint32_t y = 0; y < q; ++y) {
            const std::uint64_t v = (static_cast<std::uint64_t>(1 + q - alpha) * x + static_cast<std::uint64_t>(alpha) * y) % q;
            t[affine_element(x)][affine_element(y)] = affine_element(static_cast<std::uint32_t>(v));
        }
    return Rack::from_zero_based(std::move(t));
}

/// Conjugacy class of `x` in `g`, with x ⊳ y = x y x^{-1}. Label 1 is x itself,
/// the rest in the group's element order.
inline Rack conjugacy_rack(const FinGroup& g, const Perm& x)
{
    std::vector<Perm> cls = g.conjugacy_class(x);
    std::stable_partition(cls.begin(), cls.end(), [&](const Perm& p) { return p == x; });
    std::map<Perm, std::uint32_t> index;
    for (std::uint32_t i = 0; i < cls.size(); ++i) index[cls[i]] = i;
    Rack::Table t(cls.size(), std::vector<std::uint32_t>(cls.size()));
    for (std::uint32_t i = 0; i < cls.size(); ++i)
        for (std::uint32_t j = 0; j < cls.size(); ++j) t[i][j] = index.at(cls[i] * cls[j] * cls[i].inverse());
    return Rack::from_zero_based(std::move(t));
}

namespace detail {

// Labelled permutations composed left to right (product pq applies p first), the
// convention in which the built-in labels were published: i ⊳ j = π_i π_j π_i^{-1}.
inline Rack labelled_class_rack(std::size_t degree, const std::vector<std::vector<std::vector<std::uint32_t>>>& cycles)
{
    std::vector<Perm> pis;
    for (const auto& c : cycles) pis.push_back(Perm::from_cycles(degree, c));
    const std::size_t d = pis.size();
    Rack::Table t(d, std::vector<std::uint32_t>(d));
    for (std::uint32_t i = 0; i < d; ++i)
        for (std::uint32_t j = 0; j < d; ++j) {
            // left-to-right product π_i π_j π_i^{-1} equals π_i^{-1} ∘ π_j ∘ π_i
            Perm c = pis[i].inverse() * pis[j] * pis[i];
            auto it = std::find(pis.begin(), pis.end(), c);
            if (it == pis.end()) throw std::logic_error("labelled set not closed under conjugation");
            t[i][j] = static_cast<std::uint32_t>(it - pis.begin());
        }
    return Rack::from_zero_based(std::move(t));
}

}  // namespace detail

/// Vertices of the tetrahedron: the class of (2 3 4) in A_4.
inline Rack rack_T()
{
    return detail::labelled_class_rack(4, {{{2, 3, 4}}, {{1, 4, 3}}, {{1, 2, 4}}, {{1, 3, 2}}});
}

/// Transpositions in S_4.
inline Rack rack_A()
{
    return detail::labelled_class_rack(4, {{{3, 4}}, {{2, 3}}, {{2, 4}}, {{1, 2}}, {{1, 3}}, {{1, 4}}});
}

/// 4-cycles in S_4, given by its left translations.
inline Rack rack_B()
{
    return Rack::from_phi_cycles({{{2, 3, 4, 5}}, {{1, 5, 6, 3}}, {{1, 2, 6, 4}},
                                  {{1, 3, 6, 5}}, {{1, 4, 6, 2}}, {{2, 5, 4, 3}}});
}

/// Transpositions in S_5.
inline Rack rack_C()
{
    return detail::labelled_class_rack(5, {{{1, 2}}, {{2, 3}}, {{1, 3}}, {{2, 4}}, {{1, 4}},
                                           {{2, 5}}, {{1, 5}}, {{3, 4}}, {{3, 5}}, {{4, 5}}});
}

inline const std::vector<std::string>& builtin_rack_names()
{
    static const std::vector<std::string> names{"D3", "T", "Aff(5,2)", "Aff(5,3)", "A",
                                                "B",  "Aff(7,3)", "Aff(7,5)", "C"};
    return names;
}

/// Resolves "D3", "T", "A", "B", "C", "Aff(q,a)", "D<n>" and "trivial(n)".
inline Rack builtin_rack(const std::string& name)
{
    if (name == "T") return rack_T();
    if (name == "A") return rack_A();
    if (name == "B") return rack_B();
    if (name == "C") return rack_C();
    std::smatch m;
    static const std::regex aff(R"(Aff\((\d+),(\d+)\))"), dih(R"(D(\d+))"), triv(R"(trivial\((\d+)\))");
    if (std::regex_match(name, m, aff))
        return affine_rack(static_cast<std::uint32_t>(std::stoul(m[1])), static_cast<std::uint32_t>(std::stoul(m[2])));
    if (std::regex_match(name, m, dih)) return dihedral_rack(static_cast<std::uint32_t>(std::stoul(m[1])));
    if (std::regex_match(name, m, triv)) return trivial_rack(static_cast<std::uint32_t>(std::stoul(m[1])));
    throw std::invalid_argument("unknown rack name '" + name + "'");
}

// ---------------------------------------------------------------------------
// Properties
// ---------------------------------------------------------------------------

struct RackProperties {
    bool quandle = false;
    bool crossed_set = false;
    bool involutive = false;
    bool faithful = false;
    bool indecomposable = false;
    std::optional<bool> injective;  // filled in by the enveloping-group module
    std::size_t fixed_point_count_of_phi1 = 0;
};

inline FinGroup inner_group(const Rack& r, GroupLimits limits = {})
{
    return FinGroup::closure(r.size(), r.phis(), limits);
}

/// Orbits of the inner group on X, each sorted; ordered by least element.
inline std::vector<std::vector<std::uint32_t>> inner_orbits(const Rack& r)
{
    const std::size_t d = r.size();
    std::vector<int> comp(d, -1);
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t s = 0; s < d; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::uint32_t> orbit{s}, stack{s};
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            for (std::uint32_t i = 0; i < d; ++i) {
                const auto y = r.op(i, x);
                if (comp[y] < 0) {
                    comp[y] = static_cast<int>(out.size());
                    orbit.push_back(y);
                    stack.push_back(y);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

inline bool is_indecomposable(const Rack& r) { return inner_orbits(r).size() == 1; }

/// True iff X ⊳ Y ⊆ Y for the (0-based) subset Y.
inline bool is_invariant_subset(const Rack& r, const std::vector<std::uint32_t>& subset)
{
    std::vector<char> in(r.size(), 0);
    for (auto y : subset) in[y] = 1;
    for (std::uint32_t x = 0; x < r.size(); ++x)
        for (auto y : subset)
            if (!in[r.op(x, y)]) return false;
    return true;
}

inline RackProperties properties(const Rack& r)
{
    RackProperties p;
    const std::uint32_t d = static_cast<std::uint32_t>(r.size());
    p.quandle = true;
    for (std::uint32_t i = 0; i < d; ++i) p.quandle = p.quandle && r.op(i, i) == i;
    p.crossed_set = p.quandle;
    for (std::uint32_t i = 0; i < d && p.crossed_set; ++i)
        for (std::uint32_t j = 0; j < d; ++j)
            if ((r.op(i, j) == j) != (r.op(j, i) == i)) {
                p.crossed_set = false;
                break;
            }
    p.involutive = true;
    for (std::uint32_t i = 0; i < d; ++i)
        for (std::uint32_t j = 0; j < d; ++j) p.involutive = p.involutive && r.op(i, r.op(i, j)) == j;
    p.faithful = true;
    for (std::uint32_t i = 0; i < d; ++i)
        for (std::uint32_t j = i + 1; j < d; ++j) p.faithful = p.faithful && r.table()[i] != r.table()[j];
    p.indecomposable = is_indecomposable(r);
    p.fixed_point_count_of_phi1 = r.phi(0).fixed_points();
    return p;
}

// ---------------------------------------------------------------------------
// Isomorphism and canonical form
// ---------------------------------------------------------------------------

/// A bijection f (0-based images) with f(i ⊳ j) = f(i) ⊳ f(j), if one exists.
inline std::optional<std::vector<std::uint32_t>> isomorphism(const Rack& a, const Rack& b)
{
    const std::size_t d = a.size();
    if (b.size() != d) return std::nullopt;
    std::vector<std::vector<std::size_t>> ta(d), tb(d);
    for (std::uint32_t i = 0; i < d; ++i) {
        ta[i] = a.phi(i).cycle_type();
        tb[i] = b.phi(i).cycle_type();
    }
    {
        auto sa = ta, sb = tb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    const std::uint32_t none = UINT32_MAX;
    std::vector<std::uint32_t> f(d, none), finv(d, none);

    // Extends f to the closure of its domain; false on conflict. Records assignments for undo.
    std::function<bool(std::vector<std::uint32_t>&)> propagate = [&](std::vector<std::uint32_t>& trail) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::uint32_t i = 0; i < d; ++i) {
                if (f[i] == none) continue;
                for (std::uint32_t j = 0; j < d; ++j) {
                    if (f[j] == none) continue;
                    const auto k = a.op(i, j);
                    const auto fk = b.op(f[i], f[j]);
                    if (f[k] == none) {
                        if (finv[fk] != none || ta[k] != tb[fk]) return false;
                        f[k] = fk;
                        finv[fk] = k;
                        trail.push_back(k);
                        changed = true;
                    } else if (f[k] != fk) {
                        return false;
                    }
                }
            }
        }
        return true;
    };

    std::function<bool()> search = [&]() -> bool {
        std::uint32_t next = none;
        for (std::uint32_t i = 0; i < d; ++i)
            if (f[i] == none) {
                next = i;
                break;
            }
        if (next == none) return true;
        for (std::uint32_t y = 0; y < d; ++y) {
            if (finv[y] != none || ta[next] != tb[y]) continue;
            std::vector<std::uint32_t> trail{next};
            f[next] = y;
            finv[y] = next;
            if (propagate(trail) && search()) return true;
            for (auto k : trail) {
                finv[f[k]] = none;
                f[k] = none;
            }
        }
        return false;
    };
    if (search()) return f;
    return std::nullopt;
}

/// Lexicographically least relabelled table. For indecomposable racks relabelings
/// fixing element 0 suffice, since the inner group acts transitively by automorphisms.
inline Rack::Table canonical_table(const Rack& r)
{
    const std::uint32_t d = static_cast<std::uint32_t>(r.size());
    const bool transitive = is_indecomposable(r);
    std::vector<std::uint32_t> inv(d);  // inv[new] = old
    std::iota(inv.begin(), inv.end(), 0u);
    Rack::Table best = r.table();
    bool have_best = false;
    std::vector<std::uint32_t> sigma(d);
    auto consider = [&]() {
        for (std::uint32_t n = 0; n < d; ++n) sigma[inv[n]] = n;
        // compare row-major against best, aborting on the first difference
        int cmp = have_best ? 0 : -1;
        if (have_best) {
            for (std::uint32_t a = 0; a < d && cmp == 0; ++a)
                for (std::uint32_t b = 0; b < d; ++b) {
                    const auto v = sigma[r.op(inv[a], inv[b])];
                    if (v != best[a][b]) {
                        cmp = v < best[a][b] ? -1 : 1;
                        break;
                    }
                }
        }
        if (cmp < 0) {
            for (std::uint32_t a = 0; a < d; ++a)
                for (std::uint32_t b = 0; b < d; ++b) best[a][b] = sigma[r.op(inv[a], inv[b])];
            have_best = true;
        }
    };
    if (transitive) {
        do consider();
        while (std::next_permutation(inv.begin() + 1, inv.end()));
    } else {
        do consider();
        while (std::next_permutation(inv.begin(), inv.end()));
    }
    return best;
}

}  // namespace nicholslab

#endif  // NICHOLSLAB_RACK_HPP
