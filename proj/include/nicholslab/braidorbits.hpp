#ifndef NICHOLSLAB_BRAIDORBITS_HPP
#define NICHOLSLAB_BRAIDORBITS_HPP

#include "rack.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nicholslab {

using Pair = std::pair<std::uint32_t, std::uint32_t>;

/// c(i,j) = (i ⊳ j, i)
inline Pair braid(const Rack& r, Pair p) { return {r.op(p.first, p.second), p.first}; }

/// An orbit of c on X×X, stored as the cycle starting at its least pair.
struct BraidOrbit {
    std::vector<Pair> cycle;
    std::size_t size() const { return cycle.size(); }
};

inline std::vector<BraidOrbit> braid_orbits(const Rack& r)
{
    const std::size_t d = r.size();
    std::vector<char> seen(d * d, 0);
    std::vector<BraidOrbit> out;
    for (std::uint32_t i = 0; i < d; ++i)
        for (std::uint32_t j = 0; j < d; ++j) {
            if (seen[i * d + j]) continue;
            BraidOrbit o;
            Pair p{i, j};
            do {
                seen[p.first * d + p.second] = 1;
                o.cycle.push_back(p);
                p = braid(r, p);
            } while (p != Pair{i, j});
            out.push_back(std::move(o));
        }
    return out;
}

/// Length of the c-cycle through (i, j).
inline std::size_t orbit_size(const Rack& r, std::uint32_t i, std::uint32_t j)
{
    std::size_t n = 0;
    Pair p{i, j};
    do {
        p = braid(r, p);
        ++n;
    } while (p != Pair{i, j});
    return n;
}

/// x ▶_n y = x ⊳ (y ⊳ (x ⊳ ...)) with n factors.
inline std::uint32_t iterate_triangle(const Rack& r, std::uint32_t x, std::uint32_t y, std::size_t n)
{
    if (n == 0) throw std::invalid_argument("iterate_triangle needs n >= 1");
    std::uint32_t acc = (n % 2 == 1) ? x : y;
    for (std::size_t k = n - 1; k >= 1; --k) acc = r.op((k % 2 == 1) ? x : y, acc);
    return acc;
}

struct OrbitProfile {
    std::size_t d = 0;
    std::map<std::size_t, std::size_t> k;  // n >= 2
    std::map<std::size_t, std::size_t> l;  // n >= 2
    mpq_class S;
    bool condition_holds = false;
    bool advisory = false;  // input decomposable: k_n read off element 1 only

    std::size_t k_at(std::size_t n) const
    {
        auto it = k.find(n);
        return it == k.end() ? 0 : it->second;
    }
    std::size_t l_at(std::size_t n) const
    {
        auto it = l.find(n);
        return it == l.end() ? 0 : it->second;
    }
};

inline OrbitProfile profile(const Rack& r)
{
    OrbitProfile p;
    p.d = r.size();
    p.advisory = !is_indecomposable(r);
    for (std::uint32_t j = 1; j < r.size(); ++j) ++p.k[orbit_size(r, 0, j)];
    for (const auto& o : braid_orbits(r))
        if (o.size() >= 2) ++p.l[o.size()];
    p.S = 0;
    for (const auto& [n, kn] : p.k)
        if (n >= 3) p.S += mpq_class(static_cast<long>((n - 2) * kn), static_cast<long>(2 * n));
    p.S.canonicalize();
    p.condition_holds = p.S <= 1;
    return p;
}

inline std::string rational_string(const mpq_class& q) { return q.get_str(); }

struct ClassifyResult {
    OrbitProfile profile;
    std::optional<std::string> match;  // built-in name when the condition holds
    bool counterexample = false;       // condition holds but no built-in matches
};

/// Matches an indecomposable quandle satisfying S ≤ 1 against the built-in list.
/// Injectivity is the caller's responsibility (see envgroup).
inline ClassifyResult classify(const Rack& r)
{
    const auto props = properties(r);
    if (!props.quandle) throw std::invalid_argument("classify: input is not a quandle");
    if (!props.indecomposable) throw std::invalid_argument("classify: input is decomposable");
    ClassifyResult res;
    res.profile = profile(r);
    if (!res.profile.condition_holds) return res;
    for (const auto& name : builtin_rack_names()) {
        Rack b = builtin_rack(name);
        if (b.size() == r.size() && isomorphism(r, b)) {
            res.match = name;
            return res;
        }
    }
    res.counterexample = r.size() > 1;
    return res;
}

}  // namespace nicholslab

#endif  // NICHOLSLAB_BRAIDORBITS_HPP
