#ifndef NICHOLSLAB_ENUMERATE_HPP
#define NICHOLSLAB_ENUMERATE_HPP

#include "braidorbits.hpp"
#include "envgroup.hpp"
#include "rack.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nicholslab {

struct EnumerationLimits {
    std::size_t max_size_cap = 8;
    CosetLimits cosets{};
};

class EnumerationCapExceeded : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::vector<std::vector<std::size_t>> partitions(std::size_t n, std::size_t max_part)
{
    if (n == 0) return {{}};
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t p = std::min(n, max_part); p >= 1; --p)
        for (auto rest : partitions(n - p, p)) {
            rest.insert(rest.begin(), p);
            out.push_back(std::move(rest));
        }
    return out;
}

inline std::vector<std::size_t> sorted_cycle_type(const std::vector<std::uint32_t>& p)
{
    std::vector<std::size_t> ct;
    std::vector<char> seen(p.size(), 0);
    for (std::size_t s = 0; s < p.size(); ++s) {
        if (seen[s]) continue;
        std::size_t len = 0;
        for (std::size_t x = s; !seen[x]; x = p[x]) {
            seen[x] = 1;
            ++len;
        }
        ct.push_back(len);
    }
    std::sort(ct.rbegin(), ct.rend());
    return ct;
}

// Backtracking over rows of an indecomposable quandle of size d whose φ_0 is fixed.
// All φ_i are conjugate in such a quandle, so every row shares φ_0's cycle type, and
// φ_{φ_0^k(j)} = φ_0^k φ_j φ_0^{-k} fixes each φ_0-orbit from one representative row.
class QuandleSearch {
public:
    using Row = std::vector<std::uint32_t>;

    QuandleSearch(std::size_t d, Row phi0) : d_(d), phi0_(std::move(phi0)), rows_(d), known_(d, 0)
    {
        rows_[0] = phi0_;
        known_[0] = 1;
        std::vector<char> seen(d, 0);
        seen[0] = 1;
        for (std::uint32_t s = 1; s < d; ++s) {
            if (seen[s]) continue;
            std::vector<std::uint32_t> orbit;
            for (std::uint32_t x = s; !seen[x]; x = phi0_[x]) {
                seen[x] = 1;
                orbit.push_back(x);
            }
            orbits_.push_back(std::move(orbit));
        }
        const auto type = sorted_cycle_type(phi0_);
        Row p(d);
        std::iota(p.begin(), p.end(), 0u);
        candidates_.assign(d, {});
        do {
            if (sorted_cycle_type(p) != type) continue;
            for (std::uint32_t j = 1; j < d; ++j)
                if (p[j] == j) candidates_[j].push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    }

    template <typename Emit>
    void run(Emit&& emit)
    {
        step(0, emit);
    }

private:
    template <typename Emit>
    void step(std::size_t k, Emit& emit)
    {
        if (k == orbits_.size()) {
            emit(rows_);
            return;
        }
        const auto& orbit = orbits_[k];
        const std::uint32_t j = orbit[0];
        const std::size_t len = orbit.size();
        for (const Row& psi : candidates_[j]) {
            // conjugating by φ_0 once around the orbit must return ψ
            Row cur = psi;
            bool ok = true;
            for (std::size_t t = 0; t < len && ok; ++t) {
                const std::uint32_t at = orbit[t];
                if (t > 0) cur = conj_phi0(cur);
                if (cur[at] != at) ok = false;
                rows_[at] = cur;
            }
            if (ok && conj_phi0(cur) != psi) ok = false;
            if (!ok) continue;
            for (auto at : orbit) known_[at] = 1;
            if (distributive_so_far()) step(k + 1, emit);
            for (auto at : orbit) known_[at] = 0;
        }
    }

    // φ_0 ψ φ_0^{-1}
    Row conj_phi0(const Row& psi) const
    {
        Row out(d_);
        for (std::uint32_t x = 0; x < d_; ++x) out[phi0_[x]] = phi0_[psi[x]];
        return out;
    }

    bool distributive_so_far() const
    {
        for (std::uint32_t i = 0; i < d_; ++i) {
            if (!known_[i]) continue;
            for (std::uint32_t j = 0; j < d_; ++j) {
                if (!known_[j]) continue;
                const auto ij = rows_[i][j];
                if (!known_[ij]) continue;
                for (std::uint32_t k = 0; k < d_; ++k)
                    if (rows_[i][rows_[j][k]] != rows_[ij][rows_[i][k]]) return false;
            }
        }
        return true;
    }

    std::size_t d_;
    Row phi0_;
    std::vector<Row> rows_;
    std::vector<char> known_;
    std::vector<std::vector<std::uint32_t>> orbits_;
    std::vector<std::vector<Row>> candidates_;
};

}  // namespace detail

/// Indecomposable injective quandles with at most max_size elements, one per isomorphism
/// class, ordered by size and then by canonical table.
inline std::vector<Rack> enumerate_quandles(std::size_t max_size, EnumerationLimits limits = {})
{
    if (max_size > limits.max_size_cap)
        throw EnumerationCapExceeded("enumerate_quandles: size " + std::to_string(max_size) + " exceeds the cap " +
                                     std::to_string(limits.max_size_cap));
    std::vector<Rack> out;
    if (max_size >= 1) out.push_back(trivial_rack(1));
    for (std::size_t d = 2; d <= max_size; ++d) {
        std::map<Rack::Table, Rack> found;
        for (const auto& part : detail::partitions(d - 1, d - 1)) {
            if (part.front() == 1) continue;  // φ_0 = id forces the trivial quandle
            // canonical φ_0: fixes 0, consecutive cycles on 1..d-1
            detail::QuandleSearch::Row phi0(d);
            phi0[0] = 0;
            std::uint32_t at = 1;
            for (auto len : part) {
                for (std::uint32_t t = 0; t < len; ++t)
                    phi0[at + t] = at + (t + 1) % static_cast<std::uint32_t>(len);
                at += static_cast<std::uint32_t>(len);
            }
            detail::QuandleSearch search(d, phi0);
            search.run([&](const std::vector<detail::QuandleSearch::Row>& rows) {
                Rack r = Rack::from_zero_based(rows);
                if (!is_indecomposable(r)) return;
                auto key = canonical_table(r);
                if (found.count(key)) return;
                found.emplace(key, Rack::from_zero_based(key));
            });
        }
        for (auto& [key, r] : found)
            if (injectivity(r, limits.cosets)) out.push_back(r);
    }
    return out;
}

struct SearchEntry {
    Rack rack;
    OrbitProfile profile;
    std::optional<std::string> match;
};

/// Runs the bounded classification search: enumerated quandles of size ≥ 2 whose orbit
/// profile satisfies S ≤ 1, each matched against the built-in racks.
struct SearchResult {
    std::size_t max_size = 0;
    std::size_t enumerated = 0;
    std::vector<SearchEntry> satisfying;
    std::vector<SearchEntry> failing;

    std::vector<std::string> matched_names() const
    {
        std::vector<std::string> out;
        for (const auto& e : satisfying)
            if (e.match) out.push_back(*e.match);
        return out;
    }
    bool has_counterexample() const
    {
        for (const auto& e : satisfying)
            if (!e.match) return true;
        return false;
    }
};

inline SearchResult classification_search(std::size_t max_size, EnumerationLimits limits = {})
{
    SearchResult res;
    res.max_size = max_size;
    for (auto& r : enumerate_quandles(max_size, limits)) {
        ++res.enumerated;
        if (r.size() < 2) continue;
        auto c = classify(r);
        SearchEntry e{r, c.profile, c.match};
        (c.profile.condition_holds ? res.satisfying : res.failing).push_back(std::move(e));
    }
    return res;
}

}  // namespace nicholslab

#endif  // NICHOLSLAB_ENUMERATE_HPP
