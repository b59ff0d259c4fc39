#ifndef NICHOLSLAB_PERMGROUP_HPP
#define NICHOLSLAB_PERMGROUP_HPP

#include "exactnum.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nicholslab {

class GroupTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A permutation of {0..m-1}; printed 1-based in cycle notation.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<std::uint32_t> images) : img_(std::move(images))
    {
        std::vector<char> seen(img_.size(), 0);
        for (auto v : img_) {
            if (v >= img_.size() || seen[v]) throw std::invalid_argument("images do not form a bijection");
            seen[v] = 1;
        }
    }

    static Perm identity(std::size_t m)
    {
        std::vector<std::uint32_t> v(m);
        std::iota(v.begin(), v.end(), 0u);
        return Perm(std::move(v), Unchecked{});
    }

    /// 1-based disjoint cycles, e.g. {{2,3,4}} on degree 5.
    static Perm from_cycles(std::size_t m, const std::vector<std::vector<std::uint32_t>>& cycles)
    {
        std::vector<std::uint32_t> v(m);
        std::iota(v.begin(), v.end(), 0u);
        for (const auto& cyc : cycles)
            for (std::size_t k = 0; k < cyc.size(); ++k) v[cyc[k] - 1] = cyc[(k + 1) % cyc.size()] - 1;
        return Perm(std::move(v));
    }

    std::size_t degree() const { return img_.size(); }
    std::uint32_t operator()(std::uint32_t x) const { return img_[x]; }
    const std::vector<std::uint32_t>& images() const { return img_; }

    /// (a * b)(x) = a(b(x)).
    friend Perm operator*(const Perm& a, const Perm& b)
    {
        std::vector<std::uint32_t> v(b.img_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.img_[b.img_[i]];
        return Perm(std::move(v), Unchecked{});
    }

    Perm inverse() const
    {
        std::vector<std::uint32_t> v(img_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[img_[i]] = static_cast<std::uint32_t>(i);
        return Perm(std::move(v), Unchecked{});
    }

    bool is_identity() const
    {
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    std::size_t order() const
    {
        std::size_t o = 1;
        for (auto len : cycle_type()) o = std::lcm(o, len);
        return o;
    }

    std::size_t fixed_points() const
    {
        std::size_t n = 0;
        for (std::size_t i = 0; i < img_.size(); ++i) n += img_[i] == i;
        return n;
    }

    /// Sorted cycle lengths, fixed points included.
    std::vector<std::size_t> cycle_type() const
    {
        std::vector<std::size_t> out;
        std::vector<char> seen(img_.size(), 0);
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (seen[i]) continue;
            std::size_t len = 0;
            for (auto j = i; !seen[j]; j = img_[j]) {
                seen[j] = 1;
                ++len;
            }
            out.push_back(len);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::string to_string() const
    {
        std::ostringstream os;
        std::vector<char> seen(img_.size(), 0);
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (seen[i] || img_[i] == i) continue;
            os << '(';
            for (auto j = i; !seen[j]; j = img_[j]) {
                seen[j] = 1;
                os << (j == i ? "" : " ") << j + 1;
            }
            os << ')';
        }
        const std::string s = os.str();
        return s.empty() ? "()" : s;
    }

    auto operator<=>(const Perm&) const = default;
    bool operator==(const Perm&) const = default;

private:
    struct Unchecked {};
    Perm(std::vector<std::uint32_t> v, Unchecked) : img_(std::move(v)) {}
    std::vector<std::uint32_t> img_;
};

struct GroupLimits {
    std::size_t max_order = 1'000'000;
};

/// Relation lattice of an abelianization with respect to chosen generators, plus
/// the coordinate map from group elements to exponent vectors.
struct Abelianization {
    IntMatrix relations;                              // HNF rows; Z^k / rows ≅ G/[G,G]
    std::vector<std::vector<long>> coset_exponents;   // per coset of [G,G]
    std::vector<std::size_t> coset_of_element;        // indexed like FinGroup::elements()
};

/// A finite permutation group with all elements materialized, sorted lexicographically.
class FinGroup {
public:
    static FinGroup closure(std::size_t degree, const std::vector<Perm>& generators, GroupLimits limits = {})
    {
        for (const auto& g : generators)
            if (g.degree() != degree) throw std::invalid_argument("generators of different degrees");
        FinGroup grp;
        grp.degree_ = degree;
        grp.generators_ = generators;
        std::set<Perm> seen{Perm::identity(degree)};
        std::deque<Perm> frontier{Perm::identity(degree)};
        while (!frontier.empty()) {
            Perm cur = std::move(frontier.front());
            frontier.pop_front();
            for (const auto& g : generators) {
                Perm next = g * cur;
                if (seen.insert(next).second) {
                    if (seen.size() > limits.max_order)
                        throw GroupTooLarge("group too large: order exceeds cap " + std::to_string(limits.max_order));
                    frontier.push_back(std::move(next));
                }
            }
        }
        grp.elements_.assign(seen.begin(), seen.end());
        return grp;
    }

    /// Wraps an element list already known to be closed (e.g. from a coset table).
    static FinGroup from_closed_set(std::size_t degree, std::vector<Perm> generators, std::vector<Perm> elements)
    {
        FinGroup grp;
        grp.degree_ = degree;
        grp.generators_ = std::move(generators);
        std::sort(elements.begin(), elements.end());
        grp.elements_ = std::move(elements);
        return grp;
    }

    std::size_t degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Perm>& generators() const { return generators_; }
    const std::vector<Perm>& elements() const { return elements_; }
    Perm identity() const { return Perm::identity(degree_); }

    std::optional<std::size_t> index_of(const Perm& x) const
    {
        auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
        if (it == elements_.end() || *it != x) return std::nullopt;
        return static_cast<std::size_t>(it - elements_.begin());
    }
    bool contains(const Perm& x) const { return index_of(x).has_value(); }

    std::size_t index_checked(const Perm& x) const
    {
        auto i = index_of(x);
        if (!i) throw std::domain_error("permutation " + x.to_string() + " is not in the group");
        return *i;
    }

    /// Subgroup given by an element predicate; generators chosen greedily.
    template <typename Pred>
    FinGroup subgroup_where(Pred&& keep) const
    {
        std::vector<Perm> members;
        for (const auto& e : elements_)
            if (keep(e)) members.push_back(e);
        FinGroup sub = from_closed_set(degree_, {}, members);
        sub.generators_ = sub.greedy_generators();
        return sub;
    }

    FinGroup centralizer(const Perm& x) const
    {
        if (!contains(x)) throw std::domain_error("centralizer: element not in group");
        return subgroup_where([&](const Perm& h) { return h * x == x * h; });
    }

    std::vector<Perm> conjugacy_class(const Perm& x) const
    {
        std::set<Perm> cls;
        for (const auto& g : elements_) cls.insert(g * x * g.inverse());
        return {cls.begin(), cls.end()};
    }

    std::vector<std::vector<Perm>> conjugacy_classes() const
    {
        std::vector<std::vector<Perm>> out;
        std::set<Perm> done;
        for (const auto& e : elements_) {
            if (done.count(e)) continue;
            auto cls = conjugacy_class(e);
            done.insert(cls.begin(), cls.end());
            out.push_back(std::move(cls));
        }
        return out;
    }

    bool is_abelian() const
    {
        for (std::size_t i = 0; i < generators_.size(); ++i)
            for (std::size_t j = i + 1; j < generators_.size(); ++j)
                if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
        return true;
    }

    FinGroup center() const
    {
        return subgroup_where([&](const Perm& h) {
            for (const auto& g : generators_)
                if (h * g != g * h) return false;
            return true;
        });
    }

    /// Subgroup generated by the given elements (all must lie in this group).
    FinGroup generated_by(const std::vector<Perm>& gens) const
    {
        for (const auto& g : gens)
            if (!contains(g)) throw std::domain_error("generator " + g.to_string() + " not in group");
        return closure(degree_, gens, GroupLimits{order()});
    }

    /// Normal closure of the commutators of generators.
    FinGroup derived_subgroup() const
    {
        std::vector<Perm> comms;
        for (const auto& a : generators_)
            for (const auto& b : generators_) {
                Perm c = a * b * a.inverse() * b.inverse();
                if (!c.is_identity()) comms.push_back(c);
            }
        // normal closure: close under conjugation by generators
        std::set<Perm> gens(comms.begin(), comms.end());
        for (;;) {
            FinGroup sub = closure(degree_, {gens.begin(), gens.end()}, GroupLimits{order()});
            bool grew = false;
            for (const auto& s : sub.generators_)
                for (const auto& g : generators_) {
                    Perm c = g * s * g.inverse();
                    if (!sub.contains(c)) {
                        gens.insert(c);
                        grew = true;
                    }
                }
            if (!grew) return sub;
        }
    }

    /// Relations of G/[G,G] with respect to gens, by exponent search in the quotient.
    Abelianization abelianization(const std::vector<Perm>& gens) const
    {
        if (generated_by(gens).order() != order())
            throw std::domain_error("abelianization: the given elements do not generate the group");
        const FinGroup derived = derived_subgroup();
        Abelianization ab;
        ab.coset_of_element.assign(order(), SIZE_MAX);
        std::size_t ncosets = 0;
        for (std::size_t i = 0; i < order(); ++i) {
            if (ab.coset_of_element[i] != SIZE_MAX) continue;
            for (const auto& n : derived.elements()) ab.coset_of_element[index_checked(elements_[i] * n)] = ncosets;
            ++ncosets;
        }
        const std::size_t k = gens.size();
        // generator orders in the quotient
        std::vector<long> orders(k);
        for (std::size_t j = 0; j < k; ++j) {
            Perm p = gens[j];
            long o = 1;
            while (ab.coset_of_element[index_checked(p)] != ab.coset_of_element[index_checked(identity())]) {
                p = p * gens[j];
                ++o;
            }
            orders[j] = o;
        }
        IntMatrix rels;
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<Integer> r(k, 0);
            r[j] = orders[j];
            rels.push_back(r);
        }
        ab.coset_exponents.assign(ncosets, {});
        std::vector<char> seen(ncosets, 0);
        std::vector<long> e(k, 0);
        // odometer over the box prod [0, order_j)
        for (;;) {
            Perm p = identity();
            for (std::size_t j = 0; j < k; ++j)
                for (long t = 0; t < e[j]; ++t) p = p * gens[j];
            const std::size_t c = ab.coset_of_element[index_checked(p)];
            if (!seen[c]) {
                seen[c] = 1;
                ab.coset_exponents[c] = e;
            } else {
                std::vector<Integer> r(k);
                for (std::size_t j = 0; j < k; ++j) r[j] = e[j] - ab.coset_exponents[c][j];
                rels.push_back(r);
            }
            std::size_t j = 0;
            while (j < k && ++e[j] == orders[j]) e[j++] = 0;
            if (j == k) break;
        }
        ab.relations = hermite_normal_form(std::move(rels));
        return ab;
    }

private:
    std::vector<Perm> greedy_generators() const
    {
        std::vector<Perm> gens;
        std::set<Perm> span{identity()};
        for (const auto& e : elements_) {
            if (span.count(e)) continue;
            gens.push_back(e);
            FinGroup g = closure(degree_, gens, GroupLimits{order()});
            span = std::set<Perm>(g.elements_.begin(), g.elements_.end());
            if (span.size() == order()) break;
        }
        return gens;
    }

    std::size_t degree_ = 0;
    std::vector<Perm> generators_;
    std::vector<Perm> elements_;
};

}  // namespace nicholslab

#endif  // NICHOLSLAB_PERMGROUP_HPP
