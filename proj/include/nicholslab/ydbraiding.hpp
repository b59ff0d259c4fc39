#ifndef NICHOLSLAB_YDBRAIDING_HPP
#define NICHOLSLAB_YDBRAIDING_HPP

#include "braidorbits.hpp"
#include "envgroup.hpp"
#include "exactnum.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <deque>
#include <type_traits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nicholslab {

class CharacterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Values of ρ on named centralizer generators, e.g. {"x1", -1}, {"x4x2", 1}.
struct CharacterSpec {
    std::vector<std::pair<std::string, long>> values;

    long value_of(const std::string& name) const
    {
        for (const auto& [n, v] : values)
            if (n == name) return v;
        throw std::out_of_range("character spec has no value for " + name);
    }

    /// "x1=-1,x4=1"
    static CharacterSpec parse(const std::string& text)
    {
        CharacterSpec s;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("expected name=value in '" + item + "'");
            std::string name = item.substr(0, eq);
            name.erase(std::remove_if(name.begin(), name.end(), ::isspace), name.end());
            const long v = std::stol(item.substr(eq + 1));
            s.values.emplace_back(name, v);
        }
        return s;
    }

    std::string to_string() const
    {
        std::string out;
        for (const auto& [n, v] : values) out += (out.empty() ? "" : ",") + n + "=" + std::to_string(v);
        return out;
    }
};

/// q_{ij} with c(v_i ⊗ v_j) = q_{ij} v_{i⊳j} ⊗ v_i.
template <typename Field>
class Cocycle {
public:
    using value_type = typename Field::value_type;

    /// Validates the rack 2-cocycle identity.
    Cocycle(Rack r, Field f, std::vector<std::vector<value_type>> values)
        : rack_(std::move(r)), field_(std::move(f)), q_(std::move(values))
    {
        const std::size_t d = rack_.size();
        if (q_.size() != d) throw std::invalid_argument("cocycle table has wrong size");
        for (const auto& row : q_) {
            if (row.size() != d) throw std::invalid_argument("cocycle table has wrong size");
            for (const auto& v : row)
                if (field_.is_zero(v)) throw std::invalid_argument("cocycle values must be units");
        }
        for (std::uint32_t i = 0; i < d; ++i)
            for (std::uint32_t j = 0; j < d; ++j)
                for (std::uint32_t k = 0; k < d; ++k) {
                    const auto lhs = field_.mul(q(i, rack_.op(j, k)), q(j, k));
                    const auto rhs = field_.mul(q(rack_.op(i, j), rack_.op(i, k)), q(i, k));
                    if (!field_.equal(lhs, rhs))
                        throw std::invalid_argument("2-cocycle identity fails at (" + std::to_string(i + 1) + "," +
                                                    std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
                }
    }

    static Cocycle constant(Rack r, Field f, long value)
    {
        const std::size_t d = r.size();
        std::vector<std::vector<value_type>> q(d, std::vector<value_type>(d, f.from_int(value)));
        return Cocycle(std::move(r), std::move(f), std::move(q));
    }

    const Rack& rack() const { return rack_; }
    const Field& field() const { return field_; }
    std::size_t size() const { return rack_.size(); }
    const value_type& q(std::uint32_t i, std::uint32_t j) const { return q_[i][j]; }
    const std::vector<std::vector<value_type>>& table() const { return q_; }

    /// Same ±1 cocycle over another field.
    template <typename Other>
    Cocycle<Other> reduce_to(const Other& g) const
    {
        std::vector<std::vector<typename Other::value_type>> out(size());
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j) out[i].push_back(g.from_rational(to_rational(q_[i][j])));
        return Cocycle<Other>(rack_, g, std::move(out));
    }

private:
    Rational to_rational(const value_type& v) const
    {
        if constexpr (std::is_same_v<Field, RationalField>) {
            return v;
        } else {
            // only ±1 values are transported between fields
            if (field_.equal(v, field_.one())) return 1;
            if (field_.equal(v, field_.neg(field_.one()))) return -1;
            throw std::invalid_argument("only ±1 cocycles can change field");
        }
    }

    Rack rack_;
    Field field_;
    std::vector<std::vector<value_type>> q_;
};

/// How the section ĥ_i is normalized. Chain evaluations depend on this choice (it
/// rescales each v_i), the Nichols algebra does not.
enum class Gauge {
    /// ĥ_i = (BFS word in the generators) · x_1^{-length}; every q_ij is then ρ of a
    /// degree-1 element of the centralizer, e.g. constant -1 when ρ(x_1) = -1 and C = <x_1>.
    degree_normalized,
    /// ĥ_i = BFS word in the generators, so v_i = x_{a_1} ... x_{a_k} v_1.
    generator_words,
};

inline std::string gauge_name(Gauge g) { return g == Gauge::degree_normalized ? "normalized" : "generators"; }

inline Gauge parse_gauge(const std::string& s)
{
    if (s == "normalized") return Gauge::degree_normalized;
    if (s == "generators") return Gauge::generator_words;
    throw std::invalid_argument("unknown gauge '" + s + "' (normalized|generators)");
}

/// Section and ±1 cocycle values computed from a character of the centralizer.
struct SignCocycle {
    std::vector<std::vector<long>> q;          // ±1
    std::vector<GradedWord> section;           // ĥ_i
    std::size_t quotient_order = 0;            // |Ḡ| or |Ĝ|
    bool used_hat = false;
};

/// q_{ij} = ρ(ĥ_{i⊳j}^{-1} x_i ĥ_j) with ρ read off abelianization coordinates of the
/// named generators of the character in C(x_1) ⊆ Ḡ_X, or Ĝ_X when ρ(x_1)^n = -1. The section is
/// found by breadth-first search from x_1 (ĥ_{i⊳k} = x_i ĥ_k, generators in index order).
inline SignCocycle sign_cocycle_from_character(const Rack& r, const CharacterSpec& spec,
                                               Gauge gauge = Gauge::degree_normalized, CosetLimits limits = {})
{
    for (const auto& [n, v] : spec.values)
        if (v != 1 && v != -1) throw CharacterError("character values must be +1 or -1 (" + n + ")");
    const long rho1 = spec.value_of("x1");
    const std::size_t n = r.phi(0).order();
    const bool use_hat = rho1 == -1 && n % 2 == 1;
    const QuotientGroup g = use_hat ? hat_group(r, limits) : bar_group(r, limits);
    const FinGroup cent = g.group().centralizer(g.image(0));

    std::vector<Perm> gens;
    std::vector<int> orders;
    std::vector<long> vals;
    for (const auto& [name, v] : spec.values) {
        Perm p = g.evaluate(parse_word(name));
        if (!cent.contains(p)) throw CharacterError(name + " does not centralize x1");
        gens.push_back(p);
        orders.push_back(v == -1 ? 2 : 1);
        vals.push_back(v);
    }
    if (cent.generated_by(gens).order() != cent.order())
        throw CharacterError("the named elements do not generate the centralizer of x1");
    const Abelianization ab = cent.abelianization(gens);
    if (!character_exists(ab.relations, orders))
        throw CharacterError("no character of the centralizer takes the values " + spec.to_string());
    auto rho = [&](const Perm& h) -> long {
        const auto idx = cent.index_of(h);
        if (!idx) throw std::logic_error("section product does not centralize x1");
        const auto& e = ab.coset_exponents[ab.coset_of_element[*idx]];
        long v = 1;
        for (std::size_t j = 0; j < e.size(); ++j)
            if (vals[j] == -1 && e[j] % 2 != 0) v = -v;
        return v;
    };

    SignCocycle out;
    out.used_hat = use_hat;
    out.quotient_order = g.order();
    const std::size_t d = r.size();
    std::vector<char> found(d, 0);
    out.section.assign(d, GradedWord{});
    std::deque<std::uint32_t> queue{0};
    found[0] = 1;
    while (!queue.empty()) {
        const auto k = queue.front();
        queue.pop_front();
        for (std::uint32_t i = 0; i < d; ++i) {
            const auto t = r.op(i, k);
            if (found[t]) continue;
            found[t] = 1;
            out.section[t] = GradedWord::gen(i) * out.section[k];
            queue.push_back(t);
        }
    }
    for (std::uint32_t i = 0; i < d; ++i)
        if (!found[i]) throw std::invalid_argument("rack is decomposable; no section through x1 exists");
    if (gauge == Gauge::degree_normalized)
        for (auto& w : out.section) w = w * GradedWord::gen(0).pow(-w.degree());
    std::vector<Perm> h(d);
    for (std::uint32_t i = 0; i < d; ++i) {
        h[i] = g.evaluate(out.section[i]);
        if (h[i] * g.image(0) * h[i].inverse() != g.image(i)) throw std::logic_error("section does not conjugate x1 to x_i");
    }
    out.q.assign(d, std::vector<long>(d));
    for (std::uint32_t i = 0; i < d; ++i)
        for (std::uint32_t j = 0; j < d; ++j) out.q[i][j] = rho(h[r.op(i, j)].inverse() * g.image(i) * h[j]);
    return out;
}

template <typename Field>
Cocycle<Field> cocycle_from_character(const Rack& r, const CharacterSpec& spec, const Field& f,
                                      Gauge gauge = Gauge::degree_normalized, CosetLimits limits = {})
{
    const SignCocycle s = sign_cocycle_from_character(r, spec, gauge, limits);
    std::vector<std::vector<typename Field::value_type>> q(r.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j) q[i].push_back(f.from_int(s.q[i][j]));
    return Cocycle<Field>(r, f, std::move(q));
}

/// Names of the centralizer generators for each built-in rack, and the valid sign choices.
struct BuiltinCharacter {
    std::string rack;
    CharacterSpec spec;
    std::string label;
};

inline std::vector<BuiltinCharacter> builtin_characters()
{
    return {
        {"D3", CharacterSpec::parse("x1=-1"), "D3"},
        {"T", CharacterSpec::parse("x1=-1,x4x2=1"), "T"},
        {"Aff(5,2)", CharacterSpec::parse("x1=-1"), "Aff(5,2)"},
        {"Aff(5,3)", CharacterSpec::parse("x1=-1"), "Aff(5,3)"},
        {"A", CharacterSpec::parse("x1=-1,x4=1"), "A+"},
        {"A", CharacterSpec::parse("x1=-1,x4=-1"), "A-"},
        {"B", CharacterSpec::parse("x1=-1,x6=-1"), "B"},
        {"Aff(7,3)", CharacterSpec::parse("x1=-1"), "Aff(7,3)"},
        {"Aff(7,5)", CharacterSpec::parse("x1=-1"), "Aff(7,5)"},
        {"C", CharacterSpec::parse("x1=-1,x8=1,x9=1"), "C+"},
        {"C", CharacterSpec::parse("x1=-1,x8=-1,x9=-1"), "C-"},
    };
}

// ---------------------------------------------------------------------------
// Braiding on V ⊗ V and quadratic analysis
// ---------------------------------------------------------------------------

/// Dense d²×d² matrix of c, basis index i*d + j for v_i ⊗ v_j.
template <typename Field>
Matrix<Field> braiding_matrix(const Cocycle<Field>& c)
{
    const std::size_t d = c.size();
    Matrix<Field> m(c.field(), d * d, d * d);
    for (std::uint32_t i = 0; i < d; ++i)
        for (std::uint32_t j = 0; j < d; ++j) m(c.rack().op(i, j) * d + i, i * d + j) = c.q(i, j);
    return m;
}

/// (c⊗1)(1⊗c)(c⊗1) = (1⊗c)(c⊗1)(1⊗c) on V^{⊗3}; both sides are monomial, so they are
/// compared basis vector by basis vector.
template <typename Field>
bool braid_equation_holds(const Cocycle<Field>& c)
{
    const auto& f = c.field();
    const auto& r = c.rack();
    using V = typename Field::value_type;
    struct Mono {
        std::uint32_t a, b, e;
        V s;
    };
    auto c12 = [&](Mono m) {
        return Mono{r.op(m.a, m.b), m.a, m.e, f.mul(m.s, c.q(m.a, m.b))};
    };
    auto c23 = [&](Mono m) {
        return Mono{m.a, r.op(m.b, m.e), m.b, f.mul(m.s, c.q(m.b, m.e))};
    };
    const std::uint32_t d = static_cast<std::uint32_t>(c.size());
    for (std::uint32_t i = 0; i < d; ++i)
        for (std::uint32_t j = 0; j < d; ++j)
            for (std::uint32_t k = 0; k < d; ++k) {
                const Mono start{i, j, k, f.one()};
                const Mono lhs = c12(c23(c12(start)));
                const Mono rhs = c23(c12(c23(start)));
                if (lhs.a != rhs.a || lhs.b != rhs.b || lhs.e != rhs.e || !f.equal(lhs.s, rhs.s)) return false;
            }
    return true;
}

struct OrbitRelation {
    std::size_t size = 0;
    Pair start;
    bool relation = false;
};

struct QuadraticProfile {
    std::vector<OrbitRelation> orbits;
    std::size_t kernel_dim_orbits = 0;
    std::size_t kernel_dim_rank = 0;
    std::size_t dim_B2 = 0;
    std::size_t bound = 0;             // d + l_2 + l_3 + ... (e = 1)
    bool condition = false;            // dim B_2 <= d(d+1)/2
    bool consistent() const { return kernel_dim_orbits == kernel_dim_rank; }
};

template <typename Field>
QuadraticProfile quad_profile(const Cocycle<Field>& c)
{
    const auto& f = c.field();
    const std::size_t d = c.size();
    QuadraticProfile qp;
    for (const auto& o : braid_orbits(c.rack())) {
        // c^m on the orbit's starting line is multiplication by the product of q along the cycle
        auto lambda = f.one();
        for (const auto& p : o.cycle) lambda = f.mul(lambda, c.q(p.first, p.second));
        const auto sign = f.from_int(o.size() % 2 == 0 ? 1 : -1);
        OrbitRelation rel{o.size(), o.cycle.front(), f.equal(lambda, sign)};
        qp.kernel_dim_orbits += rel.relation ? 1 : 0;
        qp.orbits.push_back(rel);
    }
    Matrix<Field> m = braiding_matrix(c);
    for (std::size_t i = 0; i < d * d; ++i) m(i, i) = f.add(m(i, i), f.one());
    qp.kernel_dim_rank = rank_and_kernel(m).kernel_basis.size();
    qp.dim_B2 = d * d - qp.kernel_dim_rank;
    qp.bound = braid_orbits(c.rack()).size();
    qp.condition = 2 * qp.dim_B2 <= d * (d + 1);
    return qp;
}

struct QuadraticBound {
    Integer kernel_bound;   // d e(e+1)/2 + e^2 (l_2 + l_3 + ...)
    Rational threshold;     // 1/e
    Rational S;
    bool holds = false;     // S <= 1/e
    bool boundary = false;  // S == 1/e
};

inline QuadraticBound quadratic_bound(const Rack& r, std::size_t e)
{
    if (e == 0) throw std::invalid_argument("e must be positive");
    const OrbitProfile p = profile(r);
    QuadraticBound b;
    std::size_t orbits = 0;
    for (const auto& [n, ln] : p.l) orbits += ln;
    b.kernel_bound = Integer(static_cast<unsigned long>(p.d * e * (e + 1) / 2 + e * e * orbits));
    b.threshold = Rational(1, static_cast<unsigned long>(e));
    b.S = p.S;
    b.holds = p.S <= b.threshold;
    b.boundary = p.S == b.threshold;
    return b;
}

}  // namespace nicholslab

#endif  // NICHOLSLAB_YDBRAIDING_HPP
