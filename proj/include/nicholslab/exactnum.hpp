#ifndef NICHOLSLAB_EXACTNUM_HPP
#define NICHOLSLAB_EXACTNUM_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace nicholslab {

using Rational = mpq_class;
using Integer = mpz_class;

class FieldMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Fields. Every algorithm below is templated on one of these two policies.
// ---------------------------------------------------------------------------

struct RationalField {
    using value_type = Rational;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long long v) const { return Rational(static_cast<long>(v)); }
    value_type from_rational(const Rational& v) const { return v; }
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    bool equal(const value_type& a, const value_type& b) const { return a == b; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const
    {
        if (sgn(a) == 0) throw std::domain_error("division by zero in Q");
        return 1 / a;
    }
    // a -= b * c
    void submul(value_type& a, const value_type& b, const value_type& c) const { a -= b * c; }
    std::uint32_t characteristic() const { return 0; }
    std::string name() const { return "Q"; }
    std::string format(const value_type& a) const { return a.get_str(); }
    bool operator==(const RationalField&) const { return true; }
};

/// Residues modulo a prime p < 2^31; products go through 64-bit intermediates.
class PrimeField {
public:
    using value_type = std::uint32_t;

    explicit PrimeField(std::uint32_t p) : p_(p)
    {
        if (p >= (1u << 31) || !is_prime(p))
            throw std::invalid_argument("prime field modulus must be a prime below 2^31, got " +
                                        std::to_string(p));
    }

    std::uint32_t modulus() const { return p_; }
    value_type zero() const { return 0; }
    value_type one() const { return 1 % p_; }
    value_type from_int(long long v) const
    {
        long long r = v % static_cast<long long>(p_);
        return static_cast<value_type>(r < 0 ? r + p_ : r);
    }
    value_type from_rational(const Rational& v) const
    {
        Integer num = v.get_num() % p_;
        Integer den = v.get_den() % p_;
        if (den == 0) throw std::domain_error("denominator vanishes mod " + std::to_string(p_));
        if (num < 0) num += p_;
        return mul(static_cast<value_type>(num.get_ui()), inv(static_cast<value_type>(den.get_ui())));
    }
    bool is_zero(value_type a) const { return a == 0; }
    bool equal(value_type a, value_type b) const { return a == b; }
    value_type add(value_type a, value_type b) const
    {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
    value_type mul(value_type a, value_type b) const
    {
        return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
    }
    value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
    value_type inv(value_type a) const
    {
        if (a == 0) throw std::domain_error("division by zero in F_" + std::to_string(p_));
        // extended Euclid on signed 64-bit
        long long t = 0, nt = 1, r = p_, nr = a;
        while (nr != 0) {
            long long q = r / nr;
            t = std::exchange(nt, t - q * nt);
            r = std::exchange(nr, r - q * nr);
        }
        return static_cast<value_type>(t < 0 ? t + p_ : t);
    }
    void submul(value_type& a, value_type b, value_type c) const { a = sub(a, mul(b, c)); }
    std::uint32_t characteristic() const { return p_; }
    std::string name() const { return "F" + std::to_string(p_); }
    std::string format(value_type a) const { return std::to_string(a); }
    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint32_t p_;
};

// ---------------------------------------------------------------------------
// Runtime-tagged scalars, used at API boundaries (CLI, JSON, mixed inputs).
// ---------------------------------------------------------------------------

struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
    bool operator==(const Residue&) const = default;
};

/// A field element: either a reduced rational or a residue mod a prime.
class Scalar {
public:
    Scalar(const Rational& q) : v_(q) { std::get<Rational>(v_).canonicalize(); }
    Scalar(long v) : v_(Rational(v)) {}
    Scalar(std::uint32_t value, std::uint32_t modulus) : v_(Residue{value % modulus, modulus}) {}

    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    /// 0 for Q, p for F_p.
    std::uint32_t characteristic() const { return is_rational() ? 0 : std::get<Residue>(v_).modulus; }
    const Rational& rational() const { return std::get<Rational>(v_); }
    const Residue& residue() const { return std::get<Residue>(v_); }
    bool operator==(const Scalar& o) const { return v_ == o.v_; }

private:
    std::variant<Rational, Residue> v_;
};

// ---------------------------------------------------------------------------
// Dense matrices
// ---------------------------------------------------------------------------

template <typename Field>
class Matrix {
public:
    using value_type = typename Field::value_type;

    Matrix(Field field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero())
    {
    }

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    static Matrix identity(Field field, std::size_t n)
    {
        Matrix m(std::move(field), n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
        return m;
    }

    std::vector<value_type> apply(const std::vector<value_type>& v) const
    {
        if (v.size() != cols_) throw std::invalid_argument("matrix/vector size mismatch");
        std::vector<value_type> out(rows_, field_.zero());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!field_.is_zero((*this)(r, c)) && !field_.is_zero(v[c]))
                    out[r] = field_.add(out[r], field_.mul((*this)(r, c), v[c]));
        return out;
    }

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<value_type> data_;
};

template <typename Field>
struct RankKernel {
    std::size_t rank = 0;
    std::vector<std::vector<typename Field::value_type>> kernel_basis;
    std::vector<std::size_t> pivot_columns;
    /// Over Q: the successive Bareiss pivots (leading principal minors of the
    /// row-permuted, cleared-denominator matrix). Empty over F_p.
    std::vector<Integer> bareiss_pivots;
};

namespace detail {

// Back substitution from a row-echelon form with given pivots; one kernel vector
// per free column with that column set to one.
template <typename Field, typename Entry>
std::vector<std::vector<typename Field::value_type>>
kernel_from_echelon(const Field& f, const std::vector<std::vector<Entry>>& ech,
                    const std::vector<std::size_t>& pivots, std::size_t cols,
                    const std::function<typename Field::value_type(const Entry&)>& lift)
{
    using V = typename Field::value_type;
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<V>> kernel;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<V> x(cols, f.zero());
        x[free] = f.one();
        for (std::size_t k = pivots.size(); k-- > 0;) {
            const std::size_t pc = pivots[k];
            V acc = f.zero();
            for (std::size_t c = pc + 1; c < cols; ++c)
                if (!f.is_zero(x[c])) acc = f.add(acc, f.mul(lift(ech[k][c]), x[c]));
            x[pc] = f.neg(f.mul(acc, f.inv(lift(ech[k][pc]))));
        }
        kernel.push_back(std::move(x));
    }
    return kernel;
}

}  // namespace detail

/// Rank and kernel over Q by fraction-free (Bareiss) elimination.
inline RankKernel<RationalField> rank_and_kernel(const Matrix<RationalField>& m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        Integer den = 1;
        for (std::size_t c = 0; c < cols; ++c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).get_num() * (den / m(r, c).get_den());
    }

    RankKernel<RationalField> out;
    Integer prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[row]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                a[i][j] = a[row][col] * a[i][j] - a[i][col] * a[row][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[row][col];
        out.bareiss_pivots.push_back(prev);
        out.pivot_columns.push_back(col);
        ++row;
    }
    out.rank = row;
    RationalField q;
    std::function<Rational(const Integer&)> lift = [](const Integer& z) { return Rational(z); };
    out.kernel_basis = detail::kernel_from_echelon(q, a, out.pivot_columns, cols, lift);
    return out;
}

/// Rank and kernel over F_p by Gaussian elimination.
inline RankKernel<PrimeField> rank_and_kernel(const Matrix<PrimeField>& m)
{
    const PrimeField& f = m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<std::uint32_t>> a(rows, std::vector<std::uint32_t>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c);

    RankKernel<PrimeField> out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[row]);
        const auto inv = f.inv(a[row][col]);
        for (std::size_t j = col; j < cols; ++j) a[row][j] = f.mul(a[row][j], inv);
        for (std::size_t i = row + 1; i < rows; ++i) {
            const auto factor = a[i][col];
            if (factor == 0) continue;
            for (std::size_t j = col; j < cols; ++j) f.submul(a[i][j], factor, a[row][j]);
        }
        out.pivot_columns.push_back(col);
        ++row;
    }
    out.rank = row;
    std::function<std::uint32_t(const std::uint32_t&)> lift = [](const std::uint32_t& v) { return v; };
    out.kernel_basis = detail::kernel_from_echelon(f, a, out.pivot_columns, cols, lift);
    return out;
}

/// Matrix over one runtime-chosen field, built from tagged scalars.
class ExactMatrix {
public:
    /// Throws FieldMismatch when the entries do not all live in one field.
    ExactMatrix(std::size_t rows, std::size_t cols, const std::vector<Scalar>& entries)
    {
        if (entries.size() != rows * cols)
            throw std::invalid_argument("entry count does not match rows*cols");
        const std::uint32_t ch = entries.empty() ? 0 : entries.front().characteristic();
        for (const auto& e : entries)
            if (e.characteristic() != ch)
                throw FieldMismatch("matrix mixes entries from Q and F_p or from different F_p");
        if (ch == 0) {
            Matrix<RationalField> m(RationalField{}, rows, cols);
            for (std::size_t i = 0; i < entries.size(); ++i) m(i / cols, i % cols) = entries[i].rational();
            m_ = std::move(m);
        } else {
            Matrix<PrimeField> m(PrimeField(ch), rows, cols);
            for (std::size_t i = 0; i < entries.size(); ++i) m(i / cols, i % cols) = entries[i].residue().value;
            m_ = std::move(m);
        }
    }

    std::uint32_t characteristic() const
    {
        return std::holds_alternative<Matrix<RationalField>>(m_)
                   ? 0
                   : std::get<Matrix<PrimeField>>(m_).field().characteristic();
    }

    /// Rank plus kernel vectors as tagged scalars.
    std::pair<std::size_t, std::vector<std::vector<Scalar>>> rank_and_kernel() const
    {
        std::vector<std::vector<Scalar>> kernel;
        if (auto* q = std::get_if<Matrix<RationalField>>(&m_)) {
            auto rk = nicholslab::rank_and_kernel(*q);
            for (auto& v : rk.kernel_basis) kernel.emplace_back(v.begin(), v.end());
            return {rk.rank, kernel};
        }
        const auto& fp = std::get<Matrix<PrimeField>>(m_);
        auto rk = nicholslab::rank_and_kernel(fp);
        const auto p = fp.field().modulus();
        for (auto& v : rk.kernel_basis) {
            std::vector<Scalar> row;
            for (auto x : v) row.emplace_back(x, p);
            kernel.push_back(std::move(row));
        }
        return {rk.rank, kernel};
    }

private:
    std::variant<Matrix<RationalField>, Matrix<PrimeField>> m_{Matrix<RationalField>(RationalField{}, 0, 0)};
};

// ---------------------------------------------------------------------------
// Sparse vectors and an incremental echelon form that remembers how each
// pivot row is built from the inserted independent vectors.
// ---------------------------------------------------------------------------

template <typename Field>
struct SparseVec {
    using value_type = typename Field::value_type;
    std::vector<std::uint32_t> idx;  // strictly increasing
    std::vector<value_type> val;     // never zero

    bool empty() const { return idx.empty(); }
    std::size_t size() const { return idx.size(); }
    void push(std::uint32_t i, value_type v)
    {
        idx.push_back(i);
        val.push_back(std::move(v));
    }
};

/// Accumulates sparse linear combinations into a dense buffer; extracts a sorted sparse vector.
template <typename Field>
class SparseAccumulator {
public:
    using value_type = typename Field::value_type;

    SparseAccumulator(const Field& f, std::size_t dim) : f_(f), dense_(dim, f.zero()), mark_(dim, 0) {}

    void resize(std::size_t dim)
    {
        dense_.assign(dim, f_.zero());
        mark_.assign(dim, 0);
        touched_.clear();
    }

    void add(std::uint32_t i, const value_type& v)
    {
        if (!mark_[i]) {
            mark_[i] = 1;
            touched_.push_back(i);
        }
        dense_[i] = f_.add(dense_[i], v);
    }

    void add_scaled(const SparseVec<Field>& s, const value_type& c)
    {
        if (f_.is_zero(c)) return;
        for (std::size_t k = 0; k < s.size(); ++k) add(s.idx[k], f_.mul(s.val[k], c));
    }

    SparseVec<Field> take()
    {
        std::sort(touched_.begin(), touched_.end());
        SparseVec<Field> out;
        for (auto i : touched_) {
            if (!f_.is_zero(dense_[i])) out.push(i, dense_[i]);
            dense_[i] = f_.zero();
            mark_[i] = 0;
        }
        touched_.clear();
        return out;
    }

private:
    Field f_;
    std::vector<value_type> dense_;
    std::vector<char> mark_;
    std::vector<std::uint32_t> touched_;
};

template <typename Field>
class IncrementalEchelon {
public:
    using value_type = typename Field::value_type;

    struct Insertion {
        bool independent = false;
        /// Coordinates of the inserted vector in terms of the independent vectors so far
        /// (for an independent vector: the unit vector on its new index).
        SparseVec<Field> coordinates;
    };

    IncrementalEchelon(const Field& f, std::size_t ambient_dim)
        : f_(f), ambient_(ambient_dim), pivot_row_(ambient_dim, -1), acc_(ambient_dim, f.zero()),
          in_heap_(ambient_dim, 0), comb_(f, 0)
    {
    }

    std::size_t rank() const { return rows_.size(); }

    /// Leading column of each stored row, in insertion order.
    std::vector<std::uint32_t> pivot_columns() const
    {
        std::vector<std::uint32_t> out;
        for (const auto& r : rows_) out.push_back(r.idx.front());
        return out;
    }

    Insertion insert(const SparseVec<Field>& v)
    {
        std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;
        for (std::size_t k = 0; k < v.size(); ++k) {
            acc_[v.idx[k]] = v.val[k];
            heap.push(v.idx[k]);
            in_heap_[v.idx[k]] = 1;
        }
        comb_.resize(rows_.size() + 1);
        std::optional<std::uint32_t> lead;
        std::vector<std::uint32_t> residual;
        while (!heap.empty()) {
            const std::uint32_t c = heap.top();
            heap.pop();
            in_heap_[c] = 0;
            if (f_.is_zero(acc_[c])) continue;
            const int r = pivot_row_[c];
            if (r < 0) {
                if (!lead) lead = c;
                residual.push_back(c);
                continue;
            }
            const value_type alpha = acc_[c];
            const auto& row = rows_[r];
            for (std::size_t k = 0; k < row.size(); ++k) {
                const auto j = row.idx[k];
                f_.submul(acc_[j], alpha, row.val[k]);
                if (!in_heap_[j] && j > c) {
                    heap.push(j);
                    in_heap_[j] = 1;
                }
            }
            comb_.add_scaled(combos_[r], alpha);
        }

        Insertion out;
        if (!lead) {
            out.coordinates = comb_.take();
            return out;
        }
        // residual columns were visited in increasing order; entries may still be nonzero
        const value_type lead_inv = f_.inv(acc_[*lead]);
        SparseVec<Field> row;
        std::sort(residual.begin(), residual.end());
        residual.erase(std::unique(residual.begin(), residual.end()), residual.end());
        for (auto c : residual) {
            if (!f_.is_zero(acc_[c])) row.push(c, f_.mul(acc_[c], lead_inv));
            acc_[c] = f_.zero();
        }
        const std::uint32_t new_index = static_cast<std::uint32_t>(rows_.size());
        SparseVec<Field> existing = comb_.take();
        SparseAccumulator<Field> combo(f_, new_index + 1);
        combo.add(new_index, lead_inv);
        combo.add_scaled(existing, f_.neg(lead_inv));
        pivot_row_[*lead] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
        combos_.push_back(combo.take());
        out.independent = true;
        out.coordinates.push(new_index, f_.one());
        return out;
    }

private:
    Field f_;
    std::size_t ambient_;
    std::vector<int> pivot_row_;
    std::vector<SparseVec<Field>> rows_;
    std::vector<SparseVec<Field>> combos_;
    std::vector<value_type> acc_;
    std::vector<char> in_heap_;
    SparseAccumulator<Field> comb_;
};

// ---------------------------------------------------------------------------
// Integer matrices: Smith and Hermite normal forms, lattice saturation.
// ---------------------------------------------------------------------------

using IntMatrix = std::vector<std::vector<Integer>>;

inline IntMatrix int_identity(std::size_t n)
{
    IntMatrix m(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

struct SmithForm {
    IntMatrix diagonal;  // same shape as input, nonzero only on the leading diagonal
    IntMatrix left;      // U, unimodular, U * A * V = D
    IntMatrix right;     // V
    IntMatrix right_inverse;
    std::size_t rank = 0;

    Integer invariant(std::size_t i) const { return diagonal[i][i]; }
};

/// Smith normal form with transforms; invariant factors are non-negative and divide each other.
inline SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols_if_empty = 0)
{
    const std::size_t m = a.size();
    const std::size_t n = m ? a.front().size() : cols_if_empty;
    SmithForm s{a, int_identity(m), int_identity(n), int_identity(n), 0};
    IntMatrix& d = s.diagonal;

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(d[i], d[j]);
        std::swap(s.left[i], s.left[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (auto& row : d) std::swap(row[i], row[j]);
        for (auto& row : s.right) std::swap(row[i], row[j]);
        std::swap(s.right_inverse[i], s.right_inverse[j]);
    };
    // row_i -= q * row_j
    auto row_op = [&](std::size_t i, std::size_t j, const Integer& q) {
        for (std::size_t c = 0; c < n; ++c) d[i][c] -= q * d[j][c];
        for (std::size_t c = 0; c < m; ++c) s.left[i][c] -= q * s.left[j][c];
    };
    // col_i -= q * col_j ; inverse transform: row_j(Vinv) += q * row_i(Vinv)
    auto col_op = [&](std::size_t i, std::size_t j, const Integer& q) {
        for (std::size_t r = 0; r < m; ++r) d[r][i] -= q * d[r][j];
        for (std::size_t r = 0; r < n; ++r) s.right[r][i] -= q * s.right[r][j];
        for (std::size_t c = 0; c < n; ++c) s.right_inverse[j][c] += q * s.right_inverse[i][c];
    };
    auto negate_row = [&](std::size_t i) {
        for (auto& x : d[i]) x = -x;
        for (auto& x : s.left[i]) x = -x;
    };

    std::size_t t = 0;
    while (t < m && t < n) {
        // smallest nonzero |entry| in the trailing block
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (d[i][j] != 0 && (!best || abs(d[i][j]) < abs(d[best->first][best->second])))
                    best = {i, j};
        if (!best) break;
        swap_rows(t, best->first);
        swap_cols(t, best->second);
        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d[i][t] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), d[i][t].get_mpz_t(), d[t][t].get_mpz_t());
                row_op(i, t, q);
                if (d[i][t] != 0) {
                    swap_rows(t, i);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d[t][j] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), d[t][j].get_mpz_t(), d[t][t].get_mpz_t());
                col_op(j, t, q);
                if (d[t][j] != 0) {
                    swap_cols(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // divisibility condition
            std::optional<std::size_t> bad_row;
            for (std::size_t i = t + 1; i < m && !bad_row; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (d[i][j] % d[t][t] != 0) {
                        bad_row = i;
                        break;
                    }
            if (!bad_row) break;
            row_op(t, *bad_row, Integer(-1));
        }
        if (d[t][t] < 0) negate_row(t);
        ++t;
    }
    s.rank = t;
    return s;
}

/// Row-style Hermite normal form of the row lattice; zero rows dropped.
/// Pivot rows are chosen by smallest absolute value to limit growth.
inline IntMatrix hermite_normal_form(IntMatrix a)
{
    if (a.empty()) return a;
    const std::size_t n = a.front().size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < a.size(); ++col) {
        for (;;) {
            std::optional<std::size_t> piv;
            for (std::size_t i = row; i < a.size(); ++i)
                if (a[i][col] != 0 && (!piv || abs(a[i][col]) < abs(a[*piv][col]))) piv = i;
            if (!piv) break;
            std::swap(a[row], a[*piv]);
            bool done = true;
            for (std::size_t i = row + 1; i < a.size(); ++i) {
                if (a[i][col] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[row][col].get_mpz_t());
                for (std::size_t c = col; c < n; ++c) a[i][c] -= q * a[row][c];
                if (a[i][col] != 0) done = false;
            }
            if (done) break;
        }
        if (row < a.size() && a[row][col] != 0) {
            if (a[row][col] < 0)
                for (auto& x : a[row]) x = -x;
            for (std::size_t i = 0; i < row; ++i) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[row][col].get_mpz_t());
                if (q != 0)
                    for (std::size_t c = col; c < n; ++c) a[i][c] -= q * a[row][c];
            }
            ++row;
        }
    }
    a.resize(row);
    return a;
}

struct IntegerLattice {
    std::size_t ambient_dim = 0;
    IntMatrix basis;

    std::size_t rank() const { return basis.size(); }

    /// Is v (integral) in the Z-span of the basis?
    bool contains(const std::vector<Integer>& v) const
    {
        IntMatrix aug = basis;
        aug.push_back(v);
        IntMatrix h = hermite_normal_form(basis);
        IntMatrix h2 = hermite_normal_form(aug);
        return h == h2;
    }
};

/// Z-basis of U ∩ Z^n where U is the Q-span of the given vectors.
///
/// Denominators are cleared row by row; the Smith form U G V = D then exposes the
/// saturation as the first rank(G) rows of V^{-1} (dividing out the elementary
/// divisors). The result is returned in Hermite normal form.
inline IntegerLattice saturate_lattice(const std::vector<std::vector<Rational>>& vectors, std::size_t ambient_dim)
{
    IntegerLattice out;
    out.ambient_dim = ambient_dim;
    IntMatrix g;
    for (const auto& v : vectors) {
        if (v.size() != ambient_dim) throw std::invalid_argument("vector length differs from ambient dimension");
        Integer den = 1;
        for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        std::vector<Integer> row;
        bool nonzero = false;
        for (const auto& x : v) {
            row.push_back(x.get_num() * (den / x.get_den()));
            nonzero = nonzero || row.back() != 0;
        }
        if (nonzero) g.push_back(std::move(row));
    }
    if (g.empty()) return out;
    SmithForm s = smith_normal_form(g);
    IntMatrix sat(s.right_inverse.begin(), s.right_inverse.begin() + static_cast<std::ptrdiff_t>(s.rank));
    out.basis = hermite_normal_form(std::move(sat));
    return out;
}

/// Decides whether prescribed generator values extend to a character of the abelian
/// group Z^k / rowspace(relations). Targets are given as fractions of a full turn
/// (value exp(2 pi i t)); t = 1/2 encodes the value -1.
inline bool character_exists_for_turns(const IntMatrix& relations, const std::vector<Rational>& turns)
{
    const std::size_t k = turns.size();
    if (relations.empty()) return true;
    for (const auto& r : relations)
        if (r.size() != k) throw std::invalid_argument("relation width differs from generator count");
    SmithForm s = smith_normal_form(relations);
    for (std::size_t i = 0; i < s.rank; ++i) {
        Rational si = 0;
        for (std::size_t j = 0; j < k; ++j) si += Rational(s.right_inverse[i][j]) * turns[j];
        Rational scaled = si * Rational(s.invariant(i));
        scaled.canonicalize();
        if (scaled.get_den() != 1) return false;
    }
    return true;
}

/// Sign-character variant: target order 1 means value +1, order 2 means value -1.
inline bool character_exists(const IntMatrix& relations, const std::vector<int>& target_orders)
{
    std::vector<Rational> turns;
    for (int o : target_orders) {
        if (o == 1) turns.emplace_back(0);
        else if (o == 2) turns.emplace_back(1, 2);
        else throw std::invalid_argument("only orders 1 and 2 (sign characters) are supported");
    }
    return character_exists_for_turns(relations, turns);
}

/// F_p-rank of an integer matrix reduced mod p.
inline std::size_t rank_mod_p(const IntMatrix& a, std::uint32_t p)
{
    if (a.empty()) return 0;
    PrimeField f(p);
    Matrix<PrimeField> m(f, a.size(), a.front().size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            Integer r = a[i][j] % p;
            if (r < 0) r += p;
            m(i, j) = static_cast<std::uint32_t>(r.get_ui());
        }
    return rank_and_kernel(m).rank;
}

}  // namespace nicholslab

#endif  // NICHOLSLAB_EXACTNUM_HPP
