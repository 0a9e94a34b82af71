#ifndef CHOWBENCH_ECHELON_HPP
#define CHOWBENCH_ECHELON_HPP

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "chowbench/multipoly.hpp"
#include "chowbench/rational.hpp"

namespace chowbench {

// Monomial basis of one weighted-degree slice of a polynomial ring.
// Monomials are listed in decreasing graded-lex order; index 0 is the largest.
class DegreeSlice {
public:
    DegreeSlice(VarTablePtr table, int64_t degree) : table_(std::move(table)), degree_(degree) {
        enumerate(0, degree, Monomial(table_->size()));
        // recursion emits exponents of earlier variables from high to low,
        // which is exactly decreasing lex within the fixed degree
        for (size_t i = 0; i < monos_.size(); ++i) index_.emplace(monos_[i], int32_t(i));
    }

    const VarTablePtr& table() const { return table_; }
    int64_t degree() const { return degree_; }
    size_t size() const { return monos_.size(); }
    const Monomial& monomial(int32_t i) const { return monos_[i]; }
    const std::vector<Monomial>& monomials() const { return monos_; }

    int32_t index_of(const Monomial& m) const {
        auto it = index_.find(m);
        return it == index_.end() ? -1 : it->second;
    }

private:
    void enumerate(size_t var, int64_t rem, Monomial cur) {
        if (var == table_->size()) {
            if (rem == 0) monos_.push_back(cur);
            return;
        }
        if (var + 1 == table_->size()) {
            int w = table_->weight(var);
            if (rem % w == 0) {
                cur.e[var] = int32_t(rem / w);
                monos_.push_back(cur);
            }
            return;
        }
        int w = table_->weight(var);
        for (int64_t e = rem / w; e >= 0; --e) {
            cur.e[var] = int32_t(e);
            enumerate(var + 1, rem - e * w, cur);
        }
        cur.e[var] = 0;
    }

    VarTablePtr table_;
    int64_t degree_;
    std::vector<Monomial> monos_;
    std::unordered_map<Monomial, int32_t, MonomialHash> index_;
};

// Sparse row over the integers: (column, coefficient), columns ascending.
// Column 0 is the largest monomial, so the front entry is the leading term.
using SparseRowZ = std::vector<std::pair<int32_t, Int>>;
using SparseRowQ = std::vector<std::pair<int32_t, Rational>>;

inline void strip_content(SparseRowZ& row) {
    if (row.empty()) return;
    Int g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (sgn(row.front().second) < 0) g = -g;
    if (g != 1 && g != 0)
        for (auto& [c, v] : row) v /= g;
}

// Incremental row-echelon structure over Q, stored fraction-free.
// Pivot rows are content-stripped integer rows with positive leading entry;
// a row's tail is reduced against the pivots present at insertion time.
class SliceEchelon {
public:
    explicit SliceEchelon(size_t ncols) : ncols_(ncols) {}

    size_t rank() const { return pivots_.size(); }
    size_t ncols() const { return ncols_; }
    bool full() const { return pivots_.size() == ncols_; }

    const std::map<int32_t, SparseRowZ>& pivot_rows() const { return pivots_; }

    bool has_pivot(int32_t col) const { return pivots_.count(col) != 0; }

    // Insert a row; returns true if it contributed a new pivot.
    // The row is fully reduced against the pivots present now, so the stored
    // pivot row's tail is supported on currently-free columns.
    bool insert(const SparseRowZ& row) {
        std::map<int32_t, Int> work(row.begin(), row.end());
        SparseRowZ out;
        int steps = 0;
        while (!work.empty()) {
            auto it = work.begin();
            auto piv = pivots_.find(it->first);
            if (piv == pivots_.end()) {
                out.emplace_back(it->first, it->second);
                work.erase(it);
                continue;
            }
            Int scale = eliminate(work, it->second, piv->second);
            if (scale != 1)
                for (auto& [c, v] : out) v *= scale;
            if (++steps % 16 == 0) joint_strip(work, out);
        }
        if (out.empty()) return false;
        strip_content(out);
        int32_t lead = out.front().first;
        pivots_.emplace(lead, std::move(out));
        return true;
    }

    // Full normal form over Q: eliminate every pivot-column occurrence.
    SparseRowQ reduce(const SparseRowQ& row) const {
        std::map<int32_t, Rational> work(row.begin(), row.end());
        SparseRowQ out;
        while (!work.empty()) {
            auto it = work.begin();
            int32_t col = it->first;
            auto piv = pivots_.find(col);
            if (piv == pivots_.end()) {
                out.emplace_back(col, it->second);
                work.erase(it);
                continue;
            }
            Rational f = it->second / Rational(piv->second.front().second);
            for (const auto& [c, v] : piv->second) {
                auto w = work.find(c);
                if (w == work.end()) {
                    work.emplace(c, -f * Rational(v));
                } else {
                    w->second -= f * Rational(v);
                    if (w->second.is_zero()) work.erase(w);
                }
            }
        }
        return out;
    }

    bool reduces_to_zero(const SparseRowQ& row) const { return reduce(row).empty(); }

    // columns without a pivot, ascending (i.e. decreasing monomial order)
    std::vector<int32_t> free_columns() const {
        std::vector<int32_t> cols;
        cols.reserve(ncols_ - pivots_.size());
        auto it = pivots_.begin();
        for (int32_t c = 0; c < int32_t(ncols_); ++c) {
            if (it != pivots_.end() && it->first == c) {
                ++it;
            } else {
                cols.push_back(c);
            }
        }
        return cols;
    }

private:
    // work <- a*work - b*piv with a,b chosen to cancel the leading column;
    // returns the factor a the caller must apply to already-finalized entries.
    static Int eliminate(std::map<int32_t, Int>& work, const Int& lead_coeff,
                         const SparseRowZ& piv) {
        const Int& p = piv.front().second;
        Int g;
        mpz_gcd(g.get_mpz_t(), lead_coeff.get_mpz_t(), p.get_mpz_t());
        Int a = p / g;
        Int b = lead_coeff / g;
        if (a != 1)
            for (auto& [c, v] : work) v *= a;
        for (const auto& [c, v] : piv) {
            auto w = work.find(c);
            if (w == work.end()) {
                work.emplace(c, -b * v);
            } else {
                w->second -= b * v;
                if (w->second == 0) work.erase(w);
            }
        }
        return a;
    }

    static void joint_strip(std::map<int32_t, Int>& work, SparseRowZ& out) {
        Int g = 0;
        for (const auto& [c, v] : work) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            if (g == 1) return;
        }
        for (const auto& [c, v] : out) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            if (g == 1) return;
        }
        if (g == 0 || g == 1) return;
        for (auto& [c, v] : work) v /= g;
        for (auto& [c, v] : out) v /= g;
    }

    size_t ncols_;
    std::map<int32_t, SparseRowZ> pivots_;
};

inline SparseRowZ poly_to_int_row(const MultiPoly& p, const DegreeSlice& slice) {
    // clear denominators; the row spans the same line over Q
    Int lcm = 1;
    for (const auto& [m, c] : p.terms())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
    SparseRowZ row;
    row.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) {
        int32_t idx = slice.index_of(m);
        if (idx < 0) throw ArgumentError("monomial not in slice (wrong degree?)");
        row.emplace_back(idx, c.numerator() * (lcm / c.denominator()));
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
}

inline SparseRowQ poly_to_rat_row(const MultiPoly& p, const DegreeSlice& slice) {
    SparseRowQ row;
    row.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) {
        int32_t idx = slice.index_of(m);
        if (idx < 0) throw ArgumentError("monomial not in slice (wrong degree?)");
        row.emplace_back(idx, c);
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
}

// Exact rank of a dense rational matrix (fraction-free Gaussian elimination).
// Small matrices only; used for pairing matrices and test oracles.
inline size_t dense_rank(std::vector<std::vector<Rational>> m) {
    size_t rows = m.size();
    if (rows == 0) return 0;
    size_t cols = m[0].size();
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t sel = rank;
        while (sel < rows && m[sel][c].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[rank]);
        for (size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c].is_zero()) continue;
            Rational f = m[r][c] / m[rank][c];
            for (size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

} // namespace chowbench

#endif
