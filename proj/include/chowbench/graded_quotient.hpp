#ifndef CHOWBENCH_GRADED_QUOTIENT_HPP
#define CHOWBENCH_GRADED_QUOTIENT_HPP

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "chowbench/echelon.hpp"
#include "chowbench/multipoly.hpp"

namespace chowbench {

class GradedQuotient;
using GradedQuotientPtr = std::shared_ptr<const GradedQuotient>;

// Element of a graded quotient algebra: coordinates over the canonical basis
// of one degree slice. The canonical basis consists of the cosets of the
// standard (non-pivot) monomials, in decreasing graded-lex order.
class ChowClass {
public:
    ChowClass() = default;
    ChowClass(GradedQuotientPtr ring, int64_t degree, std::vector<Rational> coords)
        : ring_(std::move(ring)), degree_(degree), coords_(std::move(coords)) {}

    const GradedQuotientPtr& ring() const { return ring_; }
    int64_t degree() const { return degree_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (!c.is_zero()) return false;
        return true;
    }

    ChowClass operator+(const ChowClass& o) const {
        require_compatible(o);
        std::vector<Rational> c(coords_);
        for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
        return ChowClass(ring_, degree_, std::move(c));
    }
    ChowClass operator-(const ChowClass& o) const {
        require_compatible(o);
        std::vector<Rational> c(coords_);
        for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
        return ChowClass(ring_, degree_, std::move(c));
    }
    ChowClass scaled(const Rational& k) const {
        std::vector<Rational> c(coords_);
        for (auto& x : c) x *= k;
        return ChowClass(ring_, degree_, std::move(c));
    }

    friend bool operator==(const ChowClass& a, const ChowClass& b) {
        return a.ring_ == b.ring_ && a.degree_ == b.degree_ && a.coords_ == b.coords_;
    }
    friend bool operator!=(const ChowClass& a, const ChowClass& b) { return !(a == b); }

private:
    void require_compatible(const ChowClass& o) const {
        if (ring_ != o.ring_ || degree_ != o.degree_)
            throw StructuralError("ChowClass: mixed rings or degrees");
    }

    GradedQuotientPtr ring_;
    int64_t degree_ = 0;
    std::vector<Rational> coords_;
};

// A weighted polynomial ring modulo a homogeneous ideal, materialized
// degree-by-degree as exact linear algebra data. Each degree slice is built
// by multiplying every relation with all monomials of complementary degree
// and row-reducing exactly; the quotient basis is the set of non-pivot
// monomial cosets.
//
// Construction and the first touch of each degree slice must be externally
// serialized; afterwards concurrent reads are safe.
class GradedQuotient : public std::enable_shared_from_this<GradedQuotient> {
public:
    static std::shared_ptr<GradedQuotient> create(VarTablePtr table,
                                                  std::vector<MultiPoly> relations,
                                                  int64_t multiply_cap = 16) {
        return std::shared_ptr<GradedQuotient>(
            new GradedQuotient(std::move(table), std::move(relations), multiply_cap));
    }

    const VarTablePtr& table() const { return table_; }
    const std::vector<MultiPoly>& relations() const { return relations_; }
    int64_t multiply_cap() const { return multiply_cap_; }

    int64_t dimension(int64_t d) const {
        if (d < 0) return 0;
        const Slice& s = slice(d);
        return int64_t(s.basis.size()) - int64_t(s.ech.rank());
    }

    std::vector<int64_t> hilbert_vector(int64_t max_degree) const {
        std::vector<int64_t> h;
        for (int64_t d = 0; d <= max_degree; ++d) h.push_back(dimension(d));
        return h;
    }

    // canonical basis monomials (coset representatives) of the degree-d slice
    std::vector<Monomial> basis_monomials(int64_t d) const {
        const Slice& s = slice(d);
        std::vector<Monomial> out;
        out.reserve(s.free_cols.size());
        for (int32_t c : s.free_cols) out.push_back(s.basis.monomial(c));
        return out;
    }

    ChowClass zero_class(int64_t d) const {
        return ChowClass(shared_from_this(), d,
                         std::vector<Rational>(size_t(dimension(d)), Rational(0)));
    }

    ChowClass normal_form(const MultiPoly& p) const {
        if (!same_table(p.table(), table_))
            throw StructuralError("normal_form: polynomial over a different table");
        if (p.is_zero()) return zero_class(0);
        if (!p.is_homogeneous()) throw ArgumentError("normal_form: input not homogeneous");
        int64_t d = p.degree();
        const Slice& s = slice(d);
        SparseRowQ nf = s.ech.reduce(poly_to_rat_row(p, s.basis));
        std::vector<Rational> coords(s.free_cols.size(), Rational(0));
        size_t j = 0;
        for (const auto& [col, val] : nf) {
            while (j < s.free_cols.size() && s.free_cols[j] < col) ++j;
            if (j >= s.free_cols.size() || s.free_cols[j] != col)
                throw InvariantViolation("normal form hit a pivot column");
            coords[j] = val;
        }
        return ChowClass(shared_from_this(), d, std::move(coords));
    }

    bool ideal_contains(const MultiPoly& p) const {
        if (p.is_zero()) return true;
        return normal_form(p).is_zero();
    }

    // canonical representative of a class: sum of coords times basis monomials
    MultiPoly representative(const ChowClass& cls) const {
        const Slice& s = slice(cls.degree());
        MultiPoly p(table_);
        for (size_t j = 0; j < cls.coords().size(); ++j)
            if (!cls.coords()[j].is_zero())
                p = p + MultiPoly::from_monomial(table_, s.basis.monomial(s.free_cols[j]),
                                                 cls.coords()[j]);
        return p;
    }

    ChowClass multiply(const ChowClass& a, const ChowClass& b) const {
        if (a.ring().get() != this || b.ring().get() != this)
            throw StructuralError("multiply: classes from a different ring");
        if (a.degree() + b.degree() > multiply_cap_)
            throw RangeError("multiply: product degree " +
                             std::to_string(a.degree() + b.degree()) +
                             " beyond cached range " + std::to_string(multiply_cap_));
        return normal_form(representative(a) * representative(b));
    }

    // Matrix of the Poincare pairing A^i x A^(top-i) -> A^top (1-dimensional).
    std::vector<std::vector<Rational>> pairing_matrix(int64_t i, int64_t top) const {
        if (dimension(top) != 1)
            throw ContractError("pairing_matrix: top slice is not 1-dimensional");
        if (i < 0 || i > top) throw ArgumentError("pairing_matrix: bad degree");
        auto rows_basis = basis_monomials(i);
        auto cols_basis = basis_monomials(top - i);
        std::vector<std::vector<Rational>> m(rows_basis.size(),
                                             std::vector<Rational>(cols_basis.size()));
        for (size_t r = 0; r < rows_basis.size(); ++r)
            for (size_t c = 0; c < cols_basis.size(); ++c) {
                MultiPoly prod = MultiPoly::from_monomial(table_, rows_basis[r] * cols_basis[c],
                                                          Rational(1));
                ChowClass nf = normal_form(prod);
                m[r][c] = nf.coords()[0];
            }
        return m;
    }

    // True iff `subset` generates an ideal with the same degreewise dimensions
    // as this ring's ideal for all degrees <= up_to. Every subset element must
    // itself be a member of this ring's ideal.
    bool check_generation(const std::vector<MultiPoly>& subset, int64_t up_to) const {
        for (const auto& p : subset)
            if (!ideal_contains(p))
                throw ArgumentError("check_generation: subset element not in the ideal");
        auto sub = GradedQuotient::create(table_, subset, multiply_cap_);
        for (int64_t d = 0; d <= up_to; ++d)
            if (sub->dimension(d) != dimension(d)) return false;
        return true;
    }

    nlohmann::ordered_json to_json(int64_t max_degree) const {
        nlohmann::ordered_json j;
        j["variables"] = table_->names();
        j["weights"] = table_->weights();
        std::vector<std::string> rels;
        for (const auto& r : relations_) rels.push_back(r.str());
        j["relations"] = rels;
        std::vector<int64_t> hv = hilbert_vector(max_degree);
        j["hilbert"] = hv;
        nlohmann::ordered_json bases;
        for (int64_t d = 0; d <= max_degree; ++d) {
            std::vector<std::string> names;
            for (const auto& m : basis_monomials(d)) {
                MultiPoly p = MultiPoly::from_monomial(table_, m, Rational(1));
                names.push_back(p.str());
            }
            bases[std::to_string(d)] = names;
        }
        j["bases"] = bases;
        return j;
    }

private:
    struct Slice {
        DegreeSlice basis;
        SliceEchelon ech;
        std::vector<int32_t> free_cols;
        Slice(VarTablePtr t, int64_t d) : basis(std::move(t), d), ech(basis.size()) {}
    };

    GradedQuotient(VarTablePtr table, std::vector<MultiPoly> relations, int64_t multiply_cap)
        : table_(std::move(table)), relations_(std::move(relations)), multiply_cap_(multiply_cap) {
        for (const auto& r : relations_) {
            if (!same_table(r.table(), table_))
                throw StructuralError("GradedQuotient: relation over a different table");
            if (r.is_zero()) throw ArgumentError("GradedQuotient: zero relation");
            if (!r.is_homogeneous())
                throw ArgumentError("GradedQuotient: relation not homogeneous: " + r.str());
        }
    }

    const Slice& slice(int64_t d) const {
        auto it = cache_.find(d);
        if (it != cache_.end()) return it->second;
        Slice s(table_, d);
        if (!load_cached(d, s)) {
            if (s.ech.rank() > 0) s = Slice(table_, d);  // discard partial load
            build_slice(d, s);
            store_cached(d, s);
        }
        s.free_cols = s.ech.free_columns();
        return cache_.emplace(d, std::move(s)).first->second;
    }

    void build_slice(int64_t d, Slice& s) const {
        bool verbose = s.basis.size() > 2000;
        if (verbose)
            std::cerr << "[chowbench] building degree-" << d << " slice ("
                      << s.basis.size() << " monomials)\n";
        for (const auto& rel : relations_) {
            if (s.ech.full()) break;
            int64_t dr = rel.degree();
            if (dr > d) continue;
            DegreeSlice comp(table_, d - dr);
            // ascending graded-lex order of the multiplier keeps row leading
            // monomials ascending, which keeps reduction cascades short
            for (size_t k = comp.size(); k-- > 0;) {
                MultiPoly row = rel.times_term(comp.monomial(int32_t(k)), Rational(1));
                s.ech.insert(poly_to_int_row(row, s.basis));
                if (s.ech.full()) break;
            }
        }
        if (verbose)
            std::cerr << "[chowbench] degree " << d << ": rank " << s.ech.rank() << " of "
                      << s.basis.size() << "\n";
    }

    // ---- optional on-disk slice cache (internal, versioned) ----
    static const char* cache_env() { return "CHOWBENCH_CACHE_DIR"; }
    static constexpr const char* kCacheMagic = "CHOWBENCH-SLICE v1";

    std::string cache_key(int64_t d) const {
        std::string desc = table_->description() + "|";
        for (const auto& r : relations_) desc += r.str() + ";";
        desc += "|" + std::to_string(d);
        uint64_t h = 1469598103934665603ULL;
        for (unsigned char ch : desc) {
            h ^= ch;
            h *= 1099511628211ULL;
        }
        std::ostringstream os;
        os << std::hex << h;
        return os.str();
    }

    std::filesystem::path cache_path(int64_t d) const {
        const char* dir = std::getenv(cache_env());
        if (!dir || !*dir) return {};
        return std::filesystem::path(dir) / ("slice_" + cache_key(d) + ".cb");
    }

    bool load_cached(int64_t d, Slice& s) const {
        auto path = cache_path(d);
        if (path.empty()) return false;
        std::ifstream in(path);
        if (!in) return false;
        std::string magic;
        std::getline(in, magic);
        if (magic != kCacheMagic) return false;
        size_t ncols = 0, nrows = 0;
        in >> ncols >> nrows;
        if (ncols != s.basis.size()) return false;
        for (size_t r = 0; r < nrows; ++r) {
            size_t len = 0;
            in >> len;
            SparseRowZ row;
            row.reserve(len);
            for (size_t k = 0; k < len; ++k) {
                int32_t col;
                std::string coeff;
                in >> col >> coeff;
                row.emplace_back(col, Int(coeff));
            }
            if (!in) return false;
            if (!s.ech.insert(row)) return false;  // cached rows must be pivots
        }
        return bool(in);
    }

    void store_cached(int64_t d, const Slice& s) const {
        auto path = cache_path(d);
        if (path.empty()) return;
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        std::ofstream out(path);
        if (!out) return;
        out << kCacheMagic << "\n" << s.basis.size() << " " << s.ech.rank() << "\n";
        for (const auto& [lead, row] : s.ech.pivot_rows()) {
            out << row.size();
            for (const auto& [col, v] : row) out << " " << col << " " << v.get_str();
            out << "\n";
        }
    }

    VarTablePtr table_;
    std::vector<MultiPoly> relations_;
    int64_t multiply_cap_;
    mutable std::map<int64_t, Slice> cache_;
};

} // namespace chowbench

#endif
