#ifndef CHOWBENCH_MULTIPOLY_HPP
#define CHOWBENCH_MULTIPOLY_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chowbench/errors.hpp"
#include "chowbench/rational.hpp"

namespace chowbench {

// Ordered list of variable names with positive integer weights.
// The order fixes the graded-lex monomial order (earlier variable = larger).
class VarTable {
public:
    VarTable(std::vector<std::string> names, std::vector<int> weights)
        : names_(std::move(names)), weights_(std::move(weights)) {
        if (names_.size() != weights_.size())
            throw ArgumentError("VarTable: names/weights size mismatch");
        for (int w : weights_)
            if (w < 1) throw ArgumentError("VarTable: weights must be >= 1");
        for (size_t i = 0; i < names_.size(); ++i)
            for (size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw ArgumentError("VarTable: duplicate variable '" + names_[i] + "'");
    }

    size_t size() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_[i]; }
    int weight(size_t i) const { return weights_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<int>& weights() const { return weights_; }

    int index_of(const std::string& name) const {
        for (size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return static_cast<int>(i);
        return -1;
    }

    friend bool operator==(const VarTable& a, const VarTable& b) {
        return a.names_ == b.names_ && a.weights_ == b.weights_;
    }
    friend bool operator!=(const VarTable& a, const VarTable& b) { return !(a == b); }

    std::string description() const {
        std::string s;
        for (size_t i = 0; i < names_.size(); ++i) {
            if (i) s += ",";
            s += names_[i] + ":" + std::to_string(weights_[i]);
        }
        return s;
    }

private:
    std::vector<std::string> names_;
    std::vector<int> weights_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

inline VarTablePtr make_table(std::vector<std::string> names, std::vector<int> weights) {
    return std::make_shared<const VarTable>(std::move(names), std::move(weights));
}

inline bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
    return a == b || (a && b && *a == *b);
}

// Exponent vector indexed by a VarTable.
struct Monomial {
    std::vector<int32_t> e;

    Monomial() = default;
    explicit Monomial(size_t n) : e(n, 0) {}
    explicit Monomial(std::vector<int32_t> exps) : e(std::move(exps)) {}

    int64_t weighted_degree(const VarTable& t) const {
        int64_t d = 0;
        for (size_t i = 0; i < e.size(); ++i) d += int64_t(e[i]) * t.weight(i);
        return d;
    }

    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](int32_t x) { return x == 0; });
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }

    // componentwise quotient; nullopt if not divisible
    std::optional<Monomial> divide(const Monomial& o) const {
        Monomial r(*this);
        for (size_t i = 0; i < e.size(); ++i) {
            r.e[i] -= o.e[i];
            if (r.e[i] < 0) return std::nullopt;
        }
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
};

// graded-lex: compare weighted degree, then lex (earlier variable wins).
// Returns <0, 0, >0 like strcmp; "a > b" means a comes first in canonical order.
inline int grlex_compare(const Monomial& a, const Monomial& b, const VarTable& t) {
    int64_t da = a.weighted_degree(t), db = b.weighted_degree(t);
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

struct MonomialHash {
    size_t operator()(const Monomial& m) const {
        uint64_t h = 1469598103934665603ULL;
        for (int32_t x : m.e) {
            h ^= static_cast<uint64_t>(x) + 0x9e3779b97f4a7c15ULL;
            h *= 1099511628211ULL;
        }
        return static_cast<size_t>(h);
    }
};

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept in strictly decreasing graded-lex order; no zero coefficients.
class MultiPoly {
public:
    using Term = std::pair<Monomial, Rational>;

    MultiPoly() = default;
    explicit MultiPoly(VarTablePtr table) : table_(std::move(table)) {}

    static MultiPoly zero(VarTablePtr table) { return MultiPoly(std::move(table)); }

    static MultiPoly constant(VarTablePtr table, const Rational& c) {
        MultiPoly p(table);
        if (!c.is_zero()) p.terms_.emplace_back(Monomial(table->size()), c);
        return p;
    }

    static MultiPoly variable(VarTablePtr table, int i, const Rational& c = Rational(1)) {
        if (i < 0 || size_t(i) >= table->size()) throw ArgumentError("variable index out of range");
        MultiPoly p(table);
        if (!c.is_zero()) {
            Monomial m(table->size());
            m.e[i] = 1;
            p.terms_.emplace_back(std::move(m), c);
        }
        return p;
    }

    static MultiPoly variable(VarTablePtr table, const std::string& name,
                              const Rational& c = Rational(1)) {
        int i = table->index_of(name);
        if (i < 0) throw ArgumentError("unknown variable '" + name + "'");
        return variable(std::move(table), i, c);
    }

    static MultiPoly from_monomial(VarTablePtr table, Monomial m, const Rational& c) {
        MultiPoly p(table);
        if (m.e.size() != table->size()) throw ArgumentError("monomial size mismatch");
        if (!c.is_zero()) p.terms_.emplace_back(std::move(m), c);
        return p;
    }

    const VarTablePtr& table() const { return table_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    const Term& leading_term() const {
        if (terms_.empty()) throw ArgumentError("leading term of zero polynomial");
        return terms_.front();
    }

    // max weighted degree over terms; -1 for the zero polynomial
    int64_t degree() const {
        int64_t d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.weighted_degree(*table_));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int64_t d = terms_.front().first.weighted_degree(*table_);
        for (const auto& [m, c] : terms_)
            if (m.weighted_degree(*table_) != d) return false;
        return true;
    }

    MultiPoly homogeneous_component(int64_t d) const {
        MultiPoly r(table_);
        for (const auto& [m, c] : terms_)
            if (m.weighted_degree(*table_) == d) r.terms_.emplace_back(m, c);
        return r;
    }

    std::vector<int64_t> homogeneous_degrees() const {
        std::vector<int64_t> ds;
        for (const auto& [m, c] : terms_) {
            int64_t d = m.weighted_degree(*table_);
            if (std::find(ds.begin(), ds.end(), d) == ds.end()) ds.push_back(d);
        }
        std::sort(ds.begin(), ds.end());
        return ds;
    }

    MultiPoly operator-() const {
        MultiPoly r(table_);
        r.terms_.reserve(terms_.size());
        for (const auto& [m, c] : terms_) r.terms_.emplace_back(m, -c);
        return r;
    }

    MultiPoly operator+(const MultiPoly& o) const {
        check_table(o);
        MultiPoly r(table_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            int cmp = grlex_compare(terms_[i].first, o.terms_[j].first, *table_);
            if (cmp > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (cmp < 0) {
                r.terms_.push_back(o.terms_[j++]);
            } else {
                Rational c = terms_[i].second + o.terms_[j].second;
                if (!c.is_zero()) r.terms_.emplace_back(terms_[i].first, c);
                ++i, ++j;
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
        return r;
    }

    MultiPoly operator-(const MultiPoly& o) const { return *this + (-o); }

    MultiPoly scaled(const Rational& c) const {
        MultiPoly r(table_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& [m, k] : terms_) r.terms_.emplace_back(m, k * c);
        return r;
    }

    // multiply by a single term
    MultiPoly times_term(const Monomial& m, const Rational& c) const {
        MultiPoly r(table_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& [mm, k] : terms_) r.terms_.emplace_back(mm * m, k * c);
        return r;  // order preserved: multiplying by a fixed monomial is monotone
    }

    MultiPoly operator*(const MultiPoly& o) const {
        check_table(o);
        if (is_zero() || o.is_zero()) return MultiPoly(table_);
        if (o.terms_.size() == 1) return times_term(o.terms_[0].first, o.terms_[0].second);
        if (terms_.size() == 1) return o.times_term(terms_[0].first, terms_[0].second);
        std::map<Monomial, Rational, GrlexDesc> acc{GrlexDesc{table_.get()}};
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) {
                Monomial m = m1 * m2;
                auto it = acc.find(m);
                if (it == acc.end()) {
                    acc.emplace(std::move(m), c1 * c2);
                } else {
                    it->second += c1 * c2;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
        MultiPoly r(table_);
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc) r.terms_.emplace_back(m, c);
        return r;
    }

    MultiPoly pow(unsigned n) const {
        MultiPoly r = constant(table_, Rational(1));
        MultiPoly base = *this;
        while (n) {
            if (n & 1) r = r * base;
            n >>= 1;
            if (n) base = base * base;
        }
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return same_table(a.table_, b.table_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // Substitute variables by polynomials over a target table. Variables not in
    // the map must be present (by name) in the target table. If `total` is set,
    // an unmapped variable with a nonzero exponent is an error instead.
    MultiPoly substitute(const std::map<int, MultiPoly>& map, VarTablePtr target,
                         bool total = false) const {
        for (const auto& [i, p] : map)
            if (!same_table(p.table(), target))
                throw StructuralError("substitute: image not over target table");
        // images of untouched variables
        std::vector<int> passthrough(table_->size(), -1);
        for (size_t i = 0; i < table_->size(); ++i)
            if (!map.count(int(i))) passthrough[i] = target->index_of(table_->name(i));
        std::vector<std::map<unsigned, MultiPoly>> pow_cache(table_->size());
        MultiPoly result(target);
        for (const auto& [m, c] : terms_) {
            MultiPoly term = constant(target, c);
            for (size_t i = 0; i < m.e.size() && !term.is_zero(); ++i) {
                unsigned e = unsigned(m.e[i]);
                if (e == 0) continue;
                auto mapped = map.find(int(i));
                if (mapped == map.end()) {
                    if (total)
                        throw ArgumentError("substitute: variable '" + table_->name(i) +
                                            "' unmapped in total substitution");
                    if (passthrough[i] < 0)
                        throw ArgumentError("substitute: variable '" + table_->name(i) +
                                            "' missing from target table");
                    Monomial mm(target->size());
                    mm.e[passthrough[i]] = int32_t(e);
                    term = term.times_term(mm, Rational(1));
                    continue;
                }
                auto& cache = pow_cache[i];
                auto it = cache.find(e);
                if (it == cache.end())
                    it = cache.emplace(e, mapped->second.pow(e)).first;
                term = term * it->second;
            }
            result = result + term;
        }
        return result;
    }

    // Relabel variables by a bijection of indices with equal weights; used for
    // permutation actions on variables.
    MultiPoly remap_vars(const std::vector<int>& image) const {
        if (image.size() != table_->size()) throw ArgumentError("remap_vars: size mismatch");
        MultiPoly r(table_);
        r.terms_.reserve(terms_.size());
        for (const auto& [m, c] : terms_) {
            Monomial mm(table_->size());
            for (size_t i = 0; i < m.e.size(); ++i) mm.e[image[i]] = m.e[i];
            r.terms_.emplace_back(std::move(mm), c);
        }
        r.normalize();
        return r;
    }

    // Exact division by d: returns quotient, nullopt if not exactly divisible.
    std::optional<MultiPoly> divide_exact(const MultiPoly& d) const {
        check_table(d);
        if (d.is_zero()) throw ArgumentError("divide_exact: zero divisor");
        MultiPoly rem = *this;
        MultiPoly q(table_);
        const auto& [dm, dc] = d.leading_term();
        while (!rem.is_zero()) {
            const auto& [rm, rc] = rem.leading_term();
            auto mq = rm.divide(dm);
            if (!mq) return std::nullopt;
            Rational cq = rc / dc;
            q = q + from_monomial(table_, *mq, cq);
            rem = rem - d.times_term(*mq, cq);
        }
        return q;
    }

    // ---- canonical text form ----
    // terms in decreasing graded-lex order, e.g. "3*z1^2*c2 - 1/2*c3"
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational a = c.abs();
            if (first) {
                if (c.sign() < 0) s += "-";
                first = false;
            } else {
                s += c.sign() < 0 ? " - " : " + ";
            }
            std::string mono = monomial_str(m);
            if (mono.empty()) {
                s += a.str();
            } else if (a == Rational(1)) {
                s += mono;
            } else {
                s += a.str() + "*" + mono;
            }
        }
        return s;
    }

    std::string monomial_str(const Monomial& m) const {
        std::string s;
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += table_->name(i);
            if (m.e[i] != 1) s += "^" + std::to_string(m.e[i]);
        }
        return s;
    }

    static MultiPoly parse(VarTablePtr table, const std::string& text);

private:
    struct GrlexDesc {
        const VarTable* t;
        bool operator()(const Monomial& a, const Monomial& b) const {
            return grlex_compare(a, b, *t) > 0;
        }
    };

    void check_table(const MultiPoly& o) const {
        if (!same_table(table_, o.table_))
            throw StructuralError("operands built over different variable tables");
    }

    // restore strict descending order / merge duplicates after a raw edit
    void normalize() {
        std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
            return grlex_compare(a.first, b.first, *table_) > 0;
        });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().first == t.first) {
                out.back().second += t.second;
                if (out.back().second.is_zero()) out.pop_back();
            } else if (!t.second.is_zero()) {
                out.push_back(std::move(t));
            }
        }
        terms_ = std::move(out);
    }

    VarTablePtr table_;
    std::vector<Term> terms_;
};

// ---- parser for the canonical text form ----
namespace detail {

class PolyLexer {
public:
    explicit PolyLexer(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eof() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    char get() {
        skip_ws();
        return s_[pos_++];
    }
    std::string number() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected number at position " + std::to_string(pos_));
        return s_.substr(start, pos_ - start);
    }
    std::string ident() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        if (start == pos_)
            throw ParseError("expected identifier at position " + std::to_string(pos_));
        return s_.substr(start, pos_ - start);
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
};

} // namespace detail

inline MultiPoly MultiPoly::parse(VarTablePtr table, const std::string& text) {
    detail::PolyLexer lex(text);
    MultiPoly result(table);
    bool first = true;
    while (!lex.eof()) {
        int sign = 1;
        char c = lex.peek();
        if (c == '+' || c == '-') {
            lex.get();
            sign = (c == '-') ? -1 : 1;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms");
        }
        first = false;
        // optional coefficient
        Rational coeff(sign);
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
            std::string num = lex.number();
            std::string den = "1";
            if (lex.peek() == '/') {
                lex.get();
                den = lex.number();
            }
            coeff = Rational(Int(num), Int(den)) * Rational(sign);
            saw_coeff = true;
            if (lex.peek() == '*') lex.get();
        }
        // variable factors
        Monomial m(table->size());
        bool saw_var = false;
        while (!lex.eof() && std::isalpha(static_cast<unsigned char>(lex.peek()))) {
            std::string name = lex.ident();
            int idx = table->index_of(name);
            if (idx < 0) throw ParseError("unknown variable '" + name + "'");
            int exp = 1;
            if (lex.peek() == '^') {
                lex.get();
                exp = std::stoi(lex.number());
            }
            m.e[idx] += exp;
            saw_var = true;
            if (lex.peek() == '*') {
                lex.get();
                continue;
            }
            break;
        }
        if (!saw_coeff && !saw_var) throw ParseError("empty term");
        result = result + from_monomial(table, m, coeff);
    }
    return result;
}

// elementary symmetric polynomial of degree k in the listed variables
inline MultiPoly elementary_symmetric(const VarTablePtr& table, int k,
                                      const std::vector<int>& vars) {
    if (k < 0 || size_t(k) > vars.size())
        throw ArgumentError("elementary_symmetric: k out of range");
    for (int v : vars)
        if (v < 0 || size_t(v) >= table->size())
            throw ArgumentError("elementary_symmetric: bad variable index");
    // dynamic programming over prefix products: e_k(x1..xn)
    std::vector<MultiPoly> ek(size_t(k) + 1, MultiPoly::zero(table));
    ek[0] = MultiPoly::constant(table, Rational(1));
    for (size_t n = 0; n < vars.size(); ++n) {
        MultiPoly xv = MultiPoly::variable(table, vars[n]);
        for (int j = std::min<int>(k, int(n) + 1); j >= 1; --j)
            ek[j] = ek[j] + ek[j - 1] * xv;
    }
    return ek[k];
}

} // namespace chowbench

#endif
