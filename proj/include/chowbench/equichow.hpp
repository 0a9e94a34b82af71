#ifndef CHOWBENCH_EQUICHOW_HPP
#define CHOWBENCH_EQUICHOW_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "chowbench/graded_quotient.hpp"
#include "chowbench/multipoly.hpp"

// Brion's pipeline for the Chow ring of (P^2)^7 // SL(3): torus-equivariant
// classes in eps/z variables, anti-symmetrization against the harmonic basis,
// and the resulting ideal presenting the Campedelli moduli ring.

namespace chowbench {
namespace equichow {

// torus-equivariant ring: eps2 is eliminated via eps0+eps1+eps2 = 0
inline const VarTablePtr& torus_table() {
    static VarTablePtr t = make_table({"eps0", "eps1", "z1", "z2", "z3", "z4", "z5", "z6", "z7"},
                                      {1, 1, 1, 1, 1, 1, 1, 1, 1});
    return t;
}

inline const VarTablePtr& campedelli_table() {
    static VarTablePtr t = make_table({"z1", "z2", "z3", "z4", "z5", "z6", "z7", "c2", "c3"},
                                      {1, 1, 1, 1, 1, 1, 1, 2, 3});
    return t;
}

inline MultiPoly eps0() { return MultiPoly::variable(torus_table(), 0); }
inline MultiPoly eps1() { return MultiPoly::variable(torus_table(), 1); }
inline MultiPoly eps2() { return -eps0() - eps1(); }
inline MultiPoly torus_z(int i) {  // i in 1..7
    if (i < 1 || i > 7) throw ArgumentError("torus_z: index out of range");
    return MultiPoly::variable(torus_table(), 1 + i);
}

// D = (eps0-eps1)(eps1-eps2)(eps2-eps0)
inline const MultiPoly& discriminant() {
    static MultiPoly d = (eps0() - eps1()) * (eps1() - eps2()) * (eps2() - eps0());
    return d;
}

struct WeylElement {
    MultiPoly image0, image1;  // images of eps0, eps1 after re-elimination
    int sign;
    std::string name;
};

// S3 permuting (eps0, eps1, eps2), written in the eliminated coordinates
inline const std::vector<WeylElement>& weyl_group() {
    static std::vector<WeylElement> w = [] {
        std::vector<WeylElement> v;
        v.push_back({eps0(), eps1(), +1, "id"});
        v.push_back({eps1(), eps0(), -1, "(01)"});
        v.push_back({eps2(), eps1(), -1, "(02)"});
        v.push_back({eps0(), eps2(), -1, "(12)"});
        v.push_back({eps1(), eps2(), +1, "(012)"});
        v.push_back({eps2(), eps0(), +1, "(021)"});
        return v;
    }();
    return w;
}

inline MultiPoly apply_weyl(const MultiPoly& f, const WeylElement& w) {
    return f.substitute({{0, w.image0}, {1, w.image1}}, torus_table());
}

// the six-element additive basis of the harmonic module
inline std::vector<MultiPoly> harmonic_basis() {
    auto e0 = eps0(), e1 = eps1(), e2 = eps2();
    return {MultiPoly::constant(torus_table(), Rational(1)),
            e0,
            e1,
            e0 * e0 - e1 * e1,
            e1 * e1 - e2 * e2,
            discriminant()};
}

// alternative index choices; spans the same module (checked in tests)
inline std::vector<MultiPoly> harmonic_basis_alt() {
    auto e0 = eps0(), e1 = eps1(), e2 = eps2();
    return {MultiPoly::constant(torus_table(), Rational(1)),
            e1,
            e2,
            e1 * e1 - e2 * e2,
            e2 * e2 - e0 * e0,
            discriminant()};
}

// c2 = sigma_2(eps), c3 = sigma_3(eps) in the eliminated coordinates
inline const MultiPoly& c2_in_eps() {
    static MultiPoly p = eps0() * eps1() + eps1() * eps2() + eps2() * eps0();
    return p;
}
inline const MultiPoly& c3_in_eps() {
    static MultiPoly p = eps0() * eps1() * eps2();
    return p;
}

// Rewrite a W-invariant polynomial in (eps0, eps1, z) as a polynomial in
// (z, c2, c3) by greedy leading-monomial matching against c2^a * c3^b.
inline MultiPoly rewrite_invariant(const MultiPoly& p) {
    const auto& src = torus_table();
    const auto& dst = campedelli_table();
    // coefficient polys in eps, keyed by the z-part
    struct EpsTerm {
        int32_t a, b;  // eps0, eps1 exponents
        Rational c;
    };
    std::map<std::vector<int32_t>, std::map<std::pair<int32_t, int32_t>, Rational>> groups;
    for (const auto& [m, c] : p.terms()) {
        std::vector<int32_t> zpart(m.e.begin() + 2, m.e.end());
        groups[zpart][{m.e[0], m.e[1]}] += c;
    }
    // cache of expanded c2^a c3^b in eps coordinates
    static std::map<std::pair<int, int>, MultiPoly> power_cache;
    auto power = [&](int a, int b) -> const MultiPoly& {
        auto key = std::make_pair(a, b);
        auto it = power_cache.find(key);
        if (it == power_cache.end())
            it = power_cache.emplace(key, c2_in_eps().pow(a) * c3_in_eps().pow(b)).first;
        return it->second;
    };

    MultiPoly out(dst);
    for (auto& [zpart, coeffs] : groups) {
        // drop exact zeros introduced by the accumulation above
        for (auto it = coeffs.begin(); it != coeffs.end();)
            it = it->second.is_zero() ? coeffs.erase(it) : std::next(it);
        while (!coeffs.empty()) {
            // lex-leading eps monomial
            auto lead = std::max_element(coeffs.begin(), coeffs.end(),
                                         [](const auto& x, const auto& y) {
                                             return x.first < y.first;
                                         });
            auto [a, b] = lead->first;
            Rational c = lead->second;
            if (a < 2 * b || (a - 2 * b) % 2 != 0)
                throw InvariantViolation("rewrite_invariant: input is not W-invariant (lead eps0^" +
                                         std::to_string(a) + " eps1^" + std::to_string(b) + ")");
            int beta = b;
            int alpha = (a - 2 * b) / 2;
            // c2^alpha c3^beta has lex-leading coefficient (-1)^(alpha+beta)
            Rational coeff = ((alpha + beta) % 2 == 0) ? c : -c;
            for (const auto& [m, v] : power(alpha, beta).terms()) {
                auto key = std::make_pair(m.e[0], m.e[1]);
                coeffs[key] -= coeff * v;
                if (coeffs[key].is_zero()) coeffs.erase(key);
            }
            Monomial mono(dst->size());
            for (size_t i = 0; i < zpart.size(); ++i) mono.e[i] = zpart[i];
            mono.e[7] = alpha;
            mono.e[8] = beta;
            out = out + MultiPoly::from_monomial(dst, mono, coeff);
        }
    }
    return out;
}

// p(f) = D^{-1} sum_w sign(w) w(f), rewritten in (z, c2, c3).
// The alternating sum is always divisible by D for polynomial input.
inline MultiPoly antisymmetrize(const MultiPoly& f) {
    if (!same_table(f.table(), torus_table()))
        throw StructuralError("antisymmetrize: input not over the torus table");
    MultiPoly alt(torus_table());
    for (const auto& w : weyl_group()) {
        MultiPoly img = apply_weyl(f, w);
        alt = alt + (w.sign > 0 ? img : -img);
    }
    if (alt.is_zero()) return MultiPoly::zero(campedelli_table());
    auto q = alt.divide_exact(discriminant());
    if (!q) throw InvariantViolation("antisymmetrize: alternating sum not divisible by D");
    return rewrite_invariant(*q);
}

// the seven basic relations z_i^3 + c2 z_i + c3
inline std::vector<MultiPoly> basic_relations() {
    const auto& t = campedelli_table();
    auto c2 = MultiPoly::variable(t, "c2");
    auto c3 = MultiPoly::variable(t, "c3");
    std::vector<MultiPoly> rels;
    for (int i = 0; i < 7; ++i) {
        auto z = MultiPoly::variable(t, i);
        rels.push_back(z.pow(3) + c2 * z + c3);
    }
    return rels;
}

// normal form modulo the basic relations: z_i^3 -> -c2 z_i - c3
inline MultiPoly reduce_basic(const MultiPoly& p) {
    const auto& t = campedelli_table();
    if (!same_table(p.table(), t))
        throw StructuralError("reduce_basic: polynomial over a different table");
    MultiPoly work = p;
    for (;;) {
        MultiPoly next(t);
        bool changed = false;
        for (const auto& [m, c] : work.terms()) {
            int i = -1;
            for (int v = 0; v < 7; ++v)
                if (m.e[v] >= 3) {
                    i = v;
                    break;
                }
            if (i < 0) {
                next = next + MultiPoly::from_monomial(t, m, c);
                continue;
            }
            changed = true;
            Monomial base = m;
            base.e[i] -= 3;
            Monomial m1 = base;  // c2 z_i
            m1.e[i] += 1;
            m1.e[7] += 1;
            Monomial m2 = base;  // c3
            m2.e[8] += 1;
            next = next + MultiPoly::from_monomial(t, m1, -c) + MultiPoly::from_monomial(t, m2, -c);
        }
        work = next;
        if (!changed) return work;
    }
}

// ---- maximal unstable sets ----

// three coincident lines: prod_{i in T} (z_i + eps1)(z_i + eps2), |T| = 3
inline MultiPoly coincident_rep(const std::vector<int>& triple) {
    MultiPoly f = MultiPoly::constant(torus_table(), Rational(1));
    for (int i : triple) f = f * (torus_z(i) + eps1()) * (torus_z(i) + eps2());
    return f;
}

// five concurrent lines: prod_{i in T} (z_i + eps0), |T| = 5
inline MultiPoly concurrent_rep(const std::vector<int>& five) {
    MultiPoly f = MultiPoly::constant(torus_table(), Rational(1));
    for (int i : five) f = f * (torus_z(i) + eps0());
    return f;
}

inline std::vector<std::vector<int>> index_subsets(int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(size_t(k));
    for (int i = 0; i < k; ++i) idx[size_t(i)] = i + 1;
    for (;;) {
        out.push_back(idx);
        int pos = k - 1;
        while (pos >= 0 && idx[size_t(pos)] == 7 - (k - 1 - pos)) --pos;
        if (pos < 0) break;
        ++idx[size_t(pos)];
        for (int j = pos + 1; j < k; ++j) idx[size_t(j)] = idx[size_t(j - 1)] + 1;
    }
    return out;
}

struct UnstableGenerators {
    MultiPoly coincident;                        // representative, T = {1,2,3}
    MultiPoly concurrent;                        // representative, T = {1,...,5}
    std::vector<std::vector<int>> coincident_index_orbit;  // 35 triples
    std::vector<std::vector<int>> concurrent_index_orbit;  // 21 five-subsets
    size_t coincident_full_orbit_size;  // under S3 x S7
    size_t concurrent_full_orbit_size;
};

inline UnstableGenerators unstable_generators() {
    UnstableGenerators u{coincident_rep({1, 2, 3}),
                         concurrent_rep({1, 2, 3, 4, 5}),
                         index_subsets(3),
                         index_subsets(5),
                         0,
                         0};
    // S3 moves the eps-pair {1,2} to one of 3 unordered pairs; eps0 to one of 3
    u.coincident_full_orbit_size = 3 * u.coincident_index_orbit.size();
    u.concurrent_full_orbit_size = 3 * u.concurrent_index_orbit.size();
    return u;
}

struct IdealGenerator {
    MultiPoly poly;           // primitive integer coefficients, positive leading
    std::string provenance;   // which unstable family x which harmonic element
};

// canonical scaling: integer coefficients, content 1, positive leading coefficient
inline MultiPoly make_primitive(const MultiPoly& p) {
    if (p.is_zero()) return p;
    Int lcm = 1;
    for (const auto& [m, c] : p.terms())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
    Int gcd = 0;
    for (const auto& [m, c] : p.terms()) {
        Int n = c.numerator() * (lcm / c.denominator());
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rational scale(lcm, gcd);
    if (p.leading_term().second.sign() < 0) scale = -scale;
    return p.scaled(scale);
}

// The ideal p(I): antisymmetrize every product f*g over the S7-closed unstable
// family representatives and the harmonic basis, reduce modulo the basic
// relations, drop zeros and duplicates. S3-images of f are omitted because p
// alternates over S3 and the harmonic basis is S3-stable.
inline std::vector<IdealGenerator> build_quotient_ideal(bool alt_harmonic = false) {
    auto gs = alt_harmonic ? harmonic_basis_alt() : harmonic_basis();
    auto u = unstable_generators();

    std::vector<IdealGenerator> out;
    std::vector<std::string> seen;
    auto emit = [&](const MultiPoly& f, const std::string& tag) {
        for (size_t gi = 0; gi < gs.size(); ++gi) {
            MultiPoly h = antisymmetrize(f * gs[gi]);
            if (h.is_zero()) continue;
            h = make_primitive(reduce_basic(h));
            if (h.is_zero()) continue;
            std::string key = h.str();
            if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
            seen.push_back(key);
            out.push_back({h, tag + " x H[" + std::to_string(gi) + "]"});
        }
    };
    auto set_str = [](const std::vector<int>& v) {
        std::string s = "{";
        for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + "}";
    };
    for (const auto& T : u.coincident_index_orbit) emit(coincident_rep(T), "coincident" + set_str(T));
    for (const auto& T : u.concurrent_index_orbit) emit(concurrent_rep(T), "concurrent" + set_str(T));

    std::sort(out.begin(), out.end(), [](const IdealGenerator& a, const IdealGenerator& b) {
        int64_t da = a.poly.degree(), db = b.poly.degree();
        if (da != db) return da < db;
        return a.poly.str() < b.poly.str();
    });
    return out;
}

// A*((P^2)^7 // SL(3)) = Q[z1..z7, c2, c3] / (basic relations + p(I));
// memoized singleton
inline const std::shared_ptr<GradedQuotient>& campedelli_ring() {
    static std::shared_ptr<GradedQuotient> ring = [] {
        std::vector<MultiPoly> rels = basic_relations();
        for (auto& g : build_quotient_ideal()) rels.push_back(std::move(g.poly));
        return GradedQuotient::create(campedelli_table(), std::move(rels), /*multiply_cap=*/12);
    }();
    return ring;
}

// ---- the displayed relation families ----

inline std::vector<int> zvars(const std::vector<int>& one_based) {
    std::vector<int> v;
    for (int i : one_based) v.push_back(i - 1);
    return v;
}

inline MultiPoly relation_type1(int i) {  // i in 1..7
    const auto& t = campedelli_table();
    auto z = MultiPoly::variable(t, i - 1);
    return z.pow(3) + MultiPoly::variable(t, "c2") * z + MultiPoly::variable(t, "c3");
}

inline MultiPoly relation_type2(const std::vector<int>& five) {
    const auto& t = campedelli_table();
    auto vars = zvars(five);
    return elementary_symmetric(t, 3, vars) -
           elementary_symmetric(t, 1, vars) * MultiPoly::variable(t, "c2") +
           MultiPoly::variable(t, "c3");
}

inline MultiPoly relation_type3(const std::vector<int>& five) {
    const auto& t = campedelli_table();
    auto vars = zvars(five);
    auto c2 = MultiPoly::variable(t, "c2");
    return elementary_symmetric(t, 4, vars) - elementary_symmetric(t, 2, vars) * c2 + c2 * c2 +
           elementary_symmetric(t, 1, vars) * MultiPoly::variable(t, "c3");
}

// last_exponent = 2 gives the homogeneous variant; 3 reproduces the printed text
inline MultiPoly relation_type4(const std::vector<int>& triple, int last_exponent = 2) {
    const auto& t = campedelli_table();
    auto zi = MultiPoly::variable(t, triple[0] - 1);
    auto zj = MultiPoly::variable(t, triple[1] - 1);
    auto zk = MultiPoly::variable(t, triple[2] - 1);
    auto c2 = MultiPoly::variable(t, "c2");
    auto c3 = MultiPoly::variable(t, "c3");
    auto sq = [](const MultiPoly& p) { return p * p; };
    return sq(zi) * sq(zj) + sq(zj) * sq(zk) + sq(zk) * sq(zi) +
           (zi + zj + zk) * (zi * zj * zk - c3) +
           (sq(zi) + sq(zj) + zk.pow(unsigned(last_exponent))) * c2 + c2 * c2;
}

inline MultiPoly c3_relation() {
    const auto& t = campedelli_table();
    std::vector<int> all{0, 1, 2, 3, 4, 5, 6};
    auto s1 = elementary_symmetric(t, 1, all);
    auto s2 = elementary_symmetric(t, 2, all);
    auto c2 = MultiPoly::variable(t, "c2");
    auto c3 = MultiPoly::variable(t, "c3");
    return c3 - (s1.pow(3).scaled(Rational(2)) - s2 * s1 * MultiPoly::constant(t, Rational(6)) +
                 c2 * s1 * MultiPoly::constant(t, Rational(17)))
                    .scaled(Rational(1, 7));
}

inline std::vector<MultiPoly> family_type1() {
    std::vector<MultiPoly> v;
    for (int i = 1; i <= 7; ++i) v.push_back(relation_type1(i));
    return v;
}
inline std::vector<MultiPoly> family_type2() {
    std::vector<MultiPoly> v;
    for (const auto& T : index_subsets(5)) v.push_back(relation_type2(T));
    return v;
}
inline std::vector<MultiPoly> family_type3() {
    std::vector<MultiPoly> v;
    for (const auto& T : index_subsets(5)) v.push_back(relation_type3(T));
    return v;
}
inline std::vector<MultiPoly> family_type4(int last_exponent = 2) {
    std::vector<MultiPoly> v;
    for (const auto& T : index_subsets(3)) v.push_back(relation_type4(T, last_exponent));
    return v;
}

// z -> -z image, for the sign-normalization probe
inline MultiPoly negate_z(const MultiPoly& p) {
    const auto& t = campedelli_table();
    MultiPoly out(t);
    for (const auto& [m, c] : p.terms()) {
        int zdeg = 0;
        for (int v = 0; v < 7; ++v) zdeg += m.e[v];
        out = out + MultiPoly::from_monomial(t, m, (zdeg % 2) ? -c : c);
    }
    return out;
}

struct SignNormalization {
    bool printed_is_member = false;
    bool negated_is_member = false;
    std::string verdict;  // "identity", "z-negated", or "ambiguous"
};

// Detect whether the pipeline's ideal matches the displayed relations as
// printed or only after z -> -z.
inline SignNormalization sign_normalization() {
    const auto& R = campedelli_ring();
    MultiPoly probe = relation_type2({1, 2, 3, 4, 5});
    SignNormalization s;
    s.printed_is_member = R->ideal_contains(probe);
    s.negated_is_member = R->ideal_contains(negate_z(probe));
    if (s.printed_is_member && !s.negated_is_member)
        s.verdict = "identity";
    else if (!s.printed_is_member && s.negated_is_member)
        s.verdict = "z-negated";
    else
        s.verdict = "ambiguous";
    return s;
}

} // namespace equichow
} // namespace chowbench

#endif
