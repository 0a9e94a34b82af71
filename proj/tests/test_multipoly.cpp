#include <catch_amalgamated.hpp>

#include <random>

#include "chowbench/multipoly.hpp"

using namespace chowbench;

namespace {

VarTablePtr zc_table() {
    return make_table({"z1", "z2", "z3", "z4", "z5", "z6", "z7", "c2", "c3"},
                      {1, 1, 1, 1, 1, 1, 1, 2, 3});
}

MultiPoly rnd_poly(const VarTablePtr& t, std::mt19937& rng, int max_terms = 5) {
    std::uniform_int_distribution<int> nterms(0, max_terms), exp(0, 2), coef(-4, 4);
    MultiPoly p(t);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Monomial m(t->size());
        for (size_t v = 0; v < t->size(); ++v) m.e[v] = exp(rng);
        p = p + MultiPoly::from_monomial(t, m, Rational(coef(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("vartable validation") {
    CHECK_THROWS_AS(make_table({"a", "a"}, {1, 1}), ArgumentError);
    CHECK_THROWS_AS(make_table({"a", "b"}, {1, 0}), ArgumentError);
    CHECK_THROWS_AS(make_table({"a"}, {1, 2}), ArgumentError);
    auto t = zc_table();
    CHECK(t->index_of("c2") == 7);
    CHECK(t->index_of("nope") == -1);
    CHECK(t->weight(8) == 3);
}

TEST_CASE("difference of squares") {
    auto t = zc_table();
    auto z1 = MultiPoly::variable(t, "z1");
    auto z2 = MultiPoly::variable(t, "z2");
    CHECK((z1 + z2) * (z1 - z2) == z1 * z1 - z2 * z2);
}

TEST_CASE("multiplicative identity") {
    auto t = zc_table();
    std::mt19937 rng(7);
    auto p = rnd_poly(t, rng);
    CHECK(p * MultiPoly::constant(t, Rational(1)) == p);
}

TEST_CASE("mismatched tables is a structural error") {
    auto t = zc_table();
    auto u = make_table({"x"}, {1});
    CHECK_THROWS_AS(MultiPoly::variable(t, "z1") * MultiPoly::variable(u, "x"),
                    StructuralError);
}

TEST_CASE("ring axioms on random triples") {
    auto t = zc_table();
    std::mt19937 rng(20240815);
    for (int i = 0; i < 1000; ++i) {
        auto a = rnd_poly(t, rng), b = rnd_poly(t, rng), c = rnd_poly(t, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
    }
}

TEST_CASE("grading: homogeneous products have summed degree") {
    auto t = zc_table();
    std::mt19937 rng(99);
    int checked = 0;
    while (checked < 200) {
        auto a = rnd_poly(t, rng), b = rnd_poly(t, rng);
        if (a.is_zero() || b.is_zero()) continue;
        auto ah = a.homogeneous_component(a.degree());
        auto bh = b.homogeneous_component(b.degree());
        auto prod = ah * bh;
        REQUIRE(prod.is_homogeneous());
        if (!prod.is_zero()) CHECK(prod.degree() == ah.degree() + bh.degree());
        ++checked;
    }
}

TEST_CASE("elementary symmetric") {
    auto t = zc_table();
    // sigma_0 = 1
    CHECK(elementary_symmetric(t, 0, {0, 1, 2}) == MultiPoly::constant(t, Rational(1)));
    // sigma_1(z1..z5)
    auto s1 = elementary_symmetric(t, 1, {0, 1, 2, 3, 4});
    MultiPoly expect(t);
    for (int i = 0; i < 5; ++i) expect = expect + MultiPoly::variable(t, i);
    CHECK(s1 == expect);
    // sigma_3(z1,z2,z3) = z1 z2 z3; term count C(3,3) = 1
    auto s3 = elementary_symmetric(t, 3, {0, 1, 2});
    CHECK(s3.term_count() == size_t(binomial(3, 3).get_ui()));
    CHECK(s3 == MultiPoly::variable(t, 0) * MultiPoly::variable(t, 1) *
                    MultiPoly::variable(t, 2));
    // term counts match the binomial oracle
    for (int k = 0; k <= 5; ++k)
        CHECK(elementary_symmetric(t, k, {0, 1, 2, 3, 4}).term_count() ==
              size_t(binomial(5, unsigned(k)).get_ui()));
    CHECK_THROWS_AS(elementary_symmetric(t, 4, {0, 1, 2}), ArgumentError);
}

TEST_CASE("substitution") {
    auto t = zc_table();
    auto z1 = MultiPoly::variable(t, "z1");
    auto z2 = MultiPoly::variable(t, "z2");
    // substitute(z1^2, {z1 -> z2}) = z2^2
    CHECK((z1 * z1).substitute({{0, z2}}, t) == z2 * z2);
    // identity substitution
    std::mt19937 rng(3);
    auto p = rnd_poly(t, rng);
    std::map<int, MultiPoly> idmap;
    for (size_t i = 0; i < t->size(); ++i) idmap[int(i)] = MultiPoly::variable(t, int(i));
    CHECK(p.substitute(idmap, t) == p);
    // total substitution with a hole
    CHECK_THROWS_AS((z1 * z2).substitute({{0, z2}}, t, /*total=*/true), ArgumentError);
}

TEST_CASE("exact division") {
    auto t = zc_table();
    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        auto a = rnd_poly(t, rng), b = rnd_poly(t, rng);
        if (b.is_zero()) continue;
        auto q = (a * b).divide_exact(b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
    auto z1 = MultiPoly::variable(t, "z1");
    auto z2 = MultiPoly::variable(t, "z2");
    CHECK_FALSE((z1 * z1 + z2).divide_exact(z1 + z2).has_value());
}

TEST_CASE("canonical text form round trip") {
    auto t = zc_table();
    auto c2 = MultiPoly::variable(t, "c2");
    auto c3 = MultiPoly::variable(t, "c3");
    auto z1 = MultiPoly::variable(t, "z1");
    auto p = z1 * z1 * c2.scaled(Rational(3)) - c3.scaled(Rational(1, 2));
    CHECK(p.str() == "3*z1^2*c2 - 1/2*c3");
    CHECK(MultiPoly::parse(t, p.str()) == p);
    CHECK(MultiPoly::parse(t, "0") == MultiPoly::zero(t));
    CHECK(MultiPoly::zero(t).str() == "0");
    CHECK((-z1).str() == "-z1");
    CHECK(MultiPoly::parse(t, "-z1 + 5") == MultiPoly::constant(t, Rational(5)) - z1);

    std::mt19937 rng(23);
    for (int i = 0; i < 200; ++i) {
        auto p2 = rnd_poly(t, rng);
        auto s = p2.str();
        CHECK(MultiPoly::parse(t, s) == p2);
        CHECK(MultiPoly::parse(t, s).str() == s);
    }
    CHECK_THROWS_AS(MultiPoly::parse(t, "z9 + 1"), ParseError);
}

TEST_CASE("graded-lex term order") {
    auto t = zc_table();
    // z1^3 > z1*c2 > c3 within degree 3 (z1 > ... > z7 > c2 > c3)
    auto p = MultiPoly::parse(t, "c3 + z1*c2 + z1^3");
    CHECK(p.str() == "z1^3 + z1*c2 + c3");
    CHECK(p.leading_term().first.e[0] == 3);
}
