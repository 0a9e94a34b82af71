#include <catch_amalgamated.hpp>

#include "chowbench/echelon.hpp"

using namespace chowbench;

TEST_CASE("degree slice enumerates monomials in decreasing graded-lex order") {
    auto t = make_table({"x", "y", "c"}, {1, 1, 2});
    DegreeSlice s(t, 2);
    // degree-2 monomials: x^2 > x y > y^2 > c
    REQUIRE(s.size() == 4);
    CHECK(s.monomial(0).e == std::vector<int32_t>{2, 0, 0});
    CHECK(s.monomial(1).e == std::vector<int32_t>{1, 1, 0});
    CHECK(s.monomial(2).e == std::vector<int32_t>{0, 2, 0});
    CHECK(s.monomial(3).e == std::vector<int32_t>{0, 0, 1});
    for (size_t i = 0; i + 1 < s.size(); ++i)
        CHECK(grlex_compare(s.monomial(int32_t(i)), s.monomial(int32_t(i + 1)), *t) > 0);
    CHECK(s.index_of(s.monomial(2)) == 2);
}

TEST_CASE("echelon rank and membership") {
    SliceEchelon e(4);
    CHECK(e.insert({{0, 1}, {1, 2}}));
    CHECK(e.insert({{1, 1}, {3, 5}}));
    // dependent row: 2*(first) + (second) - matches span
    CHECK_FALSE(e.insert({{0, 2}, {1, 5}, {3, 5}}));
    CHECK(e.rank() == 2);
    CHECK(e.full() == false);

    // normal form of a vector already in the span is zero
    SparseRowQ v{{0, Rational(1)}, {1, Rational(2)}};
    CHECK(e.reduces_to_zero(v));
    // a fresh direction reduces to a nonzero vector on free columns only
    SparseRowQ w{{2, Rational(1)}, {1, Rational(1)}};
    auto nf = e.reduce(w);
    REQUIRE_FALSE(nf.empty());
    for (auto& [col, val] : nf) CHECK((col == 2 || col == 3));
    CHECK(e.free_columns() == std::vector<int32_t>{2, 3});
    // eliminating z via col-1 pivot {1:1, 3:5} sends w to (0,0,1,-5)
    REQUIRE(nf.size() == 2);
    CHECK(nf[0] == std::pair<int32_t, Rational>{2, Rational(1)});
    CHECK(nf[1] == std::pair<int32_t, Rational>{3, Rational(-5)});
}

TEST_CASE("normal form is linear and idempotent") {
    SliceEchelon e(5);
    e.insert({{0, 2}, {2, 3}, {4, 1}});
    e.insert({{1, 1}, {2, -1}});
    e.insert({{2, 5}, {3, 1}, {4, 2}});
    auto add = [](const SparseRowQ& a, const SparseRowQ& b) {
        std::map<int32_t, Rational> m(a.begin(), a.end());
        for (auto& [c, v] : b) {
            m[c] += v;
            if (m[c].is_zero()) m.erase(c);
        }
        return SparseRowQ(m.begin(), m.end());
    };
    SparseRowQ x{{0, Rational(1)}, {3, Rational(2)}};
    SparseRowQ y{{1, Rational(1, 2)}, {4, Rational(-3)}};
    CHECK(e.reduce(add(x, y)) == add(e.reduce(x), e.reduce(y)));
    CHECK(e.reduce(e.reduce(x)) == e.reduce(x));
}

TEST_CASE("content stripping normalizes pivot rows") {
    SliceEchelon e(3);
    e.insert({{0, -6}, {1, 9}});
    const auto& row = e.pivot_rows().begin()->second;
    CHECK(row[0].second == 2);  // sign flipped, content 3 removed
    CHECK(row[1].second == -3);
}

TEST_CASE("dense rank oracle") {
    std::vector<std::vector<Rational>> m{
        {Rational(1), Rational(2), Rational(3)},
        {Rational(2), Rational(4), Rational(6)},
        {Rational(0), Rational(1), Rational(1)},
    };
    CHECK(dense_rank(m) == 2);
    CHECK(dense_rank({{Rational(0)}}) == 0);
}

TEST_CASE("poly to row conversion clears denominators") {
    auto t = make_table({"x", "y"}, {1, 1});
    auto p = MultiPoly::variable(t, "x").scaled(Rational(1, 2)) +
             MultiPoly::variable(t, "y").scaled(Rational(1, 3));
    DegreeSlice s(t, 1);
    auto row = poly_to_int_row(p, s);
    REQUIRE(row.size() == 2);
    CHECK(row[0].second == 3);
    CHECK(row[1].second == 2);
}
