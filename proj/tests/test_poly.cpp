#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qct/poly.hpp"

using namespace qct;

TEST_CASE("poly arithmetic") {
    FieldId g = FieldId::Gauss;
    KPoly p = KPoly::from_longs(g, {1, 2, 1});  // 1 + 2x + x^2
    KPoly q = KPoly::from_longs(g, {1, 1});     // 1 + x
    CHECK((q * q - p).is_zero());
    KPoly d = KPoly::gcd(p, q);
    CHECK(d.degree() == 1);
    CHECK(p.eval(make_elem(g, -1)).is_zero());
    CHECK((p.shifted_arg(make_elem(g, -1)) - KPoly::from_longs(g, {0, 0, 1})).is_zero());
}

TEST_CASE("roots in K, small") {
    FieldId g = FieldId::Gauss;
    // (x^2 + 1)(x - 2): roots -i, i, 2
    KPoly p = KPoly::from_longs(g, {1, 0, 1}) * KPoly::from_longs(g, {-2, 1});
    auto roots = roots_in_K(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == make_elem(g, 0, -1));
    CHECK(roots[1] == make_elem(g, 0, 1));
    CHECK(roots[2] == make_elem(g, 2));

    // rational roots with denominators
    KPoly q = KPoly::from_longs(g, {-1, 2});  // 2x - 1
    auto r2 = roots_in_K(q);
    REQUIRE(r2.size() == 1);
    CHECK(r2[0] == elem_from_rat(g, Rat(1, 2)));

    // no roots
    CHECK(roots_in_K(KPoly::from_longs(g, {2, 0, 0, 1})).empty());  // x^3 + 2
}

TEST_CASE("roots in K, larger coefficients and multiplicity") {
    FieldId e = FieldId::Eisenstein;
    FieldElem w(e, Rat(-1, 2), Rat(1, 2));  // omega, a half-integer root
    KPoly p = KPoly::linear_root(w) * KPoly::linear_root(w) *
              KPoly::linear_root(make_elem(e, 7)) * KPoly::from_longs(e, {1, 0, 1});
    auto roots = roots_in_K(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == w);
    CHECK(roots[1] == make_elem(e, 7));
}

TEST_CASE("roots in quadratic extension") {
    FieldId g = FieldId::Gauss;
    // x^2 - 2: roots +-sqrt(2) in K(sqrt 2)
    KPoly p = KPoly::from_longs(g, {-2, 0, 1});
    auto roots = roots_in_quadext(p, make_elem(g, 2));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].u.is_zero());
    CHECK(roots[0].v * roots[0].v == make_elem(g, 1));

    // (x - (1+sqrt(-7)))(x - (1-sqrt(-7))) = x^2 - 2x + 8 over Q(i)
    KPoly q = KPoly::from_longs(g, {8, -2, 1});
    auto r7 = roots_in_quadext(q, make_elem(g, -7));
    REQUIRE(r7.size() == 2);
    CHECK(r7[0].u == make_elem(g, 1));

    // wrong radicand: no roots
    CHECK(roots_in_quadext(q, make_elem(g, -3)).empty());
    // roots already in K are not reported
    CHECK(roots_in_quadext(KPoly::from_longs(g, {-1, 0, 1}), make_elem(g, 5)).empty());
}

TEST_CASE("resultant") {
    FieldId g = FieldId::Gauss;
    // res(x^2 - 1, x - 2) = value of x^2-1 at 2 = 3
    KPoly a = KPoly::from_longs(g, {-1, 0, 1});
    KPoly b = KPoly::from_longs(g, {-2, 1});
    CHECK(resultant(a, b) == make_elem(g, 3));
    // res(u^2-u+1, u^6+u^5-6u^4-3u^3+14u^2-7u+1) = 112
    KPoly gg = KPoly::from_longs(g, {1, -1, 1});
    KPoly hh = KPoly::from_longs(g, {1, -7, 14, -3, -6, 1, 1});
    CHECK(resultant(gg, hh) == make_elem(g, 112));
}
