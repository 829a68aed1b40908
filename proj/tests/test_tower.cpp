#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qct/tower.hpp"

using namespace qct;

TEST_CASE("tower construction and independence") {
    FieldId g = FieldId::Gauss;
    Tower t(g, {make_elem(g, 2), make_elem(g, -7)});
    CHECK(t.depth() == 2);
    CHECK_THROWS_AS(Tower(g, {make_elem(g, 2), make_elem(g, 8)}), qct_error);  // 2*8 = 16 square

    // span reduces dependencies instead of throwing
    Tower s = Tower::span(g, {make_elem(g, 2), make_elem(g, 8), make_elem(g, 3)});
    CHECK(s.depth() == 2);

    // over Q(i), -2 and 2 are the same class (i^2 = -1)
    Tower s2 = Tower::span(g, {make_elem(g, 2), make_elem(g, -2)});
    CHECK(s2.depth() == 1);

    // over Q(sqrt(-3)) they differ
    FieldId e = FieldId::Eisenstein;
    Tower s3 = Tower::span(e, {make_elem(e, 2), make_elem(e, -2)});
    CHECK(s3.depth() == 2);

    CHECK_THROWS_AS(
        Tower::span(g, {make_elem(g, 2), make_elem(g, 3), make_elem(g, 5), make_elem(g, 7)}),
        qct_error);
}

TEST_CASE("tower arithmetic") {
    FieldId g = FieldId::Gauss;
    // over Q(i) the class of 2 is represented by i (2 = -i (1+i)^2)
    Tower t(g, {make_elem(g, 2), make_elem(g, 5)});
    TowerElem r2 = *sqrt_of_K_elem(t, make_elem(g, 2));
    TowerElem r5 = *sqrt_of_K_elem(t, make_elem(g, 5));
    CHECK(r2 * r2 == TowerElem::from_K(t, make_elem(g, 2)));
    CHECK(r5 * r5 == TowerElem::from_K(t, make_elem(g, 5)));
    TowerElem r10 = r2 * r5;
    CHECK(r10 * r10 == TowerElem::from_K(t, make_elem(g, 10)));

    TowerElem z = r2 + r5 + TowerElem::from_K(t, make_elem(g, 0, 1));
    CHECK(z * z.inv() == TowerElem::from_K(t, make_elem(g, 1)));
    CHECK((z - z).is_zero());
    CHECK(z.conj(0).conj(0) == z);
}

TEST_CASE("sqrt in tower") {
    FieldId g = FieldId::Gauss;
    Tower t(g, {make_elem(g, 2), make_elem(g, 5)});
    // sqrt(10) exists: classes of 2 and 5 span the class of 10
    auto w = sqrt_in_tower(TowerElem::from_K(t, make_elem(g, 10)));
    REQUIRE(w.has_value());
    CHECK(*w * *w == TowerElem::from_K(t, make_elem(g, 10)));

    // (1 + sqrt2)^2 = 3 + 2 sqrt2
    TowerElem r2 = *sqrt_of_K_elem(t, make_elem(g, 2));
    TowerElem u = TowerElem::from_K(t, make_elem(g, 3)) + r2 + r2;
    u = (TowerElem::from_K(t, make_elem(g, 1)) + r2) * (TowerElem::from_K(t, make_elem(g, 1)) + r2);
    auto wu = sqrt_in_tower(u);
    REQUIRE(wu.has_value());
    CHECK(*wu * *wu == u);

    // 3 is not a square in Q(i, sqrt2, sqrt5)
    CHECK_FALSE(sqrt_in_tower(TowerElem::from_K(t, make_elem(g, 3))).has_value());

    // depth 3
    Tower t3(g, {make_elem(g, 2), make_elem(g, 5), make_elem(g, -7)});
    TowerElem a = TowerElem::basis(t3, 1, make_elem(g, 1)) +
                  TowerElem::basis(t3, 2, make_elem(g, 2)) +
                  TowerElem::basis(t3, 4, make_elem(g, 0, 1));
    auto sq = a * a;
    auto back = sqrt_in_tower(sq);
    REQUIRE(back.has_value());
    CHECK(*back * *back == sq);
}

TEST_CASE("fourth power witness verifies in its tower") {
    FieldId e = FieldId::Eisenstein;
    auto res = sqrt_is_square_in_F(make_elem(e, -25));
    REQUIRE(res.yes);
    // radicands delivered: -1, 2, 5; u = (1+i)/2 * sqrt2 * sqrt5 has u^4 = -25
    Tower t = Tower::span(e, res.witness_radicands);
    REQUIRE(t.depth() == 3);
    TowerElem i_part = *sqrt_of_K_elem(t, make_elem(e, -1));
    CHECK(i_part * i_part == TowerElem::from_K(t, make_elem(e, -1)));
    TowerElem sqrt2 = *sqrt_of_K_elem(t, make_elem(e, 2));
    TowerElem sqrt5 = *sqrt_of_K_elem(t, make_elem(e, 5));
    TowerElem one = TowerElem::from_K(t, make_elem(e, 1));
    TowerElem two = TowerElem::from_K(t, make_elem(e, 2));
    TowerElem u = (one + i_part) / two * sqrt2 * sqrt5;
    TowerElem u4 = u * u * u * u;
    CHECK(u4 == TowerElem::from_K(t, make_elem(e, -25)));
}

TEST_CASE("embedding into larger towers") {
    FieldId g = FieldId::Gauss;
    Tower small(g, {make_elem(g, 2)});
    Tower big(g, {make_elem(g, 2), make_elem(g, 5)});
    TowerElem x = TowerElem::basis(small, 1, make_elem(g, 3)) +
                  TowerElem::from_K(small, make_elem(g, 1));
    TowerElem y = embed(x, big);
    CHECK(y.coord(0) == make_elem(g, 1));
    CHECK(y.coord(1) == make_elem(g, 3));
    CHECK(y.supported_on(1));
}
