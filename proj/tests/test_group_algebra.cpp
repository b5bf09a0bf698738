#include <catch2/catch_amalgamated.hpp>

#include "skewjue/group_algebra.hpp"
#include "skewjue/hurwitz.hpp"
#include "skewjue/partition.hpp"
#include "skewjue/permutation.hpp"

using namespace skewjue;

TEST_CASE("eps polynomial arithmetic truncates", "[group_algebra]") {
    EpsPoly a(1), b(1);
    a.set_coeff(0, 1);
    a.set_coeff(1, 1);  // 1 + eps
    b.set_coeff(0, 1);
    b.set_coeff(1, -1);  // 1 - eps
    EpsPoly prod = a * b;
    CHECK(prod.coeff(0) == 1);
    CHECK(prod.coeff(1) == 0);  // eps^2 term dropped by truncation

    EpsPoly c(2);
    c.set_coeff(2, ExactScalar(1, 3));
    c += c;
    CHECK(c.coeff(2) == ExactScalar(2, 3));
    CHECK_FALSE(c.is_zero());
    CHECK_THROWS_AS(a * c, std::invalid_argument);
}

TEST_CASE("jucys murphy elements", "[group_algebra]") {
    auto j1 = jm_element(3, 1, 0);
    for_each_permutation(3, [&](const Permutation& w) { CHECK(j1.coeff(w).is_zero()); });

    auto j2 = jm_element(3, 2, 0);
    CHECK(j2.coeff(Permutation::transposition(3, 0, 1)).coeff(0) == 1);
    CHECK(j2.coeff(Permutation(3)).is_zero());

    auto j3 = jm_element(3, 3, 0);
    CHECK(j3.coeff(Permutation::transposition(3, 0, 2)).coeff(0) == 1);
    CHECK(j3.coeff(Permutation::transposition(3, 1, 2)).coeff(0) == 1);
    CHECK(j3.coeff(Permutation::transposition(3, 0, 1)).is_zero());

    CHECK_THROWS_AS(jm_element(3, 4, 0), std::invalid_argument);

    // J_2^2 = Id in C[S_2]
    auto sq = jm_element(2, 2, 0) * jm_element(2, 2, 0);
    CHECK(sq.coeff(Permutation(2)).coeff(0) == 1);
    CHECK(sq.coeff(Permutation::transposition(2, 0, 1)).is_zero());
}

TEST_CASE("identity element is neutral", "[group_algebra]") {
    auto e = GroupAlgebraElement::identity(4, 2);
    auto x = jm_element(4, 3, 2) * jm_element(4, 4, 2);
    CHECK(e * x == x);
    CHECK(x * e == x);
}

TEST_CASE("jm series product is central", "[group_algebra]") {
    // gamma-weighted product lies in the center: coefficients are constant on
    // conjugacy classes
    ExactScalar ca(1, 2), cb(3, 2);
    for (int p : {3, 4}) {
        auto prod = jm_series_product(
            p, 3, [&](int m) { return gamma_series_coeff(ca, cb, m); });
        for_each_permutation(p, [&](const Permutation& w) {
            Permutation rep = class_representative(p, w.cycle_type());
            CHECK(prod.coeff(w) == prod.coeff(rep));
        });
    }
}

TEST_CASE("class expansion of the jm generating product", "[group_algebra]") {
    for (int p = 1; p <= 5; ++p) CHECK(jm_class_expansion_check(p, p));

    // p = 2 explicitly: coefficient of eps^0 is C_(1,1), of eps^1 is C_(2)
    auto prod = jm_series_product(2, 2, [](int m) { return ExactScalar(m <= 1 ? 1 : 0); });
    EpsPoly id_expected(2), swap_expected(2);
    id_expected.set_coeff(0, 1);
    swap_expected.set_coeff(1, 1);
    CHECK(prod.coeff(Permutation(2)) == id_expected);
    CHECK(prod.coeff(Permutation::transposition(2, 0, 1)) == swap_expected);

    // truncation below p still matches the truncated expansion
    CHECK(jm_class_expansion_check(4, 2));
}

TEST_CASE("gamma series coefficients", "[group_algebra]") {
    // gamma(z) = (1+z)(1+2z)/(1+z/2) at c_a=1/2, c_b=3/2
    ExactScalar ca(1, 2), cb(3, 2);
    CHECK(gamma_series_coeff(ca, cb, 0) == 1);
    CHECK(gamma_series_coeff(ca, cb, 1) == ExactScalar(5, 2));
    CHECK(gamma_series_coeff(ca, cb, 2) == ExactScalar(3, 4));
    // generic m: geometric tail ratio -1/(c_a+c_b)
    for (int m = 3; m <= 8; ++m)
        CHECK(gamma_series_coeff(ca, cb, m) ==
              gamma_series_coeff(ca, cb, m - 1) * ExactScalar(-1, 2));
    CHECK_THROWS_AS(gamma_series_coeff(ExactScalar(0), cb, 1), std::invalid_argument);
}
