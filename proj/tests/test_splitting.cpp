#include "doctest.h"

#include "splitq/chords.hpp"
#include "splitq/qcomb.hpp"
#include "splitq/splitting.hpp"

using namespace splitq;

TEST_CASE("sigma_main at m=1") {
    CHECK(sigma_main(simple_type(2)) == UniPoly({1, 1}));          // q+1
    CHECK(sigma_main(regular_nilpotent(2)) == UniPoly({0, 1}));    // q
    CHECK(sigma_main(scalar_type(2)).is_zero());
    CHECK(sigma_main(regular_split_semisimple(2)) == UniPoly({-1, 1}));  // q-1
    CHECK_THROWS_AS(sigma_main(simple_type(3)), OddSize);
}

TEST_CASE("sigma_main at m=2 spot values") {
    CHECK(sigma_main(regular_nilpotent(4)) == UniPoly::monomial(1, 4));  // q^4
    // regular split semisimple: q(q-1)^2(q+2)
    UniPoly expect = UniPoly({0, 1}) * UniPoly({-1, 1}) * UniPoly({-1, 1}) *
                     UniPoly({2, 1});
    CHECK(sigma_main(regular_split_semisimple(4)) == expect);
}

TEST_CASE("sigma_simple_closed") {
    CHECK(sigma_simple_closed(1) == UniPoly({1, 1}));
    CHECK(sigma_simple_closed(2) == UniPoly({0, 0, 1, 0, 1}));  // q^4 + q^2
    CHECK(sigma_simple_closed(3) ==
          UniPoly::monomial(1, 3) * (UniPoly::monomial(1, 6) + UniPoly::monomial(1, 3)));
    for (int m = 1; m <= 6; ++m)
        CHECK(sigma_main(simple_type(2 * m)) == sigma_simple_closed(m));
}

TEST_CASE("count_ab base cases and examples") {
    auto tau = regular_nilpotent(2);
    auto prof = x_polys(tau);
    for (int a = 0; a <= 2; ++a)
        CHECK(count_ab(tau, a, a) == prof.X[static_cast<size_t>(a)]);
    CHECK(count_ab(tau, 1, 0) == UniPoly({0, 1}));  // q
    CHECK_THROWS_AS(count_ab(tau, 1, 2), RangeError);
    CHECK_THROWS_AS(count_ab(tau, 3, 0), RangeError);
}

TEST_CASE("count_ab rows partition the Grassmannian") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& tau : types_of_size(n)) {
            IntersectionCountTable table(tau);
            for (int a = 0; a <= n; ++a) {
                UniPoly row_sum;
                for (int b = 0; b <= a; ++b) row_sum = row_sum + table.at(a, b);
                CHECK(row_sum == gaussian_binomial(n, a));
            }
        }
}

TEST_CASE("central identity: both routes agree on all small even types") {
    for (int n : {2, 4, 6})
        for (const auto& tau : types_of_size(n))
            CHECK(sigma_main(tau) == sigma_via_recurrence(tau));
}

TEST_CASE("recurrence route reproduces the Touchard connection at m=3") {
    UniPoly t3 = touchard_enum(3);
    CHECK(t3 == UniPoly({5, 6, 3, 1}));
    UniPoly expect = UniPoly::monomial(1, 3) * UniPoly({-1, 1}).pow(3) * t3;
    CHECK(sigma_via_recurrence(regular_split_semisimple(6)) == expect);
}

TEST_CASE("split semisimple sigma equals the Touchard product form") {
    for (int m = 1; m <= 6; ++m) {
        UniPoly expect = UniPoly::monomial(1, static_cast<int>(binom2(m))) *
                         UniPoly({-1, 1}).pow(m) * touchard_enum(m);
        CHECK(sigma_main(regular_split_semisimple(2 * m)) == expect);
    }
}

TEST_CASE("vanishing lemma") {
    CHECK(vanishing_check(1, 1, 0));
    CHECK(vanishing_check(3, 2, 1));
    for (int m = 1; m <= 6; ++m)
        for (int i = 1; i <= m; ++i)
            for (int k = 0; k <= m - i; ++k) CHECK(vanishing_check(m, i, k));
    CHECK_THROWS_AS(vanishing_check(2, 3, 0), RangeError);
    CHECK_THROWS_AS(vanishing_check(2, 1, 2), RangeError);
}

TEST_CASE("tau_i X-vectors give zero sigma") {
    CHECK(tau_i_zero_check(1, 1));
    CHECK(tau_i_zero_check(2, 1));
    CHECK(tau_i_zero_check(3, 2));
    for (int m = 1; m <= 6; ++m)
        for (int i = 1; i <= m; ++i) CHECK(tau_i_zero_check(m, i));
}

TEST_CASE("types with a partition of more than m parts have zero sigma") {
    for (int m = 1; m <= 3; ++m)
        for (const auto& tau : types_of_size(2 * m)) {
            bool long_partition = false;
            for (const auto& [d, lambda] : tau.pairs())
                if (lambda.length() > m) long_partition = true;
            if (long_partition) CHECK(sigma_main(tau).is_zero());
        }
}

TEST_CASE("xmatrix determinant") {
    // At m=1 the lone tau_1 row is 2*qbin(2,j): f_{tau_1} = (1+t^0) sum qbin(2,k) t^k.
    CHECK(xmatrix_determinant(1) == UniPoly({2, 2}));  // 2q + 2
    for (int m = 1; m <= 4; ++m) {
        UniPoly det = xmatrix_determinant(m);
        CHECK_FALSE(det.is_zero());
        CHECK(det.degree() == m * m * (m + 1) / 2);
    }
}
