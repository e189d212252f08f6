#include "doctest.h"

#include <map>

#include "splitq/chords.hpp"
#include "splitq/qcomb.hpp"

using namespace splitq;

namespace {

// Catalan numbers by the independent convolution recurrence.
Int catalan(int m) {
    static std::vector<Int> memo{1};
    for (int n = static_cast<int>(memo.size()); n <= m; ++n) {
        Int c = 0;
        for (int i = 0; i < n; ++i) c += memo[static_cast<size_t>(i)] *
                                         memo[static_cast<size_t>(n - 1 - i)];
        memo.push_back(c);
    }
    return memo[static_cast<size_t>(m)];
}

Int double_factorial_odd(int m) {  // (2m-1)!!
    Int r = 1;
    for (int i = 1; i <= 2 * m - 1; i += 2) r *= i;
    return r;
}

} // namespace

TEST_CASE("diagram validation and crossings") {
    // (1,4)(2,6)(3,5)(7,8)
    ChordDiagram d({4, 6, 5, 1, 3, 2, 8, 7});
    CHECK(crossings(d) == 2);
    CHECK(d.opening_nodes() == std::vector<int>{1, 2, 3, 7});
    CHECK(crossings(ChordDiagram({2, 1, 4, 3})) == 0);
    CHECK(crossings(ChordDiagram({3, 4, 1, 2})) == 1);
    CHECK_THROWS_AS(ChordDiagram({1, 2}), ValidationError);       // fixed points
    CHECK_THROWS_AS(ChordDiagram({2, 3, 1, 4}), ValidationError); // not involution
    CHECK_THROWS_AS(ChordDiagram({2, 1, 4}), ValidationError);    // odd length
}

TEST_CASE("touchard by enumeration") {
    CHECK(touchard_enum(0) == UniPoly::constant(1));
    CHECK(touchard_enum(1) == UniPoly::constant(1));
    CHECK(touchard_enum(2) == UniPoly({2, 1}));
    CHECK(touchard_enum(3) == UniPoly({5, 6, 3, 1}));
    CHECK_THROWS_AS(touchard_enum(9), BudgetExceeded);
    for (int m = 0; m <= 6; ++m) {
        UniPoly tm = touchard_enum(m);
        CHECK(tm.eval(1) == double_factorial_odd(m));
        CHECK(tm.coeff(0) == catalan(m));
    }
    // T_m(0) = Catalan(m) holds further out via the refinement route.
    for (int m = 7; m <= 8; ++m) CHECK(touchard_refine(m).coeff(0) == catalan(m));
}

TEST_CASE("r_values") {
    CHECK(r_values({1, 2, 3, 7}, 4) == std::vector<int>{3, 3, 3, 4});
    CHECK(r_values({1, 2, 3, 4}, 4) == std::vector<int>{4, 4, 4, 4});
    CHECK(r_values({1, 3}, 2) == std::vector<int>{1, 2});
}

TEST_CASE("opening set validation") {
    CHECK_NOTHROW(OpeningSet({1, 2, 3, 7}, 4));
    CHECK_THROWS_AS(OpeningSet({2, 3}, 2), ValidationError);  // c_1 > 1
    CHECK_THROWS_AS(OpeningSet({1, 4}, 2), ValidationError);  // c_2 > 3
    CHECK_THROWS_AS(OpeningSet({1, 1}, 2), ValidationError);
}

TEST_CASE("refinement contribution examples") {
    CHECK(refinement_contribution(OpeningSet({1, 3}, 2)) == UniPoly::constant(1));
    CHECK(refinement_contribution(OpeningSet({1, 2}, 2)) == UniPoly({1, 1}));
    UniPoly expect = q_integer(3) * q_integer(2);
    CHECK(refinement_contribution(OpeningSet({1, 2, 3, 7}, 4)) == expect);
}

TEST_CASE("per-opening-set contribution matches brute force, m <= 5") {
    for (int m = 1; m <= 5; ++m) {
        std::map<std::vector<int>, UniPoly> by_openings;
        for_each_diagram(m, [&](const ChordDiagram& d) {
            by_openings[d.opening_nodes()] =
                by_openings[d.opening_nodes()] + UniPoly::monomial(1, crossings(d));
        });
        for (const auto& [c, brute] : by_openings)
            CHECK(refinement_contribution(OpeningSet(c, m)) == brute);
    }
}

TEST_CASE("three-way agreement") {
    for (int m = 0; m <= 6; ++m) {
        UniPoly enumd = touchard_enum(m);
        CHECK(enumd == touchard_refine(m));
        CHECK(UniPoly({-1, 1}).pow(m) * enumd == touchard_riordan_rhs(m));
    }
    for (int m = 7; m <= 10; ++m)
        CHECK(UniPoly({-1, 1}).pow(m) * touchard_refine(m) == touchard_riordan_rhs(m));
}

TEST_CASE("touchard_riordan_rhs small values") {
    CHECK(touchard_riordan_rhs(1) == UniPoly({-1, 1}));
    CHECK(touchard_riordan_rhs(2) == UniPoly({2, -3, 0, 1}));  // q^3 - 3q + 2
}
