#include "doctest.h"

#include <random>

#include "splitq/invariants.hpp"
#include "splitq/oracle.hpp"
#include "splitq/qcomb.hpp"
#include "splitq/splitting.hpp"

using namespace splitq;

namespace {

// Number of monic irreducibles of degree d over F_q by the Moebius count
// (1/d) sum_{e | d} mu(d/e) q^e.
long long irreducible_count(int q, int d) {
    auto mu = [](int n) {
        int result = 1;
        for (int p = 2; p * p <= n; ++p)
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) return 0;
                result = -result;
            }
        if (n > 1) result = -result;
        return result;
    };
    long long sum = 0;
    for (int e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        long long qe = 1;
        for (int i = 0; i < e; ++i) qe *= q;
        sum += mu(d / e) * qe;
    }
    return sum / d;
}

FqMatrix random_invertible(const FqField& f, int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> el(0, f.q() - 1);
    while (true) {
        FqMatrix m(f, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.set(i, j, el(rng));
        if (m.is_invertible()) return m;
    }
}

} // namespace

TEST_CASE("make_field") {
    FqField f2 = make_field(2, 1);
    CHECK(f2.q() == 2);
    CHECK(f2.add(1, 1) == 0);

    FqField f4 = make_field(2, 2);
    CHECK(f4.q() == 4);
    CHECK(f4.modulus() == std::vector<int>{1, 1});  // x^2 + x + 1
    // x * x = x + 1 under that modulus: element 2 is x, 3 is x+1.
    CHECK(f4.mul(2, 2) == 3);

    CHECK_THROWS_AS(make_field(4, 1), NotPrime);
    CHECK_THROWS_AS(make_field(2, 7), BudgetExceeded);
}

TEST_CASE("field axioms for every admissible q") {
    for (auto [p, e] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}, {7, 1}}) {
        FqField f = make_field(p, e);
        int q = f.q();
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (int c = 0; c < q; ++c)
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
    }
}

TEST_CASE("irreducibles") {
    FqField f2 = make_field(2, 1);
    auto lin = irreducibles(f2, 1);
    REQUIRE(lin.size() == 2);  // t, t+1
    CHECK(lin[0] == std::vector<int>{0, 1});
    CHECK(lin[1] == std::vector<int>{1, 1});
    auto quad = irreducibles(f2, 2);
    REQUIRE(quad.size() == 1);
    CHECK(quad[0] == std::vector<int>{1, 1, 1});

    FqField f3 = make_field(3, 1);
    CHECK(irreducibles(f3, 2).size() == 3);

    for (auto [p, e] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        FqField f = make_field(p, e);
        for (int d = 1; d <= 3; ++d)
            CHECK(static_cast<long long>(irreducibles(f, d).size()) ==
                  irreducible_count(f.q(), d));
    }
}

TEST_CASE("subspace enumeration counts") {
    FqField f2 = make_field(2, 1);
    CHECK(subspaces(f2, 2, 1).size() == 3);
    CHECK(subspaces(f2, 4, 2).size() == 35);
    FqField f3 = make_field(3, 1);
    CHECK(subspaces(f3, 4, 2).size() == 130);
    CHECK_THROWS_AS(subspaces(f2, 4, 2, 10), BudgetExceeded);

    // Uniqueness: every basis distinct, all in RREF with increasing pivots.
    auto all = subspaces(f3, 4, 2);
    for (size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].basis.rank() == 2);
        for (size_t j = i + 1; j < all.size(); ++j)
            CHECK_FALSE(all[i].basis == all[j].basis);
    }
}

TEST_CASE("matrix_from_type and classify round-trip") {
    FqField f2 = make_field(2, 1);

    FqMatrix nil = matrix_from_type(regular_nilpotent(2), f2);
    CHECK(nil.at(0, 0) == 0);
    CHECK(nil.at(1, 0) == 1);
    CHECK(nil.at(0, 1) == 0);
    CHECK(nil.at(1, 1) == 0);

    FqMatrix simple2 = matrix_from_type(simple_type(2), f2);
    CHECK(classify_matrix(simple2) == simple_type(2));

    CHECK_THROWS_AS(matrix_from_type(regular_split_semisimple(4), f2), NotRealizable);

    FqMatrix zero2(f2, 2, 2);
    CHECK(classify_matrix(zero2) == scalar_type(2));

    FqField f3 = make_field(3, 1);
    for (int n = 1; n <= 4; ++n)
        for (const auto& tau : types_of_size(n)) {
            FqMatrix T(f3, 0, 0);
            try {
                T = matrix_from_type(tau, f3);
            } catch (const NotRealizable&) {
                continue;
            }
            CHECK(classify_matrix(T) == tau);
        }
}

TEST_CASE("splitting and invariant counts at m=1") {
    FqField f2 = make_field(2, 1);
    FqMatrix jordan = matrix_from_type(regular_nilpotent(2), f2);
    CHECK(count_splitting(jordan, 1) == 2);
    FqMatrix simple2 = matrix_from_type(simple_type(2), f2);
    CHECK(count_splitting(simple2, 1) == 3);
    CHECK(count_invariant(simple2, 1) == 0);
    CHECK_THROWS_AS(count_splitting(simple2, 2), DimensionMismatch);
}

TEST_CASE("regular nilpotent m=2 splits q^4 times") {
    FqField f2 = make_field(2, 1);
    FqMatrix T = matrix_from_type(regular_nilpotent(4), f2);
    CHECK(count_splitting(T, 2) == 16);
    CHECK(sigma_main(regular_nilpotent(4)).eval(2) == 16);
}

TEST_CASE("count_ab_oracle consistency") {
    FqField f2 = make_field(2, 1);
    FqMatrix T = matrix_from_type(parse_type("1:2;2:1"), f2);
    int n = 4;
    for (int a = 0; a <= n; ++a) {
        long long row = 0;
        for (int b = 0; b <= a; ++b) row += count_ab_oracle(T, a, b);
        CHECK(row == gaussian_binomial(n, a).eval(2));
        CHECK(count_ab_oracle(T, a, a) == count_invariant(T, a));
    }
}

TEST_CASE("splitting count is similarity-invariant") {
    std::mt19937 rng(4242);
    FqField f3 = make_field(3, 1);
    for (const auto& tau : {regular_nilpotent(4), parse_type("2:1;2:1"),
                            scalar_type(4)}) {
        FqMatrix T = matrix_from_type(tau, f3);
        long long base = count_splitting(T, 2);
        for (int trial = 0; trial < 3; ++trial) {
            FqMatrix s = random_invertible(f3, 4, rng);
            FqMatrix conj = s * T * s.inverse();
            CHECK(count_splitting(conj, 2) == base);
        }
    }
}

TEST_CASE("general-d splitting test") {
    // d=4, m=1 over F_2: regular nilpotent J_4 admits no 1-dim 4-splitting
    // subspace except... count directly against a hand check: a line spans
    // F_2^4 under T iff its vector is cyclic, i.e. has non-zero bottom
    // coordinate in the companion basis.
    FqField f2 = make_field(2, 1);
    FqMatrix T = matrix_from_type(regular_nilpotent(4), f2);
    long long cyclic_lines = 0;
    for (const auto& s : subspaces(f2, 4, 1)) {
        // cyclic iff coordinate on the generator of the cyclic module != 0
        if (s.basis.at(0, 0) != 0) ++cyclic_lines;
    }
    CHECK(count_splitting(T, 1, 4) == cyclic_lines);
}

TEST_CASE("spot check size 6 at q=2") {
    FqField f2 = make_field(2, 1);
    CHECK(gaussian_binomial(6, 3).eval(2) == 1395);
    FqMatrix nil = matrix_from_type(regular_nilpotent(6), f2);
    CHECK(count_splitting(nil, 3) == sigma_main(regular_nilpotent(6)).eval(2));
    FqMatrix simple6 = matrix_from_type(simple_type(6), f2);
    CHECK(count_splitting(simple6, 3) == sigma_main(simple_type(6)).eval(2));
}

TEST_CASE("pattern counting lemma") {
    FqField f2 = make_field(2, 1);
    FqField f3 = make_field(3, 1);
    CHECK(count_pattern_nonsingular(f2, {1}) == 1);
    CHECK(count_pattern_nonsingular(f2, {1, 2}) == 6);  // |GL_2(F_2)|
    CHECK(count_pattern_nonsingular(f3, {1, 3}) == 12);
    CHECK(pattern_closed_form({1, 3}).eval(3) == 12);
}
