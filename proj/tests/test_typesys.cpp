#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "splitq/typesys.hpp"

using namespace splitq;

namespace {

// Independent partition-count oracle: Euler's pentagonal number recurrence
// p(n) = sum_{k>=1} (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)].
long long pentagonal_p(int n) {
    static std::vector<long long> memo{1};
    for (int m = static_cast<int>(memo.size()); m <= n; ++m) {
        long long total = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            long long term = memo[m - g1] + (g2 <= m ? memo[m - g2] : 0);
            total += (k % 2 == 1) ? term : -term;
        }
        memo.push_back(total);
    }
    return memo[static_cast<size_t>(n)];
}

// Independent type-count oracle: unbounded knapsack over the distinct
// (d, lambda) items of each weight.
long long type_count_gf(int n) {
    std::vector<long long> items_of_weight(static_cast<size_t>(n) + 1, 0);
    for (int w = 1; w <= n; ++w)
        for (int d = 1; d <= w; ++d)
            if (w % d == 0) items_of_weight[w] += pentagonal_p(w / d);
    std::vector<long long> ways(static_cast<size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int w = 1; w <= n; ++w)
        for (long long item = 0; item < items_of_weight[w]; ++item)
            for (int j = w; j <= n; ++j) ways[j] += ways[j - w];
    return ways[static_cast<size_t>(n)];
}

} // namespace

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition({1, 2}), ValidationError);
    CHECK_THROWS_AS(Partition({2, 0}), ValidationError);
    CHECK(Partition().empty());
    CHECK(Partition({3, 1}).size() == 4);
}

TEST_CASE("partitions_of order and counts") {
    auto p0 = partitions_of(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == Partition({4}));
    CHECK(p4[1] == Partition({3, 1}));
    CHECK(p4[2] == Partition({2, 2}));
    CHECK(p4[3] == Partition({2, 1, 1}));
    CHECK(p4[4] == Partition({1, 1, 1, 1}));

    CHECK(partitions_of(10).size() == 42);
    for (int n = 0; n <= 14; ++n)
        CHECK(static_cast<long long>(partitions_of(n).size()) == pentagonal_p(n));
}

TEST_CASE("types_of_size counts and canonical uniqueness") {
    CHECK(types_of_size(1).size() == 1);
    CHECK(types_of_size(2).size() == 4);
    CHECK(types_of_size(4).size() == 22);
    for (int n = 1; n <= 8; ++n) {
        auto types = types_of_size(n);
        CHECK(static_cast<long long>(types.size()) == type_count_gf(n));
        std::set<std::string> seen;
        for (const auto& tau : types) {
            CHECK(tau.size() == n);
            CHECK(seen.insert(format_type(tau)).second);  // no duplicates
        }
    }
}

TEST_CASE("size-2 types are the expected four") {
    auto types = types_of_size(2);
    std::set<std::string> got;
    for (const auto& tau : types) got.insert(format_type(tau));
    CHECK(got == std::set<std::string>{"2:1", "1:2", "1:1,1", "1:1;1:1"});
}

TEST_CASE("named families appear among the types") {
    for (int n = 1; n <= 6; ++n) {
        auto types = types_of_size(n);
        auto has = [&](const SimilarityClassType& t) {
            return std::find(types.begin(), types.end(), t) != types.end();
        };
        CHECK(has(scalar_type(n)));
        CHECK(has(regular_split_semisimple(n)));
        CHECK(has(regular_nilpotent(n)));
        CHECK(has(simple_type(n)));
    }
}

TEST_CASE("parse and format") {
    CHECK(format_type(parse_type("1:1;1:1")) == "1:1;1:1");
    CHECK(parse_type("1:1;1:1") == regular_split_semisimple(2));
    CHECK(parse_type("1:1,1,1;1:1") == tau_i_type(2, 1));
    CHECK(parse_type("1:1,1") == scalar_type(2));
    CHECK_THROWS_AS(parse_type("2:0"), ParseError);
    CHECK_THROWS_AS(parse_type(""), ParseError);
    CHECK_THROWS_AS(parse_type("2:"), ValidationError);
    CHECK_THROWS_AS(parse_type("x:1"), ParseError);
    // multiplicity is honored
    CHECK_FALSE(parse_type("1:1;1:1") == parse_type("1:1"));
    // round trip over everything small
    for (int n = 1; n <= 6; ++n)
        for (const auto& tau : types_of_size(n))
            CHECK(parse_type(format_type(tau)) == tau);
}

TEST_CASE("tau_i family") {
    CHECK(tau_i_type(2, 1) == parse_type("1:1,1,1;1:1"));
    CHECK(tau_i_type(3, 1) == parse_type("1:1,1,1,1;2:1"));
    // the i = m edge degenerates to the scalar type
    CHECK(tau_i_type(2, 2) == scalar_type(4));
    CHECK_THROWS_AS(tau_i_type(2, 3), RangeError);
}
