#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sen/algebra.hpp"
#include "sen/partition.hpp"

#include <algorithm>
#include <set>

using namespace sen;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

// Independent oracle: p(n) by the pentagonal number recurrence.
std::vector<long> pentagonal_partition_counts(int n) {
    std::vector<long> p(n + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long total = 0;
        for (int j = 1;; ++j) {
            long g1 = static_cast<long>(j) * (3 * j - 1) / 2;
            long g2 = static_cast<long>(j) * (3 * j + 1) / 2;
            if (g1 > m && g2 > m) break;
            long sign = (j % 2 == 1) ? 1 : -1;
            if (g1 <= m) total += sign * p[m - g1];
            if (g2 <= m) total += sign * p[m - g2];
        }
        p[m] = total;
    }
    return p;
}

// Independent oracle for horizontal strips: all partitions of |lambda| + r
// containing lambda with at most one added box per column.
std::set<std::vector<int>> brute_force_strips(const Partition& lambda, int r) {
    std::set<std::vector<int>> out;
    for (const Partition& mu : partitions_of(lambda.size() + r)) {
        if (!mu.contains(lambda)) continue;
        bool ok = true;
        int cols = mu.part(0);
        for (int c = 0; c < cols && ok; ++c) {
            int added = 0;
            for (int i = 0; i < mu.length(); ++i)
                if (lambda.part(i) <= c && c < mu.part(i)) ++added;
            ok = added <= 1;
        }
        if (ok) out.insert(mu.parts());
    }
    return out;
}

}  // namespace

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(P({0}), std::invalid_argument);
    CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(P({3, -1}), std::invalid_argument);
    CHECK(P({}).empty());
    CHECK(P({3, 1}).size() == 4);
    CHECK(P({3, 1}).to_string() == "[3,1]");
    CHECK(P({}).to_string() == "[]");
}

TEST_CASE("conjugate and containment") {
    CHECK(P({3, 3, 2, 1}).conjugate() == P({4, 3, 2}));
    CHECK(P({}).conjugate() == P({}));
    CHECK(P({4, 3, 1}).contains(P({2, 1})));
    CHECK_FALSE(P({2, 2}).contains(P({3})));
}

TEST_CASE("enumeration order and counts") {
    CHECK(partitions_of(0) == std::vector<Partition>{P({})});
    CHECK(partitions_of(4) ==
          std::vector<Partition>{P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})});
    CHECK(partitions_of(6).size() == 11);
}

TEST_CASE("partition counts match the pentagonal recurrence up to 30") {
    auto oracle = pentagonal_partition_counts(30);
    for (int n = 0; n <= 30; ++n) CHECK(partition_count(n) == oracle[n]);
    for (int n = 0; n <= 18; ++n)
        CHECK(partitions_of(n).size() == static_cast<size_t>(oracle[n]));
}

TEST_CASE("removable boxes") {
    CHECK(removable_boxes(P({2, 1})) == std::vector<Partition>{P({1, 1}), P({2})});
    CHECK(removable_boxes(P({1})) == std::vector<Partition>{P({})});
    CHECK(removable_boxes(P({3, 3, 2, 1})) ==
          std::vector<Partition>{P({3, 2, 2, 1}), P({3, 3, 1, 1}), P({3, 3, 2})});
    CHECK(removable_boxes(P({})).empty());
    // count = number of distinct part values
    for (const Partition& lambda : partitions_of(7)) {
        std::set<int> distinct(lambda.parts().begin(), lambda.parts().end());
        CHECK(removable_boxes(lambda).size() == distinct.size());
    }
}

TEST_CASE("horizontal strip additions") {
    CHECK(add_horizontal_strip(P({}), 2) == std::vector<Partition>{P({2})});
    CHECK(add_horizontal_strip(P({1}), 2) == std::vector<Partition>{P({3}), P({2, 1})});
    CHECK(add_horizontal_strip(P({1}), 3) == std::vector<Partition>{P({4}), P({3, 1})});
    SUBCASE("matches the brute-force placement oracle") {
        for (int n = 0; n <= 5; ++n)
            for (const Partition& lambda : partitions_of(n))
                for (int r = 0; r <= 4; ++r) {
                    std::set<std::vector<int>> got;
                    for (const Partition& mu : add_horizontal_strip(lambda, r))
                        got.insert(mu.parts());
                    CHECK(got == brute_force_strips(lambda, r));
                }
    }
}

TEST_CASE("single-box addition and removal are mutually inverse") {
    for (int n = 1; n <= 7; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            for (const Partition& mu : removable_boxes(lambda)) {
                auto ups = add_horizontal_strip(mu, 1);
                CHECK(std::count(ups.begin(), ups.end(), lambda) == 1);
            }
            for (const Partition& mu : partitions_of(n - 1)) {
                auto ups = add_horizontal_strip(mu, 1);
                bool up = std::count(ups.begin(), ups.end(), lambda) == 1;
                auto downs = removable_boxes(lambda);
                bool down = std::count(downs.begin(), downs.end(), mu) == 1;
                CHECK(up == down);
            }
        }
}

TEST_CASE("two single-box additions cover the r=2 strips") {
    for (int n = 0; n <= 6; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            std::set<std::vector<int>> two_steps;
            for (const Partition& mu : add_horizontal_strip(lambda, 1))
                for (const Partition& nu : add_horizontal_strip(mu, 1))
                    two_steps.insert(nu.parts());
            for (const Partition& nu : add_horizontal_strip(lambda, 2))
                CHECK(two_steps.count(nu.parts()) == 1);
        }
}

TEST_CASE("hook dimensions") {
    CHECK(hook_dimension(P({4})) == 1);
    CHECK(hook_dimension(P({2, 2})) == 2);
    CHECK(hook_dimension(P({3, 1})) == 3);
    CHECK(hook_dimension(P({})) == 1);
    SUBCASE("equals the number of standard tableaux") {
        for (int n = 0; n <= 6; ++n)
            for (const Partition& lambda : partitions_of(n))
                CHECK(hook_dimension(lambda) == standard_tableaux(lambda).size());
    }
    SUBCASE("squares sum to k!") {
        for (int k = 0; k <= 8; ++k) {
            mpz_class sum = 0;
            for (const Partition& lambda : partitions_of(k)) {
                mpz_class d = hook_dimension(lambda);
                sum += d * d;
            }
            CHECK(sum == factorial(k));
        }
    }
}

TEST_CASE("named partitions") {
    CHECK(single_row(0) == P({}));
    CHECK(single_row(3) == P({3}));
    CHECK(single_column(4) == P({1, 1, 1, 1}));
    CHECK(hook_two_one(2) == P({2}));
    CHECK(hook_two_one(5) == P({2, 1, 1, 1}));
    CHECK_THROWS_AS(hook_two_one(1), std::invalid_argument);
}

TEST_CASE("stirling numbers and binomials") {
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(5, 0) == 0);
    CHECK(stirling2(6, 6) == 1);
    CHECK(binomial(5, 2) == 10);
}

TEST_CASE("partition parsing") {
    CHECK(parse_partition("[2,1]") == P({2, 1}));
    CHECK(parse_partition("[]") == P({}));
    CHECK(parse_partition(" [ 3 , 3 , 1 ] ") == P({3, 3, 1}));
    CHECK_THROWS_AS(parse_partition("2,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("[1,2]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("[2,1] junk"), std::invalid_argument);
}

TEST_CASE("skew shape validation") {
    CHECK(SkewShape(P({4, 3, 1}), P({2, 1})).box_count() == 5);
    CHECK_THROWS_AS(SkewShape(P({2}), P({3})), std::invalid_argument);
}
