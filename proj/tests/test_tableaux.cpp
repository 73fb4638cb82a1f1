#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sen/characters.hpp"
#include "sen/tableaux.hpp"

using namespace sen;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

// Independent oracle: multiplicity of gamma in the induced product of two
// irreducibles, by exact character inner products.
long character_multiplicity(const Partition& lambda, const Partition& delta,
                            const Partition& gamma) {
    int a = lambda.size(), b = delta.size();
    ClassFunction pair = ClassFunction::tensor(ClassFunction::irreducible(a, lambda),
                                               ClassFunction::irreducible(b, delta));
    ClassFunction res = restrict_to_product(ClassFunction::irreducible(a + b, gamma), a, b);
    mpq_class m = inner_product(pair, res);
    REQUIRE(m.get_den() == 1);
    return static_cast<long>(m.get_num().get_si());
}

}  // namespace

TEST_CASE("row word of the worked skew tableau") {
    SkewTableau t(SkewShape(P({4, 3, 1}), P({2, 1})), {{1, 1}, {2, 3}, {2}});
    CHECK(t.is_semistandard());
    CHECK(row_word(t) == Word{1, 1, 3, 2, 2});
    CHECK(t.content() == Composition{2, 2, 1});
}

TEST_CASE("row word edge cases") {
    SkewTableau empty(SkewShape(P({}), P({})), {});
    CHECK(row_word(empty).empty());
    SkewTableau box(SkewShape(P({1}), P({})), {{5}});
    CHECK(row_word(box) == Word{5});
}

TEST_CASE("word 11322 fails the lattice property at prefix 113") {
    CHECK_FALSE(is_lattice_word({1, 1, 3, 2, 2}));
    // the shortest failing prefix is 113 itself
    CHECK(is_lattice_word({1, 1}));
    CHECK_FALSE(is_lattice_word({1, 1, 3}));
}

TEST_CASE("lattice words") {
    CHECK(is_lattice_word({}));
    CHECK(is_lattice_word({1, 1, 2, 2}));
    CHECK(is_lattice_word({1, 2, 1, 2}));
    CHECK_FALSE(is_lattice_word({2, 1, 1, 2}));
    CHECK(is_lattice_word({1, 2, 1, 3, 2}));
    CHECK_FALSE(is_lattice_word({1, 2, 3, 3}));
}

TEST_CASE("semistandardness") {
    CHECK(SkewTableau(SkewShape(P({2, 2}), P({})), {{1, 1}, {2, 2}}).is_semistandard());
    CHECK_FALSE(SkewTableau(SkewShape(P({2, 2}), P({})), {{1, 1}, {1, 2}}).is_semistandard());
    CHECK_FALSE(SkewTableau(SkewShape(P({2}), P({})), {{2, 1}}).is_semistandard());
    // skew column with a gap: entries in disconnected boxes are unconstrained
    CHECK(SkewTableau(SkewShape(P({2, 1, 1}), P({1, 1})), {{1}, {}, {1}}).is_semistandard());
}

TEST_CASE("lr coefficient basics") {
    CHECK(lr_coefficient(P({2, 1}), P({}), P({2, 1})) == 1);
    CHECK(lr_coefficient(P({3}), P({}), P({3})) == 1);
    // lambda not contained in gamma
    CHECK(lr_coefficient(P({3}), P({1}), P({2, 2})) == 0);
    CHECK_THROWS_AS(lr_coefficient(P({2}), P({1}), P({2})), std::invalid_argument);
}

TEST_CASE("pieri special case of the lr rule") {
    for (int a = 0; a <= 4; ++a)
        for (const Partition& lambda : partitions_of(a))
            for (int r = 0; r <= 3; ++r) {
                auto strips = add_horizontal_strip(lambda, r);
                for (const Partition& gamma : partitions_of(a + r)) {
                    long want = std::count(strips.begin(), strips.end(), gamma) ? 1 : 0;
                    CHECK(lr_coefficient(lambda, single_row(r), gamma) == want);
                }
            }
}

TEST_CASE("the worked coefficient two ways") {
    long by_tableaux = lr_coefficient(P({2, 1}), P({2, 2, 1}), P({4, 3, 1}));
    long by_characters = character_multiplicity(P({2, 1}), P({2, 2, 1}), P({4, 3, 1}));
    CHECK(by_tableaux == by_characters);
    CHECK(by_tableaux > 0);
}

TEST_CASE("lr coefficients match character inner products up to size 6") {
    for (int total = 2; total <= 6; ++total)
        for (int a = 1; a < total; ++a)
            for (const Partition& lambda : partitions_of(a))
                for (const Partition& delta : partitions_of(total - a))
                    for (const Partition& gamma : partitions_of(total))
                        CHECK(lr_coefficient(lambda, delta, gamma) ==
                              character_multiplicity(lambda, delta, gamma));
}

TEST_CASE("lr symmetry in the two factors up to size 7") {
    for (int total = 2; total <= 7; ++total)
        for (int a = 1; a <= total / 2; ++a)
            for (const Partition& lambda : partitions_of(a))
                for (const Partition& delta : partitions_of(total - a))
                    for (const Partition& gamma : partitions_of(total))
                        CHECK(lr_coefficient(lambda, delta, gamma) ==
                              lr_coefficient(delta, lambda, gamma));
}

TEST_CASE("expansions") {
    SUBCASE("empty factor") {
        auto e = lr_expansion(P({3, 1}), P({}));
        CHECK(e.size() == 1);
        CHECK(e.at(P({3, 1})) == 1);
    }
    SUBCASE("two single boxes") {
        auto e = lr_expansion(P({1}), P({1}));
        CHECK(e.size() == 2);
        CHECK(e.at(P({2})) == 1);
        CHECK(e.at(P({1, 1})) == 1);
    }
    SUBCASE("pieri expansion equals the horizontal strip set") {
        for (int a = 0; a <= 5; ++a)
            for (const Partition& lambda : partitions_of(a))
                for (int r = 0; r <= 3; ++r) {
                    auto pieri = pieri_expansion(lambda, r);
                    auto full = lr_expansion(lambda, single_row(r));
                    CHECK(pieri == full);
                    for (const auto& [gamma, mult] : pieri) CHECK(mult == 1);
                }
    }
    SUBCASE("pieri example avoiding same-column pairs") {
        auto e = pieri_expansion(P({2, 2}), 2);
        CHECK(e.size() == 3);
        CHECK(e.count(P({4, 2})) == 1);
        CHECK(e.count(P({3, 2, 1})) == 1);
        CHECK(e.count(P({2, 2, 2})) == 1);
        CHECK(e.count(P({3, 3})) == 0);
    }
}

TEST_CASE("dimension identity for induced products") {
    for (int total = 2; total <= 6; ++total)
        for (int a = 1; a < total; ++a)
            for (const Partition& lambda : partitions_of(a))
                for (const Partition& delta : partitions_of(total - a)) {
                    mpz_class sum = 0;
                    for (const auto& [gamma, mult] : lr_expansion(lambda, delta))
                        sum += mult * hook_dimension(gamma);
                    CHECK(sum == binomial(total, a) * hook_dimension(lambda) *
                                     hook_dimension(delta));
                }
}
