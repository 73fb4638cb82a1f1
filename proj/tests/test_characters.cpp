#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sen/characters.hpp"
#include "sen/tableaux.hpp"

#include <random>
#include <set>

using namespace sen;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

ClassFunction irr(int k, std::vector<int> lambda) {
    return ClassFunction::irreducible(k, P(std::move(lambda)));
}

}  // namespace

TEST_CASE("class sizes") {
    CHECK(class_size(P({1, 1, 1, 1})) == 1);
    CHECK(class_size(P({2, 2})) == 3);
    CHECK(class_size(P({4})) == 6);
    CHECK(class_size(P({})) == 1);
    SUBCASE("sum over classes is the group order") {
        for (int k = 0; k <= 8; ++k) {
            mpz_class total = 0;
            for (const Partition& mu : partitions_of(k)) total += class_size(mu);
            CHECK(total == factorial(k));
        }
    }
}

TEST_CASE("character values against the fixed S_4 rows") {
    CHECK(character_value(P({2, 2}), P({1, 1, 1, 1})) == 2);
    CHECK(character_value(P({2, 2}), P({2, 2})) == 2);
    CHECK(character_value(P({2, 2}), P({2, 1, 1})) == 0);
    CHECK(character_value(P({2, 2}), P({4})) == 0);
    CHECK(character_value(P({3, 1}), P({1, 1, 1, 1})) == 3);
    CHECK(character_value(P({3, 1}), P({2, 1, 1})) == 1);
    CHECK(character_value(P({3, 1}), P({2, 2})) == -1);
    CHECK(character_value(P({3, 1}), P({4})) == -1);
    CHECK(character_value(P({3, 1}), P({3, 1})) == 0);
}

TEST_CASE("trivial and sign rows") {
    for (int k = 0; k <= 7; ++k)
        for (const Partition& mu : partitions_of(k)) {
            CHECK(character_value(single_row(k), mu) == 1);
            int transpositions = k - mu.length();
            CHECK(character_value(single_column(k), mu) == (transpositions % 2 == 0 ? 1 : -1));
        }
}

TEST_CASE("size mismatch is an error") {
    CHECK_THROWS_AS(character_value(P({2, 1}), P({2, 2})), std::invalid_argument);
}

TEST_CASE("first-column values are dimensions") {
    for (int k = 0; k <= 8; ++k)
        for (const Partition& lambda : partitions_of(k))
            CHECK(character_value(lambda, single_column(k)) == hook_dimension(lambda));
}

TEST_CASE("row orthonormality") {
    for (int k = 0; k <= 7; ++k)
        for (const Partition& a : partitions_of(k))
            for (const Partition& b : partitions_of(k)) {
                mpq_class ip = inner_product(ClassFunction::irreducible(k, a),
                                             ClassFunction::irreducible(k, b));
                CHECK(ip == (a == b ? 1 : 0));
            }
}

TEST_CASE("column orthogonality") {
    for (int k = 1; k <= 7; ++k) {
        const auto& classes = partitions_of(k);
        const auto& table = character_table(k);
        for (size_t c1 = 0; c1 < classes.size(); ++c1)
            for (size_t c2 = 0; c2 < classes.size(); ++c2) {
                mpz_class sum = 0;
                for (size_t l = 0; l < classes.size(); ++l) sum += table[l][c1] * table[l][c2];
                CHECK(sum == (c1 == c2 ? zee(classes[c1]) : 0));
            }
    }
}

TEST_CASE("conjugate partition flips by the sign character") {
    for (int k = 1; k <= 7; ++k)
        for (const Partition& lambda : partitions_of(k))
            for (const Partition& mu : partitions_of(k)) {
                int transpositions = k - mu.length();
                mpz_class sign = (transpositions % 2 == 0) ? 1 : -1;
                CHECK(character_value(lambda.conjugate(), mu) == sign * character_value(lambda, mu));
            }
}

TEST_CASE("restriction to a Young subgroup") {
    SUBCASE("trivial restricts to trivial") {
        ClassFunction res = restrict_to_product(ClassFunction::trivial(5), 3, 2);
        for (const Partition& mu : partitions_of(3))
            for (const Partition& nu : partitions_of(2)) CHECK(res.at(mu, nu) == 1);
    }
    SUBCASE("branching by single-box removal") {
        ClassFunction res = restrict_to_product(irr(3, {2, 1}), 2, 1);
        CHECK(inner_product(res, ClassFunction::tensor(irr(2, {2}), irr(1, {1}))) == 1);
        CHECK(inner_product(res, ClassFunction::tensor(irr(2, {1, 1}), irr(1, {1}))) == 1);
        for (int k = 2; k <= 6; ++k)
            for (const Partition& lambda : partitions_of(k)) {
                ClassFunction r =
                    restrict_to_product(ClassFunction::irreducible(k, lambda), k - 1, 1);
                auto downs = removable_boxes(lambda);
                for (const Partition& mu : partitions_of(k - 1)) {
                    mpq_class m = inner_product(
                        r, ClassFunction::tensor(ClassFunction::irreducible(k - 1, mu),
                                                 ClassFunction::trivial(1)));
                    bool is_down = std::count(downs.begin(), downs.end(), mu) == 1;
                    CHECK(m == (is_down ? 1 : 0));
                }
            }
    }
    SUBCASE("trivial component of [2,2] under S_2 x S_2") {
        ClassFunction res = restrict_to_product(irr(4, {2, 2}), 2, 2);
        CHECK(inner_product(res, ClassFunction::trivial_product(2, 2)) == 1);
    }
    CHECK_THROWS_AS(restrict_to_product(ClassFunction::trivial(4), 3, 2), std::invalid_argument);
}

TEST_CASE("induction from a Young subgroup") {
    SUBCASE("trivial times trivial is the subset permutation character") {
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b) {
                ClassFunction ind =
                    induce_product(ClassFunction::trivial(a), ClassFunction::trivial(b));
                int m = a + b;
                for (const Partition& mu : partitions_of(m)) {
                    Perm g = class_representative(mu);
                    long fixed = 0;
                    for (unsigned mask = 0; mask < (1u << m); ++mask) {
                        if (__builtin_popcount(mask) != a) continue;
                        unsigned image = 0;
                        for (int i = 0; i < m; ++i)
                            if (mask & (1u << i)) image |= 1u << g[i];
                        if (image == mask) ++fixed;
                    }
                    CHECK(ind.at(mu) == fixed);
                }
            }
    }
    SUBCASE("regular character from two singletons") {
        ClassFunction reg = induce_product(ClassFunction::trivial(1), ClassFunction::trivial(1));
        CHECK(reg.at(P({1, 1})) == 2);
        CHECK(reg.at(P({2})) == 0);
    }
}

TEST_CASE("frobenius reciprocity on sampled triples") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 40; ++trial) {
        int a = 1 + rng() % 3, b = 1 + rng() % 3;
        const auto& pa = partitions_of(a);
        const auto& pb = partitions_of(b);
        const auto& pg = partitions_of(a + b);
        ClassFunction phi = ClassFunction::irreducible(a, pa[rng() % pa.size()]);
        ClassFunction psi = ClassFunction::irreducible(b, pb[rng() % pb.size()]);
        ClassFunction chi = ClassFunction::irreducible(a + b, pg[rng() % pg.size()]);
        mpq_class lhs = inner_product(induce_product(phi, psi), chi);
        mpq_class rhs =
            inner_product(ClassFunction::tensor(phi, psi), restrict_to_product(chi, a, b));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("decompose") {
    SUBCASE("irreducibles are their own decomposition") {
        for (int k = 0; k <= 6; ++k)
            for (const Partition& lambda : partitions_of(k)) {
                auto d = decompose(ClassFunction::irreducible(k, lambda));
                CHECK(d.size() == 1);
                CHECK(d.at(lambda) == 1);
            }
    }
    SUBCASE("regular character of S_3") {
        std::vector<mpq_class> vals(partitions_of(3).size(), 0);
        vals[partition_index(single_column(3))] = 6;  // identity class
        auto d = decompose(ClassFunction(3, std::move(vals)));
        CHECK(d.size() == 3);
        CHECK(d.at(P({3})) == 1);
        CHECK(d.at(P({2, 1})) == 2);
        CHECK(d.at(P({1, 1, 1})) == 1);
    }
    SUBCASE("a non-character is rejected") {
        std::vector<mpq_class> vals(partitions_of(2).size());
        vals[partition_index(P({2}))] = -3;
        vals[partition_index(P({1, 1}))] = 1;
        CHECK_THROWS_AS(decompose(ClassFunction(2, std::move(vals))), std::invalid_argument);
        std::vector<mpq_class> frac(partitions_of(2).size());
        frac[partition_index(P({2}))] = 0;
        frac[partition_index(P({1, 1}))] = 1;
        CHECK_THROWS_AS(decompose(ClassFunction(2, std::move(frac))), std::invalid_argument);
    }
}

TEST_CASE("induction from an explicit subgroup") {
    SUBCASE("from the trivial subgroup of S_2") {
        ClassFunction reg = induce_from_subgroup({identity_perm(2)}, {1});
        CHECK(reg.at(P({1, 1})) == 2);
        CHECK(reg.at(P({2})) == 0);
    }
    SUBCASE("square-symmetry subgroup: trivial character") {
        ClassFunction ind = induce_from_subgroup(dihedral_group(), std::vector<mpq_class>(8, 1));
        auto d = decompose(ind);
        CHECK(d.size() == 2);
        CHECK(d.at(P({4})) == 1);
        CHECK(d.at(P({2, 2})) == 1);
    }
    SUBCASE("square-symmetry subgroup: pulled-back sign") {
        ClassFunction ind = induce_from_subgroup(dihedral_group(), dihedral_pulled_back_sign());
        auto d = decompose(ind);
        CHECK(d.size() == 1);
        CHECK(d.at(P({3, 1})) == 1);
    }
    SUBCASE("restriction inner products behind the two inductions") {
        const auto& d4 = dihedral_group();
        mpq_class r22 = 0, r31 = 0;
        for (size_t i = 0; i < d4.size(); ++i) {
            r22 += mpq_class(character_value(P({2, 2}), cycle_type(d4[i])));
            r31 += mpq_class(character_value(P({3, 1}), cycle_type(d4[i]))) *
                   dihedral_pulled_back_sign()[i];
        }
        CHECK(r22 / 8 == 1);
        CHECK(r31 / 8 == 1);
    }
    SUBCASE("non-closed element lists are rejected") {
        Perm three_cycle = {1, 2, 0};
        CHECK_THROWS_AS(
            induce_from_subgroup({identity_perm(3), three_cycle}, {mpq_class(1), mpq_class(1)}),
            std::invalid_argument);
    }
}

TEST_CASE("square-symmetry subgroup data is regenerated from its generators") {
    const auto& d4 = dihedral_group();
    Perm a = {1, 0, 2, 3};  // swaps the first corner pair
    Perm b = {2, 3, 0, 1};  // swaps the two pairs
    std::set<Perm> closure{identity_perm(4)};
    for (bool grew = true; grew;) {
        grew = false;
        std::set<Perm> next = closure;
        for (const Perm& x : closure)
            for (const Perm* g : {&a, &b})
                if (next.insert(compose_perm(*g, x)).second) grew = true;
        closure = next;
    }
    CHECK(closure == std::set<Perm>(d4.begin(), d4.end()));
    CHECK(d4.size() == 8);
    SUBCASE("quotient map is a homomorphism with the stated generator images") {
        const auto& nu = dihedral_quotient_map();
        auto nu_of = [&](const Perm& p) {
            for (size_t i = 0; i < d4.size(); ++i)
                if (d4[i] == p) return nu[i];
            FAIL("not an element");
            return Perm{};
        };
        CHECK(nu_of(a) == identity_perm(2));
        CHECK(nu_of(b) == Perm{1, 0});
        for (const Perm& x : d4)
            for (const Perm& y : d4)
                CHECK(nu_of(compose_perm(x, y)) == compose_perm(nu_of(x), nu_of(y)));
    }
    SUBCASE("pulled-back sign is the sign of the quotient image") {
        const auto& nu = dihedral_quotient_map();
        const auto& sgn = dihedral_pulled_back_sign();
        for (size_t i = 0; i < d4.size(); ++i)
            CHECK(sgn[i] == (nu[i] == identity_perm(2) ? 1 : -1));
    }
    SUBCASE("the first four elements are exactly the corner-keeping ones") {
        std::vector<int> kappa = {0, 0, 1, 1};
        for (size_t i = 0; i < d4.size(); ++i) {
            const Perm& tau = d4[i];
            bool keeps = true;
            for (int x = 0; x < 4; ++x) keeps = keeps && kappa[tau[x]] == kappa[x];
            CHECK(keeps == (i < 4));
        }
    }
}

TEST_CASE("product-group trivial induction") {
    std::vector<std::pair<Perm, Perm>> all;
    for (const Perm& x : symmetric_group(2))
        for (const Perm& y : symmetric_group(2)) all.emplace_back(x, y);
    ClassFunction ind = induce_trivial_from_product_subgroup(all, 2, 2);
    for (const Partition& mu : partitions_of(2))
        for (const Partition& nu : partitions_of(2)) CHECK(ind.at(mu, nu) == 1);
    std::vector<std::pair<Perm, Perm>> diag;
    for (const Perm& x : symmetric_group(2)) diag.emplace_back(x, x);
    ClassFunction d = induce_trivial_from_product_subgroup(diag, 2, 2);
    CHECK(d.at(P({1, 1}), P({1, 1})) == 2);
    CHECK(d.at(P({2}), P({2})) == 2);
    CHECK(d.at(P({2}), P({1, 1})) == 0);
    CHECK(d.at(P({1, 1}), P({2})) == 0);
}

TEST_CASE("lr expansion agrees with induced characters up to size 6") {
    for (int total = 0; total <= 6; ++total)
        for (int a = 0; a <= total; ++a) {
            int b = total - a;
            for (const Partition& lambda : partitions_of(a))
                for (const Partition& delta : partitions_of(b)) {
                    ClassFunction ind = induce_product(ClassFunction::irreducible(a, lambda),
                                                       ClassFunction::irreducible(b, delta));
                    auto dec = decompose(ind);
                    auto lr = lr_expansion(lambda, delta);
                    CHECK(dec.size() == lr.size());
                    for (const auto& [gamma, mult] : lr) CHECK(dec.at(gamma) == mult);
                }
        }
}
