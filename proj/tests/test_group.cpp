#include <algorithm>

#include "doctest.h"
#include "ecom/catalog.hpp"
#include "ecom/group.hpp"
#include "test_support.hpp"

using namespace ecom;

namespace {

// Order-5 loop with identity and two-sided inverses that is not associative.
const std::vector<std::vector<int>> nonassociative_loop = {
    {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};

Bitset singleton(int n, int x) {
    Bitset s(n);
    s.set(x);
    return s;
}

}  // namespace

TEST_CASE("from_table validates and relabels") {
    CHECK(FiniteGroup::from_table({{0}}).order() == 1);

    FiniteGroup z2 = FiniteGroup::from_table({{0, 1}, {1, 0}});
    CHECK(z2.order() == 2);
    CHECK(z2.inv(1) == 1);

    // Z3 with its identity sitting at label 1: relabeled back to 0.
    FiniteGroup z3 = FiniteGroup::from_table({{2, 0, 1}, {0, 1, 2}, {1, 2, 0}});
    CHECK(z3.order() == 3);
    for (int a = 0; a < 3; ++a) {
        CHECK(z3.mul(0, a) == a);
        CHECK(z3.pow(a, 3) == 0);
    }

    CHECK_THROWS_WITH_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}),
                         doctest::Contains("permutation"), error);
    CHECK_THROWS_WITH_AS(FiniteGroup::from_table({{1, 0}, {0, 1}}),
                         doctest::Contains("identity"), error);
    CHECK_THROWS_WITH_AS(FiniteGroup::from_table(nonassociative_loop),
                         doctest::Contains("associativity fails (witness"), error);
}

TEST_CASE("from_permutations closes generators deterministically") {
    FiniteGroup c3 = FiniteGroup::from_permutations({parse_cycles("(0 1 2)")});
    CHECK(c3.order() == 3);

    FiniteGroup s3 = FiniteGroup::from_permutations({parse_cycles("(0 1)"), parse_cycles("(0 1 2)")});
    CHECK(s3.order() == 6);
    CHECK(is_abelian(s3) == false);

    FiniteGroup a4 =
        FiniteGroup::from_permutations({parse_cycles("(0 1 2)"), parse_cycles("(1 2 3)")});
    CHECK(a4.order() == 12);

    // Same input, same labeling.
    FiniteGroup again =
        FiniteGroup::from_permutations({parse_cycles("(0 1 2)"), parse_cycles("(1 2 3)")});
    CHECK(a4.table() == again.table());

    CHECK_THROWS_AS(FiniteGroup::from_permutations({parse_cycles("(0 1)"), parse_cycles("(0 1 2)")}, 5),
                    error);
}

TEST_CASE("parse_cycles rejects malformed input") {
    CHECK(parse_cycles("(0 1 2)(3 4)") == Permutation{1, 2, 0, 4, 3});
    CHECK(cycle_string(parse_cycles("(0 1 2)(3 4)")) == "(0 1 2)(3 4)");
    CHECK_THROWS_AS(parse_cycles("(0 1)(1 2)"), error);
    CHECK_THROWS_AS(parse_cycles("(0 1"), error);
}

TEST_CASE("center and centralizer") {
    FiniteGroup q8 = make_quaternion(2);
    Subgroup z = center(q8);
    CHECK(z.order() == 2);
    // y^2 = element (0,2) has id 2 in the x^i y^a normal form layout.
    CHECK(z.members.test(0));
    CHECK(z.members.test(2));

    FiniteGroup z6 = make_catalog("Z6");
    CHECK(center(z6).order() == 6);

    FiniteGroup s3 = make_catalog("S3");
    CHECK(center(s3).order() == 1);

    // centralizer(identity) is everything; centralizer(y) in Q8 is <y>.
    CHECK(centralizer(q8, singleton(8, 0)).order() == 8);
    Subgroup cy = centralizer(q8, singleton(8, 1));
    CHECK(cy.order() == 4);
    CHECK(cy.members == subgroup_closure(q8, singleton(8, 1)).members);

    // A transposition in S3 centralizes only itself and the identity.
    for (int a = 1; a < 6; ++a)
        if (s3.element_order(a) == 2) CHECK(centralizer(s3, singleton(6, a)).order() == 2);

    // centralizer(S1 u S2) = centralizer(S1) & centralizer(S2).
    for (int a = 0; a < q8.order(); ++a)
        for (int b = 0; b < q8.order(); ++b) {
            Bitset s(8);
            s.set(a);
            s.set(b);
            CHECK(centralizer(q8, s).members ==
                  (centralizer(q8, singleton(8, a)).members &
                   centralizer(q8, singleton(8, b)).members));
        }
}

TEST_CASE("subgroup_closure") {
    FiniteGroup q8 = make_quaternion(2);
    CHECK(subgroup_closure(q8, singleton(8, 0)).order() == 1);
    CHECK(subgroup_closure(q8, singleton(8, 1)).order() == 4);
    Bitset xy(8);
    xy.set(1);
    xy.set(4);  // y and x
    CHECK(subgroup_closure(q8, xy).order() == 8);

    // Idempotence on every singleton seed of the oracle stock.
    for (const auto& [name, g] : ecom::test::oracle_stock()) {
        for (int a = 0; a < g.order(); a += std::max(1, g.order() / 7)) {
            Subgroup h = subgroup_closure(g, singleton(g.order(), a));
            CHECK(subgroup_closure(g, h.members).members == h.members);
            CHECK(is_subgroup(g, h.members));
            CHECK(g.order() % h.order() == 0);  // Lagrange
        }
    }
}

TEST_CASE("left_cosets partition the group") {
    FiniteGroup q8 = make_quaternion(2);

    Subgroup whole{Bitset::full(8)};
    CHECK(left_cosets(q8, whole).size() == 1);

    Subgroup y = subgroup_closure(q8, singleton(8, 1));
    auto cosets = left_cosets(q8, y);
    CHECK(cosets.size() == 2);
    CHECK(cosets[0].rep == 0);
    CHECK(cosets[0].members == y.members);

    auto zc = left_cosets(q8, center(q8));
    CHECK(zc.size() == 4);

    for (const auto& [name, g] : ecom::test::oracle_stock()) {
        Subgroup h = subgroup_closure(g, singleton(g.order(), g.order() - 1));
        auto cs = left_cosets(g, h);
        CHECK((int)cs.size() == g.order() / h.order());
        Bitset all(g.order());
        int prev_rep = -1;
        for (const auto& c : cs) {
            CHECK(c.members.count() == h.order());
            CHECK(c.rep == c.members.first());
            CHECK(c.rep > prev_rep);
            prev_rep = c.rep;
            CHECK((all & c.members).none());
            all |= c.members;
        }
        CHECK(all == Bitset::full(g.order()));
    }
}

TEST_CASE("direct products") {
    FiniteGroup q8 = make_quaternion(2);
    FiniteGroup trivial = make_catalog("Z1");
    CHECK(direct_product(q8, trivial).table() == q8.table());

    FiniteGroup v4 = direct_product(make_catalog("Z2"), make_catalog("Z2"));
    CHECK(v4.order() == 4);
    CHECK(is_abelian(v4));
    for (int a = 0; a < 4; ++a) CHECK(v4.mul(a, a) == 0);

    FiniteGroup q8z3 = direct_product(q8, make_catalog("Z3"));
    CHECK(q8z3.order() == 24);
    CHECK(center(q8z3).order() == 6);

    // center(G1 x G2) = center(G1) x center(G2), checked through orders and
    // membership.
    FiniteGroup s3 = make_catalog("S3");
    FiniteGroup prod = direct_product(q8, s3);
    Subgroup zp = center(prod);
    CHECK(zp.order() == center(q8).order() * center(s3).order());
    for (int a = 0; a < q8.order(); ++a)
        for (int b = 0; b < s3.order(); ++b)
            CHECK(zp.members.test(a * s3.order() + b) ==
                  (center(q8).members.test(a) && center(s3).members.test(b)));

    CHECK_THROWS_AS(direct_product(q8, q8, 32), error);
}

TEST_CASE("center is abelian, normal, and conjugation-fixed") {
    for (const auto& [name, g] : ecom::test::oracle_stock()) {
        Subgroup z = center(g);
        CHECK(is_abelian_set(g, z.members));
        CHECK(is_subgroup(g, z.members));
        for (int x = 0; x < g.order(); ++x)
            for (int a = z.members.first(); a != -1; a = z.members.next(a))
                CHECK(g.mul(g.mul(x, a), g.inv(x)) == a);
    }
}
