#include <algorithm>
#include <set>

#include "doctest.h"
#include "ecom/abelian_poset.hpp"
#include "ecom/catalog.hpp"
#include "ecom/exhaustive.hpp"
#include "test_support.hpp"

using namespace ecom;

TEST_CASE("maximal abelian subgroups of the basic examples") {
    FiniteGroup q8 = make_quaternion(2);
    auto max_q8 = maximal_abelian_subgroups(q8);
    REQUIRE(max_q8.size() == 3);
    for (const auto& m : max_q8) CHECK(m.order() == 4);

    FiniteGroup z6 = make_catalog("Z6");
    auto max_z6 = maximal_abelian_subgroups(z6);
    REQUIRE(max_z6.size() == 1);
    CHECK(max_z6[0].order() == 6);

    FiniteGroup q8z3 = direct_product(q8, make_catalog("Z3"));
    auto max_prod = maximal_abelian_subgroups(q8z3);
    REQUIRE(max_prod.size() == 3);
    for (const auto& m : max_prod) CHECK(m.order() == 12);

    // Maximals of a product are products of maximals.
    CHECK(max_prod == maximal_abelian_oracle(q8z3));
}

TEST_CASE("pairwise intersections and the height-1 predicate") {
    FiniteGroup q8 = make_quaternion(2);
    auto meets = pairwise_intersections(q8, maximal_abelian_subgroups(q8));
    REQUIRE(meets.size() == 1);
    CHECK(meets[0].members == center(q8).members);

    FiniteGroup s3 = make_catalog("S3");
    auto meets_s3 = pairwise_intersections(s3, maximal_abelian_subgroups(s3));
    REQUIRE(meets_s3.size() == 1);
    CHECK(meets_s3[0].order() == 1);

    CHECK(pairwise_intersections(s3, {maximal_abelian_subgroups(s3)[0]}).empty());

    CHECK(is_height1(q8));
    CHECK(is_height1(s3));
    CHECK(is_height1(make_catalog("Z6")));  // vacuous
    CHECK(is_height1(make_catalog("A4")));
    CHECK_FALSE(is_height1(make_catalog("S4")));
}

TEST_CASE("every maximal contains the center; their meet is the center") {
    for (const auto& [name, g] : ecom::test::oracle_stock()) {
        CAPTURE(name);
        auto fam = max_abelian_family(g);
        Bitset z = center(g).members;
        Bitset covered(g.order());
        Bitset meet = Bitset::full(g.order());
        for (const auto& m : fam.maximals) {
            CHECK(z.is_subset_of(m.members));
            CHECK(is_abelian_set(g, m.members));
            CHECK(is_subgroup(g, m.members));
            covered |= m.members;
            meet &= m.members;
        }
        CHECK(covered == Bitset::full(g.order()));
        CHECK(meet == z);
        // The closure's unique minimum is the center.
        CHECK(fam.intersection_closure.back().members == z);
        for (const auto& s : fam.intersection_closure) CHECK(z.is_subset_of(s.members));
    }
}

TEST_CASE("fast enumerator agrees with the exhaustive oracle") {
    for (const char* spec : {"Q,2", "S3", "S4", "A4", "D,3,1", "Pprime,1"}) {
        CAPTURE(spec);
        FiniteGroup g = make_catalog(spec);
        CHECK(maximal_abelian_subgroups(g) == maximal_abelian_oracle(g));
    }
}

TEST_CASE("coset poset of Q8 matches the published census") {
    FiniteGroup q8 = make_quaternion(2);
    CosetPoset p = build_coset_poset(q8);
    CHECK(p.nodes.size() == 10);   // n^2 + 2n + 2 with n = 2
    CHECK(p.hasse.size() == 12);   // 2n^2 + 2n
    CHECK(p.height == 1);
    CHECK(p.connected);
    CHECK(circles_from_euler(p) == 3);  // n^2 - 1

    // 6 maximal cosets + 4 center cosets, and per-subgroup counts [G:B].
    REQUIRE(p.subgroups.size() == 4);
    for (size_t s = 0; s < p.subgroups.size(); ++s) {
        long count = std::count_if(p.nodes.begin(), p.nodes.end(),
                                   [&](const PosetNode& n) { return n.subgroup == (int)s; });
        CHECK(count == q8.order() / p.subgroups[s].order());
    }
}

TEST_CASE("abelian groups give a point poset") {
    CosetPoset p = build_coset_poset(make_catalog("Z6"));
    CHECK(p.nodes.size() == 1);
    CHECK(p.height == 0);
    CHECK(p.hasse.empty());
    CHECK(circles_from_euler(p) == 0);
}

TEST_CASE("metacyclic and symmetric counts") {
    CosetPoset d12 = build_coset_poset(make_dihedral_type(2, 1));
    CHECK(circles_from_euler(d12) == 8);  // (2n+1)^2 - 1 with n = 1

    CosetPoset d20 = build_coset_poset(make_dihedral_type(2, 2));
    CHECK(circles_from_euler(d20) == 24);

    CosetPoset s3 = build_coset_poset(make_catalog("S3"));
    CHECK(s3.nodes.size() == 17);
    CHECK(s3.hasse.size() == 24);
    CHECK(circles_from_euler(s3) == 8);

    CosetPoset s4 = build_coset_poset(make_catalog("S4"));
    CHECK(s4.height == 2);
    CHECK_THROWS_AS(circles_from_euler(s4), error);
}

TEST_CASE("node ordering is deterministic and nodes are distinct") {
    for (const char* spec : {"Q,3", "S4", "A4"}) {
        CosetPoset p = build_coset_poset(make_catalog(spec));
        std::set<std::vector<int>> seen;
        for (size_t i = 0; i < p.nodes.size(); ++i) {
            CHECK(seen.insert(p.nodes[i].members.to_vector()).second);
            CHECK(p.nodes[i].rep == p.nodes[i].members.first());
            if (i) {
                int prev = p.subgroups[p.nodes[i - 1].subgroup].order();
                int cur = p.subgroups[p.nodes[i].subgroup].order();
                CHECK(prev >= cur);
                if (prev == cur) CHECK(p.nodes[i - 1].rep <= p.nodes[i].rep);
            }
        }
        // Hasse edges are strict covers.
        auto above = strict_order_from_hasse((int)p.nodes.size(), p.hasse);
        for (auto [lo, hi] : p.hasse) {
            CHECK(p.nodes[lo].members.is_subset_of(p.nodes[hi].members));
            CHECK(p.nodes[lo].members.count() < p.nodes[hi].members.count());
        }
    }
}

TEST_CASE("poset size limit") {
    CHECK_THROWS_AS(build_coset_poset(make_catalog("P48"), 50), error);
}

TEST_CASE("product posets and isomorphism") {
    Poset point{1, {Bitset(1)}};

    Poset q8 = to_poset(build_coset_poset(make_quaternion(2)));
    CHECK(poset_isomorphic(q8, q8));
    CHECK(poset_isomorphic(product_poset(q8, point), q8));

    // Chain of length 1 vs antichain of two points.
    Poset chain{2, {Bitset::of(2, {1}), Bitset(2)}};
    Poset antichain{2, {Bitset(2), Bitset(2)}};
    CHECK_FALSE(poset_isomorphic(chain, antichain));

    // mAbCo(Q8 x Z3) is a point product away from mAbCo(Q8).
    FiniteGroup q8z3 = direct_product(make_quaternion(2), make_catalog("Z3"));
    Poset lhs = to_poset(build_coset_poset(q8z3));
    CHECK(poset_isomorphic(lhs, q8));

    // mAbCo(S3 x S3) against the abstract product of two copies.
    FiniteGroup s3 = make_catalog("S3");
    Poset m = to_poset(build_coset_poset(s3));
    Poset direct = to_poset(build_coset_poset(direct_product(s3, s3)));
    CHECK(poset_isomorphic(direct, product_poset(m, m)));

    // The order-12 metacyclic group is a central double cover of S3, and
    // quotienting by the center leaves the coset poset unchanged.
    Poset d12 = to_poset(build_coset_poset(make_dihedral_type(2, 1)));
    CHECK(poset_isomorphic(m, d12));
    CHECK_FALSE(poset_isomorphic(m, q8));
}

TEST_CASE("exhaustive coset poset over all abelian subgroups") {
    // AbCo(S3): 6 singleton cosets, 9 reflection cosets, 2 rotation cosets.
    CosetPoset abco = build_abelian_coset_poset(make_catalog("S3"));
    CHECK(abco.nodes.size() == 17);
    CHECK(abco.connected);
}
