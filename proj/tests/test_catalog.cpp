#include <algorithm>

#include "doctest.h"
#include "ecom/abelian_poset.hpp"
#include "ecom/catalog.hpp"
#include "ecom/exhaustive.hpp"

using namespace ecom;

namespace {

// Q8 from the quaternion unit rules i^2 = j^2 = k^2 = -1, i*j = k, j*k = i,
// k*i = j. Elements are (axis, sign) pairs: 0:+1 1:-1 2:+i 3:-i 4:+j 5:-j
// 6:+k 7:-k.
FiniteGroup quaternion_units() {
    auto mul = [](int a, int b) {
        int ax = a / 2, sa = a % 2, bx = b / 2, sb = b % 2;
        int sign = sa ^ sb;
        int axis;
        if (ax == 0) {
            axis = bx;
        } else if (bx == 0) {
            axis = ax;
        } else if (ax == bx) {
            axis = 0;
            sign ^= 1;  // i*i = -1
        } else {
            // i*j = k and cyclic; swapped order flips the sign.
            axis = 6 - ax - bx;  // axes 1,2,3 code i,j,k; pick the third
            bool forward = (bx - ax + 3) % 3 == 1;
            if (!forward) sign ^= 1;
        }
        return 2 * axis + sign;
    };
    std::vector<std::vector<int>> table(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) table[a][b] = mul(a, b);
    return FiniteGroup::from_table(table);
}

}  // namespace

TEST_CASE("quaternion unit table agrees with the normal-form construction") {
    FiniteGroup units = quaternion_units();
    FiniteGroup q8 = make_quaternion(2);
    CHECK(units.order() == 8);
    CHECK(center(units).order() == 2);
    CHECK(units.element_orders() == q8.element_orders());
    CHECK(units.element_orders() == std::vector<int>{1, 2, 4, 4, 4, 4, 4, 4});
    CHECK(poset_isomorphic(to_poset(build_coset_poset(units)),
                           to_poset(build_coset_poset(q8))));
}

TEST_CASE("generalized quaternion series") {
    for (int n = 2; n <= 8; ++n) {
        CAPTURE(n);
        FiniteGroup g = make_quaternion(n);
        CHECK(g.order() == 4 * n);
        CHECK(center(g).order() == 2);
        auto maximals = maximal_abelian_subgroups(g);
        CHECK((int)maximals.size() == n + 1);
        CosetPoset p = build_coset_poset(g);
        CHECK((long)p.nodes.size() == (long)n * n + 2 * n + 2);
        CHECK((long)p.hasse.size() == 2L * n * n + 2 * n);
    }
    CHECK_THROWS_AS(make_quaternion(1), error);
    CHECK_THROWS_AS(make_quaternion(600), error);
}

TEST_CASE("metacyclic family") {
    FiniteGroup d12 = make_dihedral_type(2, 1);
    CHECK(d12.order() == 12);
    CHECK(center(d12).order() == 2);
    // x = (i=1, a=0) has id 3 in the x^i y^a layout with 2n+1 = 3; x^2 is
    // central.
    int x = 3;
    CHECK(center(d12).members.test(d12.mul(x, x)));

    FiniteGroup d24 = make_dihedral_type(3, 1);
    CHECK(d24.order() == 24);
    CHECK(center(d24).order() == 4);

    FiniteGroup d20 = make_dihedral_type(2, 2);
    CHECK(d20.order() == 20);

    CHECK_THROWS_AS(make_dihedral_type(1, 1), error);
    CHECK_THROWS_AS(make_dihedral_type(2, 0), error);
}

TEST_CASE("binary octahedral and icosahedral groups") {
    FiniteGroup p48 = make_binary_octahedral();
    CHECK(p48.order() == 48);
    CHECK(center(p48).order() == 2);
    CHECK(is_height1(p48));

    FiniteGroup p120 = make_binary_icosahedral();
    CHECK(p120.order() == 120);
    CHECK(center(p120).order() == 2);
}

TEST_CASE("order 8*3^m family") {
    FiniteGroup p24 = make_p_prime();
    CHECK(p24.order() == 24);
    CHECK(center(p24).order() == 2);

    RealizedGroup rg = todd_coxeter(parse_presentation(
        "< x, y, z | x^2 = (x*y)^2 = y^2, z*x*z^-1 = y, z*y*z^-1 = x*y, z^3 = 1 >"));
    int x = rg.generator_ids[0], y = rg.generator_ids[1];
    CHECK(rg.group.mul(x, y) != rg.group.mul(y, x));
}

TEST_CASE("small group stock") {
    CHECK(make_small("Z6").order() == 6);
    CHECK(is_abelian(make_small("Z6")));
    CHECK(make_small("A4").order() == 12);
    CHECK(make_small("S4").order() == 24);
    CHECK_FALSE(is_abelian(make_small("S3")));
    CHECK(make_small("V4").order() == 4);
    CHECK(make_small("E8").order() == 8);
    CHECK(center(make_small("E8")).order() == 8);
    CHECK_THROWS_AS(make_small("Z0"), error);
    CHECK_THROWS_AS(make_small("Frobenius"), error);
    CHECK_THROWS_AS(make_small("Z5000"), error);
}

TEST_CASE("catalog specs build with the expected invariants") {
    for (const auto& entry : catalog_entries()) {
        CAPTURE(entry.spec);
        FiniteGroup g = make_catalog(entry.spec);
        CHECK(g.order() == entry.expected_order);
        CHECK(center(g).order() == entry.expected_center_order);
    }
    CHECK_THROWS_AS(make_catalog("Q"), error);
    CHECK_THROWS_AS(make_catalog("Q,notanumber"), error);
    CHECK_THROWS_AS(make_catalog("D,2"), error);
    CHECK_THROWS_AS(make_catalog("S3,1"), error);
}

TEST_CASE("catalog expected circle counts match the poset computation") {
    for (const auto& entry : catalog_entries()) {
        if (!entry.expected_circles || entry.expected_order > 60) continue;
        CAPTURE(entry.spec);
        FiniteGroup g = make_catalog(entry.spec);
        CosetPoset p = build_coset_poset(g);
        if (p.height <= 1) CHECK(circles_from_euler(p) == *entry.expected_circles);
    }
}
