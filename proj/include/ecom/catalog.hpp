#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecom/group.hpp"
#include "ecom/presentation.hpp"

namespace ecom {

// Generalized quaternion group of order 4n (n >= 2), built from the normal
// form x^i y^a with i in {0,1}, 0 <= a < 2n, where y^(2n) = 1, x^2 = y^n and
// x y x^-1 = y^-1.
FiniteGroup make_quaternion(int n, int order_limit = FiniteGroup::default_order_limit);

// Binary octahedral group of order 48, realized by coset enumeration on
// < x, y | x^2 = (x*y)^3 = y^4, x^4 = 1 >.
FiniteGroup make_binary_octahedral();

// Binary icosahedral group of order 120, realized by coset enumeration on
// < x, y | x^2 = (x*y)^3 = y^5, x^4 = 1 >.
FiniteGroup make_binary_icosahedral();

// Split metacyclic group of order 2^m(2n+1) (m >= 2, n >= 1) with
// presentation x^(2^m) = 1, y^(2n+1) = 1, x y x^-1 = y^-1, built from the
// normal form x^i y^a.
FiniteGroup make_dihedral_type(int m, int n, int order_limit = FiniteGroup::default_order_limit);

// Order 8*3^m group < x, y, z | x^2 = (x*y)^2 = y^2, z x z^-1 = y,
// z y z^-1 = x*y, z^(3^m) = 1 >, realized by coset enumeration. m = 1 gives
// the order-24 member of the family.
FiniteGroup make_p_prime(int m = 1, int order_limit = FiniteGroup::default_order_limit);

// Test stock by name: "Z<n>" (cyclic), "V4", "E8" (elementary abelian),
// "S3", "S4", "A4".
FiniteGroup make_small(const std::string& name,
                       int order_limit = FiniteGroup::default_order_limit);

struct CatalogEntry {
    std::string spec;  // constructor spec as accepted by make_catalog, e.g. "Q,2"
    std::vector<long> params;
    int expected_order = 0;
    int expected_center_order = 0;
    std::optional<long> expected_circles;
    std::string circles_formula;  // "" when the count is a fixed number
    std::string presentation;     // "" for table-only entries
};

// The named groups with known expected values, including every target of the
// verification suite.
std::vector<CatalogEntry> catalog_entries();

// Builds a group from a catalog spec: "Q,n", "D,m,n", "P48", "P120",
// "Pprime[,m]", or a make_small name.
FiniteGroup make_catalog(const std::string& spec,
                         int order_limit = FiniteGroup::default_order_limit,
                         int coset_limit = 100000);

}  // namespace ecom
