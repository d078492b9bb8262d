#pragma once

#include "ecom/abelian_poset.hpp"
#include "ecom/group.hpp"

namespace ecom {

// Exhaustive reference paths. These enumerate the full subgroup lattice, so
// they are only meant for small groups; the fast enumerator in abelian_poset
// is cross-checked against them.

// Every subgroup, by closing known subgroups under one extra generator.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

std::vector<Subgroup> all_abelian_subgroups(const FiniteGroup& g);

// Inclusion-maximal members of all_abelian_subgroups, sorted like
// maximal_abelian_subgroups.
std::vector<Subgroup> maximal_abelian_oracle(const FiniteGroup& g);

// The poset of cosets of ALL abelian subgroups (including the trivial one).
// Its realization is homotopy equivalent to the coset poset over the
// intersection closure of the maximals, which makes it an independent check.
CosetPoset build_abelian_coset_poset(const FiniteGroup& g,
                                     long node_limit = CosetPoset::default_node_limit);

}  // namespace ecom
