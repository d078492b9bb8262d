#pragma once

#include <utility>
#include <vector>

#include "ecom/group.hpp"

namespace ecom {

// Maximal abelian subgroups of G together with the closure of the family
// under intersection. The closure always contains the center, which is its
// unique minimum and equals the intersection of all maximals.
struct MaxAbelianFamily {
    std::vector<Subgroup> maximals;             // sorted by (order desc, members lex)
    std::vector<Subgroup> intersection_closure;  // includes the maximals, same sort
};

// Exactly the inclusion-maximal abelian subgroups, each containing the
// center. A greedy growth pass seeds one subgroup per element (adjoining the
// smallest centralizing element until the centralizer is the subgroup
// itself); a sweep over the intersection closure of element centralizers then
// picks up any maximal abelian subgroup all of whose elements were claimed by
// other maximals, which the greedy pass alone can miss.
std::vector<Subgroup> maximal_abelian_subgroups(const FiniteGroup& g);

MaxAbelianFamily max_abelian_family(const FiniteGroup& g);

// Intersections of all unordered pairs, deduplicated.
std::vector<Subgroup> pairwise_intersections(const FiniteGroup& g,
                                             const std::vector<Subgroup>& maximals);

// True iff every pairwise intersection of maximal abelian subgroups equals
// the center (vacuously true for abelian groups).
bool is_height1(const FiniteGroup& g);

struct PosetNode {
    int subgroup = 0;  // index into CosetPoset::subgroups
    int rep = 0;       // canonical (smallest) member
    Bitset members;
};

// The poset of cosets g*B, B ranging over the intersection closure of the
// maximal abelian subgroups, ordered by strict inclusion and stored as a
// Hasse diagram.
struct CosetPoset {
    int group_order = 0;
    std::vector<Subgroup> subgroups;  // intersection closure, (order desc, lex)
    std::vector<PosetNode> nodes;     // (subgroup order desc, rep asc, members lex)
    std::vector<std::pair<int, int>> hasse;  // (lower, upper) covering pairs
    int height = 0;
    bool connected = true;
    long strict_pairs = 0;  // number of strict inclusions

    static constexpr long default_node_limit = 200000;
};

CosetPoset build_coset_poset(const FiniteGroup& g,
                             long node_limit = CosetPoset::default_node_limit);

// Coset poset of an arbitrary deduplicated subgroup family (the generic
// machinery behind build_coset_poset and the exhaustive reference path).
CosetPoset poset_from_subgroups(const FiniteGroup& g, std::vector<Subgroup> subgroups,
                                long node_limit);

// First Betti number E - V + 1 of the comparability graph. Only valid while
// the poset is a graph, i.e. height <= 1; larger heights raise an error.
long circles_from_euler(const CosetPoset& p);

// Abstract finite poset, stored as the full strict order.
struct Poset {
    int n = 0;
    std::vector<Bitset> above;  // above[i] = nodes strictly greater than i

    std::vector<Bitset> below() const;
};

Poset to_poset(const CosetPoset& p);

// Cartesian product with componentwise order.
Poset product_poset(const Poset& a, const Poset& b,
                    long node_limit = CosetPoset::default_node_limit);

// Order isomorphism test: joint color refinement over degree/level
// signatures, then backtracking inside the color classes.
bool poset_isomorphic(const Poset& a, const Poset& b);

// Strict-order bitsets from a Hasse diagram (memoized DFS).
std::vector<Bitset> strict_order_from_hasse(int n, const std::vector<std::pair<int, int>>& hasse);

}  // namespace ecom
