#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecom/bitset.hpp"
#include "ecom/error.hpp"

namespace ecom {

// A permutation of {0..deg-1}, stored as its image vector.
using Permutation = std::vector<int>;

Permutation parse_cycles(const std::string& text, int min_degree = 0);
std::string cycle_string(const Permutation& p);

// A finite group on element ids {0..order-1} with a dense multiplication
// table. Element 0 is always the identity. Construction validates the group
// axioms: Latin square rows/columns, two-sided identity and inverses, and
// associativity (exhaustively up to order 512, sampled above).
class FiniteGroup {
  public:
    static constexpr int default_order_limit = 2000;

    // Validates and relabels so that the identity is element 0.
    static FiniteGroup from_table(const std::vector<std::vector<int>>& table);

    // Closure of the generators under composition; ids follow BFS discovery
    // order (parents in id order, generators in input order), so equal inputs
    // give identical labelings.
    static FiniteGroup from_permutations(const std::vector<Permutation>& gens,
                                         int order_limit = default_order_limit);

    int order() const { return n_; }
    int mul(int a, int b) const { return mul_[a * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int pow(int a, long e) const;
    int element_order(int a) const;

    bool has_names() const { return !names_.empty(); }
    const std::string& name(int a) const { return names_[a]; }
    void set_names(std::vector<std::string> names);

    std::vector<std::vector<int>> table() const;
    std::vector<int> element_orders() const;  // sorted multiset

    // Raw table constructor used by builders that already produce a valid
    // table (still validated).
    static FiniteGroup from_flat_table(int n, std::vector<int> mul);

  private:
    FiniteGroup(int n, std::vector<int> mul);
    void validate() const;

    int n_ = 1;
    std::vector<int> mul_;
    std::vector<int> inv_;
    std::vector<std::string> names_;
};

// Membership set of a subgroup of a fixed ambient group. The ambient group is
// passed explicitly to every operation that needs the multiplication table.
struct Subgroup {
    Bitset members;

    int order() const { return members.count(); }
    bool operator==(const Subgroup& o) const { return members == o.members; }
};

// A left coset g*H; rep is the smallest member id.
struct Coset {
    Bitset members;
    int rep = 0;

    bool operator==(const Coset& o) const { return members == o.members; }
};

Subgroup center(const FiniteGroup& g);
Subgroup centralizer(const FiniteGroup& g, const Bitset& s);
Subgroup subgroup_closure(const FiniteGroup& g, const Bitset& seed);
bool is_subgroup(const FiniteGroup& g, const Bitset& s);
bool is_abelian_set(const FiniteGroup& g, const Bitset& s);
bool is_abelian(const FiniteGroup& g);

// Partition of G into left cosets of h, sorted by canonical representative;
// the subgroup itself comes first.
std::vector<Coset> left_cosets(const FiniteGroup& g, const Subgroup& h);

// Componentwise product; the pair (a,b) gets id a*|G2|+b.
FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2,
                           int order_limit = FiniteGroup::default_order_limit);

}  // namespace ecom
