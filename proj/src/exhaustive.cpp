#include "ecom/exhaustive.hpp"

#include <algorithm>

namespace ecom {

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
    const int n = g.order();
    Bitset trivial(n);
    trivial.set(0);
    std::vector<Bitset> subs{trivial};
    // BFS over the subgroup lattice: every subgroup arises from a smaller one
    // by adjoining a single generator.
    for (size_t i = 0; i < subs.size(); ++i) {
        Bitset base = subs[i];
        for (int x = 0; x < n; ++x) {
            if (base.test(x)) continue;
            Bitset seed = base;
            seed.set(x);
            Bitset grown = subgroup_closure(g, seed).members;
            if (std::find(subs.begin(), subs.end(), grown) == subs.end())
                subs.push_back(std::move(grown));
        }
    }
    std::vector<Subgroup> out;
    for (auto& s : subs) out.push_back(Subgroup{std::move(s)});
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() > b.order();
        return Bitset::lex_less(a.members, b.members);
    });
    return out;
}

std::vector<Subgroup> all_abelian_subgroups(const FiniteGroup& g) {
    std::vector<Subgroup> out;
    for (auto& s : all_subgroups(g))
        if (is_abelian_set(g, s.members)) out.push_back(std::move(s));
    return out;
}

std::vector<Subgroup> maximal_abelian_oracle(const FiniteGroup& g) {
    auto abelian = all_abelian_subgroups(g);
    std::vector<Subgroup> out;
    for (const auto& s : abelian) {
        bool maximal = true;
        for (const auto& t : abelian)
            if (!(s == t) && s.members.is_subset_of(t.members)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(s);
    }
    return out;  // all_subgroups already sorts (order desc, lex)
}

CosetPoset build_abelian_coset_poset(const FiniteGroup& g, long node_limit) {
    return poset_from_subgroups(g, all_abelian_subgroups(g), node_limit);
}

}  // namespace ecom
