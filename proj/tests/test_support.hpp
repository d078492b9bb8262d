#pragma once

#include <random>
#include <vector>

#include "ecom/catalog.hpp"
#include "ecom/group.hpp"

namespace ecom::test {

// Deterministic sample of small groups from random permutation generators.
// Rejects closures above max_order, so every accepted group has order in
// [1, max_order].
inline std::vector<FiniteGroup> random_small_groups(int count, int max_order,
                                                    unsigned seed = 20260809u) {
    std::mt19937 rng(seed);
    std::vector<FiniteGroup> out;
    while ((int)out.size() < count) {
        std::uniform_int_distribution<int> deg_dist(3, 7);
        int deg = deg_dist(rng);
        std::vector<Permutation> gens;
        for (int k = 0; k < 2; ++k) {
            Permutation p(deg);
            for (int i = 0; i < deg; ++i) p[i] = i;
            std::shuffle(p.begin(), p.end(), rng);
            gens.push_back(std::move(p));
        }
        try {
            out.push_back(FiniteGroup::from_permutations(gens, max_order));
        } catch (const error& e) {
            if (e.code() != errc::order_limit) throw;
        }
    }
    return out;
}

// The groups of order <= 48 used to pin down the fast enumerator against the
// exhaustive one.
inline std::vector<std::pair<std::string, FiniteGroup>> oracle_stock() {
    std::vector<std::pair<std::string, FiniteGroup>> out;
    for (const char* spec : {"Q,2", "Q,3", "Q,4", "Q,5", "Q,6", "P48", "Pprime,1", "D,2,1",
                             "D,3,1", "D,2,2", "D,3,2", "Z1", "Z2", "Z6", "V4", "E8", "S3", "S4",
                             "A4"})
        out.emplace_back(spec, make_catalog(spec));
    out.emplace_back("Q8xZ3", direct_product(make_catalog("Q,2"), make_catalog("Z3")));
    out.emplace_back("S3xS3", direct_product(make_catalog("S3"), make_catalog("S3")));
    return out;
}

}  // namespace ecom::test
