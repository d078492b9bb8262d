#include "ecom/abelian_poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ecom {

namespace {

std::vector<Bitset> element_centralizers(const FiniteGroup& g) {
    const int n = g.order();
    std::vector<Bitset> cent(n, Bitset(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.mul(a, b) == g.mul(b, a)) cent[a].set(b);
    return cent;
}

Bitset centralizer_of_set(const std::vector<Bitset>& cent, const Bitset& s) {
    Bitset c = Bitset::full((int)cent.size());
    for (int x = s.first(); x != -1; x = s.next(x)) c &= cent[x];
    return c;
}

bool subgroup_order_less(const Subgroup& a, const Subgroup& b) {
    int ca = a.members.count(), cb = b.members.count();
    if (ca != cb) return ca > cb;
    return Bitset::lex_less(a.members, b.members);
}

void sort_subgroups(std::vector<Subgroup>& v) { std::sort(v.begin(), v.end(), subgroup_order_less); }

}  // namespace

std::vector<Subgroup> maximal_abelian_subgroups(const FiniteGroup& g) {
    const int n = g.order();
    const std::vector<Bitset> cent = element_centralizers(g);

    Bitset z = Bitset::full(n);
    for (int a = 0; a < n; ++a) z &= cent[a];

    std::vector<Bitset> found;
    auto add_unique = [&](const Bitset& s) {
        if (std::find(found.begin(), found.end(), s) == found.end()) found.push_back(s);
    };

    // Greedy growth from every element.
    for (int seed = 0; seed < n; ++seed) {
        Bitset a = z;
        a.set(seed);
        a = subgroup_closure(g, a).members;
        while (true) {
            Bitset c = centralizer_of_set(cent, a);
            if (c == a) break;  // C(A) = A: no single commuting element extends A
            Bitset candidates = minus(c, a);
            int pick = candidates.first();
            a.set(pick);
            a = subgroup_closure(g, a).members;
        }
        add_unique(a);
    }

    // Completeness sweep: every maximal abelian subgroup M satisfies
    // M = C(M) = intersection of the centralizers of its elements, so it lies
    // in the intersection closure of the element centralizers; conversely an
    // X there with C(X) = X is abelian and maximal.
    std::vector<Bitset> closure;
    for (int a = 0; a < n; ++a)
        if (std::find(closure.begin(), closure.end(), cent[a]) == closure.end())
            closure.push_back(cent[a]);
    for (size_t i = 0; i < closure.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
            Bitset meet = closure[i] & closure[j];
            if (std::find(closure.begin(), closure.end(), meet) == closure.end())
                closure.push_back(std::move(meet));
        }
    for (const Bitset& x : closure)
        if (centralizer_of_set(cent, x) == x) add_unique(x);

    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (auto& s : found) out.push_back(Subgroup{std::move(s)});
    sort_subgroups(out);
    return out;
}

MaxAbelianFamily max_abelian_family(const FiniteGroup& g) {
    MaxAbelianFamily fam;
    fam.maximals = maximal_abelian_subgroups(g);

    std::vector<Bitset> closure;
    for (const auto& m : fam.maximals) closure.push_back(m.members);
    for (size_t i = 0; i < closure.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
            Bitset meet = closure[i] & closure[j];
            if (std::find(closure.begin(), closure.end(), meet) == closure.end())
                closure.push_back(std::move(meet));
        }
    for (auto& s : closure) fam.intersection_closure.push_back(Subgroup{std::move(s)});
    sort_subgroups(fam.intersection_closure);
    return fam;
}

std::vector<Subgroup> pairwise_intersections(const FiniteGroup&,
                                             const std::vector<Subgroup>& maximals) {
    std::vector<Subgroup> out;
    for (size_t i = 0; i < maximals.size(); ++i)
        for (size_t j = i + 1; j < maximals.size(); ++j) {
            Subgroup meet{maximals[i].members & maximals[j].members};
            if (std::find(out.begin(), out.end(), meet) == out.end()) out.push_back(std::move(meet));
        }
    sort_subgroups(out);
    return out;
}

bool is_height1(const FiniteGroup& g) {
    auto maximals = maximal_abelian_subgroups(g);
    Bitset z = center(g).members;
    for (size_t i = 0; i < maximals.size(); ++i)
        for (size_t j = i + 1; j < maximals.size(); ++j)
            if (!((maximals[i].members & maximals[j].members) == z)) return false;
    return true;
}

CosetPoset build_coset_poset(const FiniteGroup& g, long node_limit) {
    MaxAbelianFamily fam = max_abelian_family(g);
    return poset_from_subgroups(g, std::move(fam.intersection_closure), node_limit);
}

CosetPoset poset_from_subgroups(const FiniteGroup& g, std::vector<Subgroup> subgroups,
                                long node_limit) {
    CosetPoset poset;
    poset.group_order = g.order();
    poset.subgroups = std::move(subgroups);
    const int ns = (int)poset.subgroups.size();
    const int n = g.order();

    long total = 0;
    for (const auto& b : poset.subgroups) total += n / b.order();
    if (total > node_limit)
        fail(errc::poset_size, "coset poset would have " + std::to_string(total) +
                                   " nodes, exceeding the limit " + std::to_string(node_limit));

    for (int s = 0; s < ns; ++s)
        for (auto& c : left_cosets(g, poset.subgroups[s]))
            poset.nodes.push_back(PosetNode{s, c.rep, std::move(c.members)});

    std::sort(poset.nodes.begin(), poset.nodes.end(), [&](const PosetNode& a, const PosetNode& b) {
        int ca = poset.subgroups[a.subgroup].order(), cb = poset.subgroups[b.subgroup].order();
        if (ca != cb) return ca > cb;
        if (a.rep != b.rep) return a.rep < b.rep;
        return Bitset::lex_less(a.members, b.members);
    });

    const int nv = (int)poset.nodes.size();

    // g*B1 < h*B2 iff B1 < B2 and the representative of g*B1 lies in h*B2,
    // so the strict order follows from subgroup containment plus an
    // element-to-coset index per subgroup.
    std::vector<std::vector<int>> elem_to_node(ns, std::vector<int>(n, -1));
    for (int i = 0; i < nv; ++i) {
        const auto& nd = poset.nodes[i];
        for (int x = nd.members.first(); x != -1; x = nd.members.next(x))
            elem_to_node[nd.subgroup][x] = i;
    }
    std::vector<std::vector<int>> sub_above(ns);  // strictly containing subgroups
    for (int s = 0; s < ns; ++s)
        for (int t = 0; t < ns; ++t)
            if (s != t && poset.subgroups[s].members.is_subset_of(poset.subgroups[t].members) &&
                !(poset.subgroups[s] == poset.subgroups[t]))
                sub_above[s].push_back(t);

    std::vector<Bitset> above(nv, Bitset(nv)), below(nv, Bitset(nv));
    for (int i = 0; i < nv; ++i)
        for (int t : sub_above[poset.nodes[i].subgroup]) {
            int j = elem_to_node[t][poset.nodes[i].rep];
            above[i].set(j);
            below[j].set(i);
            ++poset.strict_pairs;
        }

    // Hasse diagram = transitive reduction: (x,y) covers iff nothing lies
    // strictly between.
    for (int x = 0; x < nv; ++x)
        for (int y = above[x].first(); y != -1; y = above[x].next(y))
            if ((above[x] & below[y]).none()) poset.hasse.emplace_back(x, y);
    std::sort(poset.hasse.begin(), poset.hasse.end());

    // Height: longest chain, by DP over nodes in increasing member count.
    std::vector<int> order(nv);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return poset.nodes[a].members.count() < poset.nodes[b].members.count();
    });
    std::vector<int> h(nv, 0);
    for (int x : order)
        for (int y = above[x].first(); y != -1; y = above[x].next(y))
            h[y] = std::max(h[y], h[x] + 1);
    poset.height = nv ? *std::max_element(h.begin(), h.end()) : 0;

    // Connectivity of the comparability graph.
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int x = 0; x < nv; ++x)
        for (int y = above[x].first(); y != -1; y = above[x].next(y)) parent[find(x)] = find(y);
    int comps = 0;
    for (int x = 0; x < nv; ++x) comps += find(x) == x;
    poset.connected = comps <= 1;

    return poset;
}

long circles_from_euler(const CosetPoset& p) {
    if (p.height >= 2)
        fail(errc::height_too_large,
             "Euler circle count needs a height <= 1 poset, got height " +
                 std::to_string(p.height));
    if (!p.connected) fail(errc::disconnected, "coset poset is not connected");
    return (long)p.hasse.size() - (long)p.nodes.size() + 1;
}

std::vector<Bitset> strict_order_from_hasse(int n, const std::vector<std::pair<int, int>>& hasse) {
    std::vector<std::vector<int>> up(n);
    for (auto [lo, hi] : hasse) up[lo].push_back(hi);
    std::vector<Bitset> above(n, Bitset(n));
    std::vector<char> done(n, 0);
    // Iterative DFS with memoization.
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (done[start]) continue;
        stack.push_back(start);
        while (!stack.empty()) {
            int x = stack.back();
            bool ready = true;
            for (int y : up[x])
                if (!done[y]) {
                    stack.push_back(y);
                    ready = false;
                }
            if (!ready) continue;
            stack.pop_back();
            if (done[x]) continue;
            for (int y : up[x]) {
                above[x].set(y);
                above[x] |= above[y];
            }
            done[x] = 1;
        }
    }
    return above;
}

std::vector<Bitset> Poset::below() const {
    std::vector<Bitset> b(n, Bitset(n));
    for (int i = 0; i < n; ++i)
        for (int j = above[i].first(); j != -1; j = above[i].next(j)) b[j].set(i);
    return b;
}

Poset to_poset(const CosetPoset& p) {
    Poset q;
    q.n = (int)p.nodes.size();
    q.above = strict_order_from_hasse(q.n, p.hasse);
    return q;
}

Poset product_poset(const Poset& a, const Poset& b, long node_limit) {
    long total = (long)a.n * b.n;
    if (total > node_limit)
        fail(errc::poset_size, "product poset would have " + std::to_string(total) +
                                   " nodes, exceeding the limit " + std::to_string(node_limit));
    Poset p;
    p.n = (int)total;
    p.above.assign(p.n, Bitset(p.n));
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < b.n; ++j) {
            Bitset& up = p.above[i * b.n + j];
            for (int k = i; k != -1; k = (k == i ? a.above[i].first() : a.above[i].next(k)))
                for (int l = j; l != -1; l = (l == j ? b.above[j].first() : b.above[j].next(l)))
                    up.set(k * b.n + l);
            up.reset(i * b.n + j);
        }
    return p;
}

namespace {

// Joint color refinement: nodes of both posets get colors from a shared
// dictionary keyed on (old color, multiset of colors above, multiset below).
struct Refinement {
    std::vector<int> color_a, color_b;

    static Refinement run(const Poset& a, const Poset& b) {
        Refinement r;
        r.color_a.assign(a.n, 0);
        r.color_b.assign(b.n, 0);
        auto below_a = a.below();
        auto below_b = b.below();

        auto signature = [](const Poset& p, const std::vector<Bitset>& below,
                            const std::vector<int>& color, int x) {
            std::vector<int> up, down;
            for (int y = p.above[x].first(); y != -1; y = p.above[x].next(y))
                up.push_back(color[y]);
            for (int y = below[x].first(); y != -1; y = below[x].next(y))
                down.push_back(color[y]);
            std::sort(up.begin(), up.end());
            std::sort(down.begin(), down.end());
            std::vector<int> sig{color[x], (int)up.size(), (int)down.size(), -1};
            sig.insert(sig.end(), up.begin(), up.end());
            sig.push_back(-1);
            sig.insert(sig.end(), down.begin(), down.end());
            return sig;
        };

        int ncolors = 1;
        for (int round = 0; round < a.n + 1; ++round) {
            std::map<std::vector<int>, int> dict;
            std::vector<int> na(a.n), nb(b.n);
            for (int x = 0; x < a.n; ++x) {
                auto sig = signature(a, below_a, r.color_a, x);
                auto it = dict.emplace(std::move(sig), (int)dict.size()).first;
                na[x] = it->second;
            }
            for (int x = 0; x < b.n; ++x) {
                auto sig = signature(b, below_b, r.color_b, x);
                auto it = dict.emplace(std::move(sig), (int)dict.size()).first;
                nb[x] = it->second;
            }
            bool stable = (int)dict.size() == ncolors;
            ncolors = (int)dict.size();
            r.color_a = std::move(na);
            r.color_b = std::move(nb);
            if (stable) break;
        }
        return r;
    }
};

}  // namespace

bool poset_isomorphic(const Poset& a, const Poset& b) {
    if (a.n != b.n) return false;
    if (a.n == 0) return true;
    long pairs_a = 0, pairs_b = 0;
    for (const auto& s : a.above) pairs_a += s.count();
    for (const auto& s : b.above) pairs_b += s.count();
    if (pairs_a != pairs_b) return false;

    Refinement ref = Refinement::run(a, b);
    std::map<int, int> count_a, count_b;
    for (int c : ref.color_a) count_a[c]++;
    for (int c : ref.color_b) count_b[c]++;
    if (count_a != count_b) return false;

    // Map nodes of a in order of ascending color-class size.
    std::vector<int> order(a.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        auto kx = std::pair(count_a[ref.color_a[x]], x);
        auto ky = std::pair(count_a[ref.color_a[y]], y);
        return kx < ky;
    });

    std::vector<int> map_ab(a.n, -1), used_b(b.n, 0);
    auto below_a = a.below();
    auto below_b = b.below();

    auto consistent = [&](int x, int y, int depth) {
        for (int d = 0; d < depth; ++d) {
            int u = order[d], v = map_ab[u];
            if (a.above[u].test(x) != b.above[v].test(y)) return false;
            if (below_a[u].test(x) != below_b[v].test(y)) return false;
        }
        return true;
    };

    // Plain depth-first backtracking over color-compatible candidates.
    std::vector<int> choice(a.n, -1);
    int depth = 0;
    while (true) {
        int x = order[depth];
        int y = choice[depth] + 1;
        bool advanced = false;
        for (; y < b.n; ++y) {
            if (used_b[y] || ref.color_b[y] != ref.color_a[x]) continue;
            if (!consistent(x, y, depth)) continue;
            choice[depth] = y;
            map_ab[x] = y;
            used_b[y] = 1;
            advanced = true;
            break;
        }
        if (advanced) {
            if (++depth == a.n) return true;
            choice[depth] = -1;
        } else {
            choice[depth] = -1;
            if (--depth < 0) return false;
            used_b[map_ab[order[depth]]] = 0;
            map_ab[order[depth]] = -1;
        }
    }
}

}  // namespace ecom
