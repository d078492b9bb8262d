#include "ecom/group.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ecom {

namespace {

std::string triple_msg(const char* what, int a, int b, int c) {
    std::ostringstream os;
    os << what << " (witness " << a << "," << b << "," << c << ")";
    return os.str();
}

}  // namespace

Permutation parse_cycles(const std::string& text, int min_degree) {
    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ','))
            ++i;
    };
    skip_ws();
    int max_point = min_degree - 1;
    while (i < text.size()) {
        if (text[i] != '(') fail(errc::bad_input, "expected '(' in cycle notation: " + text);
        ++i;
        std::vector<int> cyc;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (!isdigit((unsigned char)text[i]))
                fail(errc::bad_input, "expected point in cycle notation: " + text);
            int p = 0;
            while (i < text.size() && isdigit((unsigned char)text[i])) p = p * 10 + (text[i++] - '0');
            cyc.push_back(p);
            max_point = std::max(max_point, p);
            skip_ws();
        }
        if (i >= text.size()) fail(errc::bad_input, "unclosed cycle in: " + text);
        ++i;  // ')'
        if (!cyc.empty()) cycles.push_back(cyc);
        skip_ws();
    }
    int deg = max_point + 1;
    Permutation p(deg);
    for (int k = 0; k < deg; ++k) p[k] = k;
    std::vector<bool> used(deg, false);
    for (const auto& cyc : cycles) {
        for (size_t k = 0; k < cyc.size(); ++k) {
            int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
            if (used[from]) fail(errc::bad_input, "point repeated in cycles: " + text);
            used[from] = true;
            p[from] = to;
        }
    }
    return p;
}

std::string cycle_string(const Permutation& p) {
    std::string out;
    std::vector<bool> seen(p.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == (int)i) continue;
        out += '(';
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out += ' ';
            out += std::to_string(j);
            first = false;
            j = p[j];
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

FiniteGroup::FiniteGroup(int n, std::vector<int> mul) : n_(n), mul_(std::move(mul)), inv_(n, -1) {
    validate();
}

FiniteGroup FiniteGroup::from_flat_table(int n, std::vector<int> mul) {
    return FiniteGroup(n, std::move(mul));
}

void FiniteGroup::validate() const {
    const int n = n_;
    if (n <= 0 || (int)mul_.size() != n * n) fail(errc::not_a_group, "table is not square");
    for (int v : mul_)
        if (v < 0 || v >= n) fail(errc::not_a_group, "table entry out of range");

    // Latin square.
    std::vector<char> seen(n);
    for (int a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) {
            int v = mul(a, b);
            if (seen[v]) fail(errc::not_a_group, triple_msg("row is not a permutation", a, b, v));
            seen[v] = 1;
        }
    }
    for (int b = 0; b < n; ++b) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int a = 0; a < n; ++a) {
            int v = mul(a, b);
            if (seen[v]) fail(errc::not_a_group, triple_msg("column is not a permutation", a, b, v));
            seen[v] = 1;
        }
    }

    // Two-sided identity at 0.
    for (int a = 0; a < n; ++a)
        if (mul(0, a) != a || mul(a, 0) != a)
            fail(errc::not_a_group, triple_msg("element 0 is not a two-sided identity", 0, a, mul(0, a)));

    // Two-sided inverses; fills inv_.
    auto* self = const_cast<FiniteGroup*>(this);
    for (int a = 0; a < n; ++a) {
        int b = -1;
        for (int c = 0; c < n; ++c)
            if (mul(a, c) == 0) {
                b = c;
                break;
            }
        if (b == -1 || mul(b, a) != 0)
            fail(errc::not_a_group, triple_msg("no two-sided inverse", a, b, 0));
        self->inv_[a] = b;
    }

    // Associativity: exhaustive when affordable, sampled otherwise (the Latin
    // square check already ran either way).
    if (n <= 512) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int ab = mul(a, b);
                for (int c = 0; c < n; ++c)
                    if (mul(ab, c) != mul(a, mul(b, c)))
                        fail(errc::not_a_group, triple_msg("associativity fails", a, b, c));
            }
    } else {
        uint64_t state = 0x9e3779b97f4a7c15ull;
        auto rnd = [&] {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return (int)(state % n);
        };
        for (int t = 0; t < 200000; ++t) {
            int a = rnd(), b = rnd(), c = rnd();
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                fail(errc::not_a_group, triple_msg("associativity fails", a, b, c));
        }
    }
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table) {
    const int n = (int)table.size();
    if (n == 0) fail(errc::not_a_group, "empty table");
    for (const auto& row : table)
        if ((int)row.size() != n) fail(errc::not_a_group, "table is not square");

    // Find the two-sided identity, then relabel it to 0 by swapping labels.
    int e = -1;
    for (int cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) {
            if (table[cand][a] < 0 || table[cand][a] >= n || table[a][cand] < 0 ||
                table[a][cand] >= n)
                fail(errc::not_a_group, "table entry out of range");
            ok = table[cand][a] == a && table[a][cand] == a;
        }
        if (ok) {
            e = cand;
            break;
        }
    }
    if (e == -1) fail(errc::not_a_group, "no two-sided identity element");

    auto relabel = [&](int x) { return x == e ? 0 : (x == 0 ? e : x); };
    std::vector<int> mul(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            mul[relabel(a) * n + relabel(b)] = relabel(table[a][b]);
    return FiniteGroup(n, std::move(mul));
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Permutation>& gens, int order_limit) {
    size_t deg = 0;
    for (const auto& g : gens) deg = std::max(deg, g.size());
    std::vector<Permutation> padded;
    for (auto g : gens) {
        std::vector<bool> hit(g.size(), false);
        for (int v : g) {
            if (v < 0 || v >= (int)g.size() || hit[v])
                fail(errc::bad_input, "generator is not a permutation");
            hit[v] = true;
        }
        while (g.size() < deg) g.push_back((int)g.size());
        padded.push_back(std::move(g));
    }

    Permutation id(deg);
    for (size_t i = 0; i < deg; ++i) id[i] = (int)i;

    auto compose = [&](const Permutation& p, const Permutation& q) {
        Permutation r(deg);
        for (size_t i = 0; i < deg; ++i) r[i] = p[q[i]];
        return r;
    };

    std::vector<Permutation> elems{id};
    std::map<Permutation, int> index{{id, 0}};
    for (size_t i = 0; i < elems.size(); ++i) {
        for (const auto& g : padded) {
            Permutation q = compose(elems[i], g);
            if (index.emplace(q, (int)elems.size()).second) {
                elems.push_back(std::move(q));
                if ((int)elems.size() > order_limit)
                    fail(errc::order_limit, "permutation closure exceeds order limit " +
                                                std::to_string(order_limit));
            }
        }
    }

    const int n = (int)elems.size();
    std::vector<int> mul(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[a * n + b] = index.at(compose(elems[a], elems[b]));
    FiniteGroup g(n, std::move(mul));
    if (n <= 1000) {
        std::vector<std::string> names(n);
        for (int a = 0; a < n; ++a) names[a] = cycle_string(elems[a]);
        g.set_names(std::move(names));
    }
    return g;
}

void FiniteGroup::set_names(std::vector<std::string> names) {
    if ((int)names.size() != n_) fail(errc::internal, "name list size mismatch");
    names_ = std::move(names);
}

int FiniteGroup::pow(int a, long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    int r = 0;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

int FiniteGroup::element_order(int a) const {
    int k = 1, x = a;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
    std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
    return t;
}

std::vector<int> FiniteGroup::element_orders() const {
    std::vector<int> v(n_);
    for (int a = 0; a < n_; ++a) v[a] = element_order(a);
    std::sort(v.begin(), v.end());
    return v;
}

Subgroup center(const FiniteGroup& g) {
    const int n = g.order();
    Bitset z(n);
    for (int a = 0; a < n; ++a) {
        bool central = true;
        for (int b = 0; b < n && central; ++b) central = g.mul(a, b) == g.mul(b, a);
        if (central) z.set(a);
    }
    return Subgroup{z};
}

Subgroup centralizer(const FiniteGroup& g, const Bitset& s) {
    const int n = g.order();
    Bitset c(n);
    for (int a = 0; a < n; ++a) {
        bool ok = true;
        for (int x = s.first(); x != -1 && ok; x = s.next(x)) ok = g.mul(a, x) == g.mul(x, a);
        if (ok) c.set(a);
    }
    return Subgroup{c};
}

Subgroup subgroup_closure(const FiniteGroup& g, const Bitset& seed) {
    const int n = g.order();
    Bitset members(n);
    std::vector<int> elems;
    auto add = [&](int x) {
        if (!members.test(x)) {
            members.set(x);
            elems.push_back(x);
        }
    };
    add(0);
    for (int x = seed.first(); x != -1; x = seed.next(x)) add(x);
    // Products of all pairs; inverses come for free in a finite group.
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = 0; j < elems.size(); ++j) {
            add(g.mul(elems[i], elems[j]));
            add(g.mul(elems[j], elems[i]));
        }
    return Subgroup{members};
}

bool is_subgroup(const FiniteGroup& g, const Bitset& s) {
    if (!s.test(0)) return false;
    for (int a = s.first(); a != -1; a = s.next(a)) {
        if (!s.test(g.inv(a))) return false;
        for (int b = s.first(); b != -1; b = s.next(b))
            if (!s.test(g.mul(a, b))) return false;
    }
    return true;
}

bool is_abelian_set(const FiniteGroup& g, const Bitset& s) {
    for (int a = s.first(); a != -1; a = s.next(a))
        for (int b = s.next(a); b != -1; b = s.next(b))
            if (g.mul(a, b) != g.mul(b, a)) return false;
    return true;
}

bool is_abelian(const FiniteGroup& g) {
    Bitset all(g.order());
    for (int i = 0; i < g.order(); ++i) all.set(i);
    return is_abelian_set(g, all);
}

std::vector<Coset> left_cosets(const FiniteGroup& g, const Subgroup& h) {
    const int n = g.order();
    std::vector<Coset> cosets;
    Bitset seen(n);
    for (int a = 0; a < n; ++a) {
        if (seen.test(a)) continue;
        Bitset members(n);
        for (int x = h.members.first(); x != -1; x = h.members.next(x)) {
            int v = g.mul(a, x);
            members.set(v);
            seen.set(v);
        }
        // Ascending scan makes the first untouched element the minimum of its
        // coset, so cosets come out sorted by canonical representative.
        cosets.push_back(Coset{std::move(members), a});
    }
    return cosets;
}

FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2, int order_limit) {
    const long n = (long)g1.order() * g2.order();
    if (n > order_limit)
        fail(errc::order_limit,
             "direct product order " + std::to_string(n) + " exceeds limit " +
                 std::to_string(order_limit));
    const int n1 = g1.order(), n2 = g2.order(), nn = (int)n;
    std::vector<int> mul(nn * nn);
    for (int a1 = 0; a1 < n1; ++a1)
        for (int a2 = 0; a2 < n2; ++a2)
            for (int b1 = 0; b1 < n1; ++b1)
                for (int b2 = 0; b2 < n2; ++b2)
                    mul[(a1 * n2 + a2) * nn + (b1 * n2 + b2)] =
                        g1.mul(a1, b1) * n2 + g2.mul(a2, b2);
    return FiniteGroup::from_flat_table(nn, std::move(mul));
}

}  // namespace ecom
