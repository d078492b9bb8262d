#include "ecom/simplicial.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ecom {

bool SimplicialComplex::has(const std::vector<int>& simplex) const {
    int d = (int)simplex.size() - 1;
    if (d < 0 || d > dim()) return false;
    return std::binary_search(cells[d].begin(), cells[d].end(), simplex);
}

SimplicialComplex SimplicialComplex::from_simplices(
    const std::vector<std::vector<int>>& simplices) {
    std::vector<std::set<std::vector<int>>> by_dim;
    // Insert a simplex and all its faces.
    auto insert_closed = [&](std::vector<int> s, auto&& self) -> void {
        std::sort(s.begin(), s.end());
        for (size_t i = 1; i < s.size(); ++i)
            if (s[i] == s[i - 1]) fail(errc::bad_input, "simplex has a repeated vertex");
        if (!s.empty() && s.front() < 0) fail(errc::bad_input, "negative vertex id");
        int d = (int)s.size() - 1;
        if (d < 0) return;
        if ((int)by_dim.size() <= d) by_dim.resize(d + 1);
        if (!by_dim[d].insert(s).second) return;
        if (d == 0) return;
        for (size_t i = 0; i < s.size(); ++i) {
            std::vector<int> face;
            for (size_t j = 0; j < s.size(); ++j)
                if (j != i) face.push_back(s[j]);
            self(std::move(face), self);
        }
    };
    for (const auto& s : simplices) insert_closed(s, insert_closed);

    SimplicialComplex k;
    for (auto& level : by_dim)
        k.cells.emplace_back(level.begin(), level.end());
    return k;
}

bool SimplicialComplex::well_formed() const {
    for (int d = 0; d <= dim(); ++d) {
        const auto& level = cells[d];
        for (size_t i = 0; i < level.size(); ++i) {
            const auto& s = level[i];
            if ((int)s.size() != d + 1) return false;
            if (!std::is_sorted(s.begin(), s.end())) return false;
            if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
            if (i && !(level[i - 1] < s)) return false;
            if (d > 0)
                for (size_t drop = 0; drop < s.size(); ++drop) {
                    std::vector<int> face;
                    for (size_t j = 0; j < s.size(); ++j)
                        if (j != drop) face.push_back(s[j]);
                    if (!has(face)) return false;
                }
        }
    }
    return true;
}

namespace {

SimplicialComplex chains_of(int n, const std::vector<Bitset>& above, long max_simplices) {
    // Comparable pairs, keyed upward by node id: chains are exactly the
    // sets of pairwise comparable nodes.
    std::vector<Bitset> comp_gt(n, Bitset(n));
    for (int i = 0; i < n; ++i)
        for (int j = above[i].first(); j != -1; j = above[i].next(j)) {
            if (j > i) comp_gt[i].set(j);
            if (i > j) comp_gt[j].set(i);
        }

    SimplicialComplex k;
    if (n == 0) return k;
    k.cells.resize(1);
    long budget = max_simplices;
    auto spend = [&](long amount) {
        budget -= amount;
        if (budget < 0)
            fail(errc::complex_size,
                 "order complex exceeds " + std::to_string(max_simplices) + " simplices");
    };

    std::vector<int> chain;
    auto dfs = [&](int last, const Bitset& allowed, auto&& self) -> void {
        for (int j = allowed.next(last); j != -1; j = allowed.next(j)) {
            chain.push_back(j);
            spend(1);
            int d = (int)chain.size() - 1;
            if ((int)k.cells.size() <= d) k.cells.resize(d + 1);
            k.cells[d].push_back(chain);
            self(j, allowed & comp_gt[j], self);
            chain.pop_back();
        }
    };
    Bitset all = Bitset::full(n);
    dfs(-1, all, dfs);
    return k;
}

}  // namespace

SimplicialComplex order_complex(const CosetPoset& p, long max_simplices) {
    auto above = strict_order_from_hasse((int)p.nodes.size(), p.hasse);
    return chains_of((int)p.nodes.size(), above, max_simplices);
}

SimplicialComplex order_complex(const Poset& p, long max_simplices) {
    return chains_of(p.n, p.above, max_simplices);
}

long euler_characteristic(const SimplicialComplex& k) {
    long chi = 0;
    for (int d = 0; d <= k.dim(); ++d) chi += (d % 2 ? -1L : 1L) * (long)k.cells[d].size();
    return chi;
}

int connected_components(const SimplicialComplex& k) {
    if (k.dim() < 0 || k.cells[0].empty()) return 0;
    int maxv = 0;
    for (const auto& v : k.cells[0]) maxv = std::max(maxv, v[0]);
    std::vector<int> parent(maxv + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    if (k.dim() >= 1)
        for (const auto& e : k.cells[1]) parent[find(e[0])] = find(e[1]);
    int comps = 0;
    for (const auto& v : k.cells[0]) comps += find(v[0]) == v[0];
    return comps;
}

std::pair<SimplicialComplex, CollapseLog> collapse_free_faces(const SimplicialComplex& k) {
    // Working copy as ordered sets for cheap removal in lex order.
    std::vector<std::set<std::vector<int>>> cells;
    for (const auto& level : k.cells) cells.emplace_back(level.begin(), level.end());
    while (!cells.empty() && cells.back().empty()) cells.pop_back();

    CollapseLog log;
    while (true) {
        bool removed = false;
        for (int d = (int)cells.size() - 2; d >= 0 && !removed; --d) {
            // Count cofaces by sorting the facets of all (d+1)-simplices.
            std::vector<std::pair<std::vector<int>, const std::vector<int>*>> facets;
            for (const auto& t : cells[d + 1]) {
                for (size_t drop = 0; drop < t.size(); ++drop) {
                    std::vector<int> f;
                    for (size_t j = 0; j < t.size(); ++j)
                        if (j != drop) f.push_back(t[j]);
                    facets.emplace_back(std::move(f), &t);
                }
            }
            std::sort(facets.begin(), facets.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            // The first run of length one is the lex-least free face in dim d.
            for (size_t i = 0; i < facets.size();) {
                size_t j = i;
                while (j < facets.size() && facets[j].first == facets[i].first) ++j;
                if (j - i == 1) {
                    std::vector<int> face = facets[i].first;
                    std::vector<int> coface = *facets[i].second;
                    cells[d].erase(face);
                    cells[d + 1].erase(coface);
                    log.steps.push_back(CollapseStep{std::move(face), std::move(coface)});
                    removed = true;
                    break;
                }
                i = j;
            }
        }
        if (!removed) break;
        while (!cells.empty() && cells.back().empty()) cells.pop_back();
    }

    SimplicialComplex out;
    for (auto& level : cells) out.cells.emplace_back(level.begin(), level.end());
    return {std::move(out), std::move(log)};
}

IntMatrix boundary_matrix(const SimplicialComplex& k, int d) {
    if (d < 1 || d > k.dim()) fail(errc::bad_input, "boundary dimension out of range");
    const auto& rows = k.cells[d - 1];
    const auto& cols = k.cells[d];
    IntMatrix m((int)rows.size(), (int)cols.size());
    for (int j = 0; j < (int)cols.size(); ++j) {
        const auto& s = cols[j];
        int sign = 1;
        for (size_t drop = 0; drop < s.size(); ++drop) {
            std::vector<int> face;
            for (size_t t = 0; t < s.size(); ++t)
                if (t != drop) face.push_back(s[t]);
            auto it = std::lower_bound(rows.begin(), rows.end(), face);
            m.at((int)(it - rows.begin()), j) = sign;
            sign = -sign;
        }
    }
    return m;
}

namespace {

template <typename I>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<I> a;
    I& at(int i, int j) { return a[(size_t)i * cols + j]; }
};

inline long long checked_mul(long long x, long long y) {
    long long r;
    if (__builtin_mul_overflow(x, y, &r)) fail(errc::integer_overflow, "SNF entry overflow");
    return r;
}
inline long long checked_sub(long long x, long long y) {
    long long r;
    if (__builtin_sub_overflow(x, y, &r)) fail(errc::integer_overflow, "SNF entry overflow");
    return r;
}
inline long long checked_add(long long x, long long y) {
    long long r;
    if (__builtin_add_overflow(x, y, &r)) fail(errc::integer_overflow, "SNF entry overflow");
    return r;
}
inline mpz_class checked_mul(const mpz_class& x, const mpz_class& y) { return x * y; }
inline mpz_class checked_sub(const mpz_class& x, const mpz_class& y) { return x - y; }
inline mpz_class checked_add(const mpz_class& x, const mpz_class& y) { return x + y; }

template <typename I>
I abs_of(const I& x) {
    return x < 0 ? I(-x) : x;
}

template <typename I>
std::pair<int, std::vector<I>> snf_impl(Mat<I> m) {
    const int r = m.rows, c = m.cols;
    std::vector<I> factors;
    int bound = std::min(r, c);

    auto swap_rows = [&](int i, int j) {
        if (i != j)
            for (int t = 0; t < c; ++t) std::swap(m.at(i, t), m.at(j, t));
    };
    auto swap_cols = [&](int i, int j) {
        if (i != j)
            for (int t = 0; t < r; ++t) std::swap(m.at(t, i), m.at(t, j));
    };
    auto row_sub = [&](int dst, int src, const I& q) {
        for (int t = 0; t < c; ++t) m.at(dst, t) = checked_sub(m.at(dst, t), checked_mul(q, m.at(src, t)));
    };
    auto col_sub = [&](int dst, int src, const I& q) {
        for (int t = 0; t < r; ++t) m.at(t, dst) = checked_sub(m.at(t, dst), checked_mul(q, m.at(t, src)));
    };

    for (int t = 0; t < bound; ++t) {
        // Pivot: least |entry| in the remaining submatrix.
        int pi = -1, pj = -1;
        I best = 0;
        for (int i = t; i < r && best != 1; ++i)
            for (int j = t; j < c; ++j) {
                I v = abs_of(m.at(i, j));
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                    if (best == 1) break;
                }
            }
        if (pi == -1) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        while (true) {
            bool restart = false;
            for (int i = t + 1; i < r && !restart; ++i) {
                if (m.at(i, t) == 0) continue;
                I q = m.at(i, t) / m.at(t, t);
                if (q != 0) row_sub(i, t, q);
                if (m.at(i, t) != 0) {
                    // Remainder is smaller than the pivot; promote it.
                    swap_rows(t, i);
                    restart = true;
                }
            }
            if (restart) continue;
            for (int j = t + 1; j < c && !restart; ++j) {
                if (m.at(t, j) == 0) continue;
                I q = m.at(t, j) / m.at(t, t);
                if (q != 0) col_sub(j, t, q);
                if (m.at(t, j) != 0) {
                    swap_cols(t, j);
                    restart = true;
                }
            }
            if (restart) continue;

            // Row and column are clear; enforce that the pivot divides the
            // rest of the submatrix so the factors form a chain.
            bool fixed = false;
            for (int i = t + 1; i < r && !fixed; ++i)
                for (int j = t + 1; j < c && !fixed; ++j)
                    if (m.at(i, j) % m.at(t, t) != 0) {
                        for (int tt = 0; tt < c; ++tt)
                            m.at(t, tt) = checked_add(m.at(t, tt), m.at(i, tt));
                        fixed = true;
                    }
            if (!fixed) break;
        }
        factors.push_back(abs_of(m.at(t, t)));
    }
    return {(int)factors.size(), std::move(factors)};
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    try {
        Mat<long long> w{m.rows, m.cols, m.a};
        auto [rank, factors] = snf_impl(std::move(w));
        SnfResult res;
        res.rank = rank;
        for (long long f : factors) res.factors.emplace_back((long)f);
        return res;
    } catch (const error& e) {
        if (e.code() != errc::integer_overflow) throw;
    }
    Mat<mpz_class> w;
    w.rows = m.rows;
    w.cols = m.cols;
    w.a.reserve(m.a.size());
    for (long long v : m.a) w.a.emplace_back((long)v);
    auto [rank, factors] = snf_impl(std::move(w));
    return SnfResult{rank, std::move(factors)};
}

HomologyResult homology(const SimplicialComplex& k) {
    HomologyResult h;
    int dim = k.dim();
    if (dim < 0) return h;
    std::vector<int> rank(dim + 2, 0);
    std::vector<std::vector<mpz_class>> factors(dim + 2);
    for (int d = 1; d <= dim; ++d) {
        SnfResult s = smith_normal_form(boundary_matrix(k, d));
        rank[d] = s.rank;
        factors[d] = std::move(s.factors);
    }
    for (int d = 0; d <= dim; ++d) {
        h.betti.push_back((long)k.cells[d].size() - rank[d] - rank[d + 1]);
        std::vector<mpz_class> tor;
        for (const auto& f : factors[d + 1])
            if (f > 1) tor.push_back(f);
        h.torsion.push_back(std::move(tor));
    }
    return h;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::contractible: return "contractible";
        case Verdict::wedge_of_circles: return "wedge_of_circles";
        default: return "unresolved";
    }
}

HomotopyClass classify_homotopy(const SimplicialComplex& k) {
    if (connected_components(k) != 1)
        fail(errc::disconnected, "homotopy classification needs a connected complex");

    HomotopyClass out;
    out.homology = homology(k);

    auto [collapsed, log] = collapse_free_faces(k);
    out.collapse_steps = (long)log.steps.size();
    out.collapsed_cells = collapsed.cell_counts();
    out.collapsed_dim = collapsed.dim();

    if (collapsed.dim() == 0 && collapsed.cells[0].size() == 1) {
        out.verdict = Verdict::contractible;
        out.circles = 0;
        return out;
    }

    const auto& betti = out.homology.betti;
    bool homology_is_wedge = betti.size() >= 2 && betti[0] == 1 && betti[1] >= 1 &&
                             out.homology.torsion_free() &&
                             std::all_of(betti.begin() + 2, betti.end(),
                                         [](long b) { return b == 0; });
    if (homology_is_wedge && collapsed.dim() == 1 && connected_components(collapsed) == 1) {
        long v = (long)collapsed.cells[0].size();
        long e = (long)collapsed.cells[1].size();
        if (e - v + 1 == betti[1]) {
            out.verdict = Verdict::wedge_of_circles;
            out.circles = betti[1];
            return out;
        }
    }
    out.verdict = Verdict::unresolved;
    return out;
}

}  // namespace ecom
