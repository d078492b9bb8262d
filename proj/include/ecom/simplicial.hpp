#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "ecom/abelian_poset.hpp"

namespace ecom {

// Finite abstract simplicial complex. cells[d] holds the d-simplices as
// strictly increasing vertex tuples in lexicographic order; the complex is
// downward closed, so cells[0] is the vertex set.
struct SimplicialComplex {
    std::vector<std::vector<std::vector<int>>> cells;

    int dim() const { return (int)cells.size() - 1; }
    long size() const {
        long s = 0;
        for (const auto& c : cells) s += (long)c.size();
        return s;
    }
    std::vector<long> cell_counts() const {
        std::vector<long> v;
        for (const auto& c : cells) v.push_back((long)c.size());
        return v;
    }
    bool has(const std::vector<int>& simplex) const;

    // Downward closure of the given simplices (vertex lists need not be
    // sorted). Validates ids are nonnegative and distinct per simplex.
    static SimplicialComplex from_simplices(const std::vector<std::vector<int>>& simplices);

    // Invariant check: sorted tuples, no duplicates, downward closed.
    bool well_formed() const;
};

inline constexpr long default_complex_limit = 1000000;

// Nerve: vertices are the poset nodes, d-simplices are the (d+1)-chains.
SimplicialComplex order_complex(const CosetPoset& p, long max_simplices = default_complex_limit);
SimplicialComplex order_complex(const Poset& p, long max_simplices = default_complex_limit);

long euler_characteristic(const SimplicialComplex& k);

// Components of the 1-skeleton; isolated vertices count.
int connected_components(const SimplicialComplex& k);

struct CollapseStep {
    std::vector<int> free_face;
    std::vector<int> coface;
};

struct CollapseLog {
    std::vector<CollapseStep> steps;
};

// Repeatedly removes a pair (s, t) where s is a face of exactly one simplex t
// of the next dimension, until no free face remains. The eligible pair with s
// of maximal dimension and lexicographically smallest is taken, rescanning
// after every removal, so the log is reproducible.
std::pair<SimplicialComplex, CollapseLog> collapse_free_faces(const SimplicialComplex& k);

struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<long long> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}
    long long& at(int i, int j) { return a[(size_t)i * cols + j]; }
    long long at(int i, int j) const { return a[(size_t)i * cols + j]; }
};

// Boundary operator from d-simplices (columns) to (d-1)-simplices (rows)
// with alternating signs.
IntMatrix boundary_matrix(const SimplicialComplex& k, int d);

struct SnfResult {
    int rank = 0;
    std::vector<mpz_class> factors;  // d1 | d2 | ... | d_rank, all positive
};

// Exact integer Smith normal form. Pivots on the entry of least absolute
// value; escalates from 64-bit to arbitrary precision when a row or column
// operation would overflow.
SnfResult smith_normal_form(const IntMatrix& m);

struct HomologyResult {
    std::vector<long> betti;
    std::vector<std::vector<mpz_class>> torsion;  // invariant factors > 1 per dim

    bool torsion_free() const {
        for (const auto& t : torsion)
            if (!t.empty()) return false;
        return true;
    }
};

// Integral simplicial homology via Smith normal form:
// betti[d] = #d-cells - rank d_d - rank d_{d+1}.
HomologyResult homology(const SimplicialComplex& k);

enum class Verdict { contractible, wedge_of_circles, unresolved };

const char* verdict_name(Verdict v);

struct HomotopyClass {
    Verdict verdict = Verdict::unresolved;
    long circles = 0;  // k for wedge_of_circles, 0 for contractible
    HomologyResult homology;
    std::vector<long> collapsed_cells;  // per-dimension counts after collapsing
    int collapsed_dim = -1;
    long collapse_steps = 0;
};

// Verdict rules: "contractible" when the collapse reaches a single point;
// "wedge of k circles" when homology is torsion-free (1, k, 0, ...) AND the
// collapsed complex is a connected graph with first Betti number k (for
// 1-complexes the two channels together determine the homotopy type);
// "unresolved" otherwise, with the evidence attached.
HomotopyClass classify_homotopy(const SimplicialComplex& k);

}  // namespace ecom
