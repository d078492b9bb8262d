#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "ecom/abelian_poset.hpp"
#include "ecom/simplicial.hpp"

namespace ecom {

struct Limits {
    int order_limit = FiniteGroup::default_order_limit;
    int coset_limit = 100000;
    long poset_limit = CosetPoset::default_node_limit;
    long complex_limit = default_complex_limit;
    double time_limit_s = 0;  // 0 = unlimited
};

struct StageTiming {
    std::string stage;
    double ms = 0;
};

// Everything the pipeline learned about one group. When the verdict is
// wedge_of_circles, every method that applies to the instance (Euler count
// on height <= 1 posets, homology, collapse) reports the same count; a
// disagreement is an internal error, never a report.
struct HomotopyReport {
    std::string source;
    int order = 0;
    int center_order = 0;
    std::vector<int> maximal_orders;

    long poset_nodes = 0;
    long hasse_edges = 0;
    int height = 0;
    bool height1 = false;
    bool connected = true;

    std::vector<long> complex_cells;
    long euler_char = 0;
    std::optional<long> euler_circles;  // only when height <= 1

    Verdict verdict = Verdict::unresolved;
    long circles = 0;
    std::vector<long> betti;
    std::vector<std::vector<std::string>> torsion;  // invariant factors as strings
    std::vector<long> collapsed_cells;
    int collapsed_dim = -1;
    long collapse_steps = 0;

    std::vector<StageTiming> timings;
    double total_ms = 0;
};

HomotopyReport analyze_group(const FiniteGroup& g, const std::string& source,
                             const Limits& limits = Limits{});

// Classification from a prebuilt poset (used by import round-trips).
HomotopyReport analyze_poset(const CosetPoset& poset, const std::string& source,
                             const Limits& limits = Limits{});

std::string report_text(const HomotopyReport& r);

// One row of the reference-value verification run.
struct VerifyRow {
    std::string name;
    std::string spec;
    int expected_order = 0;
    int order = 0;
    long expected_circles = 0;
    std::optional<long> euler_circles;
    long homology_circles = 0;
    bool height1 = false;
    std::string verdict;
    bool ok = false;
    std::string note;
    double ms = 0;
};

struct VerifyResult {
    std::vector<VerifyRow> rows;
    bool all_ok = true;
};

// Recomputes every built-in expected value: the quaternion series n = 2..6
// with its node/edge census, the binary octahedral and icosahedral groups,
// the metacyclic family on (m,n) in {2,3}x{1,2} (whose count only depends on
// n), and the order-24 member of the 8*3^m family including its
// noncommuting-generators witness.
VerifyResult verify_paper(const Limits& limits = Limits{});

std::string verify_text(const VerifyResult& r);

}  // namespace ecom
