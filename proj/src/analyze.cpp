#include "ecom/analyze.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>

#include "ecom/catalog.hpp"
#include "ecom/presentation.hpp"

namespace ecom {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct StageClock {
    Clock::time_point start = Clock::now();
    Clock::time_point last = start;
    double deadline_s;

    explicit StageClock(double limit_s) : deadline_s(limit_s) {}

    double lap(HomotopyReport& r, const std::string& stage) {
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - last).count();
        r.timings.push_back(StageTiming{stage, ms});
        last = Clock::now();
        if (deadline_s > 0 && ms_since(start) > deadline_s * 1000.0)
            fail(errc::time_limit, "time limit of " + std::to_string(deadline_s) +
                                       " s exceeded after stage '" + stage + "'");
        return ms;
    }
};

void check_cross_method(const HomotopyReport& r) {
    if (r.verdict != Verdict::wedge_of_circles) return;
    if (r.euler_circles && *r.euler_circles != r.circles)
        fail(errc::internal, "method disagreement: Euler count " +
                                 std::to_string(*r.euler_circles) + " vs homology/collapse " +
                                 std::to_string(r.circles));
    if (r.betti.size() < 2 || r.betti[1] != r.circles)
        fail(errc::internal, "method disagreement between homology and collapse");
}

HomotopyReport classify_stage(HomotopyReport r, const CosetPoset& poset, StageClock& clock,
                              const Limits& limits) {
    r.poset_nodes = (long)poset.nodes.size();
    r.hasse_edges = (long)poset.hasse.size();
    r.height = poset.height;
    r.connected = poset.connected;
    clock.lap(r, "poset");

    SimplicialComplex k = order_complex(poset, limits.complex_limit);
    r.complex_cells = k.cell_counts();
    r.euler_char = euler_characteristic(k);
    if (poset.height <= 1) r.euler_circles = circles_from_euler(poset);
    clock.lap(r, "complex");

    HomotopyClass cls = classify_homotopy(k);
    r.verdict = cls.verdict;
    r.circles = cls.circles;
    r.betti = cls.homology.betti;
    for (const auto& dim_torsion : cls.homology.torsion) {
        std::vector<std::string> level;
        for (const auto& f : dim_torsion) level.push_back(f.get_str());
        r.torsion.push_back(std::move(level));
    }
    r.collapsed_cells = cls.collapsed_cells;
    r.collapsed_dim = cls.collapsed_dim;
    r.collapse_steps = cls.collapse_steps;
    clock.lap(r, "classify");

    r.total_ms = ms_since(clock.start);
    check_cross_method(r);
    return r;
}

}  // namespace

HomotopyReport analyze_group(const FiniteGroup& g, const std::string& source,
                             const Limits& limits) {
    StageClock clock(limits.time_limit_s);
    HomotopyReport r;
    r.source = source;
    r.order = g.order();
    r.center_order = center(g).order();
    clock.lap(r, "group");

    MaxAbelianFamily fam = max_abelian_family(g);
    for (const auto& m : fam.maximals) r.maximal_orders.push_back(m.order());
    r.height1 = is_height1(g);
    clock.lap(r, "maximal_abelian");

    CosetPoset poset = poset_from_subgroups(g, std::move(fam.intersection_closure),
                                            limits.poset_limit);
    if (r.height1 && poset.height > 1)
        fail(errc::internal, "height-1 predicate contradicts computed poset height");
    return classify_stage(std::move(r), poset, clock, limits);
}

HomotopyReport analyze_poset(const CosetPoset& poset, const std::string& source,
                             const Limits& limits) {
    StageClock clock(limits.time_limit_s);
    HomotopyReport r;
    r.source = source;
    r.order = poset.group_order;
    r.center_order = poset.subgroups.empty() ? 0 : poset.subgroups.back().order();
    for (const auto& s : poset.subgroups) {
        bool maximal = true;
        for (const auto& t : poset.subgroups)
            if (!(s == t) && s.members.is_subset_of(t.members)) {
                maximal = false;
                break;
            }
        if (maximal) r.maximal_orders.push_back(s.order());
    }
    r.height1 = poset.height <= 1;
    clock.lap(r, "maximal_abelian");
    return classify_stage(std::move(r), poset, clock, limits);
}

std::string report_text(const HomotopyReport& r) {
    std::ostringstream os;
    os << "source:            " << r.source << "\n";
    os << "group order:       " << r.order << "\n";
    os << "center order:      " << r.center_order << "\n";
    os << "maximal abelian:   " << r.maximal_orders.size() << " subgroup(s), orders";
    for (int o : r.maximal_orders) os << ' ' << o;
    os << "\n";
    os << "coset poset:       " << r.poset_nodes << " nodes, " << r.hasse_edges
       << " Hasse edges, height " << r.height << (r.connected ? ", connected" : ", DISCONNECTED")
       << "\n";
    os << "pairwise meets = center (height 1): " << (r.height1 ? "yes" : "no") << "\n";
    os << "order complex:     cells per dim";
    for (long c : r.complex_cells) os << ' ' << c;
    os << ", Euler characteristic " << r.euler_char << "\n";
    if (r.euler_circles) os << "Euler circle count: " << *r.euler_circles << "\n";
    os << "betti numbers:    ";
    for (long b : r.betti) os << ' ' << b;
    bool torsion_free = std::all_of(r.torsion.begin(), r.torsion.end(),
                                    [](const auto& t) { return t.empty(); });
    os << (torsion_free ? "  (torsion free)" : "  (TORSION PRESENT)") << "\n";
    os << "collapse:          " << r.collapse_steps << " steps, residual dim " << r.collapsed_dim
       << ", residual cells";
    for (long c : r.collapsed_cells) os << ' ' << c;
    os << "\n";
    switch (r.verdict) {
        case Verdict::contractible:
            os << "verdict:           contractible\n";
            break;
        case Verdict::wedge_of_circles:
            os << "verdict:           wedge of " << r.circles << " circles\n";
            break;
        default:
            os << "verdict:           unresolved\n";
            break;
    }
    return os.str();
}

namespace {

VerifyRow run_target(const std::string& name, const std::string& spec, int expected_order,
                     long expected_circles, const Limits& limits,
                     const std::function<bool(const HomotopyReport&, std::string&)>& extra) {
    VerifyRow row;
    row.name = name;
    row.spec = spec;
    row.expected_order = expected_order;
    row.expected_circles = expected_circles;
    auto t0 = Clock::now();
    FiniteGroup g = make_catalog(spec, limits.order_limit, limits.coset_limit);
    HomotopyReport rep = analyze_group(g, "catalog:" + spec, limits);
    row.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    row.order = rep.order;
    row.euler_circles = rep.euler_circles;
    row.homology_circles = rep.betti.size() > 1 ? rep.betti[1] : 0;
    row.height1 = rep.height1;
    row.verdict = verdict_name(rep.verdict);
    row.ok = rep.order == expected_order && rep.verdict == Verdict::wedge_of_circles &&
             rep.circles == expected_circles && rep.euler_circles &&
             *rep.euler_circles == expected_circles && row.homology_circles == expected_circles &&
             rep.height1;
    if (extra && !extra(rep, row.note)) row.ok = false;
    return row;
}

}  // namespace

VerifyResult verify_paper(const Limits& limits) {
    VerifyResult result;

    for (int n = 2; n <= 6; ++n) {
        long nodes = (long)n * n + 2 * n + 2, edges = 2L * n * n + 2 * n;
        auto census = [nodes, edges](const HomotopyReport& r, std::string& note) {
            if (r.poset_nodes != nodes || r.hasse_edges != edges) {
                note = "census mismatch: got " + std::to_string(r.poset_nodes) + " nodes, " +
                       std::to_string(r.hasse_edges) + " edges";
                return false;
            }
            note = "census " + std::to_string(nodes) + "/" + std::to_string(edges) + " ok";
            return true;
        };
        result.rows.push_back(run_target("Q_4n n=" + std::to_string(n),
                                         "Q," + std::to_string(n), 4 * n, (long)n * n - 1,
                                         limits, census));
    }

    result.rows.push_back(run_target("P48", "P48", 48, 167, limits, nullptr));
    result.rows.push_back(run_target("P120", "P120", 120, 1079, limits, nullptr));

    for (auto [m, n] : {std::pair{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
        int order = (1 << m) * (2 * n + 1);
        long circles = (long)(2 * n + 1) * (2 * n + 1) - 1;
        result.rows.push_back(run_target(
            "D_2^m(2n+1) m=" + std::to_string(m) + " n=" + std::to_string(n),
            "D," + std::to_string(m) + "," + std::to_string(n), order, circles, limits, nullptr));
    }

    auto pprime_extra = [&limits](const HomotopyReport&, std::string& note) {
        RealizedGroup rg = todd_coxeter(
            parse_presentation(
                "< x, y, z | x^2 = (x*y)^2 = y^2, z*x*z^-1 = y, z*y*z^-1 = x*y, z^3 = 1 >"),
            limits.coset_limit);
        int x = rg.generator_ids[0], y = rg.generator_ids[1];
        if (rg.group.mul(x, y) == rg.group.mul(y, x)) {
            note = "generator images commute";
            return false;
        }
        note = "x*y != y*x ok";
        return true;
    };
    result.rows.push_back(run_target("P'_24", "Pprime,1", 24, 39, limits, pprime_extra));

    // The metacyclic count must not depend on m.
    for (int n = 1; n <= 2; ++n) {
        auto find = [&](int m) -> const VerifyRow* {
            std::string key = "m=" + std::to_string(m) + " n=" + std::to_string(n);
            for (const auto& r : result.rows)
                if (r.name.find(key) != std::string::npos) return &r;
            return nullptr;
        };
        const VerifyRow *a = find(2), *b = find(3);
        if (a && b && (a->homology_circles != b->homology_circles))
            result.all_ok = false;
    }

    for (const auto& row : result.rows) result.all_ok = result.all_ok && row.ok;
    return result;
}

std::string verify_text(const VerifyResult& r) {
    std::ostringstream os;
    os << std::left << std::setw(22) << "target" << std::right << std::setw(7) << "order"
       << std::setw(9) << "height1" << std::setw(10) << "expected" << std::setw(8) << "euler"
       << std::setw(10) << "homology" << std::setw(7) << "ok" << std::setw(10) << "ms"
       << "  note\n";
    for (const auto& row : r.rows) {
        os << std::left << std::setw(22) << row.name << std::right << std::setw(7) << row.order
           << std::setw(9) << (row.height1 ? "yes" : "no") << std::setw(10)
           << row.expected_circles << std::setw(8)
           << (row.euler_circles ? std::to_string(*row.euler_circles) : "-") << std::setw(10)
           << row.homology_circles << std::setw(7) << (row.ok ? "pass" : "FAIL") << std::setw(10)
           << std::fixed << std::setprecision(1) << row.ms << "  " << row.note << "\n";
    }
    os << (r.all_ok ? "all targets match\n" : "MISMATCH in at least one target\n");
    return os.str();
}

}  // namespace ecom
