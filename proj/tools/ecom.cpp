#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ecom/analyze.hpp"
#include "ecom/catalog.hpp"
#include "ecom/json_io.hpp"
#include "ecom/presentation.hpp"

namespace {

using namespace ecom;

struct Source {
    enum Kind { catalog, presentation, table, perm } kind;
    std::string value;

    std::string describe() const {
        switch (kind) {
            case catalog: return "catalog:" + value;
            case presentation: return "presentation:" + value;
            case table: return "table:" + value;
            default: return "perm:" + value;
        }
    }
};

FiniteGroup build_source(const Source& s, const Limits& limits) {
    switch (s.kind) {
        case Source::catalog:
            return make_catalog(s.value, limits.order_limit, limits.coset_limit);
        case Source::presentation:
            return todd_coxeter(parse_presentation(s.value), limits.coset_limit).group;
        case Source::table: {
            std::ifstream in(s.value);
            if (!in) fail(errc::bad_input, "cannot open table file '" + s.value + "'");
            json j;
            try {
                in >> j;
            } catch (const std::exception& e) {
                fail(errc::bad_input, "table file is not valid JSON: " + std::string(e.what()));
            }
            return FiniteGroup::from_table(j.get<std::vector<std::vector<int>>>());
        }
        case Source::perm:
        default: {
            std::vector<Permutation> gens;
            std::string cur;
            std::vector<std::string> parts;
            for (char c : s.value) {
                if (c == ';') {
                    parts.push_back(cur);
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            parts.push_back(cur);
            size_t degree = 0;
            for (const auto& part : parts) {
                gens.push_back(parse_cycles(part));
                degree = std::max(degree, gens.back().size());
            }
            for (auto& g : gens)
                while (g.size() < degree) g.push_back((int)g.size());
            return FiniteGroup::from_permutations(gens, limits.order_limit);
        }
    }
}

struct SourceFlags {
    std::vector<std::string> catalogs, presentations, tables, perms;
    bool product = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--catalog", catalogs,
                        "catalog spec: Q,<n> | D,<m>,<n> | P48 | P120 | Pprime[,m] | Z<n> | V4 | "
                        "E8 | S3 | S4 | A4");
        cmd->add_option("--presentation", presentations,
                        "group presentation, e.g. \"< x, y | y^4, x^2*y^-2, x*y*x^-1*y >\"");
        cmd->add_option("--table", tables, "JSON file holding a multiplication table");
        cmd->add_option("--perm", perms,
                        "permutation generators as 0-based cycles separated by ';', e.g. "
                        "\"(0 1 2);(0 1)\"");
        cmd->add_flag("--product", product, "analyze the direct product of all given sources");
    }

    std::vector<Source> collect() const {
        std::vector<Source> out;
        for (const auto& v : catalogs) out.push_back({Source::catalog, v});
        for (const auto& v : presentations) out.push_back({Source::presentation, v});
        for (const auto& v : tables) out.push_back({Source::table, v});
        for (const auto& v : perms) out.push_back({Source::perm, v});
        return out;
    }

    std::pair<FiniteGroup, std::string> build(const Limits& limits) const {
        auto sources = collect();
        if (sources.empty())
            fail(errc::bad_input, "no group source given (use --catalog, --presentation, --table "
                                  "or --perm)");
        if (sources.size() > 1 && !product)
            fail(errc::bad_input, "multiple sources require --product");
        FiniteGroup g = build_source(sources[0], limits);
        std::string desc = sources[0].describe();
        for (size_t i = 1; i < sources.size(); ++i) {
            g = direct_product(g, build_source(sources[i], limits), limits.order_limit);
            desc += " x " + sources[i].describe();
        }
        if (sources.size() > 1) desc = "product(" + desc + ")";
        return {std::move(g), std::move(desc)};
    }
};

struct LimitFlags {
    Limits limits;

    void attach(CLI::App* cmd) {
        cmd->add_option("--order-limit", limits.order_limit,
                        "largest group order accepted (default 2000)")
            ->envname("ECOM_ORDER_LIMIT");
        cmd->add_option("--coset-limit", limits.coset_limit,
                        "coset table row limit for enumeration (default 100000)")
            ->envname("ECOM_COSET_LIMIT");
        cmd->add_option("--poset-limit", limits.poset_limit,
                        "largest coset poset accepted, in nodes (default 200000)")
            ->envname("ECOM_POSET_LIMIT");
        cmd->add_option("--complex-limit", limits.complex_limit,
                        "largest order complex accepted, in simplices (default 1000000)")
            ->envname("ECOM_COMPLEX_LIMIT");
        cmd->add_option("--time-limit", limits.time_limit_s,
                        "wall-clock budget per analysis in seconds, 0 = unlimited (default 0)")
            ->envname("ECOM_TIME_LIMIT");
    }
};

int run(int argc, char** argv) {
    CLI::App app{"homotopy type of the coset complex of maximal abelian subgroups"};
    app.require_subcommand(1);

    auto* analyze_cmd = app.add_subcommand(
        "analyze", "classify one group and print a homotopy report");
    SourceFlags analyze_sources;
    LimitFlags analyze_limits;
    analyze_sources.attach(analyze_cmd);
    analyze_limits.attach(analyze_cmd);
    bool analyze_json = false, analyze_timings = false;
    analyze_cmd->add_flag("--json", analyze_json, "emit the report as JSON");
    analyze_cmd->add_flag("--timings", analyze_timings,
                          "include wall-clock timings (JSON output is otherwise bit-stable)");

    auto* verify_cmd = app.add_subcommand(
        "verify-paper", "recompute every built-in reference value and compare");
    LimitFlags verify_limits;
    verify_limits.attach(verify_cmd);
    bool verify_json = false;
    verify_cmd->add_flag("--json", verify_json, "emit the summary as JSON");

    auto* export_cmd = app.add_subcommand("export", "write the poset, complex or boundaries");
    SourceFlags export_sources;
    LimitFlags export_limits;
    export_sources.attach(export_cmd);
    export_limits.attach(export_cmd);
    std::string what, out_path;
    export_cmd->add_option("--what", what, "poset | complex | boundaries")->required();
    export_cmd->add_option("--out", out_path, "output file")->required();

    auto* catalog_cmd = app.add_subcommand("catalog", "list the built-in groups as JSON");

    CLI11_PARSE(app, argc, argv);

    if (analyze_cmd->parsed()) {
        auto [group, desc] = analyze_sources.build(analyze_limits.limits);
        HomotopyReport report = analyze_group(group, desc, analyze_limits.limits);
        if (analyze_json) {
            std::cout << report_to_json(report, analyze_timings).dump(2) << "\n";
        } else {
            std::cout << report_text(report);
            if (analyze_timings) {
                for (const auto& t : report.timings)
                    std::cerr << "time " << t.stage << ": " << t.ms << " ms\n";
                std::cerr << "time total: " << report.total_ms << " ms\n";
            }
        }
        return 0;
    }

    if (verify_cmd->parsed()) {
        VerifyResult result = verify_paper(verify_limits.limits);
        if (verify_json)
            std::cout << verify_to_json(result).dump(2) << "\n";
        else
            std::cout << verify_text(result);
        return result.all_ok ? 0 : 1;
    }

    if (export_cmd->parsed()) {
        auto [group, desc] = export_sources.build(export_limits.limits);
        std::ofstream out(out_path);
        if (!out) fail(errc::bad_input, "cannot open output file '" + out_path + "'");
        if (what == "poset") {
            out << poset_to_json(build_coset_poset(group, export_limits.limits.poset_limit))
                       .dump(2)
                << "\n";
        } else if (what == "complex") {
            auto poset = build_coset_poset(group, export_limits.limits.poset_limit);
            out << complex_to_json(order_complex(poset, export_limits.limits.complex_limit))
                       .dump(2)
                << "\n";
        } else if (what == "boundaries") {
            auto poset = build_coset_poset(group, export_limits.limits.poset_limit);
            out << boundaries_text(order_complex(poset, export_limits.limits.complex_limit));
        } else {
            fail(errc::bad_input, "--what must be poset, complex or boundaries");
        }
        return 0;
    }

    if (catalog_cmd->parsed()) {
        std::cout << catalog_to_json().dump(2) << "\n";
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ecom::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (e.is_input_error()) return 2;
        if (e.is_resource_limit()) return 3;
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
