#include <fstream>
#include <sstream>

#include "doctest.h"
#include "ecom/analyze.hpp"
#include "ecom/catalog.hpp"
#include "ecom/json_io.hpp"
#include "schema_check.hpp"

using namespace ecom;

namespace {

json schema() {
    std::ifstream in(std::string(ECOM_SOURCE_DIR) + "/share/homotopy-report.schema.json");
    REQUIRE(in.good());
    json j;
    in >> j;
    return j;
}

}  // namespace

TEST_CASE("analyze report for Q8") {
    HomotopyReport r = analyze_group(make_quaternion(2), "catalog:Q,2");
    CHECK(r.order == 8);
    CHECK(r.center_order == 2);
    CHECK(r.maximal_orders == std::vector<int>{4, 4, 4});
    CHECK(r.poset_nodes == 10);
    CHECK(r.hasse_edges == 12);
    CHECK(r.height == 1);
    CHECK(r.height1);
    CHECK(r.connected);
    CHECK(r.euler_char == -2);
    REQUIRE(r.euler_circles.has_value());
    CHECK(*r.euler_circles == 3);
    CHECK(r.verdict == Verdict::wedge_of_circles);
    CHECK(r.circles == 3);
    CHECK(r.betti == std::vector<long>{1, 3});
    CHECK(r.collapsed_dim == 1);

    std::string text = report_text(r);
    CHECK(text.find("wedge of 3 circles") != std::string::npos);
    CHECK(text.find("torsion free") != std::string::npos);
}

TEST_CASE("analyze report for an abelian group") {
    HomotopyReport r = analyze_group(make_catalog("Z6"), "catalog:Z6");
    CHECK(r.verdict == Verdict::contractible);
    CHECK(r.circles == 0);
    CHECK(r.poset_nodes == 1);
    CHECK(report_text(r).find("contractible") != std::string::npos);
}

TEST_CASE("analyze report consistency on a height-2 instance") {
    HomotopyReport r = analyze_group(make_catalog("S4"), "catalog:S4");
    CHECK(r.height == 2);
    CHECK_FALSE(r.height1);
    CHECK_FALSE(r.euler_circles.has_value());
    long chi = 0;
    for (size_t d = 0; d < r.betti.size(); ++d) chi += (d % 2 ? -1 : 1) * r.betti[d];
    CHECK(chi == r.euler_char);
    if (r.verdict == Verdict::wedge_of_circles) {
        CHECK(r.betti.size() >= 2);
        CHECK(r.circles == r.betti[1]);
    }
}

TEST_CASE("report JSON validates against the shipped schema") {
    json s = schema();
    for (const char* spec : {"Q,2", "Z6", "S4", "D,2,1"}) {
        CAPTURE(spec);
        HomotopyReport r = analyze_group(make_catalog(spec), std::string("catalog:") + spec);
        CHECK(ecom::test::schema_errors(s, report_to_json(r)) == "");
        CHECK(ecom::test::schema_errors(s, report_to_json(r, true)) == "");
    }
}

TEST_CASE("default report JSON is bit-stable") {
    HomotopyReport a = analyze_group(make_quaternion(3), "catalog:Q,3");
    HomotopyReport b = analyze_group(make_quaternion(3), "catalog:Q,3");
    CHECK(report_to_json(a).dump() == report_to_json(b).dump());
}

TEST_CASE("schema validator actually rejects") {
    json s = schema();
    HomotopyReport r = analyze_group(make_quaternion(2), "catalog:Q,2");
    json j = report_to_json(r);
    j["verdict"] = "maybe";
    CHECK(ecom::test::schema_errors(s, j) != "");
    j = report_to_json(r);
    j["extra"] = 1;
    CHECK(ecom::test::schema_errors(s, j) != "");
    j = report_to_json(r);
    j.erase("circles");
    CHECK(ecom::test::schema_errors(s, j) != "");
}

TEST_CASE("poset JSON round-trips into an identical report") {
    for (const char* spec : {"Q,2", "S3", "S4"}) {
        CAPTURE(spec);
        FiniteGroup g = make_catalog(spec);
        HomotopyReport direct = analyze_group(g, "x");

        CosetPoset p = build_coset_poset(g);
        json exported = poset_to_json(p);
        CosetPoset imported = poset_from_json(json::parse(exported.dump()));
        HomotopyReport via_import = analyze_poset(imported, "x");

        CHECK(report_to_json(direct).dump() == report_to_json(via_import).dump());
    }
}

TEST_CASE("complex JSON and boundary text exports") {
    CosetPoset p = build_coset_poset(make_quaternion(2));
    SimplicialComplex k = order_complex(p);

    json cj = complex_to_json(k);
    CHECK(cj["0"].size() == 10);
    CHECK(cj["1"].size() == 12);
    SimplicialComplex k2 = complex_from_json(cj);
    CHECK(k2.cells == k.cells);

    std::string b = boundaries_text(k);
    std::istringstream in(b);
    std::string line;
    std::getline(in, line);
    CHECK(line == "# 1 10 12");
    // Each remaining line is "d i j v" with v in {-1, 1}; column sums vanish.
    IntMatrix m = boundary_matrix(k, 1);
    IntMatrix rebuilt(m.rows, m.cols);
    int d, i, j, v;
    while (in >> d >> i >> j >> v) {
        CHECK(d == 1);
        rebuilt.at(i, j) = v;
    }
    CHECK(rebuilt.a == m.a);
}

TEST_CASE("catalog JSON lists the named entries") {
    json c = catalog_to_json();
    REQUIRE(c.contains("entries"));
    bool found_p120 = false;
    for (const auto& e : c["entries"])
        if (e["spec"] == "P120") {
            found_p120 = true;
            CHECK(e["expected_order"] == 120);
            CHECK(e["expected_circles"] == 1079);
        }
    CHECK(found_p120);
}

TEST_CASE("time limit trips mid-analysis") {
    Limits limits;
    limits.time_limit_s = 1e-9;
    CHECK_THROWS_AS(analyze_group(make_catalog("S4"), "x", limits), error);
}
