#include "ecom/json_io.hpp"

#include <sstream>

namespace ecom {

json report_to_json(const HomotopyReport& r, bool include_timings) {
    json evidence = {
        {"euler_circles", r.euler_circles ? json(*r.euler_circles) : json(nullptr)},
        {"betti", r.betti},
        {"torsion", r.torsion},
        {"collapsed_cells", r.collapsed_cells},
        {"collapsed_dim", r.collapsed_dim},
        {"collapse_steps", r.collapse_steps},
    };
    json j = {
        {"source", r.source},
        {"group", {{"order", r.order}, {"center_order", r.center_order}}},
        {"maximal_abelian",
         {{"count", (long)r.maximal_orders.size()}, {"orders", r.maximal_orders}}},
        {"poset",
         {{"nodes", r.poset_nodes},
          {"hasse_edges", r.hasse_edges},
          {"height", r.height},
          {"height1", r.height1},
          {"connected", r.connected}}},
        {"complex", {{"cells", r.complex_cells}, {"euler_characteristic", r.euler_char}}},
        {"verdict", verdict_name(r.verdict)},
        {"circles", r.circles},
        {"evidence", evidence},
    };
    if (include_timings) {
        json t = json::object();
        for (const auto& s : r.timings) t[s.stage] = s.ms;
        t["total"] = r.total_ms;
        j["timings_ms"] = t;
    }
    return j;
}

json verify_to_json(const VerifyResult& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back({
            {"name", row.name},
            {"spec", row.spec},
            {"expected_order", row.expected_order},
            {"order", row.order},
            {"expected_circles", row.expected_circles},
            {"euler_circles", row.euler_circles ? json(*row.euler_circles) : json(nullptr)},
            {"homology_circles", row.homology_circles},
            {"height1", row.height1},
            {"verdict", row.verdict},
            {"ok", row.ok},
            {"note", row.note},
        });
    }
    return json{{"targets", rows}, {"all_ok", r.all_ok}};
}

json poset_to_json(const CosetPoset& p) {
    json subgroups = json::array();
    for (const auto& s : p.subgroups)
        subgroups.push_back({{"order", s.order()}, {"members", s.members.to_vector()}});
    json nodes = json::array();
    for (const auto& n : p.nodes)
        nodes.push_back(
            {{"subgroup", n.subgroup}, {"rep", n.rep}, {"members", n.members.to_vector()}});
    json hasse = json::array();
    for (auto [lo, hi] : p.hasse) hasse.push_back(json::array({lo, hi}));
    return json{{"group_order", p.group_order}, {"subgroups", subgroups},
                {"nodes", nodes},              {"hasse", hasse},
                {"height", p.height},          {"connected", p.connected}};
}

CosetPoset poset_from_json(const json& j) {
    CosetPoset p;
    p.group_order = j.at("group_order").get<int>();
    for (const auto& s : j.at("subgroups")) {
        Bitset members(p.group_order);
        for (int x : s.at("members").get<std::vector<int>>()) members.set(x);
        p.subgroups.push_back(Subgroup{std::move(members)});
    }
    for (const auto& n : j.at("nodes")) {
        PosetNode node;
        node.subgroup = n.at("subgroup").get<int>();
        node.rep = n.at("rep").get<int>();
        node.members = Bitset(p.group_order);
        for (int x : n.at("members").get<std::vector<int>>()) node.members.set(x);
        p.nodes.push_back(std::move(node));
    }
    for (const auto& e : j.at("hasse")) p.hasse.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    p.height = j.at("height").get<int>();
    p.connected = j.at("connected").get<bool>();
    p.strict_pairs = 0;
    for (const auto& s : strict_order_from_hasse((int)p.nodes.size(), p.hasse))
        p.strict_pairs += s.count();
    return p;
}

json complex_to_json(const SimplicialComplex& k) {
    json j = json::object();
    for (int d = 0; d <= k.dim(); ++d) j[std::to_string(d)] = k.cells[d];
    return j;
}

SimplicialComplex complex_from_json(const json& j) {
    SimplicialComplex k;
    for (int d = 0;; ++d) {
        auto it = j.find(std::to_string(d));
        if (it == j.end()) break;
        k.cells.push_back(it->get<std::vector<std::vector<int>>>());
    }
    if (!k.well_formed()) fail(errc::bad_input, "complex JSON is not a simplicial complex");
    return k;
}

std::string boundaries_text(const SimplicialComplex& k) {
    std::ostringstream os;
    for (int d = 1; d <= k.dim(); ++d) {
        IntMatrix m = boundary_matrix(k, d);
        os << "# " << d << ' ' << m.rows << ' ' << m.cols << '\n';
        for (int j = 0; j < m.cols; ++j)
            for (int i = 0; i < m.rows; ++i)
                if (m.at(i, j) != 0) os << d << ' ' << i << ' ' << j << ' ' << m.at(i, j) << '\n';
    }
    return os.str();
}

json catalog_to_json() {
    json entries = json::array();
    for (const auto& e : catalog_entries()) {
        json item = {
            {"spec", e.spec},
            {"params", e.params},
            {"expected_order", e.expected_order},
            {"expected_center_order", e.expected_center_order},
            {"expected_circles", e.expected_circles ? json(*e.expected_circles) : json(nullptr)},
            {"circles_formula", e.circles_formula},
            {"presentation", e.presentation},
        };
        entries.push_back(item);
    }
    return json{{"entries", entries}};
}

}  // namespace ecom
