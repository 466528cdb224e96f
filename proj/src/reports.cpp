#include "treespan/reports.hpp"

#include <algorithm>
#include <sstream>

namespace treespan {

json edges_to_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (const auto& [u, v] : edges) out.push_back(json::array({u, v}));
    return out;
}

json to_json(const StructuralReport& r) {
    return json{{"spanning_tree", r.spanning_tree},
                {"max_degree_ok", r.max_degree_ok},
                {"origins_ok", r.origins_ok},
                {"degree_histogram", r.degree_histogram},
                {"violations", r.violations}};
}

json to_json(const BoundReport& r) {
    return json{{"r", r.r},
                {"col_2r", r.col_2r},
                {"connected_input", r.connected_input},
                {"bound", r.bound},
                {"adm_value", r.adm_value},
                {"adm_is_exact", r.adm_is_exact},
                {"margin", r.margin},
                {"tight_bound", r.tight_bound},
                {"holds", r.holds}};
}

json to_json(const VerifyReport& r) {
    return json{{"structure", to_json(r.structure)},
                {"bound", to_json(r.bound)},
                {"ok", r.ok()},
                {"violations", r.violations()}};
}

json to_json(const EltreeReport& r) {
    return json{{"ok", r.ok},
                {"subtrees_connected", r.assertion_ok[0]},
                {"ancestors_smaller", r.assertion_ok[1]},
                {"edges_ancestor_related", r.assertion_ok[2]},
                {"neighbour_in_child_subtrees", r.assertion_ok[3]},
                {"violations", r.violations}};
}

json to_json(const ColProfile& p) {
    return json{{"r", p.r},
                {"col", p.col_value},
                {"argmax_vertex", p.argmax_vertex},
                {"sreach_sizes", p.sreach_size}};
}

json to_json(const AdmCertificate& c) {
    return json{{"vertex", c.family.start},
                {"r", c.family.r},
                {"value", c.value},
                {"paths", c.family.paths}};
}

json augmentation_to_json(const Augmentation& a, const StructuralReport& structure,
                          const BoundReport* bound) {
    json f_new = json::array();
    for (const auto& [e, origin] : a.f_new)
        f_new.push_back(json{{"edge", json::array({e.first, e.second})}, {"origin", origin}});
    return json{{"n", a.n},
                {"component_count", a.component_count},
                {"f", edges_to_json(a.f.edges())},
                {"f_new", f_new},
                {"chain_edges", edges_to_json(a.chain_edges.edges())},
                {"component_min", a.component_min},
                {"chain_vertex", a.chain_vertex},
                {"degree_histogram", structure.degree_histogram},
                {"bound_report", bound ? to_json(*bound) : json()}};
}

namespace {

std::vector<Edge> edges_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
    std::vector<Edge> out;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer())
            throw std::invalid_argument(std::string(what) + ": expected [u, v] pairs");
        out.emplace_back(item[0].get<int>(), item[1].get<int>());
    }
    return out;
}

}  // namespace

Augmentation augmentation_from_json(const json& j) {
    try {
        Augmentation a;
        a.n = j.at("n").get<int>();
        a.component_count = j.at("component_count").get<int>();
        a.f = EdgeSet(edges_from_json(j.at("f"), "f"));
        a.chain_edges = EdgeSet(edges_from_json(j.at("chain_edges"), "chain_edges"));
        for (const auto& item : j.at("f_new")) {
            const auto& pair = item.at("edge");
            if (!pair.is_array() || pair.size() != 2)
                throw std::invalid_argument("f_new: expected {edge: [u, v], origin}");
            a.f_new.push_back(
                {make_edge(pair[0].get<int>(), pair[1].get<int>()), item.at("origin").get<int>()});
        }
        std::sort(a.f_new.begin(), a.f_new.end(),
                  [](const NewEdge& x, const NewEdge& y) { return x.e < y.e; });
        a.component_min = j.at("component_min").get<std::vector<int>>();
        a.chain_vertex = j.at("chain_vertex").get<std::vector<int>>();
        return a;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("augmentation JSON: ") + e.what());
    }
}

std::string experiment_csv_header() {
    return "instance,seed,n,m,ordering,r,col_2r,adm_value,adm_is_exact,bound,margin,"
           "backbone_s,degree3_s,total_s";
}

std::string experiment_csv_row(const ExperimentRecord& rec) {
    std::ostringstream out;
    out << rec.instance << ',' << rec.seed << ',' << rec.n << ',' << rec.m << ','
        << rec.ordering_kind << ',' << rec.r << ',' << rec.col_2r << ',' << rec.adm_value << ','
        << (rec.adm_is_exact ? 1 : 0) << ',' << rec.bound << ',' << rec.margin << ','
        << rec.times.backbone_s << ',' << rec.times.degree3_s << ',' << rec.times.total_s;
    return out.str();
}

json to_json(const ExperimentRecord& rec) {
    return json{{"instance", rec.instance},
                {"seed", rec.seed},
                {"n", rec.n},
                {"m", rec.m},
                {"ordering", rec.ordering_kind},
                {"r", rec.r},
                {"col_2r", rec.col_2r},
                {"adm_value", rec.adm_value},
                {"adm_is_exact", rec.adm_is_exact},
                {"bound", rec.bound},
                {"margin", rec.margin},
                {"times", json{{"backbone_s", rec.times.backbone_s},
                               {"degree3_s", rec.times.degree3_s},
                               {"total_s", rec.times.total_s}}}};
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "n,m,seconds_best,seconds_mean,seconds_stddev,reps\n";
    for (const auto& row : rows)
        out << row.n << ',' << row.m << ',' << row.seconds_best << ',' << row.seconds_mean << ','
            << row.seconds_stddev << ',' << row.reps << '\n';
    return out.str();
}

}  // namespace treespan
