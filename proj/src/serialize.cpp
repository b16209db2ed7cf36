#include "lcf/serialize.hpp"

namespace lcf {

namespace {

template <class T>
T require(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw InvalidArgument(std::string("missing JSON field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("bad JSON field '") + key + "': " + e.what());
    }
}

Count require_count(const Json& j, const char* key)
{
    return parse_decimal(require<std::string>(j, key));
}

} // namespace

Json to_json(const Graph& g)
{
    Json edges = Json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    return {{"num_vertices", g.num_vertices()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j)
{
    auto n = require<int>(j, "num_vertices");
    auto raw = require<std::vector<std::vector<int>>>(j, "edges");
    std::vector<Edge> edges;
    for (const auto& e : raw) {
        if (e.size() != 2)
            throw InvalidArgument("each edge must be a pair [u, v]");
        edges.emplace_back(e[0], e[1]);
    }
    return Graph(n, std::move(edges));
}

Json to_json(const ListAssignment& L)
{
    return {{"lists", L.lists()}};
}

ListAssignment assignment_from_json(const Json& j)
{
    if (j.is_object() && !j.contains("lists") && j.contains("assignment"))
        return assignment_from_json(j.at("assignment"));
    return ListAssignment(require<std::vector<ColorList>>(j, "lists"));
}

Json to_json(const WitnessRecord& w)
{
    Json relabel = Json::array();
    for (auto [from, to] : w.trace.relabeling)
        relabel.push_back({from, to});
    Json trace = {
        {"t", w.trace.t},
        {"eps", w.trace.eps.str()},
        {"extension_steps", w.trace.extension_steps},
        {"initial_profile", w.trace.initial_profile},
        {"final_profile", w.trace.final_profile},
        {"relabeling", relabel},
        {"notes", w.trace.notes},
    };
    return {
        {"l", w.l},
        {"m", w.m},
        {"assignment", to_json(w.assignment)},
        {"count_L", to_decimal(w.count_L)},
        {"count_m", to_decimal(w.count_m)},
        {"trace", trace},
    };
}

WitnessRecord witness_from_json(const Json& j)
{
    WitnessRecord w;
    w.l = require<long>(j, "l");
    w.m = require<int>(j, "m");
    w.assignment = assignment_from_json(require<Json>(j, "assignment"));
    w.count_L = require_count(j, "count_L");
    w.count_m = require_count(j, "count_m");
    if (j.contains("trace")) {
        const Json& t = j.at("trace");
        w.trace.t = t.value("t", 0L);
        if (t.contains("eps"))
            w.trace.eps = RationalEpsilon::parse(t.at("eps").get<std::string>());
        w.trace.extension_steps = t.value("extension_steps", 0L);
        if (t.contains("initial_profile"))
            w.trace.initial_profile = t.at("initial_profile").get<std::array<long, 4>>();
        if (t.contains("final_profile"))
            w.trace.final_profile = t.at("final_profile").get<std::array<long, 4>>();
        if (t.contains("relabeling"))
            for (const auto& p : t.at("relabeling"))
                w.trace.relabeling.emplace_back(p.at(0).get<Color>(), p.at(1).get<Color>());
        if (t.contains("notes"))
            w.trace.notes = t.at("notes").get<std::vector<std::string>>();
    }
    return w;
}

Json to_json(const BoundReport& r)
{
    return {
        {"l", r.l},
        {"q_value", r.q},
        {"lower", r.lower},
        {"upper_wqy", r.upper_wqy},
        {"upper_thomassen", to_decimal(r.upper_thomassen)},
    };
}

Json to_json(const EmpiricalTauRow& row)
{
    Json j = {
        {"l", row.l},
        {"m", row.m},
        {"witness_found", row.witness_found},
        {"best_count", to_decimal(row.best_count)},
        {"method", to_string(row.method)},
    };
    j["assignment"] = row.best_assignment ? to_json(*row.best_assignment) : Json(nullptr);
    return j;
}

std::string csv_header()
{
    return "l,m,witness_found,best_count,method";
}

std::string to_csv(const EmpiricalTauRow& row)
{
    return std::to_string(row.l) + "," + std::to_string(row.m) + "," + (row.witness_found ? "true" : "false") + "," +
           to_decimal(row.best_count) + "," + to_string(row.method);
}

} // namespace lcf
