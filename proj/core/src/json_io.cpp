#include "bareo/json_io.hpp"

#include <nlohmann/json.hpp>

namespace bareo {

json to_json(const Graph& g) {
    json vertices = json::array();
    for (const VertexId& v : g.vertices())
        vertices.push_back(v);
    json edges = json::array();
    for (const Edge& e : g.edges())
        edges.push_back(json::array({e.u, e.v}));
    return json{{"vertices", vertices}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    std::vector<VertexId> vs;
    for (const auto& v : j.at("vertices"))
        vs.push_back(v.get<VertexId>());
    std::vector<std::pair<VertexId, VertexId>> es;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw json::other_error::create(501, "edge must be a pair of vertex ids", &j);
        es.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    return make_graph(vs, es);
}

json to_json(const BarePoint& p) {
    if (p.is_vertex())
        return json{{"v", p.vertex_id()}};
    return json{{"e", json::array({p.edge_value().u, p.edge_value().v})}};
}

BarePoint point_from_json(const json& j) {
    if (j.contains("v"))
        return BarePoint::vertex(j.at("v").get<VertexId>());
    if (j.contains("e")) {
        const auto& e = j.at("e");
        if (!e.is_array() || e.size() != 2)
            throw json::other_error::create(501, "edge point needs a pair of ids", &j);
        return BarePoint::edge(Edge::make(e[0].get<VertexId>(), e[1].get<VertexId>()));
    }
    throw json::other_error::create(501, "point must carry \"v\" or \"e\"", &j);
}

json to_json(const PointSet& a) {
    json points = json::array();
    for (const BarePoint& p : a.points)
        points.push_back(to_json(p));
    return json{{"graph", to_json(a.ambient)}, {"points", points}};
}

PointSet point_set_from_json(const json& j) {
    PointSet out{graph_from_json(j.at("graph")), {}};
    for (const auto& p : j.at("points")) {
        BarePoint pt = point_from_json(p);
        if (!point_in_space(out.ambient, pt))
            fail(Errc::UnknownPoint, pt.describe() + " is not a point of the ambient graph");
        out.points.insert(pt);
    }
    return out;
}

json to_json(const PointMap& f) {
    json images = json::array();
    for (const auto& [p, q] : f.images)
        images.push_back(json{{"from", to_json(p)}, {"to", to_json(q)}});
    return json{{"domain", to_json(f.domain)},
                {"codomain", to_json(f.codomain)},
                {"images", images}};
}

PointMap point_map_from_json(const json& j) {
    Graph domain = graph_from_json(j.at("domain"));
    Graph codomain = graph_from_json(j.at("codomain"));
    std::map<BarePoint, BarePoint> images;
    for (const auto& entry : j.at("images")) {
        BarePoint from = point_from_json(entry.at("from"));
        BarePoint to = point_from_json(entry.at("to"));
        if (!images.emplace(from, to).second)
            fail(Errc::BadParameter, from.describe() + " listed twice in the image table");
    }
    return PointMap::make(std::move(domain), std::move(codomain), std::move(images));
}

json to_json(const MapClassification& c) {
    json violations = json::array();
    for (const Violation& v : c.violations)
        violations.push_back(json{{"check", v.check}, {"at", to_json(v.at)}, {"detail", v.detail}});
    return json{{"continuous", c.continuous},
                {"vertex_map", c.vertex_map},
                {"edge_map", c.edge_map},
                {"incidence_map", c.incidence_map},
                {"injective", c.injective},
                {"surjective", c.surjective},
                {"contraction_like", c.contraction_like},
                {"violations", violations}};
}

json to_json(const SeparationReport& r) {
    json out{{"t0", r.t0}, {"hausdorff", r.hausdorff}};
    if (r.witness)
        out["witness"] = json::array({to_json(r.witness->first), to_json(r.witness->second)});
    return out;
}

json to_json(const Factorization& f) {
    return json{{"middle", to_json(f.middle)},
                {"first", to_json(f.first)},
                {"second", to_json(f.second)},
                {"order", f.order == FactorOrder::ContractionThenIncidence
                              ? "contraction_then_incidence"
                              : "incidence_then_contraction"}};
}

json to_json(const FiberReport& r) {
    json pieces = json::array();
    for (const Graph& g : r.pieces)
        pieces.push_back(to_json(g));
    json sets = json::array();
    for (const auto& s : r.independent_sets)
        sets.push_back(json(s));
    return json{{"target_vertex", r.target_vertex},
                {"pieces", pieces},
                {"independent_sets", sets}};
}

json to_json(const CensusReport& r) {
    json mismatches = json::array();
    for (const CensusMismatch& m : r.mismatches)
        mismatches.push_back(json{{"map", to_json(m.map)},
                                  {"subbasis_verdict", m.subbasis_verdict},
                                  {"oracle_verdict", m.oracle_verdict}});
    return json{{"domain_graph", to_json(r.domain_graph)},
                {"codomain_graph", to_json(r.codomain_graph)},
                {"total_maps", r.total_maps},
                {"continuous", r.continuous},
                {"continuous_vertex_maps", r.continuous_vertex_maps},
                {"weak_homs", r.weak_homs},
                {"incidence_maps", r.incidence_maps},
                {"homs", r.homs},
                {"mismatches", mismatches}};
}

json to_json(const ThetaResult& r) {
    return json{{"value", r.value},
                {"vertex_map_value", r.vertex_map_value},
                {"witness", to_json(r.witness)},
                {"full_oracle_complete", r.full_oracle_complete}};
}

json to_json(const InvariantReport& r) {
    json out{{"chi", r.chi},
             {"theta", r.theta},
             {"witness_coloring", to_json(r.witness_coloring)},
             {"witness_theta", to_json(r.witness_theta)}};
    if (r.min_walk_length)
        out["min_walk_length"] = *r.min_walk_length;
    return out;
}

json to_json(const QuotientResult& r) {
    return json{{"quotient", to_json(r.quotient)}, {"map", to_json(r.map)}};
}

VertexAssignment assignment_from_json(const json& j) {
    VertexAssignment out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out[it.key()] = it.value().get<VertexId>();
    return out;
}

std::vector<Edge> edge_list_from_json(const json& j) {
    std::vector<Edge> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw json::other_error::create(501, "edge must be a pair of vertex ids", &j);
        out.push_back(Edge::make(e[0].get<VertexId>(), e[1].get<VertexId>()));
    }
    return out;
}

} // namespace bareo
