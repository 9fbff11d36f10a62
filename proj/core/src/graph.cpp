#include "bareo/graph.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace bareo {

namespace {

void check_vertex_id(const VertexId& id) {
    if (id.empty())
        fail(Errc::BadParameter, "vertex id must be nonempty");
    for (char c : id)
        if (std::isspace(static_cast<unsigned char>(c)))
            fail(Errc::BadParameter, "vertex id '" + id + "' contains whitespace");
}

} // namespace

Edge Edge::make(VertexId a, VertexId b) {
    if (a == b)
        fail(Errc::LoopEdge, "edge endpoints must differ, got '" + a + "' twice");
    if (b < a)
        std::swap(a, b);
    return Edge{std::move(a), std::move(b)};
}

bool Graph::has_edge(const VertexId& a, const VertexId& b) const {
    if (a == b)
        return false;
    return has_edge(Edge::make(a, b));
}

Graph make_graph(const std::vector<VertexId>& vertex_ids,
                 const std::vector<std::pair<VertexId, VertexId>>& edge_pairs) {
    Graph g;
    for (const auto& id : vertex_ids) {
        check_vertex_id(id);
        if (!g.vertices_.insert(id).second)
            fail(Errc::DuplicateVertex, "vertex '" + id + "' listed twice");
    }
    for (const auto& [a, b] : edge_pairs) {
        Edge e = Edge::make(a, b);
        if (!g.has_vertex(e.u))
            fail(Errc::UnknownEndpoint, "edge endpoint '" + e.u + "' is not a vertex");
        if (!g.has_vertex(e.v))
            fail(Errc::UnknownEndpoint, "edge endpoint '" + e.v + "' is not a vertex");
        g.edges_.insert(e);
    }
    return g;
}

int degree(const Graph& g, const VertexId& v) {
    if (!g.has_vertex(v))
        fail(Errc::UnknownVertex, "no vertex '" + v + "'");
    int d = 0;
    for (const Edge& e : g.edges())
        if (e.touches(v))
            ++d;
    return d;
}

std::set<VertexId> neighbors(const Graph& g, const VertexId& v) {
    if (!g.has_vertex(v))
        fail(Errc::UnknownVertex, "no vertex '" + v + "'");
    std::set<VertexId> out;
    for (const Edge& e : g.edges())
        if (e.touches(v))
            out.insert(e.other(v));
    return out;
}

std::set<Edge> incident_edges(const Graph& g, const VertexId& v) {
    if (!g.has_vertex(v))
        fail(Errc::UnknownVertex, "no vertex '" + v + "'");
    std::set<Edge> out;
    for (const Edge& e : g.edges())
        if (e.touches(v))
            out.insert(e);
    return out;
}

std::set<VertexId> isolated_vertices(const Graph& g) {
    std::set<VertexId> out(g.vertices());
    for (const Edge& e : g.edges()) {
        out.erase(e.u);
        out.erase(e.v);
    }
    return out;
}

Graph induced_subgraph(const Graph& g, const std::set<VertexId>& a) {
    std::vector<VertexId> vs;
    for (const VertexId& v : a) {
        if (!g.has_vertex(v))
            fail(Errc::UnknownVertex, "no vertex '" + v + "' in ambient graph");
        vs.push_back(v);
    }
    std::vector<std::pair<VertexId, VertexId>> es;
    for (const Edge& e : g.edges())
        if (a.count(e.u) && a.count(e.v))
            es.emplace_back(e.u, e.v);
    return make_graph(vs, es);
}

bool is_subgraph(const Graph& h, const Graph& g) {
    return std::includes(g.vertices().begin(), g.vertices().end(),
                         h.vertices().begin(), h.vertices().end()) &&
           std::includes(g.edges().begin(), g.edges().end(),
                         h.edges().begin(), h.edges().end());
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    for (const VertexId& v : g.vertices())
        if (h.has_vertex(v))
            fail(Errc::NotDisjoint, "vertex '" + v + "' appears in both graphs");
    std::vector<VertexId> vs(g.vertices().begin(), g.vertices().end());
    vs.insert(vs.end(), h.vertices().begin(), h.vertices().end());
    std::vector<std::pair<VertexId, VertexId>> es;
    for (const Edge& e : g.edges())
        es.emplace_back(e.u, e.v);
    for (const Edge& e : h.edges())
        es.emplace_back(e.u, e.v);
    return make_graph(vs, es);
}

Graph subdivide_edge(const Graph& g, const Edge& e, const VertexId& w) {
    if (!g.has_edge(e))
        fail(Errc::UnknownEdge, "no edge '" + e.u + "-" + e.v + "'");
    check_vertex_id(w);
    if (g.has_vertex(w))
        fail(Errc::DuplicateVertex, "vertex '" + w + "' already present");
    std::vector<VertexId> vs(g.vertices().begin(), g.vertices().end());
    vs.push_back(w);
    std::vector<std::pair<VertexId, VertexId>> es;
    for (const Edge& f : g.edges())
        if (f != e)
            es.emplace_back(f.u, f.v);
    es.emplace_back(e.u, w);
    es.emplace_back(w, e.v);
    return make_graph(vs, es);
}

std::vector<Graph> components(const Graph& g) {
    std::set<VertexId> seen;
    std::vector<Graph> out;
    for (const VertexId& root : g.vertices()) {
        if (seen.count(root))
            continue;
        std::set<VertexId> comp;
        std::vector<VertexId> stack{root};
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            if (!comp.insert(v).second)
                continue;
            for (const VertexId& n : neighbors(g, v))
                if (!comp.count(n))
                    stack.push_back(n);
        }
        seen.insert(comp.begin(), comp.end());
        out.push_back(induced_subgraph(g, comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

namespace {

VertexId vid(int i) { return "v" + std::to_string(i); }

} // namespace

Graph named_graph(NamedKind kind, int n) {
    if (kind != NamedKind::Petersen && n < 1)
        fail(Errc::BadParameter, "n must be positive");
    std::vector<VertexId> vs;
    std::vector<std::pair<VertexId, VertexId>> es;
    switch (kind) {
    case NamedKind::Path:
        for (int i = 1; i <= n; ++i)
            vs.push_back(vid(i));
        for (int i = 1; i < n; ++i)
            es.emplace_back(vid(i), vid(i + 1));
        break;
    case NamedKind::Cycle:
        if (n < 3)
            fail(Errc::BadParameter, "cycle needs n >= 3, got " + std::to_string(n));
        for (int i = 1; i <= n; ++i)
            vs.push_back(vid(i));
        for (int i = 1; i <= n; ++i)
            es.emplace_back(vid(i), vid(i % n + 1));
        break;
    case NamedKind::Complete:
        for (int i = 1; i <= n; ++i)
            vs.push_back(vid(i));
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                es.emplace_back(vid(i), vid(j));
        break;
    case NamedKind::Edgeless:
        for (int i = 1; i <= n; ++i)
            vs.push_back(vid(i));
        break;
    case NamedKind::Petersen:
        for (int i = 1; i <= 10; ++i)
            vs.push_back(vid(i));
        // outer 5-cycle, spokes, inner pentagram
        for (int i = 1; i <= 5; ++i) {
            es.emplace_back(vid(i), vid(i % 5 + 1));
            es.emplace_back(vid(i), vid(i + 5));
            es.emplace_back(vid(i + 5), vid((i + 1) % 5 + 6));
        }
        break;
    }
    return make_graph(vs, es);
}

Graph named_graph(const std::string& kind, int n) {
    if (kind == "path")
        return named_graph(NamedKind::Path, n);
    if (kind == "cycle")
        return named_graph(NamedKind::Cycle, n);
    if (kind == "complete")
        return named_graph(NamedKind::Complete, n);
    if (kind == "edgeless")
        return named_graph(NamedKind::Edgeless, n);
    if (kind == "petersen")
        return named_graph(NamedKind::Petersen, n);
    fail(Errc::BadParameter, "unknown graph kind '" + kind + "'");
}

namespace {

void check_assignment(const Graph& g, const Graph& h, const VertexAssignment& fv) {
    for (const VertexId& v : g.vertices()) {
        auto it = fv.find(v);
        if (it == fv.end())
            fail(Errc::PartialMap, "vertex '" + v + "' has no image");
        if (!h.has_vertex(it->second))
            fail(Errc::PartialMap, "image '" + it->second + "' is not a codomain vertex");
    }
}

} // namespace

bool is_homomorphism(const Graph& g, const Graph& h, const VertexAssignment& fv) {
    check_assignment(g, h, fv);
    for (const Edge& e : g.edges()) {
        const VertexId& a = fv.at(e.u);
        const VertexId& b = fv.at(e.v);
        if (a == b || !h.has_edge(a, b))
            return false;
    }
    return true;
}

bool is_weak_homomorphism(const Graph& g, const Graph& h, const VertexAssignment& fv) {
    check_assignment(g, h, fv);
    for (const Edge& e : g.edges()) {
        const VertexId& a = fv.at(e.u);
        const VertexId& b = fv.at(e.v);
        if (a != b && !h.has_edge(a, b))
            return false;
    }
    return true;
}

namespace {

bool extend_iso(const std::vector<VertexId>& gv, const Graph& g, const Graph& h,
                std::map<VertexId, VertexId>& fwd, std::set<VertexId>& used, std::size_t i) {
    if (i == gv.size())
        return true;
    const VertexId& v = gv[i];
    for (const VertexId& w : h.vertices()) {
        if (used.count(w) || degree(g, v) != degree(h, w))
            continue;
        bool ok = true;
        for (const auto& [gv2, hv2] : fwd) {
            if (g.has_edge(v, gv2) != h.has_edge(w, hv2)) {
                ok = false;
                break;
            }
        }
        if (!ok)
            continue;
        fwd[v] = w;
        used.insert(w);
        if (extend_iso(gv, g, h, fwd, used, i + 1))
            return true;
        fwd.erase(v);
        used.erase(w);
    }
    return false;
}

} // namespace

std::optional<VertexAssignment> find_isomorphism(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size())
        return std::nullopt;
    std::vector<int> dg, dh;
    for (const VertexId& v : g.vertices())
        dg.push_back(degree(g, v));
    for (const VertexId& v : h.vertices())
        dh.push_back(degree(h, v));
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh)
        return std::nullopt;
    std::vector<VertexId> gv(g.vertices().begin(), g.vertices().end());
    // branch high-degree vertices first
    std::stable_sort(gv.begin(), gv.end(), [&](const VertexId& a, const VertexId& b) {
        return degree(g, a) > degree(g, b);
    });
    std::map<VertexId, VertexId> fwd;
    std::set<VertexId> used;
    if (extend_iso(gv, g, h, fwd, used, 0))
        return fwd;
    return std::nullopt;
}

bool is_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

} // namespace bareo
