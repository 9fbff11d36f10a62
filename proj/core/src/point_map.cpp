#include "bareo/point_map.hpp"

#include <algorithm>

namespace bareo {

PointMap PointMap::make(Graph domain, Graph codomain, std::map<BarePoint, BarePoint> images) {
    PointSet space = bare_points(domain);
    for (const BarePoint& p : space.points) {
        auto it = images.find(p);
        if (it == images.end())
            fail(Errc::PartialMap, p.describe() + " has no image");
        if (!point_in_space(codomain, it->second))
            fail(Errc::UnknownPoint, "image " + it->second.describe() + " is not in B(H)");
    }
    for (const auto& [p, q] : images)
        if (!point_in_space(domain, p))
            fail(Errc::UnknownPoint, p.describe() + " is not in B(G)");
    return PointMap{std::move(domain), std::move(codomain), std::move(images)};
}

PointMap PointMap::identity(const Graph& g) {
    std::map<BarePoint, BarePoint> images;
    for (const BarePoint& p : bare_points(g).points)
        images.emplace(p, p);
    return PointMap{g, g, std::move(images)};
}

const BarePoint& PointMap::operator()(const BarePoint& p) const {
    auto it = images.find(p);
    if (it == images.end())
        fail(Errc::UnknownPoint, p.describe() + " has no image under this map");
    return it->second;
}

PointMap compose(const PointMap& first, const PointMap& second) {
    if (first.codomain != second.domain)
        fail(Errc::DomainMismatch, "codomain of the first map differs from domain of the second");
    std::map<BarePoint, BarePoint> images;
    for (const auto& [p, q] : first.images)
        images.emplace(p, second(q));
    return PointMap{first.domain, second.codomain, std::move(images)};
}

bool is_continuous(const PointMap& f) {
    // preimages of codomain stars must be open (stars form a sub-basis)
    for (const VertexId& w : f.codomain.vertices()) {
        PointSet star = open_star(f.codomain, w);
        PointSet pre{f.domain, {}};
        for (const auto& [p, q] : f.images)
            if (star.contains(q))
                pre.points.insert(p);
        if (!is_open(f.domain, pre))
            return false;
    }
    return true;
}

namespace {

bool edge_image_matches(const PointMap& f, const Edge& e) {
    const BarePoint& iu = f(BarePoint::vertex(e.u));
    const BarePoint& iv = f(BarePoint::vertex(e.v));
    const BarePoint& ie = f(BarePoint::edge(e));
    if (!iu.is_vertex() || !iv.is_vertex() || !ie.is_edge())
        return false;
    if (iu.vertex_id() == iv.vertex_id())
        return false;
    return ie.edge_value() == Edge::make(iu.vertex_id(), iv.vertex_id());
}

} // namespace

MapClassification classify(const PointMap& f) {
    MapClassification c;
    c.continuous = is_continuous(f);

    c.vertex_map = true;
    c.edge_map = true;
    for (const auto& [p, q] : f.images) {
        if (p.is_vertex() && !q.is_vertex()) {
            c.vertex_map = false;
            c.violations.push_back({"vertex_map", p, "maps to " + q.describe()});
        }
        if (p.is_edge() && !q.is_edge()) {
            c.edge_map = false;
            c.violations.push_back({"edge_map", p, "maps to " + q.describe()});
        }
    }

    c.incidence_map = c.continuous && c.vertex_map && c.edge_map;
    if (c.incidence_map) {
        for (const Edge& e : f.domain.edges()) {
            if (!edge_image_matches(f, e)) {
                c.incidence_map = false;
                c.violations.push_back({"incidence_map", BarePoint::edge(e),
                                        "edge image is not the edge joining the endpoint images"});
                break;
            }
        }
    }

    std::set<BarePoint> image;
    c.injective = true;
    for (const auto& [p, q] : f.images)
        if (!image.insert(q).second)
            c.injective = false;
    c.surjective = image.size() == bare_points(f.codomain).points.size();

    // contraction-like: continuous vertex map, surjective, and each
    // codomain vertex pulls back to the bare representation of a
    // connected induced subgraph
    c.contraction_like = c.continuous && c.vertex_map && c.surjective;
    if (c.contraction_like) {
        for (const VertexId& w : f.codomain.vertices()) {
            std::set<VertexId> fiber_vertices;
            std::set<Edge> fiber_edges;
            for (const auto& [p, q] : f.images) {
                if (q == BarePoint::vertex(w)) {
                    if (p.is_vertex())
                        fiber_vertices.insert(p.vertex_id());
                    else
                        fiber_edges.insert(p.edge_value());
                }
            }
            Graph piece = induced_subgraph(f.domain, fiber_vertices);
            if (piece.edges() != fiber_edges || !is_connected(piece)) {
                c.contraction_like = false;
                c.violations.push_back({"contraction_like", BarePoint::vertex(w),
                                        "fiber is not a connected induced subgraph"});
                break;
            }
        }
    }

    for (Violation& v : check_incidence_preservation(f))
        c.violations.push_back(std::move(v));
    return c;
}

PointMap induced_from_hom(const Graph& g, const Graph& h, const VertexAssignment& fv) {
    if (!is_homomorphism(g, h, fv))
        fail(Errc::NotHomomorphism, "assignment is not a graph homomorphism");
    std::map<BarePoint, BarePoint> images;
    for (const VertexId& v : g.vertices())
        images.emplace(BarePoint::vertex(v), BarePoint::vertex(fv.at(v)));
    for (const Edge& e : g.edges())
        images.emplace(BarePoint::edge(e),
                       BarePoint::edge(Edge::make(fv.at(e.u), fv.at(e.v))));
    return PointMap{g, h, std::move(images)};
}

PointMap induced_from_weak_hom(const Graph& g, const Graph& h, const VertexAssignment& fv) {
    if (!is_weak_homomorphism(g, h, fv))
        fail(Errc::NotWeakHomomorphism, "assignment is not a weak homomorphism");
    std::map<BarePoint, BarePoint> images;
    for (const VertexId& v : g.vertices())
        images.emplace(BarePoint::vertex(v), BarePoint::vertex(fv.at(v)));
    for (const Edge& e : g.edges()) {
        const VertexId& a = fv.at(e.u);
        const VertexId& b = fv.at(e.v);
        images.emplace(BarePoint::edge(e),
                       a == b ? BarePoint::vertex(a) : BarePoint::edge(Edge::make(a, b)));
    }
    return PointMap{g, h, std::move(images)};
}

std::vector<Violation> check_incidence_preservation(const PointMap& f) {
    std::vector<Violation> out;
    for (const Edge& e : f.domain.edges()) {
        const BarePoint& ie = f(BarePoint::edge(e));
        for (const VertexId& v : {e.u, e.v}) {
            const BarePoint& iv = f(BarePoint::vertex(v));
            if (iv == ie)
                continue;
            if (iv.is_vertex() && ie.is_edge() && ie.edge_value().touches(iv.vertex_id()))
                continue;
            out.push_back({"incidence_preservation", BarePoint::vertex(v),
                           "incident edge " + e.u + "-" + e.v + " maps to " + ie.describe() +
                               " while the vertex maps to " + iv.describe()});
        }
    }
    return out;
}

QuotientResult vertex_identification(const Graph& g, const VertexId& u, const VertexId& v,
                                     const VertexId& w) {
    if (u == v)
        fail(Errc::SameVertex, "cannot identify '" + u + "' with itself");
    if (!g.has_vertex(u))
        fail(Errc::UnknownVertex, "no vertex '" + u + "'");
    if (!g.has_vertex(v))
        fail(Errc::UnknownVertex, "no vertex '" + v + "'");
    if (w != u && w != v && g.has_vertex(w))
        fail(Errc::NameClash, "vertex '" + w + "' already present");

    std::vector<VertexId> vs;
    for (const VertexId& x : g.vertices())
        if (x != u && x != v)
            vs.push_back(x);
    vs.push_back(w);
    std::vector<std::pair<VertexId, VertexId>> es;
    for (const Edge& e : g.edges()) {
        if (e == Edge::make(u, v))
            continue; // collapsed
        if (e.touches(u))
            es.emplace_back(w, e.other(u));
        else if (e.touches(v))
            es.emplace_back(w, e.other(v));
        else
            es.emplace_back(e.u, e.v);
    }
    Graph quotient = make_graph(vs, es);

    std::map<BarePoint, BarePoint> images;
    for (const VertexId& x : g.vertices())
        images.emplace(BarePoint::vertex(x),
                       BarePoint::vertex(x == u || x == v ? w : x));
    for (const Edge& e : g.edges()) {
        if (e == Edge::make(u, v))
            images.emplace(BarePoint::edge(e), BarePoint::vertex(w));
        else if (e.touches(u))
            images.emplace(BarePoint::edge(e), BarePoint::edge(Edge::make(w, e.other(u))));
        else if (e.touches(v))
            images.emplace(BarePoint::edge(e), BarePoint::edge(Edge::make(w, e.other(v))));
        else
            images.emplace(BarePoint::edge(e), BarePoint::edge(e));
    }
    return {quotient, PointMap{g, quotient, std::move(images)}};
}

namespace {

VertexId fresh_merge_name(const Graph& g, const VertexId& u, const VertexId& v) {
    VertexId name = u + "+" + v;
    while (g.has_vertex(name) && name != u && name != v)
        name += "'";
    return name;
}

} // namespace

QuotientResult contraction_script(const Graph& g, const std::vector<Edge>& edges) {
    QuotientResult acc{g, PointMap::identity(g)};
    for (const Edge& e : edges) {
        if (!acc.quotient.has_edge(e))
            fail(Errc::StaleEdge,
                 "edge '" + e.u + "-" + e.v + "' is not present at its turn in the script");
        VertexId w = fresh_merge_name(acc.quotient, e.u, e.v);
        QuotientResult step = vertex_identification(acc.quotient, e.u, e.v, w);
        acc.map = compose(acc.map, step.map);
        acc.quotient = step.quotient;
    }
    return acc;
}

PointMap subdivision_collapse(const Graph& gsub, const Graph& h,
                              const std::map<VertexId, Edge>& inserted) {
    // check the claimed shape: h's vertices survive, inserted vertices have
    // degree 2, and each subdivided edge unfolds into a path through its
    // inserted vertices
    for (const VertexId& v : h.vertices())
        if (!gsub.has_vertex(v))
            fail(Errc::NotASubdivision, "vertex '" + v + "' of the base graph is missing");
    for (const VertexId& v : gsub.vertices())
        if (!h.has_vertex(v) && !inserted.count(v))
            fail(Errc::NotASubdivision, "vertex '" + v + "' is neither original nor inserted");
    for (const auto& [wv, e] : inserted) {
        if (!gsub.has_vertex(wv) || h.has_vertex(wv))
            fail(Errc::NotASubdivision, "inserted vertex '" + wv + "' is invalid");
        if (!h.has_edge(e))
            fail(Errc::NotASubdivision,
                 "'" + wv + "' claims to subdivide a non-edge of the base graph");
        if (degree(gsub, wv) != 2)
            fail(Errc::NotASubdivision, "inserted vertex '" + wv + "' does not have degree 2");
    }

    std::map<BarePoint, BarePoint> images;
    std::set<Edge> accounted;
    for (const Edge& e : h.edges()) {
        std::set<VertexId> interior;
        for (const auto& [wv, target] : inserted)
            if (target == e)
                interior.insert(wv);
        if (interior.empty()) {
            if (!gsub.has_edge(e))
                fail(Errc::NotASubdivision,
                     "edge '" + e.u + "-" + e.v + "' is neither present nor subdivided");
            images.emplace(BarePoint::edge(e), BarePoint::edge(e));
            accounted.insert(e);
            continue;
        }
        // walk the path e.u -> e.v through the interior vertices
        VertexId prev = e.u;
        std::set<VertexId> left = interior;
        while (!left.empty()) {
            std::optional<VertexId> next;
            for (const VertexId& cand : left)
                if (gsub.has_edge(prev, cand))
                    next = cand;
            if (!next)
                fail(Errc::NotASubdivision, "inserted vertices for edge '" + e.u + "-" + e.v +
                                                "' do not form a path");
            images.emplace(BarePoint::edge(Edge::make(prev, *next)), BarePoint::edge(e));
            accounted.insert(Edge::make(prev, *next));
            images.emplace(BarePoint::vertex(*next), BarePoint::edge(e));
            prev = *next;
            left.erase(*next);
        }
        if (!gsub.has_edge(prev, e.v))
            fail(Errc::NotASubdivision,
                 "path for edge '" + e.u + "-" + e.v + "' does not reach '" + e.v + "'");
        images.emplace(BarePoint::edge(Edge::make(prev, e.v)), BarePoint::edge(e));
        accounted.insert(Edge::make(prev, e.v));
    }
    for (const Edge& e : gsub.edges())
        if (!accounted.count(e))
            fail(Errc::NotASubdivision, "edge '" + e.u + "-" + e.v + "' has no place in the subdivision");
    for (const VertexId& v : h.vertices())
        images.emplace(BarePoint::vertex(v), BarePoint::vertex(v));
    return PointMap::make(gsub, h, std::move(images));
}

VertexAssignment vertex_restriction(const PointMap& f) {
    VertexAssignment out;
    for (const VertexId& v : f.domain.vertices()) {
        const BarePoint& q = f(BarePoint::vertex(v));
        if (!q.is_vertex())
            fail(Errc::NotVertexMap, "vertex '" + v + "' maps to " + q.describe());
        out[v] = q.vertex_id();
    }
    return out;
}

bool is_canonical_vertex_map(const PointMap& f) {
    for (const VertexId& v : f.domain.vertices())
        if (!f(BarePoint::vertex(v)).is_vertex())
            return false;
    for (const Edge& e : f.domain.edges()) {
        const VertexId& a = f(BarePoint::vertex(e.u)).vertex_id();
        const VertexId& b = f(BarePoint::vertex(e.v)).vertex_id();
        const BarePoint& ie = f(BarePoint::edge(e));
        BarePoint want =
            a == b ? BarePoint::vertex(a) : BarePoint::edge(Edge::make(a, b));
        if (ie != want)
            return false;
    }
    return true;
}

PointMap vertexify(const PointMap& f) {
    if (!is_continuous(f))
        fail(Errc::NotContinuous, "vertexify requires a continuous map");

    // centers: vertices landing on an edge; continuity forces their whole
    // star onto that edge
    std::map<VertexId, Edge> center_edge;
    for (const VertexId& v : f.domain.vertices()) {
        const BarePoint& q = f(BarePoint::vertex(v));
        if (q.is_edge())
            center_edge.emplace(v, q.edge_value());
    }

    // pick a target endpoint per (component, landing edge): the smaller
    // endpoint when no outside neighbor uses it, otherwise the larger one
    std::map<VertexId, VertexId> new_vertex_image;
    for (const Graph& comp : components(f.domain)) {
        std::set<Edge> landing;
        for (const VertexId& v : comp.vertices())
            if (center_edge.count(v))
                landing.insert(center_edge.at(v));
        for (const Edge& e : landing) {
            bool smaller_used = false;
            for (const VertexId& v : comp.vertices()) {
                if (!center_edge.count(v) || center_edge.at(v) != e)
                    continue;
                for (const VertexId& nb : neighbors(f.domain, v)) {
                    if (center_edge.count(nb))
                        continue;
                    const BarePoint& img = f(BarePoint::vertex(nb));
                    if (img.is_vertex() && img.vertex_id() == e.u)
                        smaller_used = true;
                }
            }
            const VertexId target = smaller_used ? e.v : e.u;
            for (const VertexId& v : comp.vertices())
                if (center_edge.count(v) && center_edge.at(v) == e)
                    new_vertex_image[v] = target;
        }
    }

    std::map<BarePoint, BarePoint> images;
    for (const VertexId& v : f.domain.vertices()) {
        auto it = new_vertex_image.find(v);
        images.emplace(BarePoint::vertex(v),
                       it != new_vertex_image.end() ? BarePoint::vertex(it->second)
                                                    : f(BarePoint::vertex(v)));
    }
    for (const Edge& e : f.domain.edges()) {
        bool in_reassigned_star = center_edge.count(e.u) || center_edge.count(e.v);
        if (!in_reassigned_star) {
            images.emplace(BarePoint::edge(e), f(BarePoint::edge(e)));
            continue;
        }
        // inside a reassigned star the edge follows its (new) endpoint
        // images: common vertex when they agree, the joining edge otherwise
        const VertexId& a = images.at(BarePoint::vertex(e.u)).vertex_id();
        const VertexId& b = images.at(BarePoint::vertex(e.v)).vertex_id();
        images.emplace(BarePoint::edge(e),
                       a == b ? BarePoint::vertex(a) : BarePoint::edge(Edge::make(a, b)));
    }

    PointMap out{f.domain, f.codomain, std::move(images)};
    if (!is_continuous(out))
        fail(Errc::NotContinuous, "vertexification produced a discontinuous map");
    return out;
}

} // namespace bareo
