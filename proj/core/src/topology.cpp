#include "bareo/topology.hpp"

#include <cstdlib>
#include <string>

#include "bareo/caps.hpp"

namespace bareo {

const Caps& caps() {
    static Caps c = [] {
        Caps out;
        if (const char* env = std::getenv("BAREO_CAP")) {
            long v = std::strtol(env, nullptr, 10);
            if (v > 0)
                out.points = static_cast<std::size_t>(v);
        }
        return out;
    }();
    return c;
}

std::string BarePoint::describe() const {
    if (is_vertex())
        return "vertex " + vertex_id();
    return "edge " + edge_value().u + "-" + edge_value().v;
}

bool point_in_space(const Graph& g, const BarePoint& p) {
    return p.is_vertex() ? g.has_vertex(p.vertex_id()) : g.has_edge(p.edge_value());
}

namespace {

void check_ambient(const Graph& g, const PointSet& a) {
    if (a.ambient != g)
        fail(Errc::AmbientMismatch, "point set belongs to a different graph");
    for (const BarePoint& p : a.points)
        if (!point_in_space(g, p))
            fail(Errc::AmbientMismatch, a.points.begin()->describe() + " not in B(G)");
}

} // namespace

PointSet bare_points(const Graph& g) {
    PointSet out{g, {}};
    for (const VertexId& v : g.vertices())
        out.points.insert(BarePoint::vertex(v));
    for (const Edge& e : g.edges())
        out.points.insert(BarePoint::edge(e));
    return out;
}

PointSet open_star(const Graph& g, const VertexId& v) {
    if (!g.has_vertex(v))
        fail(Errc::UnknownVertex, "no vertex '" + v + "'");
    PointSet out{g, {BarePoint::vertex(v)}};
    for (const Edge& e : g.edges())
        if (e.touches(v))
            out.points.insert(BarePoint::edge(e));
    return out;
}

PointSet minimal_neighborhood(const Graph& g, const BarePoint& p) {
    if (!point_in_space(g, p))
        fail(Errc::UnknownPoint, p.describe() + " is not a point of B(G)");
    if (p.is_vertex())
        return open_star(g, p.vertex_id());
    return PointSet{g, {p}};
}

bool is_open(const Graph& g, const PointSet& a) {
    check_ambient(g, a);
    for (const BarePoint& p : a.points) {
        if (!p.is_vertex())
            continue;
        for (const Edge& e : g.edges())
            if (e.touches(p.vertex_id()) && !a.contains(BarePoint::edge(e)))
                return false;
    }
    return true;
}

std::optional<Graph> closed_subgraph_witness(const Graph& g, const PointSet& a) {
    check_ambient(g, a);
    std::vector<VertexId> vs;
    std::vector<std::pair<VertexId, VertexId>> es;
    for (const BarePoint& p : a.points) {
        if (p.is_vertex()) {
            vs.push_back(p.vertex_id());
        } else {
            const Edge& e = p.edge_value();
            if (!a.contains(BarePoint::vertex(e.u)) || !a.contains(BarePoint::vertex(e.v)))
                return std::nullopt; // an edge without its endpoints is no subgraph
            es.emplace_back(e.u, e.v);
        }
    }
    return make_graph(vs, es);
}

PointSet closure(const Graph& g, const PointSet& a) {
    check_ambient(g, a);
    PointSet out = a;
    for (const BarePoint& p : a.points) {
        if (p.is_edge()) {
            out.points.insert(BarePoint::vertex(p.edge_value().u));
            out.points.insert(BarePoint::vertex(p.edge_value().v));
        }
    }
    return out;
}

PointSet interior(const Graph& g, const PointSet& a) {
    check_ambient(g, a);
    PointSet out{g, {}};
    for (const BarePoint& p : a.points) {
        if (p.is_edge()) {
            out.points.insert(p);
            continue;
        }
        bool star_inside = true;
        for (const Edge& e : g.edges())
            if (e.touches(p.vertex_id()) && !a.contains(BarePoint::edge(e)))
                star_inside = false;
        if (star_inside)
            out.points.insert(p);
    }
    return out;
}

PointIndex::PointIndex(const Graph& g) : graph_(g) {
    for (const VertexId& v : g.vertices())
        points_.push_back(BarePoint::vertex(v));
    vertex_count_ = points_.size();
    for (const Edge& e : g.edges())
        points_.push_back(BarePoint::edge(e));
    if (points_.size() > 64)
        fail(Errc::TooLarge, "bitmask index supports at most 64 points, got " +
                                 std::to_string(points_.size()));
    for (std::size_t i = 0; i < points_.size(); ++i)
        by_point_[points_[i]] = i;
    for (std::size_t i = 0; i < vertex_count_; ++i) {
        Mask m = Mask{1} << i;
        const VertexId& v = points_[i].vertex_id();
        for (std::size_t j = vertex_count_; j < points_.size(); ++j)
            if (points_[j].edge_value().touches(v))
                m |= Mask{1} << j;
        star_masks_.push_back(m);
    }
}

std::size_t PointIndex::index(const BarePoint& p) const {
    auto it = by_point_.find(p);
    if (it == by_point_.end())
        fail(Errc::UnknownPoint, p.describe() + " is not a point of B(G)");
    return it->second;
}

bool PointIndex::mask_is_open(Mask m) const {
    for (std::size_t i = 0; i < vertex_count_; ++i)
        if ((m >> i) & 1)
            if ((star_masks_[i] & m) != star_masks_[i])
                return false;
    return true;
}

PointIndex::Mask PointIndex::mask_of(const PointSet& a) const {
    Mask m = 0;
    for (const BarePoint& p : a.points)
        m |= Mask{1} << index(p);
    return m;
}

PointSet PointIndex::to_point_set(Mask m) const {
    PointSet out{graph_, {}};
    for (std::size_t i = 0; i < points_.size(); ++i)
        if ((m >> i) & 1)
            out.points.insert(points_[i]);
    return out;
}

std::vector<PointIndex::Mask> enumerate_open_masks(const PointIndex& idx) {
    // A union of sub-basis elements is determined by its vertex part W
    // (each vertex drags its whole star in) plus any set of edges not
    // already forced by W. Every open set arises from exactly one (W, F).
    const std::size_t nv = idx.vertex_count();
    const std::size_t n = idx.size();
    std::vector<PointIndex::Mask> out;
    const PointIndex::Mask edge_bits = idx.full_mask() & ~((PointIndex::Mask{1} << nv) - 1);
    for (PointIndex::Mask w = 0; w < (PointIndex::Mask{1} << nv); ++w) {
        PointIndex::Mask base = w;
        for (std::size_t i = 0; i < nv; ++i)
            if ((w >> i) & 1)
                base |= idx.star_mask(i);
        PointIndex::Mask free_edges = edge_bits & ~base;
        // iterate all subsets of free_edges
        PointIndex::Mask f = 0;
        while (true) {
            out.push_back(base | f);
            if (f == free_edges)
                break;
            f = (f - free_edges) & free_edges;
        }
    }
    (void)n;
    return out;
}

std::vector<PointSet> enumerate_open_sets(const Graph& g) {
    PointIndex idx(g);
    if (idx.size() > caps().points)
        fail(Errc::TooLarge, "B(G) has " + std::to_string(idx.size()) +
                                 " points, cap is " + std::to_string(caps().points));
    std::vector<PointSet> out;
    for (PointIndex::Mask m : enumerate_open_masks(idx))
        out.push_back(idx.to_point_set(m));
    return out;
}

bool is_topologically_connected(const Graph& g) {
    if (g.empty())
        fail(Errc::EmptyGraph, "connectedness of B(G) is undefined for the empty graph");
    return is_connected(g);
}

SeparationReport separation_report(const Graph& g) {
    SeparationReport rep;
    rep.t0 = true;
    rep.hausdorff = true;
    // Minimal neighborhoods decide both axioms in an Alexandroff space:
    // p, q are T0-separable unless each lies in the other's minimal
    // neighborhood; they have disjoint neighborhoods iff the minimal ones
    // are disjoint.
    PointSet all = bare_points(g);
    std::vector<BarePoint> pts(all.points.begin(), all.points.end());
    std::vector<PointSet> nbhd;
    nbhd.reserve(pts.size());
    for (const BarePoint& p : pts)
        nbhd.push_back(minimal_neighborhood(g, p));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (nbhd[i].contains(pts[j]) && nbhd[j].contains(pts[i]))
                rep.t0 = false;
            bool disjoint = true;
            for (const BarePoint& p : nbhd[i].points)
                if (nbhd[j].contains(p))
                    disjoint = false;
            if (!disjoint)
                rep.hausdorff = false;
        }
    }
    if (!rep.hausdorff) {
        // witness: first vertex with an incident edge, paired with that edge
        for (const VertexId& v : g.vertices()) {
            std::set<Edge> inc = incident_edges(g, v);
            if (!inc.empty()) {
                rep.witness = {BarePoint::vertex(v), BarePoint::edge(*inc.begin())};
                break;
            }
        }
    }
    return rep;
}

} // namespace bareo
