#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "bareo/graph.hpp"

namespace bareo {

/// A point of the bare representation B(G): either a vertex or an edge.
/// The tag keeps the two kinds disjoint even under identifier collision.
struct BarePoint {
    std::variant<VertexId, Edge> payload;

    static BarePoint vertex(VertexId v) { return BarePoint{std::move(v)}; }
    static BarePoint edge(Edge e) { return BarePoint{std::move(e)}; }

    bool is_vertex() const { return payload.index() == 0; }
    bool is_edge() const { return payload.index() == 1; }
    const VertexId& vertex_id() const { return std::get<VertexId>(payload); }
    const Edge& edge_value() const { return std::get<Edge>(payload); }

    std::string describe() const;

    friend bool operator==(const BarePoint& a, const BarePoint& b) { return a.payload == b.payload; }
    friend bool operator<(const BarePoint& a, const BarePoint& b) {
        if (a.payload.index() != b.payload.index())
            return a.payload.index() < b.payload.index(); // vertices before edges
        if (a.is_vertex())
            return a.vertex_id() < b.vertex_id();
        return a.edge_value() < b.edge_value();
    }
};

/// A finite subset of B(G) together with its ambient graph.
struct PointSet {
    Graph ambient;
    std::set<BarePoint> points;

    bool contains(const BarePoint& p) const { return points.count(p) != 0; }
    std::size_t size() const { return points.size(); }

    friend bool operator==(const PointSet&, const PointSet&) = default;
};

/// Whether p actually is a point of B(g).
bool point_in_space(const Graph& g, const BarePoint& p);

/// All of B(g): every vertex and every edge, tagged.
PointSet bare_points(const Graph& g);

/// S_g(v): the vertex together with its incident edges.
PointSet open_star(const Graph& g, const VertexId& v);

/// Smallest open set containing p: the star for a vertex point, the
/// singleton for an edge point (the topology is Alexandroff).
PointSet minimal_neighborhood(const Graph& g, const BarePoint& p);

/// Open iff every vertex point of the set carries its whole star inside.
bool is_open(const Graph& g, const PointSet& a);

/// If a is closed, the subgraph H with B(H) = a; otherwise nullopt.
std::optional<Graph> closed_subgraph_witness(const Graph& g, const PointSet& a);

/// Smallest closed superset: adds both endpoints of every member edge.
PointSet closure(const Graph& g, const PointSet& a);

/// Largest open subset: member edges plus vertices whose star fits.
PointSet interior(const Graph& g, const PointSet& a);

/// Every open set of the star topology exactly once, generated from the
/// star sub-basis closed under unions and finite intersections. Requires
/// |B(g)| <= caps().points.
std::vector<PointSet> enumerate_open_sets(const Graph& g);

/// B(g) admits no partition into two nonempty disjoint open sets.
/// Computed through graph connectivity; the definitional check lives in
/// connectedness_oracle.
bool is_topologically_connected(const Graph& g);

struct SeparationReport {
    bool t0 = false;
    bool hausdorff = false;
    std::optional<std::pair<BarePoint, BarePoint>> witness; // non-separable pair
};

SeparationReport separation_report(const Graph& g);

/// Bitmask view of B(g) for exhaustive enumeration: vertices first
/// (sorted), then edges (sorted). At most 64 points.
class PointIndex {
public:
    using Mask = std::uint64_t;

    explicit PointIndex(const Graph& g);

    const Graph& graph() const { return graph_; }
    std::size_t size() const { return points_.size(); }
    std::size_t vertex_count() const { return vertex_count_; }

    const BarePoint& point(std::size_t i) const { return points_[i]; }
    std::size_t index(const BarePoint& p) const;

    /// Star of the vertex at point index i (i < vertex_count).
    Mask star_mask(std::size_t i) const { return star_masks_[i]; }
    Mask full_mask() const { return size() == 64 ? ~Mask{0} : ((Mask{1} << size()) - 1); }

    bool mask_is_open(Mask m) const;
    Mask mask_of(const PointSet& a) const;
    PointSet to_point_set(Mask m) const;

private:
    Graph graph_;
    std::vector<BarePoint> points_;
    std::map<BarePoint, std::size_t> by_point_;
    std::vector<Mask> star_masks_;
    std::size_t vertex_count_ = 0;
};

/// Same enumeration as enumerate_open_sets, as masks over idx.
std::vector<PointIndex::Mask> enumerate_open_masks(const PointIndex& idx);

} // namespace bareo
