#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bareo/error.hpp"

namespace bareo {

/// Opaque vertex identifier. Compared lexicographically; every
/// tie-break in the toolkit uses this order.
using VertexId = std::string;

/// Unordered pair of distinct vertices, stored sorted (u < v).
struct Edge {
    VertexId u;
    VertexId v;

    static Edge make(VertexId a, VertexId b);

    bool touches(const VertexId& x) const { return x == u || x == v; }
    const VertexId& other(const VertexId& x) const { return x == u ? v : u; }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple graph. Immutable after construction; all operations on
/// graphs are pure functions.
class Graph {
public:
    Graph() = default;

    const std::set<VertexId>& vertices() const { return vertices_; }
    const std::set<Edge>& edges() const { return edges_; }

    bool has_vertex(const VertexId& v) const { return vertices_.count(v) != 0; }
    bool has_edge(const Edge& e) const { return edges_.count(e) != 0; }
    bool has_edge(const VertexId& a, const VertexId& b) const;

    std::size_t order() const { return vertices_.size(); }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return vertices_.empty(); }

    friend bool operator==(const Graph&, const Graph&) = default;

    friend Graph make_graph(const std::vector<VertexId>& vertex_ids,
                            const std::vector<std::pair<VertexId, VertexId>>& edge_pairs);

private:
    std::set<VertexId> vertices_;
    std::set<Edge> edges_;
};

/// Validating constructor: canonicalizes edges, collapses duplicate edges,
/// rejects loops, repeated vertex ids and edges with unknown endpoints.
Graph make_graph(const std::vector<VertexId>& vertex_ids,
                 const std::vector<std::pair<VertexId, VertexId>>& edge_pairs);

int degree(const Graph& g, const VertexId& v);
std::set<VertexId> neighbors(const Graph& g, const VertexId& v);
std::set<Edge> incident_edges(const Graph& g, const VertexId& v);
std::set<VertexId> isolated_vertices(const Graph& g);

Graph induced_subgraph(const Graph& g, const std::set<VertexId>& a);
bool is_subgraph(const Graph& h, const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph subdivide_edge(const Graph& g, const Edge& e, const VertexId& w);

/// Maximal connected subgraphs, ordered by smallest vertex id.
/// The empty graph yields an empty list.
std::vector<Graph> components(const Graph& g);
bool is_connected(const Graph& g);

enum class NamedKind { Path, Cycle, Complete, Edgeless, Petersen };

/// Standard graphs with deterministic ids v1..vn. Cycle requires n >= 3;
/// Petersen ignores n.
Graph named_graph(NamedKind kind, int n);
Graph named_graph(const std::string& kind, int n);

/// Total vertex assignment V(G) -> V(H).
using VertexAssignment = std::map<VertexId, VertexId>;

bool is_homomorphism(const Graph& g, const Graph& h, const VertexAssignment& fv);
bool is_weak_homomorphism(const Graph& g, const Graph& h, const VertexAssignment& fv);

/// Brute-force isomorphism test (desk scale, backtracking on degree).
bool is_isomorphic(const Graph& g, const Graph& h);
std::optional<VertexAssignment> find_isomorphism(const Graph& g, const Graph& h);

} // namespace bareo
