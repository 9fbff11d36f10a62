#pragma once

#include <string>
#include <vector>

#include "bareo/topology.hpp"

namespace bareo {

/// Total function B(domain) -> B(codomain).
struct PointMap {
    Graph domain;
    Graph codomain;
    std::map<BarePoint, BarePoint> images;

    static PointMap make(Graph domain, Graph codomain, std::map<BarePoint, BarePoint> images);
    static PointMap identity(const Graph& g);

    const BarePoint& operator()(const BarePoint& p) const;

    friend bool operator==(const PointMap&, const PointMap&) = default;
};

/// Pointwise composition second . first; first.codomain must equal
/// second.domain.
PointMap compose(const PointMap& first, const PointMap& second);

/// Sub-basis criterion: the preimage of every codomain star is open.
bool is_continuous(const PointMap& f);

struct Violation {
    std::string check;
    BarePoint at;
    std::string detail;
};

struct MapClassification {
    bool continuous = false;
    bool vertex_map = false;       // vertices land on vertices
    bool edge_map = false;         // edges land on edges
    bool incidence_map = false;    // continuous vertex+edge map with f(uv) = f(u)f(v)
    bool injective = false;
    bool surjective = false;       // image covers all of B(codomain)
    bool contraction_like = false; // collapses connected fibers onto the codomain
    std::vector<Violation> violations;
};

MapClassification classify(const PointMap& f);

/// Vertices follow fv, each edge uv goes to the edge fv(u)fv(v).
PointMap induced_from_hom(const Graph& g, const Graph& h, const VertexAssignment& fv);

/// Vertices follow fv, an edge goes to the image edge when the endpoint
/// images differ and to the common image vertex otherwise.
PointMap induced_from_weak_hom(const Graph& g, const Graph& h, const VertexAssignment& fv);

/// For every incident (vertex, edge) pair of the domain: either both map
/// to the same point, or the vertex image is a vertex and the edge image
/// an edge incident to it. Continuous maps never violate this.
std::vector<Violation> check_incidence_preservation(const PointMap& f);

struct QuotientResult {
    Graph quotient;
    PointMap map;
};

/// Merge u and v into w, redirecting incident edges; the edge uv, when
/// present, collapses into w (edge contraction).
QuotientResult vertex_identification(const Graph& g, const VertexId& u, const VertexId& v,
                                     const VertexId& w);

/// Contract the listed edges in order; each must exist in the
/// intermediate graph at its turn. Merged vertices are named "u+v"
/// (primes appended on clashes). Empty list yields the identity.
QuotientResult contraction_script(const Graph& g, const std::vector<Edge>& edges);

/// The non-contraction surjection of a subdivision: inserted vertices and
/// their incident edges all land on the subdivided edge, everything else
/// maps to itself. `inserted` sends each inserted vertex to the edge of h
/// it subdivides.
PointMap subdivision_collapse(const Graph& gsub, const Graph& h,
                              const std::map<VertexId, Edge>& inserted);

/// Turn a continuous map into a continuous vertex map by reassigning the
/// stars of vertices that land on edges to one endpoint of that edge.
/// Applied per component of the domain; the output is re-verified.
PointMap vertexify(const PointMap& f);

/// The restriction to vertices of a vertex map.
VertexAssignment vertex_restriction(const PointMap& f);

/// True when every edge image follows the weak-hom rule from the vertex
/// images (edge uv -> f(u)f(v), or the common vertex if they coincide).
bool is_canonical_vertex_map(const PointMap& f);

} // namespace bareo
