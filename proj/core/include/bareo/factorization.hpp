#pragma once

#include "bareo/point_map.hpp"

namespace bareo {

enum class FactorOrder { ContractionThenIncidence, IncidenceThenContraction };

/// Middle graph plus two maps whose composition equals the factored map.
struct Factorization {
    Graph middle;
    PointMap first;  // domain -> middle
    PointMap second; // middle -> codomain
    FactorOrder order;
};

/// Structure of the preimage of a codomain vertex under a continuous
/// vertex map: pairwise non-adjacent connected pieces, plus a partition
/// of the fiber vertices into independent sets (greedy coloring).
struct FiberReport {
    VertexId target_vertex;
    std::vector<Graph> pieces;
    std::vector<std::set<VertexId>> independent_sets;
};

FiberReport fiber_structure(const PointMap& f, const VertexId& w);

/// Which collapsed edge to contract next; the lex-largest variant exists
/// so tests can confirm the middle graph is order-independent.
enum class ContractionPick { LexSmallest, LexLargest };

/// f = incidence . contraction: repeatedly contract an edge whose
/// endpoints share an image until none is left.
Factorization factor_contraction_first(const PointMap& f,
                                       ContractionPick pick = ContractionPick::LexSmallest);

/// f = contraction . incidence: embed the domain into a middle graph
/// whose extra edges wire each fiber connected (and reach unhit codomain
/// vertices), then contract the fibers.
Factorization factor_incidence_first(const PointMap& f);

/// The vertex restriction of an injective continuous map on a domain
/// without isolated vertices, verified to be an injective homomorphism.
VertexAssignment restrict_injective_to_hom(const PointMap& f);

/// The vertex restriction of a homeomorphism, verified to be a graph
/// isomorphism (the inverse is built from the image table and checked).
VertexAssignment homeomorphism_to_isomorphism(const PointMap& f);

} // namespace bareo
