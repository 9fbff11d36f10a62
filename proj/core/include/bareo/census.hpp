#pragma once

#include <cstdint>

#include "bareo/point_map.hpp"

namespace bareo {

/// Definitional continuity: the preimage of every enumerated open set of
/// the codomain is an enumerated open set of the domain. Independent of
/// the sub-basis shortcut in is_continuous.
bool oracle_is_continuous(const PointMap& f);

struct CensusMismatch {
    PointMap map;
    bool subbasis_verdict = false;
    bool oracle_verdict = false;
};

/// Tallies over every total point map B(domain) -> B(codomain).
/// continuous_vertex_maps counts distinct vertex restrictions of the
/// continuous vertex maps, which is the quantity the weak-homomorphism
/// equivalence pins down (several continuous maps can share a
/// restriction).
struct CensusReport {
    Graph domain_graph;
    Graph codomain_graph;
    std::uint64_t total_maps = 0;
    std::uint64_t continuous = 0;
    std::uint64_t continuous_vertex_maps = 0;
    std::uint64_t weak_homs = 0;
    std::uint64_t incidence_maps = 0;
    std::uint64_t homs = 0;
    std::vector<CensusMismatch> mismatches;
};

CensusReport census(const Graph& g, const Graph& h);

/// Definitional connectedness of B(g): no two disjoint nonempty open
/// sets cover the space. Checked over the enumerated topology.
bool connectedness_oracle(const Graph& g);

} // namespace bareo
