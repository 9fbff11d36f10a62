#pragma once

#include <optional>

#include "bareo/point_map.hpp"

namespace bareo {

/// First proper coloring of g with colors from K_n (lexicographic search
/// over vertex assignments), packaged as the induced incidence map
/// B(g) -> B(K_n). Nullopt when no proper n-coloring exists.
std::optional<PointMap> find_incidence_coloring(const Graph& g, int n);

/// Smallest n admitting an incidence map onto B(K_n).
int chromatic_number(const Graph& g);

struct SurjectivityCheck {
    bool holds = false;
    std::optional<PointMap> counterexample;
};

/// Enumerates every incidence map B(g) -> B(K_n) and reports whether all
/// of them are surjective; requires g to be n-colorable.
SurjectivityCheck surjectivity_criterion(const Graph& g, int n);

struct ThetaResult {
    int value = 0;            // over all point maps when feasible
    int vertex_map_value = 0; // over weak homomorphisms
    PointMap witness;         // surjective continuous map achieving value
    bool full_oracle_complete = false; // point-map sweep ran to its verdict
};

/// Largest n with a continuous surjection B(g) -> B(K_n). The vertex-map
/// route always runs; the all-point-maps oracle runs when the candidate
/// count fits the cap, and any gap between the two would be reported in
/// value vs vertex_map_value.
ThetaResult theta(const Graph& g);

/// Length of the shortest closed walk covering every edge, via
/// breadth-first search over (vertex, covered-edge set) states.
int min_covering_closed_walk(const Graph& g);

/// chi, theta and the walk length of one graph, with verified witnesses.
/// min_walk_length is absent when the walk is undefined (disconnected or
/// edgeless graphs).
struct InvariantReport {
    int chi = 0;
    int theta = 0;
    PointMap witness_coloring;
    PointMap witness_theta;
    std::optional<int> min_walk_length;
};

InvariantReport invariant_report(const Graph& g);

} // namespace bareo
