#pragma once

#include <vector>

#include "pickopt/picking_graph.hpp"
#include "pickopt/walk.hpp"

namespace pickopt {

// Largest graph the oracle accepts.
inline constexpr int kOracleMaxEdges = 24;

// Optional combinatorial restrictions on the enumerated walks.
struct RouteRestriction {
  // No subaisle traversed fully in both directions (every chain edge at
  // multiplicity 2). Subaisle 0 is exempt in 2-block layouts.
  bool single_traversal = false;
  // Same restriction, only on subaisles holding a required vertex.
  bool single_traversal_picked = false;
  // Never touch a subaisle endpoint only to turn back into the same subaisle
  // (bottom endpoints always, top endpoints below the first cross-aisle).
  bool artificial_vertex_reversal = false;
  // Every entered subaisle is traversed completely.
  bool no_reversal = false;
};

// Minimum-length closed walk from the origin visiting every vertex of
// `required`, by exhaustive enumeration of edge multiplicities in {0,1,2}
// (chain patterns that leave a stranded middle segment are skipped, since
// they can never be connected). Ties go to the lexicographically smallest
// multiplicity vector. With required empty the walk still leaves the origin.
// Throws ResourceLimitError above kOracleMaxEdges edges.
Walk route_oracle(const PickingGraph& graph, const std::vector<VertexId>& required,
                  const RouteRestriction& restriction = {});

// True when the walk respects every restriction flag that is set.
bool satisfies_restriction(const PickingGraph& graph, const Walk& walk,
                           const std::vector<VertexId>& required, const RouteRestriction& restriction);

}  // namespace pickopt
