#pragma once

#include <string>
#include <vector>

#include "pickopt/picking_graph.hpp"
#include "pickopt/walk.hpp"

namespace pickopt {

enum class SShapeKind { r_S1, r_S2 };

// A no-reversal route that traverses the listed subaisles completely, in
// order, moving between them along shortest paths. The direction of each
// traversal is chosen to minimize the length (exact over both directions).
struct SShapeRoute {
  SShapeKind kind = SShapeKind::r_S2;
  std::vector<int> sequence;    // subaisle indices in visiting order
  std::vector<bool> southward;  // direction of each traversal
  int i0 = -1;                  // first subaisle of K1 (r_S1 only)
  Length vertical_length = 0;
  Length total_length = 0;
};

// Orientation-optimal route over a fixed subaisle sequence, from the origin
// back to the origin.
SShapeRoute route_over_sequence(const PickingGraph& graph, const std::vector<int>& sequence);

// S-shape routes of a 2-block layout. r_S2 visits K1 by increasing aisle, then
// K2 by decreasing aisle; r_S1 visits K1 without i0, then K2, then i0.
// Throws ValidationError for other block counts, an empty K1 u K2, subaisles
// in the wrong block, or r_S1 with K1 empty.
SShapeRoute evaluate_s_shape(const PickingGraph& graph, const std::vector<int>& K1,
                             const std::vector<int>& K2, SShapeKind kind);

// Route length estimate for a pick set: 0 when empty; 1-block layouts use the
// serpentine over the picked subaisles, 2-block layouts the shorter S-shape
// route. Throws ValidationError for 3 or more blocks.
Length s_shape_estimate(const PickingGraph& graph, const std::vector<VertexId>& picks);

// Concrete walk of a route: each traversal plus connecting moves (vertical in
// the current aisle, then along the cross-aisle). Edges used more than twice
// drop pairs of copies, so the walk length can be below total_length.
// An empty sequence yields the minimal departure.
Walk s_shape_walk(const PickingGraph& graph, const SShapeRoute& route);

// Shortest S-shape walk over the subaisles of the picks (1 or 2 blocks).
Walk s_shape_route_walk(const PickingGraph& graph, const std::vector<VertexId>& picks);

std::string to_string(SShapeKind kind);

}  // namespace pickopt
