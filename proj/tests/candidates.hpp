#pragma once

// Closed but possibly disconnected walks for exercising separation.

#include <set>

#include "pickopt/instance.hpp"
#include "pickopt/picking_graph.hpp"
#include "pickopt/walk.hpp"

namespace testing_support {

// Each picked subaisle walked down and back up from its top, plus the minimal
// departure. Subaisles whose top is not the origin form separate components.
inline pickopt::Walk subaisle_loops(const pickopt::PickingGraph& g, const std::vector<pickopt::VertexId>& picks) {
  pickopt::Walk w = pickopt::minimal_departure(g);
  std::set<int> subs;
  for (pickopt::VertexId v : picks) subs.insert(g.subaisle_of(v));
  for (int i : subs) {
    for (pickopt::EdgeId e : g.subaisle(i).edges) w.multiplicity[static_cast<std::size_t>(e)] = 2;
  }
  return w;
}

// Same batches as `sol` with every walk replaced by subaisle_loops.
inline pickopt::Solution relaxed(const pickopt::Instance& inst, const pickopt::PickingGraph& g,
                                 const pickopt::Solution& sol) {
  pickopt::Solution out;
  for (const pickopt::Batch& b : sol.batches) {
    pickopt::Batch r = b;
    if (!b.orders.empty()) r.walk = subaisle_loops(g, inst.locations(b.orders));
    r.length = r.walk.length(g);
    out.total += r.length;
    out.batches.push_back(r);
  }
  return out;
}

}  // namespace testing_support
