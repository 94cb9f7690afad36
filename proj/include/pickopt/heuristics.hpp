#pragma once

#include <functional>
#include <vector>

#include "pickopt/instance.hpp"
#include "pickopt/picking_graph.hpp"
#include "pickopt/walk.hpp"

namespace pickopt {

// Route length estimate for a set of picking vertices.
using DistanceEstimator = std::function<Length(const std::vector<VertexId>&)>;

// Batches of order positions, each increasing, ordered by smallest member.
struct Batching {
  std::vector<std::vector<int>> batches;

  bool operator==(const Batching&) const = default;
};

// Throws ValidationError unless the batching partitions the orders, respects
// capacity and uses at least the bin-packing lower bound of batches.
void validate_batching(const Instance& instance, const Batching& batching);

DistanceEstimator s_shape_estimator(const PickingGraph& graph);
// Exact walk length from route_oracle (0 for an empty pick set).
DistanceEstimator oracle_estimator(const PickingGraph& graph);

Batching first_fit_batching(const Instance& instance);

// Seed rule: most distinct pick subaisles, then smallest position. Addition
// rule: least estimated increase, then smallest position; stops when nothing fits.
Batching seed_batching(const Instance& instance, const PickingGraph& graph,
                       const DistanceEstimator& estimate);

// Savings merge starting from singletons. Each round recomputes the savings
// est(A) + est(B) - est(A u B) over all capacity-feasible batch pairs and
// merges the largest positive one; ties go to the smallest pair of order ids.
Batching cw2_batching(const Instance& instance, const DistanceEstimator& estimate);

enum class HeuristicRouting { s_shape, exact };

// Routes every batch (S-shape walk or route_oracle), assigns batch k to picker
// k+1 and sends idle pickers on the minimal departure. When there are more
// batches than pickers each batch still gets its own picker.
Solution route_batching(const Instance& instance, const PickingGraph& graph, const Batching& batching,
                        HeuristicRouting routing);

}  // namespace pickopt
