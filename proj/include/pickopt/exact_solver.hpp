#pragma once

#include <vector>

#include "pickopt/instance.hpp"
#include "pickopt/picking_graph.hpp"
#include "pickopt/route_oracle.hpp"
#include "pickopt/walk.hpp"

namespace pickopt {

inline constexpr int kExactMaxOrders = 6;

struct ExactOptions {
  int threads = 0;  // 0: hardware concurrency
  RouteRestriction restriction;
};

// Partitions of orders 0..n-1 into at most max_batches batches of total size
// <= capacity, in canonical form: batches ordered by smallest member, members
// increasing. Enumeration order is the restricted-growth-string order.
std::vector<std::vector<std::vector<int>>> canonical_partitions(const std::vector<int>& sizes,
                                                                int capacity, int max_batches);

// Exact JOBPRP optimum by canonical partition enumeration and route_oracle per
// batch. Batch k of the winning partition goes to picker k+1; idle pickers
// depart and return. Ties go to the earliest partition.
// Throws ResourceLimitError above kExactMaxOrders orders or kOracleMaxEdges edges.
Solution solve_exact(const Instance& instance, const PickingGraph& graph,
                     const ExactOptions& options = {});

// Same enumeration with the no-reversal routing policy. 1- and 2-block layouts only.
Solution solve_no_reversal_exact(const Instance& instance, const PickingGraph& graph,
                                 int threads = 0);

int resolve_threads(int requested);

}  // namespace pickopt
