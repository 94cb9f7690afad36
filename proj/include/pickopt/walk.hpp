#pragma once

#include <string>
#include <vector>

#include "pickopt/instance.hpp"
#include "pickopt/picking_graph.hpp"

namespace pickopt {

// Closed walk from the origin as an edge multiset over G. Multiplicities are
// 0, 1 or 2.
struct Walk {
  std::vector<int> multiplicity;  // indexed by EdgeId

  Walk() = default;
  explicit Walk(const PickingGraph& graph)
      : multiplicity(graph.edges().size(), 0) {}

  Length length(const PickingGraph& graph) const;
  // Vertices with at least one incident edge in the walk, sorted.
  std::vector<VertexId> visited(const PickingGraph& graph) const;
  bool empty() const;

  bool operator==(const Walk&) const = default;
};

// Cheapest out-and-back from the origin. On ties the highest edge id wins, which
// is the lexicographically smallest multiplicity vector.
Walk minimal_departure(const PickingGraph& graph);

// Empty string when the walk is closed (even degrees), connected, contains
// the origin and covers `required`; otherwise a description of the defect.
// With require_connected false, components away from the origin are accepted.
std::string walk_defect(const PickingGraph& graph, const Walk& walk,
                        const std::vector<VertexId>& required, bool require_connected = true);

// Directed arcs of one Eulerian orientation: both arcs for multiplicity-2
// edges, multiplicity-1 edges oriented along cycles. Deterministic. Throws
// EncodingError on odd degrees.
std::vector<bool> orient_walk(const PickingGraph& graph, const Walk& walk);

struct Batch {
  int picker = 1;            // 1-based
  std::vector<int> orders;   // order positions, increasing
  Walk walk;
  Length length = 0;
};

// One batch per picker, batches[t-1] belongs to picker t; idle pickers carry
// an empty order list and a departure walk.
struct Solution {
  Length total = 0;
  std::vector<Batch> batches;

  // Picker (1-based) of each order position.
  std::vector<int> picker_of_order(int n_orders) const;
};

// Throws ValidationError when the solution breaks capacity, assignment,
// coverage or length bookkeeping.
void validate_solution(const Instance& instance, const PickingGraph& graph, const Solution& solution);

inline constexpr const char* kSolutionFormat = "pickopt-solution-v1";

std::string dump_solution(const Instance& instance, const PickingGraph& graph,
                          const Solution& solution);
Solution parse_solution(const Instance& instance, const PickingGraph& graph, const std::string& text);

}  // namespace pickopt
