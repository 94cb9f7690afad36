#pragma once

#include <vector>

#include "pickopt/auxiliary_graph.hpp"
#include "pickopt/formulations.hpp"
#include "pickopt/linear_model.hpp"
#include "pickopt/s_shape.hpp"
#include "pickopt/walk.hpp"

namespace pickopt {

// Encodings of a solution into formulation variables. Each walk is oriented
// with orient_walk; y marks visited vertices other than the origin, z follows
// the batches. Alpha marks locations reached by an unbroken run of southbound
// arcs from f(i), beta those reached by northbound arcs from l(i); gamma copies
// the cross-aisle arcs and marks subaisles whose arcs are all used in one
// direction. Walks must be closed and leave the origin; other components are
// allowed (they are what connectivity separation detects). Throws EncodingError
// otherwise.
VariableAssignment encode_walk_basic(const Instance& instance, const PickingGraph& graph,
                                     const Solution& solution, bool with_subaisle_variables);
VariableAssignment encode_walk_PG(const Instance& instance, const PickingGraph& graph,
                                  const Solution& solution);
// P_G values plus one unit of flow per visited artificial vertex v0, routed to
// the origin on a breadth-first path over the gamma arcs.
VariableAssignment encode_walk_PF(const Instance& instance, const PickingGraph& graph,
                                  const Solution& solution);
// P_G values plus the no-reversal traversal variables.
VariableAssignment encode_walk_PU(const Instance& instance, const PickingGraph& graph,
                                  const Solution& solution);

// A closed tour of the no-reversal TSP models: auxiliary edge ids plus the
// parallel edge flag (single_block only).
struct TspTour {
  std::vector<int> edges;  // increasing
  bool parallel = false;
  Length length = 0;
  int cross_aisle_crossings = 0;  // edges across delta(V_S), two_block only
};

// Cheapest tour through the origin that uses e(i) for every subaisle in
// `subaisles` and meets the departure rule of the model, by depth-first
// enumeration of simple cycles. Ties: fewer crossings, then smaller edge list.
// Throws ResourceLimitError above 20 auxiliary vertices.
TspTour best_tsp_tour(const AuxiliaryGraph& aux, const std::vector<int>& subaisles,
                      bool with_cross_aisle_bound = false);
// Every tour meeting the same conditions, cheapest first.
std::vector<TspTour> all_tsp_tours(const AuxiliaryGraph& aux, const std::vector<int>& subaisles,
                                   bool with_cross_aisle_bound = false);

// A two-block tour for an S-shape route: the first tour (in all_tsp_tours
// order) over the route's subaisles whose length equals the route length.
// Throws EncodingError when there is none.
TspTour s_shape_tour(const AuxiliaryGraph& aux, const SShapeRoute& route);

// Encodes one tour per picker (tours[t-1]) plus the batching.
VariableAssignment encode_tours(const Instance& instance, const AuxiliaryGraph& aux,
                                const std::vector<std::vector<int>>& batches,
                                const std::vector<TspTour>& tours);

// Dispatcher: encodes a solution for any kind. P_U1/P_U2 use the best tour per
// batch (best_tsp_tour over the batch's pick subaisles).
VariableAssignment encode_solution(const Instance& instance, const PickingGraph& graph,
                                   FormulationKind kind, const FormulationOptions& options,
                                   const Solution& solution);

// Subaisles holding a pick of the batch, increasing.
std::vector<int> pick_subaisles(const Instance& instance, const PickingGraph& graph,
                                const std::vector<int>& batch);

}  // namespace pickopt
