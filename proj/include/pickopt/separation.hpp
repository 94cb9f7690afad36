#pragma once

#include <string>
#include <vector>

#include "pickopt/formulations.hpp"
#include "pickopt/instance.hpp"
#include "pickopt/linear_model.hpp"
#include "pickopt/picking_graph.hpp"

namespace pickopt {

enum class CutFamily { bs4, impf8, tspo5, tspt4, strengthened };

std::string to_string(CutFamily family);
// Lazy family separated for a formulation kind; throws ValidationError for P_F.
CutFamily connectivity_family(FormulationKind kind);

// A violated connectivity cut. vertex_set holds graph ids (auxiliary ids for
// tspo5/tspt4), sorted, never containing the origin. Exactly one anchor is set.
struct CutRequest {
  int picker = 1;  // 1-based
  std::vector<int> vertex_set;
  int anchor_vertex = -1;
  int anchor_order = -1;  // 1-based order position, strengthened cuts only
  CutFamily family = CutFamily::bs4;

  bool operator==(const CutRequest&) const = default;
};

struct OrderComponent {
  std::vector<VertexId> vertices;  // artificial endpoints, then interior picking locations
  bool contains_origin = false;
};

struct OrderComponents {
  int order = 0;  // 0-based position in the instance
  std::vector<OrderComponent> components;
};

// Connected components of the reduced subgraph induced by an order's pick
// subaisles. Non-origin components are augmented with the picking locations of
// every subaisle whose two endpoints lie in the component.
OrderComponents order_components(const PickingGraph& graph, const Instance& instance, int order);

// Integral separation for the lazy connectivity family of `kind`. For each
// picker, builds the support graph of the relevant variables, finds the
// component of the origin, and emits one cut per other component holding a
// vertex with y = 1 (anchor: smallest such vertex). A singleton component is
// replaced by the complement of the origin component, or skipped when that
// complement is a singleton too. Cuts are ordered by (picker, min vertex).
// Throws ValidationError on fractional support or anchor values.
std::vector<CutRequest> separate_connectivity(const PickingGraph& graph, FormulationKind kind,
                                              const VariableAssignment& assignment, int pickers);

// Row for a cut against a model built by this library. The group is the
// family's lazy group ("stenc-separated" for strengthened cuts); row.group is
// -1 when the model does not declare it yet. Throws ValidationError when the
// family does not match the model kind.
Row cut_to_row(const CutRequest& cut, const LinearModel& model, const PickingGraph& graph);
// Appends the row of cut_to_row to the model and returns its index.
int add_cut(LinearModel& model, const CutRequest& cut, const PickingGraph& graph);

struct SeparationLoopResult {
  int iterations = 0;
  int cuts_added = 0;
  bool connected = false;
  int accepted = -1;  // index of the candidate accepted in the last iteration
};

// Branch-and-cut style loop over a finite pool of integral candidates (for
// example encoded walks plus relaxed, disconnected ones). Each iteration takes
// the cheapest candidate satisfying every current row (ties: lowest index),
// separates it, and adds the cuts; it stops when the taken candidate yields no
// cut, when no candidate is feasible, or after max_iterations. Throws
// std::logic_error if an emitted cut is not violated by its candidate.
SeparationLoopResult separation_loop(LinearModel& model, const PickingGraph& graph,
                                     FormulationKind kind,
                                     const std::vector<VariableAssignment>& candidates,
                                     int pickers, int max_iterations = 20);

}  // namespace pickopt
