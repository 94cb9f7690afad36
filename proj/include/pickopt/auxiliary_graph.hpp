#pragma once

#include <string>
#include <vector>

#include "pickopt/picking_graph.hpp"

namespace pickopt {

enum class AuxVariant { single_block, two_block };

struct AuxEdge {
  enum class Set { e1, e2, e3 };
  int u = -1;
  int v = -1;
  Length length = 0;
  Set set = Set::e1;
  int subaisle = -1;      // set when the edge is e(i) of subaisle i
  bool transfer = false;  // zero-length [v, v'] edge between the two layers (two_block only)
};

// Undirected auxiliary graph used by the no-reversal TSP models.
//
// Auxiliary vertices 0 .. |V_I|-1 coincide with the artificial locations of the
// picking graph. In the two_block variant, vertices |V_I| .. |V_I|+n_aisles-1
// are the copies W' of the middle cross-aisle W (copy j stands for W_j).
class AuxiliaryGraph {
 public:
  AuxiliaryGraph(const PickingGraph& graph, AuxVariant variant);

  AuxVariant variant() const { return variant_; }
  int vertex_count() const { return static_cast<int>(base_.size()); }
  int origin() const { return 0; }
  // Artificial location of G that an auxiliary vertex stands for.
  VertexId base_vertex(int v) const { return base_[static_cast<std::size_t>(v)]; }
  bool is_copy(int v) const { return v >= n_artificial_; }
  // Copy v' of a middle cross-aisle vertex (two_block only).
  int copy_of(VertexId w) const;

  const std::vector<AuxEdge>& edges() const { return edges_; }
  const AuxEdge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<int>& incident(int v) const { return incident_[static_cast<std::size_t>(v)]; }
  // Edge id of e(i) = [f(i), l(i)] (block-2 subaisles use [W'_j, l(i)]).
  int subaisle_edge(int i) const { return subaisle_edge_[static_cast<std::size_t>(i)]; }
  // Star edge [s, v] of E2+ (single_block) or E3+ (two_block), -1 if absent.
  int star_edge(int v) const { return star_edge_[static_cast<std::size_t>(v)]; }
  int find_edge(int u, int v, AuxEdge::Set set) const;

  // single_block: the parallel copy of e(1) carried by the x~ variable.
  bool has_parallel_edge() const { return variant_ == AuxVariant::single_block; }
  Length parallel_edge_length() const { return parallel_length_; }

  // two_block: W (middle cross-aisle), W', and V_S = W' u {Q_S(v) : v in W'}.
  const std::vector<int>& middle() const { return middle_; }
  const std::vector<int>& copies() const { return copies_; }
  const std::vector<int>& south_set() const { return south_set_; }

  std::string vertex_name(int v) const;

 private:
  int add_edge(int u, int v, Length len, AuxEdge::Set set, int sub = -1, bool transfer = false);

  AuxVariant variant_;
  int n_artificial_ = 0;
  std::vector<VertexId> base_;
  std::vector<AuxEdge> edges_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> subaisle_edge_;
  std::vector<int> star_edge_;
  std::vector<int> middle_, copies_, south_set_;
  Length parallel_length_ = 0;
};

AuxiliaryGraph build_auxiliary_graph(const PickingGraph& graph, AuxVariant variant);

std::string to_string(AuxVariant variant);

}  // namespace pickopt
