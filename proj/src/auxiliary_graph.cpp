#include "pickopt/auxiliary_graph.hpp"

#include "pickopt/errors.hpp"

namespace pickopt {

std::string to_string(AuxVariant variant) {
  return variant == AuxVariant::single_block ? "single_block" : "two_block";
}

int AuxiliaryGraph::add_edge(int u, int v, Length len, AuxEdge::Set set, int sub, bool transfer) {
  AuxEdge e;
  e.u = u;
  e.v = v;
  e.length = len;
  e.set = set;
  e.subaisle = sub;
  e.transfer = transfer;
  edges_.push_back(e);
  const int id = static_cast<int>(edges_.size() - 1);
  incident_[static_cast<std::size_t>(u)].push_back(id);
  incident_[static_cast<std::size_t>(v)].push_back(id);
  return id;
}

AuxiliaryGraph::AuxiliaryGraph(const PickingGraph& graph, AuxVariant variant) : variant_(variant) {
  const WarehouseLayout& layout = graph.layout();
  if (variant == AuxVariant::single_block && layout.n_blocks != 1) {
    throw ValidationError("variant mismatch: single_block auxiliary graph needs a 1-block layout");
  }
  if (variant == AuxVariant::two_block && layout.n_blocks != 2) {
    throw ValidationError("variant mismatch: two_block auxiliary graph needs a 2-block layout");
  }
  const int n = layout.n_aisles;
  n_artificial_ = graph.artificial_count();
  for (int v = 0; v < n_artificial_; ++v) base_.push_back(v);
  if (variant == AuxVariant::two_block) {
    for (int j = 0; j < n; ++j) base_.push_back(graph.artificial(1, j));
  }
  incident_.resize(base_.size());
  subaisle_edge_.assign(static_cast<std::size_t>(layout.subaisle_count()), -1);
  star_edge_.assign(base_.size(), -1);

  const std::vector<Length> from_s = dijkstra(graph, graph.origin());
  const Length d = layout.subaisle_length();
  const Length w = layout.aisle_spacing;
  parallel_length_ = d;

  if (variant == AuxVariant::single_block) {
    for (const Edge& e : graph.reduced_edges()) {
      const int id = add_edge(e.u, e.v, e.length, AuxEdge::Set::e1, e.subaisle);
      if (e.subaisle >= 0) subaisle_edge_[static_cast<std::size_t>(e.subaisle)] = id;
      if (e.u == graph.origin()) star_edge_[static_cast<std::size_t>(e.v)] = id;
    }
    for (int v = 1; v < n_artificial_; ++v) {
      if (star_edge_[static_cast<std::size_t>(v)] >= 0) continue;
      star_edge_[static_cast<std::size_t>(v)] =
          add_edge(0, v, from_s[static_cast<std::size_t>(v)], AuxEdge::Set::e2);
    }
    return;
  }

  auto top = [&](int j) { return graph.artificial(0, j); };
  auto mid = [&](int j) { return graph.artificial(1, j); };
  auto bot = [&](int j) { return graph.artificial(2, j); };
  auto cpy = [&](int j) { return n_artificial_ + j; };
  for (int j = 0; j < n; ++j) {
    middle_.push_back(mid(j));
    copies_.push_back(cpy(j));
  }
  for (int j = 0; j < n; ++j) south_set_.push_back(cpy(j));
  for (int j = 0; j < n; ++j) south_set_.push_back(bot(j));

  for (int j = 0; j + 1 < n; ++j) add_edge(top(j), top(j + 1), w, AuxEdge::Set::e1);
  for (int j = 0; j < n; ++j) {
    const int i = graph.subaisle_index(0, j);
    subaisle_edge_[static_cast<std::size_t>(i)] = add_edge(top(j), mid(j), d, AuxEdge::Set::e1, i);
  }
  for (int j = 0; j + 1 < n; ++j) add_edge(mid(j), mid(j + 1), w, AuxEdge::Set::e1);
  for (int j = 0; j < n; ++j) add_edge(mid(j), cpy(j), 0, AuxEdge::Set::e1, -1, true);
  for (int j = 0; j + 1 < n; ++j) add_edge(cpy(j), cpy(j + 1), w, AuxEdge::Set::e1);
  for (int j = 0; j < n; ++j) {
    const int i = graph.subaisle_index(1, j);
    subaisle_edge_[static_cast<std::size_t>(i)] = add_edge(cpy(j), bot(j), d, AuxEdge::Set::e1, i);
  }
  for (int j = 0; j + 1 < n; ++j) add_edge(bot(j), bot(j + 1), w, AuxEdge::Set::e1);
  for (int j = 0; j < n; ++j) add_edge(cpy(j), top(j), d, AuxEdge::Set::e2);
  for (int j = 0; j < n; ++j) add_edge(mid(j), bot(j), d, AuxEdge::Set::e2);
  for (int v = 1; v < vertex_count(); ++v) {
    star_edge_[static_cast<std::size_t>(v)] =
        add_edge(0, v, from_s[static_cast<std::size_t>(base_vertex(v))], AuxEdge::Set::e3);
  }
}

int AuxiliaryGraph::copy_of(VertexId w) const {
  for (std::size_t j = 0; j < middle_.size(); ++j) {
    if (middle_[j] == w) return copies_[j];
  }
  throw ValidationError("vertex is not on the middle cross-aisle");
}

int AuxiliaryGraph::find_edge(int u, int v, AuxEdge::Set set) const {
  for (int e : incident(u)) {
    const AuxEdge& ed = edge(e);
    if (ed.set == set && ((ed.u == u && ed.v == v) || (ed.u == v && ed.v == u))) return e;
  }
  return -1;
}

std::string AuxiliaryGraph::vertex_name(int v) const {
  return is_copy(v) ? std::to_string(base_vertex(v)) + "c" : std::to_string(v);
}

AuxiliaryGraph build_auxiliary_graph(const PickingGraph& graph, AuxVariant variant) {
  return AuxiliaryGraph(graph, variant);
}

}  // namespace pickopt
