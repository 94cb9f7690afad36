#include "pickopt/separation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "pickopt/errors.hpp"

namespace pickopt {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
      auto& p = parent_[static_cast<std::size_t>(v)];
      p = parent_[static_cast<std::size_t>(p)];
      v = p;
    }
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
  }

 private:
  std::vector<int> parent_;
};

// 0 or 1; anything else is rejected.
bool binary_value(const VariableAssignment& a, const std::string& name) {
  const Rational v = a.get(name);
  if (v == Rational(0)) return false;
  if (v == Rational(1)) return true;
  throw ValidationError("separation needs integral values, got " + name + " = " + to_string(v));
}

const char* lazy_group(CutFamily family) {
  switch (family) {
    case CutFamily::bs4:
      return groups::bs4;
    case CutFamily::impf8:
      return groups::impf8;
    case CutFamily::tspo5:
      return groups::tspo5;
    case CutFamily::tspt4:
      return groups::tspt4;
    case CutFamily::strengthened:
      return "stenc-separated";
  }
  return "";
}

struct Support {
  int n = 0;
  std::vector<std::pair<int, int>> links;
  std::vector<bool> y;
};

std::vector<CutRequest> cuts_from_support(const Support& sup, int picker, CutFamily family) {
  UnionFind uf(sup.n);
  for (auto [u, v] : sup.links) uf.unite(u, v);
  std::vector<std::vector<int>> comps(static_cast<std::size_t>(sup.n));
  for (int v = 0; v < sup.n; ++v) comps[static_cast<std::size_t>(uf.find(v))].push_back(v);
  const int origin_root = uf.find(0);
  std::vector<int> complement;
  for (int v = 0; v < sup.n; ++v) {
    if (uf.find(v) != origin_root) complement.push_back(v);
  }
  std::vector<CutRequest> out;
  std::set<std::vector<int>> seen;
  for (int root = 0; root < sup.n; ++root) {
    const auto& comp = comps[static_cast<std::size_t>(root)];
    if (comp.empty() || root == origin_root) continue;
    int anchor = -1;
    for (int v : comp) {
      if (sup.y[static_cast<std::size_t>(v)]) {
        anchor = v;
        break;
      }
    }
    if (anchor < 0) continue;
    std::vector<int> set = comp;
    if (set.size() == 1) {
      if (complement.size() < 2) continue;
      set = complement;
    }
    if (!seen.insert(set).second) continue;
    CutRequest cut;
    cut.picker = picker;
    cut.vertex_set = std::move(set);
    cut.anchor_vertex = anchor;
    cut.family = family;
    out.push_back(std::move(cut));
  }
  std::sort(out.begin(), out.end(), [](const CutRequest& a, const CutRequest& b) {
    return a.vertex_set.front() < b.vertex_set.front();
  });
  return out;
}

std::vector<bool> mask_of(const std::vector<int>& set, int n) {
  std::vector<bool> mask(static_cast<std::size_t>(n), false);
  for (int v : set) {
    if (v < 0 || v >= n) throw ValidationError("cut vertex " + std::to_string(v) + " out of range");
    mask[static_cast<std::size_t>(v)] = true;
  }
  if (mask[0]) throw ValidationError("cut vertex set contains the origin");
  return mask;
}

FormulationKind model_kind(const LinearModel& model) {
  auto it = model.attributes.find("kind");
  if (it == model.attributes.end()) throw ValidationError("model has no kind attribute");
  return parse_formulation_kind(it->second);
}

}  // namespace

std::string to_string(CutFamily family) {
  switch (family) {
    case CutFamily::bs4:
      return "bs4";
    case CutFamily::impf8:
      return "impf8";
    case CutFamily::tspo5:
      return "tspo5";
    case CutFamily::tspt4:
      return "tspt4";
    case CutFamily::strengthened:
      return "stenc";
  }
  return "?";
}

CutFamily connectivity_family(FormulationKind kind) {
  switch (kind) {
    case FormulationKind::P_basic:
    case FormulationKind::P_A:
      return CutFamily::bs4;
    case FormulationKind::P_G:
    case FormulationKind::P_U:
      return CutFamily::impf8;
    case FormulationKind::P_U1:
      return CutFamily::tspo5;
    case FormulationKind::P_U2:
      return CutFamily::tspt4;
    case FormulationKind::P_F:
      break;
  }
  throw ValidationError("P_F has no lazy connectivity family");
}

OrderComponents order_components(const PickingGraph& graph, const Instance& instance, int order) {
  OrderComponents result;
  result.order = order;
  std::vector<int> subs;
  for (VertexId v : instance.locations(order)) subs.push_back(graph.subaisle_of(v));
  std::sort(subs.begin(), subs.end());
  subs.erase(std::unique(subs.begin(), subs.end()), subs.end());

  const int n_art = graph.artificial_count();
  UnionFind uf(n_art);
  std::vector<bool> touched(static_cast<std::size_t>(n_art), false);
  for (int i : subs) {
    const Subaisle& sub = graph.subaisle(i);
    uf.unite(sub.top, sub.bottom);
    touched[static_cast<std::size_t>(sub.top)] = true;
    touched[static_cast<std::size_t>(sub.bottom)] = true;
  }
  std::vector<int> roots;
  for (int v = 0; v < n_art; ++v) {
    if (touched[static_cast<std::size_t>(v)] && uf.find(v) == v) roots.push_back(v);
  }
  for (int root : roots) {
    OrderComponent comp;
    for (int v = 0; v < n_art; ++v) {
      if (touched[static_cast<std::size_t>(v)] && uf.find(v) == root) comp.vertices.push_back(v);
    }
    comp.contains_origin = root == uf.find(graph.origin()) && touched[0];
    if (!comp.contains_origin) {
      std::vector<bool> in(static_cast<std::size_t>(n_art), false);
      for (VertexId v : comp.vertices) in[static_cast<std::size_t>(v)] = true;
      for (const Subaisle& sub : graph.subaisles()) {
        if (in[static_cast<std::size_t>(sub.top)] && in[static_cast<std::size_t>(sub.bottom)]) {
          comp.vertices.insert(comp.vertices.end(), sub.locations.begin(), sub.locations.end());
        }
      }
    }
    result.components.push_back(std::move(comp));
  }
  return result;
}

std::vector<CutRequest> separate_connectivity(const PickingGraph& graph, FormulationKind kind,
                                              const VariableAssignment& assignment, int pickers) {
  const CutFamily family = connectivity_family(kind);
  std::vector<CutRequest> out;
  for (int t = 1; t <= pickers; ++t) {
    Support sup;
    switch (family) {
      case CutFamily::bs4: {
        sup.n = graph.vertex_count();
        for (const Arc& a : graph.arcs()) {
          if (binary_value(assignment, names::x(t, a.tail, a.head))) sup.links.emplace_back(a.tail, a.head);
        }
        break;
      }
      case CutFamily::impf8: {
        sup.n = graph.artificial_count();
        for (const Arc& a : graph.reduced_arcs()) {
          if (binary_value(assignment, names::gamma(t, a.tail, a.head))) {
            sup.links.emplace_back(a.tail, a.head);
          }
        }
        break;
      }
      case CutFamily::tspo5:
      case CutFamily::tspt4: {
        const AuxiliaryGraph aux(graph, family == CutFamily::tspo5 ? AuxVariant::single_block
                                                                   : AuxVariant::two_block);
        sup.n = aux.vertex_count();
        for (const AuxEdge& e : aux.edges()) {
          const std::string name = e.set == AuxEdge::Set::e3 && family == CutFamily::tspt4
                                       ? names::star(t, e.u, e.v)
                                       : names::x(t, e.u, e.v);
          if (binary_value(assignment, name)) sup.links.emplace_back(e.u, e.v);
        }
        if (family == CutFamily::tspo5 && binary_value(assignment, names::parallel(t))) {
          sup.links.emplace_back(aux.origin(), aux.edge(aux.subaisle_edge(0)).v);
        }
        break;
      }
      case CutFamily::strengthened:
        break;
    }
    sup.y.assign(static_cast<std::size_t>(sup.n), false);
    for (int v = 1; v < sup.n; ++v) {
      sup.y[static_cast<std::size_t>(v)] = binary_value(assignment, names::y(t, v));
    }
    auto cuts = cuts_from_support(sup, t, family);
    out.insert(out.end(), cuts.begin(), cuts.end());
  }
  return out;
}

Row cut_to_row(const CutRequest& cut, const LinearModel& model, const PickingGraph& graph) {
  const FormulationKind kind = model_kind(model);
  if (cut.family == CutFamily::strengthened) {
    if (!uses_directed_x(kind)) {
      throw ValidationError("strengthened cuts need a model over the directed picking graph");
    }
  } else if (kind == FormulationKind::P_F || connectivity_family(kind) != cut.family) {
    throw ValidationError(to_string(cut.family) + " cut does not fit a " + to_string(kind) +
                          " model");
  }
  const int t = cut.picker;
  Row row;
  row.group = model.find_group(lazy_group(cut.family));
  row.sense = Sense::ge;
  row.rhs = 0;
  auto push = [&](const std::string& name, std::int64_t coef) {
    const int id = model.var(name);
    for (Term& term : row.terms) {
      if (term.var == id) {
        term.coef += coef;
        return;
      }
    }
    row.terms.push_back({id, coef});
  };
  switch (cut.family) {
    case CutFamily::bs4:
    case CutFamily::strengthened: {
      const auto mask = mask_of(cut.vertex_set, graph.vertex_count());
      for (ArcId a : graph.delta_out(mask)) {
        push(names::x(t, graph.arc(a).tail, graph.arc(a).head), 1);
      }
      if (cut.family == CutFamily::bs4) {
        push(names::y(t, cut.anchor_vertex), -1);
      } else {
        if (cut.anchor_order < 1) throw ValidationError("strengthened cut needs an anchor order");
        push(names::z(cut.anchor_order, t), -1);
      }
      break;
    }
    case CutFamily::impf8: {
      auto mask = mask_of(cut.vertex_set, graph.artificial_count());
      mask.resize(static_cast<std::size_t>(graph.vertex_count()), false);
      for (ArcId a : graph.eta_out(mask)) {
        push(names::gamma(t, graph.reduced_arc(a).tail, graph.reduced_arc(a).head), 1);
      }
      push(names::y(t, cut.anchor_vertex), -1);
      break;
    }
    case CutFamily::tspo5:
    case CutFamily::tspt4: {
      const AuxiliaryGraph aux(graph, cut.family == CutFamily::tspo5 ? AuxVariant::single_block
                                                                     : AuxVariant::two_block);
      const auto mask = mask_of(cut.vertex_set, aux.vertex_count());
      for (const AuxEdge& e : aux.edges()) {
        if (mask[static_cast<std::size_t>(e.u)] == mask[static_cast<std::size_t>(e.v)]) continue;
        push(e.set == AuxEdge::Set::e3 && cut.family == CutFamily::tspt4 ? names::star(t, e.u, e.v)
                                                                         : names::x(t, e.u, e.v),
             1);
      }
      if (cut.family == CutFamily::tspo5 &&
          mask[static_cast<std::size_t>(aux.edge(aux.subaisle_edge(0)).v)]) {
        push(names::parallel(t), 1);
      }
      push(names::y(t, cut.anchor_vertex), -2);
      break;
    }
  }
  std::erase_if(row.terms, [](const Term& term) { return term.coef == 0; });
  std::string prefix = lazy_group(cut.family);
  std::replace(prefix.begin(), prefix.end(), '-', '_');
  row.name = prefix + "_" + std::to_string(model.rows_in_group(lazy_group(cut.family)) + 1);
  return row;
}

int add_cut(LinearModel& model, const CutRequest& cut, const PickingGraph& graph) {
  Row row = cut_to_row(cut, model, graph);
  model.group(lazy_group(cut.family), true);
  return model.add_row(lazy_group(cut.family), std::move(row.terms), row.sense, row.rhs);
}

SeparationLoopResult separation_loop(LinearModel& model, const PickingGraph& graph,
                                     FormulationKind kind,
                                     const std::vector<VariableAssignment>& candidates,
                                     int pickers, int max_iterations) {
  SeparationLoopResult result;
  while (result.iterations < max_iterations) {
    int best = -1;
    Rational best_cost = 0;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (!check_feasible(model, candidates[k], 0).satisfied) continue;
      const Rational cost = objective_value(model, candidates[k]);
      if (best < 0 || cost < best_cost) {
        best = static_cast<int>(k);
        best_cost = cost;
      }
    }
    if (best < 0) break;
    ++result.iterations;
    result.accepted = best;
    const VariableAssignment& cand = candidates[static_cast<std::size_t>(best)];
    const auto cuts = separate_connectivity(graph, kind, cand, pickers);
    if (cuts.empty()) {
      result.connected = true;
      break;
    }
    const auto values = dense_values(model, cand);
    for (const CutRequest& cut : cuts) {
      const Row row = cut_to_row(cut, model, graph);
      if (row_satisfied(row, values)) {
        throw std::logic_error("separated cut is not violated by its candidate");
      }
      add_cut(model, cut, graph);
      ++result.cuts_added;
    }
  }
  return result;
}

}  // namespace pickopt
