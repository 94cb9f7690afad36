#include "pickopt/formulations.hpp"

#include <algorithm>
#include <cctype>

#include "pickopt/errors.hpp"
#include "pickopt/separation.hpp"

namespace pickopt {

namespace names {
std::string x(int t, int u, int v) {
  return "x_" + std::to_string(t) + "_" + std::to_string(u) + "_" + std::to_string(v);
}
std::string y(int t, int v) { return "y_" + std::to_string(t) + "_" + std::to_string(v); }
std::string z(int o, int t) { return "z_" + std::to_string(o) + "_" + std::to_string(t); }
std::string alpha(int t, int v) { return "a_" + std::to_string(t) + "_" + std::to_string(v); }
std::string beta(int t, int v) { return "b_" + std::to_string(t) + "_" + std::to_string(v); }
std::string gamma(int t, int u, int v) {
  return "g_" + std::to_string(t) + "_" + std::to_string(u) + "_" + std::to_string(v);
}
std::string sigma(int t, int v0, int u, int v) {
  return "s_" + std::to_string(t) + "_" + std::to_string(v0) + "_" + std::to_string(u) + "_" +
         std::to_string(v);
}
std::string down(int t, int subaisle) {
  return "nd_" + std::to_string(t) + "_" + std::to_string(subaisle);
}
std::string up(int t, int subaisle) {
  return "nu_" + std::to_string(t) + "_" + std::to_string(subaisle);
}
std::string parallel(int t) { return "xp_" + std::to_string(t); }
std::string star(int t, int u, int v) {
  return "xs_" + std::to_string(t) + "_" + std::to_string(u) + "_" + std::to_string(v);
}
}  // namespace names

std::string to_string(FormulationKind kind) {
  switch (kind) {
    case FormulationKind::P_basic:
      return "P_basic";
    case FormulationKind::P_A:
      return "P_A";
    case FormulationKind::P_G:
      return "P_G";
    case FormulationKind::P_F:
      return "P_F";
    case FormulationKind::P_U:
      return "P_U";
    case FormulationKind::P_U1:
      return "P_U1";
    case FormulationKind::P_U2:
      return "P_U2";
  }
  return "?";
}

FormulationKind parse_formulation_kind(const std::string& text) {
  std::string key = text;
  for (char& c : key) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (key.rfind("P_", 0) == 0) {
    key = key.substr(2);
  } else if (key.size() > 1 && key[0] == 'P') {
    key = key.substr(1);
  }
  if (key == "BASIC") return FormulationKind::P_basic;
  if (key == "A") return FormulationKind::P_A;
  if (key == "G") return FormulationKind::P_G;
  if (key == "F") return FormulationKind::P_F;
  if (key == "U") return FormulationKind::P_U;
  if (key == "U1") return FormulationKind::P_U1;
  if (key == "U2") return FormulationKind::P_U2;
  throw ValidationError("unknown formulation \"" + text + "\"");
}

std::string options_string(const FormulationOptions& o) {
  std::vector<std::string> parts;
  if (o.subaisle_cuts) parts.emplace_back("subaisle_cuts");
  if (o.aisle_cuts) parts.emplace_back("aisle_cuts");
  if (o.basic_cuts) parts.emplace_back("basic_cuts");
  if (o.single_traversing) parts.emplace_back("single_traversing");
  if (o.artificial_vertex_reversal) parts.emplace_back("artificial_vertex_reversal");
  if (o.column_inequalities) parts.emplace_back("column_inequalities");
  if (o.cross_aisle_bound) parts.emplace_back("cross_aisle_bound");
  if (parts.empty()) return "none";
  std::string out = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) out += "," + parts[k];
  return out;
}

bool uses_directed_x(FormulationKind kind) {
  return kind != FormulationKind::P_U1 && kind != FormulationKind::P_U2;
}

bool has_subaisle_variables(FormulationKind kind, const FormulationOptions& options) {
  switch (kind) {
    case FormulationKind::P_basic:
      return options.subaisle_cuts;
    case FormulationKind::P_U1:
    case FormulationKind::P_U2:
      return false;
    default:
      return true;
  }
}

void check_compatibility(FormulationKind kind, const FormulationOptions& o,
                         const WarehouseLayout& layout) {
  const std::string k = to_string(kind);
  if (o.cross_aisle_bound && kind != FormulationKind::P_U2) {
    throw ValidationError("cross_aisle_bound is only available with P_U2");
  }
  if (kind == FormulationKind::P_U1 && layout.n_blocks != 1) {
    throw ValidationError("P_U1 needs a 1-block layout");
  }
  if (kind == FormulationKind::P_U2 && layout.n_blocks != 2) {
    throw ValidationError("P_U2 needs a 2-block layout");
  }
  if (!uses_directed_x(kind)) {
    if (o.subaisle_cuts || o.aisle_cuts || o.basic_cuts || o.single_traversing ||
        o.artificial_vertex_reversal) {
      throw ValidationError(k +
                            " supports only column_inequalities (and cross_aisle_bound for P_U2)");
    }
  }
  if (o.single_traversing) {
    if (layout.n_blocks > 2) {
      throw ValidationError("single_traversing is only defined for 1- or 2-block layouts");
    }
    if (!has_subaisle_variables(kind, o)) {
      throw ValidationError("single_traversing needs the subaisle-cut variables (use P_A or "
                            "subaisle_cuts)");
    }
  }
}

namespace {

std::string layout_tag(const WarehouseLayout& l) {
  return std::to_string(l.n_aisles) + "x" + std::to_string(l.n_blocks) + "x" +
         std::to_string(l.locs_per_subaisle) + ":" + std::to_string(l.loc_spacing) + ":" +
         std::to_string(l.aisle_spacing);
}

void set_attributes(LinearModel& m, const Instance& inst, FormulationKind kind,
                    const FormulationOptions& options) {
  m.attributes["kind"] = to_string(kind);
  m.attributes["layout"] = layout_tag(inst.layout);
  m.attributes["pickers"] = std::to_string(inst.pickers);
  m.attributes["orders"] = std::to_string(inst.order_count());
  m.attributes["options"] = options_string(options);
}

// Subaisles holding at least one pick of order o.
std::vector<int> pick_subaisles(const Instance& inst, const PickingGraph& graph, int o) {
  std::vector<int> out;
  for (VertexId v : inst.locations(o)) out.push_back(graph.subaisle_of(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void declare_directed_x(LinearModel& m, const PickingGraph& g, int T) {
  for (int t = 1; t <= T; ++t) {
    for (const Arc& a : g.arcs()) {
      const int id = m.add_variable(names::x(t, a.tail, a.head), VarType::binary);
      m.add_objective(id, a.length);
    }
  }
}

void declare_y(LinearModel& m, int T, int n_vertices) {
  for (int t = 1; t <= T; ++t) {
    for (int v = 0; v < n_vertices; ++v) m.add_variable(names::y(t, v), VarType::binary);
  }
}

void declare_z(LinearModel& m, const Instance& inst) {
  for (int o = 1; o <= inst.order_count(); ++o) {
    for (int t = 1; t <= inst.pickers; ++t) m.add_variable(names::z(o, t), VarType::binary);
  }
}

int X(const LinearModel& m, int t, const Arc& a) { return m.var(names::x(t, a.tail, a.head)); }
int X(const LinearModel& m, int t, VertexId u, VertexId v) { return m.var(names::x(t, u, v)); }

void depart_rows(LinearModel& m, const PickingGraph& g, int T, const char* group) {
  for (int t = 1; t <= T; ++t) {
    std::vector<Term> terms;
    for (ArcId a : g.out_arcs(g.origin())) terms.push_back({X(m, t, g.arc(a)), 1});
    m.add_row(group, terms, Sense::ge, 1);
  }
}

void visit_rows(LinearModel& m, const Instance& inst, const PickingGraph& g, const char* group) {
  for (int t = 1; t <= inst.pickers; ++t) {
    for (int o = 0; o < inst.order_count(); ++o) {
      for (VertexId u : inst.locations(o)) {
        std::vector<Term> terms;
        for (ArcId a : g.out_arcs(u)) terms.push_back({X(m, t, g.arc(a)), 1});
        terms.push_back({m.var(names::z(o + 1, t)), -1});
        m.add_row(group, terms, Sense::ge, 0);
      }
    }
  }
}

void link_y_rows(LinearModel& m, const PickingGraph& g, int T, bool artificial_only,
                 const char* group) {
  for (int t = 1; t <= T; ++t) {
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      if (u == g.origin()) continue;
      if (artificial_only && !g.is_artificial(u)) continue;
      for (ArcId a : g.out_arcs(u)) {
        m.add_row(group, {{m.var(names::y(t, u)), 1}, {X(m, t, g.arc(a)), -1}}, Sense::ge, 0);
      }
    }
  }
}

void flow_rows(LinearModel& m, const PickingGraph& g, int T, const char* group) {
  for (int t = 1; t <= T; ++t) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      std::vector<Term> terms;
      for (ArcId a : g.out_arcs(v)) terms.push_back({X(m, t, g.arc(a)), 1});
      for (ArcId a : g.in_arcs(v)) terms.push_back({X(m, t, g.arc(a)), -1});
      m.add_row(group, terms, Sense::eq, 0);
    }
  }
}

void batching_rows(LinearModel& m, const Instance& inst, const char* assign, const char* cap) {
  for (int o = 1; o <= inst.order_count(); ++o) {
    std::vector<Term> terms;
    for (int t = 1; t <= inst.pickers; ++t) terms.push_back({m.var(names::z(o, t)), 1});
    m.add_row(assign, terms, Sense::eq, 1);
  }
  for (int t = 1; t <= inst.pickers; ++t) {
    std::vector<Term> terms;
    for (int o = 1; o <= inst.order_count(); ++o) {
      terms.push_back({m.var(names::z(o, t)), inst.orders[static_cast<std::size_t>(o - 1)].size});
    }
    m.add_row(cap, terms, Sense::le, inst.capacity);
  }
}

// P_g (every row but impf8), shared by P_G and P_F.
LinearModel build_pg_core(const Instance& inst, const PickingGraph& g, bool lazy_connectivity) {
  const int T = inst.pickers;
  LinearModel m;
  declare_directed_x(m, g, T);
  declare_y(m, T, g.vertex_count());
  declare_z(m, inst);
  for (const char* grp : {groups::impf1, groups::impf2, groups::impf3, groups::impf4,
                          groups::impf5, groups::impf6_5, groups::impf6, groups::impf7_5,
                          groups::impf7}) {
    m.group(grp);
  }
  if (lazy_connectivity) m.group(groups::impf8, true);
  for (const char* grp : {groups::impf9, groups::impf10, groups::impf11}) m.group(grp);

  for (int t = 1; t <= T; ++t) {
    for (const Arc& a : g.reduced_arcs()) {
      m.add_variable(names::gamma(t, a.tail, a.head), VarType::binary);
    }
  }
  depart_rows(m, g, T, groups::impf1);
  visit_rows(m, inst, g, groups::impf2);
  link_y_rows(m, g, T, true, groups::impf3);
  for (int t = 1; t <= T; ++t) {
    for (VertexId v = 0; v < g.artificial_count(); ++v) {
      if (auto w = g.q_west(v)) {
        m.add_row(groups::impf4,
                  {{X(m, t, v, *w), 1}, {m.var(names::gamma(t, v, *w)), -1}}, Sense::eq, 0);
      }
    }
  }
  for (int t = 1; t <= T; ++t) {
    for (VertexId v = 0; v < g.artificial_count(); ++v) {
      if (auto e = g.q_east(v)) {
        m.add_row(groups::impf5,
                  {{X(m, t, v, *e), 1}, {m.var(names::gamma(t, v, *e)), -1}}, Sense::eq, 0);
      }
    }
  }
  build_subaisle_cuts(m, inst, g);
  for (int t = 1; t <= T; ++t) {
    for (const Subaisle& sub : g.subaisles()) {
      const VertexId last = sub.locations.back();
      const int gdown = m.var(names::gamma(t, sub.top, sub.bottom));
      m.add_row(groups::impf6_5, {{m.var(names::alpha(t, last)), 1}, {gdown, -1}}, Sense::ge, 0);
      m.add_row(groups::impf6, {{X(m, t, last, sub.bottom), 1}, {gdown, -1}}, Sense::ge, 0);
    }
  }
  for (int t = 1; t <= T; ++t) {
    for (const Subaisle& sub : g.subaisles()) {
      const VertexId first = sub.locations.front();
      const int gup = m.var(names::gamma(t, sub.bottom, sub.top));
      m.add_row(groups::impf7_5, {{m.var(names::beta(t, first)), 1}, {gup, -1}}, Sense::ge, 0);
      m.add_row(groups::impf7, {{X(m, t, first, sub.top), 1}, {gup, -1}}, Sense::ge, 0);
    }
  }
  flow_rows(m, g, T, groups::impf9);
  batching_rows(m, inst, groups::impf10, groups::impf11);
  return m;
}

}  // namespace

LinearModel build_basic(const Instance& inst, const PickingGraph& g) {
  const int T = inst.pickers;
  LinearModel m;
  declare_directed_x(m, g, T);
  declare_y(m, T, g.vertex_count());
  declare_z(m, inst);
  m.group(groups::bs1);
  m.group(groups::bs2);
  m.group(groups::bs3);
  m.group(groups::bs4, true);
  m.group(groups::bs5);
  m.group(groups::bs6);
  m.group(groups::bs7);
  depart_rows(m, g, T, groups::bs1);
  visit_rows(m, inst, g, groups::bs2);
  link_y_rows(m, g, T, false, groups::bs3);
  flow_rows(m, g, T, groups::bs5);
  batching_rows(m, inst, groups::bs6, groups::bs7);
  set_attributes(m, inst, FormulationKind::P_basic, {});
  return m;
}

void build_subaisle_cuts(LinearModel& m, const Instance& inst, const PickingGraph& g) {
  const int T = inst.pickers;
  for (int t = 1; t <= T; ++t) {
    for (VertexId v = g.artificial_count(); v < g.vertex_count(); ++v) {
      if (!m.has_var(names::alpha(t, v))) m.add_variable(names::alpha(t, v), VarType::binary);
    }
    for (VertexId v = g.artificial_count(); v < g.vertex_count(); ++v) {
      if (!m.has_var(names::beta(t, v))) m.add_variable(names::beta(t, v), VarType::binary);
    }
  }
  for (const char* grp :
       {groups::sub1, groups::sub2, groups::sub3, groups::sub4, groups::sub5}) {
    m.group(grp);
  }
  for (int t = 1; t <= T; ++t) {
    for (const Subaisle& sub : g.subaisles()) {
      for (std::size_t k = 0; k + 1 < sub.locations.size(); ++k) {
        const VertexId v = sub.locations[k];
        m.add_row(groups::sub1,
                  {{m.var(names::alpha(t, v)), 1}, {m.var(names::alpha(t, g.south(v))), -1}},
                  Sense::ge, 0);
      }
      for (VertexId v : sub.locations) {
        m.add_row(groups::sub2, {{X(m, t, g.north(v), v), 1}, {m.var(names::alpha(t, v)), -1}},
                  Sense::ge, 0);
      }
      for (std::size_t k = 1; k < sub.locations.size(); ++k) {
        const VertexId v = sub.locations[k];
        m.add_row(groups::sub3,
                  {{m.var(names::beta(t, v)), 1}, {m.var(names::beta(t, g.north(v))), -1}},
                  Sense::ge, 0);
      }
      for (VertexId v : sub.locations) {
        m.add_row(groups::sub4, {{X(m, t, g.south(v), v), 1}, {m.var(names::beta(t, v)), -1}},
                  Sense::ge, 0);
      }
    }
  }
  for (int t = 1; t <= T; ++t) {
    for (int o = 0; o < inst.order_count(); ++o) {
      for (VertexId v : inst.locations(o)) {
        m.add_row(groups::sub5,
                  {{m.var(names::alpha(t, v)), 1},
                   {m.var(names::beta(t, v)), 1},
                   {m.var(names::z(o + 1, t)), -1}},
                  Sense::ge, 0);
      }
    }
  }
}

LinearModel build_PG(const Instance& inst, const PickingGraph& g) {
  LinearModel m = build_pg_core(inst, g, true);
  set_attributes(m, inst, FormulationKind::P_G, {});
  return m;
}

LinearModel build_PF(const Instance& inst, const PickingGraph& g) {
  LinearModel m = build_pg_core(inst, g, false);
  const int T = inst.pickers;
  const int n_art = g.artificial_count();
  for (int t = 1; t <= T; ++t) {
    for (VertexId v0 = 0; v0 < n_art; ++v0) {
      for (const Arc& a : g.reduced_arcs()) {
        m.add_variable(names::sigma(t, v0, a.tail, a.head), VarType::continuous);
      }
    }
  }
  auto S = [&](int t, VertexId v0, ArcId a) {
    const Arc& arc = g.reduced_arc(a);
    return m.var(names::sigma(t, v0, arc.tail, arc.head));
  };
  auto balance = [&](int t, VertexId v0, VertexId u) {
    std::vector<Term> terms;
    for (ArcId a : g.reduced_out_arcs(u)) terms.push_back({S(t, v0, a), 1});
    for (ArcId a : g.reduced_in_arcs(u)) terms.push_back({S(t, v0, a), -1});
    return terms;
  };
  const VertexId s = g.origin();
  for (int t = 1; t <= T; ++t) {
    for (VertexId v0 = 0; v0 < n_art; ++v0) {
      auto terms = balance(t, v0, v0);
      terms.push_back({m.var(names::y(t, v0)), -1});
      m.add_row(groups::impcf1, terms, Sense::eq, 0);
    }
  }
  for (int t = 1; t <= T; ++t) {
    for (VertexId v0 = 0; v0 < n_art; ++v0) {
      for (VertexId u = 0; u < n_art; ++u) {
        if (u == s || u == v0) continue;
        m.add_row(groups::impcf2, balance(t, v0, u), Sense::eq, 0);
      }
    }
  }
  for (int t = 1; t <= T; ++t) {
    for (VertexId v0 = 0; v0 < n_art; ++v0) {
      auto terms = balance(t, v0, s);
      terms.push_back({m.var(names::y(t, v0)), 1});
      m.add_row(groups::impcf3, terms, Sense::eq, 0);
    }
  }
  for (int t = 1; t <= T; ++t) {
    for (VertexId v0 = 0; v0 < n_art; ++v0) {
      for (std::size_t a = 0; a < g.reduced_arcs().size(); ++a) {
        const Arc& arc = g.reduced_arc(static_cast<ArcId>(a));
        m.add_row(groups::impcf4,
                  {{S(t, v0, static_cast<ArcId>(a)), 1},
                   {m.var(names::gamma(t, arc.tail, arc.head)), -1}},
                  Sense::le, 0);
      }
    }
  }
  set_attributes(m, inst, FormulationKind::P_F, {});
  return m;
}

void build_no_reversal(LinearModel& m, const Instance& inst, const PickingGraph& g) {
  const int T = inst.pickers;
  for (int t = 1; t <= T; ++t) {
    for (const Subaisle& sub : g.subaisles()) {
      m.add_variable(names::down(t, sub.index), VarType::binary);
      m.add_variable(names::up(t, sub.index), VarType::binary);
    }
  }
  m.group(groups::norev1);
  m.group(groups::norev2);
  for (int t = 1; t <= T; ++t) {
    for (const Subaisle& sub : g.subaisles()) {
      const auto chain = sub.chain();
      const int nd = m.var(names::down(t, sub.index));
      for (std::size_t k = 1; k < chain.size(); ++k) {
        m.add_row(groups::norev1, {{X(m, t, chain[k - 1], chain[k]), 1}, {nd, -1}}, Sense::eq, 0);
      }
    }
  }
  for (int t = 1; t <= T; ++t) {
    for (const Subaisle& sub : g.subaisles()) {
      const auto chain = sub.chain();
      const int nu = m.var(names::up(t, sub.index));
      for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        m.add_row(groups::norev2, {{X(m, t, chain[k + 1], chain[k]), 1}, {nu, -1}}, Sense::eq, 0);
      }
    }
  }
}

void build_strengthened_cuts(LinearModel& m, const Instance& inst, const PickingGraph& g,
                             StrengthenedFamily family) {
  const int T = inst.pickers;
  auto cut_terms = [&](int t, const std::vector<bool>& mask) {
    std::vector<Term> terms;
    for (ArcId a : g.delta_out(mask)) terms.push_back({X(m, t, g.arc(a)), 1});
    return terms;
  };
  if (family == StrengthenedFamily::aisle) {
    m.group(groups::aisle_cut);
    std::vector<std::vector<int>> subs;
    for (int o = 0; o < inst.order_count(); ++o) subs.push_back(pick_subaisles(inst, g, o));
    for (int t = 1; t <= T; ++t) {
      for (const Subaisle& sub : g.subaisles()) {
        std::vector<bool> mask(static_cast<std::size_t>(g.vertex_count()), false);
        for (VertexId v : sub.locations) mask[static_cast<std::size_t>(v)] = true;
        const auto base = cut_terms(t, mask);
        for (int o = 0; o < inst.order_count(); ++o) {
          const auto& so = subs[static_cast<std::size_t>(o)];
          if (!std::binary_search(so.begin(), so.end(), sub.index)) continue;
          auto terms = base;
          terms.push_back({m.var(names::z(o + 1, t)), -1});
          m.add_row(groups::aisle_cut, terms, Sense::ge, 0);
        }
      }
    }
    return;
  }
  m.group(groups::basic_cut);
  for (int o = 0; o < inst.order_count(); ++o) {
    const OrderComponents comps = order_components(g, inst, o);
    for (const OrderComponent& c : comps.components) {
      if (c.contains_origin) continue;
      std::vector<bool> mask(static_cast<std::size_t>(g.vertex_count()), false);
      for (VertexId v : c.vertices) mask[static_cast<std::size_t>(v)] = true;
      for (int t = 1; t <= T; ++t) {
        auto terms = cut_terms(t, mask);
        terms.push_back({m.var(names::z(o + 1, t)), -1});
        m.add_row(groups::basic_cut, terms, Sense::ge, 0);
      }
    }
  }
}

void build_single_traversing(LinearModel& m, const Instance& inst, const PickingGraph& g) {
  const int blocks = g.layout().n_blocks;
  if (blocks > 2) {
    throw ValidationError("single traversing rows are unsupported for layouts with " +
                          std::to_string(blocks) + " blocks");
  }
  if (!m.has_var(names::alpha(1, g.artificial_count()))) {
    throw ValidationError("single traversing rows need the subaisle-cut variables");
  }
  m.group(groups::single_traversing);
  for (int t = 1; t <= inst.pickers; ++t) {
    for (int o = 0; o < inst.order_count(); ++o) {
      for (VertexId v : inst.locations(o)) {
        if (blocks == 2 && g.subaisle_of(v) == 0) continue;
        m.add_row(groups::single_traversing,
                  {{m.var(names::alpha(t, v)), 1}, {m.var(names::beta(t, v)), 1}}, Sense::le, 1);
      }
    }
  }
}

void build_artificial_vertex_reversal(LinearModel& m, const Instance& inst,
                                      const PickingGraph& g) {
  m.group(groups::avr);
  auto row_at = [&](int t, VertexId end, VertexId inner) {
    std::vector<Term> terms{{X(m, t, inner, end), 1}, {X(m, t, end, inner), 1}};
    for (ArcId a : g.out_arcs(end)) {
      const Arc& arc = g.arc(a);
      if (arc.head != inner) terms.push_back({X(m, t, arc), -1});
    }
    m.add_row(groups::avr, terms, Sense::le, 1);
  };
  for (int t = 1; t <= inst.pickers; ++t) {
    for (const Subaisle& sub : g.subaisles()) {
      row_at(t, sub.bottom, sub.locations.back());
      if (sub.block >= 1) row_at(t, sub.top, sub.locations.front());
    }
  }
}

void build_symmetry_breaking(LinearModel& m, const Instance& inst) {
  m.group(groups::col_fix);
  m.group(groups::col_order);
  const int O = inst.order_count();
  const int T = inst.pickers;
  for (int o = 1; o <= O; ++o) {
    for (int t = o + 1; t <= T; ++t) {
      m.add_row(groups::col_fix, {{m.var(names::z(o, t)), 1}}, Sense::eq, 0);
    }
  }
  for (int t = 2; t <= T; ++t) {
    for (int o = t; o <= O; ++o) {
      std::vector<Term> terms{{m.var(names::z(o, t)), 1}};
      for (int p = 1; p < o; ++p) terms.push_back({m.var(names::z(p, t - 1)), -1});
      m.add_row(groups::col_order, terms, Sense::le, 0);
    }
  }
}

LinearModel build_PU1(const Instance& inst, const AuxiliaryGraph& aux) {
  if (aux.variant() != AuxVariant::single_block) {
    throw ValidationError("variant mismatch: P_U1 needs the single_block auxiliary graph");
  }
  const int T = inst.pickers;
  LinearModel m;
  for (int t = 1; t <= T; ++t) {
    for (const AuxEdge& e : aux.edges()) {
      m.add_objective(m.add_variable(names::x(t, e.u, e.v), VarType::binary), e.length);
    }
    m.add_objective(m.add_variable(names::parallel(t), VarType::binary),
                    aux.parallel_edge_length());
  }
  declare_y(m, T, aux.vertex_count());
  declare_z(m, inst);
  for (const char* grp : {groups::tspo0, groups::tspo1, groups::tspo2, groups::tspo3,
                          groups::tspo4}) {
    m.group(grp);
  }
  m.group(groups::tspo5, true);
  m.group(groups::tspo6);
  m.group(groups::tspo7);

  auto XE = [&](int t, int e) {
    const AuxEdge& ed = aux.edge(e);
    return m.var(names::x(t, ed.u, ed.v));
  };
  auto degree = [&](int t, int u) {
    std::vector<Term> terms;
    for (int e : aux.incident(u)) terms.push_back({XE(t, e), 1});
    return terms;
  };
  const int s = aux.origin();
  const int l1 = aux.edge(aux.subaisle_edge(0)).v;
  for (int t = 1; t <= T; ++t) {
    std::vector<Term> terms{{XE(t, aux.subaisle_edge(0)), 1}};
    if (inst.layout.n_aisles >= 2) terms.push_back({XE(t, aux.star_edge(1)), 1});
    m.add_row(groups::tspo0, terms, Sense::ge, 1);
  }
  for (int t = 1; t <= T; ++t) {
    auto terms = degree(t, s);
    terms.push_back({m.var(names::parallel(t)), 1});
    m.add_row(groups::tspo1, terms, Sense::eq, 2);
  }
  for (int t = 1; t <= T; ++t) {
    for (int i = 0; i < inst.layout.subaisle_count(); ++i) {
      for (int o = 0; o < inst.order_count(); ++o) {
        bool hit = false;
        for (const Pick& p : inst.orders[static_cast<std::size_t>(o)].picks) {
          hit = hit || p.block * inst.layout.n_aisles + p.aisle == i;
        }
        if (!hit) continue;
        m.add_row(groups::tspo2, {{XE(t, aux.subaisle_edge(i)), 1}, {m.var(names::z(o + 1, t)), -1}},
                  Sense::ge, 0);
      }
    }
  }
  for (int t = 1; t <= T; ++t) {
    auto terms = degree(t, l1);
    terms.push_back({m.var(names::parallel(t)), 1});
    terms.push_back({m.var(names::y(t, l1)), -2});
    m.add_row(groups::tspo3, terms, Sense::eq, 0);
  }
  for (int t = 1; t <= T; ++t) {
    for (int u = 0; u < aux.vertex_count(); ++u) {
      if (u == s || u == l1) continue;
      auto terms = degree(t, u);
      terms.push_back({m.var(names::y(t, u)), -2});
      m.add_row(groups::tspo4, terms, Sense::eq, 0);
    }
  }
  batching_rows(m, inst, groups::tspo6, groups::tspo7);
  set_attributes(m, inst, FormulationKind::P_U1, {});
  return m;
}

LinearModel build_PU2(const Instance& inst, const AuxiliaryGraph& aux, bool with_cross_aisle_bound) {
  if (aux.variant() != AuxVariant::two_block) {
    throw ValidationError("variant mismatch: P_U2 needs the two_block auxiliary graph");
  }
  const int T = inst.pickers;
  LinearModel m;
  auto var_name = [&](int t, const AuxEdge& e) {
    return e.set == AuxEdge::Set::e3 ? names::star(t, e.u, e.v) : names::x(t, e.u, e.v);
  };
  for (int t = 1; t <= T; ++t) {
    for (const AuxEdge& e : aux.edges()) {
      m.add_objective(m.add_variable(var_name(t, e), VarType::binary), e.length);
    }
  }
  declare_y(m, T, aux.vertex_count());
  declare_z(m, inst);
  for (const char* grp : {groups::tspt0, groups::tspt1, groups::tspt2, groups::tspt3}) m.group(grp);
  m.group(groups::tspt4, true);
  m.group(groups::tspt5);
  m.group(groups::tspt6);
  if (with_cross_aisle_bound) m.group(groups::cross_aisle);

  auto XE = [&](int t, int e) { return m.var(var_name(t, aux.edge(e))); };
  const int s = aux.origin();
  for (int t = 1; t <= T; ++t) {
    std::vector<Term> terms;
    for (int e : aux.incident(s)) {
      if (aux.edge(e).set != AuxEdge::Set::e3) terms.push_back({XE(t, e), 1});
    }
    m.add_row(groups::tspt0, terms, Sense::ge, 1);
  }
  for (int t = 1; t <= T; ++t) {
    std::vector<Term> terms;
    for (int e : aux.incident(s)) terms.push_back({XE(t, e), 1});
    m.add_row(groups::tspt1, terms, Sense::eq, 2);
  }
  for (int t = 1; t <= T; ++t) {
    for (int i = 0; i < inst.layout.subaisle_count(); ++i) {
      for (int o = 0; o < inst.order_count(); ++o) {
        bool hit = false;
        for (const Pick& p : inst.orders[static_cast<std::size_t>(o)].picks) {
          hit = hit || p.block * inst.layout.n_aisles + p.aisle == i;
        }
        if (!hit) continue;
        m.add_row(groups::tspt2, {{XE(t, aux.subaisle_edge(i)), 1}, {m.var(names::z(o + 1, t)), -1}},
                  Sense::ge, 0);
      }
    }
  }
  for (int t = 1; t <= T; ++t) {
    for (int u = 0; u < aux.vertex_count(); ++u) {
      if (u == s) continue;
      std::vector<Term> terms;
      for (int e : aux.incident(u)) terms.push_back({XE(t, e), 1});
      terms.push_back({m.var(names::y(t, u)), -2});
      m.add_row(groups::tspt3, terms, Sense::eq, 0);
    }
  }
  batching_rows(m, inst, groups::tspt5, groups::tspt6);
  if (with_cross_aisle_bound) {
    std::vector<bool> in_vs(static_cast<std::size_t>(aux.vertex_count()), false);
    for (int v : aux.south_set()) in_vs[static_cast<std::size_t>(v)] = true;
    for (int t = 1; t <= T; ++t) {
      std::vector<Term> terms;
      for (std::size_t e = 0; e < aux.edges().size(); ++e) {
        const AuxEdge& ed = aux.edges()[e];
        if (in_vs[static_cast<std::size_t>(ed.u)] != in_vs[static_cast<std::size_t>(ed.v)]) {
          terms.push_back({XE(t, static_cast<int>(e)), 1});
        }
      }
      m.add_row(groups::cross_aisle, terms, Sense::le, 2);
    }
  }
  FormulationOptions o;
  o.cross_aisle_bound = with_cross_aisle_bound;
  set_attributes(m, inst, FormulationKind::P_U2, o);
  return m;
}

LinearModel build_model(const Instance& inst, const PickingGraph& g, FormulationKind kind,
                        const FormulationOptions& options) {
  check_compatibility(kind, options, inst.layout);
  LinearModel m;
  switch (kind) {
    case FormulationKind::P_basic:
    case FormulationKind::P_A:
      m = build_basic(inst, g);
      if (kind == FormulationKind::P_A || options.subaisle_cuts) build_subaisle_cuts(m, inst, g);
      break;
    case FormulationKind::P_G:
      m = build_PG(inst, g);
      break;
    case FormulationKind::P_F:
      m = build_PF(inst, g);
      break;
    case FormulationKind::P_U:
      m = build_PG(inst, g);
      build_no_reversal(m, inst, g);
      break;
    case FormulationKind::P_U1:
      m = build_PU1(inst, AuxiliaryGraph(g, AuxVariant::single_block));
      break;
    case FormulationKind::P_U2:
      m = build_PU2(inst, AuxiliaryGraph(g, AuxVariant::two_block), options.cross_aisle_bound);
      break;
  }
  if (options.aisle_cuts) build_strengthened_cuts(m, inst, g, StrengthenedFamily::aisle);
  if (options.basic_cuts) build_strengthened_cuts(m, inst, g, StrengthenedFamily::basic);
  if (options.single_traversing) build_single_traversing(m, inst, g);
  if (options.artificial_vertex_reversal) build_artificial_vertex_reversal(m, inst, g);
  if (options.column_inequalities) build_symmetry_breaking(m, inst);
  FormulationOptions effective = options;
  if (kind == FormulationKind::P_A) effective.subaisle_cuts = true;
  set_attributes(m, inst, kind, effective);
  return m;
}

}  // namespace pickopt
