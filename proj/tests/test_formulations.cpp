#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "pickopt/auxiliary_graph.hpp"
#include "pickopt/encoding.hpp"
#include "pickopt/errors.hpp"
#include "pickopt/exact_solver.hpp"
#include "pickopt/formulations.hpp"
#include "pickopt/model_io.hpp"
#include "pickopt/s_shape.hpp"

using namespace pickopt;
using testing_support::at;
using testing_support::make_instance;

namespace {

int count_prefix(const LinearModel& m, const std::string& prefix) {
  return static_cast<int>(std::count_if(m.variables().begin(), m.variables().end(), [&](const Variable& v) {
    return v.name.rfind(prefix, 0) == 0;
  }));
}

bool group_ok(const LinearModel& m, const VariableAssignment& a, const std::string& group) {
  const auto values = dense_values(m, a);
  for (const Row& r : m.rows()) {
    if (m.group_of(r) == group && !row_satisfied(r, values)) return false;
  }
  return true;
}

Walk walk_of(const PickingGraph& g, std::initializer_list<VertexId> path) {
  Walk w(g);
  const std::vector<VertexId> p(path);
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    ++w.multiplicity[static_cast<std::size_t>(g.arc(g.arc_between(p[k], p[k + 1])).edge)];
  }
  return w;
}

Solution single(const PickingGraph& g, const Instance& inst, Walk w) {
  Solution s;
  Batch b;
  b.picker = 1;
  for (int o = 0; o < inst.order_count(); ++o) b.orders.push_back(o);
  b.walk = std::move(w);
  b.length = b.walk.length(g);
  s.total = b.length;
  s.batches.push_back(b);
  return s;
}

}  // namespace

TEST_SUITE("formulations") {

TEST_CASE("basic model sizes") {
  const auto inst = make_instance({2, 1, 2, 1, 2}, {{2, {at(1, 0, 0)}}});
  PickingGraph g(inst.layout);
  const LinearModel m = build_basic(inst, g);
  CHECK(count_prefix(m, "x_") == 16);
  CHECK(count_prefix(m, "y_") == 8);
  CHECK(count_prefix(m, "z_") == 1);
  CHECK(m.rows_in_group(groups::bs6) == inst.order_count());
  CHECK(m.rows_in_group(groups::bs7) == inst.pickers);
  CHECK(m.rows_in_group(groups::bs4) == 0);
  CHECK(m.lazy_group_count() == 1);
}

TEST_CASE("feasibility checks name the violated group") {
  const auto inst = make_instance({2, 1, 2, 1, 2}, {{5, {at(1, 0, 0)}}, {4, {at(0, 0, 1)}}}, 2);
  PickingGraph g(inst.layout);
  const LinearModel m = build_basic(inst, g);
  const auto zero = check_feasible(m, {});
  CHECK_FALSE(zero.satisfied);
  CHECK(std::any_of(zero.violations.begin(), zero.violations.end(),
                    [](const Violation& v) { return v.group == groups::bs6; }));

  const Solution opt = solve_exact(inst, g);
  VariableAssignment a = encode_walk_basic(inst, g, opt, false);
  CHECK(check_feasible(m, a).satisfied);
  // put both orders on picker 1: 5 + 4 = 9 > 8
  a.set(names::z(1, 1), 1);
  a.set(names::z(1, 2), 0);
  a.set(names::z(2, 1), 1);
  a.set(names::z(2, 2), 0);
  const auto rep = check_feasible(m, a, 100);
  CHECK(std::any_of(rep.violations.begin(), rep.violations.end(),
                    [](const Violation& v) { return v.group == groups::bs7; }));
}

TEST_CASE("subaisle cut rows") {
  const auto inst = make_instance({1, 1, 2, 1, 2}, {{1, {at(0, 0, 1)}}});
  PickingGraph g(inst.layout);
  LinearModel m = build_basic(inst, g);
  build_subaisle_cuts(m, inst, g);
  CHECK(m.rows_in_group(groups::sub1) == 1);
  CHECK(m.rows_in_group(groups::sub2) == 2);
  CHECK(m.rows_in_group(groups::sub3) == 1);
  CHECK(m.rows_in_group(groups::sub4) == 2);

  const Subaisle& s = g.subaisle(0);
  const VertexId v1 = s.locations[0], v2 = s.locations[1];
  VariableAssignment a;
  a.set(names::alpha(1, v1), 1);
  a.set(names::alpha(1, v2), 1);
  a.set(names::x(1, s.top, v1), 1);
  a.set(names::x(1, v1, v2), 1);
  CHECK((group_ok(m, a, groups::sub1) && group_ok(m, a, groups::sub2)));
  VariableAssignment missing = a;
  missing.set(names::x(1, s.top, v1), 0);
  CHECK_FALSE((group_ok(m, missing, groups::sub1) && group_ok(m, missing, groups::sub2)));

  // a full downward traversal admits alpha = 1 everywhere
  const Solution down = single(g, inst, walk_of(g, {s.top, v1, v2, s.bottom, v2, v1, s.top}));
  const auto enc = encode_walk_basic(inst, g, down, true);
  CHECK(enc.get(names::alpha(1, v2)) == 1);
  CHECK(check_feasible(m, enc).satisfied);
}

TEST_CASE("P_G and P_F structure") {
  const auto inst = make_instance({2, 2, 1, 1, 2}, {{1, {at(1, 1, 0)}}, {1, {at(0, 0, 0)}}}, 2);
  PickingGraph g(inst.layout);
  const LinearModel pg = build_PG(inst, g);
  CHECK(count_prefix(pg, "g_") == inst.pickers * static_cast<int>(g.reduced_arcs().size()));
  for (const Row& r : pg.rows()) {
    if (pg.group_of(r) == groups::impf4 || pg.group_of(r) == groups::impf5) CHECK(r.sense == Sense::eq);
  }
  CHECK(pg.lazy_group_count() == 1);
  CHECK(pg.rows_in_group(groups::impf8) == 0);

  const LinearModel pf = build_PF(inst, g);
  CHECK(count_prefix(pf, "s_") ==
        inst.pickers * g.artificial_count() * static_cast<int>(g.reduced_arcs().size()));
  CHECK(pf.lazy_group_count() == 0);

  const Solution opt = solve_exact(inst, g);
  const auto apg = encode_walk_PG(inst, g, opt);
  CHECK(check_feasible(pg, apg).satisfied);
  CHECK(objective_value(pg, apg) == opt.total);
  const auto apf = encode_walk_PF(inst, g, opt);
  CHECK(check_feasible(pf, apf).satisfied);
  CHECK(objective_value(pf, apf) == opt.total);
}

TEST_CASE("flow of an unvisited commodity is zero") {
  const auto inst = make_instance({2, 1, 1, 1, 2}, {{1, {at(0, 0, 0)}}});
  PickingGraph g(inst.layout);
  const LinearModel pf = build_PF(inst, g);
  const auto a = encode_walk_PF(inst, g, solve_exact(inst, g));
  CHECK(check_feasible(pf, a).satisfied);
  const VertexId far = g.artificial(1, 1);
  CHECK(a.get(names::y(1, far)) == 0);
  for (const Arc& arc : g.reduced_arcs()) CHECK(a.get(names::sigma(1, far, arc.tail, arc.head)) == 0);
}

TEST_CASE("a full southbound traversal sets gamma on the subaisle") {
  const auto inst = make_instance({2, 1, 1, 1, 2}, {{1, {at(1, 0, 0)}}});
  PickingGraph g(inst.layout);
  const Subaisle& s1 = g.subaisle(0);
  const Subaisle& s2 = g.subaisle(1);
  // s -> down subaisle 1 -> east along the bottom -> up subaisle 2 -> west
  const Solution sol = single(g, inst,
                              walk_of(g, {s1.top, s1.locations[0], s1.bottom, s2.bottom, s2.locations[0],
                                          s2.top, s1.top}));
  const auto a = encode_walk_PG(inst, g, sol);
  CHECK(a.get(names::gamma(1, s1.top, s1.bottom)) == 1);
  CHECK(a.get(names::gamma(1, s2.bottom, s2.top)) == 1);
  CHECK(check_feasible(build_PG(inst, g), a).satisfied);
}

TEST_CASE("strengthened cuts") {
  SUBCASE("aisle cut of a single pick has two boundary terms") {
    const auto inst = make_instance({2, 1, 2, 1, 2}, {{1, {at(1, 0, 1)}}});
    PickingGraph g(inst.layout);
    LinearModel m = build_PG(inst, g);
    build_strengthened_cuts(m, inst, g, StrengthenedFamily::aisle);
    REQUIRE(m.rows_in_group(groups::aisle_cut) == 1);
    for (const Row& r : m.rows()) {
      if (m.group_of(r) != groups::aisle_cut) continue;
      int arcs = 0;
      for (const Term& t : r.terms) arcs += m.variable(t.var).name.rfind("x_", 0) == 0 ? 1 : 0;
      CHECK(arcs == 2);
    }
  }
  SUBCASE("a block-2 pick yields one basic cut set") {
    const auto inst = make_instance({2, 2, 1, 1, 2}, {{1, {at(1, 1, 0)}}}, 2);
    PickingGraph g(inst.layout);
    LinearModel m = build_PG(inst, g);
    build_strengthened_cuts(m, inst, g, StrengthenedFamily::basic);
    CHECK(m.rows_in_group(groups::basic_cut) == inst.pickers);
  }
  SUBCASE("the origin component gives no cut") {
    const auto inst = make_instance({3, 1, 1, 1, 2}, {{1, {at(0, 0, 0), at(2, 0, 0)}}});
    PickingGraph g(inst.layout);
    LinearModel m = build_PG(inst, g);
    build_strengthened_cuts(m, inst, g, StrengthenedFamily::basic);
    CHECK(m.rows_in_group(groups::basic_cut) == 1);
  }
}

TEST_CASE("single-traversing rows") {
  SUBCASE("one pick, one block") {
    const auto one = make_instance({2, 1, 1, 1, 2}, {{1, {at(1, 0, 0)}}}, 3);
    PickingGraph g(one.layout);
    LinearModel m1 = build_PG(one, g);
    build_single_traversing(m1, one, g);
    CHECK(m1.rows_in_group(groups::single_traversing) == 3);
  }
  SUBCASE("two blocks exempt subaisle 1") {
    const auto inst = make_instance({2, 2, 1, 1, 2}, {{1, {at(0, 0, 0)}}});
    PickingGraph g(inst.layout);
    LinearModel m = build_PG(inst, g);
    build_single_traversing(m, inst, g);
    CHECK(m.rows_in_group(groups::single_traversing) == 0);
  }
  SUBCASE("three blocks are rejected") {
    const auto inst = make_instance({1, 3, 1, 1, 2}, {{1, {at(0, 2, 0)}}});
    PickingGraph g(inst.layout);
    LinearModel m = build_PG(inst, g);
    CHECK_THROWS_AS(build_single_traversing(m, inst, g), ValidationError);
  }
}

TEST_CASE("no-reversal rows") {
  const auto inst = make_instance({1, 1, 2, 1, 2}, {{1, {at(0, 0, 0)}}});
  PickingGraph g(inst.layout);
  FormulationOptions none;
  const LinearModel m = build_model(inst, g, FormulationKind::P_U, none);
  CHECK(m.rows_in_group(groups::norev1) == 3);
  CHECK(m.rows_in_group(groups::norev2) == 3);

  const Subaisle& s = g.subaisle(0);
  const Solution uturn = single(g, inst, walk_of(g, {s.top, s.locations[0], s.top}));
  CHECK_FALSE(group_ok(m, encode_walk_PU(inst, g, uturn), groups::norev1));
  const Solution full =
      single(g, inst, walk_of(g, {s.top, s.locations[0], s.locations[1], s.bottom, s.locations[1],
                                  s.locations[0], s.top}));
  const auto a = encode_walk_PU(inst, g, full);
  CHECK(group_ok(m, a, groups::norev1));
  CHECK(group_ok(m, a, groups::norev2));
  CHECK(a.get(names::down(1, 0)) == 1);
}

TEST_CASE("single-block TSP model") {
  const auto inst = make_instance({2, 1, 1, 3, 2}, {{1, {at(0, 0, 0)}}, {1, {at(1, 0, 0)}}}, 2);
  PickingGraph g(inst.layout);
  AuxiliaryGraph aux(g, AuxVariant::single_block);
  const LinearModel m = build_PU1(inst, aux);
  const int l1 = aux.edge(aux.subaisle_edge(0)).v;
  for (const Row& r : m.rows()) {
    if (m.group_of(r) != groups::tspo4) continue;
    CHECK(r.sense == Sense::eq);
    CHECK(r.rhs == 0);
    const auto y = std::find_if(r.terms.begin(), r.terms.end(), [&](const Term& t) {
      return m.variable(t.var).name.rfind("y_", 0) == 0;
    });
    REQUIRE(y != r.terms.end());
    CHECK(y->coef == -2);
    CHECK(m.variable(y->var).name != names::y(1, l1));
  }
  CHECK(m.rows_in_group(groups::tspo4) == inst.pickers * (aux.vertex_count() - 2));
  // one cover row per (picker, subaisle, order) with a pick there
  CHECK(m.rows_in_group(groups::tspo2) == 4);

  // picks only in subaisle 1: the tour returns over the parallel edge
  const TspTour tour = best_tsp_tour(aux, {0});
  CHECK(tour.parallel);
  CHECK(tour.length == 2 * g.layout().subaisle_length());
}

TEST_CASE("two-block TSP model") {
  const auto inst = make_instance({2, 2, 1, 2, 2}, {{1, {at(1, 0, 0), at(0, 1, 0)}}});
  PickingGraph g(inst.layout);
  AuxiliaryGraph aux(g, AuxVariant::two_block);
  const LinearModel m = build_PU2(inst, aux, true);
  CHECK(m.rows_in_group(groups::cross_aisle) == inst.pickers);
  // degree rows for every auxiliary vertex except the origin (copies included)
  CHECK(m.rows_in_group(groups::tspt3) == inst.pickers * (aux.vertex_count() - 1));

  const SShapeRoute r2 = evaluate_s_shape(g, {1}, {2}, SShapeKind::r_S2);
  const TspTour tour = s_shape_tour(aux, r2);
  const VariableAssignment a = encode_tours(inst, aux, {{0}}, {tour});
  CHECK(check_feasible(m, a).satisfied);
  CHECK(objective_value(m, a) == r2.total_length);
  for (const Row& r : m.rows()) {
    if (m.group_of(r) == groups::cross_aisle) CHECK(row_activity(r, dense_values(m, a)) == 2);
  }
}

TEST_CASE("column inequalities") {
  const auto inst = make_instance({2, 1, 1, 1, 2}, {{3, {at(0, 0, 0)}}, {3, {at(1, 0, 0)}}, {3, {at(1, 0, 0)}}}, 3);
  LinearModel m;
  for (int o = 1; o <= 3; ++o) {
    for (int t = 1; t <= 3; ++t) m.add_variable(names::z(o, t), VarType::binary);
  }
  build_symmetry_breaking(m, inst);
  CHECK(m.rows_in_group(groups::col_fix) == 3);
  // batches ordered by smallest order satisfy the rows: {1,3} -> 1, {2} -> 2
  VariableAssignment a;
  a.set(names::z(1, 1), 1);
  a.set(names::z(2, 2), 1);
  a.set(names::z(3, 1), 1);
  CHECK(check_feasible(m, a).satisfied);
  VariableAssignment b;
  b.set(names::z(1, 2), 1);
  b.set(names::z(2, 1), 1);
  b.set(names::z(3, 1), 1);
  CHECK_FALSE(check_feasible(m, b).satisfied);
}

TEST_CASE("option compatibility") {
  const auto one = make_instance({2, 1, 1, 1, 2}, {{1, {at(1, 0, 0)}}});
  PickingGraph g1(one.layout);
  FormulationOptions bound;
  bound.cross_aisle_bound = true;
  CHECK_THROWS_AS(build_model(one, g1, FormulationKind::P_U2, bound), ValidationError);
  CHECK_THROWS_AS(build_model(one, g1, FormulationKind::P_G, bound), ValidationError);
  FormulationOptions st;
  st.single_traversing = true;
  const auto three = make_instance({1, 3, 1, 1, 2}, {{1, {at(0, 2, 0)}}});
  PickingGraph g3(three.layout);
  CHECK_THROWS_AS(build_model(three, g3, FormulationKind::P_G, st), ValidationError);
  CHECK(parse_formulation_kind("PG") == FormulationKind::P_G);
  CHECK(parse_formulation_kind("P_U2") == FormulationKind::P_U2);
  CHECK(parse_formulation_kind("basic") == FormulationKind::P_basic);
  CHECK_THROWS_AS(parse_formulation_kind("PX"), ValidationError);
}

TEST_CASE("export is deterministic and round-trips") {
  const Instance inst = generate_instance({2, 2, 1, 1, 2}, 3, 10, 5);
  PickingGraph g(inst.layout);
  FormulationOptions op;
  op.basic_cuts = true;
  op.column_inequalities = true;
  for (FormulationKind k : {FormulationKind::P_basic, FormulationKind::P_G, FormulationKind::P_F}) {
    const LinearModel m = build_model(inst, g, k, k == FormulationKind::P_F ? FormulationOptions{} : op);
    const std::string lp = write_lp(m);
    CHECK(lp == write_lp(build_model(inst, g, k, k == FormulationKind::P_F ? FormulationOptions{} : op)));
    const LinearModel back = parse_lp(lp);
    CHECK(back.variable_count() == m.variable_count());
    CHECK(back.row_count() == m.row_count());
    CHECK(back.lazy_group_count() == m.lazy_group_count());
    CHECK(write_lp(back) == lp);
    CHECK(write_mps(m) == write_mps(back));
  }
}

}  // TEST_SUITE
