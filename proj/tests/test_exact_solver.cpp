#include <doctest.h>

#include <numeric>
#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "pickopt/bin_packing.hpp"
#include "pickopt/errors.hpp"
#include "pickopt/exact_solver.hpp"
#include "pickopt/route_oracle.hpp"
#include "pickopt/s_shape.hpp"

using namespace pickopt;
using testing_support::at;
using testing_support::make_instance;

namespace {

Length vertical_excess(const PickingGraph& g, const std::vector<int>& K1, const std::vector<int>& K2) {
  const Length d = g.layout().subaisle_length();
  Length best = evaluate_s_shape(g, K1, K2, SShapeKind::r_S2).vertical_length;
  if (!K1.empty()) best = std::min(best, evaluate_s_shape(g, K1, K2, SShapeKind::r_S1).vertical_length);
  return best - static_cast<Length>(K1.size() + K2.size()) * d;
}

}  // namespace

TEST_SUITE("exact-solver") {

TEST_CASE("route oracle on the two-aisle layout") {
  PickingGraph g({2, 1, 2, 1, 2});
  const VertexId v11 = g.picking(0, 0);
  const VertexId v21 = g.picking(1, 0);

  const Walk none = route_oracle(g, {});
  CHECK(none.length(g) == oracle::min_departure(g));
  CHECK(none.length(g) == 2);
  CHECK(walk_defect(g, none, {}).empty());

  CHECK(route_oracle(g, {v11}).length(g) == 2);
  const Walk both = route_oracle(g, {v11, v21});
  CHECK(both.length(g) == 8);
  CHECK(walk_defect(g, both, {v11, v21}).empty());
}

TEST_CASE("route oracle matches Held-Karp") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const WarehouseLayout layout{1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 2),
                                 1 + static_cast<int>(rng() % 2), 1 + static_cast<Length>(rng() % 2), 2};
    PickingGraph g(layout);
    if (static_cast<int>(g.edges().size()) > kOracleMaxEdges) continue;
    std::vector<VertexId> req;
    for (VertexId v = g.artificial_count(); v < g.vertex_count(); ++v) {
      if (rng() % 3 == 0) req.push_back(v);
    }
    const Walk w = route_oracle(g, req);
    CHECK(walk_defect(g, w, req).empty());
    for (int m : w.multiplicity) CHECK(m <= 2);
    CHECK(w.length(g) == oracle::held_karp(g, oracle::all_pairs(g), req));
  }
}

TEST_CASE("route oracle refuses large graphs") {
  PickingGraph g({4, 2, 2, 1, 2});
  REQUIRE(static_cast<int>(g.edges().size()) > kOracleMaxEdges);
  CHECK_THROWS_AS(route_oracle(g, {}), ResourceLimitError);
}

TEST_CASE("canonical partitions") {
  SUBCASE("capacity filter") {
    const std::vector<int> sizes{5, 4, 3};
    const auto parts = canonical_partitions(sizes, 8, 3);
    CHECK(parts.size() == 3);
    for (const auto& p : parts) {
      for (const auto& batch : p) {
        int load = 0;
        for (int o : batch) load += sizes[static_cast<std::size_t>(o)];
        CHECK(load <= 8);
      }
    }
  }
  SUBCASE("Bell numbers without limits") {
    const int bell[] = {1, 1, 2, 5, 15, 52, 203};
    for (int n = 1; n <= 6; ++n) {
      CHECK(canonical_partitions(std::vector<int>(static_cast<std::size_t>(n), 1), 100, n).size() ==
            static_cast<std::size_t>(bell[n]));
    }
  }
  SUBCASE("batch limit") {
    // Partitions of 4 items into at most 2 blocks: S(4,1) + S(4,2) = 1 + 7.
    CHECK(canonical_partitions({1, 1, 1, 1}, 100, 2).size() == 8);
  }
}

TEST_CASE("solve_exact with one order") {
  const auto inst = make_instance({2, 1, 2, 1, 2}, {{2, {at(1, 0, 1)}}}, 3);
  PickingGraph g(inst.layout);
  const Solution s = solve_exact(inst, g);
  validate_solution(inst, g, s);
  const Length route = route_oracle(g, inst.locations(0)).length(g);
  CHECK(s.total == route + 2 * oracle::min_departure(g));
  REQUIRE(s.batches.size() == 3);
  CHECK(s.batches[0].orders == std::vector<int>{0});
  CHECK(s.batches[1].orders.empty());
  CHECK(s.batches[2].walk == minimal_departure(g));
}

TEST_CASE("solve_exact matches the symmetry-blind enumerator") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    const WarehouseLayout layout{1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 2), 1, 1, 2};
    const Instance inst = generate_instance(layout, 2 + static_cast<int>(rng() % 3), 5, rng());
    PickingGraph g(layout);
    const Solution s = solve_exact(inst, g);
    validate_solution(inst, g, s);
    CHECK(s.total == oracle::symmetry_blind_optimum(inst, g));
  }
}

TEST_CASE("solve_exact is independent of the thread count") {
  const Instance inst = generate_instance({3, 2, 1, 1, 2}, 5, 5, 99, {8, 2});
  PickingGraph g(inst.layout);
  const Solution one = solve_exact(inst, g, {1, {}});
  const Solution four = solve_exact(inst, g, {4, {}});
  CHECK(dump_solution(inst, g, one) == dump_solution(inst, g, four));
}

TEST_CASE("solve_exact size limits") {
  const Instance inst = generate_instance({2, 1, 1, 1, 2}, 7, 3, 1);
  PickingGraph g(inst.layout);
  CHECK_THROWS_AS(solve_exact(inst, g), ResourceLimitError);
}

TEST_CASE("no-reversal routing") {
  SUBCASE("picks in the first subaisle cost 2d") {
    const auto inst = make_instance({2, 1, 2, 1, 2}, {{1, {at(0, 0, 1)}}});
    PickingGraph g(inst.layout);
    CHECK(solve_no_reversal_exact(inst, g).total == 2 * inst.layout.subaisle_length());
  }
  SUBCASE("never shorter than unrestricted routing") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
      const WarehouseLayout layout{2 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 2), 1, 1, 2};
      const Instance inst = generate_instance(layout, 3, 5, rng());
      PickingGraph g(layout);
      const Solution nr = solve_no_reversal_exact(inst, g);
      validate_solution(inst, g, nr);
      CHECK(nr.total >= solve_exact(inst, g).total);
    }
  }
  SUBCASE("three blocks are refused") {
    const auto inst = make_instance({1, 3, 1, 1, 2}, {{1, {at(0, 2, 0)}}});
    PickingGraph g(inst.layout);
    CHECK_THROWS_AS(solve_no_reversal_exact(inst, g), ValidationError);
  }
}

TEST_CASE("S-shape vertical parity table") {
  PickingGraph g({4, 2, 2, 1, 2});
  const Length d = g.layout().subaisle_length();
  REQUIRE(d == 3);
  CHECK(vertical_excess(g, {0, 2}, {5, 7}) == 0);
  CHECK(vertical_excess(g, {0, 1, 3}, {4, 6}) == d);
  CHECK(vertical_excess(g, {0, 3}, {5}) == d);
  CHECK(vertical_excess(g, {0}, {6}) == 2 * d);
  CHECK(evaluate_s_shape(g, {0}, {6}, SShapeKind::r_S2).vertical_length == 2 * 3 + 6);
}

TEST_CASE("S-shape route shapes") {
  PickingGraph g({3, 2, 1, 1, 2});
  const auto r2 = evaluate_s_shape(g, {2, 0}, {3, 5}, SShapeKind::r_S2);
  CHECK(r2.sequence == std::vector<int>{0, 2, 5, 3});
  const auto r1 = evaluate_s_shape(g, {0, 1}, {4}, SShapeKind::r_S1);
  CHECK(r1.sequence == std::vector<int>{1, 4, 0});
  CHECK(r1.i0 == 0);
  CHECK(r1.total_length >= r1.vertical_length);
  const Walk w = s_shape_walk(g, r1);
  CHECK(walk_defect(g, w, {g.picking(0, 0), g.picking(1, 0), g.picking(4, 0)}).empty());
  CHECK(w.length(g) <= r1.total_length);
}

TEST_CASE("S-shape errors") {
  PickingGraph two({3, 2, 1, 1, 2});
  PickingGraph one({3, 1, 1, 1, 2});
  CHECK_THROWS_AS(evaluate_s_shape(one, {0}, {}, SShapeKind::r_S2), ValidationError);
  CHECK_THROWS_AS(evaluate_s_shape(two, {}, {}, SShapeKind::r_S2), ValidationError);
  CHECK_THROWS_AS(evaluate_s_shape(two, {}, {4}, SShapeKind::r_S1), ValidationError);
  CHECK_THROWS_AS(evaluate_s_shape(two, {4}, {}, SShapeKind::r_S2), ValidationError);
  CHECK_THROWS_AS(evaluate_s_shape(two, {0}, {1}, SShapeKind::r_S2), ValidationError);
}

TEST_CASE("S-shape minimum equals no-reversal optimum on small cases") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    const WarehouseLayout layout{2 + static_cast<int>(rng() % 2), 2, 1, 1 + static_cast<Length>(rng() % 2), 2};
    const Instance inst = generate_instance(layout, 1, 6, rng());
    PickingGraph g(layout);
    CHECK(s_shape_estimate(g, inst.locations(0)) == solve_no_reversal_exact(inst, g).total);
  }
}

TEST_CASE("bin packing") {
  CHECK(bin_pack_exact({3, 3, 3}, 8) == 2);
  CHECK(bin_pack_exact({5, 4, 3}, 8) == 2);
  CHECK(l1_bound({5, 4, 3}, 8) == 2);
  CHECK_THROWS_AS(bin_pack_exact({9}, 8), ValidationError);
  CHECK_THROWS_AS(bin_pack_exact(std::vector<int>(kBinPackingMaxItems + 1, 1), 8), ResourceLimitError);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> sizes(12);
    for (int& s : sizes) s = 1 + static_cast<int>(rng() % 8);
    CHECK(bin_pack_exact(sizes, 8) == oracle::brute_force_bins(sizes, 8));
    const auto ffd = first_fit_decreasing(sizes, 8);
    std::vector<int> load(sizes.size(), 0);
    for (std::size_t i = 0; i < sizes.size(); ++i) load[static_cast<std::size_t>(ffd[i])] += sizes[i];
    for (int l : load) CHECK(l <= 8);
  }
}

}  // TEST_SUITE
