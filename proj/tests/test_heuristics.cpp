#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "pickopt/bin_packing.hpp"
#include "pickopt/errors.hpp"
#include "pickopt/exact_solver.hpp"
#include "pickopt/heuristics.hpp"
#include "pickopt/s_shape.hpp"

using namespace pickopt;
using testing_support::at;
using testing_support::make_instance;

TEST_SUITE("heuristics") {

TEST_CASE("S-shape estimate") {
  PickingGraph one({3, 1, 2, 1, 2});
  const Length d = one.layout().subaisle_length();
  CHECK(s_shape_estimate(one, {}) == 0);

  const auto route = route_over_sequence(one, {0, 1});
  CHECK(route.vertical_length == 2 * d);
  CHECK(s_shape_estimate(one, {one.picking(0, 0), one.picking(1, 1)}) == 2 * d + 2 * 2);

  PickingGraph three({2, 3, 1, 1, 2});
  CHECK_THROWS_AS(s_shape_estimate(three, {three.picking(0, 0)}), ValidationError);

  std::mt19937_64 rng(31);
  PickingGraph two({3, 2, 2, 1, 2});
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<VertexId> picks;
    std::vector<int> K1, K2;
    for (int i = 0; i < two.layout().subaisle_count(); ++i) {
      if (rng() % 3 == 0) {
        picks.push_back(two.picking(i, static_cast<int>(rng() % 2)));
        (i < 3 ? K1 : K2).push_back(i);
      }
    }
    if (picks.empty()) continue;
    Length expected = evaluate_s_shape(two, K1, K2, SShapeKind::r_S2).total_length;
    if (!K1.empty()) expected = std::min(expected, evaluate_s_shape(two, K1, K2, SShapeKind::r_S1).total_length);
    CHECK(s_shape_estimate(two, picks) == expected);
  }
}

TEST_CASE("seed batching") {
  const WarehouseLayout layout{3, 1, 2, 1, 2};
  PickingGraph g(layout);
  const auto est = s_shape_estimator(g);

  SUBCASE("everything fits one trolley") {
    const auto inst = make_instance(layout, {{2, {at(0, 0, 0)}}, {2, {at(2, 0, 1)}}, {3, {at(1, 0, 0)}}});
    const Batching b = seed_batching(inst, g, est);
    CHECK(b.batches == std::vector<std::vector<int>>{{0, 1, 2}});
  }
  SUBCASE("identical orders share a batch") {
    const auto inst = make_instance(
        layout, {{4, {at(0, 0, 0), at(2, 0, 1)}}, {3, {at(1, 0, 0)}}, {4, {at(0, 0, 0), at(2, 0, 1)}}});
    const Batching b = seed_batching(inst, g, est);
    validate_batching(inst, b);
    CHECK(b.batches == std::vector<std::vector<int>>{{0, 2}, {1}});
  }
}

TEST_CASE("CWII batching") {
  const WarehouseLayout layout{3, 1, 2, 1, 2};
  PickingGraph g(layout);

  SUBCASE("orders in the same subaisle merge first") {
    const auto inst = make_instance(layout, {{4, {at(2, 0, 0)}}, {4, {at(0, 0, 0)}}, {4, {at(2, 0, 1)}}});
    const Batching b = cw2_batching(inst, s_shape_estimator(g));
    CHECK(b.batches == std::vector<std::vector<int>>{{0, 2}, {1}});
  }
  SUBCASE("no positive saving keeps singletons") {
    const auto inst = make_instance(layout, {{1, {at(2, 0, 0)}}, {1, {at(0, 0, 0)}}, {1, {at(1, 0, 1)}}});
    const DistanceEstimator additive = [](const std::vector<VertexId>& picks) {
      return static_cast<Length>(10 * picks.size());
    };
    const Batching b = cw2_batching(inst, additive);
    CHECK(b.batches == std::vector<std::vector<int>>{{0}, {1}, {2}});
  }
}

TEST_CASE("batching validation") {
  const auto inst = make_instance({2, 1, 1, 1, 2}, {{5, {at(0, 0, 0)}}, {4, {at(1, 0, 0)}}});
  CHECK_NOTHROW(validate_batching(inst, {{{0}, {1}}}));
  CHECK_THROWS_AS(validate_batching(inst, {{{0, 1}}}), ValidationError);
  CHECK_THROWS_AS(validate_batching(inst, {{{0}}}), ValidationError);
  CHECK_THROWS_AS(validate_batching(inst, {{{0}, {0, 1}}}), ValidationError);
}

TEST_CASE("heuristics against the exact optimum") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const WarehouseLayout layout{2 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 2), 1, 1, 2};
    const Instance inst = generate_instance(layout, 2 + static_cast<int>(rng() % 3), 5, rng(), {8, 0});
    PickingGraph g(layout);
    const Length exact = solve_exact(inst, g).total;
    for (const Batching& b : {seed_batching(inst, g, s_shape_estimator(g)), cw2_batching(inst, s_shape_estimator(g)),
                              seed_batching(inst, g, oracle_estimator(g)), cw2_batching(inst, oracle_estimator(g)),
                              first_fit_batching(inst)}) {
      validate_batching(inst, b);
      const Solution routed = route_batching(inst, g, b, HeuristicRouting::exact);
      validate_solution(inst, g, routed);
      CHECK(routed.total >= exact);
      CHECK(route_batching(inst, g, b, HeuristicRouting::s_shape).total >= routed.total);
    }
    CHECK(seed_batching(inst, g, s_shape_estimator(g)) == seed_batching(inst, g, s_shape_estimator(g)));
    CHECK(cw2_batching(inst, s_shape_estimator(g)) == cw2_batching(inst, s_shape_estimator(g)));
  }
}

TEST_CASE("routing gives idle pickers a departure") {
  const auto inst = make_instance({2, 1, 1, 1, 2}, {{1, {at(1, 0, 0)}}}, 3);
  PickingGraph g(inst.layout);
  const Solution s = route_batching(inst, g, {{{0}}}, HeuristicRouting::s_shape);
  REQUIRE(s.batches.size() == 3);
  CHECK(s.batches[2].walk == minimal_departure(g));
  validate_solution(inst, g, s);
}

}  // TEST_SUITE
