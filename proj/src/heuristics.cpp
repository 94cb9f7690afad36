#include "pickopt/heuristics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "pickopt/bin_packing.hpp"
#include "pickopt/errors.hpp"
#include "pickopt/route_oracle.hpp"
#include "pickopt/s_shape.hpp"

namespace pickopt {

namespace {

void normalize(Batching& b) {
  for (auto& batch : b.batches) std::sort(batch.begin(), batch.end());
  std::sort(b.batches.begin(), b.batches.end());
}

std::vector<int> sizes_of(const Instance& inst) {
  std::vector<int> sizes;
  for (const Order& o : inst.orders) sizes.push_back(o.size);
  return sizes;
}

std::vector<int> merged(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

class CachedEstimate {
 public:
  CachedEstimate(const Instance& inst, const DistanceEstimator& est) : inst_(inst), est_(est) {}
  Length operator()(const std::vector<int>& batch) {
    auto it = cache_.find(batch);
    if (it != cache_.end()) return it->second;
    const Length v = est_(inst_.locations(batch));
    cache_.emplace(batch, v);
    return v;
  }

 private:
  const Instance& inst_;
  const DistanceEstimator& est_;
  std::map<std::vector<int>, Length> cache_;
};

}  // namespace

void validate_batching(const Instance& inst, const Batching& batching) {
  std::vector<int> seen(static_cast<std::size_t>(inst.order_count()), 0);
  for (const auto& batch : batching.batches) {
    if (batch.empty()) throw ValidationError("batching: empty batch");
    for (int o : batch) {
      if (o < 0 || o >= inst.order_count()) throw ValidationError("batching: bad order position");
      ++seen[static_cast<std::size_t>(o)];
    }
    if (inst.batch_size(batch) > inst.capacity) throw ValidationError("batching: capacity exceeded");
  }
  for (std::size_t o = 0; o < seen.size(); ++o) {
    if (seen[o] != 1) {
      throw ValidationError("batching: order " + std::to_string(inst.orders[o].id) + " assigned " +
                            std::to_string(seen[o]) + " times");
    }
  }
  if (inst.order_count() > 0 &&
      static_cast<int>(batching.batches.size()) < l1_bound(sizes_of(inst), inst.capacity)) {
    throw ValidationError("batching: fewer batches than the capacity bound");
  }
}

DistanceEstimator s_shape_estimator(const PickingGraph& graph) {
  return [&graph](const std::vector<VertexId>& picks) { return s_shape_estimate(graph, picks); };
}

DistanceEstimator oracle_estimator(const PickingGraph& graph) {
  return [&graph](const std::vector<VertexId>& picks) -> Length {
    if (picks.empty()) return 0;
    return route_oracle(graph, picks).length(graph);
  };
}

Batching first_fit_batching(const Instance& inst) {
  const auto bins = first_fit_decreasing(sizes_of(inst), inst.capacity);
  Batching b;
  for (int o = 0; o < inst.order_count(); ++o) {
    const auto bin = static_cast<std::size_t>(bins[static_cast<std::size_t>(o)]);
    if (b.batches.size() <= bin) b.batches.resize(bin + 1);
    b.batches[bin].push_back(o);
  }
  normalize(b);
  return b;
}

Batching seed_batching(const Instance& inst, const PickingGraph& graph, const DistanceEstimator& estimate) {
  CachedEstimate est(inst, estimate);
  const int n = inst.order_count();
  std::vector<int> subaisle_count(static_cast<std::size_t>(n));
  for (int o = 0; o < n; ++o) {
    std::set<int> subs;
    for (VertexId v : inst.locations(o)) subs.insert(graph.subaisle_of(v));
    subaisle_count[static_cast<std::size_t>(o)] = static_cast<int>(subs.size());
  }
  std::vector<bool> assigned(static_cast<std::size_t>(n), false);
  Batching b;
  for (int left = n; left > 0;) {
    int seed = -1;
    for (int o = 0; o < n; ++o) {
      if (assigned[static_cast<std::size_t>(o)]) continue;
      if (seed < 0 || subaisle_count[static_cast<std::size_t>(o)] > subaisle_count[static_cast<std::size_t>(seed)]) {
        seed = o;
      }
    }
    std::vector<int> batch{seed};
    assigned[static_cast<std::size_t>(seed)] = true;
    --left;
    int load = inst.orders[static_cast<std::size_t>(seed)].size;
    while (true) {
      const Length base = est(batch);
      int pick = -1;
      Length best = 0;
      for (int o = 0; o < n; ++o) {
        if (assigned[static_cast<std::size_t>(o)]) continue;
        if (load + inst.orders[static_cast<std::size_t>(o)].size > inst.capacity) continue;
        const Length inc = est(merged(batch, {o})) - base;
        if (pick < 0 || inc < best) {
          pick = o;
          best = inc;
        }
      }
      if (pick < 0) break;
      batch = merged(batch, {pick});
      assigned[static_cast<std::size_t>(pick)] = true;
      load += inst.orders[static_cast<std::size_t>(pick)].size;
      --left;
    }
    b.batches.push_back(batch);
  }
  normalize(b);
  return b;
}

Batching cw2_batching(const Instance& inst, const DistanceEstimator& estimate) {
  CachedEstimate est(inst, estimate);
  Batching b;
  for (int o = 0; o < inst.order_count(); ++o) b.batches.push_back({o});
  auto min_id = [&](const std::vector<int>& batch) {
    std::int64_t m = inst.orders[static_cast<std::size_t>(batch.front())].id;
    for (int o : batch) m = std::min(m, inst.orders[static_cast<std::size_t>(o)].id);
    return m;
  };
  while (true) {
    std::size_t bi = 0, bj = 0;
    Length best = 0;
    std::pair<std::int64_t, std::int64_t> best_ids{};
    bool found = false;
    for (std::size_t i = 0; i < b.batches.size(); ++i) {
      for (std::size_t j = i + 1; j < b.batches.size(); ++j) {
        const auto& A = b.batches[i];
        const auto& B = b.batches[j];
        if (inst.batch_size(A) + inst.batch_size(B) > inst.capacity) continue;
        const Length saving = est(A) + est(B) - est(merged(A, B));
        if (saving <= 0) continue;
        const std::int64_t ia = min_id(A), ib = min_id(B);
        const std::pair<std::int64_t, std::int64_t> ids{std::min(ia, ib), std::max(ia, ib)};
        if (!found || saving > best || (saving == best && ids < best_ids)) {
          found = true;
          best = saving;
          best_ids = ids;
          bi = i;
          bj = j;
        }
      }
    }
    if (!found) break;
    b.batches[bi] = merged(b.batches[bi], b.batches[bj]);
    b.batches.erase(b.batches.begin() + static_cast<std::ptrdiff_t>(bj));
  }
  normalize(b);
  return b;
}

Solution route_batching(const Instance& inst, const PickingGraph& graph, const Batching& batching,
                        HeuristicRouting routing) {
  validate_batching(inst, batching);
  Solution sol;
  const std::size_t pickers =
      std::max(batching.batches.size(), static_cast<std::size_t>(std::max(inst.pickers, 0)));
  for (std::size_t k = 0; k < pickers; ++k) {
    Batch batch;
    batch.picker = static_cast<int>(k) + 1;
    if (k < batching.batches.size()) {
      batch.orders = batching.batches[k];
      const auto picks = inst.locations(batch.orders);
      batch.walk = routing == HeuristicRouting::exact ? route_oracle(graph, picks)
                                                      : s_shape_route_walk(graph, picks);
    } else {
      batch.walk = minimal_departure(graph);
    }
    batch.length = batch.walk.length(graph);
    sol.total += batch.length;
    sol.batches.push_back(std::move(batch));
  }
  return sol;
}

}  // namespace pickopt
