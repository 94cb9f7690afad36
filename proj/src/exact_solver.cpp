#include "pickopt/exact_solver.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "pickopt/errors.hpp"

namespace pickopt {

namespace {

void grow(std::size_t k, const std::vector<int>& sizes, int capacity, int max_batches,
          std::vector<std::vector<int>>& current, std::vector<int>& load,
          std::vector<std::vector<std::vector<int>>>& out) {
  if (k == sizes.size()) {
    out.push_back(current);
    return;
  }
  const int o = static_cast<int>(k);
  for (std::size_t b = 0; b < current.size(); ++b) {
    if (load[b] + sizes[k] > capacity) continue;
    current[b].push_back(o);
    load[b] += sizes[k];
    grow(k + 1, sizes, capacity, max_batches, current, load, out);
    load[b] -= sizes[k];
    current[b].pop_back();
  }
  if (static_cast<int>(current.size()) < max_batches) {
    current.push_back({o});
    load.push_back(sizes[k]);
    grow(k + 1, sizes, capacity, max_batches, current, load, out);
    load.pop_back();
    current.pop_back();
  }
}

template <class F>
void parallel_for(int n, int threads, F&& body) {
  const int workers = std::max(1, std::min(threads, n));
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (int k = next++; k < n; k = next++) {
      try {
        body(k);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

Solution enumerate(const Instance& inst, const PickingGraph& g, const RouteRestriction& restriction,
                   int threads) {
  inst.validate();
  const int n = inst.order_count();
  if (n > kExactMaxOrders) {
    throw ResourceLimitError("exact solver is limited to " + std::to_string(kExactMaxOrders) +
                             " orders, instance has " + std::to_string(n));
  }
  if (static_cast<int>(g.edges().size()) > kOracleMaxEdges) {
    throw ResourceLimitError("route oracle is limited to " + std::to_string(kOracleMaxEdges) +
                             " edges, graph has " + std::to_string(g.edges().size()));
  }
  std::vector<int> sizes;
  for (const Order& o : inst.orders) sizes.push_back(o.size);
  const auto partitions = canonical_partitions(sizes, inst.capacity, inst.pickers);
  if (partitions.empty()) throw ValidationError("no capacity-feasible batching with the given pickers");

  // Route every capacity-feasible order subset once; mask 0 is the idle picker.
  const int n_masks = 1 << n;
  std::vector<int> needed;
  for (int mask = 0; mask < n_masks; ++mask) {
    int load = 0;
    for (int o = 0; o < n; ++o) {
      if (mask >> o & 1) load += sizes[static_cast<std::size_t>(o)];
    }
    if (load <= inst.capacity) needed.push_back(mask);
  }
  std::vector<Walk> walks(static_cast<std::size_t>(n_masks));
  std::vector<Length> lengths(static_cast<std::size_t>(n_masks), -1);
  parallel_for(static_cast<int>(needed.size()), resolve_threads(threads), [&](int k) {
    const int mask = needed[static_cast<std::size_t>(k)];
    std::vector<int> batch;
    for (int o = 0; o < n; ++o) {
      if (mask >> o & 1) batch.push_back(o);
    }
    Walk w = route_oracle(g, inst.locations(batch), restriction);
    lengths[static_cast<std::size_t>(mask)] = w.length(g);
    walks[static_cast<std::size_t>(mask)] = std::move(w);
  });

  std::size_t best = 0;
  Length best_total = -1;
  for (std::size_t p = 0; p < partitions.size(); ++p) {
    Length total = 0;
    for (const auto& batch : partitions[p]) {
      int mask = 0;
      for (int o : batch) mask |= 1 << o;
      total += lengths[static_cast<std::size_t>(mask)];
    }
    total += (inst.pickers - static_cast<Length>(partitions[p].size())) * lengths[0];
    if (best_total < 0 || total < best_total) {
      best_total = total;
      best = p;
    }
  }
  Solution sol;
  sol.total = best_total;
  for (int t = 1; t <= inst.pickers; ++t) {
    Batch b;
    b.picker = t;
    int mask = 0;
    if (t <= static_cast<int>(partitions[best].size())) {
      b.orders = partitions[best][static_cast<std::size_t>(t - 1)];
      for (int o : b.orders) mask |= 1 << o;
    }
    b.walk = walks[static_cast<std::size_t>(mask)];
    b.length = lengths[static_cast<std::size_t>(mask)];
    sol.batches.push_back(std::move(b));
  }
  return sol;
}

}  // namespace

int resolve_threads(int requested) {
  if (const char* env = std::getenv("PICKOPT_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<std::vector<std::vector<int>>> canonical_partitions(const std::vector<int>& sizes,
                                                                int capacity, int max_batches) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> current;
  std::vector<int> load;
  grow(0, sizes, capacity, max_batches, current, load, out);
  return out;
}

Solution solve_exact(const Instance& instance, const PickingGraph& graph, const ExactOptions& options) {
  return enumerate(instance, graph, options.restriction, options.threads);
}

Solution solve_no_reversal_exact(const Instance& instance, const PickingGraph& graph, int threads) {
  if (instance.layout.n_blocks > 2) {
    throw ValidationError("no-reversal exact solver supports 1- or 2-block layouts only");
  }
  RouteRestriction r;
  r.no_reversal = true;
  return enumerate(instance, graph, r, threads);
}

}  // namespace pickopt
