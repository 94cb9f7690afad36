#include "pickopt/bin_packing.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pickopt/errors.hpp"

namespace pickopt {

namespace {

void check_sizes(const std::vector<int>& sizes, int capacity) {
  if (capacity < 1) throw ValidationError("capacity must be >= 1");
  for (int s : sizes) {
    if (s < 1) throw ValidationError("item size must be >= 1");
    if (s > capacity) throw ValidationError("item size " + std::to_string(s) + " exceeds capacity");
  }
}

struct Search {
  std::vector<int> items;  // decreasing
  std::vector<int> suffix_sum;
  int capacity = 0;
  int best = 0;
  std::vector<int> residual;

  void run(std::size_t k) {
    if (best == l1) return;
    if (k == items.size()) {
      best = std::min(best, static_cast<int>(residual.size()));
      return;
    }
    const int open = static_cast<int>(residual.size());
    const int free_space = std::accumulate(residual.begin(), residual.end(), 0);
    const int overflow = std::max(0, suffix_sum[k] - free_space);
    if (open + (overflow + capacity - 1) / capacity >= best) return;

    const int item = items[k];
    std::vector<int> tried;
    for (std::size_t b = 0; b < residual.size(); ++b) {
      if (residual[b] < item) continue;
      if (std::find(tried.begin(), tried.end(), residual[b]) != tried.end()) continue;
      tried.push_back(residual[b]);
      residual[b] -= item;
      run(k + 1);
      residual[b] += item;
      if (best == l1) return;
    }
    if (open + 1 < best) {
      residual.push_back(capacity - item);
      run(k + 1);
      residual.pop_back();
    }
  }
  int l1 = 0;
};

}  // namespace

int l1_bound(const std::vector<int>& sizes, int capacity) {
  const long long total = std::accumulate(sizes.begin(), sizes.end(), 0LL);
  return static_cast<int>((total + capacity - 1) / capacity);
}

std::vector<int> first_fit_decreasing(const std::vector<int>& sizes, int capacity) {
  check_sizes(sizes, capacity);
  std::vector<int> order(sizes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return sizes[static_cast<std::size_t>(a)] >
                                              sizes[static_cast<std::size_t>(b)]; });
  std::vector<int> bin_of(sizes.size(), -1);
  std::vector<int> residual;
  for (int idx : order) {
    const int s = sizes[static_cast<std::size_t>(idx)];
    std::size_t b = 0;
    while (b < residual.size() && residual[b] < s) ++b;
    if (b == residual.size()) residual.push_back(capacity);
    residual[b] -= s;
    bin_of[static_cast<std::size_t>(idx)] = static_cast<int>(b);
  }
  return bin_of;
}

int bin_pack_exact(const std::vector<int>& sizes, int capacity) {
  check_sizes(sizes, capacity);
  if (sizes.size() > static_cast<std::size_t>(kBinPackingMaxItems)) {
    throw ResourceLimitError("exact bin packing is limited to " +
                             std::to_string(kBinPackingMaxItems) + " items");
  }
  if (sizes.empty()) return 0;
  const auto ffd = first_fit_decreasing(sizes, capacity);
  Search search;
  search.capacity = capacity;
  search.best = *std::max_element(ffd.begin(), ffd.end()) + 1;
  search.l1 = l1_bound(sizes, capacity);
  if (search.best == search.l1) return search.best;
  search.items = sizes;
  std::sort(search.items.begin(), search.items.end(), std::greater<>());
  search.suffix_sum.assign(search.items.size() + 1, 0);
  for (std::size_t k = search.items.size(); k-- > 0;) {
    search.suffix_sum[k] = search.suffix_sum[k + 1] + search.items[k];
  }
  search.run(0);
  return search.best;
}

}  // namespace pickopt
