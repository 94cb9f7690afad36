#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pickopt/layout.hpp"

namespace pickopt {

// A requested slot. side 0/1 is the left/right rack of the aisle; both sides
// map onto the same chain vertex of the subaisle.
struct Pick {
  int aisle = 0;
  int block = 0;
  int slot = 0;
  int side = 0;
  bool operator==(const Pick&) const = default;
};

struct Order {
  std::int64_t id = 0;
  int size = 1;  // b_o, basket units
  std::vector<Pick> picks;
  bool operator==(const Order&) const = default;
};

struct Instance {
  WarehouseLayout layout;
  int capacity = 8;  // B
  int pickers = 1;   // T
  std::vector<Order> orders;

  int order_count() const { return static_cast<int>(orders.size()); }
  // Picking vertex of a pick in the graph built from this layout.
  VertexId location_of(const Pick& pick) const;
  // L_o: sorted, duplicate-free picking vertices of order o (by position).
  std::vector<VertexId> locations(int o) const;
  // Union of L_o over a set of order positions, sorted.
  std::vector<VertexId> locations(const std::vector<int>& batch) const;
  int batch_size(const std::vector<int>& batch) const;

  // Throws ValidationError naming the offending field.
  void validate() const;

  bool operator==(const Instance&) const = default;
};

inline constexpr const char* kInstanceFormat = "pickopt-instance-v1";

Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);
Instance parse_instance(const std::string& text);
std::string dump_instance(const Instance& instance);

struct GenerateOptions {
  int capacity = 8;
  int pickers = 0;  // 0: optimal bin-packing value
};

// Deterministic instance generator. Number of picks per order is
// 1 + Poisson(max(0, 0.4 * delta - 1)) distinct chain vertices drawn uniformly,
// side uniform; size = ceil(picks / 3) clamped to [1, capacity].
Instance generate_instance(const WarehouseLayout& layout, int n_orders, int delta,
                           std::uint64_t seed, const GenerateOptions& options = {});

}  // namespace pickopt
