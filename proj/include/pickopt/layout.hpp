#pragma once

#include <cstdint>

namespace pickopt {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using ArcId = std::int32_t;
using Length = std::int64_t;

inline constexpr VertexId kNoVertex = -1;

// Rectangular warehouse: vertical picking aisles crossed by n_blocks + 1
// horizontal cross-aisles. All distances are integral.
struct WarehouseLayout {
  int n_aisles = 1;
  int n_blocks = 1;
  int locs_per_subaisle = 1;
  // Distance between vertically adjacent locations, artificial endpoints included.
  Length loc_spacing = 1;
  // Distance between horizontally adjacent artificial locations.
  Length aisle_spacing = 2;

  int subaisle_count() const { return n_aisles * n_blocks; }
  int cross_aisle_count() const { return n_blocks + 1; }
  // Length of a full subaisle traversal f(i) -> l(i).
  Length subaisle_length() const { return (locs_per_subaisle + 1) * loc_spacing; }

  // Throws ValidationError when a count is < 1 or a spacing is <= 0.
  void validate() const;

  bool operator==(const WarehouseLayout&) const = default;
};

}  // namespace pickopt
