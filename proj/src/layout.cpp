#include "pickopt/layout.hpp"

#include <string>

#include "pickopt/errors.hpp"

namespace pickopt {

namespace {
constexpr long long kMaxVertices = 10'000'000;
}

void WarehouseLayout::validate() const {
  if (n_aisles < 1) throw ValidationError("layout.aisles must be >= 1");
  if (n_blocks < 1) throw ValidationError("layout.blocks must be >= 1");
  if (locs_per_subaisle < 1) throw ValidationError("layout.locs_per_subaisle must be >= 1");
  if (loc_spacing <= 0) throw ValidationError("layout.loc_spacing must be > 0");
  if (aisle_spacing <= 0) throw ValidationError("layout.aisle_spacing must be > 0");
  const long long artificial = static_cast<long long>(n_aisles) * (n_blocks + 1);
  const long long picking =
      static_cast<long long>(n_aisles) * n_blocks * static_cast<long long>(locs_per_subaisle);
  if (artificial + picking > kMaxVertices) {
    throw ValidationError("layout too large: more than " + std::to_string(kMaxVertices) +
                          " vertices");
  }
}

}  // namespace pickopt
