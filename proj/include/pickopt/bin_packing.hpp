#pragma once

#include <vector>

namespace pickopt {

inline constexpr int kBinPackingMaxItems = 64;

// Minimum number of bins of capacity B holding all sizes. Branch-and-bound with
// a first-fit-decreasing incumbent and the L1 bound ceil(sum / B).
// Throws ValidationError if a size is outside [1, B], ResourceLimitError above
// kBinPackingMaxItems items.
int bin_pack_exact(const std::vector<int>& sizes, int capacity);

// First-fit decreasing: bin index per item (input order).
std::vector<int> first_fit_decreasing(const std::vector<int>& sizes, int capacity);

int l1_bound(const std::vector<int>& sizes, int capacity);

}  // namespace pickopt
