#pragma once

#include <initializer_list>
#include <vector>

#include "pickopt/instance.hpp"

namespace testing_support {

struct OrderSpec {
  int size = 1;
  std::vector<pickopt::Pick> picks;
};

// Instance with orders numbered 1..n.
inline pickopt::Instance make_instance(const pickopt::WarehouseLayout& layout, std::vector<OrderSpec> orders,
                                       int pickers = 1, int capacity = 8) {
  pickopt::Instance inst;
  inst.layout = layout;
  inst.capacity = capacity;
  inst.pickers = pickers;
  std::int64_t id = 1;
  for (auto& o : orders) inst.orders.push_back({id++, o.size, o.picks});
  return inst;
}

inline pickopt::Pick at(int aisle, int block, int slot) { return {aisle, block, slot, 0}; }

}  // namespace testing_support
