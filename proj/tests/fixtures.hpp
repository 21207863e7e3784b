#pragma once

// Hand-built objects shared by several suites.

#include "wardcomb/structures.hpp"

namespace fixtures {

using namespace wardcomb;

inline SchroederTree vertex(int label, std::vector<std::vector<SchroederTree>> blocks = {}) {
  return SchroederTree{label, std::move(blocks)};
}

/// Total partition 123456 -> 125|3|46, 125 -> 1|25, 25 -> 2|5, 46 -> 4|6.
inline TotalPartitionTree six_leaf_total() {
  auto leaf = make_leaf;
  return make_internal({make_internal({leaf(1), make_internal({leaf(2), leaf(5)})}), leaf(3), make_internal({leaf(4), leaf(6)})});
}

/// Root 1 with blocks [{3,4},{2}]; 4 carries {6}; 2 carries {5}.
inline SchroederTree six_leaf_increasing() {
  return vertex(1, {{vertex(3), vertex(4, {{vertex(6)}})}, {vertex(2, {{vertex(5)}})}});
}

inline const char* six_leaf_total_json =
    R"({"children":[{"children":[{"leaf":1},{"children":[{"leaf":2},{"leaf":5}]}]},{"leaf":3},{"children":[{"leaf":4},{"leaf":6}]}]})";

inline const char* six_leaf_increasing_json =
    R"({"blocks":[[{"blocks":[],"label":3},{"blocks":[[{"blocks":[],"label":6}]],"label":4}],[{"blocks":[[{"blocks":[],"label":5}]],"label":2}]],"label":1})";

inline OrderedPartition op(int n, std::vector<Block> blocks) { return OrderedPartition{n, std::move(blocks)}; }

struct OpPair {
  OrderedPartition from;
  OrderedPartition to;
};

/// The six cancelling pairs on [3].
inline std::vector<OpPair> psi_prime_pairs_on_3() {
  return {
      {op(3, {{1}, {3}, {2}}), op(3, {{1}, {2, 3}})},
      {op(3, {{2}, {1}, {3}}), op(3, {{1, 2}, {3}})},
      {op(3, {{2}, {3}, {1}}), op(3, {{2}, {1, 3}})},
      {op(3, {{3}, {1}, {2}}), op(3, {{1, 3}, {2}})},
      {op(3, {{3}, {2}, {1}}), op(3, {{3}, {1, 2}})},
      {op(3, {{1, 2, 3}}), op(3, {{2, 3}, {1}})},
  };
}

}  // namespace fixtures
