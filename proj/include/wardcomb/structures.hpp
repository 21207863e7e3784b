#pragma once

// Combinatorial families: set/ordered partitions, Schroeder trees (plain,
// increasing, enriched), total partition and semi-labeled trees, meadows.
//
// Every generator is a deterministic stream: it calls the visitor once per
// object, in a fixed order, without materializing the family.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wardcomb/exactmath.hpp"
#include "wardcomb/weights.hpp"

namespace wardcomb {

using Block = std::vector<int>;

// ---------------------------------------------------------------------------
// TypeVector
// ---------------------------------------------------------------------------

/// Multiset of block sizes, stored as size -> multiplicity.
class TypeVector {
 public:
  TypeVector() = default;

  void add(int size, int times = 1) {
    if (size < 1) throw std::invalid_argument("type entries must be positive sizes");
    if (times <= 0) return;
    parts_[size] += times;
  }

  int multiplicity(int size) const {
    auto it = parts_.find(size);
    return it == parts_.end() ? 0 : it->second;
  }

  /// Sum of size * multiplicity.
  long long total() const {
    long long t = 0;
    for (auto [s, m] : parts_) t += static_cast<long long>(s) * m;
    return t;
  }

  /// Number of blocks.
  long long count() const {
    long long c = 0;
    for (auto [s, m] : parts_) c += m;
    return c;
  }

  bool empty() const { return parts_.empty(); }
  const std::map<int, int>& parts() const { return parts_; }

  /// "1^3 2^1"; the empty type prints as "1".
  std::string str() const {
    if (parts_.empty()) return "1";
    std::string s;
    for (auto [size, mult] : parts_) {
      if (!s.empty()) s += ' ';
      s += std::to_string(size) + "^" + std::to_string(mult);
    }
    return s;
  }

  friend bool operator==(const TypeVector&, const TypeVector&) = default;
  friend bool operator<(const TypeVector& a, const TypeVector& b) { return a.parts_ < b.parts_; }

 private:
  std::map<int, int> parts_;
};

/// prod_i g_i^{m_i}.
inline ExactRat weight_of(const TypeVector& type, const WeightSystem& weights) {
  ExactRat w = 1;
  for (auto [size, mult] : type.parts()) w *= rpow(weights(static_cast<std::size_t>(size)), static_cast<unsigned>(mult));
  return w;
}

// ---------------------------------------------------------------------------
// Partitions
// ---------------------------------------------------------------------------

/// Blocks sorted by minimum, each block ascending.
struct SetPartition {
  int n = 0;
  std::vector<Block> blocks;
  friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

/// Blocks in significant order, each block ascending.
struct OrderedPartition {
  int n = 0;
  std::vector<Block> blocks;
  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
};

namespace detail {

inline bool covers_exactly(const std::vector<Block>& blocks, int n) {
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  int count = 0;
  for (const auto& b : blocks) {
    if (b.empty()) return false;
    for (int v : b) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = 1;
      ++count;
    }
  }
  return count == n;
}

inline bool all_ascending(const std::vector<Block>& blocks) {
  return std::all_of(blocks.begin(), blocks.end(),
                     [](const Block& b) { return std::is_sorted(b.begin(), b.end()) && std::adjacent_find(b.begin(), b.end()) == b.end(); });
}

}  // namespace detail

inline bool is_valid(const OrderedPartition& op) {
  return detail::covers_exactly(op.blocks, op.n) && detail::all_ascending(op.blocks);
}

inline bool is_canonical(const SetPartition& p) {
  if (!detail::covers_exactly(p.blocks, p.n) || !detail::all_ascending(p.blocks)) return false;
  for (std::size_t i = 1; i < p.blocks.size(); ++i)
    if (p.blocks[i - 1].front() > p.blocks[i].front()) return false;
  return true;
}

inline SetPartition canonicalize(SetPartition p) {
  for (auto& b : p.blocks) std::sort(b.begin(), b.end());
  std::sort(p.blocks.begin(), p.blocks.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
  return p;
}

inline OrderedPartition canonicalize(OrderedPartition op) {
  for (auto& b : op.blocks) std::sort(b.begin(), b.end());
  return op;
}

/// (-1)^(n+k).
inline int sign_of(const OrderedPartition& op) {
  return sign_power(static_cast<long long>(op.n) + static_cast<long long>(op.blocks.size()));
}

/// Block of size s contributes s-1 (Ward convention: a block of size i+1 carries g_i).
/// Singleton blocks have no type entry.
inline TypeVector type_of(const SetPartition& p) {
  TypeVector t;
  for (const auto& b : p.blocks) {
    if (b.size() < 2) throw std::invalid_argument("type_of: singleton block has no Ward type");
    t.add(static_cast<int>(b.size()) - 1);
  }
  return t;
}

/// Multiset of raw block sizes.
inline TypeVector block_size_profile(const SetPartition& p) {
  TypeVector t;
  for (const auto& b : p.blocks) t.add(static_cast<int>(b.size()));
  return t;
}

/// Visits every partition of `labels` (ascending) into between `min_blocks`
/// and `max_blocks` blocks, each of size >= `min_size`. Blocks come out
/// ordered by minimum, each ascending.
template <class Visitor>
void for_each_partition_of(const std::vector<int>& labels, std::size_t min_blocks, std::size_t max_blocks,
                           std::size_t min_size, Visitor&& visit) {
  const std::size_t total = labels.size();
  std::vector<Block> blocks;
  auto place = [&](auto& self, std::size_t i) -> void {
    const std::size_t remaining = total - i;
    if (blocks.size() + remaining < min_blocks) return;
    std::size_t deficit = 0;
    for (const auto& b : blocks)
      if (b.size() < min_size) deficit += min_size - b.size();
    if (deficit > remaining) return;
    if (i == total) {
      visit(static_cast<const std::vector<Block>&>(blocks));
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(labels[i]);
      self(self, i + 1);
      blocks[b].pop_back();
    }
    if (blocks.size() < max_blocks) {
      blocks.push_back({labels[i]});
      self(self, i + 1);
      blocks.pop_back();
    }
  };
  if (total == 0) {
    if (min_blocks == 0) visit(static_cast<const std::vector<Block>&>(blocks));
    return;
  }
  place(place, 0);
}

inline std::vector<int> iota_labels(int n) {
  std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

/// Canonical partitions of [n] into exactly k blocks of size >= min_block.
template <class Visitor>
void enumerate_set_partitions(int n, int k, int min_block, Visitor&& visit) {
  if (n < 0 || k < 0) throw std::invalid_argument("enumerate_set_partitions: n and k must be nonnegative");
  if (min_block < 1) throw std::invalid_argument("enumerate_set_partitions: min_block must be positive");
  auto labels = iota_labels(n);
  for_each_partition_of(labels, static_cast<std::size_t>(k), static_cast<std::size_t>(k), static_cast<std::size_t>(min_block),
                        [&](const std::vector<Block>& blocks) { visit(SetPartition{n, blocks}); });
}

/// Visits every ordering of each partition in `for_each_partition_of`.
template <class Visitor>
void for_each_ordered_partition_of(const std::vector<int>& labels, Visitor&& visit) {
  for_each_partition_of(labels, 1, labels.size(), 1, [&](const std::vector<Block>& blocks) {
    std::vector<std::size_t> perm(blocks.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Block> ordered(blocks.size());
    do {
      for (std::size_t i = 0; i < perm.size(); ++i) ordered[i] = blocks[perm[i]];
      visit(static_cast<const std::vector<Block>&>(ordered));
    } while (std::next_permutation(perm.begin(), perm.end()));
  });
}

template <class Visitor>
void enumerate_ordered_partitions(int n, Visitor&& visit) {
  if (n < 1) throw std::invalid_argument("enumerate_ordered_partitions: n must be >= 1");
  for_each_ordered_partition_of(iota_labels(n), [&](const std::vector<Block>& blocks) { visit(OrderedPartition{n, blocks}); });
}

// ---------------------------------------------------------------------------
// Schroeder trees
// ---------------------------------------------------------------------------

/// A labeled rooted tree whose children at each vertex carry an ordered
/// partition. Within a block, subtrees are kept in ascending root-label order.
/// The increasing variant uses the same representation (see is_increasing).
struct SchroederTree {
  int label = 1;
  std::vector<std::vector<SchroederTree>> blocks;
  friend bool operator==(const SchroederTree&, const SchroederTree&) = default;
};

inline std::size_t vertex_count(const SchroederTree& t) {
  std::size_t n = 1;
  for (const auto& b : t.blocks)
    for (const auto& c : b) n += vertex_count(c);
  return n;
}

inline std::size_t block_count(const SchroederTree& t) {
  std::size_t k = t.blocks.size();
  for (const auto& b : t.blocks)
    for (const auto& c : b) k += block_count(c);
  return k;
}

inline void collect_labels(const SchroederTree& t, std::vector<int>& out) {
  out.push_back(t.label);
  for (const auto& b : t.blocks)
    for (const auto& c : b) collect_labels(c, out);
}

inline std::vector<int> labels_of(const SchroederTree& t) {
  std::vector<int> out;
  collect_labels(t, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// Children of the root in ascending label order.
inline std::vector<const SchroederTree*> children_by_label(const SchroederTree& t) {
  std::vector<const SchroederTree*> kids;
  for (const auto& b : t.blocks)
    for (const auto& c : b) kids.push_back(&c);
  std::sort(kids.begin(), kids.end(), [](auto* a, auto* b) { return a->label < b->label; });
  return kids;
}

/// Map child label -> parent label. The root maps to 0.
inline std::map<int, int> parent_map(const SchroederTree& t) {
  std::map<int, int> parents;
  auto walk = [&](auto& self, const SchroederTree& v, int parent) -> void {
    parents[v.label] = parent;
    for (const auto& b : v.blocks)
      for (const auto& c : b) self(self, c, v.label);
  };
  walk(walk, t, 0);
  return parents;
}

/// Distinct labels, nonempty blocks, each block ascending by root label.
inline bool is_canonical(const SchroederTree& t) {
  auto labels = labels_of(t);
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) return false;
  auto walk = [&](auto& self, const SchroederTree& v) -> bool {
    for (const auto& b : v.blocks) {
      if (b.empty()) return false;
      for (std::size_t i = 1; i < b.size(); ++i)
        if (b[i - 1].label >= b[i].label) return false;
      for (const auto& c : b)
        if (!self(self, c)) return false;
    }
    return true;
  };
  return walk(walk, t);
}

inline bool is_increasing(const SchroederTree& t) {
  for (const auto& b : t.blocks)
    for (const auto& c : b)
      if (c.label <= t.label || !is_increasing(c)) return false;
  return true;
}

inline SchroederTree canonicalize(SchroederTree t) {
  for (auto& b : t.blocks) {
    for (auto& c : b) c = canonicalize(std::move(c));
    std::sort(b.begin(), b.end(), [](const SchroederTree& x, const SchroederTree& y) { return x.label < y.label; });
  }
  return t;
}

/// Multiset of block sizes.
inline TypeVector type_of(const SchroederTree& t) {
  TypeVector type;
  auto walk = [&](auto& self, const SchroederTree& v) -> void {
    for (const auto& b : v.blocks) {
      type.add(static_cast<int>(b.size()));
      for (const auto& c : b) self(self, c);
    }
  };
  walk(walk, t);
  return type;
}

/// (-1)^(n+k-1) = prod over blocks of (-1)^(|B|+1).
inline int sign_of(const SchroederTree& t) {
  return sign_power(static_cast<long long>(vertex_count(t)) + static_cast<long long>(block_count(t)) - 1);
}

inline ExactRat weight_of(const SchroederTree& t, const WeightSystem& w) { return weight_of(type_of(t), w); }

namespace detail {

using TreeSink = std::function<void(const SchroederTree&)>;

inline void for_each_forest(const std::vector<Block>& parts, bool increasing, std::size_t idx, std::vector<SchroederTree>& forest,
                            const std::function<void(const std::vector<SchroederTree>&)>& sink);

inline void for_each_schroeder_on(const std::vector<int>& labels, bool increasing, const TreeSink& sink) {
  if (labels.empty()) return;
  const std::size_t root_choices = increasing ? 1 : labels.size();
  for (std::size_t r = 0; r < root_choices; ++r) {
    std::vector<int> rest;
    rest.reserve(labels.size() - 1);
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (i != r) rest.push_back(labels[i]);
    const int root = labels[r];
    if (rest.empty()) {
      sink(SchroederTree{root, {}});
      continue;
    }
    for_each_partition_of(rest, 1, rest.size(), 1, [&](const std::vector<Block>& parts) {
      std::vector<SchroederTree> forest;
      forest.reserve(parts.size());
      for_each_forest(parts, increasing, 0, forest, [&](const std::vector<SchroederTree>& subtrees) {
        std::vector<int> idx(subtrees.size());
        std::iota(idx.begin(), idx.end(), 0);
        for_each_ordered_partition_of(idx, [&](const std::vector<Block>& arrangement) {
          SchroederTree t{root, {}};
          t.blocks.reserve(arrangement.size());
          for (const auto& blk : arrangement) {
            std::vector<SchroederTree> block;
            block.reserve(blk.size());
            for (int i : blk) block.push_back(subtrees[static_cast<std::size_t>(i)]);
            std::sort(block.begin(), block.end(), [](const SchroederTree& x, const SchroederTree& y) { return x.label < y.label; });
            t.blocks.push_back(std::move(block));
          }
          sink(t);
        });
      });
    });
  }
}

inline void for_each_forest(const std::vector<Block>& parts, bool increasing, std::size_t idx, std::vector<SchroederTree>& forest,
                            const std::function<void(const std::vector<SchroederTree>&)>& sink) {
  if (idx == parts.size()) {
    sink(forest);
    return;
  }
  for_each_schroeder_on(parts[idx], increasing, [&](const SchroederTree& t) {
    forest.push_back(t);
    for_each_forest(parts, increasing, idx + 1, forest, sink);
    forest.pop_back();
  });
}

}  // namespace detail

/// All Schroeder trees on an ascending label set.
inline void for_each_schroeder_tree_on(const std::vector<int>& labels, const detail::TreeSink& visit) {
  detail::for_each_schroeder_on(labels, false, visit);
}

inline void for_each_increasing_schroeder_tree_on(const std::vector<int>& labels, const detail::TreeSink& visit) {
  detail::for_each_schroeder_on(labels, true, visit);
}

inline void enumerate_schroeder_trees(int n, const detail::TreeSink& visit) {
  if (n < 1) throw std::invalid_argument("enumerate_schroeder_trees: n must be >= 1");
  for_each_schroeder_tree_on(iota_labels(n), visit);
}

inline void enumerate_increasing_schroeder_trees(int n, const detail::TreeSink& visit) {
  if (n < 1) throw std::invalid_argument("enumerate_increasing_schroeder_trees: n must be >= 1");
  for_each_increasing_schroeder_tree_on(iota_labels(n), visit);
}

// ---------------------------------------------------------------------------
// Enriched increasing Schroeder trees
// ---------------------------------------------------------------------------

/// Visits blocks in preorder: a vertex's own blocks left to right, then the
/// children block by block. This is the order `stars` follows.
template <class Fn>
void for_each_block_preorder(const SchroederTree& t, Fn&& fn) {
  auto walk = [&](auto& self, const SchroederTree& v) -> void {
    for (const auto& b : v.blocks) fn(b);
    for (const auto& b : v.blocks)
      for (const auto& c : b) self(self, c);
  };
  walk(walk, t);
}

/// An increasing Schroeder tree with a star in one of |B|+1 slots per block:
/// 0 is before the first vertex, p is right after the p-th (ascending) vertex.
struct EnrichedSchroederTree {
  SchroederTree tree;
  std::vector<int> stars;
  friend bool operator==(const EnrichedSchroederTree&, const EnrichedSchroederTree&) = default;
};

inline std::vector<std::size_t> block_sizes_preorder(const SchroederTree& t) {
  std::vector<std::size_t> sizes;
  for_each_block_preorder(t, [&](const auto& b) { sizes.push_back(b.size()); });
  return sizes;
}

inline bool is_valid(const EnrichedSchroederTree& e) {
  if (!is_canonical(e.tree) || !is_increasing(e.tree)) return false;
  auto sizes = block_sizes_preorder(e.tree);
  if (sizes.size() != e.stars.size()) return false;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    if (e.stars[i] < 0 || static_cast<std::size_t>(e.stars[i]) > sizes[i]) return false;
  return true;
}

inline TypeVector type_of(const EnrichedSchroederTree& e) { return type_of(e.tree); }
inline int sign_of(const EnrichedSchroederTree& e) { return sign_of(e.tree); }
inline ExactRat weight_of(const EnrichedSchroederTree& e, const WeightSystem& w) { return weight_of(type_of(e), w); }

/// Each increasing tree expanded by every star placement (odometer order).
inline void enumerate_enriched_trees(int n, const std::function<void(const EnrichedSchroederTree&)>& visit) {
  enumerate_increasing_schroeder_trees(n, [&](const SchroederTree& t) {
    auto sizes = block_sizes_preorder(t);
    EnrichedSchroederTree e{t, std::vector<int>(sizes.size(), 0)};
    while (true) {
      visit(e);
      std::size_t i = 0;
      for (; i < sizes.size(); ++i) {
        if (static_cast<std::size_t>(e.stars[i]) < sizes[i]) {
          ++e.stars[i];
          break;
        }
        e.stars[i] = 0;
      }
      if (i == sizes.size()) break;
    }
  });
}

// ---------------------------------------------------------------------------
// Total partition trees and semi-labeled trees
// ---------------------------------------------------------------------------

/// Semi-labeled rooted tree: a leaf carries a label, an internal vertex is
/// unlabeled. Children are kept sorted by minimum leaf descendant. A total
/// partition tree additionally has >= 2 children at every internal vertex.
struct TotalPartitionTree {
  int leaf = 0;
  std::vector<TotalPartitionTree> children;
  bool is_leaf() const { return children.empty(); }
  friend bool operator==(const TotalPartitionTree&, const TotalPartitionTree&) = default;
};

inline TotalPartitionTree make_leaf(int label) { return TotalPartitionTree{label, {}}; }
inline TotalPartitionTree make_internal(std::vector<TotalPartitionTree> children) { return TotalPartitionTree{0, std::move(children)}; }

inline int min_leaf(const TotalPartitionTree& t) {
  if (t.is_leaf()) return t.leaf;
  int m = min_leaf(t.children.front());
  for (const auto& c : t.children) m = std::min(m, min_leaf(c));
  return m;
}

inline void collect_leaves(const TotalPartitionTree& t, std::vector<int>& out) {
  if (t.is_leaf()) {
    out.push_back(t.leaf);
    return;
  }
  for (const auto& c : t.children) collect_leaves(c, out);
}

inline std::vector<int> leaves_of(const TotalPartitionTree& t) {
  std::vector<int> out;
  collect_leaves(t, out);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t internal_count(const TotalPartitionTree& t) {
  if (t.is_leaf()) return 0;
  std::size_t k = 1;
  for (const auto& c : t.children) k += internal_count(c);
  return k;
}

/// Distinct positive leaf labels and children sorted by minimum leaf.
inline bool is_canonical(const TotalPartitionTree& t) {
  auto leaves = leaves_of(t);
  if (leaves.empty() || leaves.front() < 1) return false;
  if (std::adjacent_find(leaves.begin(), leaves.end()) != leaves.end()) return false;
  auto walk = [&](auto& self, const TotalPartitionTree& v) -> bool {
    if (v.is_leaf()) return true;
    if (v.leaf != 0) return false;
    for (std::size_t i = 1; i < v.children.size(); ++i)
      if (min_leaf(v.children[i - 1]) > min_leaf(v.children[i])) return false;
    for (const auto& c : v.children)
      if (!self(self, c)) return false;
    return true;
  };
  return walk(walk, t);
}

/// Every internal vertex has at least two children.
inline bool is_total_partition_tree(const TotalPartitionTree& t) {
  if (t.is_leaf()) return true;
  if (t.children.size() < 2) return false;
  return std::all_of(t.children.begin(), t.children.end(), [](const auto& c) { return is_total_partition_tree(c); });
}

inline TotalPartitionTree canonicalize(TotalPartitionTree t) {
  for (auto& c : t.children) c = canonicalize(std::move(c));
  std::sort(t.children.begin(), t.children.end(), [](const auto& a, const auto& b) { return min_leaf(a) < min_leaf(b); });
  return t;
}

/// An internal vertex with c children contributes c-1. Unary vertices have
/// no Ward type; use child_count_profile for semi-labeled trees.
inline TypeVector type_of(const TotalPartitionTree& t) {
  TypeVector type;
  auto walk = [&](auto& self, const TotalPartitionTree& v) -> void {
    if (v.is_leaf()) return;
    if (v.children.size() < 2) throw std::invalid_argument("type_of: unary internal vertex has no Ward type");
    type.add(static_cast<int>(v.children.size()) - 1);
    for (const auto& c : v.children) self(self, c);
  };
  walk(walk, t);
  return type;
}

/// Multiset of internal-vertex child counts.
inline TypeVector child_count_profile(const TotalPartitionTree& t) {
  TypeVector type;
  auto walk = [&](auto& self, const TotalPartitionTree& v) -> void {
    if (v.is_leaf()) return;
    type.add(static_cast<int>(v.children.size()));
    for (const auto& c : v.children) self(self, c);
  };
  walk(walk, t);
  return type;
}

inline ExactRat weight_of(const TotalPartitionTree& t, const WeightSystem& w) { return weight_of(type_of(t), w); }

namespace detail {

using TptSink = std::function<void(const TotalPartitionTree&)>;

inline void product_of(const std::vector<std::function<void(const TptSink&)>>& factors, std::size_t idx,
                       std::vector<TotalPartitionTree>& acc, const std::function<void(const std::vector<TotalPartitionTree>&)>& sink) {
  if (idx == factors.size()) {
    sink(acc);
    return;
  }
  factors[idx]([&](const TotalPartitionTree& t) {
    acc.push_back(t);
    product_of(factors, idx + 1, acc, sink);
    acc.pop_back();
  });
}

inline void for_each_total_on(const std::vector<int>& labels, const TptSink& sink) {
  if (labels.empty()) return;
  if (labels.size() == 1) {
    sink(make_leaf(labels.front()));
    return;
  }
  for_each_partition_of(labels, 2, labels.size(), 1, [&](const std::vector<Block>& parts) {
    std::vector<std::function<void(const TptSink&)>> factors;
    for (const auto& p : parts) factors.emplace_back([p](const TptSink& s) { for_each_total_on(p, s); });
    std::vector<TotalPartitionTree> acc;
    product_of(factors, 0, acc, [&](const std::vector<TotalPartitionTree>& kids) { sink(make_internal(kids)); });
  });
}

inline void for_each_semilabeled_on(const std::vector<int>& labels, int internal, const TptSink& sink) {
  if (labels.empty() || internal < 0) return;
  if (internal == 0) {
    if (labels.size() == 1) sink(make_leaf(labels.front()));
    return;
  }
  for_each_partition_of(labels, 1, labels.size(), 1, [&](const std::vector<Block>& parts) {
    // distribute internal-1 vertices over the parts
    std::vector<int> alloc(parts.size(), 0);
    auto distribute = [&](auto& self, std::size_t i, int left) -> void {
      if (i + 1 == parts.size()) {
        alloc[i] = left;
        std::vector<std::function<void(const TptSink&)>> factors;
        for (std::size_t j = 0; j < parts.size(); ++j)
          factors.emplace_back([p = parts[j], m = alloc[j]](const TptSink& s) { for_each_semilabeled_on(p, m, s); });
        std::vector<TotalPartitionTree> acc;
        product_of(factors, 0, acc, [&](const std::vector<TotalPartitionTree>& kids) { sink(make_internal(kids)); });
        return;
      }
      for (int m = 0; m <= left; ++m) {
        alloc[i] = m;
        self(self, i + 1, left - m);
      }
    };
    distribute(distribute, 0, internal - 1);
  });
}

}  // namespace detail

/// All total partition trees with leaf set `labels`.
inline void for_each_total_partition_tree_on(const std::vector<int>& labels, const detail::TptSink& visit) {
  detail::for_each_total_on(labels, visit);
}

inline void enumerate_total_partition_trees(int n, const detail::TptSink& visit) {
  if (n < 1) throw std::invalid_argument("enumerate_total_partition_trees: n must be >= 1");
  detail::for_each_total_on(iota_labels(n), visit);
}

/// Semi-labeled rooted trees on leaves [num_leaves] with exactly
/// `num_internal` unlabeled internal vertices, unary vertices allowed.
inline void enumerate_semilabeled_trees(int num_leaves, int num_internal, const detail::TptSink& visit) {
  if (num_leaves < 1 || num_internal < 1) throw std::invalid_argument("enumerate_semilabeled_trees: both counts must be >= 1");
  detail::for_each_semilabeled_on(iota_labels(num_leaves), num_internal, visit);
}

// ---------------------------------------------------------------------------
// Meadows
// ---------------------------------------------------------------------------

struct SmallTree {
  int root = 0;
  std::vector<int> leaves;  // ascending, nonempty
  friend bool operator==(const SmallTree&, const SmallTree&) = default;
};

/// Small trees sorted by minimum vertex.
struct Meadow {
  std::vector<SmallTree> trees;
  friend bool operator==(const Meadow&, const Meadow&) = default;
};

inline bool is_increasing(const SmallTree& s) { return !s.leaves.empty() && s.root < s.leaves.front(); }
inline bool is_increasing(const Meadow& m) {
  return std::all_of(m.trees.begin(), m.trees.end(), [](const SmallTree& s) { return is_increasing(s); });
}

/// A small tree on i+1 vertices contributes i.
inline TypeVector type_of(const Meadow& m) {
  TypeVector t;
  for (const auto& s : m.trees) t.add(static_cast<int>(s.leaves.size()));
  return t;
}

inline ExactRat weight_of(const Meadow& m, const WeightSystem& w) { return weight_of(type_of(m), w); }

/// Meadows on [m] with k small trees. Each block of a partition of [m] into
/// k blocks of size >= 2 is rooted at each of its vertices (or only at its
/// minimum when `increasing`).
inline void enumerate_meadows(int m, int k, bool increasing, const std::function<void(const Meadow&)>& visit) {
  if (m < 0 || k < 0) throw std::invalid_argument("enumerate_meadows: m and k must be nonnegative");
  if (m < 2 * k) throw std::invalid_argument("enumerate_meadows: need m >= 2k");
  auto labels = iota_labels(m);
  for_each_partition_of(labels, static_cast<std::size_t>(k), static_cast<std::size_t>(k), 2, [&](const std::vector<Block>& blocks) {
    std::vector<std::size_t> root_idx(blocks.size(), 0);
    while (true) {
      Meadow md;
      md.trees.reserve(blocks.size());
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        SmallTree s{blocks[b][root_idx[b]], {}};
        for (std::size_t i = 0; i < blocks[b].size(); ++i)
          if (i != root_idx[b]) s.leaves.push_back(blocks[b][i]);
        md.trees.push_back(std::move(s));
      }
      visit(md);
      if (increasing) break;
      std::size_t b = 0;
      for (; b < blocks.size(); ++b) {
        if (++root_idx[b] < blocks[b].size()) break;
        root_idx[b] = 0;
      }
      if (b == blocks.size()) break;
    }
  });
}

}  // namespace wardcomb
