#pragma once

// Constructive bijections and sign-reversing involutions, plus count-level
// checkers for the correspondences whose explicit maps live elsewhere.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wardcomb/exactmath.hpp"
#include "wardcomb/structures.hpp"
#include "wardcomb/weights.hpp"

namespace wardcomb {

/// Raised when an involution is applied to one of its fixed points.
class FixedPointError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// ---------------------------------------------------------------------------
// Total partition trees <-> increasing Schroeder trees
// ---------------------------------------------------------------------------

/// The first partition's blocks, ordered by minima m_1 < ... < m_k, become
/// T_1..T_k. The root m_1 gets a new leftmost block {m_2..m_k} carrying
/// T_2..T_k, followed by the root blocks of T_1.
inline SchroederTree total_to_increasing(const TotalPartitionTree& input) {
  if (!is_total_partition_tree(input)) throw std::invalid_argument("total_to_increasing: internal vertex with fewer than two children");
  auto build = [](auto& self, const TotalPartitionTree& t) -> SchroederTree {
    if (t.is_leaf()) return SchroederTree{t.leaf, {}};
    std::vector<SchroederTree> parts;
    parts.reserve(t.children.size());
    for (const auto& c : t.children) parts.push_back(self(self, c));
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.label < b.label; });
    SchroederTree result{parts.front().label, {}};
    result.blocks.reserve(parts.front().blocks.size() + 1);
    result.blocks.emplace_back(std::make_move_iterator(parts.begin() + 1), std::make_move_iterator(parts.end()));
    for (auto& b : parts.front().blocks) result.blocks.push_back(std::move(b));
    return result;
  };
  return build(build, input);
}

/// Inverse of total_to_increasing: peel the root's leftmost block off.
inline TotalPartitionTree increasing_to_total(const SchroederTree& input) {
  if (!is_increasing(input)) throw std::invalid_argument("increasing_to_total: tree is not increasing");
  if (!is_canonical(input)) throw std::invalid_argument("increasing_to_total: tree is not canonical");
  auto build = [](auto& self, const SchroederTree& t) -> TotalPartitionTree {
    if (t.blocks.empty()) return make_leaf(t.label);
    SchroederTree rest{t.label, {t.blocks.begin() + 1, t.blocks.end()}};
    std::vector<TotalPartitionTree> kids;
    kids.reserve(t.blocks.front().size() + 1);
    kids.push_back(self(self, rest));
    for (const auto& c : t.blocks.front()) kids.push_back(self(self, c));
    return make_internal(std::move(kids));
  };
  return build(build, input);
}

// ---------------------------------------------------------------------------
// psi': sign-reversing involution on ordered partitions
// ---------------------------------------------------------------------------

namespace detail {

// An ordered partition of [n] as a surjection word: word[v-1] is the
// 0-based index of the block holding v; `k` is the number of blocks and
// counts[b] the size of block b (kept up to date; needs room for k+1 entries).
// Entries of `word` past n must be negative; a fixed extent lets the relabel
// loops run over the whole padded buffer without branches.
// Returns false (and leaves everything untouched) at the fixed point.
template <std::size_t Extent>
inline bool psi_prime_step(std::span<int, Extent> word, int n, int& k, std::span<int> counts) {
  int* w = word.data();
  int* c = counts.data();
  const int width = static_cast<int>(word.size());
  int i = 0;
  while (i < n && w[i] == i && c[i] == 1) ++i;
  if (i == n) return false;
  const int s = w[i];
  if (c[s] == 1) {
    // {i+1} is its own block: merge it into the block before it
    for (int v = 0; v < width; ++v) w[v] -= w[v] >= s ? 1 : 0;
    ++c[s - 1];
    for (int b = s; b + 1 < k; ++b) c[b] = c[b + 1];
    c[k - 1] = 0;
    --k;
  } else {
    // split i+1 off into a new block right after its current one
    for (int v = 0; v < width; ++v) w[v] += w[v] > s ? 1 : 0;
    w[i] = s + 1;
    for (int b = k; b > s + 1; --b) c[b] = c[b - 1];
    --c[s];
    c[s + 1] = 1;
    ++k;
  }
  return true;
}

inline bool psi_prime_word(std::span<int> word, int& k, std::span<int> scratch_counts) {
  std::fill(scratch_counts.begin(), scratch_counts.begin() + k + 1, 0);
  for (int b : word) ++scratch_counts[static_cast<std::size_t>(b)];
  return psi_prime_step(word, static_cast<int>(word.size()), k, scratch_counts);
}

inline std::vector<int> to_word(const OrderedPartition& op) {
  std::vector<int> word(static_cast<std::size_t>(op.n), -1);
  for (std::size_t b = 0; b < op.blocks.size(); ++b)
    for (int v : op.blocks[b]) word[static_cast<std::size_t>(v - 1)] = static_cast<int>(b);
  return word;
}

inline OrderedPartition from_word(const std::vector<int>& word, int k) {
  OrderedPartition op{static_cast<int>(word.size()), std::vector<Block>(static_cast<std::size_t>(k))};
  for (std::size_t v = 0; v < word.size(); ++v) op.blocks[static_cast<std::size_t>(word[v])].push_back(static_cast<int>(v) + 1);
  return op;
}

}  // namespace detail

inline bool is_psi_prime_fixed_point(const OrderedPartition& op) {
  if (static_cast<int>(op.blocks.size()) != op.n) return false;
  for (std::size_t i = 0; i < op.blocks.size(); ++i)
    if (op.blocks[i].size() != 1 || op.blocks[i][0] != static_cast<int>(i) + 1) return false;
  return true;
}

/// With i the length of the singleton prefix [{1},...,{i}] and B_s the block
/// holding i+1: if B_s = {i+1}, merge B_{s-1} and B_s; otherwise split B_s
/// into B_s \ {i+1} followed by {i+1}.
inline OrderedPartition psi_prime(const OrderedPartition& input) {
  auto op = canonicalize(input);
  if (!is_valid(op)) throw std::invalid_argument("psi_prime: not an ordered partition of [n]");
  auto word = detail::to_word(op);
  int k = static_cast<int>(op.blocks.size());
  std::vector<int> counts(static_cast<std::size_t>(op.n) + 1);
  if (!detail::psi_prime_word(word, k, counts)) throw FixedPointError("psi_prime: input is the unique fixed point [{1},...,{n}]");
  return detail::from_word(word, k);
}

// ---------------------------------------------------------------------------
// psi_n: sign-reversing involution on Schroeder trees
// ---------------------------------------------------------------------------

/// All blocks singletons and every vertex lists its children in increasing
/// label order.
inline bool is_psi_fixed_point(const SchroederTree& t) {
  for (std::size_t i = 0; i < t.blocks.size(); ++i) {
    if (t.blocks[i].size() != 1) return false;
    if (i > 0 && t.blocks[i - 1][0].label >= t.blocks[i][0].label) return false;
  }
  for (const auto& b : t.blocks)
    for (const auto& c : b)
      if (!is_psi_fixed_point(c)) return false;
  return true;
}

/// Scans the root's subtrees by ascending child label and applies psi to the
/// first non-fixed one; if all are fixed, applies psi' to the root's block
/// partition with children ranked 1..s by label.
inline SchroederTree psi_n(const SchroederTree& t) {
  if (is_psi_fixed_point(t)) throw FixedPointError("psi_n: input is a fixed point");
  const auto kids = children_by_label(t);
  for (const SchroederTree* kid : kids) {
    if (is_psi_fixed_point(*kid)) continue;
    SchroederTree image = t;
    for (auto& b : image.blocks)
      for (auto& c : b)
        if (c.label == kid->label) c = psi_n(c);
    return image;
  }

  std::map<int, int> rank;
  for (std::size_t r = 0; r < kids.size(); ++r) rank[kids[r]->label] = static_cast<int>(r) + 1;
  OrderedPartition op{static_cast<int>(kids.size()), {}};
  for (const auto& b : t.blocks) {
    Block ranked;
    for (const auto& c : b) ranked.push_back(rank.at(c.label));
    op.blocks.push_back(std::move(ranked));
  }
  const auto mapped = psi_prime(op);
  SchroederTree image{t.label, {}};
  for (const auto& b : mapped.blocks) {
    std::vector<SchroederTree> block;
    for (int r : b) block.push_back(*kids[static_cast<std::size_t>(r - 1)]);
    image.blocks.push_back(std::move(block));
  }
  return image;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct InvolutionReport {
  std::string family;
  int ground_size = 0;
  long long objects = 0;
  long long pairs_checked = 0;
  long long fixed_points = 0;
  long long violations = 0;
  ExactInt expected_fixed_points = 0;
  long long signed_sum = 0;
  ExactInt expected_signed_sum = 0;
  std::string first_violation;

  bool ok() const {
    return violations == 0 && ExactInt(fixed_points) == expected_fixed_points && ExactInt(signed_sum) == expected_signed_sum;
  }
};

/// Per-type tallies of two families that should agree.
struct EqualityReport {
  std::string name;
  std::map<std::string, long long> params;
  ExactRat left_total = 0;
  ExactRat right_total = 0;
  std::map<std::string, std::pair<ExactRat, ExactRat>> per_type;  // key -> (left, right)

  bool ok() const {
    if (left_total != right_total) return false;
    for (const auto& [key, lr] : per_type)
      if (lr.first != lr.second) return false;
    return true;
  }
};

namespace detail {

inline std::string tally_key(long long k, const TypeVector& t) { return "k=" + std::to_string(k) + " type=" + t.str(); }

}  // namespace detail

/// Exhaustive check of psi' on OP(n).
inline InvolutionReport check_psi_prime(int n) {
  InvolutionReport r;
  r.family = "ordered-partitions";
  r.ground_size = n;
  r.expected_fixed_points = 1;
  r.expected_signed_sum = 1;  // the fixed point has sign (-1)^(n+n)
  enumerate_ordered_partitions(n, [&](const OrderedPartition& op) {
    ++r.objects;
    r.signed_sum += sign_of(op);
    if (is_psi_prime_fixed_point(op)) {
      ++r.fixed_points;
      return;
    }
    auto image = psi_prime(op);
    bool good = is_valid(image) && !is_psi_prime_fixed_point(image) && image != op && sign_of(image) == -sign_of(op) &&
                psi_prime(image) == op;
    if (!good) {
      ++r.violations;
      if (r.first_violation.empty()) r.first_violation = "psi' failed on an ordered partition with " + std::to_string(op.blocks.size()) + " blocks";
    }
    ++r.pairs_checked;
  });
  r.pairs_checked /= 2;
  return r;
}

/// Exhaustive check of psi_n on all (or only increasing) Schroeder trees on [n].
inline InvolutionReport check_psi_n(int n, bool increasing_only) {
  InvolutionReport r;
  r.family = increasing_only ? "increasing-schroeder" : "schroeder";
  r.ground_size = n;
  r.expected_fixed_points = increasing_only ? factorial(n - 1) : ipow(ExactInt(n), static_cast<unsigned>(n - 1));
  r.expected_signed_sum = r.expected_fixed_points;
  auto visit = [&](const SchroederTree& t) {
    ++r.objects;
    r.signed_sum += sign_of(t);
    if (is_psi_fixed_point(t)) {
      ++r.fixed_points;
      return;
    }
    auto image = psi_n(t);
    bool good = is_canonical(image) && image != t && !is_psi_fixed_point(image) && sign_of(image) == -sign_of(t) &&
                parent_map(image) == parent_map(t) && (!is_increasing(t) || is_increasing(image)) && psi_n(image) == t;
    if (!good) {
      ++r.violations;
      if (r.first_violation.empty()) r.first_violation = "psi_n failed on a tree rooted at " + std::to_string(t.label);
    }
    ++r.pairs_checked;
  };
  if (increasing_only)
    enumerate_increasing_schroeder_trees(n, visit);
  else
    enumerate_schroeder_trees(n, visit);
  r.pairs_checked /= 2;
  return r;
}

/// Signed count of enriched increasing Schroeder trees on [n]; expected n^(n-1).
inline InvolutionReport check_enriched_signed_count(int n) {
  InvolutionReport r;
  r.family = "enriched-increasing-schroeder";
  r.ground_size = n;
  r.expected_signed_sum = ipow(ExactInt(n), static_cast<unsigned>(n - 1));
  r.expected_fixed_points = 0;
  enumerate_enriched_trees(n, [&](const EnrichedSchroederTree& e) {
    ++r.objects;
    r.signed_sum += sign_of(e);
  });
  return r;
}

struct TreeMeadowReport {
  EqualityReport plain;
  EqualityReport increasing;
  bool ok() const { return plain.ok() && increasing.ok(); }
};

namespace detail {

inline EqualityReport tree_meadow_side(int n, int k, const WeightSystem& weights, bool increasing) {
  EqualityReport rep;
  rep.name = increasing ? "increasing-schroeder-vs-increasing-meadows" : "schroeder-vs-meadows";
  rep.params = {{"n", n}, {"k", k}};
  auto tree_visit = [&](const SchroederTree& t) {
    if (k >= 0 && static_cast<int>(block_count(t)) != k) return;
    auto type = type_of(t);
    auto w = weight_of(type, weights);
    rep.per_type[tally_key(static_cast<long long>(block_count(t)), type)].first += 1;
    rep.left_total += w;
  };
  if (increasing)
    enumerate_increasing_schroeder_trees(n, tree_visit);
  else
    enumerate_schroeder_trees(n, tree_visit);
  const int k_lo = k >= 0 ? k : 0;
  const int k_hi = k >= 0 ? k : n - 1;
  for (int kk = k_lo; kk <= k_hi; ++kk) {
    const int m = n + kk - 1;
    if (m < 2 * kk) continue;
    enumerate_meadows(m, kk, increasing, [&](const Meadow& md) {
      auto type = type_of(md);
      rep.per_type[tally_key(kk, type)].second += 1;
      rep.right_total += weight_of(type, weights);
    });
  }
  return rep;
}

}  // namespace detail

/// Schroeder trees with n vertices and k blocks against meadows on n+k-1
/// vertices with k small trees, per type, for the plain and increasing
/// families. Totals are weighted; per-type entries are raw counts. k < 0
/// means every k.
inline TreeMeadowReport check_tree_meadow_counts(int n, int k, const WeightSystem& weights) {
  return TreeMeadowReport{detail::tree_meadow_side(n, k, weights, false), detail::tree_meadow_side(n, k, weights, true)};
}

/// Semi-labeled trees with n+1 leaves and k internal vertices against
/// partitions of [n+k] into k blocks; an internal vertex with c children
/// corresponds to a block of size c.
inline EqualityReport check_semilabeled_counts(int n, int k) {
  EqualityReport rep;
  rep.name = "semilabeled-vs-set-partitions";
  rep.params = {{"n", n}, {"k", k}};
  enumerate_semilabeled_trees(n + 1, k, [&](const TotalPartitionTree& t) {
    rep.per_type[detail::tally_key(k, child_count_profile(t))].first += 1;
    rep.left_total += 1;
  });
  enumerate_set_partitions(n + k, k, 1, [&](const SetPartition& p) {
    rep.per_type[detail::tally_key(k, block_size_profile(p))].second += 1;
    rep.right_total += 1;
  });
  return rep;
}

/// Weight of Schroeder trees under g against increasing Schroeder trees
/// under (i+1) g_i, by block count. Per-type entries compare the tree count
/// against the sum of prod (|B|+1), which makes the check symbolic in g.
inline EqualityReport check_weight_transfer(int n, const WeightSystem& weights) {
  EqualityReport rep;
  rep.name = "weight-transfer";
  rep.params = {{"n", n}};
  std::map<long long, std::pair<ExactRat, ExactRat>> by_k;
  enumerate_schroeder_trees(n, [&](const SchroederTree& t) {
    auto type = type_of(t);
    auto k = static_cast<long long>(block_count(t));
    auto w = weight_of(type, weights);
    by_k[k].first += w;
    rep.left_total += w;
    rep.per_type[detail::tally_key(k, type)].first += 1;
  });
  enumerate_increasing_schroeder_trees(n, [&](const SchroederTree& t) {
    auto type = type_of(t);
    auto k = static_cast<long long>(block_count(t));
    ExactRat w = 1;
    ExactInt mult = 1;
    for (auto [size, count] : type.parts()) {
      w *= rpow(ExactRat(size + 1) * weights(static_cast<std::size_t>(size)), static_cast<unsigned>(count));
      mult *= ipow(ExactInt(size + 1), static_cast<unsigned>(count));
    }
    by_k[k].second += w;
    rep.right_total += w;
    rep.per_type[detail::tally_key(k, type)].second += ExactRat(mult);
  });
  for (const auto& [k, lr] : by_k) rep.per_type["k=" + std::to_string(k) + " weighted"] = lr;
  return rep;
}

/// Enriched increasing Schroeder trees against Schroeder trees, per (k, type).
inline EqualityReport check_enriched_counts(int n) {
  EqualityReport rep;
  rep.name = "enriched-vs-schroeder";
  rep.params = {{"n", n}};
  enumerate_enriched_trees(n, [&](const EnrichedSchroederTree& e) {
    rep.per_type[detail::tally_key(static_cast<long long>(block_count(e.tree)), type_of(e))].first += 1;
    rep.left_total += 1;
  });
  enumerate_schroeder_trees(n, [&](const SchroederTree& t) {
    rep.per_type[detail::tally_key(static_cast<long long>(block_count(t)), type_of(t))].second += 1;
    rep.right_total += 1;
  });
  return rep;
}

namespace detail {

// Walks every surjection word [n] -> [k]. A word is either the fixed point,
// on the merge side (i+1 is alone in its block) or on the split side. Each
// split-side word is sent through psi' and back; that makes psi' injective
// from the split side into the merge side, so equal side counts make it a
// bijection and every merge-side word is paired without being mapped twice.
// Fixed-size buffers keep this hot loop in registers.
struct SurjectionPairing {
  static constexpr int max_n = 14;
  static constexpr std::size_t width = 16;
  int n;
  int k = 0;
  int unused = 0;
  std::array<int, width> word{}, image{};
  std::array<int, max_n + 2> counts{}, image_counts{};
  long long surviving = 0;
  long long splits = 0;
  long long merges = 0;
  long long violations = 0;

  explicit SurjectionPairing(int size) : n(size) {
    if (n > max_n) throw std::invalid_argument("surjection pairing supports n <= " + std::to_string(max_n));
    word.fill(-1);
  }

  void run(int blocks) {
    k = blocks;
    unused = k;
    counts.fill(0);
    fill(0);
  }

  void leaf() {
    int i = 0;
    while (i < n && word[static_cast<std::size_t>(i)] == i && counts[static_cast<std::size_t>(i)] == 1) ++i;
    if (i == n) {
      surviving += sign_power(k);
      return;
    }
    if (counts[static_cast<std::size_t>(word[static_cast<std::size_t>(i)])] == 1) {
      ++merges;
      return;
    }
    ++splits;
    image = word;
    image_counts = counts;
    int kk = k;
    const std::span<int, width> w(image);
    // the partner has one block more and maps back
    const bool moved = psi_prime_step(w, n, kk, image_counts) && kk == k + 1;
    int back_k = kk;
    if (!moved || !psi_prime_step(w, n, back_k, image_counts) || back_k != k || image != word) ++violations;
  }

  void fill(int pos) {
    if (pos + 1 == n) {
      // last letter: it must hit the one unused block, if any
      for (int b = 0; b < k; ++b) {
        if (unused == 1 && counts[static_cast<std::size_t>(b)] != 0) continue;
        word[static_cast<std::size_t>(pos)] = b;
        ++counts[static_cast<std::size_t>(b)];
        leaf();
        --counts[static_cast<std::size_t>(b)];
      }
      return;
    }
    for (int b = 0; b < k; ++b) {
      word[static_cast<std::size_t>(pos)] = b;
      if (counts[static_cast<std::size_t>(b)]++ == 0) --unused;
      if (n - pos - 1 >= unused) fill(pos + 1);
      if (--counts[static_cast<std::size_t>(b)] == 0) ++unused;
    }
  }
};

}  // namespace detail

struct AlternatingIdentityReport {
  int n = 0;
  ExactInt closed_form = 0;     // sum_k (-1)^k k! S(n,k)
  ExactInt paired = 0;          // what survives psi' cancellation
  ExactInt expected = 0;        // (-1)^n
  long long cancelled_pairs = 0;
  long long violations = 0;
  bool ok() const { return violations == 0 && closed_form == expected && paired == expected; }
};

/// sum_k (-1)^k k! S(n,k) = (-1)^n, once from the Stirling formula and once by
/// pairing every ordered partition of [n] with its psi' image.
inline AlternatingIdentityReport verify_alternating_stirling_identity(int n) {
  if (n < 1) throw std::invalid_argument("verify_alternating_stirling_identity: n must be >= 1");
  AlternatingIdentityReport r;
  r.n = n;
  r.expected = sign_power(n);
  for (int k = 0; k <= n; ++k) r.closed_form += ExactInt(sign_power(k)) * factorial(k) * stirling2(n, k);

  detail::SurjectionPairing walk(n);
  for (int k = 1; k <= n; ++k) walk.run(k);
  r.violations = walk.violations + (walk.splits == walk.merges ? 0 : 1);
  r.cancelled_pairs = walk.splits;
  r.paired = walk.surviving;
  return r;
}

}  // namespace wardcomb
