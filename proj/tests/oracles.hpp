#pragma once

// Brute-force reference computations for the test suites. Nothing here calls
// the library's counting kernels or generators; every value is obtained by
// direct enumeration or naive arithmetic.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "wardcomb/exactmath.hpp"

namespace oracle {

using wardcomb::ExactInt;
using wardcomb::ExactRat;

inline ExactInt product_range(long long lo, long long hi) {
  ExactInt p = 1;
  for (long long i = lo; i <= hi; ++i) p *= i;
  return p;
}

inline ExactInt fact(long long n) { return product_range(1, n); }

inline ExactInt binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  return product_range(n - k + 1, n) / fact(k);
}

inline ExactInt power(long long b, long long e) {
  ExactInt p = 1;
  for (long long i = 0; i < e; ++i) p *= b;
  return p;
}

// Restricted growth strings: every set partition of [n] exactly once.
inline void for_each_rgs(int n, const std::function<void(const std::vector<int>&, int)>& visit) {
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int blocks) {
    if (pos == n) {
      visit(a, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      a[static_cast<std::size_t>(pos)] = b;
      rec(pos + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) {
    visit(a, 0);
    return;
  }
  a[0] = 0;
  rec(1, 1);
}

inline std::vector<int> block_sizes(const std::vector<int>& rgs, int blocks) {
  std::vector<int> sizes(static_cast<std::size_t>(blocks), 0);
  for (int b : rgs) ++sizes[static_cast<std::size_t>(b)];
  return sizes;
}

/// Partitions of [n] into k blocks, each of size >= min_size, by brute force.
inline long long count_set_partitions(int n, int k, int min_size = 1) {
  long long c = 0;
  for_each_rgs(n, [&](const std::vector<int>& a, int blocks) {
    if (blocks != k) return;
    auto s = block_sizes(a, blocks);
    if (std::all_of(s.begin(), s.end(), [&](int x) { return x >= min_size; })) ++c;
  });
  return c;
}

/// Permutations of [n] with k cycles.
inline long long count_perms_with_cycles(int n, int k) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  long long c = 0;
  do {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
      if (seen[static_cast<std::size_t>(i)]) continue;
      ++cycles;
      for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p[static_cast<std::size_t>(j)]) seen[static_cast<std::size_t>(j)] = true;
    }
    if (cycles == k) ++c;
  } while (std::next_permutation(p.begin(), p.end()));
  return c;
}

/// Partitions of [n] into k nonempty linearly ordered lists.
inline long long count_lah(int n, int k) {
  long long c = 0;
  for_each_rgs(n, [&](const std::vector<int>& a, int blocks) {
    if (blocks != k) return;
    long long orders = 1;
    for (int s : block_sizes(a, blocks)) orders *= static_cast<long long>(fact(s));
    c += orders;
  });
  return c;
}

/// Ordered partitions of [n] = sum over set partitions of k!.
inline ExactInt count_ordered_partitions(int n) {
  ExactInt c = 0;
  for_each_rgs(n, [&](const std::vector<int>&, int blocks) { c += fact(blocks); });
  return c;
}

/// Schroeder tree counts t(1..max_n) from the decomposition
/// tree = root + sequence of nonempty sets of trees, by naive labeled
/// convolution. Increasing trees fix the root to the minimum label.
inline std::vector<ExactInt> schroeder_tree_counts(int max_n, bool increasing) {
  // t[n]: trees on n labeled vertices. set_of_trees[m]: nonempty sets of
  // trees covering m labeled vertices. seq[m]: sequences of such blocks.
  std::vector<ExactInt> t(static_cast<std::size_t>(max_n) + 1, 0), set_of_trees(static_cast<std::size_t>(max_n) + 1, 0),
      seq(static_cast<std::size_t>(max_n) + 1, 0);
  seq[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    // t(n) = (root choices) * seq(n-1)
    t[static_cast<std::size_t>(n)] = (increasing ? ExactInt(1) : ExactInt(n)) * seq[static_cast<std::size_t>(n - 1)];
    // sets of trees on n vertices: the tree holding the smallest label has
    // size j, the rest is any (possibly empty) set of trees
    std::vector<ExactInt> any_set(static_cast<std::size_t>(n) + 1, 0);
    any_set[0] = 1;
    for (int m = 1; m <= n; ++m) {
      ExactInt s = 0;
      for (int j = 1; j <= m; ++j) s += binom(m - 1, j - 1) * t[static_cast<std::size_t>(j)] * any_set[static_cast<std::size_t>(m - j)];
      any_set[static_cast<std::size_t>(m)] = s;
    }
    set_of_trees[static_cast<std::size_t>(n)] = any_set[static_cast<std::size_t>(n)];
    // sequences of nonempty blocks: choose the labels of the first block
    ExactInt s = 0;
    for (int j = 1; j <= n; ++j) s += binom(n, j) * set_of_trees[static_cast<std::size_t>(j)] * seq[static_cast<std::size_t>(n - j)];
    seq[static_cast<std::size_t>(n)] = s;
  }
  return t;
}

/// Ward numbers as partitions of [n+k] into k blocks of size >= 2.
inline long long ward_by_partitions(int n, int k) { return count_set_partitions(n + k, k, 2); }

/// Set partitions of [m] into k blocks of size >= 2, each with a chosen root.
inline long long count_meadows(int m, int k, bool increasing) {
  long long c = 0;
  for_each_rgs(m, [&](const std::vector<int>& a, int blocks) {
    if (blocks != k) return;
    long long roots = 1;
    for (int s : block_sizes(a, blocks)) {
      if (s < 2) return;
      roots *= increasing ? 1 : s;
    }
    c += roots;
  });
  return c;
}

/// A random rational with small numerator and denominator.
inline ExactRat random_rat(std::mt19937_64& rng, int span = 9) {
  std::uniform_int_distribution<int> num(-span, span), den(1, span);
  return ExactRat(num(rng), den(rng));
}

}  // namespace oracle
