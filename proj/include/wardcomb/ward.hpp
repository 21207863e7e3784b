#pragma once

// Ward numbers W(n,k), their weighted generalization W^g(n,k), closed forms,
// and the total weights W_n / V_n of increasing Schroeder trees.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wardcomb/exactmath.hpp"
#include "wardcomb/series.hpp"
#include "wardcomb/weights.hpp"

namespace wardcomb {

/// W(n,k) for 0 <= k <= n <= N, with row and alternating sums.
struct WardTable {
  std::string weights = "ones";
  std::size_t max_n = 0;
  std::vector<std::vector<ExactRat>> entries;  // entries[n][k], k <= n

  ExactRat at(std::size_t n, std::size_t k) const {
    if (n > max_n) throw std::out_of_range("WardTable: row " + std::to_string(n) + " not computed");
    return k <= n ? entries[n][k] : ExactRat(0);
  }

  ExactRat row_sum(std::size_t n) const {
    ExactRat s = 0;
    for (std::size_t k = 0; k <= n; ++k) s += at(n, k);
    return s;
  }

  /// sum_k (-1)^(n+k) W(n,k).
  ExactRat alternating_sum(std::size_t n) const {
    ExactRat s = 0;
    for (std::size_t k = 0; k <= n; ++k) s += ExactRat(sign_power(static_cast<long long>(n + k))) * at(n, k);
    return s;
  }
};

/// W(n,k) = k W(n-1,k) + (n+k-1) W(n-1,k-1), W(0,k) = delta_{0,k}.
inline WardTable ward_recurrence_table(std::size_t max_n) {
  WardTable t;
  t.max_n = max_n;
  t.entries.resize(max_n + 1);
  t.entries[0] = {ExactRat(1)};
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto& row = t.entries[n];
    row.assign(n + 1, ExactRat(0));
    const auto& prev = t.entries[n - 1];
    for (std::size_t k = 1; k <= n; ++k) {
      ExactRat stay = k <= n - 1 ? prev[k] : ExactRat(0);
#ifdef WARDCOMB_MUTATE_RECURRENCE
      // seeded off-by-one used by the mutation sanity test
      row[k] = ExactRat(k) * stay + ExactRat(n + k) * prev[k - 1];
#else
      row[k] = ExactRat(k) * stay + ExactRat(n + k - 1) * prev[k - 1];
#endif
    }
  }
  return t;
}

/// Partitions of an n-set into k blocks of size >= 2:
/// S2(n,k) = k S2(n-1,k) + (n-1) S2(n-2,k-1), S2(0,k) = delta_{k,0}, S2(1,k) = 0.
inline ExactInt s2_recurrence(long long n, long long k) {
  if (n < 0 || k < 0) return 0;
  std::vector<std::vector<ExactInt>> t(static_cast<std::size_t>(n) + 1, std::vector<ExactInt>(static_cast<std::size_t>(k) + 1, 0));
  t[0][0] = 1;
  for (long long m = 2; m <= n; ++m)
    for (long long j = 1; j <= k; ++j)
      t[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] =
          ExactInt(j) * t[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j)] +
          ExactInt(m - 1) * t[static_cast<std::size_t>(m - 2)][static_cast<std::size_t>(j - 1)];
  return t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

namespace detail {

/// sum_{i=1}^{max_i} g_i x^(i+1)/(i+1)! at the given order.
inline TruncatedSeries block_egf(const WeightSystem& weights, std::size_t max_i, std::size_t order) {
  std::vector<ExactRat> c(order + 1, ExactRat(0));
  for (std::size_t i = 1; i <= max_i && i + 1 <= order; ++i) c[i + 1] = weights(i) / ExactRat(factorial(static_cast<long long>(i) + 1));
  return TruncatedSeries(std::move(c));
}

}  // namespace detail

/// W^g(n,k) = [x^(n+k)/(n+k)!] (1/k!) (sum_i g_i x^(i+1)/(i+1)!)^k; a block of
/// size i+1 carries g_i. Only g_1..g_(n-k+1) are read.
inline ExactRat weighted_ward(std::size_t n, std::size_t k, const WeightSystem& weights) {
  if (k == 0) return n == 0 ? ExactRat(1) : ExactRat(0);
  if (k > n) return 0;
  const std::size_t order = n + k;
  const auto block = detail::block_egf(weights, n - k + 1, order);
  const auto powered = pow(block, static_cast<unsigned>(k));
  return powered.coeff(order) * ExactRat(factorial(static_cast<long long>(order))) / ExactRat(factorial(static_cast<long long>(k)));
}

/// The whole table at once; reads g_1..g_N.
inline WardTable weighted_ward_table(std::size_t max_n, const WeightSystem& weights) {
  WardTable t;
  t.weights = weights.name();
  t.max_n = max_n;
  t.entries.resize(max_n + 1);
  const std::size_t order = 2 * max_n;
  const auto block = detail::block_egf(weights, max_n, order);
  std::vector<TruncatedSeries> powers{TruncatedSeries::constant(1, order)};
  for (std::size_t k = 1; k <= max_n; ++k) powers.push_back(powers.back() * block);
  for (std::size_t n = 0; n <= max_n; ++n) {
    t.entries[n].assign(n + 1, ExactRat(0));
    t.entries[n][0] = n == 0 ? 1 : 0;
    for (std::size_t k = 1; k <= n; ++k)
      t.entries[n][k] = powers[k].coeff(n + k) * ExactRat(factorial(static_cast<long long>(n + k))) /
                        ExactRat(factorial(static_cast<long long>(k)));
  }
  return t;
}

enum class ClosedFormKind { set, enriched, cycle, lah };

inline std::optional<ClosedFormKind> parse_closed_form_kind(const std::string& s) {
  if (s == "set") return ClosedFormKind::set;
  if (s == "enriched") return ClosedFormKind::enriched;
  if (s == "cycle") return ClosedFormKind::cycle;
  if (s == "lah") return ClosedFormKind::lah;
  return std::nullopt;
}

/// set:      sum_m (-1)^(m+k) C(n+k, n+m) S(n+m, m)        (g_i = 1)
/// enriched: k! C(n+k, k) S(n, k)                          (g_i = i+1)
/// cycle:    sum_m (-1)^(m+k) C(n+k, n+m) |s(n+m, m)|      (g_i = i!)
/// lah:      sum_m (-1)^(m+k) C(n+k, n+m) L(n+m, m)        (g_i = (i+1)!)
inline ExactInt ward_closed_form(long long n, long long k, ClosedFormKind kind) {
  if (n < 0 || k < 0) return 0;
  if (kind == ClosedFormKind::enriched) return factorial(k) * binomial(n + k, k) * stirling2(n, k);
  ExactInt sum = 0;
  for (long long m = 0; m <= k; ++m) {
    ExactInt inner;
    switch (kind) {
      case ClosedFormKind::set: inner = stirling2(n + m, m); break;
      case ClosedFormKind::cycle: inner = stirling1_unsigned(n + m, m); break;
      case ClosedFormKind::lah: inner = lah(n + m, m); break;
      case ClosedFormKind::enriched: break;
    }
    sum += ExactInt(sign_power(m + k)) * binomial(n + k, n + m) * inner;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Specializations of g
// ---------------------------------------------------------------------------

struct SpecializationCheck {
  std::string row;       // weight system
  std::string quantity;  // e.g. "row_sum", "alternating_sum", "entry k=2"
  std::size_t n = 0;
  ExactRat expected = 0;
  ExactRat got = 0;
  bool ok() const { return expected == got; }
};

struct SpecializationReport {
  std::size_t max_n = 0;
  std::vector<SpecializationCheck> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok()) return false;
    return true;
  }
  const SpecializationCheck* first_failure() const {
    for (const auto& c : checks)
      if (!c.ok()) return &c;
    return nullptr;
  }
};

namespace detail {

/// Little Schroeder numbers 1, 1, 3, 11, 45, ... from
/// (m+1) s(m) = 3(2m-1) s(m-1) - (m-2) s(m-2).
inline std::vector<ExactInt> little_schroeder(std::size_t count) {
  std::vector<ExactInt> s(std::max<std::size_t>(count, 2), 1);
  for (std::size_t m = 2; m < s.size(); ++m) {
    const auto mm = static_cast<long long>(m);
    s[m] = (ExactInt(3 * (2 * mm - 1)) * s[m - 1] - ExactInt(mm - 2) * s[m - 2]) / (mm + 1);
  }
  s.resize(count);
  return s;
}

}  // namespace detail

/// Computes W^g(n,k), W^g(n) and the alternating sums for every weight
/// specialization in the standard table and compares them with the known
/// closed forms, for 0 <= n <= max_n.
inline SpecializationReport specialization_suite(std::size_t max_n) {
  SpecializationReport rep;
  rep.max_n = max_n;
  auto add = [&](const std::string& row, const std::string& what, std::size_t n, ExactRat expected, ExactRat got) {
    rep.checks.push_back({row, what, n, std::move(expected), std::move(got)});
  };
  auto entries_vs = [&](const WardTable& t, ClosedFormKind kind) {
    for (std::size_t n = 0; n <= max_n; ++n)
      for (std::size_t k = 0; k <= n; ++k)
        add(t.weights, "entry k=" + std::to_string(k), n,
            ExactRat(ward_closed_form(static_cast<long long>(n), static_cast<long long>(k), kind)), t.at(n, k));
  };
  const auto N = static_cast<long long>(max_n);
  const auto little = detail::little_schroeder(max_n + 1);

  // g_i = 1: total partitions (by the plain recurrence), n!
  {
    const auto t = weighted_ward_table(max_n, WeightSystem::ones());
    const auto rec = ward_recurrence_table(max_n);
    entries_vs(t, ClosedFormKind::set);
    for (long long n = 0; n <= N; ++n) {
      add(t.weights, "row_sum", static_cast<std::size_t>(n), rec.row_sum(static_cast<std::size_t>(n)), t.row_sum(static_cast<std::size_t>(n)));
      add(t.weights, "alternating_sum", static_cast<std::size_t>(n), ExactRat(factorial(n)), t.alternating_sum(static_cast<std::size_t>(n)));
    }
  }
  // g_i = i+1: Schroeder trees on n+1 vertices, (n+1)^n
  {
    const auto t = weighted_ward_table(max_n, WeightSystem::preset(WeightPreset::i_plus_1));
    entries_vs(t, ClosedFormKind::enriched);
    for (long long n = 0; n <= N; ++n) {
      ExactInt schroeder = 0;
      for (long long k = 0; k <= n; ++k) schroeder += factorial(k) * binomial(n + k, k) * stirling2(n, k);
      add(t.weights, "row_sum", static_cast<std::size_t>(n), ExactRat(schroeder), t.row_sum(static_cast<std::size_t>(n)));
      add(t.weights, "alternating_sum", static_cast<std::size_t>(n), ExactRat(ipow(ExactInt(n + 1), static_cast<unsigned>(n))),
          t.alternating_sum(static_cast<std::size_t>(n)));
    }
  }
  // g_i = i!: alternating sum 1
  {
    const auto t = weighted_ward_table(max_n, WeightSystem::preset(WeightPreset::factorial_i));
    entries_vs(t, ClosedFormKind::cycle);
    for (long long n = 0; n <= N; ++n) add(t.weights, "alternating_sum", static_cast<std::size_t>(n), ExactRat(1), t.alternating_sum(static_cast<std::size_t>(n)));
  }
  // g_i = (i+1)!: (n+1)! times the n-th little Schroeder number, (n+1)!
  {
    const auto t = weighted_ward_table(max_n, WeightSystem::preset(WeightPreset::factorial_i_plus_1));
    entries_vs(t, ClosedFormKind::lah);
    for (long long n = 0; n <= N; ++n) {
      add(t.weights, "row_sum", static_cast<std::size_t>(n), ExactRat(factorial(n + 1) * little[static_cast<std::size_t>(n)]),
          t.row_sum(static_cast<std::size_t>(n)));
      add(t.weights, "alternating_sum", static_cast<std::size_t>(n), ExactRat(factorial(n + 1)), t.alternating_sum(static_cast<std::size_t>(n)));
    }
  }
  // g_i = (i-1)!: n^n
  {
    const auto t = weighted_ward_table(max_n, WeightSystem::preset(WeightPreset::factorial_i_minus_1));
    for (long long n = 0; n <= N; ++n)
      add(t.weights, "row_sum", static_cast<std::size_t>(n), ExactRat(ipow(ExactInt(n), static_cast<unsigned>(n))), t.row_sum(static_cast<std::size_t>(n)));
  }
  // g_i = delta_{i,1}: (2n-1)!!; g_i = 2 delta_{i,1}: (2n)!/n!
  {
    const auto t1 = weighted_ward_table(max_n, WeightSystem::delta(1, 1));
    const auto t2 = weighted_ward_table(max_n, WeightSystem::delta(1, 2));
    for (long long n = 0; n <= N; ++n) {
      const auto un = static_cast<std::size_t>(n);
      add(t1.weights, "row_sum", un, ExactRat(double_factorial_odd(n)), t1.row_sum(un));
      add(t1.weights, "alternating_sum", un, t1.row_sum(un), t1.alternating_sum(un));
      add(t2.weights, "row_sum", un, ExactRat(factorial(2 * n) / factorial(n)), t2.row_sum(un));
      add(t2.weights, "alternating_sum", un, t2.row_sum(un), t2.alternating_sum(un));
    }
  }
  // g_i = g_j delta_{i,j}: (i(j+1))! / (i! ((j+1)!)^i) g_j^i at n = ij, else 0
  for (std::size_t j = 1; j <= 3; ++j) {
    for (const ExactRat& scale : {ExactRat(1), ExactRat(3), ExactRat(-2, 5)}) {
      const auto t = weighted_ward_table(max_n, WeightSystem::delta(j, scale));
      for (std::size_t n = 0; n <= max_n; ++n) {
        ExactRat expected = 0;
        ExactRat expected_alt = 0;
        if (n % j == 0) {
          const auto i = static_cast<long long>(n / j);
          const auto jj = static_cast<long long>(j);
          expected = ExactRat(factorial(i * (jj + 1))) /
                     ExactRat(factorial(i) * ipow(factorial(jj + 1), static_cast<unsigned>(i))) * rpow(scale, static_cast<unsigned>(i));
          expected_alt = ExactRat(sign_power(static_cast<long long>(n) + i)) * expected;
        }
        add(t.weights, "row_sum", n, expected, t.row_sum(n));
        add(t.weights, "alternating_sum", n, expected_alt, t.alternating_sum(n));
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Total weights of increasing Schroeder trees
// ---------------------------------------------------------------------------

/// W[n]: total weight of increasing Schroeder trees on n vertices (a block of
/// size i carries g_i). V[n]: the same restricted to trees whose root has a
/// single block. Index 0 is unused; V[1] = 0.
struct WVSequences {
  std::vector<ExactRat> W;
  std::vector<ExactRat> V;
};

/// W_{m+1} = sum over ordered partitions (B_1..B_k) of an m-set of prod V_{|B_i|+1}
/// V_{m+1} = sum over set partitions {C_1..C_k} of an m-set of g_k prod W_{|C_j|}
/// both evaluated as binomial convolutions. Reads g_1..g_(N-1).
inline WVSequences wv_sequences(const WeightSystem& weights, std::size_t max_n) {
  if (max_n < 1) throw std::invalid_argument("wv_sequences: N must be >= 1");
  WVSequences s;
  s.W.assign(max_n + 1, ExactRat(0));
  s.V.assign(max_n + 1, ExactRat(0));
  s.W[1] = 1;
  // blocks[m][k]: set partitions of an m-set into k blocks, weighted by prod W_|C|
  std::vector<std::vector<ExactRat>> blocks(max_n, std::vector<ExactRat>(max_n, ExactRat(0)));
  blocks[0][0] = 1;
  for (std::size_t m = 1; m + 1 <= max_n; ++m) {
    for (std::size_t k = 1; k <= m; ++k) {
      ExactRat acc = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (blocks[m - j][k - 1] == 0) continue;
        acc += ExactRat(binomial(static_cast<long long>(m) - 1, static_cast<long long>(j) - 1)) * s.W[j] * blocks[m - j][k - 1];
      }
      blocks[m][k] = acc;
    }
    ExactRat v = 0;
    for (std::size_t k = 1; k <= m; ++k)
      if (blocks[m][k] != 0) v += weights(k) * blocks[m][k];
    s.V[m + 1] = v;
    ExactRat w = 0;
    for (std::size_t j = 1; j <= m; ++j)
      w += ExactRat(binomial(static_cast<long long>(m), static_cast<long long>(j))) * s.V[j + 1] * s.W[m - j + 1];
    s.W[m + 1] = w;
  }
  return s;
}

/// sum_n W_n x^n/n! with W_n = sum_k W^g(n-1,k): the tree-weight EGF built
/// from the weighted Ward table.
inline TruncatedSeries ward_egf_from_table(const WeightSystem& weights, std::size_t order) {
  std::vector<ExactRat> a(order + 1, ExactRat(0));
  if (order >= 1) {
    const auto t = weighted_ward_table(order - 1, weights);
    for (std::size_t n = 1; n <= order; ++n) a[n] = t.row_sum(n - 1);
  }
  return TruncatedSeries::from_egf(a);
}

/// f(x) = sum_{n>=2} g_(n-1) x^n/n!, so that h = x - f.
inline TruncatedSeries weight_series(const WeightSystem& weights, std::size_t order) {
  return detail::block_egf(weights, order >= 1 ? order - 1 : 0, order);
}

}  // namespace wardcomb
