#pragma once

// The Ward generating function W(x) as a compositional inverse: functional
// identities, and the finite / infinite sum formulas for W_n.

#include <cstddef>
#include <optional>
#include <string>

#include "wardcomb/exactmath.hpp"
#include "wardcomb/series.hpp"
#include "wardcomb/ward.hpp"
#include "wardcomb/weights.hpp"

namespace wardcomb {

/// h(x) = x - f(x) for the given weights; W(x) = h^{<-1>}(x).
inline TruncatedSeries ward_h(const WeightSystem& weights, std::size_t order) {
  return TruncatedSeries::identity(order) - weight_series(weights, order);
}

/// W(x) = sum_n W_n x^n/n! from the tree recurrences.
inline TruncatedSeries ward_egf(const WeightSystem& weights, std::size_t order) {
  const auto wv = wv_sequences(weights, order);
  std::vector<ExactRat> a(order + 1, ExactRat(0));
  for (std::size_t n = 1; n <= order; ++n) a[n] = wv.W[n];
  return TruncatedSeries::from_egf(a);
}

struct FunctionalCheckReport {
  std::string weights;
  std::size_t order = 0;
  TruncatedSeries inverse_residual;     // W - f(W) - x, mod x^(N+1)
  TruncatedSeries derivative_residual;  // W' (1 - f'(W)) - 1, mod x^N
  std::optional<std::size_t> first_bad_inverse;
  std::optional<std::size_t> first_bad_derivative;
  bool ok() const { return !first_bad_inverse && !first_bad_derivative; }
};

/// Checks W(x) - f(W(x)) = x and W'(x) = 1/(1 - f'(W(x))) with W built from
/// wv_sequences.
inline FunctionalCheckReport ward_functional_check(const WeightSystem& weights, std::size_t order) {
  if (order < 1) throw std::invalid_argument("ward_functional_check: order must be >= 1");
  FunctionalCheckReport rep;
  rep.weights = weights.name();
  rep.order = order;
  const auto W = ward_egf(weights, order);
  const auto f = weight_series(weights, order);
  rep.inverse_residual = W - compose(f, W) - TruncatedSeries::identity(order);
  const auto one = TruncatedSeries::constant(1, order - 1);
  const auto dW = derivative(W);
  rep.derivative_residual = dW * (one - compose(derivative(f), W.truncate(order - 1))) - one;
  auto first_nonzero = [](const TruncatedSeries& s) -> std::optional<std::size_t> {
    auto v = s.valuation();
    if (v > s.order()) return std::nullopt;
    return v;
  };
  rep.first_bad_inverse = first_nonzero(rep.inverse_residual);
  rep.first_bad_derivative = first_nonzero(rep.derivative_residual);
  return rep;
}

/// W_n = sum_{1<=i<=k<=n} (-1)^(k-i) S(n+i-1, i) C(n+k-1, n+i-1), the number of
/// increasing Schroeder trees on n vertices.
inline ExactInt ward_double_sum(long long n) {
  if (n < 1) throw std::invalid_argument("ward_double_sum: n must be >= 1");
  ExactInt sum = 0;
  for (long long k = 1; k <= n; ++k)
    for (long long i = 1; i <= k; ++i) sum += ExactInt(sign_power(k - i)) * stirling2(n + i - 1, i) * binomial(n + k - 1, n + i - 1);
  return sum;
}

struct TailSum {
  ExactRat partial_sum = 0;
  ExactRat last_term = 0;
  long long terms = 0;
};

/// Partial sums of sum_{k>=0} S(n+k-1, k) / 2^(n+k), stopped at the first
/// term below `tolerance` (that term is included).
inline TailSum ward_tail_sum(long long n, const ExactRat& tolerance) {
  if (n < 1) throw std::invalid_argument("ward_tail_sum: n must be >= 1");
  if (tolerance <= 0) throw std::invalid_argument("ward_tail_sum: tolerance must be positive");
  TailSum r;
  ExactInt pow2 = ipow(ExactInt(2), static_cast<unsigned>(n));
  for (long long k = 0;; ++k) {
    const ExactRat term(stirling2(n + k - 1, k), pow2);
    r.partial_sum += term;
    r.last_term = term;
    ++r.terms;
    // S(n+k-1,k) = 0 only at k = 0 for n >= 2; keep going past it
    if (k > 0 && term < tolerance) break;
    pow2 *= 2;
  }
  return r;
}

}  // namespace wardcomb
