#pragma once

// Truncated power series over exact rationals.
//
// A TruncatedSeries of order N stores c_0..c_N and stands for
// sum c_n x^n mod x^(N+1). Binary operations return the smaller order, so a
// result never claims more precision than its inputs carry.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wardcomb/exactmath.hpp"

namespace wardcomb {

/// Raised when an inversion or composition precondition fails.
class SeriesPreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order = 0) : coeffs_(order + 1) {}
  explicit TruncatedSeries(std::vector<ExactRat> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries needs at least one coefficient");
  }

  /// From EGF coefficients a_0..a_N, i.e. c_n = a_n / n!.
  static TruncatedSeries from_egf(const std::vector<ExactRat>& a) {
    std::vector<ExactRat> c(a.size());
    ExactInt fact = 1;
    for (std::size_t n = 0; n < a.size(); ++n) {
      if (n > 0) fact *= n;
      c[n] = a[n] / ExactRat(fact);
    }
    return TruncatedSeries(std::move(c));
  }

  static TruncatedSeries constant(const ExactRat& c, std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  static TruncatedSeries identity(std::size_t order) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = 1;
    return s;
  }

  /// e^x - 1.
  static TruncatedSeries exp_minus_one(std::size_t order) {
    std::vector<ExactRat> a(order + 1, ExactRat(1));
    a[0] = 0;
    return from_egf(a);
  }

  /// log(1 + x).
  static TruncatedSeries log_one_plus_x(std::size_t order) {
    TruncatedSeries s(order);
    for (std::size_t n = 1; n <= order; ++n) s.coeffs_[n] = ExactRat(sign_power(static_cast<long long>(n) + 1), static_cast<long long>(n));
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const std::vector<ExactRat>& coefficients() const noexcept { return coeffs_; }

  /// Ordinary coefficient c_n.
  const ExactRat& coeff(std::size_t n) const {
    if (n > order()) throw std::out_of_range("coefficient " + std::to_string(n) + " is beyond truncation order " + std::to_string(order()));
    return coeffs_[n];
  }

  /// EGF coefficient a_n = n! c_n.
  ExactRat egf(std::size_t n) const { return coeff(n) * ExactRat(factorial(static_cast<long long>(n))); }

  std::vector<ExactRat> egf_coefficients() const {
    std::vector<ExactRat> a(coeffs_.size());
    for (std::size_t n = 0; n < a.size(); ++n) a[n] = egf(n);
    return a;
  }

  /// Index of the first nonzero coefficient, or order()+1 if all vanish.
  std::size_t valuation() const {
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
      if (coeffs_[n] != 0) return n;
    return coeffs_.size();
  }

  bool is_zero() const { return valuation() == coeffs_.size(); }

  /// Same coefficients at a lower order.
  TruncatedSeries truncate(std::size_t order) const {
    if (order > this->order()) throw std::invalid_argument("cannot raise truncation order");
    return TruncatedSeries(std::vector<ExactRat>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n <= r.order(); ++n) r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
    return r;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n <= r.order(); ++n) r.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
    return r;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a) {
    TruncatedSeries r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    const std::size_t order = r.order();
    for (std::size_t i = 0; i <= order; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j <= order; ++j) {
        if (b.coeffs_[j] == 0) continue;
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return r;
  }

  friend TruncatedSeries operator*(const ExactRat& s, const TruncatedSeries& a) {
    TruncatedSeries r = a;
    for (auto& c : r.coeffs_) c *= s;
    return r;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<ExactRat> coeffs_;
};

/// a^m; a^0 is 1 at a's order.
inline TruncatedSeries pow(const TruncatedSeries& a, unsigned m) {
  TruncatedSeries result = TruncatedSeries::constant(1, a.order());
  TruncatedSeries base = a;
  while (m) {
    if (m & 1u) result = result * base;
    m >>= 1;
    if (m) base = base * base;
  }
  return result;
}

/// d^times/dx^times; the order drops by `times`.
inline TruncatedSeries derivative(const TruncatedSeries& a, std::size_t times = 1) {
  if (times > a.order()) throw std::invalid_argument("derivative: more derivatives than the truncation order");
  if (times == 0) return a;
  std::vector<ExactRat> c(a.order() - times + 1);
  for (std::size_t n = 0; n < c.size(); ++n) {
    ExactInt falling = 1;
    for (std::size_t j = 0; j < times; ++j) falling *= (n + times - j);
    c[n] = a.coeff(n + times) * ExactRat(falling);
  }
  return TruncatedSeries(std::move(c));
}

/// outer(inner(x)) by Horner's rule; inner must have no constant term.
inline TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (inner.coeff(0) != 0) throw SeriesPreconditionError("compose: inner series has nonzero constant term " + to_string(inner.coeff(0)));
  const std::size_t order = std::min(outer.order(), inner.order());
  const auto x = inner.truncate(order);
  TruncatedSeries r = TruncatedSeries::constant(outer.coeff(order), order);
  for (std::size_t i = order; i-- > 0;) {
    r = r * x;
    r = r + TruncatedSeries::constant(outer.coeff(i), order);
  }
  return r;
}

/// 1/a; needs a(0) != 0.
inline TruncatedSeries reciprocal(const TruncatedSeries& a) {
  if (a.coeff(0) == 0) throw SeriesPreconditionError("reciprocal: constant term is zero");
  const std::size_t order = a.order();
  std::vector<ExactRat> r(order + 1);
  const ExactRat inv0 = 1 / a.coeff(0);
  r[0] = inv0;
  for (std::size_t n = 1; n <= order; ++n) {
    ExactRat acc = 0;
    for (std::size_t j = 1; j <= n; ++j) acc += a.coeff(j) * r[n - j];
    r[n] = -acc * inv0;
  }
  return TruncatedSeries(std::move(r));
}

namespace detail {

// Zero-extends `a` to `order`. Only meaningful where the caller knows the
// padded coefficients cannot reach the coefficients it reads back.
inline TruncatedSeries pad(const TruncatedSeries& a, std::size_t order) {
  std::vector<ExactRat> c = a.coefficients();
  c.resize(std::max(order + 1, c.size()));
  return TruncatedSeries(std::move(c));
}

inline void require_inverse_preconditions(const TruncatedSeries& h, const char* who) {
  if (h.order() < 1) throw SeriesPreconditionError(std::string(who) + ": series must have order >= 1");
  if (h.coeff(0) != 0) throw SeriesPreconditionError(std::string(who) + ": coefficient 0 must vanish, got " + to_string(h.coeff(0)));
  if (h.coeff(1) == 0) throw SeriesPreconditionError(std::string(who) + ": coefficient 1 must be nonzero");
}

}  // namespace detail

/// The series g with h(g(x)) = x, by Newton iteration with doubling precision.
inline TruncatedSeries invert_newton(const TruncatedSeries& h) {
  detail::require_inverse_preconditions(h, "invert_newton");
  const std::size_t order = h.order();
  const TruncatedSeries dh = derivative(h);
  TruncatedSeries g(std::vector<ExactRat>{ExactRat(0), 1 / h.coeff(1)});
  std::size_t prec = 1;
  while (prec < order) {
    prec = std::min(2 * prec, order);
    const auto hp = h.truncate(prec);
    // dh is short by one coefficient; the missing one cannot reach the update below x^(prec+1)
    const auto dhp = detail::pad(dh, prec).truncate(prec);
    const auto gp = detail::pad(g, prec);
    const auto residual = compose(hp, gp) - TruncatedSeries::identity(prec);
    g = gp - residual * reciprocal(compose(dhp, gp));
  }
  return g.truncate(order);
}

/// h^{<-1>} = x + sum_{k>=1} (1/k!) [(x - h)^k]^{(k-1)} for h(0)=0, h'(0)=1.
///
/// (x-h) has valuation >= 2, so (x-h)^k is exact through x^(N+k-1) from h's
/// coefficients through x^N, and the k-th term vanishes mod x^(N+1) for k > N.
inline TruncatedSeries invert_variant(const TruncatedSeries& h) {
  detail::require_inverse_preconditions(h, "invert_variant");
  if (h.coeff(1) != 1) throw SeriesPreconditionError("invert_variant: coefficient 1 must equal 1 (rescale with [a h(x)]^{<-1>} = h^{<-1>}(x/a))");
  const std::size_t order = h.order();
  const TruncatedSeries f = TruncatedSeries::identity(order) - h;
  TruncatedSeries result = TruncatedSeries::identity(order);
  ExactInt kfact = 1;
  for (std::size_t k = 1; k <= order; ++k) {
    kfact *= k;
    const auto fk = pow(detail::pad(f, order + k - 1), static_cast<unsigned>(k));
    result = result + ExactRat(1, kfact) * derivative(fk, k - 1);
  }
  return result;
}

/// b_n = [x^(n-1)/(n-1)!] (x/f(x))^n, the n-th EGF coefficient of f^{<-1>}.
inline ExactRat lagrange_classical(const TruncatedSeries& f, std::size_t n) {
  detail::require_inverse_preconditions(f, "lagrange_classical");
  if (n < 1) throw SeriesPreconditionError("lagrange_classical: n must be >= 1");
  if (n > f.order()) throw SeriesPreconditionError("lagrange_classical: n exceeds the truncation order of f");
  std::vector<ExactRat> shifted(f.coefficients().begin() + 1, f.coefficients().begin() + static_cast<std::ptrdiff_t>(n) + 1);
  const auto x_over_f = reciprocal(TruncatedSeries(std::move(shifted)));  // order n-1
  const auto powered = pow(x_over_f, static_cast<unsigned>(n));
  return powered.coeff(n - 1) * ExactRat(factorial(static_cast<long long>(n) - 1));
}

}  // namespace wardcomb
