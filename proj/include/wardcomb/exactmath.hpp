#pragma once

// Exact integer/rational kernel and the classical counting triangles.

#include <cstddef>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wardcomb {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRat = boost::multiprecision::cpp_rational;

inline ExactRat make_rat(const ExactInt& num, const ExactInt& den = 1) {
  if (den == 0) throw std::domain_error("zero denominator");
  // the two-argument constructor expects a positive denominator
  return den < 0 ? ExactRat(-num, -den) : ExactRat(num, den);
}

inline ExactInt numerator_of(const ExactRat& r) { return boost::multiprecision::numerator(r); }
inline ExactInt denominator_of(const ExactRat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const ExactRat& r) { return denominator_of(r) == 1; }

/// Parses "p", "-p" or "p/q" into a rational in lowest terms.
inline ExactRat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  if (text.empty() || slash == 0 || slash + 1 == text.size()) throw std::invalid_argument("not a rational number: '" + text + "'");
  try {
    if (slash == std::string::npos) return ExactRat(ExactInt(text));
    ExactInt num(text.substr(0, slash));
    ExactInt den(text.substr(slash + 1));
    return make_rat(num, den);
  } catch (const std::domain_error&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
}

inline std::string to_string(const ExactInt& v) { return v.str(); }
inline std::string to_string(const ExactRat& r) {
  if (is_integer(r)) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

/// (-1)^e as an int.
constexpr int sign_power(long long e) { return (e % 2 == 0) ? 1 : -1; }

namespace detail {

// Lower-triangular table T(n,k), 0 <= k <= n, grown row by row on demand.
// Rows are produced by `next_row(table, n)`, which may read rows < n.
class MemoTriangle {
 public:
  using RowFn = std::function<std::vector<ExactInt>(const std::vector<std::vector<ExactInt>>&, std::size_t)>;

  explicit MemoTriangle(RowFn next_row) : next_row_(std::move(next_row)) {}

  ExactInt at(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    std::lock_guard<std::mutex> lock(mutex_);
    while (rows_.size() <= static_cast<std::size_t>(n)) rows_.push_back(next_row_(rows_, rows_.size()));
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  RowFn next_row_;
  std::mutex mutex_;
  std::vector<std::vector<ExactInt>> rows_;
};

inline ExactInt cell(const std::vector<std::vector<ExactInt>>& t, std::size_t n, long long k) {
  if (k < 0 || static_cast<std::size_t>(k) > n) return 0;
  return t[n][static_cast<std::size_t>(k)];
}

inline MemoTriangle& pascal_table() {
  static MemoTriangle t([](const auto& rows, std::size_t n) {
    std::vector<ExactInt> row(n + 1, 1);
    for (std::size_t k = 1; k < n; ++k) row[k] = rows[n - 1][k - 1] + rows[n - 1][k];
    return row;
  });
  return t;
}

inline MemoTriangle& stirling2_table() {
  static MemoTriangle t([](const auto& rows, std::size_t n) {
    std::vector<ExactInt> row(n + 1, 0);
    if (n == 0) {
      row[0] = 1;
      return row;
    }
    for (std::size_t k = 1; k <= n; ++k)
      row[k] = ExactInt(k) * cell(rows, n - 1, static_cast<long long>(k)) + cell(rows, n - 1, static_cast<long long>(k) - 1);
    return row;
  });
  return t;
}

inline MemoTriangle& stirling1_table() {
  static MemoTriangle t([](const auto& rows, std::size_t n) {
    std::vector<ExactInt> row(n + 1, 0);
    if (n == 0) {
      row[0] = 1;
      return row;
    }
    for (std::size_t k = 1; k <= n; ++k)
      row[k] = ExactInt(n - 1) * cell(rows, n - 1, static_cast<long long>(k)) + cell(rows, n - 1, static_cast<long long>(k) - 1);
    return row;
  });
  return t;
}

}  // namespace detail

inline ExactInt factorial(long long n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  ExactInt r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

/// (2n-1)!! = 1*3*...*(2n-1); 1 for n = 0.
inline ExactInt double_factorial_odd(long long n) {
  if (n < 0) throw std::domain_error("double factorial of a negative index");
  ExactInt r = 1;
  for (long long i = 1; i <= n; ++i) r *= (2 * i - 1);
  return r;
}

inline ExactInt binomial(long long n, long long k) { return detail::pascal_table().at(n, k); }

inline ExactInt stirling2(long long n, long long k) { return detail::stirling2_table().at(n, k); }

inline ExactInt stirling1_unsigned(long long n, long long k) { return detail::stirling1_table().at(n, k); }

/// Unsigned Lah numbers: C(n-1,k-1) n!/k! for n,k >= 1, L(0,0) = 1.
inline ExactInt lah(long long n, long long k) {
  if (n == 0 && k == 0) return 1;
  if (n < 1 || k < 1 || k > n) return 0;
  return binomial(n - 1, k - 1) * factorial(n) / factorial(k);
}

inline ExactInt ipow(ExactInt base, unsigned long long e) {
  ExactInt r = 1;
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline ExactRat rpow(const ExactRat& base, unsigned long long e) {
  ExactRat r = 1;
  for (unsigned long long i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace wardcomb
