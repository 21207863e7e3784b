#pragma once

#include <cctype>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wardcomb/exactmath.hpp"

namespace wardcomb {

/// Thrown when a weight g_i is requested that the system does not define.
class IncompleteWeightSystem : public std::out_of_range {
 public:
  explicit IncompleteWeightSystem(std::size_t index)
      : std::out_of_range("weight system has no g_" + std::to_string(index)), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

enum class WeightPreset {
  ones,                 // g_i = 1
  i_plus_1,             // g_i = i + 1
  factorial_i,          // g_i = i!
  factorial_i_plus_1,   // g_i = (i + 1)!
  factorial_i_minus_1,  // g_i = (i - 1)!
  delta,                // g_i = scale if i == j else 0
  list,                 // explicit g_1..g_M
};

/// A block-weight sequence g_1, g_2, ...
///
/// Presets evaluate to any index. Explicit lists reject indices past their
/// end instead of zero-extending. The `signed` flag multiplies g_i by
/// (-1)^(i+1), which turns tree weights into the usual sign (-1)^(n+k-1).
class WeightSystem {
 public:
  WeightSystem() = default;

  static WeightSystem preset(WeightPreset p, bool is_signed = false) {
    if (p == WeightPreset::delta || p == WeightPreset::list)
      throw std::invalid_argument("use WeightSystem::delta or WeightSystem::from_list");
    WeightSystem w;
    w.kind_ = p;
    w.signed_ = is_signed;
    return w;
  }
  static WeightSystem ones() { return preset(WeightPreset::ones); }
  static WeightSystem delta(std::size_t j, ExactRat scale) {
    if (j == 0) throw std::invalid_argument("delta weight index must be >= 1");
    WeightSystem w;
    w.kind_ = WeightPreset::delta;
    w.delta_index_ = j;
    w.delta_scale_ = std::move(scale);
    return w;
  }
  static WeightSystem from_list(std::vector<ExactRat> g) {
    WeightSystem w;
    w.kind_ = WeightPreset::list;
    w.list_ = std::move(g);
    return w;
  }

  WeightPreset kind() const noexcept { return kind_; }
  bool is_signed() const noexcept { return signed_; }

  /// g_i for i >= 1. g_0 is 0 by convention.
  ExactRat operator()(std::size_t i) const {
    if (i == 0) return 0;
    ExactRat v;
    switch (kind_) {
      case WeightPreset::ones: v = 1; break;
      case WeightPreset::i_plus_1: v = ExactRat(i + 1); break;
      case WeightPreset::factorial_i: v = ExactRat(factorial(static_cast<long long>(i))); break;
      case WeightPreset::factorial_i_plus_1: v = ExactRat(factorial(static_cast<long long>(i) + 1)); break;
      case WeightPreset::factorial_i_minus_1: v = ExactRat(factorial(static_cast<long long>(i) - 1)); break;
      case WeightPreset::delta: v = (i == delta_index_) ? delta_scale_ : ExactRat(0); break;
      case WeightPreset::list:
        if (i > list_.size()) throw IncompleteWeightSystem(i);
        v = list_[i - 1];
        break;
    }
    if (signed_ && (i % 2 == 0)) v = -v;
    return v;
  }

  /// Number of defined weights, or 0 for presets (unbounded).
  std::size_t bound() const noexcept { return kind_ == WeightPreset::list ? list_.size() : 0; }

  /// Spec string in the CLI grammar; round-trips through parse_weights.
  std::string name() const {
    std::string base;
    switch (kind_) {
      case WeightPreset::ones: base = "ones"; break;
      case WeightPreset::i_plus_1: base = "i_plus_1"; break;
      case WeightPreset::factorial_i: base = "factorial_i"; break;
      case WeightPreset::factorial_i_plus_1: base = "factorial_i_plus_1"; break;
      case WeightPreset::factorial_i_minus_1: base = "factorial_i_minus_1"; break;
      case WeightPreset::delta:
        base = "delta:" + std::to_string(delta_index_) + ":" + to_string(delta_scale_);
        break;
      case WeightPreset::list: {
        base = "list:";
        for (std::size_t i = 0; i < list_.size(); ++i) base += (i ? "," : "") + to_string(list_[i]);
        break;
      }
    }
    return signed_ ? "signed_" + base : base;
  }

 private:
  WeightPreset kind_ = WeightPreset::ones;
  bool signed_ = false;
  std::size_t delta_index_ = 1;
  ExactRat delta_scale_ = 1;
  std::vector<ExactRat> list_;
};

/// Parses `ones | i_plus_1 | factorial_i | factorial_i_plus_1 |
/// factorial_i_minus_1 | delta:<j>:<scale> | list:<g1>,<g2>,...`, each
/// optionally prefixed with `signed_`. `delta1` and `delta2` abbreviate
/// delta:1:1 and delta:1:2. A bare comma-separated list of rationals is read
/// as list:.
inline WeightSystem parse_weights(std::string spec) {
  bool is_signed = false;
  if (spec.rfind("signed_", 0) == 0) {
    is_signed = true;
    spec = spec.substr(7);
  }
  auto finish = [&](WeightSystem w) {
    if (is_signed && (w.kind() == WeightPreset::delta || w.kind() == WeightPreset::list))
      throw std::invalid_argument("signed_ applies to named presets only");
    return w;
  };
  if (spec == "ones") return WeightSystem::preset(WeightPreset::ones, is_signed);
  if (spec == "i_plus_1") return WeightSystem::preset(WeightPreset::i_plus_1, is_signed);
  if (spec == "factorial_i") return WeightSystem::preset(WeightPreset::factorial_i, is_signed);
  if (spec == "factorial_i_plus_1") return WeightSystem::preset(WeightPreset::factorial_i_plus_1, is_signed);
  if (spec == "factorial_i_minus_1") return WeightSystem::preset(WeightPreset::factorial_i_minus_1, is_signed);
  if (spec == "delta1") return finish(WeightSystem::delta(1, 1));
  if (spec == "delta2") return finish(WeightSystem::delta(1, 2));
  if (spec.rfind("delta:", 0) == 0) {
    auto rest = spec.substr(6);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("expected delta:<j>:<scale>, got '" + spec + "'");
    std::size_t j = 0;
    try {
      std::size_t used = 0;
      long long parsed = std::stoll(rest.substr(0, colon), &used);
      if (used != colon || parsed < 1) throw std::invalid_argument("bad index");
      j = static_cast<std::size_t>(parsed);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad delta index in '" + spec + "'");
    }
    return finish(WeightSystem::delta(j, parse_rat(rest.substr(colon + 1))));
  }
  const bool bare_list = !spec.empty() && (std::isdigit(static_cast<unsigned char>(spec[0])) || spec[0] == '-');
  if (bare_list || spec.rfind("list:", 0) == 0) {
    std::vector<ExactRat> g;
    std::stringstream ss(bare_list ? spec : spec.substr(5));
    std::string item;
    while (std::getline(ss, item, ',')) g.push_back(parse_rat(item));
    if (g.empty()) throw std::invalid_argument("empty weight list");
    return finish(WeightSystem::from_list(std::move(g)));
  }
  throw std::invalid_argument("unknown weight spec '" + spec + "'");
}

}  // namespace wardcomb
