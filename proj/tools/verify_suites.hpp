#pragma once

// Desk-scale verification suites behind `wardcomb verify`. Each check returns
// its status and, on failure, the first counterexample as JSON.

#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wardcomb/bijections.hpp"
#include "wardcomb/json_io.hpp"
#include "wardcomb/series.hpp"
#include "wardcomb/ward.hpp"
#include "wardcomb/ward_egf.hpp"

namespace wardcomb::verify {

struct CheckResult {
  bool ok = true;
  Json counterexample;  // null while ok

  void fail(Json why) {
    if (ok) counterexample = std::move(why);
    ok = false;
  }
};

struct Check {
  std::string name;
  std::function<CheckResult()> run;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"recurrences", "bijections", "involutions", "chen-counts", "table2", "series"};
  return names;
}

inline Json entry(std::size_t n, std::size_t k, const ExactRat& expected, const ExactRat& got) {
  return Json{{"n", n}, {"k", k}, {"expected", to_string(expected)}, {"got", to_string(got)}};
}

inline const std::vector<WeightSystem>& preset_weights() {
  static const std::vector<WeightSystem> w{
      WeightSystem::ones(),
      WeightSystem::preset(WeightPreset::i_plus_1),
      WeightSystem::preset(WeightPreset::factorial_i),
      WeightSystem::preset(WeightPreset::factorial_i_plus_1),
      WeightSystem::preset(WeightPreset::factorial_i_minus_1),
      WeightSystem::delta(1, 1),
      WeightSystem::delta(1, 2),
  };
  return w;
}

// --- recurrences ------------------------------------------------------------

inline CheckResult boundary_values() {
  CheckResult r;
  const auto t = ward_recurrence_table(10);
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto nn = static_cast<long long>(n);
    const ExactRat w2(ipow(ExactInt(2), n + 1) - nn - 3);
    if (t.at(n, 1) != 1) r.fail(entry(n, 1, 1, t.at(n, 1)));
    if (t.at(n, 2) != w2) r.fail(entry(n, 2, w2, t.at(n, 2)));
    if (t.at(n, n) != ExactRat(double_factorial_odd(nn))) r.fail(entry(n, n, ExactRat(double_factorial_odd(nn)), t.at(n, n)));
  }
  return r;
}

inline CheckResult three_interpretations() {
  CheckResult r;
  const auto t = ward_recurrence_table(5);
  for (int n = 0; n <= 5; ++n) {
    std::map<std::string, std::array<long long, 3>> tally;
    std::vector<long long> per_k(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 0; k <= n; ++k)
      enumerate_set_partitions(n + k, k, 2, [&](const SetPartition& p) {
        ++tally[detail::tally_key(k, type_of(p))][0];
        ++per_k[static_cast<std::size_t>(k)];
      });
    enumerate_total_partition_trees(n + 1, [&](const TotalPartitionTree& tr) {
      ++tally[detail::tally_key(static_cast<long long>(internal_count(tr)), type_of(tr))][1];
    });
    enumerate_increasing_schroeder_trees(n + 1, [&](const SchroederTree& s) {
      ++tally[detail::tally_key(static_cast<long long>(block_count(s)), type_of(s))][2];
    });
    for (const auto& [key, c] : tally)
      if (c[0] != c[1] || c[0] != c[2])
        r.fail(Json{{"n", n}, {"class", key}, {"set_partitions", c[0]}, {"total_partition_trees", c[1]}, {"increasing_schroeder_trees", c[2]}});
    for (int k = 0; k <= n; ++k) {
      const auto un = static_cast<std::size_t>(n), uk = static_cast<std::size_t>(k);
      if (ExactRat(per_k[uk]) != t.at(un, uk)) r.fail(entry(un, uk, ExactRat(per_k[uk]), t.at(un, uk)));
    }
  }
  return r;
}

inline CheckResult weighted_table() {
  CheckResult r;
  const auto plain = ward_recurrence_table(12);
  const auto weighted = weighted_ward_table(12, WeightSystem::ones());
  for (std::size_t n = 0; n <= 12; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      if (plain.at(n, k) != weighted.at(n, k)) r.fail(entry(n, k, plain.at(n, k), weighted.at(n, k)));
  for (const auto& g : preset_weights()) {
    for (int n = 0; n <= 4; ++n) {
      std::map<std::size_t, ExactRat> by_k;
      enumerate_increasing_schroeder_trees(n + 1, [&](const SchroederTree& s) { by_k[block_count(s)] += weight_of(s, g); });
      for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) {
        const auto got = weighted_ward(static_cast<std::size_t>(n), k, g);
        if (got != by_k[k]) {
          auto j = entry(static_cast<std::size_t>(n), k, by_k[k], got);
          j["weights"] = g.name();
          r.fail(j);
        }
      }
    }
  }
  return r;
}

inline CheckResult sum_formulas() {
  CheckResult r;
  const auto t = ward_recurrence_table(9);
  for (long long n = 1; n <= 9; ++n) {
    const ExactRat d(ward_double_sum(n));
    if (d != t.row_sum(static_cast<std::size_t>(n - 1)))
      r.fail(Json{{"formula", "double_sum"}, {"n", n}, {"expected", to_string(t.row_sum(static_cast<std::size_t>(n - 1)))}, {"got", to_string(d)}});
  }
  const auto tol = make_rat(1, ExactInt("1000000000000"));
  for (long long n = 1; n <= 7; ++n) {
    const auto s = ward_tail_sum(n, tol);
    const auto exact = t.row_sum(static_cast<std::size_t>(n - 1));
    if (abs(s.partial_sum - exact) >= make_rat(1, 1000000))
      r.fail(Json{{"formula", "tail_sum"}, {"n", n}, {"expected", to_string(exact)}, {"got", s.partial_sum.convert_to<double>()}});
  }
  return r;
}

// --- bijections -------------------------------------------------------------

inline const char* six_leaf_total_json =
    R"({"children":[{"children":[{"leaf":1},{"children":[{"leaf":2},{"leaf":5}]}]},{"leaf":3},{"children":[{"leaf":4},{"leaf":6}]}]})";
inline const char* six_leaf_increasing_json =
    R"({"blocks":[[{"blocks":[],"label":3},{"blocks":[[{"blocks":[],"label":6}]],"label":4}],[{"blocks":[[{"blocks":[],"label":5}]],"label":2}]],"label":1})";

inline CheckResult total_partition_bijection() {
  CheckResult r;
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> images;
    long long domain = 0, codomain = 0;
    enumerate_total_partition_trees(n, [&](const TotalPartitionTree& t) {
      ++domain;
      const auto s = total_to_increasing(t);
      const bool member = is_canonical(s) && is_increasing(s) && labels_of(s) == iota_labels(n);
      const bool typed = type_of(s) == type_of(t) && block_count(s) == internal_count(t);
      if (!member || !typed || increasing_to_total(s) != t) r.fail(Json{{"input", to_json(t)}, {"image", to_json(s)}});
      images.insert(to_json(s).dump());
    });
    enumerate_increasing_schroeder_trees(n, [&](const SchroederTree&) { ++codomain; });
    if (static_cast<long long>(images.size()) != domain || domain != codomain)
      r.fail(Json{{"n", n}, {"distinct_images", images.size()}, {"domain", domain}, {"codomain", codomain}});
  }
  return r;
}

inline CheckResult six_leaf_pair() {
  CheckResult r;
  const auto left = total_from_json(Json::parse(six_leaf_total_json));
  const auto right = schroeder_from_json(Json::parse(six_leaf_increasing_json));
  const auto forward = to_json(total_to_increasing(left)).dump();
  const auto backward = to_json(increasing_to_total(right)).dump();
  if (forward != six_leaf_increasing_json) r.fail(Json{{"expected", six_leaf_increasing_json}, {"got", forward}});
  if (backward != six_leaf_total_json) r.fail(Json{{"expected", six_leaf_total_json}, {"got", backward}});
  return r;
}

inline CheckResult semilabeled_counts() {
  CheckResult r;
  for (int n = 0; n <= 4; ++n)
    for (int k = 1; k <= 3; ++k) {
      const auto rep = check_semilabeled_counts(n, k);
      if (!rep.ok() || rep.left_total != ExactRat(stirling2(n + k, k))) r.fail(to_json(rep));
    }
  return r;
}

// --- involutions ------------------------------------------------------------

inline CheckResult psi_prime_exhaustive() {
  CheckResult r;
  for (int n = 1; n <= 7; ++n) {
    const auto rep = check_psi_prime(n);
    if (!rep.ok()) r.fail(to_json(rep));
  }
  return r;
}

inline CheckResult psi_prime_pairs() {
  CheckResult r;
  const char* pairs[][2] = {
      {"[[1],[3],[2]]", "[[1],[2,3]]"}, {"[[2],[1],[3]]", "[[1,2],[3]]"}, {"[[2],[3],[1]]", "[[2],[1,3]]"},
      {"[[3],[1],[2]]", "[[1,3],[2]]"}, {"[[3],[2],[1]]", "[[3],[1,2]]"}, {"[[1,2,3]]", "[[2,3],[1]]"},
  };
  for (const auto& [from, to] : pairs) {
    const auto a = ordered_partition_from_json(Json::parse(from));
    const auto b = ordered_partition_from_json(Json::parse(to));
    if (psi_prime(a) != b || psi_prime(b) != a || sign_of(a) != -sign_of(b))
      r.fail(Json{{"input", from}, {"expected", to}, {"got", to_json(psi_prime(a))}});
  }
  if (!is_psi_prime_fixed_point(OrderedPartition{3, {{1}, {2}, {3}}})) r.fail(Json{{"fixed_point", "[[1],[2],[3]]"}});
  return r;
}

inline CheckResult alternating_identity() {
  CheckResult r;
  for (int n = 1; n <= 9; ++n) {
    const auto rep = verify_alternating_stirling_identity(n);
    if (!rep.ok()) r.fail(to_json(rep));
  }
  return r;
}

inline CheckResult psi_n_exhaustive() {
  CheckResult r;
  for (int n = 1; n <= 5; ++n)
    for (bool inc : {false, true}) {
      const auto rep = check_psi_n(n, inc);
      if (!rep.ok()) r.fail(to_json(rep));
    }
  return r;
}

inline CheckResult enriched_signed() {
  CheckResult r;
  for (int n = 1; n <= 5; ++n) {
    const auto rep = check_enriched_signed_count(n);
    if (!rep.ok()) r.fail(to_json(rep));
  }
  return r;
}

// --- chen-counts ------------------------------------------------------------

inline CheckResult tree_meadow_counts() {
  CheckResult r;
  for (int n = 1; n <= 6; ++n) {
    const auto rep = check_tree_meadow_counts(n, -1, WeightSystem::ones());
    if (!rep.plain.ok()) r.fail(to_json(rep.plain));
    if (!rep.increasing.ok()) r.fail(to_json(rep.increasing));
  }
  return r;
}

inline CheckResult enriched_vs_schroeder() {
  CheckResult r;
  for (int n = 1; n <= 6; ++n) {
    const auto rep = check_enriched_counts(n);
    if (!rep.ok()) r.fail(to_json(rep));
  }
  return r;
}

inline CheckResult weight_transfer() {
  CheckResult r;
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : preset_weights()) {
      const auto rep = check_weight_transfer(n, g);
      if (!rep.ok()) {
        auto j = to_json(rep);
        j["weights"] = g.name();
        r.fail(j);
      }
    }
  return r;
}

// --- table2 -----------------------------------------------------------------

inline CheckResult specializations() {
  CheckResult r;
  const auto rep = specialization_suite(8);
  if (const auto* f = rep.first_failure()) r.fail(to_json(*f));
  return r;
}

// --- series -----------------------------------------------------------------

inline CheckResult variant_equals_newton() {
  CheckResult r;
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ExactRat> c(13, ExactRat(0));
    c[1] = 1;
    for (std::size_t i = 2; i <= 12; ++i) c[i] = ExactRat(num(rng), den(rng));
    const TruncatedSeries h(c);
    const auto v = invert_variant(h);
    const auto x = TruncatedSeries::identity(12);
    if (v != invert_newton(h) || compose(h, v) != x || compose(v, h) != x)
      r.fail(Json{{"trial", trial}, {"series", to_json(h)}, {"variant", to_json(v)}, {"newton", to_json(invert_newton(h))}});
  }
  return r;
}

inline CheckResult ward_egf_inverse() {
  CheckResult r;
  std::vector<ExactRat> a(10, ExactRat(-1));
  a[0] = 0;
  a[1] = 1;
  const auto W = invert_newton(TruncatedSeries::from_egf(a));
  const auto t = ward_recurrence_table(8);
  for (std::size_t n = 1; n <= 9; ++n)
    if (W.egf(n) != t.row_sum(n - 1)) r.fail(Json{{"n", n}, {"expected", to_string(t.row_sum(n - 1))}, {"got", to_string(W.egf(n))}});
  const std::vector<long long> first{1, 1, 4, 26, 236};
  for (std::size_t n = 1; n <= 5; ++n)
    if (W.egf(n) != first[n - 1]) r.fail(Json{{"n", n}, {"expected", first[n - 1]}, {"got", to_string(W.egf(n))}});
  return r;
}

inline CheckResult functional_identities() {
  CheckResult r;
  for (const auto& g : preset_weights()) {
    const auto rep = ward_functional_check(g, 12);
    if (!rep.ok()) r.fail(to_json(rep));
    if (ward_egf_from_table(g, 12) != ward_egf(g, 12)) r.fail(Json{{"weights", g.name()}, {"mismatch", "table vs tree recurrences"}});
  }
  return r;
}

inline CheckResult lagrange_vs_newton() {
  CheckResult r;
  for (const auto& g : preset_weights()) {
    const auto h = ward_h(g, 10);
    const auto W = invert_newton(h);
    for (std::size_t n = 1; n <= 10; ++n)
      if (lagrange_classical(h, n) != W.egf(n))
        r.fail(Json{{"weights", g.name()}, {"n", n}, {"expected", to_string(W.egf(n))}, {"got", to_string(lagrange_classical(h, n))}});
  }
  return r;
}

inline std::vector<Check> checks_for(const std::string& suite) {
  if (suite == "recurrences")
    return {{"boundary_values", boundary_values},
            {"three_interpretations", three_interpretations},
            {"weighted_table", weighted_table},
            {"sum_formulas", sum_formulas}};
  if (suite == "bijections")
    return {{"total_partition_bijection", total_partition_bijection}, {"six_leaf_pair", six_leaf_pair}, {"semilabeled_counts", semilabeled_counts}};
  if (suite == "involutions")
    return {{"psi_prime_exhaustive", psi_prime_exhaustive},
            {"psi_prime_pairs", psi_prime_pairs},
            {"alternating_identity", alternating_identity},
            {"psi_n_exhaustive", psi_n_exhaustive},
            {"enriched_signed_count", enriched_signed}};
  if (suite == "chen-counts")
    return {{"tree_meadow_counts", tree_meadow_counts}, {"enriched_vs_schroeder", enriched_vs_schroeder}, {"weight_transfer", weight_transfer}};
  if (suite == "table2") return {{"specializations", specializations}};
  if (suite == "series")
    return {{"variant_equals_newton", variant_equals_newton},
            {"ward_egf_inverse", ward_egf_inverse},
            {"functional_identities", functional_identities},
            {"lagrange_vs_newton", lagrange_vs_newton}};
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

/// Runs one suite ("all" runs every suite in order) and returns the report.
inline Json run_suite(const std::string& suite) {
  const auto names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  Json checks = Json::array();
  Json first = nullptr;
  bool ok = true;
  for (const auto& s : names) {
    for (const auto& c : checks_for(s)) {
      const auto start = std::chrono::steady_clock::now();
      CheckResult res;
      try {
        res = c.run();
      } catch (const std::exception& e) {
        res.fail(Json{{"exception", e.what()}});
      }
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      checks.push_back(Json{{"suite", s}, {"name", c.name}, {"ok", res.ok}, {"seconds", secs}});
      if (!res.ok && ok) first = Json{{"suite", s}, {"check", c.name}, {"detail", res.counterexample}};
      ok = ok && res.ok;
    }
  }
  return Json{{"suite", suite}, {"ok", ok}, {"checks", std::move(checks)}, {"first_counterexample", std::move(first)}};
}

}  // namespace wardcomb::verify
