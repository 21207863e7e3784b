#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wardcomb/structures.hpp"
#include "wardcomb/ward.hpp"

using namespace wardcomb;

TEST(WardRecurrence, BoundaryValues) {
  const auto t = ward_recurrence_table(10);
  EXPECT_EQ(t.at(0, 0), 1);
  EXPECT_EQ(t.at(3, 2), 10);
  EXPECT_EQ(t.at(4, 4), 105);
  for (std::size_t n = 1; n <= 10; ++n) {
    EXPECT_EQ(t.at(n, 0), 0);
    EXPECT_EQ(t.at(n, 1), 1);
    EXPECT_EQ(t.at(n, 2), ExactRat(oracle::power(2, static_cast<long long>(n) + 1) - ExactInt(n) - 3));
    EXPECT_EQ(t.at(n, n), ExactRat(oracle::fact(2 * static_cast<long long>(n)) / (oracle::power(2, static_cast<long long>(n)) * oracle::fact(static_cast<long long>(n)))));
  }
  EXPECT_THROW(t.at(11, 0), std::out_of_range);
}

TEST(WardRecurrence, RowFour) {
  const auto t = ward_recurrence_table(4);
  std::vector<ExactRat> row;
  for (std::size_t k = 0; k <= 4; ++k) row.push_back(t.at(4, k));
  EXPECT_EQ(row, (std::vector<ExactRat>{0, 1, 25, 105, 105}));
}

TEST(WardRecurrence, MatchesPartitionCounts) {
  const auto t = ward_recurrence_table(5);
  for (int n = 0; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) EXPECT_EQ(t.at(static_cast<std::size_t>(n), static_cast<std::size_t>(k)), oracle::ward_by_partitions(n, k)) << n << "," << k;
}

TEST(WardRecurrence, RowSums) {
  const auto t = ward_recurrence_table(9);
  const std::vector<long long> sums{1, 1, 4, 26, 236, 2752, 39208, 660032, 12818912, 282137824};
  for (std::size_t n = 0; n <= 9; ++n) EXPECT_EQ(t.row_sum(n), sums[n]);
}

TEST(S2Recurrence, Values) {
  EXPECT_EQ(s2_recurrence(4, 2), 3);
  EXPECT_EQ(s2_recurrence(1, 1), 0);
  EXPECT_EQ(s2_recurrence(0, 0), 1);
  const auto t = ward_recurrence_table(8);
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) EXPECT_EQ(ExactRat(s2_recurrence(n + k, k)), t.at(static_cast<std::size_t>(n), static_cast<std::size_t>(k)));
  for (int m = 0; m <= 9; ++m)
    for (int k = 0; k <= m; ++k) EXPECT_EQ(s2_recurrence(m, k), oracle::count_set_partitions(m, k, 2));
}

TEST(WeightedWard, Examples) {
  for (std::size_t n = 0; n <= 8; ++n) EXPECT_EQ(weighted_ward(n, n, WeightSystem::delta(1, 1)), ExactRat(double_factorial_odd(static_cast<long long>(n))));
  EXPECT_EQ(weighted_ward(2, 1, WeightSystem::preset(WeightPreset::i_plus_1)), 3);
  EXPECT_EQ(weighted_ward(3, 2, WeightSystem::ones()), 10);
  EXPECT_EQ(weighted_ward(0, 0, WeightSystem::ones()), 1);
  EXPECT_EQ(weighted_ward(3, 0, WeightSystem::ones()), 0);
  EXPECT_EQ(weighted_ward(2, 3, WeightSystem::ones()), 0);
}

TEST(WeightedWard, OnesMatchRecurrence) {
  const auto t = ward_recurrence_table(9);
  const auto w = weighted_ward_table(9, WeightSystem::ones());
  for (std::size_t n = 0; n <= 9; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      EXPECT_EQ(weighted_ward(n, k, WeightSystem::ones()), t.at(n, k));
      EXPECT_EQ(w.at(n, k), t.at(n, k));
    }
}

TEST(WeightedWard, ReadsOnlyTheWeightsItNeeds) {
  // W^g(n,k) uses g_1..g_(n-k+1)
  auto g = WeightSystem::from_list({ExactRat(2), ExactRat(3)});
  EXPECT_EQ(weighted_ward(2, 1, g), 3);  // one block of size 3
  EXPECT_EQ(weighted_ward(2, 2, g), 12);  // 3 partitions of [4] into pairs, each 2*2
  EXPECT_THROW(weighted_ward(3, 1, g), IncompleteWeightSystem);
}

TEST(WeightedWard, MatchesTypeWeightedEnumeration) {
  // sum over set partitions of [n+k] into k blocks >= 2 of prod g_(|B|-1)
  auto g = WeightSystem::from_list({ExactRat(1, 2), ExactRat(-3), ExactRat(5, 7), ExactRat(2), ExactRat(-1)});
  for (int n = 0; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) {
      ExactRat sum = 0;
      enumerate_set_partitions(n + k, k, 2, [&](const SetPartition& p) { sum += weight_of(type_of(p), g); });
      EXPECT_EQ(weighted_ward(static_cast<std::size_t>(n), static_cast<std::size_t>(k), g), sum) << n << "," << k;
    }
}

TEST(WeightedWard, AlternatingSumIsSignedEnumeration) {
  // with g = ones the alternating sum is the signed count of increasing trees
  const auto t = ward_recurrence_table(5);
  for (int n = 0; n <= 5; ++n) {
    long long signed_sum = 0;
    enumerate_increasing_schroeder_trees(n + 1, [&](const SchroederTree& s) { signed_sum += sign_of(s); });
    EXPECT_EQ(t.alternating_sum(static_cast<std::size_t>(n)), signed_sum);
  }
}

TEST(ClosedForms, Examples) {
  EXPECT_EQ(ward_closed_form(3, 2, ClosedFormKind::set), 10);
  EXPECT_EQ(ward_closed_form(2, 1, ClosedFormKind::enriched), 3);
  const auto t = ward_recurrence_table(8);
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) EXPECT_EQ(ExactRat(ward_closed_form(n, k, ClosedFormKind::set)), t.at(static_cast<std::size_t>(n), static_cast<std::size_t>(k)));
  EXPECT_EQ(parse_closed_form_kind("lah"), ClosedFormKind::lah);
  EXPECT_FALSE(parse_closed_form_kind("nope").has_value());
}

TEST(ClosedForms, MatchWeightedTables) {
  const std::vector<std::pair<WeightPreset, ClosedFormKind>> rows{
      {WeightPreset::ones, ClosedFormKind::set},
      {WeightPreset::i_plus_1, ClosedFormKind::enriched},
      {WeightPreset::factorial_i, ClosedFormKind::cycle},
      {WeightPreset::factorial_i_plus_1, ClosedFormKind::lah},
  };
  for (auto [p, kind] : rows) {
    const auto t = weighted_ward_table(7, WeightSystem::preset(p));
    for (int n = 0; n <= 7; ++n)
      for (int k = 0; k <= n; ++k) EXPECT_EQ(t.at(static_cast<std::size_t>(n), static_cast<std::size_t>(k)), ExactRat(ward_closed_form(n, k, kind)));
  }
}

TEST(SpecializationSuite, PassesAtEight) {
  auto r = specialization_suite(8);
  const auto* bad = r.first_failure();
  EXPECT_EQ(bad, nullptr) << (bad ? bad->row + " " + bad->quantity + " n=" + std::to_string(bad->n) : "");
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.checks.size(), 100u);
}

TEST(SpecializationSuite, KnownRowValues) {
  // independent spot checks of the table's closed forms
  const auto ip1 = weighted_ward_table(6, WeightSystem::preset(WeightPreset::i_plus_1));
  const auto plain = oracle::schroeder_tree_counts(7, false);
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(ip1.row_sum(n), ExactRat(plain[n + 1]));
  const auto fm1 = weighted_ward_table(6, WeightSystem::preset(WeightPreset::factorial_i_minus_1));
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(fm1.row_sum(n), ExactRat(oracle::power(static_cast<long long>(n), static_cast<long long>(n))));
  const auto fp1 = weighted_ward_table(8, WeightSystem::preset(WeightPreset::factorial_i_plus_1));
  const std::vector<long long> fp1_sums{1, 2, 18, 264, 5400, 141840, 4551120, 172529280, 7545363840};
  for (std::size_t n = 0; n <= 8; ++n) EXPECT_EQ(fp1.row_sum(n), fp1_sums[n]);
  const auto fi = weighted_ward_table(5, WeightSystem::preset(WeightPreset::factorial_i));
  const std::vector<long long> fi_sums{1, 1, 5, 41, 469, 6889};
  for (std::size_t n = 0; n <= 5; ++n) EXPECT_EQ(fi.row_sum(n), fi_sums[n]);
}

TEST(WVSequences, OnesAndEnumeration) {
  const auto s = wv_sequences(WeightSystem::ones(), 6);
  EXPECT_EQ(std::vector<ExactRat>(s.W.begin() + 1, s.W.begin() + 6), (std::vector<ExactRat>{1, 1, 4, 26, 236}));
  for (int n = 1; n <= 6; ++n) {
    long long c = 0, single = 0;
    enumerate_increasing_schroeder_trees(n, [&](const SchroederTree& t) {
      ++c;
      single += t.blocks.size() == 1;
    });
    EXPECT_EQ(s.W[static_cast<std::size_t>(n)], c);
    EXPECT_EQ(s.V[static_cast<std::size_t>(n)], single);
  }
}

TEST(WVSequences, TwoVertexTree) {
  auto g = WeightSystem::from_list({ExactRat(5, 3)});
  const auto s = wv_sequences(g, 2);
  EXPECT_EQ(s.W[2], ExactRat(5, 3));
  EXPECT_EQ(s.V[2], ExactRat(5, 3));
}

TEST(WVSequences, MatchWeightedRowSums) {
  for (auto p : {WeightPreset::ones, WeightPreset::i_plus_1, WeightPreset::factorial_i, WeightPreset::factorial_i_plus_1,
                 WeightPreset::factorial_i_minus_1}) {
    const auto w = WeightSystem::preset(p);
    const auto s = wv_sequences(w, 9);
    const auto t = weighted_ward_table(8, w);
    for (std::size_t n = 1; n <= 9; ++n) EXPECT_EQ(s.W[n], t.row_sum(n - 1)) << w.name() << " " << n;
  }
}

TEST(WeightSpecs, ParseAndName) {
  for (std::string spec : {"ones", "i_plus_1", "factorial_i", "factorial_i_plus_1", "factorial_i_minus_1", "signed_ones",
                           "delta:2:-2/5", "list:1,1/2,3"})
    EXPECT_EQ(parse_weights(spec).name(), spec);
  EXPECT_EQ(parse_weights("delta1").name(), "delta:1:1");
  EXPECT_EQ(parse_weights("delta2").name(), "delta:1:2");
  EXPECT_EQ(parse_weights("1,2/3").name(), "list:1,2/3");
  EXPECT_EQ(parse_weights("signed_ones")(2), -1);
  EXPECT_EQ(parse_weights("signed_ones")(3), 1);
  EXPECT_EQ(parse_weights("factorial_i_minus_1")(1), 1);
  EXPECT_EQ(parse_weights("delta:2:3")(2), 3);
  EXPECT_EQ(parse_weights("delta:2:3")(1), 0);
  EXPECT_THROW(parse_weights("bogus"), std::invalid_argument);
  EXPECT_THROW(parse_weights("delta:0:1"), std::invalid_argument);
  EXPECT_THROW(parse_weights("delta:x"), std::invalid_argument);
  EXPECT_THROW(parse_weights("signed_list:1"), std::invalid_argument);
  EXPECT_THROW(parse_weights("list:"), std::invalid_argument);
  EXPECT_THROW(parse_weights("list:1")(2), IncompleteWeightSystem);
}
