#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "wardcomb/bijections.hpp"
#include "wardcomb/json_io.hpp"

using namespace wardcomb;
using fixtures::op;
using fixtures::vertex;

TEST(TotalToIncreasing, SixLeafPairByteForByte) {
  auto image = total_to_increasing(fixtures::six_leaf_total());
  EXPECT_EQ(image, fixtures::six_leaf_increasing());
  EXPECT_EQ(to_json(image).dump(), fixtures::six_leaf_increasing_json);
  auto back = increasing_to_total(fixtures::six_leaf_increasing());
  EXPECT_EQ(back, fixtures::six_leaf_total());
  EXPECT_EQ(to_json(back).dump(), fixtures::six_leaf_total_json);
}

TEST(TotalToIncreasing, SmallCases) {
  EXPECT_EQ(total_to_increasing(make_leaf(1)), vertex(1));
  EXPECT_EQ(increasing_to_total(vertex(1)), make_leaf(1));
  EXPECT_EQ(total_to_increasing(make_internal({make_leaf(1), make_leaf(2)})), vertex(1, {{vertex(2)}}));
  EXPECT_EQ(increasing_to_total(vertex(1, {{vertex(2)}})), make_internal({make_leaf(1), make_leaf(2)}));
}

TEST(TotalToIncreasing, BijectionUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> images;
    long long domain = 0;
    enumerate_total_partition_trees(n, [&](const TotalPartitionTree& t) {
      auto s = total_to_increasing(t);
      EXPECT_TRUE(is_canonical(s));
      EXPECT_TRUE(is_increasing(s));
      EXPECT_EQ(labels_of(s), iota_labels(n));
      EXPECT_EQ(block_count(s), internal_count(t));
      EXPECT_EQ(type_of(s), type_of(t));
      EXPECT_EQ(increasing_to_total(s), t);
      images.insert(to_json(s).dump());
      ++domain;
    });
    EXPECT_EQ(static_cast<long long>(images.size()), domain);
    long long codomain = 0;
    enumerate_increasing_schroeder_trees(n, [&](const SchroederTree& s) {
      EXPECT_EQ(total_to_increasing(increasing_to_total(s)), s);
      EXPECT_TRUE(images.count(to_json(s).dump()));
      ++codomain;
    });
    EXPECT_EQ(codomain, domain);
  }
}

TEST(IncreasingToTotal, RejectsNonIncreasing) {
  EXPECT_THROW(increasing_to_total(vertex(2, {{vertex(1)}})), std::invalid_argument);
}

TEST(PsiPrime, TablePairs) {
  for (const auto& [from, to] : fixtures::psi_prime_pairs_on_3()) {
    EXPECT_EQ(psi_prime(from), to);
    EXPECT_EQ(psi_prime(to), from);
    EXPECT_EQ(sign_of(from), 1);
    EXPECT_EQ(sign_of(to), -1);
  }
}

TEST(PsiPrime, FixedPointThrows) {
  EXPECT_THROW(psi_prime(op(3, {{1}, {2}, {3}})), FixedPointError);
  EXPECT_THROW(psi_prime(op(1, {{1}})), FixedPointError);
  EXPECT_THROW(psi_prime(op(3, {{1}, {2}})), std::invalid_argument);
  EXPECT_TRUE(is_psi_prime_fixed_point(op(2, {{1}, {2}})));
  EXPECT_FALSE(is_psi_prime_fixed_point(op(2, {{2}, {1}})));
}

TEST(PsiPrime, ExhaustiveUpToSeven) {
  for (int n = 1; n <= 7; ++n) {
    auto r = check_psi_prime(n);
    EXPECT_TRUE(r.ok()) << n << " " << r.first_violation;
    EXPECT_EQ(r.fixed_points, 1);
    EXPECT_EQ(ExactInt(r.objects), oracle::count_ordered_partitions(n));
    EXPECT_EQ(2 * r.pairs_checked + 1, r.objects);
  }
}

TEST(PsiPrime, ThreeHasSixPairs) {
  auto r = check_psi_prime(3);
  EXPECT_EQ(r.pairs_checked, 6);
  auto a = verify_alternating_stirling_identity(3);
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.cancelled_pairs, 6);
}

TEST(AlternatingStirling, BothPaths) {
  for (int n = 1; n <= 8; ++n) {
    auto r = verify_alternating_stirling_identity(n);
    EXPECT_TRUE(r.ok()) << n;
    EXPECT_EQ(r.closed_form, sign_power(n));
    EXPECT_EQ(r.paired, sign_power(n));
    EXPECT_EQ(ExactInt(2 * r.cancelled_pairs + 1), oracle::count_ordered_partitions(n));
  }
}

TEST(PsiN, Examples) {
  auto t = vertex(1, {{vertex(3)}, {vertex(2)}});
  EXPECT_FALSE(is_psi_fixed_point(t));
  EXPECT_EQ(psi_n(t), vertex(1, {{vertex(2), vertex(3)}}));
  EXPECT_EQ(psi_n(vertex(1, {{vertex(2), vertex(3)}})), t);
  auto path = vertex(1, {{vertex(2, {{vertex(3)}})}});
  EXPECT_TRUE(is_psi_fixed_point(path));
  EXPECT_THROW(psi_n(path), FixedPointError);
  EXPECT_THROW(psi_n(vertex(1)), FixedPointError);
}

TEST(PsiN, RecursesIntoFirstNonFixedChild) {
  // root's children 2 < 5; subtree 2 is fixed, subtree 5 is not
  auto t = vertex(1, {{vertex(2)}, {vertex(5, {{vertex(4)}, {vertex(3)}})}});
  auto expected = vertex(1, {{vertex(2)}, {vertex(5, {{vertex(3), vertex(4)}})}});
  EXPECT_EQ(psi_n(t), expected);
  EXPECT_EQ(parent_map(psi_n(t)), parent_map(t));
}

TEST(PsiN, ExhaustiveUpToFive) {
  for (int n = 1; n <= 5; ++n) {
    auto all = check_psi_n(n, false);
    EXPECT_TRUE(all.ok()) << n << " " << all.first_violation;
    EXPECT_EQ(ExactInt(all.fixed_points), oracle::power(n, n - 1));
    EXPECT_EQ(ExactInt(all.signed_sum), oracle::power(n, n - 1));
    auto inc = check_psi_n(n, true);
    EXPECT_TRUE(inc.ok()) << n << " " << inc.first_violation;
    EXPECT_EQ(ExactInt(inc.fixed_points), oracle::fact(n - 1));
    EXPECT_EQ(ExactInt(inc.signed_sum), oracle::fact(n - 1));
  }
}

TEST(EnrichedSignedCount, PowersOfN) {
  for (int n = 1; n <= 5; ++n) {
    auto r = check_enriched_signed_count(n);
    EXPECT_TRUE(r.ok()) << n;
    EXPECT_EQ(ExactInt(r.signed_sum), oracle::power(n, n - 1));
  }
}

TEST(TreeMeadowCounts, Examples) {
  auto r = check_tree_meadow_counts(4, 2, WeightSystem::ones());
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.plain.left_total, 60);
  EXPECT_EQ(r.plain.right_total, 60);
  for (int n = 2; n <= 4; ++n) {
    auto z = check_tree_meadow_counts(n, 0, WeightSystem::ones());
    EXPECT_EQ(z.plain.left_total, 0);
    EXPECT_EQ(z.plain.right_total, 0);
  }
  auto inc = check_tree_meadow_counts(3, 1, WeightSystem::ones());
  EXPECT_TRUE(inc.increasing.ok());
  EXPECT_FALSE(inc.increasing.per_type.empty());
}

TEST(TreeMeadowCounts, AllKUpToSix) {
  auto g = WeightSystem::from_list({ExactRat(2), ExactRat(-1, 3), ExactRat(5), ExactRat(7, 2), ExactRat(1), ExactRat(3)});
  for (int n = 1; n <= 6; ++n) {
    auto r = check_tree_meadow_counts(n, -1, g);
    EXPECT_TRUE(r.ok()) << n;
  }
}

TEST(SemilabeledCounts, Examples) {
  auto a = check_semilabeled_counts(1, 2);
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.left_total, 3);
  auto b = check_semilabeled_counts(2, 1);
  EXPECT_TRUE(b.ok());
  EXPECT_EQ(b.left_total, 1);
  auto c = check_semilabeled_counts(2, 2);
  EXPECT_TRUE(c.ok());
  EXPECT_EQ(c.left_total, 7);
  for (int n = 0; n <= 4; ++n)
    for (int k = 1; n + k <= 7; ++k) EXPECT_TRUE(check_semilabeled_counts(n, k).ok()) << n << "," << k;
}

TEST(WeightTransfer, Examples) {
  auto a = check_weight_transfer(3, WeightSystem::ones());
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.left_total, 15);
  auto g = WeightSystem::from_list({ExactRat(7, 3)});
  auto b = check_weight_transfer(2, g);
  EXPECT_TRUE(b.ok());
  EXPECT_EQ(b.left_total, ExactRat(14, 3));
  auto c = check_weight_transfer(1, g);
  EXPECT_EQ(c.left_total, 1);
  EXPECT_EQ(c.right_total, 1);
}

TEST(WeightTransfer, PresetsUpToSix) {
  for (auto p : {WeightPreset::ones, WeightPreset::i_plus_1, WeightPreset::factorial_i, WeightPreset::factorial_i_plus_1,
                 WeightPreset::factorial_i_minus_1})
    for (int n = 1; n <= 6; ++n) EXPECT_TRUE(check_weight_transfer(n, WeightSystem::preset(p)).ok()) << n;
}

TEST(EnrichedCounts, UpToSix) {
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(check_enriched_counts(n).ok()) << n;
}

TEST(Reports, DetectMismatch) {
  EqualityReport r;
  r.per_type["x"] = {ExactRat(1), ExactRat(2)};
  EXPECT_FALSE(r.ok());
  InvolutionReport i;
  i.expected_fixed_points = 1;
  EXPECT_FALSE(i.ok());
}
