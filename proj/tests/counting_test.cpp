#include <gtest/gtest.h>

#include <map>

#include "ncflab/counting.hpp"
#include "ncflab/enumeration.hpp"
#include "ncflab/ncf.hpp"
#include "ncflab/symmetry.hpp"
#include "test_util.hpp"

using namespace ncflab;

namespace {

// Multinomial sum by direct recursion over compositions, independent of the library's walk.
BigInt oracle_by_layers(int n, int r) {
  BigInt sum = 0;
  std::function<void(int, int, BigInt)> go = [&](int left, int layers, BigInt ways) {
    if (layers == r) {
      if (left == 0) sum += ways;
      return;
    }
    const int min_part = layers == r - 1 ? 2 : 1;
    for (int k = min_part; k <= left; ++k) {
      go(left - k, layers + 1, ways * factorial(left) / (factorial(k) * factorial(left - k)));
    }
  };
  go(n, 0, 1);
  return sum << (n + 1);
}

}  // namespace

TEST(Counting, TotalsAndLayers) {
  EXPECT_EQ(count_total(2), 8);
  EXPECT_EQ(count_total(3), 64);
  EXPECT_EQ(count_total(4), 736);
  EXPECT_EQ(count_total(5), 10624);
  EXPECT_EQ(count_by_layers(3, 1), 16);
  EXPECT_EQ(count_by_layers(3, 2), 48);
  EXPECT_THROW(count_by_layers(4, 4), InputError);
  EXPECT_THROW(count_total(1), InputError);
}

TEST(Counting, ByLayersMatchesRecursiveOracle) {
  for (int n = 2; n <= 15; ++n) {
    for (int r = 1; r <= n - 1; ++r) ASSERT_EQ(count_by_layers(n, r), oracle_by_layers(n, r)) << n << "," << r;
  }
}

TEST(Counting, MaxLayersClosedForm) {
  for (int n = 2; n <= 20; ++n) EXPECT_EQ(count_by_layers(n, n - 1), factorial(n) << n);
}

TEST(Counting, StronglyAsymmetricValues) {
  EXPECT_EQ(count_strongly_asymmetric(2), 4);
  EXPECT_EQ(count_strongly_asymmetric(3), 24);
  EXPECT_EQ(count_strongly_asymmetric(4), 240);
  EXPECT_EQ(count_s_symmetric(3, 2), 36);
  for (int n = 2; n <= 10; ++n) EXPECT_EQ(count_s_symmetric(n, 1), 4);
}

TEST(Counting, SymmetryHistogramSumsToTotal) {
  for (int n = 2; n <= 12; ++n) {
    BigInt sum = 0, layers = 0;
    for (int s = 1; s <= n; ++s) sum += count_s_symmetric(n, s);
    for (int r = 1; r <= n - 1; ++r) layers += count_by_layers(n, r);
    EXPECT_EQ(sum, count_total(n)) << n;
    EXPECT_EQ(layers, count_total(n)) << n;
  }
}

TEST(Counting, TripleSumCoversEdges) {
  for (int n = 2; n <= 12; ++n) {
    EXPECT_EQ(count_s_symmetric_triple_sum(n, 1), 4) << n;
    EXPECT_EQ(count_s_symmetric_triple_sum(n, n), count_strongly_asymmetric(n)) << n;
  }
}

TEST(Counting, PellMatchesRestrictedSum) {
  for (int n = 2; n <= 20; ++n) EXPECT_EQ(count_strongly_asymmetric(n), count_strongly_asymmetric_restricted_sum(n)) << n;
}

TEST(Counting, PellExceedsMaxLayerCount) {
  for (int n = 4; n <= 20; ++n) EXPECT_GT(count_strongly_asymmetric(n), count_strongly_asym_max_layers(n)) << n;
  EXPECT_EQ(count_strongly_asymmetric(3), count_strongly_asym_max_layers(3));
}

TEST(Counting, AgreesWithClassificationOfAllFunctions) {
  for (int n = 2; n <= 4; ++n) {
    std::uint64_t ncfs = 0;
    std::map<int, std::uint64_t> by_r, by_s;
    ncflab::test::for_each_function(n, [&](const BooleanFunction& f) {
      const auto c = decompose(f);
      if (!c.is_ncf()) return;
      ++ncfs;
      ++by_r[c.decomposition().layer_count()];
      ++by_s[symmetry_level(f)];
    });
    EXPECT_EQ(BigInt(ncfs), count_total(n));
    for (int r = 1; r <= n - 1; ++r) EXPECT_EQ(BigInt(by_r[r]), count_by_layers(n, r));
    for (int s = 1; s <= n; ++s) EXPECT_EQ(BigInt(by_s[s]), count_s_symmetric(n, s));
  }
}

TEST(Counting, EnumeratedSymmetryCensusAtFive) {
  std::map<int, std::uint64_t> by_s;
  for_each_ncf(5, [&](const LayerDecomposition& d) { ++by_s[symmetry_level(compose(d))]; });
  for (int s = 1; s <= 5; ++s) EXPECT_EQ(BigInt(by_s[s]), count_s_symmetric(5, s)) << s;
}

TEST(Counting, TableAndGuard) {
  const auto t = count_table(4);
  EXPECT_EQ(t.total, 736);
  EXPECT_EQ(t.by_symmetry.at(4), 240);
  EXPECT_EQ(t.strongly_asym_max_layers, 192);
  EXPECT_THROW(count_table(21), GuardError);
  EXPECT_NO_THROW(count_table(21, 21));
  // 2^(2^n) grows far past 64 bits long before the guard
  EXPECT_GT(count_total(20), BigInt(1) << 64);
}
