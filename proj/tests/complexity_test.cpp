#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "ncflab/complexity.hpp"
#include "ncflab/enumeration.hpp"
#include "ncflab/ncf.hpp"
#include "test_util.hpp"

using namespace ncflab;
using ncflab::test::random_function;
using ncflab::test::random_permutation;
using ncflab::test::random_word;
using ncflab::test::worked_example;

namespace {

// Smallest |S| such that every word agreeing with w on S has value f(w).
int oracle_certificate(const BooleanFunction& f, Index w) {
  const Index all = f.size() - 1;
  int best = f.arity();
  for (Index s = 0; s <= all; ++s) {
    bool fixes = true;
    for (Index v = 0; v <= all && fixes; ++v) {
      if (((v ^ w) & s) == 0 && f.at(v) != f.at(w)) fixes = false;
    }
    if (fixes) best = std::min(best, std::popcount(s));
  }
  return best;
}

CertTriple oracle_profile(const BooleanFunction& f) {
  CertTriple t;
  for (Index w = 0; w < f.size(); ++w) {
    const int c = oracle_certificate(f, w);
    (f.at(w) ? t.c1 : t.c0) = std::max(f.at(w) ? t.c1 : t.c0, c);
  }
  t.c = std::max(t.c0, t.c1);
  return t;
}

// Exhaustive search over all families of disjoint sensitive blocks.
int oracle_block_sensitivity(const BooleanFunction& f, Index w, Index used) {
  int best = 0;
  const Index all = f.size() - 1;
  for (Index b = 1; b <= all; ++b) {
    if ((b & used) != 0 || f.at(w ^ b) == f.at(w)) continue;
    best = std::max(best, 1 + oracle_block_sensitivity(f, w, used | b));
  }
  return best;
}

BooleanFunction majority(int n) {
  return BooleanFunction::from_predicate(n, [n](Index w) { return 2 * std::popcount(w) > n; });
}

Word word_of(std::string_view bits) { return Word::parse(bits); }

}  // namespace

TEST(CertificateAt, WorkedExampleRows) {
  const auto f = worked_example();
  // C(f, alpha) for alpha = 000, 001, 010, 011, 100, 101, 110, 111 written as a1a2a3
  const std::pair<const char*, int> rows[] = {{"000", 2}, {"001", 1}, {"010", 2}, {"011", 1},
                                              {"100", 2}, {"101", 1}, {"110", 2}, {"111", 1}};
  for (const auto& [bits, c] : rows) EXPECT_EQ(certificate_at(f, word_of(bits)).size, c) << bits;
  EXPECT_EQ(certificate_at(f, word_of("000")).certificate, (std::vector<int>{1, 3}));
  EXPECT_EQ(certificate_at(f, word_of("110")).certificate, (std::vector<int>{1, 2}));
  EXPECT_EQ(certificate_at(f, word_of("001")).certificate, (std::vector<int>{3}));
}

TEST(CertificateAt, MonomialAndGuard) {
  const auto m = BooleanFunction::from_predicate(3, [](Index w) { return w == 7; });
  EXPECT_EQ(certificate_at(m, word_of("111")).certificate, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(certificate_at(m, word_of("010")).certificate, (std::vector<int>{1}));
  EXPECT_EQ(certificate_at(BooleanFunction::constant(2, true), word_of("01")).size, 0);
  EXPECT_THROW(certificate_at(m, Word(2, 0)), InputError);
  EXPECT_THROW(certificate_at(BooleanFunction::constant(5, false), Word(5, 0), ComplexityLimits{4, 4}), GuardError);
}

TEST(CertProfile, Examples) {
  const auto t1 = cert_profile(worked_example());
  EXPECT_EQ((CertTriple{t1.c0, t1.c1, t1.c}), (CertTriple{2, 2, 2}));
  const auto m = cert_profile(BooleanFunction::from_predicate(3, [](Index w) { return w == 7; }));
  EXPECT_EQ((CertTriple{m.c0, m.c1, m.c}), (CertTriple{1, 3, 3}));
  const auto x = cert_profile(BooleanFunction::from_predicate(2, [](Index w) { return std::popcount(w) == 1; }));
  EXPECT_EQ((CertTriple{x.c0, x.c1, x.c}), (CertTriple{2, 2, 2}));
  const auto k = cert_profile(BooleanFunction::constant(3, true));
  EXPECT_TRUE(k.degenerate);
  EXPECT_EQ((CertTriple{k.c0, k.c1, k.c}), (CertTriple{0, 0, 0}));
}

TEST(CertProfile, WitnessesListedPerWord) {
  ProfileOptions o;
  o.witnesses = true;
  const auto p = cert_profile(worked_example(), o);
  ASSERT_TRUE(p.witnesses.has_value());
  ASSERT_EQ(p.witnesses->size(), 8u);
  EXPECT_EQ((*p.witnesses)[0].certificate, (std::vector<int>{1, 3}));
  EXPECT_EQ((*p.witnesses)[3].word, word_of("110"));
}

TEST(CertProfile, MatchesSubsetOracle) {
  std::mt19937_64 rng(41);
  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto f = random_function(n, rng);
      const auto p = cert_profile(f);
      ASSERT_EQ((CertTriple{p.c0, p.c1, p.c}), oracle_profile(f));
    }
  }
}

TEST(CertFormula, Examples) {
  const int s112[] = {1, 1, 2};
  EXPECT_EQ(ncf_cert_formula(s112, false), (CertTriple{2, 3, 3}));
  const int s12[] = {1, 2};
  EXPECT_EQ(ncf_cert_formula(s12, true), (CertTriple{2, 2, 2}));
  const int s3[] = {3};
  EXPECT_EQ(ncf_cert_formula(s3, true), (CertTriple{1, 3, 3}));
  EXPECT_EQ(ncf_cert_formula(s3, false), (CertTriple{3, 1, 3}));
}

TEST(CertFormula, AgreesWithOracleOnAllSmallNcfs) {
  for (int n = 2; n <= 4; ++n) {
    for_each_ncf(n, [](const LayerDecomposition& d) {
      const auto s = layer_structure(d);
      ASSERT_EQ(ncf_cert_formula(s, d.b), oracle_profile(compose(d))) << format_decomposition(d);
    });
  }
}

TEST(Sensitivity, Examples) {
  EXPECT_EQ(sensitivity(worked_example()), 2);
  EXPECT_EQ(sensitivity_at(worked_example(), word_of("000")), 1);
  EXPECT_EQ(sensitivity_at(worked_example(), word_of("110")), 2);
  EXPECT_EQ(sensitivity(BooleanFunction::from_predicate(4, [](Index w) { return std::popcount(w) % 2; })), 4);
  EXPECT_EQ(sensitivity(BooleanFunction::constant(3, false)), 0);
}

TEST(Sensitivity, BoundedByCertificatePerWord) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto f = random_function(n, rng);
    const auto w = random_word(n, rng);
    ASSERT_LE(sensitivity_at(f, w), block_sensitivity_at(f, w));
    ASSERT_LE(block_sensitivity_at(f, w), certificate_at(f, w).size);
  }
}

TEST(BlockSensitivity, MatchesExhaustiveOracle) {
  std::mt19937_64 rng(47);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto f = random_function(n, rng);
      for (Index w = 0; w < f.size(); ++w) {
        ASSERT_EQ(block_sensitivity_at(f, Word(n, w)), oracle_block_sensitivity(f, w, 0));
      }
    }
  }
}

TEST(BlockSensitivity, MajorityOfFiveSmoke) {
  const auto f = majority(5);
  EXPECT_EQ(sensitivity(f), 3);
  EXPECT_EQ(block_sensitivity(f), 3);
  EXPECT_EQ(cert_profile(f).c, 3);
  EXPECT_GE(block_sensitivity(f), sensitivity(f));
  EXPECT_THROW(block_sensitivity(majority(7)), GuardError);
}

TEST(BlockSensitivity, ExceedsSensitivityOnKnownSeparation) {
  // f = [popcount(w) == 2]: no single flip at 0000 changes f, two disjoint pairs do.
  const auto f = BooleanFunction::from_predicate(4, [](Index w) { return std::popcount(w) == 2; });
  EXPECT_EQ(sensitivity_at(f, Word(4, 0)), 0);
  EXPECT_EQ(block_sensitivity_at(f, Word(4, 0)), 2);
}

TEST(MeasureCollapse, AllSmallNcfs) {
  for (int n = 2; n <= 4; ++n) {
    for_each_ncf(n, [](const LayerDecomposition& d) {
      const auto f = compose(d);
      const int c = cert_profile(f).c;
      ASSERT_EQ(sensitivity(f), c);
      ASSERT_EQ(block_sensitivity(f), c);
    });
  }
}

TEST(Transform, PreservesOrSwapsFiberCertificates) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto f = random_function(n, rng);
    const bool c = rng() & 1u;
    const auto g = transform(f, random_permutation(n, rng), random_word(n, rng), c);
    const auto pf = cert_profile(f);
    const auto pg = cert_profile(g);
    ASSERT_EQ(pg.c, pf.c);
    ASSERT_EQ(pg.c0, c ? pf.c1 : pf.c0);
    ASSERT_EQ(pg.c1, c ? pf.c0 : pf.c1);
  }
}

TEST(ParallelKernels, MatchSerialReference) {
  std::mt19937_64 rng(59);
  ProfileOptions o;
  o.witnesses = true;
  for (int n = 0; n <= 9; ++n) {
    const auto f = random_function(n, rng);
    ASSERT_EQ(cert_profile(f, o), cert_profile_serial(f, o));
    ASSERT_EQ(sensitivity(f), sensitivity_serial(f));
  }
}
