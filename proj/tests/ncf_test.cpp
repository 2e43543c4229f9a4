#include <gtest/gtest.h>

#include <random>

#include "ncflab/anf.hpp"
#include "ncflab/enumeration.hpp"
#include "ncflab/ncf.hpp"
#include "test_util.hpp"

using namespace ncflab;
using ncflab::test::worked_example;

namespace {

BooleanFunction monomial3() {
  return BooleanFunction::from_predicate(3, [](Index w) { return w == 7; });
}

BooleanFunction parity(int n) {
  return BooleanFunction::from_predicate(n, [](Index w) { return std::popcount(w) % 2 == 1; });
}

LayerDecomposition worked_decomposition() {
  return LayerDecomposition{3, {Layer{{{3, true}}}, Layer{{{1, false}, {2, false}}}}, true};
}

}  // namespace

TEST(CanalizingPairs, Examples) {
  const auto m = canalizing_pairs(monomial3());
  EXPECT_FALSE(m.constant_function);
  EXPECT_EQ(m.pairs, (std::vector<CanalizingPair>{{1, false, false}, {2, false, false}, {3, false, false}}));
  // of the six restrictions of the worked example only x3 = 1 is constant
  EXPECT_EQ(canalizing_pairs(worked_example()).pairs, (std::vector<CanalizingPair>{{3, true, true}}));
  EXPECT_TRUE(canalizing_pairs(parity(2)).pairs.empty());
}

TEST(CanalizingPairs, ConstantListsEverythingAndFlags) {
  const auto c = canalizing_pairs(BooleanFunction::constant(3, true));
  EXPECT_TRUE(c.constant_function);
  EXPECT_EQ(c.pairs.size(), 6u);
}

TEST(Decompose, SingleLayerMonomial) {
  const auto c = decompose(monomial3());
  ASSERT_TRUE(c.is_ncf());
  const LayerDecomposition expected{3, {Layer{{{1, false}, {2, false}, {3, false}}}}, true};
  EXPECT_EQ(c.decomposition(), expected);
  EXPECT_EQ(compose(c.decomposition()), monomial3());
  EXPECT_EQ(layer_structure(c.decomposition()), (std::vector<int>{3}));
}

TEST(Decompose, WorkedExample) {
  const auto c = decompose(worked_example());
  ASSERT_TRUE(c.is_ncf());
  EXPECT_EQ(c.decomposition(), worked_decomposition());
  EXPECT_EQ(format_decomposition(c.decomposition()), "1; [3:1 | 1:0, 2:0]");
  EXPECT_EQ(layer_structure(c.decomposition()), (std::vector<int>{1, 2}));
  // (x3+1)(x1*x2+1)+1 over all 8 words
  const auto nested = BooleanFunction::from_predicate(3, [](Index w) {
    const bool x1 = w & 1u, x2 = w & 2u, x3 = w & 4u;
    return !(!x3 && !(x1 && x2));
  });
  EXPECT_EQ(compose(c.decomposition()), nested);
}

TEST(Decompose, Rejections) {
  EXPECT_EQ(decompose(parity(2)), NcfClassification::not_ncf(NotNcfReason::kNoCanalizingVariable));
  EXPECT_EQ(decompose(parity(5)), NcfClassification::not_ncf(NotNcfReason::kNoCanalizingVariable));
  EXPECT_EQ(decompose(BooleanFunction::constant(3, false)), NcfClassification::not_ncf(NotNcfReason::kConstantFunction));
  const auto x1x2 = anf_to_table(parse_anf("x1*x2", 3));
  EXPECT_EQ(decompose(x1x2), NcfClassification::not_ncf(NotNcfReason::kInessentialVariable));
  // x1*(x2 + x3) canalizes on x1 then leaves a parity
  const auto partial = anf_to_table(parse_anf("x1*(x2+x3)", 3));
  EXPECT_EQ(decompose(partial), NcfClassification::not_ncf(NotNcfReason::kNoCanalizingVariable));
  EXPECT_THROW(decompose(BooleanFunction::variable(1, 1)), InputError);
  EXPECT_EQ(to_string(NotNcfReason::kConflictingOutputs), "conflicting canalized outputs");
}

TEST(Decompose, RejectsEveryNonNcfExhaustiveForN3) {
  // An NCF is exactly something compose can produce; check both directions.
  int ncfs = 0;
  ncflab::test::for_each_function(3, [&](const BooleanFunction& f) {
    const auto c = decompose(f);
    if (c.is_ncf()) {
      ++ncfs;
      ASSERT_EQ(compose(c.decomposition()), f);
    }
  });
  EXPECT_EQ(ncfs, 64);
}

TEST(Compose, Examples) {
  const LayerDecomposition and2{2, {Layer{{{1, false}, {2, false}}}}, true};
  EXPECT_EQ(compose(and2), BooleanFunction::from_predicate(2, [](Index w) { return w == 3; }));
  EXPECT_EQ(compose(worked_decomposition()), worked_example());

  const LayerDecomposition d112{
      4, {Layer{{{1, false}}}, Layer{{{2, false}}}, Layer{{{3, false}, {4, false}}}}, false};
  // x1(x2(x3*x4 + 1) + 1)
  const auto expected = BooleanFunction::from_predicate(4, [](Index w) {
    const bool x1 = w & 1u, x2 = w & 2u, x3 = w & 4u, x4 = w & 8u;
    return x1 && !(x2 && !(x3 && x4));
  });
  EXPECT_EQ(compose(d112), expected);
  EXPECT_EQ(layer_structure(d112), (std::vector<int>{1, 1, 2}));
}

TEST(Compose, RejectsInvalidDecompositions) {
  EXPECT_THROW(compose(LayerDecomposition{3, {Layer{{{1, false}, {2, false}}}, Layer{{{3, false}}}}, false}),
               InputError);
  EXPECT_THROW(compose(LayerDecomposition{2, {Layer{{{2, false}, {1, false}}}}, false}), InputError);
  EXPECT_THROW(compose(LayerDecomposition{3, {Layer{{{1, false}, {2, false}}}}, false}), InputError);
  EXPECT_THROW(compose(LayerDecomposition{2, {Layer{{{1, false}, {1, true}}}}, false}), InputError);
  EXPECT_THROW(compose(LayerDecomposition{2, {Layer{}, Layer{{{1, false}, {2, true}}}}, false}), InputError);
}

TEST(Compose, NestedAndExpandedReadingsAgree) {
  for (int n = 2; n <= 5; ++n) {
    for_each_ncf(n, [](const LayerDecomposition& d) { ASSERT_EQ(compose(d), compose_expanded(d)); });
  }
}

TEST(Decompose, RoundTripAndMaximality) {
  for (int n = 2; n <= 4; ++n) {
    for_each_ncf(n, [](const LayerDecomposition& d) {
      const auto f = compose(d);
      const auto c = decompose(f);
      ASSERT_TRUE(c.is_ncf());
      ASSERT_EQ(c.decomposition(), d);
      // Each layer is the full canalizing set of its stage's subfunction.
      BooleanFunction g = f;
      std::vector<int> vars;
      for (int i = 1; i <= d.arity; ++i) vars.push_back(i);
      for (const auto& layer : d.layers) {
        std::vector<int> canalizing;
        for (const auto& p : canalizing_pairs(g).pairs) canalizing.push_back(vars[static_cast<std::size_t>(p.variable - 1)]);
        std::vector<int> in_layer;
        for (const auto& e : layer.entries) in_layer.push_back(e.variable);
        ASSERT_EQ(canalizing, in_layer);
        for (auto it = layer.entries.rbegin(); it != layer.entries.rend(); ++it) {
          const auto pos = std::find(vars.begin(), vars.end(), it->variable) - vars.begin();
          g = restrict(g, static_cast<int>(pos) + 1, !it->input);
          vars.erase(vars.begin() + pos);
        }
      }
      ASSERT_TRUE(g.is_constant());
    });
  }
}

TEST(DecompositionText, ParseAndFormat) {
  const auto d = parse_decomposition("1; [3:1 | 1:0, 2:0]");
  EXPECT_EQ(d, worked_decomposition());
  EXPECT_EQ(parse_decomposition(" 0 ;[ 1:0 ,2:1 ] "), (LayerDecomposition{2, {Layer{{{1, false}, {2, true}}}}, false}));
  for (int n = 2; n <= 4; ++n) {
    for_each_ncf(n, [](const LayerDecomposition& x) { ASSERT_EQ(parse_decomposition(format_decomposition(x)), x); });
  }
  EXPECT_THROW(parse_decomposition("1 [3:1]"), ParseError);
  EXPECT_THROW(parse_decomposition("1; [3:2 | 1:0, 2:0]"), ParseError);
  EXPECT_THROW(parse_decomposition("1; [1:0, 2:0"), ParseError);
  EXPECT_THROW(parse_decomposition("1; [1:0, 2:0] x"), ParseError);
  EXPECT_THROW(parse_decomposition("1; [1:0 | 2:0]"), InputError);
  EXPECT_THROW(parse_decomposition("1; [1:0, 3:0]"), InputError);
}
