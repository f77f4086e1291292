#include "charsub/classify.h"

#include <gtest/gtest.h>

#include <map>

#include "charsub/lattice.h"

namespace charsub {
namespace {

// Finite abelian p-groups are isomorphic iff they have the same number of
// elements of each order.
std::map<std::uint64_t, std::uint64_t> order_histogram(const Subgroup& h) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (ElemId x : h.elements()) ++out[h.shape().element_order(x)];
  return out;
}

bool brute_pairwise_isomorphic(const std::vector<Subgroup>& fam,
                               bool include_whole) {
  std::optional<std::map<std::uint64_t, std::uint64_t>> first;
  for (const Subgroup& h : fam) {
    if (h.is_trivial() || (!include_whole && h.is_whole())) continue;
    const auto hist = order_histogram(h);
    if (!first) first = hist;
    if (hist != *first) return false;
  }
  return true;
}

TEST(ClassifyTest, IfiExamples) {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    EXPECT_TRUE(classify_ifi(Shape(p, {2, 2})));
    EXPECT_FALSE(classify_ifi(Shape(p, {1, 2})));
    EXPECT_TRUE(classify_ifi(Shape(p, {1})));
  }
}

TEST(ClassifyTest, IfiWitnessIsSmallestPair) {
  const GroupContext ctx(Shape(3, {1, 2}));
  const Decision d = classify_ifi(compute_families(ctx));
  EXPECT_FALSE(d.value);
  ASSERT_TRUE(d.witness);
  ASSERT_EQ(d.witness->subgroups.size(), 2u);
  EXPECT_EQ(d.witness->subgroups[0], power_subgroup(ctx.shape(), 1));
  EXPECT_EQ(d.witness->subgroups[1], socle(ctx.shape(), 1));
}

TEST(ClassifyTest, IcExamples) {
  EXPECT_TRUE(classify_ic(Shape(2, {1, 1})));
  EXPECT_FALSE(classify_ic(Shape(2, {1, 3})));
  EXPECT_TRUE(classify_ic(Shape(3, {2, 2})));
  EXPECT_TRUE(classify_ic(Shape(2, {2, 2})));
  const Decision d =
      classify_ic(compute_families(GroupContext(Shape(2, {1, 3}))));
  ASSERT_TRUE(d.witness);
  EXPECT_NE(iso_type(d.witness->subgroups[0]), iso_type(d.witness->subgroups[1]));
}

TEST(ClassifyTest, StronglyExamples) {
  EXPECT_EQ(classify_strongly(Shape(3, {1, 1, 1})), std::make_pair(true, true));
  EXPECT_FALSE(classify_strongly(Shape(5, {2})).first);
  EXPECT_EQ(classify_strongly(Shape(2, {1, 2})), std::make_pair(false, false));
}

TEST(ClassifyTest, WeaklyIcExamples) {
  EXPECT_FALSE(classify_weakly_ic(Shape(2, {1, 3})));
  EXPECT_FALSE(classify_weakly_ic(Shape(7, {1})));
  EXPECT_FALSE(classify_weakly_ic(Shape(3, {2, 2, 2})));
}

TEST(ClassifyTest, CriterionExamples) {
  EXPECT_TRUE(ifi_criterion(Shape(5, {1, 1})));
  EXPECT_TRUE(ifi_criterion(Shape(2, {2, 2, 2})));
  EXPECT_FALSE(ifi_criterion(Shape(2, {1, 2})));
  EXPECT_FALSE(ifi_criterion(Shape(2, {3})));
}

TEST(ClassifyTest, DecisionsMatchHistogramOracle) {
  for (const Shape& g :
       {Shape(2, {1}), Shape(2, {2}), Shape(2, {1, 1}), Shape(2, {1, 2}),
        Shape(2, {1, 3}), Shape(2, {2, 2}), Shape(2, {1, 1, 2}),
        Shape(2, {1, 2, 3}), Shape(2, {2, 2, 2}), Shape(3, {1, 1}),
        Shape(3, {1, 2}), Shape(3, {2, 2}), Shape(3, {1, 1, 1})}) {
    const GroupContext ctx(g);
    const InvariantFamilies fam = compute_families(ctx);
    const ClassificationVerdict v = classify(ctx, fam);
    EXPECT_EQ(v.is_ifi, brute_pairwise_isomorphic(fam.fully_invariant, false));
    EXPECT_EQ(v.is_ic, brute_pairwise_isomorphic(fam.characteristic, false));
    EXPECT_EQ(v.is_strongly_ifi,
              brute_pairwise_isomorphic(fam.fully_invariant, true));
    EXPECT_EQ(v.is_strongly_ic,
              brute_pairwise_isomorphic(fam.characteristic, true));
    EXPECT_FALSE(v.is_weakly_ic);
    EXPECT_EQ(v.is_ifi, v.criterion_ifi) << g.to_string();
  }
}

TEST(ClassifyTest, IsoTypeAgreesWithHistogram) {
  for (const Shape& g : {Shape(2, {1, 2, 3}), Shape(3, {1, 1, 2})}) {
    const auto subs = enumerate_subgroups(g);
    for (std::size_t i = 0; i < subs.size(); i += 3) {
      for (std::size_t j = 0; j < subs.size(); j += 5) {
        EXPECT_EQ(iso_type(subs[i]) == iso_type(subs[j]),
                  order_histogram(subs[i]) == order_histogram(subs[j]));
      }
    }
  }
}

TEST(ClassifyTest, VerdictForZ2PlusZ8) {
  const ClassificationVerdict v = classify(Shape(2, {1, 3}));
  EXPECT_FALSE(v.is_ifi);
  EXPECT_FALSE(v.is_ic);
  EXPECT_FALSE(v.char_eq_fi);
  EXPECT_FALSE(v.criterion_ifi);
  std::map<std::string, Witness> w(v.witnesses.begin(), v.witnesses.end());
  EXPECT_TRUE(w.contains("ifi"));
  EXPECT_TRUE(w.contains("ic"));
  EXPECT_TRUE(w.contains("strongly_ifi"));
  EXPECT_TRUE(w.contains("strongly_ic"));
  EXPECT_FALSE(w.contains("weakly_ic"));
  ASSERT_TRUE(w.contains("char_eq_fi"));
  const Subgroup& h = w.at("char_eq_fi").subgroups.at(0);
  EXPECT_TRUE(is_characteristic(h));
  EXPECT_FALSE(is_fully_invariant(h));
}

TEST(ClassifyTest, ElementaryGroupsAreStrongly) {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    for (int r = 1; r <= 3; ++r) {
      const ClassificationVerdict v = classify(Shape(p, std::vector<int>(r, 1)));
      EXPECT_TRUE(v.is_ifi && v.is_ic && v.is_strongly_ifi && v.is_strongly_ic);
      EXPECT_TRUE(v.witnesses.empty());
    }
  }
}

TEST(ClassifyTest, ImplicationChain) {
  for (const Shape& g : {Shape(2, {1, 1, 2}), Shape(2, {2, 2}), Shape(3, {1, 3}),
                         Shape(2, {1, 1, 1, 1}), Shape(5, {1, 1})}) {
    const ClassificationVerdict v = classify(g);
    if (v.is_strongly_ic) EXPECT_TRUE(v.is_ic && v.is_strongly_ifi);
    if (v.is_ic) EXPECT_TRUE(v.is_ifi);
    if (v.is_strongly_ifi) EXPECT_TRUE(v.is_ifi);
  }
}

}  // namespace
}  // namespace charsub
