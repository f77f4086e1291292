#include "charsub/lattice.h"

#include <gtest/gtest.h>

#include <set>

#include "charsub/endo.h"
#include "charsub/subgroup.h"

namespace charsub {
namespace {

std::set<ElemId> members(const Subgroup& h) {
  return {h.elements().begin(), h.elements().end()};
}

std::set<ElemId> ids(const Shape& g, std::initializer_list<Element> xs) {
  std::set<ElemId> out;
  for (const Element& x : xs) out.insert(g.encode(x));
  return out;
}

// Number of k-dimensional subspaces of F_q^r, evaluated as the q-binomial
// product formula in 128-bit arithmetic.
std::uint64_t gaussian_binomial(int r, int k, std::uint64_t q) {
  unsigned __int128 num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    unsigned __int128 a = 1, b = 1;
    for (int j = 0; j < r - i; ++j) a *= q;
    for (int j = 0; j < i + 1; ++j) b *= q;
    num *= a - 1;
    den *= b - 1;
  }
  return static_cast<std::uint64_t>(num / den);
}

// Subgroups by brute force: the closure of every subset of at most
// `rank` elements.
std::set<std::vector<ElemId>> brute_subgroups(const Shape& g) {
  std::set<std::vector<ElemId>> out;
  auto ptr = std::make_shared<const Shape>(g);
  std::vector<ElemId> gens;
  auto recurse = [&](auto&& self, ElemId from) -> void {
    out.insert(span_ids(ptr, gens).elements());
    if (static_cast<int>(gens.size()) == g.rank()) return;
    for (ElemId x = from; x < g.order(); ++x) {
      gens.push_back(x);
      self(self, x + 1);
      gens.pop_back();
    }
  };
  recurse(recurse, 1);
  return out;
}

TEST(SpanTest, CyclicSubgroup) {
  const Shape g(2, {1, 3});
  const Subgroup h = span(g, std::vector<Element>{g.element({1, 2})});
  EXPECT_EQ(members(h), ids(g, {g.element({0, 0}), g.element({1, 2}),
                                g.element({0, 4}), g.element({1, 6})}));
}

TEST(SpanTest, EmptyAndBasis) {
  const Shape g(3, {1, 2});
  EXPECT_TRUE(span(g, std::vector<Element>{}).is_trivial());
  EXPECT_TRUE(span(g, std::vector<Element>{g.basis(0), g.basis(1)}).is_whole());
}

TEST(SpanTest, GeneratorsRegenerate) {
  const Shape g(2, {1, 2, 3});
  for (const Subgroup& h : enumerate_subgroups(g)) {
    EXPECT_EQ(span_ids(h.shape_ptr(), h.generators()), h);
    const auto canon = h.canonical_generators();
    EXPECT_EQ(span_ids(h.shape_ptr(), canon), h);
    EXPECT_EQ(static_cast<int>(canon.size()), iso_type(h).exponents.size());
    EXPECT_EQ(g.order() % h.order(), 0u);
    EXPECT_TRUE(h.contains(0));
  }
}

TEST(SpanTest, CanonicalGeneratorsAreLexLeast) {
  // Z(2)+Z(8): the whole group is generated minimally by {(1,0),(0,1)} whose
  // indices 1 and 2 are the two smallest non-zero indices.
  const Shape g(2, {1, 3});
  EXPECT_EQ(Subgroup::whole(g).canonical_generators(),
            (std::vector<ElemId>{1, 2}));
  const Subgroup h = span(g, std::vector<Element>{g.element({1, 6})});
  EXPECT_EQ(h.canonical_generators(),
            (std::vector<ElemId>{g.encode(g.element({1, 2}))}));
}

TEST(EnumerateSubgroupsTest, SmallCounts) {
  EXPECT_EQ(enumerate_subgroups(Shape(2, {1, 1})).size(), 5u);
  EXPECT_EQ(enumerate_subgroups(Shape(2, {1, 2})).size(), 8u);
  EXPECT_EQ(enumerate_subgroups(Shape(3, {1, 1})).size(), 6u);
}

TEST(EnumerateSubgroupsTest, MatchesBruteForce) {
  for (const Shape& g : {Shape(2, {1, 2}), Shape(2, {1, 3}), Shape(2, {1, 1, 2}),
                         Shape(3, {1, 2}), Shape(2, {2, 2})}) {
    std::set<std::vector<ElemId>> walked;
    for (const Subgroup& h : enumerate_subgroups(g)) {
      EXPECT_TRUE(walked.insert(h.elements()).second) << "duplicate";
    }
    EXPECT_EQ(walked, brute_subgroups(g)) << g.to_string();
  }
}

TEST(EnumerateSubgroupsTest, ElementaryCountsAreGaussianSums) {
  for (std::uint64_t p : {2u, 3u}) {
    for (int r = 1; r <= (p == 2 ? 6 : 4); ++r) {
      std::uint64_t expected = 0;
      for (int k = 0; k <= r; ++k) expected += gaussian_binomial(r, k, p);
      const Shape g(p, std::vector<int>(r, 1));
      EXPECT_EQ(enumerate_subgroups(g).size(), expected) << g.to_string();
    }
  }
}

TEST(EnumerateSubgroupsTest, OrderPSubgroupCount) {
  for (const Shape& g : {Shape(2, {1, 2, 3}), Shape(3, {1, 2}),
                         Shape(2, {2, 2, 2})}) {
    std::uint64_t order_p = 0;
    for (const Subgroup& h : enumerate_subgroups(g)) {
      EXPECT_EQ(g.order() % h.order(), 0u);
      if (h.order() == g.prime()) ++order_p;
    }
    const std::uint64_t socle_size = socle(g, 1).order();
    EXPECT_EQ(order_p, (socle_size - 1) / (g.prime() - 1));
  }
}

TEST(EnumerateSubgroupsTest, DeterministicOrder) {
  const auto subs = enumerate_subgroups(Shape(2, {1, 2, 2}));
  for (std::size_t i = 0; i + 1 < subs.size(); ++i) {
    EXPECT_TRUE(enumeration_less(subs[i], subs[i + 1]));
  }
  EXPECT_TRUE(subs.front().is_trivial());
  EXPECT_TRUE(subs.back().is_whole());
}

TEST(EnumerateSubgroupsTest, CapExceeded) {
  EXPECT_THROW(enumerate_subgroups(Shape(2, {1, 1, 1, 1}), 8), CapExceeded);
}

TEST(SubgroupOpsTest, PowerSubgroupsAndSocles) {
  const Shape g(2, {1, 3});
  EXPECT_EQ(members(power_subgroup(g, 1)),
            ids(g, {g.element({0, 0}), g.element({0, 2}), g.element({0, 4}),
                    g.element({0, 6})}));
  EXPECT_EQ(iso_type(power_subgroup(g, 1)), (IsoType{2, {2}}));
  EXPECT_EQ(members(socle(g, 1)),
            ids(g, {g.element({0, 0}), g.element({1, 0}), g.element({0, 4}),
                    g.element({1, 4})}));
  EXPECT_TRUE(power_subgroup(g, 0).is_whole());
  EXPECT_TRUE(socle(g, 0).is_trivial());
  EXPECT_TRUE(power_subgroup(g, 3).is_trivial());
  EXPECT_TRUE(socle(g, 3).is_whole());
}

TEST(SubgroupOpsTest, PowerAndSocleChainsAreMonotone) {
  const Shape g(3, {1, 2, 3});
  for (int a = 0; a <= 3; ++a) {
    for (int b = a; b <= 3; ++b) {
      EXPECT_TRUE(subgroup_contains(socle(g, b), socle(g, a)));
      EXPECT_TRUE(subgroup_contains(power_subgroup(g, a), power_subgroup(g, b)));
    }
  }
}

TEST(SubgroupOpsTest, SetOperations) {
  const Shape g(2, {1, 3});
  const Subgroup meet = intersect(socle(g, 1), power_subgroup(g, 1));
  EXPECT_EQ(members(meet), ids(g, {g.element({0, 0}), g.element({0, 4})}));
  const Subgroup h = span(g, std::vector<Element>{g.element({1, 2})});
  EXPECT_EQ(sum(h, Subgroup::trivial(g)), h);
  EXPECT_EQ(sum(socle(g, 1), power_subgroup(g, 1)),
            span(g, std::vector<Element>{g.element({1, 0}), g.element({0, 2})}));
  for (const Subgroup& k : enumerate_subgroups(g)) {
    EXPECT_TRUE(subgroup_contains(Subgroup::whole(g), k));
  }
  EXPECT_THROW(intersect(h, Subgroup::trivial(Shape(2, {1, 2}))),
               std::invalid_argument);
}

TEST(IsoTypeTest, Examples) {
  const Shape g(2, {1, 3});
  EXPECT_EQ(iso_type(span(g, std::vector<Element>{g.element({1, 2})})),
            (IsoType{2, {2}}));
  EXPECT_EQ(iso_type(Subgroup::whole(g)), IsoType::of(g));
  EXPECT_TRUE(iso_type(Subgroup::trivial(g)).is_trivial());
  EXPECT_EQ(iso_type(socle(g, 1)), (IsoType{2, {1, 1}}));
}

TEST(IsoTypeTest, RoundTripOnWholeGroup) {
  for (const Shape& g : {Shape(2, {1, 1, 3}), Shape(3, {2, 2}), Shape(7, {1, 2}),
                         Shape(2, {1, 2, 3, 4})}) {
    EXPECT_EQ(iso_type(Subgroup::whole(g)), IsoType::of(g));
  }
}

TEST(IsoTypeTest, InvariantUnderAutomorphisms) {
  for (const Shape& g : {Shape(2, {1, 3}), Shape(2, {1, 1, 2}), Shape(3, {1, 2})}) {
    const auto gens = aut_generators(g);
    for (const Subgroup& h : enumerate_subgroups(g)) {
      const IsoType t = iso_type(h);
      for (const EndoMatrix& a : gens) EXPECT_EQ(iso_type(image(a, h)), t);
    }
  }
}

}  // namespace
}  // namespace charsub
