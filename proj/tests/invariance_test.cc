#include "charsub/invariance.h"

#include <gtest/gtest.h>

#include <set>

#include "charsub/lattice.h"

namespace charsub {
namespace {

using ShapePtr = std::shared_ptr<const Shape>;

Subgroup cyclic(const Shape& g, std::initializer_list<std::int64_t> coords) {
  return span(g, std::vector<Element>{g.element(coords)});
}

std::vector<std::vector<ElemId>> as_sets(const std::vector<Subgroup>& hs) {
  std::vector<std::vector<ElemId>> out;
  for (const Subgroup& h : hs) out.push_back(h.elements());
  return out;
}

// Stable under every map, by applying each map to every member.
bool brute_stable(const Subgroup& h, const std::vector<EndoMatrix>& maps) {
  for (const EndoMatrix& m : maps) {
    for (ElemId x : h.elements()) {
      if (!h.contains(m.apply(x))) return false;
    }
  }
  return true;
}

struct BruteFamilies {
  std::vector<std::vector<ElemId>> characteristic;
  std::vector<std::vector<ElemId>> fully_invariant;
};

// Filters the full lattice against the exhaustive endomorphism list.
BruteFamilies brute_families(const Shape& g) {
  const auto all = enumerate_all_endos(g);
  std::vector<EndoMatrix> autos;
  for (const EndoMatrix& m : all) {
    if (is_bijective(m)) autos.push_back(m);
  }
  BruteFamilies out;
  for (const Subgroup& h : enumerate_subgroups(g)) {
    if (brute_stable(h, autos)) out.characteristic.push_back(h.elements());
    if (brute_stable(h, all)) out.fully_invariant.push_back(h.elements());
  }
  return out;
}

const std::vector<Shape>& small_shapes() {
  static const std::vector<Shape> shapes{
      Shape(2, {1}),       Shape(2, {1, 1}),    Shape(2, {1, 2}),
      Shape(2, {1, 3}),    Shape(2, {2, 2}),    Shape(2, {1, 1, 2}),
      Shape(2, {1, 2, 2}), Shape(2, {1, 1, 3}), Shape(2, {2, 3}),
      Shape(2, {1, 2, 3}), Shape(2, {1, 4}),    Shape(3, {1, 1}),
      Shape(3, {1, 2}),    Shape(3, {1, 3}),    Shape(3, {2, 2}),
      Shape(5, {1, 2})};
  return shapes;
}

TEST(InvarianceTest, WitnessSubgroupInZ2PlusZ8) {
  const Shape g(2, {1, 3});
  const Subgroup h = cyclic(g, {1, 2});
  EXPECT_TRUE(is_characteristic(h));
  EXPECT_FALSE(is_fully_invariant(h));
  // The projection onto the first summand leaves H.
  EXPECT_FALSE(h.contains(g.element({1, 0})));
}

TEST(InvarianceTest, LinesOfKleinFourAreNotCharacteristic) {
  const Shape g(2, {1, 1});
  for (const Subgroup& h : enumerate_subgroups(g)) {
    if (h.order() == 2) {
      EXPECT_FALSE(is_characteristic(h));
      EXPECT_FALSE(is_fully_invariant(h));
    }
  }
}

TEST(InvarianceTest, ClassicalSubgroupsAreFullyInvariant) {
  for (const Shape& g : small_shapes()) {
    EXPECT_TRUE(is_fully_invariant(Subgroup::trivial(g)));
    EXPECT_TRUE(is_characteristic(Subgroup::whole(g)));
    for (int n = 0; n <= g.max_exponent(); ++n) {
      EXPECT_TRUE(is_fully_invariant(power_subgroup(g, n)));
      EXPECT_TRUE(is_fully_invariant(socle(g, n)));
      for (int m = 0; m <= g.max_exponent(); ++m) {
        EXPECT_TRUE(is_fully_invariant(
            intersect(power_subgroup(g, n), socle(g, m))));
      }
    }
  }
}

TEST(InvarianceTest, PredicatesMatchExhaustiveFilters) {
  for (const Shape& g : small_shapes()) {
    const BruteFamilies brute = brute_families(g);
    std::set<std::vector<ElemId>> chr(brute.characteristic.begin(),
                                      brute.characteristic.end());
    std::set<std::vector<ElemId>> fi(brute.fully_invariant.begin(),
                                     brute.fully_invariant.end());
    for (const Subgroup& h : enumerate_subgroups(g)) {
      EXPECT_EQ(is_characteristic(h), chr.contains(h.elements())) << g.to_string();
      EXPECT_EQ(is_fully_invariant(h), fi.contains(h.elements())) << g.to_string();
    }
  }
}

TEST(EnumerateInvariantTest, WalkMatchesBruteFilter) {
  for (const Shape& g : small_shapes()) {
    const BruteFamilies brute = brute_families(g);
    EXPECT_EQ(as_sets(enumerate_characteristic(g)), brute.characteristic)
        << g.to_string();
    EXPECT_EQ(as_sets(enumerate_fully_invariant(g)), brute.fully_invariant)
        << g.to_string();
  }
}

TEST(EnumerateInvariantTest, Examples) {
  const Shape z2z4(2, {1, 2});
  EXPECT_EQ(enumerate_characteristic(z2z4).size(), 4u);
  EXPECT_EQ(enumerate_fully_invariant(z2z4).size(), 4u);

  const Shape z2z8(2, {1, 3});
  const auto fi = enumerate_fully_invariant(z2z8);
  const auto chr = enumerate_characteristic(z2z8);
  EXPECT_EQ(fi.size(), 6u);
  EXPECT_GT(chr.size(), fi.size());
  EXPECT_NE(std::find(chr.begin(), chr.end(), cyclic(z2z8, {1, 2})), chr.end());
  EXPECT_EQ(std::find(fi.begin(), fi.end(), cyclic(z2z8, {1, 2})), fi.end());

  for (std::uint64_t p : {2u, 3u, 5u}) {
    const auto c = enumerate_characteristic(Shape(p, {1, 1}));
    ASSERT_EQ(c.size(), 2u);
    EXPECT_TRUE(c[0].is_trivial());
    EXPECT_TRUE(c[1].is_whole());
  }
}

TEST(EnumerateInvariantTest, FullyInvariantAreCharacteristic) {
  for (const Shape& g : {Shape(2, {1, 2, 4}), Shape(2, {1, 1, 3, 3}),
                         Shape(3, {1, 2, 3})}) {
    const auto chr = enumerate_characteristic(g);
    for (const Subgroup& h : enumerate_fully_invariant(g)) {
      EXPECT_TRUE(std::binary_search(chr.begin(), chr.end(), h,
                                     enumeration_less));
    }
    for (const Subgroup& h : chr) EXPECT_TRUE(is_characteristic(h));
  }
}

TEST(EnumerateInvariantTest, LargeElementaryGroupIsFast) {
  // 2^10 has about 2*10^8 subgroups; only {0} and G are characteristic.
  EXPECT_EQ(enumerate_characteristic(Shape(2, std::vector<int>(10, 1))).size(),
            2u);
  EXPECT_THROW(enumerate_characteristic(GroupContext(Shape(2, {1, 1, 1})), 4),
               CapExceeded);
}

TEST(InvariantClosureTest, ClosureOfGeneratorUnderAutomorphisms) {
  const GroupContext ctx(Shape(2, {1, 3}));
  const Shape& g = ctx.shape();
  const std::vector<ElemId> seed{g.encode(g.element({1, 2}))};
  const Subgroup h =
      invariant_closure(Subgroup::trivial(ctx.shape_ptr()), seed, ctx.aut_gens());
  EXPECT_EQ(h, cyclic(g, {1, 2}));
  const Subgroup k =
      invariant_closure(Subgroup::trivial(ctx.shape_ptr()), seed, ctx.test_set());
  EXPECT_EQ(k, span(g, std::vector<Element>{g.element({1, 0}), g.element({0, 2})}));
}

TEST(ProjectionProfileTest, Examples) {
  const Shape g(2, {1, 3});
  const auto r = projection_profile(cyclic(g, {1, 2}));
  ASSERT_TRUE(r.profile);
  EXPECT_EQ(r.profile->n_for(1), 0);
  EXPECT_EQ(r.profile->n_for(3), 1);
  EXPECT_EQ(r.profile->to_string(), "{n1=0, n3=1}");

  const auto whole = projection_profile(Subgroup::whole(g));
  EXPECT_EQ(whole.profile->n_values,
            (std::vector<std::pair<int, int>>{{1, 0}, {3, 0}}));
  const auto zero = projection_profile(Subgroup::trivial(g));
  EXPECT_EQ(zero.profile->n_values,
            (std::vector<std::pair<int, int>>{{1, 1}, {3, 3}}));

  EXPECT_THROW(projection_profile(cyclic(Shape(2, {1, 1}), {1, 0})),
               std::invalid_argument);
}

TEST(ProjectionProfileTest, ProjectionsOfCharacteristicSubgroups) {
  // Every characteristic subgroup projects onto p^n B_k in each layer and
  // satisfies the structural conditions.
  for (const Shape& g : {Shape(2, {1, 3}), Shape(2, {1, 1, 2, 4}),
                         Shape(2, {1, 2, 2, 3}), Shape(3, {1, 1, 3})}) {
    const GroupContext ctx(g);
    for (const Subgroup& h : enumerate_characteristic(ctx)) {
      const ProfileResult r = projection_profile(ctx, h);
      ASSERT_TRUE(r.profile) << r.violation;
      for (const auto& [k, n] : r.profile->n_values) {
        EXPECT_EQ(layer_projection(h, k), layer_power(g, k, n));
      }
      const auto bad = profile_condition_violations(h, *r.profile);
      EXPECT_TRUE(bad.empty()) << g.to_string() << " " << bad.front();
    }
  }
}

TEST(ProjectionProfileTest, ViolationsAreReported) {
  // <(1,0,2)> in Z(2)^2+Z(4) does not contain its projection (1,0,0) onto
  // the rank-2 layer, breaking (4).
  const Shape g(2, {1, 1, 2});
  const Subgroup h0 = cyclic(g, {1, 0, 2});
  const ProjectionProfile prof{{{1, 0}, {2, 1}}};
  const auto bad = profile_condition_violations(h0, prof);
  ASSERT_EQ(bad.size(), 2u);
  EXPECT_EQ(bad[0].substr(0, 3), "(3)");  // 2b is missing as well
  EXPECT_EQ(bad[1].substr(0, 3), "(4)");
  // n_1 = 0, n_3 = 3 breaks (2).
  const Shape h(2, {1, 3});
  const ProjectionProfile gap{{{1, 0}, {3, 3}}};
  const auto bad2 = profile_condition_violations(Subgroup::whole(h), gap);
  ASSERT_FALSE(bad2.empty());
  EXPECT_EQ(bad2.front().substr(0, 3), "(2)");
}

TEST(ProjectionProfileTest, SparsePartitions) {
  EXPECT_TRUE(is_sparse_partition(Shape(2, {1, 3})));
  EXPECT_TRUE(is_sparse_partition(Shape(2, {2})));
  EXPECT_FALSE(is_sparse_partition(Shape(2, {1, 2, 2})));
  EXPECT_FALSE(is_sparse_partition(Shape(3, {1})));
}

TEST(FiFromProfilesTest, Examples) {
  {
    const auto c = fi_from_profiles(GroupContext(Shape(2, {1, 3})));
    EXPECT_EQ(c.confirmed.size(), 6u);
    EXPECT_TRUE(c.rejected.empty());
  }
  for (int k = 1; k <= 5; ++k) {
    const Shape g(3, {k});
    const auto c = fi_from_profiles(GroupContext(g));
    EXPECT_EQ(c.confirmed.size(), static_cast<std::size_t>(k + 1));
    for (int n = 0; n <= k; ++n) {
      EXPECT_NE(std::find(c.confirmed.begin(), c.confirmed.end(),
                          power_subgroup(g, n)),
                c.confirmed.end());
    }
  }
  {
    const Shape g(2, {2, 2});
    const auto c = fi_from_profiles(GroupContext(g));
    ASSERT_EQ(c.confirmed.size(), 3u);
    EXPECT_TRUE(c.confirmed[0].is_trivial());
    EXPECT_EQ(c.confirmed[1], power_subgroup(g, 1));
    EXPECT_TRUE(c.confirmed[2].is_whole());
  }
}

TEST(FiFromProfilesTest, MatchesWalk) {
  for (const Shape& g : small_shapes()) {
    const GroupContext ctx(g);
    const auto c = fi_from_profiles(ctx);
    EXPECT_TRUE(c.rejected.empty());
    EXPECT_EQ(as_sets(c.confirmed), as_sets(enumerate_fully_invariant(ctx)))
        << g.to_string();
  }
}

TEST(KaplanskyTest, Examples) {
  EXPECT_FALSE(kaplansky_2group_predicate(Shape(2, {1, 3})));
  EXPECT_TRUE(kaplansky_2group_predicate(Shape(2, {1, 2})));
  EXPECT_TRUE(kaplansky_2group_predicate(Shape(2, {3, 3})));
  EXPECT_FALSE(kaplansky_2group_predicate(Shape(2, {1, 2, 3})));
  EXPECT_TRUE(kaplansky_2group_predicate(Shape(2, {1, 1, 2, 3, 3})));
  EXPECT_THROW(kaplansky_2group_predicate(Shape(3, {1})), std::invalid_argument);
}

TEST(CharEqualsFiTest, Examples) {
  EXPECT_FALSE(char_equals_fi(Shape(2, {1, 3})));
  EXPECT_TRUE(char_equals_fi(Shape(2, {1, 2})));
  EXPECT_TRUE(char_equals_fi(Shape(3, {1, 3})));
}

// x can be mapped to y by some endomorphism, by exhaustive search.
bool brute_reaches(const std::vector<EndoMatrix>& maps, ElemId x, ElemId y) {
  for (const EndoMatrix& m : maps) {
    if (m.apply(x) == y) return true;
  }
  return false;
}

bool brute_fully_transitive(const Shape& g) {
  const auto all = enumerate_all_endos(g);
  for (ElemId x = 0; x < g.order(); ++x) {
    for (ElemId y = 0; y < g.order(); ++y) {
      if (g.ulm_sequence(x).pointwise_le(g.ulm_sequence(y)) &&
          !brute_reaches(all, x, y)) {
        return false;
      }
    }
  }
  return true;
}

bool brute_transitive(const Shape& g) {
  std::vector<EndoMatrix> autos;
  for (const EndoMatrix& m : enumerate_all_endos(g)) {
    if (is_bijective(m)) autos.push_back(m);
  }
  for (ElemId x = 0; x < g.order(); ++x) {
    for (ElemId y = 0; y < g.order(); ++y) {
      if (g.ulm_sequence(x) == g.ulm_sequence(y) && !brute_reaches(autos, x, y)) {
        return false;
      }
    }
  }
  return true;
}

TEST(TransitivityTest, Examples) {
  const GroupContext z2z8(Shape(2, {1, 3}));
  EXPECT_EQ(is_fully_transitive(z2z8), std::optional<bool>(true));
  for (std::uint64_t p : {2u, 3u, 7u}) {
    const GroupContext c(Shape(p, {1}));
    EXPECT_EQ(is_fully_transitive(c), std::optional<bool>(true));
    EXPECT_EQ(is_transitive(c), std::optional<bool>(true));
  }
  EXPECT_EQ(is_transitive(GroupContext(Shape(2, {1, 1}))),
            std::optional<bool>(true));
  EXPECT_EQ(is_transitive(GroupContext(Shape(2, {1, 1})), 2), std::nullopt);
}

TEST(TransitivityTest, MatchesExhaustiveSearch) {
  for (const Shape& g : small_shapes()) {
    const GroupContext ctx(g);
    EXPECT_EQ(is_fully_transitive(ctx), brute_fully_transitive(g)) << g.to_string();
    EXPECT_EQ(is_transitive(ctx), brute_transitive(g)) << g.to_string();
  }
}

}  // namespace
}  // namespace charsub
