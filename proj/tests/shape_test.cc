#include "charsub/shape.h"

#include <gtest/gtest.h>

#include <random>

#include "charsub/subgroup.h"

namespace charsub {
namespace {

constexpr Height kInf = kInfiniteHeight;

TEST(ShapeTest, MakeShapeComputesOrder) {
  const Shape g(2, {1, 3});
  EXPECT_EQ(g.order(), 16u);
  EXPECT_EQ(g.rank(), 2);
  EXPECT_EQ(Shape(3, {1}).order(), 3u);
}

TEST(ShapeTest, ExponentsAreStoredAscending) {
  const Shape g(2, {3, 1});
  EXPECT_EQ(g.exponents(), (std::vector<int>{1, 3}));
  EXPECT_EQ(g, Shape(2, {1, 3}));
}

TEST(ShapeTest, RejectsBadInput) {
  EXPECT_THROW(Shape(4, {1}), std::invalid_argument);
  EXPECT_THROW(Shape(1, {1}), std::invalid_argument);
  EXPECT_THROW(Shape(2, {}), std::invalid_argument);
  EXPECT_THROW(Shape(2, {0, 1}), std::invalid_argument);
  EXPECT_THROW(Shape(2, {17}), CapExceeded);
  EXPECT_NO_THROW(Shape(2, {16}));
  EXPECT_THROW(Shape(2, {4}, /*carrier_cap=*/8), CapExceeded);
}

TEST(ShapeTest, ParseAndFormat) {
  EXPECT_EQ(Shape::parse("2:3,1").to_string(), "2:1,3");
  EXPECT_EQ(Shape::parse("5:2,2,1").exponents(), (std::vector<int>{1, 2, 2}));
  EXPECT_THROW(Shape::parse("2"), std::invalid_argument);
  EXPECT_THROW(Shape::parse("2:1,,3"), std::invalid_argument);
  EXPECT_THROW(Shape::parse("x:1"), std::invalid_argument);
  EXPECT_THROW(Shape::parse("6:1"), std::invalid_argument);
}

TEST(ShapeTest, IsPrime) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(91));
}

TEST(ShapeTest, Arithmetic) {
  const Shape g(2, {1, 3});
  EXPECT_EQ(g.add(g.element({1, 2}), g.element({1, 6})), g.zero());
  EXPECT_EQ(g.scalar_mul(2, g.element({1, 2})), g.element({0, 4}));
  EXPECT_EQ(g.neg(g.element({0, 3})), g.element({0, 5}));
  EXPECT_EQ(g.element({3, -1}), g.element({1, 7}));
  EXPECT_THROW(g.add(g.zero(), Element{{0, 0, 0}}), std::invalid_argument);
  EXPECT_THROW(g.element({1}), std::invalid_argument);
}

TEST(ShapeTest, DenseIndexArithmeticMatchesCoordinates) {
  const Shape g(3, {1, 2, 2});
  for (ElemId x = 0; x < g.order(); x += 7) {
    EXPECT_EQ(g.encode(g.decode(x)), x);
    for (ElemId y = 0; y < g.order(); y += 5) {
      EXPECT_EQ(g.decode(g.add(x, y)), g.add(g.decode(x), g.decode(y)));
    }
    EXPECT_EQ(g.decode(g.neg(x)), g.neg(g.decode(x)));
    EXPECT_EQ(g.decode(g.scalar_mul(4, x)), g.scalar_mul(4, g.decode(x)));
  }
}

TEST(ShapeTest, AbelianGroupLaws) {
  const Shape g(2, {1, 2, 3});
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<ElemId> pick(0, g.order() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    const ElemId x = pick(rng), y = pick(rng), z = pick(rng);
    EXPECT_EQ(g.add(x, y), g.add(y, x));
    EXPECT_EQ(g.add(g.add(x, y), z), g.add(x, g.add(y, z)));
    EXPECT_EQ(g.add(x, g.neg(x)), 0u);
    EXPECT_EQ(g.add(x, 0), x);
  }
}

// Smallest power of p annihilating x, by repeated addition.
std::uint64_t brute_order(const Shape& g, ElemId x) {
  std::uint64_t m = 1;
  ElemId y = x;
  while (y != 0) {
    y = g.add(y, x);
    ++m;
  }
  return m;
}

TEST(ShapeTest, ElementOrder) {
  const Shape g(2, {1, 3});
  EXPECT_EQ(g.element_order(g.element({1, 2})), 4u);
  EXPECT_EQ(g.element_order(g.zero()), 1u);
  EXPECT_EQ(g.element_order(g.element({0, 1})), 8u);
  for (const Shape& s : {Shape(2, {1, 3}), Shape(3, {1, 2}), Shape(5, {2})}) {
    for (ElemId x = 0; x < s.order(); ++x) {
      EXPECT_EQ(s.element_order(x), brute_order(s, x)) << s.to_string();
    }
  }
}

TEST(ShapeTest, Height) {
  const Shape g(2, {1, 3});
  EXPECT_EQ(g.height(g.element({0, 4})), 2);
  EXPECT_EQ(g.height(g.zero()), kInf);
  EXPECT_EQ(g.height(g.element({1, 2})), 0);
}

TEST(ShapeTest, HeightIsLargestPowerSubgroupContainingX) {
  for (const Shape& g : {Shape(2, {1, 3}), Shape(3, {1, 2, 2})}) {
    std::vector<Subgroup> powers;
    for (int n = 0; n <= g.max_exponent(); ++n) {
      powers.push_back(power_subgroup(g, n));
    }
    for (ElemId x = 1; x < g.order(); ++x) {
      int expected = -1;
      for (int n = 0; n <= g.max_exponent(); ++n) {
        if (powers[n].contains(x)) expected = n;
      }
      EXPECT_EQ(g.height(x), expected);
    }
  }
}

TEST(ShapeTest, UlmSequence) {
  const Shape g(2, {1, 3});
  EXPECT_EQ(g.ulm_sequence(g.element({1, 2})).heights,
            (std::vector<Height>{0, 2, kInf}));
  EXPECT_EQ(g.ulm_sequence(g.zero()).heights, (std::vector<Height>{kInf}));
  EXPECT_EQ(g.ulm_sequence(g.element({0, 1})).heights,
            (std::vector<Height>{0, 1, 2, kInf}));
}

TEST(ShapeTest, UlmSequenceProperties) {
  for (const Shape& g : {Shape(2, {1, 2, 4}), Shape(3, {1, 3})}) {
    for (ElemId x = 0; x < g.order(); ++x) {
      const auto u = g.ulm_sequence(x);
      for (std::size_t j = 0; j + 1 < u.heights.size(); ++j) {
        EXPECT_GE(u.heights[j + 1], u.heights[j] + 1);
      }
      EXPECT_EQ(g.element_order(x), g.power(u.heights.size() - 1));
    }
  }
}

TEST(ShapeTest, PointwiseComparisonPadsWithInfinity) {
  const UlmSequence a{{0, 2, kInf}};
  const UlmSequence b{{1, 2, 3, kInf}};
  EXPECT_FALSE(a.pointwise_le(b));  // third entry: inf > 3
  EXPECT_TRUE(UlmSequence({{0, 1, 2, kInf}}).pointwise_le(b));
  EXPECT_TRUE(b.pointwise_le(UlmSequence{{kInf}}));
}

TEST(ShapeTest, UlmInvariants) {
  EXPECT_EQ(Shape(2, {1, 3}).ulm_invariants(), (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(Shape(2, {1, 2}).ulm_invariants(), (std::vector<int>{1, 1}));
  EXPECT_EQ(Shape(3, {2, 2}).ulm_invariants(), (std::vector<int>{0, 2}));
}

int log_p(std::uint64_t n, std::uint64_t p) {
  int e = 0;
  for (; n > 1; n /= p) ++e;
  return e;
}

TEST(ShapeTest, UlmInvariantsFromSocleLayers) {
  for (const Shape& g : {Shape(2, {1, 1, 3}), Shape(3, {1, 2, 2}),
                         Shape(2, {2, 3, 3}), Shape(5, {1, 2})}) {
    const auto f = g.ulm_invariants();
    int rank = 0, weighted = 0;
    for (std::size_t n = 0; n < f.size(); ++n) {
      rank += f[n];
      weighted += static_cast<int>(n + 1) * f[n];
      const Subgroup upper = intersect(power_subgroup(g, static_cast<int>(n)),
                                       socle(g, 1));
      const Subgroup lower = intersect(
          power_subgroup(g, static_cast<int>(n) + 1), socle(g, 1));
      EXPECT_EQ(f[n], log_p(upper.order(), g.prime()) -
                          log_p(lower.order(), g.prime()));
    }
    EXPECT_EQ(rank, g.rank());
    EXPECT_EQ(weighted, g.log_order());
  }
}

}  // namespace
}  // namespace charsub
