#include <gtest/gtest.h>

#include <set>

#include "core/error.hpp"
#include "test_support.hpp"

namespace cohomlen {
namespace {

using V = std::vector<std::int64_t>;

TEST(GroupSpecTest, Validation) {
  EXPECT_NO_THROW(GroupSpec(0, 3));
  EXPECT_NO_THROW(GroupSpec(7, 1));
  EXPECT_THROW(GroupSpec(6, 2), Error);
  EXPECT_THROW(GroupSpec(2, 0), Error);
  EXPECT_EQ(GroupSpec(2, 2).generator_degree(), 1);
  EXPECT_EQ(GroupSpec(0, 2).generator_degree(), 2);
}

TEST(LineOfWeightTest, Examples) {
  const GroupSpec g3(3, 2), g0(0, 2), g2(2, 2);
  EXPECT_EQ(line_of_weight(g3, Weight(g3, {2, 1})).direction(), (V{1, 2}));
  EXPECT_EQ(line_of_weight(g0, Weight(g0, {2, 4})).direction(), (V{1, 2}));
  EXPECT_EQ(line_of_weight(g2, Weight(g2, {1, 1})).direction(), (V{1, 1}));
  EXPECT_EQ(line_of_weight(g0, Weight(g0, {0, -3})).direction(), (V{0, 1}));
  EXPECT_EQ(line_of_weight(g0, Weight(g0, {-2, 3})).direction(), (V{2, -3}));
}

TEST(LineOfWeightTest, ZeroWeightIsDomainError) {
  const GroupSpec g(5, 2);
  try {
    line_of_weight(g, Weight(g, {5, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::domain);
  }
}

TEST(VanishesOnTest, Examples) {
  const GroupSpec g0(0, 2), g3(3, 2);
  const auto h0 = SubtorusLine::of(g0, {1, 2});
  EXPECT_TRUE(vanishes_on(g0, Weight(g0, {2, 4}), h0));
  EXPECT_FALSE(vanishes_on(g0, Weight(g0, {2, 3}), h0));
  EXPECT_TRUE(vanishes_on(g3, Weight(g3, {2, 1}), SubtorusLine::of(g3, {1, 2})));
  EXPECT_TRUE(vanishes_on(g0, Weight(g0, {-1, -2}), h0));
}

TEST(EnumerateLinesTest, Examples) {
  const auto lines = enumerate_lines(GroupSpec(2, 2));
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0].direction(), (V{0, 1}));
  EXPECT_EQ(lines[1].direction(), (V{1, 0}));
  EXPECT_EQ(lines[2].direction(), (V{1, 1}));
  EXPECT_EQ(enumerate_lines(GroupSpec(3, 2)).size(), 4u);
  const auto single = enumerate_lines(GroupSpec(2, 1));
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].direction(), (V{1}));
}

TEST(EnumerateLinesTest, TorusIsUnsupported) {
  try {
    enumerate_lines(GroupSpec(0, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unsupported);
  }
}

TEST(EnumerateLinesTest, OversizedEnumerationRefused) {
  EXPECT_THROW(enumerate_lines(GroupSpec(101, 5)), Error);
}

// Every nonzero vector of F_p^k lies on exactly one enumerated line, checked
// by cross-multiplication rather than normalization.
TEST(EnumerateLinesTest, PartitionsNonzeroVectors) {
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const GroupSpec g(p, k);
      const auto lines = enumerate_lines(g);
      std::uint64_t expected = 0, power = 1;
      for (std::size_t i = 0; i < k; ++i) {
        expected += power;
        power *= static_cast<std::uint64_t>(p);
      }
      ASSERT_EQ(lines.size(), expected);
      ASSERT_TRUE(std::is_sorted(lines.begin(), lines.end()));
      ASSERT_EQ(std::set<SubtorusLine>(lines.begin(), lines.end()).size(), lines.size());

      auto proportional = [&](const V& a, const V& b) {
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            if ((a[i] * b[j] - a[j] * b[i]) % p != 0) return false;
        return true;
      };
      V v(k, 0);
      for (std::uint64_t index = 1; index < power; ++index) {
        std::uint64_t rest = index;
        for (std::size_t i = 0; i < k; ++i) {
          v[i] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(p));
          rest /= static_cast<std::uint64_t>(p);
        }
        const auto hits = std::count_if(lines.begin(), lines.end(),
                                        [&](const SubtorusLine& l) { return proportional(l.direction(), v); });
        ASSERT_EQ(hits, 1) << "p=" << p << " k=" << k;
      }
    }
  }
}

TEST(SHTest, Examples) {
  const Field F2(2), F3(3), Q(0);
  EXPECT_EQ(s_H(GroupSpec(2, 2), testing::line(2, 2, {1, 1})).to_polynomial(),
            testing::poly(F2, 2, {{1, {1, 0}}, {1, {0, 1}}}));
  EXPECT_EQ(s_H(GroupSpec(3, 2), testing::line(3, 2, {1, 2})).to_polynomial(),
            testing::poly(F3, 2, {{1, {1, 0}}, {2, {0, 1}}}));
  EXPECT_EQ(s_H(GroupSpec(0, 1), testing::line(0, 1, {1})).to_polynomial(), testing::poly(Q, 1, {{1, {1}}}));
}

TEST(GroupProperties, ScalingInvariance) {
  std::mt19937_64 rng(42);
  for (std::int64_t p : {0, 2, 3, 5, 7}) {
    const GroupSpec g(p, 3);
    for (const auto& w : testing::random_weights(g, 40, rng)) {
      const auto h = line_of_weight(g, w);
      ASSERT_TRUE(vanishes_on(g, w, h));
      for (std::int64_t c : {2, 3, -1, 4}) {
        V scaled = w.components();
        for (auto& x : scaled) x *= c;
        const Weight sw(g, scaled);
        if (sw.is_zero()) continue;
        ASSERT_EQ(line_of_weight(g, sw), h);
      }
      ASSERT_TRUE(is_normalized_direction(g, h.direction()));
      ASSERT_EQ(SubtorusLine::of(g, h.direction()), h);
    }
  }
}

TEST(GroupProperties, DistinctLinesAreCoprime) {
  for (std::int64_t p : {2, 3, 5}) {
    const GroupSpec g(p, 2);
    const auto lines = enumerate_lines(g);
    const Field f(p);
    const auto q = testing::poly(f, 2, {{1, {2, 1}}, {3, {0, 2}}});
    for (const auto& a : lines) {
      const auto sa = s_H(g, a).to_polynomial();
      ASSERT_TRUE(poly_divides(sa, sa * q));
      for (const auto& b : lines) {
        if (a == b) continue;
        ASSERT_FALSE(poly_divides(sa, s_H(g, b).to_polynomial()));
      }
    }
  }
}

}  // namespace
}  // namespace cohomlen
