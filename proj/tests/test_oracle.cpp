#include <gtest/gtest.h>

#include "core/error.hpp"
#include "core/oracle.hpp"
#include "test_support.hpp"

namespace cohomlen {
namespace {

using testing::line;
using testing::poly;
using testing::rep;

TEST(IdealMemberTest, Examples) {
  const Field F3(3), Q(0), F2(2);
  EXPECT_TRUE(ideal_member(poly(F3, 1, {{1, {2}}}), poly(F3, 1, {{1, {3}}})));
  EXPECT_FALSE(ideal_member(poly(Q, 2, {{1, {2, 1}}}), poly(Q, 2, {{1, {1, 2}}})));
  const auto e = poly(F2, 2, {{1, {2, 1}}, {1, {1, 2}}});
  const auto candidate = poly(F2, 2, {{1, {1, 0}}}) * poly(F2, 2, {{1, {0, 1}}}) *
                         poly(F2, 2, {{1, {1, 0}}, {1, {0, 1}}}) * poly(F2, 2, {{1, {1, 0}}});
  EXPECT_TRUE(ideal_member(e, candidate));
}

TEST(IdealMemberTest, ZeroGeneratorIsDomainError) {
  try {
    ideal_member(Polynomial(Field(3), 1), poly(Field(3), 1, {{1, {1}}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::domain);
  }
}

TEST(BruteForceTest, Examples) {
  auto r = brute_force_length(rep(3, 1, {{1}, {2}}), 3);
  EXPECT_EQ(r.lambda, 2);
  EXPECT_EQ(r.witness, (std::vector<SubtorusLine>{line(3, 1, {1}), line(3, 1, {1})}));
  EXPECT_EQ(r.formula_value, 2);
  EXPECT_TRUE(r.agrees);
  EXPECT_EQ(r.search_bound, 3);

  r = brute_force_length(rep(2, 2, {{1, 0}, {0, 1}, {1, 1}}), 4);
  EXPECT_EQ(r.lambda, 3);
  EXPECT_EQ(r.witness, (std::vector<SubtorusLine>{line(2, 2, {0, 1}), line(2, 2, {1, 0}), line(2, 2, {1, 1})}));

  r = brute_force_length(rep(2, 1, {{1}}), 1);
  EXPECT_EQ(r.lambda, 1);
  EXPECT_EQ(r.witness, (std::vector<SubtorusLine>{line(2, 1, {1})}));
}

TEST(CrossCheckTest, Examples) {
  EXPECT_TRUE(cross_check(rep(3, 1, {{1}, {2}}), 3).agrees);
  auto r = cross_check(rep(3, 2, {{1, 0}, {0, 1}, {1, 1}, {1, 2}}), 5);
  EXPECT_EQ(r.lambda, 4);
  EXPECT_EQ(r.formula_value, 4);
  EXPECT_TRUE(r.agrees);

  r = cross_check(rep(0, 2, {{1, 0}, {2, 0}}), 3);
  EXPECT_EQ(r.lambda, 2);
  EXPECT_EQ(r.witness, (std::vector<SubtorusLine>{line(0, 2, {1, 0}), line(0, 2, {1, 0})}));
  EXPECT_TRUE(r.agrees);
}

TEST(BruteForceTest, ExhaustedSearchIsSearchError) {
  try {
    brute_force_length(rep(3, 1, {{1}, {2}}), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::search);
  }
}

TEST(BruteForceTest, BudgetRefusal) {
  try {
    brute_force_length(rep(7, 3, {{1, 2, 3}}), 8, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::search);
  }
  EXPECT_EQ(search_space_size(3, 3), 20u);
  EXPECT_EQ(search_space_size(1, 5), 6u);
}

TEST(OracleLinesTest, TorusUsesWeightLines) {
  const auto lines = oracle_lines(rep(0, 2, {{2, 0}, {0, -1}, {1, 0}}));
  EXPECT_EQ(lines, (std::vector<SubtorusLine>{line(0, 2, {0, 1}), line(0, 2, {1, 0})}));
  EXPECT_EQ(oracle_lines(rep(3, 2, {{1, 0}})).size(), 4u);
}

TEST(EulerPolynomialTest, AgreesWithEulerClass) {
  std::mt19937_64 rng(3);
  for (std::int64_t p : {0, 2, 3, 5}) {
    const GroupSpec g(p, 2);
    for (int i = 0; i < 20; ++i) {
      const RepSphere s(g, testing::random_weights(g, 1 + static_cast<std::size_t>(i % 4), rng));
      const auto e = rep_sphere_euler_polynomial(s);
      const auto ec = euler_class(to_cohom_data(s)).polynomial;
      // Equal up to a nonzero unit.
      ASSERT_TRUE(poly_divides(e, ec));
      ASSERT_TRUE(poly_divides(ec, e));
    }
  }
}

// ---- properties -------------------------------------------------------------

TEST(OracleProperties, AgreementMinimalityDeterminism) {
  std::mt19937_64 rng(11);
  for (std::int64_t p : {2, 3, 5}) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const GroupSpec g(p, k);
      const int iterations = (p == 5 && k == 3) ? 4 : 12;
      for (int iter = 0; iter < iterations; ++iter) {
        const std::size_t count = 1 + static_cast<std::size_t>(iter % ((p == 5 && k == 3) ? 3 : 5));
        const RepSphere s(g, testing::random_weights(g, count, rng));
        const auto r = cross_check(s, static_cast<std::int64_t>(count));
        ASSERT_EQ(r.lambda, static_cast<std::int64_t>(count));
        ASSERT_TRUE(r.agrees);
        ASSERT_EQ(static_cast<std::int64_t>(r.witness.size()), r.lambda);
        ASSERT_TRUE(std::is_sorted(r.witness.begin(), r.witness.end()));

        const auto e = rep_sphere_euler_polynomial(s);
        auto product = [&](const std::vector<SubtorusLine>& ls) {
          Polynomial out = Polynomial::constant(g.field(), k, Scalar::one(g.field()));
          for (const auto& h : ls) out = out * s_H(g, h).to_polynomial();
          return out;
        };
        ASSERT_TRUE(ideal_member(e, product(r.witness)));
        for (std::size_t drop = 0; drop < r.witness.size(); ++drop) {
          auto fewer = r.witness;
          fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
          ASSERT_FALSE(ideal_member(e, product(fewer)));
        }

        // Witness is exactly the multiset of the weights' lines.
        std::vector<SubtorusLine> expected;
        for (const auto& w : s.weights()) expected.push_back(line_of_weight(g, w));
        std::sort(expected.begin(), expected.end());
        ASSERT_EQ(r.witness, expected);

        const auto again = brute_force_length(s, static_cast<std::int64_t>(count));
        ASSERT_EQ(again.witness, r.witness);
      }
    }
  }
}

}  // namespace
}  // namespace cohomlen
