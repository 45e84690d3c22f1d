#include "tropic/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "test_support.hpp"

using namespace tropic;
using tropic::testing::kNegInf;
using tropic::testing::mp;
using tropic::testing::sp;
using tropic::testing::vp;

TEST(Oracle, GridFindsResidual) {
  const auto r = oracle::grid_min_distance(mp({{0}, {0}}), vp({3, 5}), oracle::GridSpec::uniform(1, -10, 10, 0.5));
  EXPECT_EQ(r.best, sp(1));
  EXPECT_EQ(*r.argbest, vp({4}));
  EXPECT_EQ(r.evaluated, 42u);
}

TEST(Oracle, GridFeasibility) {
  auto grid = oracle::GridSpec::uniform(1, -10, 10, 0.5);
  grid.feasibility = oracle::Feasibility::Below;
  EXPECT_EQ(oracle::grid_min_distance(mp({{0}, {0}}), vp({3, 5}), grid).best, sp(2));
  grid.feasibility = oracle::Feasibility::Above;
  const auto above = oracle::grid_min_distance(mp({{0}, {0}}), vp({3, 5}), grid);
  EXPECT_EQ(above.best, sp(2));
  EXPECT_EQ(*above.argbest, vp({5}));
}

TEST(Oracle, GridRejectsBadSpecs) {
  EXPECT_THROW(oracle::grid_min_distance(mp({{0}}), vp({1}), oracle::GridSpec::uniform(2, 0, 1, 1)),
               std::invalid_argument);
  EXPECT_THROW(oracle::grid_min_distance(mp({{0}}), vp({1}), oracle::GridSpec::uniform(1, 0, 1, 0)),
               std::invalid_argument);
  auto big = oracle::GridSpec::uniform(3, -100, 100, 0.01);
  EXPECT_THROW(oracle::grid_min_distance(mp({{0, 0, 0}}), vp({1}), big), std::length_error);
}

TEST(Oracle, GridContains) {
  const auto grid = oracle::GridSpec::uniform(2, -1, 1, 0.5);
  EXPECT_TRUE(grid.contains(Semifield::MaxPlus, vp({0.5, kNegInf})));
  EXPECT_FALSE(grid.contains(Semifield::MaxPlus, vp({0.25, 0})));
  EXPECT_FALSE(grid.contains(Semifield::MaxPlus, vp({2, 0})));
}

TEST(Oracle, ExhaustiveExamples) {
  EXPECT_EQ(oracle::exhaustive_minimal_generators(mp({{0, 1}, {0, 1}}), vp({2, 2})),
            (std::vector<IndexSet>{{0}, {1}}));
  EXPECT_EQ(oracle::exhaustive_minimal_generators(mp({{0, 2}, {2, 0}}), vp({2, 2})),
            (std::vector<IndexSet>{{0, 1}}));
  EXPECT_EQ(oracle::exhaustive_minimal_generators(mp({{0}}), vp({kNegInf})), (std::vector<IndexSet>{{}}));
  EXPECT_TRUE(oracle::exhaustive_minimal_generators(mp({{0}, {0}}), vp({3, 5})).empty());
}

TEST(Oracle, VerifyFamilyCatchesWrongMembers) {
  solver::FamilyMember wrong{{0}, {solver::ComponentKind::Fixed}, vp({2})};
  auto rng = tropic::testing::seeded(61);
  const auto report = oracle::verify_family(mp({{0}, {0}}), vp({3, 3}), std::nullopt, {wrong}, rng);
  EXPECT_FALSE(report.ok);
  EXPECT_FALSE(report.message.empty());
}

TEST(Oracle, RandomInstancesAreColumnRegular) {
  auto rng = tropic::testing::seeded(62);
  for (int it = 0; it < 100; ++it) {
    const Matrix a = oracle::random_matrix(Semifield::MaxTimes, {3, 4, 0.5}, rng);
    EXPECT_TRUE(regularity(a).column_regular);
    EXPECT_FALSE(oracle::random_vector(Semifield::MinPlus, 3, 0.5, -2, 2, rng).is_zero());
  }
}

TEST(Oracle, MappingRoundTrips) {
  const Matrix a = mp({{1, kNegInf}, {-2, 0.5}});
  for (Semifield sf : kAllSemifields) {
    const Matrix back = oracle::map_matrix(oracle::map_matrix(a, sf), Semifield::MaxPlus);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        if (std::isinf(a(i, j))) {
          EXPECT_EQ(back(i, j), a(i, j));
        } else {
          EXPECT_NEAR(back(i, j), a(i, j), 1e-12) << to_string(sf);
        }
      }
    }
  }
}
