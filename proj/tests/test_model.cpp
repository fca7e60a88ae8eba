#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "kitaev/errors.hpp"
#include "kitaev/model.hpp"

using namespace kitaev;

namespace {

std::vector<double> values(const GainProfile& p) { return {p.strengths().begin(), p.strengths().end()}; }

}  // namespace

TEST(AlternatingProfile, TwelveSites) {
  const GainProfile p = alternating_profile(12, 0.15);
  const std::vector<double> expected{0, .15, -.15, .15, -.15, .15, -.15, .15, -.15, .15, -.15, 0};
  EXPECT_EQ(values(p), expected);
  EXPECT_TRUE(p.is_balanced());
  EXPECT_TRUE(p.has_free_edges());
}

TEST(AlternatingProfile, ZeroStrength) {
  EXPECT_EQ(values(alternating_profile(4, 0.0)), (std::vector<double>{0, 0, 0, 0}));
}

TEST(AlternatingProfile, OddLengthIsUnbalanced) {
  const GainProfile p = alternating_profile(6, 1.0);
  EXPECT_EQ(values(p), (std::vector<double>{0, 1, -1, 1, -1, 0}));
  EXPECT_DOUBLE_EQ(p.sum(), 0.0);

  const GainProfile odd = alternating_profile(7, 1.0);
  EXPECT_EQ(values(odd), (std::vector<double>{0, 1, -1, 1, -1, 1, 0}));
  EXPECT_DOUBLE_EQ(odd.sum(), 1.0);
  EXPECT_FALSE(odd.is_balanced());
}

TEST(AlternatingProfile, RejectsShortChains) {
  EXPECT_THROW(alternating_profile(3, 0.1), InvalidSize);
}

// Every even length is balanced, free-edged and reflection-odd; every odd
// length with g0 != 0 is flagged unbalanced.
TEST(AlternatingProfile, ParityProperty) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> strength(-2.0, 2.0);
  for (int n = 4; n <= 33; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      double g0 = strength(rng);
      if (g0 == 0.0) g0 = 0.5;
      const GainProfile p = alternating_profile(n, g0);
      EXPECT_TRUE(p.has_free_edges());
      if (n % 2 == 0) {
        EXPECT_TRUE(p.is_balanced()) << n;
        EXPECT_TRUE(is_pt_symmetric_nonhermitian_part(p, 0.0)) << n;
      } else {
        EXPECT_FALSE(p.is_balanced()) << n;
        EXPECT_DOUBLE_EQ(std::abs(p.sum()), std::abs(g0));
      }
    }
  }
}

TEST(TwoImpurityProfile, DefaultLayout) {
  const GainProfile p = two_impurity_profile(12, 0.3, 2, 11);
  for (std::size_t i = 0; i < 12; ++i) {
    const double expected = i == 1 ? 0.3 : (i == 10 ? -0.3 : 0.0);
    EXPECT_EQ(p[i], expected) << i;
  }
  EXPECT_TRUE(p.is_balanced());
  EXPECT_TRUE(p.has_free_edges());
}

TEST(TwoImpurityProfile, SmallChain) {
  EXPECT_EQ(values(two_impurity_profile(5, 0.5, 2, 4)), (std::vector<double>{0, 0.5, 0, -0.5, 0}));
  EXPECT_EQ(values(two_impurity_profile(12, 0.0, 2, 11)), std::vector<double>(12, 0.0));
}

TEST(TwoImpurityProfile, RejectsEdgeAndOutOfRangeSites) {
  EXPECT_THROW(two_impurity_profile(12, 0.3, 1, 11), InvalidSite);
  EXPECT_THROW(two_impurity_profile(12, 0.3, 2, 12), InvalidSite);
  EXPECT_THROW(two_impurity_profile(12, 0.3, 0, 5), InvalidSite);
  EXPECT_THROW(two_impurity_profile(12, 0.3, 2, 13), InvalidSite);
  EXPECT_THROW(two_impurity_profile(12, 0.3, 4, 4), InvalidSite);
}

TEST(RandomBalancedProfile, ZeroStrength) {
  EXPECT_EQ(values(random_balanced_profile(12, 0.0, 123)), std::vector<double>(12, 0.0));
}

TEST(RandomBalancedProfile, Postconditions) {
  const GainProfile p = random_balanced_profile(12, 0.5, 42);
  EXPECT_EQ(p[0], 0.0);
  EXPECT_EQ(p[11], 0.0);
  EXPECT_LE(std::abs(p.sum()), 1e-15);
  EXPECT_TRUE(p.is_balanced());
  // Mean subtraction can at most double the support.
  for (double g : p.strengths()) EXPECT_LE(std::abs(g), 1.0);
}

TEST(RandomBalancedProfile, Deterministic) {
  EXPECT_EQ(random_balanced_profile(12, 0.5, 42), random_balanced_profile(12, 0.5, 42));
  EXPECT_NE(random_balanced_profile(12, 0.5, 42), random_balanced_profile(12, 0.5, 43));
}

// The stream is pinned: mt19937_64 seeded with 42, top 53 bits per draw.
TEST(RandomBalancedProfile, StreamIsPinned) {
  std::mt19937_64 engine(42);
  std::vector<double> raw;
  for (int i = 0; i < 10; ++i) raw.push_back(0.5 * (2.0 * static_cast<double>(engine() >> 11) * 0x1.0p-53 - 1.0));
  double mean = 0.0;
  for (double g : raw) mean += g;
  mean /= 10.0;
  const GainProfile p = random_balanced_profile(12, 0.5, 42);
  for (int i = 0; i < 9; ++i) EXPECT_NEAR(p[static_cast<std::size_t>(i + 1)], raw[i] - mean, 1e-15);
}

TEST(RandomBalancedProfile, AlwaysBalancedProperty) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 4 + static_cast<int>(seed % 40);
    const double max_strength = 0.01 + 0.1 * static_cast<double>(seed % 17);
    const GainProfile p = random_balanced_profile(n, max_strength, seed);
    EXPECT_TRUE(p.has_free_edges());
    EXPECT_TRUE(p.is_balanced());
    EXPECT_LE(std::abs(p.sum()), 1e-15 * n * max_strength) << seed;
  }
}

TEST(RandomBalancedProfile, RejectsBadArguments) {
  EXPECT_THROW(random_balanced_profile(3, 0.5, 1), InvalidSize);
  EXPECT_THROW(random_balanced_profile(12, -0.5, 1), InvalidParameter);
}

TEST(PtPredicate, Examples) {
  EXPECT_TRUE(is_pt_symmetric_nonhermitian_part(GainProfile({0, 0.7, -0.7, 0}), 1e-12));
  EXPECT_TRUE(is_pt_symmetric_nonhermitian_part(alternating_profile(12, 0.15), 1e-12));
  EXPECT_FALSE(is_pt_symmetric_nonhermitian_part(GainProfile({0, 0.7, 0.7, 0}), 1e-12));
  // Random balanced profiles are generically not reflection-odd.
  EXPECT_FALSE(is_pt_symmetric_nonhermitian_part(random_balanced_profile(12, 0.5, 7), 1e-12));
}

TEST(GainProfile, BalanceToleranceIsRelative) {
  EXPECT_TRUE(GainProfile({0, 1e6, -1e6 + 1e-7, 0}).is_balanced());
  EXPECT_FALSE(GainProfile({0, 1e-3, 0, 0}).is_balanced());
  EXPECT_FALSE(GainProfile({0.1, 0, 0, -0.1}).has_free_edges());
  EXPECT_THROW(GainProfile({0, NAN, 0}), InvalidParameter);
}

TEST(ChainSpec, Validation) {
  EXPECT_NO_THROW(ChainSpec(2, 1, 1, 0, zero_profile(2)));
  EXPECT_THROW(ChainSpec(1, 1, 1, 0, zero_profile(1)), InvalidSize);
  EXPECT_THROW(ChainSpec(4, 1, 1, 0, zero_profile(5)), InvalidSize);
  EXPECT_THROW(ChainSpec(4, INFINITY, 1, 0, zero_profile(4)), InvalidParameter);
  EXPECT_THROW(ChainSpec(4, 1, -0.1, 0, zero_profile(4)), InvalidParameter);
  EXPECT_THROW(ChainSpec(4, 1, 1, NAN, zero_profile(4)), InvalidParameter);
}

TEST(ChainSpec, JsonRoundTrip) {
  const ChainSpec spec(12, 1.0, 0.75, -0.3, random_balanced_profile(12, 0.5, 9));
  const nlohmann::json j = spec;
  EXPECT_EQ(j.at("n_sites"), 12);
  EXPECT_EQ(j.at("profile").size(), 12u);
  EXPECT_EQ(chain_spec_from_json(nlohmann::json::parse(j.dump())), spec);
}

TEST(ChainSpec, MalformedJson) {
  EXPECT_THROW(chain_spec_from_json(nlohmann::json{{"n_sites", 3}}), InvalidParameter);
  EXPECT_THROW(chain_spec_from_json(nlohmann::json{{"n_sites", 3},
                                                   {"hopping", 1},
                                                   {"pairing", 1},
                                                   {"chemical_potential", 0},
                                                   {"profile", {0, 0}}}),
               InvalidSize);
  EXPECT_THROW(load_chain_spec("/nonexistent/chain.json"), PersistenceError);
}
