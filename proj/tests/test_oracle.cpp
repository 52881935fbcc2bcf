#include <gtest/gtest.h>

#include <fstream>
#include <set>

#include "worked_example.hpp"
#include "json.hpp"
#include "sepfam/oracle.hpp"

using namespace sepfam;

TEST(BruteCount, Examples) {
  EXPECT_EQ(brute_count_separating(4, 2, false), 3);
  EXPECT_EQ(brute_count_separating(4, 3, true), 29);
  for (unsigned n = 2; n <= 5; ++n) {
    EXPECT_EQ(brute_count_separating(n, 0, false), 0);
    EXPECT_EQ(brute_count_separating(n, 0, true), 0);
  }
  EXPECT_EQ(brute_count_separating(3, 5, false), 0);
  EXPECT_THROW(brute_count_separating(6, 2, false), CapacityError);
  EXPECT_THROW(brute_count_separating(1, 0, false), CapacityError);
}

TEST(BruteCount, MatchesIndependentFixture) {
  std::ifstream in(SEPFAM_FIXTURE_DIR "/oracle_counts.json");
  const auto fx = nlohmann::json::parse(in);
  for (unsigned n = 2; n <= 5; ++n) {
    for (const char* key : {"tau", "sigma"}) {
      const auto& row = fx[key][std::to_string(n)];
      for (unsigned k = 0; k < row.size(); ++k) {
        EXPECT_EQ(brute_count_separating(n, k, key[0] == 's'), row[k].get<std::uint64_t>())
            << key << " " << n << "," << k;
      }
    }
  }
}

TEST(BruteCount, MatchesCorePredicate) {
  for (unsigned n = 2; n <= 4; ++n) {
    for (bool proper : {false, true}) {
      const auto pool = all_bipartitions(n, proper);
      std::vector<std::uint64_t> by_size(pool.size() + 1, 0);
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << pool.size()); ++s) {
        std::vector<Bipartition> members;
        for (std::size_t b = 0; b < pool.size(); ++b) {
          if ((s >> b) & 1u) members.push_back(pool[b]);
        }
        if (is_separating(Family(n, members))) ++by_size[members.size()];
      }
      for (unsigned k = 0; k <= pool.size(); ++k) {
        EXPECT_EQ(brute_count_separating(n, k, proper), by_size[k]);
      }
    }
  }
}

TEST(BruteCount, ReproducesFallingFactorialSum) {
  for (unsigned n = 2; n <= 4; ++n) {
    for (unsigned k = 1; k <= 6; ++k) {
      BigInt lhs = 0;
      for (unsigned i = 1; i <= k; ++i) {
        lhs += brute_surjective_sequences(k, i) * brute_count_separating(n, i, false);
      }
      BigInt rhs = 1;
      for (unsigned j = 1; j < n; ++j) rhs *= pow2(k) - j;
      EXPECT_EQ(lhs, rhs) << n << "," << k;
    }
  }
}

TEST(BruteMinimalMax, CayleyCounts) {
  EXPECT_EQ(brute_minimal_max_families(2).size(), 1u);
  EXPECT_EQ(brute_minimal_max_families(3).size(), 3u);
  EXPECT_EQ(brute_minimal_max_families(4).size(), 16u);
  EXPECT_EQ(brute_minimal_max_families(5).size(), 125u);
  const auto four = brute_minimal_max_families(4);
  EXPECT_TRUE(std::binary_search(four.begin(), four.end(), sepfam::testing::family_Q()));
}

TEST(BruteMinimalMax, InjectiveUnderPhi) {
  for (unsigned n = 2; n <= 5; ++n) {
    std::set<LabeledGraph> images;
    const auto fams = brute_minimal_max_families(n);
    for (const auto& f : fams) {
      EXPECT_TRUE(is_minimal_separating(f));
      images.insert(phi_forward(f));
    }
    EXPECT_EQ(images.size(), fams.size());
  }
}

TEST(BruteProfile, SupportAndCounts) {
  EXPECT_EQ(brute_minimal_size_profile(2), (std::map<unsigned, BigInt>{{1, 1}}));
  EXPECT_EQ(brute_minimal_size_profile(3), (std::map<unsigned, BigInt>{{2, 3}}));
  EXPECT_EQ(brute_minimal_size_profile(4), (std::map<unsigned, BigInt>{{2, 3}, {3, 16}}));
  EXPECT_EQ(brute_minimal_size_profile(5), (std::map<unsigned, BigInt>{{3, 140}, {4, 125}}));
}

TEST(BruteSeparatingFamilies, ListsMatchCounts) {
  for (unsigned n = 2; n <= 4; ++n) {
    for (unsigned k = 0; k <= (1u << (n - 1)); ++k) {
      const auto fams = brute_separating_families(n, k, false, false);
      EXPECT_EQ(BigInt(fams.size()), brute_count_separating(n, k, false));
      EXPECT_TRUE(std::is_sorted(fams.begin(), fams.end()));
      for (const auto& f : fams) EXPECT_TRUE(is_separating(f));
    }
  }
  EXPECT_EQ(brute_separating_families(4, 3, true, false).size(), 29u);
  EXPECT_EQ(brute_separating_families(4, 3, false, true).size(), 16u);
}

TEST(BruteStirling, SmallValues) {
  EXPECT_EQ(brute_stirling2(3, 2), 3);
  EXPECT_EQ(brute_stirling2(4, 2), 7);
  EXPECT_EQ(brute_stirling2(0, 0), 1);
  EXPECT_EQ(brute_stirling1_unsigned(4, 2), 11);
  EXPECT_EQ(brute_stirling1_unsigned(0, 0), 1);
  EXPECT_EQ(brute_surjective_sequences(3, 2), 6);
}

TEST(CrossValidate, PassesOnCleanTables) {
  const auto small = cross_validate(2, 2);
  EXPECT_TRUE(small.passed());
  EXPECT_FALSE(small.checks.empty());
  const auto report = cross_validate(4, 8);
  EXPECT_TRUE(report.passed());
  std::set<std::string> names;
  for (const auto& c : report.checks) names.insert(c.name);
  for (const char* expected :
       {"tau_v1-vs-brute", "sigma_v1-vs-brute", "tau_v2-vs-tau_v1", "sigma_v2-vs-sigma_v1",
        "sum-identity", "sigma-tau-recurrence", "transpose-identity", "stirling1-identity",
        "tau_v1-divisibility", "phi-roundtrip", "prufer-families-equal-brute"}) {
    EXPECT_TRUE(names.count(expected)) << expected;
  }
}

TEST(CrossValidate, RecordsInjectedFault) {
  const Formulas clean(verify_order(4, 8));
  const Formulas bad(clean.first_kind().with_entry(4, 2, clean.first_kind().at(4, 2) + 1),
                     clean.second_kind());
  const auto report = cross_validate(4, 8, bad);
  EXPECT_FALSE(report.passed());
  std::set<std::string> failing;
  for (const auto* c : report.failures()) failing.insert(c->name);
  EXPECT_TRUE(failing.count("tau_v1-divisibility"));
  EXPECT_TRUE(failing.count("stirling1-identity"));
  EXPECT_TRUE(failing.count("stirling1-vs-enumeration"));
}

TEST(CrossValidate, ClampsLargeBounds) {
  const Formulas f(verify_order(kMaxVerifyGround, 4));
  const auto report = cross_validate(40, 4, f);
  EXPECT_EQ(report.n_max, kMaxVerifyGround);
  EXPECT_FALSE(report.warnings.empty());
  EXPECT_TRUE(report.passed());
}
