#include <gtest/gtest.h>

#include <random>

#include "worked_example.hpp"
#include "sepfam/document.hpp"

using namespace sepfam;
using namespace sepfam::testing;

TEST(FamilyDocument, ParsesWorkedExample) {
  const auto parsed =
      parse_family_text(R"({"n": 4, "bipartitions": [[[1, 2], [3, 4]], [[1, 3], [2, 4]]]})");
  EXPECT_EQ(parsed.family, family_P());
  EXPECT_FALSE(parsed.relabeled());
}

TEST(FamilyDocument, BlockOrderDoesNotMatter) {
  const auto parsed = parse_family_text(R"({"n": 4, "bipartitions": [[[3, 4], [2, 1]]]})");
  EXPECT_EQ(parsed.family, Family(4, {P1()}));
}

TEST(FamilyDocument, TrivialBipartition) {
  const auto parsed = parse_family_text(R"({"n": 3, "bipartitions": [[[1, 2, 3]]]})");
  EXPECT_EQ(parsed.family, Family(3, {Bipartition::trivial(3)}));
}

TEST(FamilyDocument, RelabelsArbitraryLabels) {
  const auto parsed =
      parse_family_text(R"({"n": 4, "bipartitions": [[[10, 20], [30, 40]], [[10, 30], [20, 40]]]})");
  EXPECT_EQ(parsed.family, family_P());
  EXPECT_TRUE(parsed.relabeled());
  EXPECT_EQ(parsed.labels, (std::vector<std::int64_t>{10, 20, 30, 40}));
}

TEST(FamilyDocument, EmptyFamilyNeedsN) {
  EXPECT_EQ(parse_family_text(R"({"n": 3, "bipartitions": []})").family, Family(3));
  EXPECT_THROW(parse_family_text(R"({"bipartitions": []})"), ParseError);
}

TEST(FamilyDocument, Rejects) {
  // overlap
  EXPECT_THROW(parse_family_text(R"({"n": 3, "bipartitions": [[[1, 2], [2, 3]]]})"), ParseError);
  // three blocks
  EXPECT_THROW(parse_family_text(R"({"n": 3, "bipartitions": [[[1], [2], [3]]]})"), ParseError);
  // element 4 missing from the second bipartition
  EXPECT_THROW(
      parse_family_text(R"({"n": 4, "bipartitions": [[[1, 2], [3, 4]], [[1, 3], [2]]]})"),
      ParseError);
  // n disagrees with the blocks
  EXPECT_THROW(parse_family_text(R"({"n": 5, "bipartitions": [[[1, 2], [3, 4]]]})"), ParseError);
  EXPECT_THROW(parse_family_text(R"({"n": 2, "bipartitions": [[[1], []]]})"), ParseError);
  EXPECT_THROW(parse_family_text(R"({"n": 2, "bipartitions": [[[0], [1]]]})"), ParseError);
  EXPECT_THROW(parse_family_text(R"({"n": 2, "bipartitions": [[[1], [2]], [[2], [1]]]})"),
               ParseError);
  EXPECT_THROW(parse_family_text(R"({"n": 2, "bipartitions": [[[1], [2]])"), ParseError);
  EXPECT_THROW(parse_family_text(R"({"n": "4", "bipartitions": []})"), ParseError);
  EXPECT_THROW(parse_family_text("1,2|2,3"), ParseError);
  EXPECT_THROW(parse_family_text("1,x|3"), ParseError);
}

TEST(CompactForm, Examples) {
  EXPECT_EQ(family_to_compact(family_P()), "1,3|2,4;1,2|3,4");
  EXPECT_EQ(family_to_compact(family_Q()), "1,2,3|4;1,2|3,4;1|2,3,4");
  EXPECT_EQ(parse_family_text("1,2|3,4; 1,3|2,4").family, family_P());
  EXPECT_EQ(parse_family_compact("", 3).family, Family(3));
}

TEST(CompactForm, JsonShape) {
  const auto doc = family_to_json(family_P());
  EXPECT_EQ(doc.dump(), R"({"bipartitions":[[[1,3],[2,4]],[[1,2],[3,4]]],"n":4})");
}

TEST(Documents, RoundTripRandomFamilies) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const unsigned n = 1 + rng() % 10;
    const unsigned k = rng() % 8;
    std::vector<Mask> cobs;
    for (unsigned i = 0; i < k; ++i) cobs.push_back(rng() & ground_mask(n) & ~Mask{1});
    std::sort(cobs.begin(), cobs.end());
    cobs.erase(std::unique(cobs.begin(), cobs.end()), cobs.end());
    const Family f = Family::from_coblocks(n, cobs);
    EXPECT_EQ(parse_family_json(family_to_json(f)).family, f);
    EXPECT_EQ(parse_family_compact(family_to_compact(f), n).family, f);
  }
}

TEST(Report, SummaryNamesFailures) {
  ValidationReport r;
  r.checks.push_back({"sum-identity", "n=2,k=1", true, "1", "1"});
  r.checks.push_back({"sum-identity", "n=3,k=1", false, "0", "1"});
  const auto lines = summarize(r);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0], "FAIL sum-identity (1 of 2 failed)");
  EXPECT_EQ(lines[1], "  failed sum-identity [n=3,k=1]: expected 0, got 1");
  EXPECT_EQ(lines[2], "overall: FAIL");
  const auto j = report_to_json(r);
  EXPECT_FALSE(j["passed"].get<bool>());
  EXPECT_EQ(j["checks"].size(), 2u);
}
