#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pnw/membership.hpp"
#include "pnw/tables.hpp"

namespace pnw {
namespace {

std::vector<int> values(const WeightTable& t) { return t.values; }
std::vector<int> values(const MaxOnesTable& t) { return t.values; }

TEST(PrefixWeightsTest, Examples) {
  EXPECT_EQ(values(prefix_weights(BinaryWord::parse("11010"))), (std::vector<int>{0, 1, 2, 2, 3, 3}));
  EXPECT_EQ(values(prefix_weights(BinaryWord::parse("00000"))), (std::vector<int>{0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(values(prefix_weights(BinaryWord{})), (std::vector<int>{0}));
}

TEST(MaxOnesTest, Examples) {
  EXPECT_EQ(values(max_ones(BinaryWord::parse("11100110110"))),
            (std::vector<int>{0, 1, 2, 3, 3, 4, 4, 5, 5, 6, 7, 7}));
  EXPECT_EQ(values(max_ones(BinaryWord::parse("11111"))), (std::vector<int>{0, 1, 2, 3, 4, 5}));
  // Frozen from oracle::max_ones: the length-4 factors 1001 and 0011 hold 2 ones.
  EXPECT_EQ(values(max_ones(BinaryWord::parse("10011"))), (std::vector<int>{0, 1, 2, 2, 2, 3}));
  EXPECT_EQ(oracle::max_ones("10011"), (std::vector<int>{0, 1, 2, 2, 2, 3}));
}

TEST(MaxOnesTest, AgreesWithFactorEnumeration) {
  for (int n = 0; n <= 11; ++n) {
    for (const std::string& s : oracle::all_words(n)) {
      const BinaryWord w = BinaryWord::parse(s);
      ASSERT_EQ(values(max_ones(w)), oracle::max_ones(s)) << s;
      ASSERT_EQ(values(prefix_weights(w)), oracle::prefix_weights(s)) << s;
    }
  }
}

TEST(MaxOnesTest, TableShapeInvariants) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const BinaryWord w = BinaryWord::parse(oracle::random_word(rng, 1 + static_cast<int>(rng() % 60)));
    const MaxOnesTable f = max_ones(w);
    const WeightTable p = prefix_weights(w);
    ASSERT_EQ(f[0], 0);
    ASSERT_EQ(p[w.size()], static_cast<int>(w.weight()));
    for (std::size_t i = 1; i <= w.size(); ++i) {
      ASSERT_TRUE(f[i] - f[i - 1] == 0 || f[i] - f[i - 1] == 1);
      ASSERT_TRUE(p[i] - p[i - 1] == 0 || p[i] - p[i - 1] == 1);
      ASSERT_GE(f[i], p[i]);
    }
  }
}

TEST(PnfTest, Examples) {
  EXPECT_EQ(pnf(BinaryWord::parse("11100110110")).to_string(), "11101010110");
  EXPECT_EQ(pnf(BinaryWord::parse("01111")).to_string(), "11110");
  EXPECT_EQ(pnf(BinaryWord::parse("11010")).to_string(), "11010");
  EXPECT_TRUE(pnf(BinaryWord{}).empty());
}

TEST(PnfTest, IdempotentAndCharacterizesMembership) {
  for (int n = 0; n <= 12; ++n) {
    for (const std::string& s : oracle::all_words(n)) {
      const BinaryWord w = BinaryWord::parse(s);
      const BinaryWord form = pnf(w);
      ASSERT_EQ(pnf(form), form) << s;
      ASSERT_TRUE(is_prefix_normal(form)) << s;
      ASSERT_EQ(max_ones(form), max_ones(w)) << s;
      ASSERT_EQ(is_prefix_normal(w), form == w) << s;
    }
  }
}

}  // namespace
}  // namespace pnw
