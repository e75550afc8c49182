#include <gtest/gtest.h>

#include "bqaoa/bitstring.hpp"
#include "bqaoa/error.hpp"
#include "bqaoa/sample_counts.hpp"
#include "bqaoa/seeding.hpp"

using namespace bqaoa;

TEST(Bitstring, IndexRoundTrip) {
  for (std::uint64_t k = 0; k < 64; ++k) {
    const auto b = Bitstring::from_index(k, 6);
    EXPECT_EQ(b.to_index(), k);
    EXPECT_EQ(Bitstring::parse(b.str()), b);
  }
}

TEST(Bitstring, CharacterIIsBitI) {
  const auto b = Bitstring::from_index(0b0110, 4);
  EXPECT_EQ(b.str(), "0110");
  EXPECT_FALSE(b[0]);
  EXPECT_TRUE(b[1]);
  EXPECT_EQ(Bitstring::parse("1000").to_index(), 1U);
}

TEST(Bitstring, ParseRejectsOtherCharacters) { EXPECT_THROW((void)Bitstring::parse("01x"), InvalidInput); }

TEST(Bitstring, FlipAndHamming) {
  const auto a = Bitstring::parse("0000");
  const auto b = flipped(flipped(a, 1), 3);
  EXPECT_EQ(b.str(), "0101");
  EXPECT_EQ(hamming_distance(a, b), 2U);
  EXPECT_EQ(flipped(b, 1), Bitstring::parse("0001"));
}

TEST(SampleCounts, AddMergesAndCountsShots) {
  SampleCounts c(2);
  c.add(Bitstring::parse("01"));
  c.add(Bitstring::parse("01"), 3);
  c.add(Bitstring::parse("11"), 2);
  EXPECT_EQ(c.shots(), 6U);
  EXPECT_EQ(c.support_size(), 2U);
  EXPECT_EQ(c.count(Bitstring::parse("01")), 4U);
  EXPECT_EQ(c.count(Bitstring::parse("00")), 0U);
  EXPECT_EQ(c.expand().size(), 6U);
  EXPECT_THROW(c.add(Bitstring::parse("011")), InvalidInput);
  EXPECT_THROW(c.add(Bitstring::parse("01"), 0), InvalidInput);
}

TEST(SampleCounts, CountsFromShots) {
  const std::vector<Bitstring> shots{Bitstring::parse("10"), Bitstring::parse("00"), Bitstring::parse("10")};
  const auto c = counts_from(2, shots);
  EXPECT_EQ(c.shots(), 3U);
  EXPECT_EQ(c.count(Bitstring::parse("10")), 2U);
  EXPECT_EQ(c.expand().front(), Bitstring::parse("00"));
}

TEST(Seeding, StreamsAndPathsAreDistinct) {
  EXPECT_EQ(derive_seed(1, Stream::kSample, {1, 2}), derive_seed(1, Stream::kSample, {1, 2}));
  EXPECT_NE(derive_seed(1, Stream::kSample, {1, 2}), derive_seed(1, Stream::kSample, {2, 1}));
  EXPECT_NE(derive_seed(1, Stream::kSample), derive_seed(1, Stream::kCma));
  EXPECT_NE(derive_seed(1, Stream::kSample), derive_seed(2, Stream::kSample));
}
