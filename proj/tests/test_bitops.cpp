#include "sfc/bitops.hpp"

#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

using namespace sfc;

TEST(Gray, Examples) {
  EXPECT_EQ(gray(3, 0), 0u);
  EXPECT_EQ(gray(3, 1), 1u);
  EXPECT_EQ(gray(2, 2), 3u);
}

TEST(Gray, InverseExamples) {
  EXPECT_EQ(gray_inv(4, 0b1111), 10u);
  EXPECT_EQ(gray_inv(3, 0b111), 5u);
  EXPECT_EQ(gray_inv(2, 0), 0u);
}

TEST(Gray, RangeErrors) {
  EXPECT_THROW(gray(2, 4), std::domain_error);
  EXPECT_THROW(gray_inv(3, 8), std::domain_error);
  EXPECT_THROW(gray(0, 0), std::domain_error);
  EXPECT_THROW(gray(65, 0), std::domain_error);
  EXPECT_EQ(gray(64, ~Digit{0}), ~Digit{0} ^ (~Digit{0} >> 1));
  EXPECT_EQ(gray_inv(64, gray(64, 0x123456789abcdefULL)), 0x123456789abcdefULL);
}

TEST(Parity, Examples) {
  EXPECT_EQ(parity(0), 0u);
  EXPECT_EQ(parity(6), 0u);
  EXPECT_EQ(parity(7), 1u);
}

TEST(LowMask, Edges) {
  EXPECT_EQ(low_mask(0), 0u);
  EXPECT_EQ(low_mask(3), 7u);
  EXPECT_EQ(low_mask(64), ~std::uint64_t{0});
}

TEST(ZOrder, Examples) {
  const std::vector<Coord> a{2, 1};
  EXPECT_EQ(to_zorder(2, 2, a), (std::vector<Digit>{1, 2}));
  const std::vector<Coord> b{1, 0, 1};
  EXPECT_EQ(to_zorder(3, 1, b), (std::vector<Digit>{5}));
  const std::vector<Coord> c{0, 0};
  EXPECT_EQ(to_zorder(2, 3, c), (std::vector<Digit>{0, 0, 0}));
}

TEST(ZOrder, InverseExamples) {
  const std::vector<Digit> a{1, 2};
  EXPECT_EQ(from_zorder(2, 2, a), (std::vector<Coord>{2, 1}));
  const std::vector<Digit> b{3};
  EXPECT_EQ(from_zorder(2, 1, b), (std::vector<Coord>{1, 1}));
  const std::vector<Digit> c{1};
  EXPECT_EQ(from_zorder(4, 1, c), (std::vector<Coord>{1, 0, 0, 0}));
}

TEST(ZOrder, RangeErrors) {
  const std::vector<Coord> big{4, 0};
  EXPECT_THROW(to_zorder(2, 2, big), std::domain_error);
  const std::vector<Coord> short_coords{1};
  EXPECT_THROW(to_zorder(2, 2, short_coords), std::domain_error);
  const std::vector<Digit> bad_digit{4};
  EXPECT_THROW(from_zorder(2, 1, bad_digit), std::domain_error);
}

TEST(ZOrder, KeyMatchesPackedDigits) {
  const std::vector<Coord> coords{5, 3, 6};
  const auto digits = to_zorder(3, 3, coords);
  EXPECT_EQ(coords_to_key(3, 3, coords), pack_digits(3, digits));
  EXPECT_EQ(unpack_digits(3, 3, pack_digits(3, digits)), digits);
  EXPECT_EQ(key_to_coords(3, 3, coords_to_key(3, 3, coords)), coords);
}

TEST(ZOrder, FullWidthKey) {
  const std::vector<Coord> coords{~Coord{0}};
  EXPECT_EQ(coords_to_key(1, 64, coords), ~ZKey{0});
  const std::vector<Coord> two{0xffffffffULL, 0};
  EXPECT_EQ(coords_to_key(2, 32, two), 0x5555555555555555ULL);
}

TEST(L1, Distance) {
  const std::vector<Coord> a{1, 5};
  const std::vector<Coord> b{4, 2};
  EXPECT_EQ(l1_distance(a, b), 6u);
}

TEST(GridPoint, BothForms) {
  const std::vector<Coord> coords{2, 1};
  const auto p = GridPoint::from_coords(2, 2, coords);
  const std::vector<Digit> z{1, 2};
  EXPECT_EQ(std::vector<Digit>(p.zdigits().begin(), p.zdigits().end()), z);
  EXPECT_EQ(p, GridPoint::from_zdigits(2, 2, z));
}
