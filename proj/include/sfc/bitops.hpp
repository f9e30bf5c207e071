#ifndef SFC_BITOPS_HPP
#define SFC_BITOPS_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace sfc {

/// A d-bit word: one Z-order digit, or a traversal position of a half-size cell.
using Digit = std::uint64_t;

/// Index of a cell along a curve, an element of Z/2^{nd}.
using Rank = std::uint64_t;

/// One coordinate of a grid cell, an n-bit number.
using Coord = std::uint64_t;

/// Z-order digits of a cell packed into one word, coarsest digit highest.
/// Equal to the Z-curve rank of the cell.
using ZKey = std::uint64_t;

/// Mask with the low `bits` bits set. `bits` may be 64.
constexpr std::uint64_t low_mask(unsigned bits) noexcept {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

namespace detail {

constexpr Digit gray_code(Digit k) noexcept { return k ^ (k >> 1); }

// Prefix xor from the top bit down: bit i of the result is the xor of bits i..63.
constexpr Digit gray_code_inverse(Digit x) noexcept {
  x ^= x >> 1;
  x ^= x >> 2;
  x ^= x >> 4;
  x ^= x >> 8;
  x ^= x >> 16;
  x ^= x >> 32;
  return x;
}

}  // namespace detail

/// Binary reflected Gray code on d-bit words: k xor floor(k / 2).
/// Throws std::domain_error unless 1 <= d <= 64 and k < 2^d.
Digit gray(unsigned d, Digit k);

/// Inverse of gray(d, .). Throws std::domain_error on out-of-range input.
Digit gray_inv(unsigned d, Digit x);

/// Number of set bits modulo 2.
constexpr unsigned parity(std::uint64_t x) noexcept {
  return static_cast<unsigned>(std::popcount(x) & 1);
}

/// Transposes d coordinates of n bits into n Z-order digits of d bits.
///
/// Bit j of coordinate i becomes bit i of digit n-1-j, so digit 0 holds the
/// most significant bit of every coordinate and axis 0 maps to bit 0 of
/// every digit.
std::vector<Digit> to_zorder(unsigned d, unsigned n, std::span<const Coord> coords);
void to_zorder(unsigned d, unsigned n, std::span<const Coord> coords, std::span<Digit> out);

/// Inverse of to_zorder.
std::vector<Coord> from_zorder(unsigned d, unsigned n, std::span<const Digit> zdigits);
void from_zorder(unsigned d, unsigned n, std::span<const Digit> zdigits, std::span<Coord> out);

/// Packs n digits of d bits into a ZKey (requires n*d <= 64).
ZKey pack_digits(unsigned d, std::span<const Digit> zdigits);
std::vector<Digit> unpack_digits(unsigned d, unsigned n, ZKey key);

/// Coordinates straight to ZKey and back, without the digit vector.
ZKey coords_to_key(unsigned d, unsigned n, std::span<const Coord> coords);
void key_to_coords(unsigned d, unsigned n, ZKey key, std::span<Coord> out);
std::vector<Coord> key_to_coords(unsigned d, unsigned n, ZKey key);

/// Sum of |a_i - b_i|.
std::uint64_t l1_distance(std::span<const Coord> a, std::span<const Coord> b);

/// A cell of {0..2^n-1}^d held in both coordinate and Z-order form.
class GridPoint {
 public:
  static GridPoint from_coords(unsigned d, unsigned n, std::span<const Coord> coords);
  static GridPoint from_zdigits(unsigned d, unsigned n, std::span<const Digit> zdigits);

  unsigned dimension() const noexcept { return d_; }
  unsigned depth() const noexcept { return n_; }
  std::span<const Coord> coords() const noexcept { return coords_; }
  std::span<const Digit> zdigits() const noexcept { return zdigits_; }

  friend bool operator==(const GridPoint&, const GridPoint&) = default;

 private:
  GridPoint(unsigned d, unsigned n, std::vector<Coord> coords, std::vector<Digit> zdigits)
      : d_(d), n_(n), coords_(std::move(coords)), zdigits_(std::move(zdigits)) {}

  unsigned d_;
  unsigned n_;
  std::vector<Coord> coords_;
  std::vector<Digit> zdigits_;
};

}  // namespace sfc

#endif  // SFC_BITOPS_HPP
