#ifndef SFC_REFERENCE_CODECS_HPP
#define SFC_REFERENCE_CODECS_HPP

#include "sfc/bitops.hpp"
#include "sfc/codec.hpp"

#include <bit>

namespace sfc {

/// Z-order (Morton) curve: the rank is the concatenation of the Z-order digits.
class ZCodec final : public Codec {
 public:
  ZCodec(unsigned d, unsigned n) : Codec(CurveKind::Z, d, n, 1) {}

  bool cyclic() const noexcept override { return false; }

  Rank encode_fast(ZKey key) const noexcept { return key; }
  ZKey decode_fast(Rank r) const noexcept { return r; }

 private:
  Rank encode_unchecked(ZKey key) const override { return encode_fast(key); }
  ZKey decode_unchecked(Rank r) const override { return decode_fast(r); }
  void encode_batch_unchecked(std::span<const ZKey> keys, std::span<Rank> out) const override;
};

/// Butz-Hilbert curve in d dimensions, rank 0 at the all-zero cell.
///
/// Per level the digit is mapped through the current transform
/// T(e, dir)(b) = (b ^ e) rotated right by dir + 1, Gray-decoded into the
/// sub-cube's rank, and the entry point e and intra-cube direction dir are
/// updated from that rank (Hamilton's formulation of Butz's algorithm).
class HilbertCodec final : public Codec {
 public:
  HilbertCodec(unsigned d, unsigned n) : Codec(CurveKind::Hilbert, d, n, 2) {}

  bool cyclic() const noexcept override { return false; }

  Rank encode_fast(ZKey key) const noexcept {
    const unsigned d = dimension();
    const unsigned n = depth();
    const Digit mask = low_mask(d);
    Digit entry = 0;
    unsigned dir = 0;
    Rank h = 0;
    for (unsigned j = 0; j < n; ++j) {
      const unsigned shift = d * (n - 1 - j);
      const Digit digit = (key >> shift) & mask;
      const Digit local = rotate_right(digit ^ entry, dir + 1);
      const Digit w = detail::gray_code_inverse(local);
      entry ^= rotate_left(sub_entry(w), dir + 1);
      dir = (dir + sub_direction(w) + 1) % d;
      h |= w << shift;
    }
    return h;
  }

  ZKey decode_fast(Rank h) const noexcept {
    const unsigned d = dimension();
    const unsigned n = depth();
    const Digit mask = low_mask(d);
    Digit entry = 0;
    unsigned dir = 0;
    ZKey key = 0;
    for (unsigned j = 0; j < n; ++j) {
      const unsigned shift = d * (n - 1 - j);
      const Digit w = (h >> shift) & mask;
      const Digit digit = rotate_left(detail::gray_code(w), dir + 1) ^ entry;
      entry ^= rotate_left(sub_entry(w), dir + 1);
      dir = (dir + sub_direction(w) + 1) % d;
      key |= digit << shift;
    }
    return key;
  }

 private:
  Rank encode_unchecked(ZKey key) const override { return encode_fast(key); }
  ZKey decode_unchecked(Rank r) const override { return decode_fast(r); }
  void encode_batch_unchecked(std::span<const ZKey> keys, std::span<Rank> out) const override;

  Digit rotate_right(Digit x, unsigned s) const noexcept {
    const unsigned d = dimension();
    s %= d;
    return s == 0 ? x : ((x >> s) | (x << (d - s))) & low_mask(d);
  }
  Digit rotate_left(Digit x, unsigned s) const noexcept {
    const unsigned d = dimension();
    s %= d;
    return s == 0 ? x : ((x << s) | (x >> (d - s))) & low_mask(d);
  }
  // Entry corner of sub-cube w in the standard orientation.
  static Digit sub_entry(Digit w) noexcept {
    return w == 0 ? 0 : detail::gray_code((w - 1) & ~Digit{1});
  }
  // Axis along which sub-cube w is traversed, before reduction mod d.
  static unsigned sub_direction(Digit w) noexcept {
    if (w == 0) return 0;
    return static_cast<unsigned>(std::countr_one((w & 1) ? w : w - 1));
  }
};

}  // namespace sfc

#endif  // SFC_REFERENCE_CODECS_HPP
