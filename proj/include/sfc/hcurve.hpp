#ifndef SFC_HCURVE_HPP
#define SFC_HCURVE_HPP

#include "sfc/bitops.hpp"
#include "sfc/codec.hpp"

#include <atomic>
#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace sfc {

/// First cell of the H-curve's run inside half-size cube alpha, as the m
/// Z-order digits local to that cube: (~a, ..., ~a, ~a ^ 1 ^ p(a)) where
/// ~a is the d-bit complement of alpha and p the parity. For m = 1 this is
/// the single digit ~a ^ 1 ^ p(a).
///
/// The run always starts at one of the two central cells (~a, ..., ~a) and
/// (~a, ..., ~a ^ 1) and ends at the other; which one is the entry depends
/// only on the position of alpha in the Gray order of the half-size cubes.
std::vector<Digit> entry_corner(unsigned d, unsigned m, Digit alpha);

/// Same as entry_corner, packed into a ZKey of m digits.
ZKey entry_corner_key(unsigned d, unsigned m, Digit alpha);

/// Whether the half-size cubes of a depth-n cube are walked against the
/// orientation of the depth n-1 curve: only for odd d and n = 2.
constexpr bool reversal_applies(unsigned d, unsigned n) noexcept { return (d % 2 == 1) && n == 2; }

/// (-1 - r) mod 2^{dm}: maps a traversal onto its reverse.
Rank reverse_rank(unsigned d, unsigned m, Rank r);

/// Ranks of entry corners, keyed by (depth m, half-size cube digit alpha).
///
/// Lookups are lock-free for d <= 16 (a flat table of atomics, filled on first
/// use). Larger d falls back to a hash map behind a shared mutex. Insertion is
/// idempotent: concurrent writers store the same value.
class CornerCache {
 public:
  static constexpr Rank kEmpty = ~Rank{0};
  static constexpr unsigned kMaxTableDimension = 16;

  CornerCache(unsigned d, unsigned n);

  bool uses_table() const noexcept { return table_ != nullptr; }

  /// Cached rank, or kEmpty.
  Rank find(unsigned m, Digit alpha) const noexcept {
    if (table_) {
      return table_[index(m, alpha)].load(std::memory_order_acquire);
    }
    return find_slow(m, alpha);
  }

  void insert(unsigned m, Digit alpha, Rank rank) const;

  /// Number of populated entries.
  std::size_t populated() const;

 private:
  std::size_t index(unsigned m, Digit alpha) const noexcept {
    return (static_cast<std::size_t>(m) << d_) | alpha;
  }
  Rank find_slow(unsigned m, Digit alpha) const;

  unsigned d_;
  unsigned n_;
  std::unique_ptr<std::atomic<Rank>[]> table_;
  mutable std::shared_mutex mutex_;
  mutable std::vector<std::unordered_map<Digit, Rank>> maps_;  // one per depth
};

/// The H-curve codec.
///
/// Encoding walks the digits from the finest up: the depth-1 rank is the
/// Gray-inverse of the last digit, and each coarser digit alpha prepends
/// gray_inv(alpha) and rotates the inner rank so the entry corner of alpha
/// lands on offset 0 (reversing it at the single reversing level).
/// Decoding runs the same steps top-down.
class HCodec final : public Codec {
 public:
  HCodec(unsigned d, unsigned n);

  bool cyclic() const noexcept override { return true; }

  /// Rank of entry_corner(d, m, alpha) on the depth-m curve, for 1 <= m < n.
  Rank corner_rank(unsigned m, Digit alpha) const;

  /// Fills every corner entry up front (only for table-backed caches).
  void warm_cache() const;

  const CornerCache& cache() const noexcept { return cache_; }

  Rank encode_fast(ZKey key) const noexcept { return encode_at_depth(key, depth()); }

  ZKey decode_fast(Rank r) const noexcept {
    const unsigned d = dimension();
    const Digit digit_mask = low_mask(d);
    ZKey key = 0;
    for (unsigned m = depth() - 1; m >= 1; --m) {
      const unsigned bits = d * m;
      const Digit alpha = detail::gray_code(r >> bits);
      key |= alpha << bits;
      const Rank corner = corner_lookup(m, alpha);
      const Rank offset = r & low_mask(bits);
      r = (reversal_applies(d, m + 1) ? corner - offset : offset + corner) & low_mask(bits);
    }
    return key | (detail::gray_code(r) & digit_mask);
  }

 private:
  Rank encode_unchecked(ZKey key) const override { return encode_fast(key); }
  ZKey decode_unchecked(Rank r) const override { return decode_fast(r); }
  void encode_batch_unchecked(std::span<const ZKey> keys, std::span<Rank> out) const override;

  Rank encode_at_depth(ZKey key, unsigned depth) const noexcept {
    const unsigned d = dimension();
    const Digit digit_mask = low_mask(d);
    Rank r = detail::gray_code_inverse(key & digit_mask);
    for (unsigned m = 1; m < depth; ++m) {
      const unsigned bits = d * m;
      const Digit alpha = (key >> bits) & digit_mask;
      const Rank corner = corner_lookup(m, alpha);
      const Rank offset = reversal_applies(d, m + 1) ? corner - r : r - corner;
      r = (detail::gray_code_inverse(alpha) << bits) | (offset & low_mask(bits));
    }
    return r;
  }

  Rank corner_lookup(unsigned m, Digit alpha) const noexcept {
    const Rank cached = cache_.find(m, alpha);
    return cached != CornerCache::kEmpty ? cached : compute_corner(m, alpha);
  }

  Rank compute_corner(unsigned m, Digit alpha) const noexcept;

  CornerCache cache_;
};

/// L1 distance between the cells at ranks r and r+1 (mod 2^{nd}).
std::uint64_t neighbors_step(const Codec& codec, Rank r);

}  // namespace sfc

#endif  // SFC_HCURVE_HPP
