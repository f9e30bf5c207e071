#ifndef SFC_CODEC_HPP
#define SFC_CODEC_HPP

#include "sfc/bitops.hpp"

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sfc {

enum class CurveKind { H, Hilbert, Z };

std::string_view to_string(CurveKind kind) noexcept;

/// Accepts "h", "hilbert" and "z" (case-insensitive). Throws std::invalid_argument.
CurveKind parse_curve_kind(std::string_view name);

/// Identifies one codec instance.
struct CurveSpec {
  CurveKind kind = CurveKind::H;
  unsigned d = 2;
  unsigned n = 1;

  friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

/// Bijection between the cells of {0..2^n-1}^d and the ranks {0..2^{nd}-1}.
///
/// Cells enter and leave as ZKeys (packed Z-order digits); the digit-span and
/// coordinate overloads are conveniences on top. Every public entry point
/// validates its input and throws std::domain_error on range violations.
class Codec {
 public:
  virtual ~Codec() = default;

  CurveKind kind() const noexcept { return kind_; }
  unsigned dimension() const noexcept { return d_; }
  unsigned depth() const noexcept { return n_; }
  CurveSpec spec() const noexcept { return {kind_, d_, n_}; }
  unsigned rank_bits() const noexcept { return d_ * n_; }
  /// 2^{nd} - 1, the largest rank.
  Rank max_rank() const noexcept { return low_mask(d_ * n_); }
  /// Whether rank max_rank() is adjacent to rank 0.
  virtual bool cyclic() const noexcept = 0;

  Rank encode_key(ZKey key) const;
  ZKey decode_key(Rank r) const;

  Rank encode(std::span<const Digit> zdigits) const;
  std::vector<Digit> decode(Rank r) const;

  Rank encode_coords(std::span<const Coord> coords) const;
  std::vector<Coord> decode_coords(Rank r) const;

  /// Encodes many keys with one virtual dispatch. Sizes must match.
  void encode_batch(std::span<const ZKey> keys, std::span<Rank> out) const;

 protected:
  Codec(CurveKind kind, unsigned d, unsigned n, unsigned min_d);

  virtual Rank encode_unchecked(ZKey key) const = 0;
  virtual ZKey decode_unchecked(Rank r) const = 0;
  virtual void encode_batch_unchecked(std::span<const ZKey> keys, std::span<Rank> out) const;

 private:
  CurveKind kind_;
  unsigned d_;
  unsigned n_;
};

std::unique_ptr<Codec> make_codec(const CurveSpec& spec);

}  // namespace sfc

#endif  // SFC_CODEC_HPP
