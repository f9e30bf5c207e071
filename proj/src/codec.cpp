#include "sfc/codec.hpp"

#include "sfc/hcurve.hpp"
#include "sfc/reference_codecs.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace sfc {

std::string_view to_string(CurveKind kind) noexcept {
  switch (kind) {
    case CurveKind::H:
      return "h";
    case CurveKind::Hilbert:
      return "hilbert";
    case CurveKind::Z:
      return "z";
  }
  return "?";
}

CurveKind parse_curve_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "h") return CurveKind::H;
  if (lower == "hilbert") return CurveKind::Hilbert;
  if (lower == "z") return CurveKind::Z;
  throw std::invalid_argument("unknown curve '" + std::string(name) + "' (expected h, hilbert or z)");
}

Codec::Codec(CurveKind kind, unsigned d, unsigned n, unsigned min_d) : kind_(kind), d_(d), n_(n) {
  if (d < min_d || n < 1 || d * n > 64) {
    throw std::domain_error(std::string(to_string(kind)) + " codec: need d >= " +
                            std::to_string(min_d) + ", n >= 1 and n*d <= 64");
  }
}

Rank Codec::encode_key(ZKey key) const {
  if ((key & ~max_rank()) != 0) {
    throw std::domain_error("encode: cell key out of range");
  }
  return encode_unchecked(key);
}

ZKey Codec::decode_key(Rank r) const {
  if ((r & ~max_rank()) != 0) {
    throw std::domain_error("decode: rank " + std::to_string(r) + " out of range");
  }
  return decode_unchecked(r);
}

Rank Codec::encode(std::span<const Digit> zdigits) const {
  if (zdigits.size() != n_) {
    throw std::domain_error("encode: expected " + std::to_string(n_) + " digits");
  }
  return encode_unchecked(pack_digits(d_, zdigits));
}

std::vector<Digit> Codec::decode(Rank r) const { return unpack_digits(d_, n_, decode_key(r)); }

Rank Codec::encode_coords(std::span<const Coord> coords) const {
  return encode_unchecked(coords_to_key(d_, n_, coords));
}

std::vector<Coord> Codec::decode_coords(Rank r) const { return key_to_coords(d_, n_, decode_key(r)); }

void Codec::encode_batch(std::span<const ZKey> keys, std::span<Rank> out) const {
  if (keys.size() != out.size()) {
    throw std::domain_error("encode_batch: size mismatch");
  }
  const Rank mask = max_rank();
  if (std::any_of(keys.begin(), keys.end(), [mask](ZKey k) { return (k & ~mask) != 0; })) {
    throw std::domain_error("encode_batch: cell key out of range");
  }
  encode_batch_unchecked(keys, out);
}

void Codec::encode_batch_unchecked(std::span<const ZKey> keys, std::span<Rank> out) const {
  for (std::size_t i = 0; i < keys.size(); ++i) {
    out[i] = encode_unchecked(keys[i]);
  }
}

std::unique_ptr<Codec> make_codec(const CurveSpec& spec) {
  switch (spec.kind) {
    case CurveKind::H:
      return std::make_unique<HCodec>(spec.d, spec.n);
    case CurveKind::Hilbert:
      return std::make_unique<HilbertCodec>(spec.d, spec.n);
    case CurveKind::Z:
      return std::make_unique<ZCodec>(spec.d, spec.n);
  }
  throw std::invalid_argument("make_codec: unknown curve kind");
}

}  // namespace sfc
