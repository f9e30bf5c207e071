#include "sfc/reference_codecs.hpp"

#include <algorithm>

namespace sfc {

void ZCodec::encode_batch_unchecked(std::span<const ZKey> keys, std::span<Rank> out) const {
  std::copy(keys.begin(), keys.end(), out.begin());
}

void HilbertCodec::encode_batch_unchecked(std::span<const ZKey> keys, std::span<Rank> out) const {
  for (std::size_t i = 0; i < keys.size(); ++i) {
    out[i] = encode_fast(keys[i]);
  }
}

}  // namespace sfc
