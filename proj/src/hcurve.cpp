#include "sfc/hcurve.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace sfc {

namespace {

void check_entry_args(unsigned d, unsigned m, Digit alpha) {
  if (d < 2 || d > 64 || m < 1 || d * m > 64) {
    throw std::domain_error("entry_corner: need d >= 2, m >= 1 and d*m <= 64");
  }
  if ((alpha & ~low_mask(d)) != 0) {
    throw std::domain_error("entry_corner: alpha out of range");
  }
}

}  // namespace

std::vector<Digit> entry_corner(unsigned d, unsigned m, Digit alpha) {
  check_entry_args(d, m, alpha);
  const Digit complement = ~alpha & low_mask(d);
  std::vector<Digit> digits(m, complement);
  digits.back() = complement ^ 1u ^ parity(alpha);
  return digits;
}

ZKey entry_corner_key(unsigned d, unsigned m, Digit alpha) {
  check_entry_args(d, m, alpha);
  const Digit complement = ~alpha & low_mask(d);
  ZKey key = 0;
  for (unsigned j = 0; j + 1 < m; ++j) {
    key = (key << d) | complement;
  }
  const Digit last = complement ^ 1u ^ parity(alpha);
  return m == 1 ? last : (key << d) | last;
}

Rank reverse_rank(unsigned d, unsigned m, Rank r) {
  if (d * m > 64 || d * m == 0) {
    throw std::domain_error("reverse_rank: need 1 <= d*m <= 64");
  }
  const Rank mask = low_mask(d * m);
  if ((r & ~mask) != 0) {
    throw std::domain_error("reverse_rank: rank out of range");
  }
  return ~r & mask;
}

CornerCache::CornerCache(unsigned d, unsigned n) : d_(d), n_(n) {
  if (d <= kMaxTableDimension) {
    const std::size_t size = static_cast<std::size_t>(n) << d;
    table_ = std::make_unique<std::atomic<Rank>[]>(size);
    for (std::size_t i = 0; i < size; ++i) {
      table_[i].store(kEmpty, std::memory_order_relaxed);
    }
  } else {
    maps_.resize(n);
  }
}

Rank CornerCache::find_slow(unsigned m, Digit alpha) const {
  std::shared_lock lock(mutex_);
  const auto& map = maps_[m];
  const auto it = map.find(alpha);
  return it == map.end() ? kEmpty : it->second;
}

void CornerCache::insert(unsigned m, Digit alpha, Rank rank) const {
  if (m >= n_) {
    throw std::out_of_range("CornerCache: depth out of range");
  }
  if (table_) {
    table_[index(m, alpha)].store(rank, std::memory_order_release);
    return;
  }
  std::unique_lock lock(mutex_);
  maps_[m].emplace(alpha, rank);
}

std::size_t CornerCache::populated() const {
  if (table_) {
    std::size_t count = 0;
    const std::size_t size = static_cast<std::size_t>(n_) << d_;
    for (std::size_t i = 0; i < size; ++i) {
      count += table_[i].load(std::memory_order_relaxed) != kEmpty;
    }
    return count;
  }
  std::shared_lock lock(mutex_);
  std::size_t count = 0;
  for (const auto& map : maps_) {
    count += map.size();
  }
  return count;
}

HCodec::HCodec(unsigned d, unsigned n) : Codec(CurveKind::H, d, n, 2), cache_(d, n) {}

Rank HCodec::corner_rank(unsigned m, Digit alpha) const {
  if (m < 1 || m >= depth()) {
    throw std::domain_error("corner_rank: depth must be in 1..n-1");
  }
  if ((alpha & ~low_mask(dimension())) != 0) {
    throw std::domain_error("corner_rank: alpha out of range");
  }
  return corner_lookup(m, alpha);
}

Rank HCodec::compute_corner(unsigned m, Digit alpha) const noexcept {
  const unsigned d = dimension();
  const Digit complement = ~alpha & low_mask(d);
  ZKey key = 0;
  for (unsigned j = 0; j + 1 < m; ++j) {
    key = (key << d) | complement;
  }
  key = m == 1 ? 0 : key << d;
  key |= complement ^ 1u ^ parity(alpha);
  const Rank rank = encode_at_depth(key, m);
  cache_.insert(m, alpha, rank);
  return rank;
}

void HCodec::warm_cache() const {
  if (!cache_.uses_table()) {
    return;
  }
  const Digit count = Digit{1} << dimension();
  for (unsigned m = 1; m < depth(); ++m) {
    for (Digit alpha = 0; alpha < count; ++alpha) {
      corner_lookup(m, alpha);
    }
  }
}

void HCodec::encode_batch_unchecked(std::span<const ZKey> keys, std::span<Rank> out) const {
  for (std::size_t i = 0; i < keys.size(); ++i) {
    out[i] = encode_fast(keys[i]);
  }
}

std::uint64_t neighbors_step(const Codec& codec, Rank r) {
  const auto here = codec.decode_coords(r);
  const auto next = codec.decode_coords((r + 1) & codec.max_rank());
  return l1_distance(here, next);
}

}  // namespace sfc
