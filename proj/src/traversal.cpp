#include "sfc/traversal.hpp"

#include <stdexcept>

namespace sfc {

std::vector<ZKey> traversal_keys(const Codec& codec) {
  if (codec.rank_bits() > kMaxTraversalBits) {
    throw std::domain_error("traversal_keys: more than 2^24 cells");
  }
  const std::size_t cells = std::size_t{1} << codec.rank_bits();
  std::vector<ZKey> keys(cells);
  for (std::size_t r = 0; r < cells; ++r) {
    keys[r] = codec.decode_key(r);
  }
  return keys;
}

bool same_cyclic_sequence(std::span<const ZKey> a, std::span<const ZKey> b) {
  if (a.size() != b.size()) return false;
  const std::size_t size = a.size();
  if (size == 0) return true;
  std::size_t start = 0;
  while (start < size && b[start] != a[0]) ++start;
  if (start == size) return false;
  bool forward = true;
  bool backward = true;
  for (std::size_t i = 0; i < size && (forward || backward); ++i) {
    forward = forward && b[(start + i) % size] == a[i];
    backward = backward && b[(start + size - i) % size] == a[i];
  }
  return forward || backward;
}

namespace {

void check_depth(unsigned d, unsigned n, unsigned k) {
  if (k < 1 || k > n || d * n > kMaxTraversalBits) {
    throw std::domain_error("depth analysis: need 1 <= k <= n and n*d <= 24");
  }
}

}  // namespace

std::vector<std::uint32_t> depth_run_counts(std::span<const ZKey> order, unsigned d, unsigned n,
                                            unsigned k, bool cyclic) {
  check_depth(d, n, k);
  const unsigned shift = d * (n - k);
  std::vector<std::uint32_t> runs(std::size_t{1} << (d * k), 0);
  const std::size_t size = order.size();
  for (std::size_t i = 0; i < size; ++i) {
    const ZKey cell = order[i] >> shift;
    bool starts_run = i == 0 ? true : (order[i - 1] >> shift) != cell;
    if (i == 0 && cyclic && size > 1) {
      starts_run = (order[size - 1] >> shift) != cell;
    }
    runs[cell] += starts_run;
  }
  // A cyclic sequence made of a single cell never starts a run.
  if (cyclic && size > 0 && runs[order[0] >> shift] == 0) {
    runs[order[0] >> shift] = 1;
  }
  return runs;
}

std::vector<ZKey> coarse_sequence(std::span<const ZKey> order, unsigned d, unsigned n, unsigned k,
                                  bool cyclic) {
  check_depth(d, n, k);
  const unsigned shift = d * (n - k);
  std::vector<ZKey> out;
  for (ZKey key : order) {
    const ZKey cell = key >> shift;
    if (out.empty() || out.back() != cell) out.push_back(cell);
  }
  if (cyclic && out.size() > 1 && out.back() == out.front()) {
    out.pop_back();
  }
  return out;
}

bool holds_central_pair(unsigned d, unsigned k, ZKey prefix) {
  const Digit mask = low_mask(d);
  if (k < 2) return false;
  const Digit last = prefix & mask;
  for (unsigned j = 1; j < k; ++j) {
    const Digit digit = (prefix >> (d * j)) & mask;
    if (digit == (~last & mask)) {
      return true;
    }
    if (digit != last) {
      return false;
    }
  }
  return false;
}

}  // namespace sfc
