#ifndef SFC_TRAVERSAL_HPP
#define SFC_TRAVERSAL_HPP

#include "sfc/bitops.hpp"
#include "sfc/codec.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace sfc {

inline constexpr unsigned kMaxTraversalBits = 24;

/// ZKeys of all cells in rank order. Requires rank_bits() <= 24.
std::vector<ZKey> traversal_keys(const Codec& codec);

/// True if b is a rotation of a or of a reversed.
bool same_cyclic_sequence(std::span<const ZKey> a, std::span<const ZKey> b);

/// Number of maximal runs each depth-k cell forms in `order`, indexed by the
/// cell's k-digit prefix. With `cyclic`, a run may wrap from the end to the start.
std::vector<std::uint32_t> depth_run_counts(std::span<const ZKey> order, unsigned d, unsigned n,
                                            unsigned k, bool cyclic);

/// Depth-k prefixes in order of visit, consecutive repeats collapsed (and, when
/// cyclic, a trailing repeat of the first element dropped).
std::vector<ZKey> coarse_sequence(std::span<const ZKey> order, unsigned d, unsigned n, unsigned k,
                                  bool cyclic);

/// Whether the depth-k cell `prefix` holds the central pair of some merge:
/// its digits end in (g, ~g, ..., ~g) with at least one trailing ~g.
bool holds_central_pair(unsigned d, unsigned k, ZKey prefix);

}  // namespace sfc

#endif  // SFC_TRAVERSAL_HPP
