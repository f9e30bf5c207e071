#ifndef SFC_VERIFY_HPP
#define SFC_VERIFY_HPP

#include "sfc/codec.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sfc {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string detail;
};

/// Largest rank width checked exhaustively; wider codecs are sampled.
inline constexpr unsigned kExhaustiveBits = 20;

/// decode(encode(x)) = x and encode(decode(r)) = r.
CheckResult check_round_trip(const Codec& codec, std::uint64_t samples, std::uint64_t seed);

/// Consecutive ranks decode to L1-adjacent cells, including the wrap step
/// for cyclic codecs.
CheckResult check_adjacency(const Codec& codec, std::uint64_t samples, std::uint64_t seed);

/// H-curve traversal equals the mutation oracle's cycle up to rotation and direction.
CheckResult check_oracle_equivalence(unsigned d, unsigned n);

/// The oracle's last merge walks every half-size cube backwards exactly when
/// reversal_applies(d, n), and forwards otherwise.
CheckResult check_oracle_reversals(unsigned d, unsigned n);

/// First rank of each top-level run decodes to alpha followed by entry_corner(alpha).
CheckResult check_entry_corners(unsigned d, unsigned n);

/// Run structure of the H-curve: depth-1 cells are single runs visited in Gray
/// order; deeper cells form one run, or two when they hold a merge's central pair.
CheckResult check_hcurve_runs(unsigned d, unsigned n);

/// Every depth-k Hilbert cell is one contiguous (non-cyclic) rank run.
CheckResult check_hilbert_runs(unsigned d, unsigned n);

/// All suites the `verify` subcommand runs for one (d, n).
std::vector<CheckResult> run_verification(unsigned d, unsigned n, std::uint64_t samples,
                                          std::uint64_t seed);

}  // namespace sfc

#endif  // SFC_VERIFY_HPP
