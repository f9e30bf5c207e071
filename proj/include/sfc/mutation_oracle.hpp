#ifndef SFC_MUTATION_ORACLE_HPP
#define SFC_MUTATION_ORACLE_HPP

#include "sfc/bitops.hpp"

#include <cstdint>
#include <span>
#include <vector>

/// Brute-force construction of the H-curve by explicit cycle merging.
///
/// Cells are identified by their ZKey relative to the cube being built, so the
/// 2^d half-size cubes of a merge occupy contiguous key ranges and a sub-cube
/// cycle is lifted into its parent by adding alpha * 2^{d*m} to every key.
/// Everything here is sized for certification (at most 2^20 cells), not speed.
namespace sfc::oracle {

inline constexpr unsigned kMaxOracleBits = 20;

/// An oriented Hamiltonian cycle on the unit cells of a cube of side 2^m.
class CycleGraph {
 public:
  CycleGraph(unsigned d, unsigned m, std::vector<ZKey> order);

  unsigned dimension() const noexcept { return d_; }
  unsigned levels() const noexcept { return m_; }
  std::size_t size() const noexcept { return order_.size(); }

  /// Cells in traversal order from an arbitrary fixed start.
  std::span<const ZKey> order() const noexcept { return order_; }
  ZKey successor(ZKey cell) const { return order_[(position_.at(cell) + 1) % order_.size()]; }
  ZKey predecessor(ZKey cell) const {
    return order_[(position_.at(cell) + order_.size() - 1) % order_.size()];
  }
  std::size_t position(ZKey cell) const { return position_.at(cell); }

  /// True if the cycle has an edge between a and b in either direction.
  bool has_edge(ZKey a, ZKey b) const { return successor(a) == b || successor(b) == a; }

  /// For a merged graph: per half-size cube alpha, whether its path was walked
  /// against the orientation of the block's own cycle. Empty for base cycles.
  const std::vector<bool>& walked_backwards() const noexcept { return backwards_; }
  void set_walked_backwards(std::vector<bool> flags) { backwards_ = std::move(flags); }

 private:
  unsigned d_;
  unsigned m_;
  std::vector<ZKey> order_;
  std::vector<std::size_t> position_;
  std::vector<bool> backwards_;
};

/// The Gray cycle on the 2^d cells of a side-2 cube: cell(t) = gray(d, t).
CycleGraph base_cycle(unsigned d);

/// Cells of the central 4 x 2 x ... x 2 parallelepiped of a cube of side
/// 2^levels that belong to half-size cube alpha: the central cell
/// (alpha, ~alpha, ..., ~alpha) and its axis-0 neighbour
/// (alpha, ~alpha, ..., ~alpha ^ 1), as ZKeys.
struct CentralPair {
  ZKey inner;
  ZKey outer;
};
CentralPair central_pair(unsigned d, unsigned levels, Digit alpha);

/// Joins 2^d cycles, `blocks[alpha]` covering half-size cube alpha, into one
/// cycle: drops the central pair edge of every block and chains the resulting
/// paths in Gray order of alpha with edges between L1-adjacent endpoints.
/// Throws std::logic_error if a structural assertion fails.
CycleGraph merge_step(unsigned d, std::span<const CycleGraph> blocks);

/// Runs base_cycle and n-1 merge steps. Requires 2 <= d <= 6 and d*n <= 20.
/// Returns the ZKeys of all 2^{dn} cells in traversal order.
std::vector<ZKey> build_cycle(unsigned d, unsigned n);

/// build_cycle keeping the final graph (and its last merge's walk directions).
CycleGraph build_cycle_graph(unsigned d, unsigned n);

}  // namespace sfc::oracle

#endif  // SFC_MUTATION_ORACLE_HPP
