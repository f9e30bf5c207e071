#ifndef SFC_CLUSTERING_HPP
#define SFC_CLUSTERING_HPP

#include "sfc/bitops.hpp"
#include "sfc/codec.hpp"
#include "sfc/rng.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace sfc {

/// Axis-aligned cube of side `side` with its lowest corner at `origin`.
struct CubeQuery {
  std::vector<Coord> origin;
  Coord side = 1;

  unsigned dimension() const noexcept { return static_cast<unsigned>(origin.size()); }
};

/// Mean cluster count of one curve over one batch of cubic queries.
struct ClusterStats {
  CurveKind curve = CurveKind::H;
  unsigned d = 2;
  unsigned n = 1;
  Coord side = 1;
  std::uint64_t queries = 0;
  std::uint64_t seed = 0;
  double mean = 0;
  double stddev = 0;
  double stderr_mean = 0;
};

/// Largest number of cells a single query may hold.
inline constexpr std::uint64_t kMaxQueryCells = std::uint64_t{1} << 24;

/// Counts clusters (maximal runs of consecutive ranks) of a cubic query.
///
/// Keeps its key and rank buffers between calls; one instance per thread.
class ClusterCounter {
 public:
  /// Throws std::domain_error if the query leaves the grid or is too large.
  std::uint64_t count(const Codec& codec, const CubeQuery& query, bool wrap);

  /// Ranks of the last counted query, sorted.
  std::span<const Rank> sorted_ranks() const noexcept { return ranks_; }

 private:
  std::vector<ZKey> keys_;
  std::vector<Rank> ranks_;
  std::vector<Rank> scratch_;
  std::vector<ZKey> spread_;
};

/// One-shot form of ClusterCounter::count.
std::uint64_t count_clusters(const Codec& codec, const CubeQuery& query, bool wrap = false);

/// ZKeys of every cell of the query, axis 0 varying fastest.
std::vector<ZKey> query_keys(const CubeQuery& query, unsigned n);

/// Uniform origin in {0..2^n - side}^d, one independent draw per axis.
CubeQuery sample_query(unsigned d, unsigned n, Coord side, Rng& rng);

/// Queries per RNG stream. Stream b of side l is seeded with
/// stream_seed(seed, l, b) and yields queries b*kQueriesPerStream onwards, so
/// the query sequence does not depend on how streams are spread over threads.
inline constexpr std::uint64_t kQueriesPerStream = 256;

/// The Q queries of side `side` for `seed`, in order.
std::vector<CubeQuery> query_batch(unsigned d, unsigned n, Coord side, std::uint64_t queries,
                                   std::uint64_t seed);

struct SimulationConfig {
  std::vector<CurveSpec> curves;  // all with the same d and n
  Coord side_min = 2;
  Coord side_max = 15;
  std::uint64_t queries = 10000;
  std::uint64_t seed = 1;
  bool wrap = false;
  unsigned threads = 1;  // 0: hardware concurrency
};

/// Evaluates every curve on the same queries for each side length.
/// Rows come out grouped by curve (in config order), then by side.
/// Output is identical for any thread count.
std::vector<ClusterStats> simulate(const SimulationConfig& config);

/// Same as simulate but with caller-supplied codecs (all sharing d and n).
std::vector<ClusterStats> simulate(std::span<const Codec* const> codecs, const SimulationConfig& config);

/// curve,d,n,l,queries,seed,mean_clusters,stddev,stderr
void write_stats_csv(std::ostream& out, std::span<const ClusterStats> rows);
std::vector<ClusterStats> read_stats_csv(std::istream& in);

/// Side-by-side table of means rounded to two decimals, one column per curve.
std::string render_stats_table(std::span<const ClusterStats> rows);

struct Connectivity {
  bool connected = false;
  bool simply_connected = false;
};

/// Connectivity of a finite cell set under face adjacency (L1 distance 1).
/// Simple connectivity is decided for d = 2 only (the empty cells of the
/// bounding box padded by one cell must form a single 8-connected component);
/// for other d it is reported equal to `connected`.
Connectivity connectivity_check(unsigned d, std::span<const std::vector<Coord>> cells);

}  // namespace sfc

#endif  // SFC_CLUSTERING_HPP
