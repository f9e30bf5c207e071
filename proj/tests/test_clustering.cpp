#include "sfc/clustering.hpp"
#include "sfc/hcurve.hpp"
#include "sfc/reference_codecs.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

using namespace sfc;

namespace {

// A cell starts a cluster unless its rank predecessor is also in the query.
std::uint64_t predecessor_count(const Codec& codec, const CubeQuery& q) {
  auto inside = [&](const std::vector<Coord>& c) {
    for (unsigned i = 0; i < c.size(); ++i) {
      if (c[i] < q.origin[i] || c[i] >= q.origin[i] + q.side) return false;
    }
    return true;
  };
  std::uint64_t starts = 0;
  for (ZKey key : query_keys(q, codec.depth())) {
    const Rank r = codec.encode_key(key);
    if (r == 0 || !inside(codec.decode_coords(r - 1))) ++starts;
  }
  return starts;
}

std::vector<std::unique_ptr<Codec>> all_codecs(unsigned d, unsigned n) {
  std::vector<std::unique_ptr<Codec>> codecs;
  for (CurveKind k : {CurveKind::H, CurveKind::Hilbert, CurveKind::Z}) codecs.push_back(make_codec({k, d, n}));
  return codecs;
}

// Records the first key of every encoded query.
class RecordingCodec final : public Codec {
 public:
  RecordingCodec(unsigned d, unsigned n) : Codec(CurveKind::Z, d, n, 1) {}
  bool cyclic() const noexcept override { return false; }
  mutable std::vector<std::vector<ZKey>> seen;

 private:
  Rank encode_unchecked(ZKey key) const override { return key; }
  ZKey decode_unchecked(Rank r) const override { return r; }
  void encode_batch_unchecked(std::span<const ZKey> keys, std::span<Rank> out) const override {
    seen.emplace_back(keys.begin(), keys.end());
    std::copy(keys.begin(), keys.end(), out.begin());
  }
};

}  // namespace

TEST(CountClusters, WholeGridAndSingleCell) {
  for (const auto& codec : all_codecs(2, 3)) {
    EXPECT_EQ(count_clusters(*codec, {{0, 0}, 8}), 1u);
    EXPECT_EQ(count_clusters(*codec, {{5, 2}, 1}), 1u);
  }
  const ZCodec z(3, 2);
  EXPECT_EQ(count_clusters(z, {{0, 0, 0}, 4}), 1u);
}

TEST(CountClusters, ZExample) {
  // Z-order over a 2x2 query straddling the middle of a 4x4 grid: cells 3, 6, 9, 12.
  const ZCodec z(2, 2);
  EXPECT_EQ(count_clusters(z, {{1, 1}, 2}), 4u);
  EXPECT_EQ(count_clusters(z, {{0, 0}, 2}), 1u);
}

TEST(CountClusters, MatchesPredecessorMethod) {
  for (auto [d, n] : {std::pair{2u, 5u}, {3u, 3u}, {4u, 2u}}) {
    const auto codecs = all_codecs(d, n);
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
      const Coord side = 1 + rng.below((Coord{1} << n) - 1);
      const auto q = sample_query(d, n, side, rng);
      for (const auto& codec : codecs) {
        ASSERT_EQ(count_clusters(*codec, q), predecessor_count(*codec, q)) << to_string(codec->kind());
      }
    }
  }
}

TEST(CountClusters, Bounds) {
  const auto codecs = all_codecs(3, 4);
  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    const Coord side = 1 + rng.below(16);
    const auto q = sample_query(3, 4, side, rng);
    for (const auto& codec : codecs) {
      const auto plain = count_clusters(*codec, q, false);
      const auto wrapped = count_clusters(*codec, q, true);
      EXPECT_GE(plain, 1u);
      EXPECT_LE(plain, side * side * side);
      EXPECT_LE(wrapped, plain);
      EXPECT_LE(plain, wrapped + 1);
    }
  }
}

TEST(CountClusters, WrapJoinsFirstAndLastRun) {
  const HCodec h(2, 3);
  const auto first = h.decode_coords(0);
  const auto last = h.decode_coords(h.max_rank());
  // Smallest cube holding both ends of the cycle but not the whole grid.
  const Coord lo0 = std::min(first[0], last[0]);
  const Coord lo1 = std::min(first[1], last[1]);
  const CubeQuery q{{std::min<Coord>(lo0, 6), std::min<Coord>(lo1, 6)}, 2};
  const auto plain = count_clusters(h, q, false);
  EXPECT_EQ(count_clusters(h, q, true), plain - 1);
  EXPECT_GT(plain, 1u);
}

TEST(CountClusters, Errors) {
  const ZCodec z(2, 3);
  EXPECT_THROW(count_clusters(z, {{7, 0}, 2}), std::domain_error);
  EXPECT_THROW(count_clusters(z, {{0, 0}, 9}), std::domain_error);
  EXPECT_THROW(count_clusters(z, {{0, 0}, 0}), std::domain_error);
  EXPECT_THROW(count_clusters(z, {{0, 0, 0}, 1}), std::domain_error);
  const ZCodec big(2, 14);
  EXPECT_THROW(count_clusters(big, {{0, 0}, 4097}), std::domain_error);
}

TEST(ClusterCounter, SortedRanks) {
  const HilbertCodec h(2, 4);
  ClusterCounter counter;
  counter.count(h, {{3, 5}, 7}, false);
  const auto ranks = counter.sorted_ranks();
  EXPECT_EQ(ranks.size(), 49u);
  EXPECT_TRUE(std::is_sorted(ranks.begin(), ranks.end()));
  EXPECT_EQ(std::set<Rank>(ranks.begin(), ranks.end()).size(), 49u);
}

TEST(QueryKeys, AxisZeroFastest) {
  const auto keys = query_keys({{1, 2}, 2}, 2);
  const std::vector<std::vector<Coord>> expected{{1, 2}, {2, 2}, {1, 3}, {2, 3}};
  ASSERT_EQ(keys.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(key_to_coords(2, 2, keys[i]), expected[i]);
}

TEST(SampleQuery, FullSideAndErrors) {
  Rng rng(1);
  const auto q = sample_query(3, 4, 16, rng);
  EXPECT_EQ(q.origin, (std::vector<Coord>{0, 0, 0}));
  EXPECT_THROW(sample_query(2, 4, 17, rng), std::domain_error);
  EXPECT_THROW(sample_query(2, 4, 0, rng), std::domain_error);
}

TEST(SampleQuery, Deterministic) {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(sample_query(3, 5, 4, a).origin, sample_query(3, 5, 4, b).origin);
}

TEST(SampleQuery, UniformOrigins) {
  // 6 placements per axis; chi-square with 5 degrees of freedom, p = 0.001 cutoff.
  Rng rng(2024);
  std::vector<double> counts(6, 0);
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    const auto q = sample_query(2, 3, 3, rng);
    ++counts[q.origin[0]];
    ASSERT_LE(q.origin[1], 5u);
  }
  double chi2 = 0;
  const double expected = draws / 6.0;
  for (double c : counts) chi2 += (c - expected) * (c - expected) / expected;
  EXPECT_LT(chi2, 20.52);
}

TEST(QueryBatch, StreamsArePrefixStable) {
  const auto small = query_batch(2, 6, 5, 300, 9);
  const auto large = query_batch(2, 6, 5, 600, 9);
  ASSERT_EQ(small.size(), 300u);
  for (std::size_t i = 0; i < small.size(); ++i) EXPECT_EQ(small[i].origin, large[i].origin);
  const auto other = query_batch(2, 6, 5, 300, 10);
  EXPECT_NE(small[0].origin, other[0].origin);
}

TEST(Simulate, PairedQueries) {
  const RecordingCodec a(2, 6);
  const RecordingCodec b(2, 6);
  const std::vector<const Codec*> codecs{&a, &b};
  SimulationConfig config;
  config.side_min = 3;
  config.side_max = 4;
  config.queries = 50;
  simulate(codecs, config);
  EXPECT_EQ(a.seen.size(), 100u);
  EXPECT_EQ(a.seen, b.seen);
}

TEST(Simulate, ThreadCountDoesNotChangeOutput) {
  SimulationConfig config;
  config.curves = {{CurveKind::H, 2, 6}, {CurveKind::Hilbert, 2, 6}, {CurveKind::Z, 2, 6}};
  config.side_min = 2;
  config.side_max = 6;
  config.queries = 700;
  config.seed = 3;
  std::ostringstream one;
  std::ostringstream many;
  write_stats_csv(one, simulate(config));
  config.threads = 3;
  write_stats_csv(many, simulate(config));
  EXPECT_EQ(one.str(), many.str());
}

TEST(Simulate, RowsAndStats) {
  SimulationConfig config;
  config.curves = {{CurveKind::Z, 2, 4}, {CurveKind::H, 2, 4}};
  config.side_min = 2;
  config.side_max = 3;
  config.queries = 1;
  const auto rows = simulate(config);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].curve, CurveKind::Z);
  EXPECT_EQ(rows[1].side, 3u);
  EXPECT_EQ(rows[2].curve, CurveKind::H);
  for (const auto& r : rows) {
    EXPECT_EQ(r.stddev, 0.0);
    EXPECT_GE(r.mean, 1.0);
  }
  SimulationConfig mixed = config;
  mixed.curves = {{CurveKind::Z, 2, 4}, {CurveKind::H, 2, 5}};
  EXPECT_THROW(simulate(mixed), std::domain_error);
  config.queries = 0;
  EXPECT_THROW(simulate(config), std::domain_error);
}

TEST(StatsCsv, RoundTrip) {
  SimulationConfig config;
  config.curves = {{CurveKind::H, 3, 4}};
  config.side_min = 2;
  config.side_max = 5;
  config.queries = 40;
  const auto rows = simulate(config);
  std::stringstream csv;
  write_stats_csv(csv, rows);
  EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')), "curve,d,n,l,queries,seed,mean_clusters,stddev,stderr");
  const auto back = read_stats_csv(csv);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(back[i].mean, rows[i].mean);
    EXPECT_EQ(back[i].stderr_mean, rows[i].stderr_mean);
    EXPECT_EQ(back[i].side, rows[i].side);
  }
  std::stringstream bad("curve,d\n");
  EXPECT_THROW(read_stats_csv(bad), std::runtime_error);
}

TEST(StatsTable, TwoDecimals) {
  ClusterStats row;
  row.curve = CurveKind::Hilbert;
  row.side = 4;
  row.queries = 10;
  row.mean = 4.0149;
  const std::vector<ClusterStats> rows{row};
  const auto table = render_stats_table(rows);
  EXPECT_NE(table.find("4.01"), std::string::npos);
  EXPECT_EQ(table.find("4.0149"), std::string::npos);
}

TEST(Connectivity, TwoPointCriterion) {
  const std::vector<std::vector<Coord>> adjacent{{3, 4}, {3, 5}};
  EXPECT_TRUE(connectivity_check(2, adjacent).connected);
  const std::vector<std::vector<Coord>> diagonal{{3, 4}, {4, 5}};
  EXPECT_FALSE(connectivity_check(2, diagonal).connected);
}

TEST(Connectivity, Holes) {
  std::vector<std::vector<Coord>> ring;
  for (Coord x = 0; x < 3; ++x) {
    for (Coord y = 0; y < 3; ++y) {
      if (x != 1 || y != 1) ring.push_back({x, y});
    }
  }
  const auto c = connectivity_check(2, ring);
  EXPECT_TRUE(c.connected);
  EXPECT_FALSE(c.simply_connected);
  const std::vector<std::vector<Coord>> ell{{0, 0}, {1, 0}, {1, 1}};
  EXPECT_TRUE(connectivity_check(2, ell).simply_connected);
}

TEST(Connectivity, CubicQueries) {
  for (unsigned d = 2; d <= 3; ++d) {
    CubeQuery q{std::vector<Coord>(d, 1), 3};
    std::vector<std::vector<Coord>> cells;
    for (ZKey key : query_keys(q, 3)) cells.push_back(key_to_coords(d, 3, key));
    const auto c = connectivity_check(d, cells);
    EXPECT_TRUE(c.connected);
    EXPECT_TRUE(c.simply_connected);
  }
}

TEST(Simulate, PlanarHilbertAndHTrackSide) {
  SimulationConfig config;
  config.curves = {{CurveKind::H, 2, 10}, {CurveKind::Hilbert, 2, 10}};
  const auto rows = simulate(config);
  for (const auto& r : rows) {
    EXPECT_LE(std::abs(r.mean - static_cast<double>(r.side)), 3 * r.stderr_mean)
        << to_string(r.curve) << " l=" << r.side;
  }
}
