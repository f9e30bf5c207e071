#include "sfc/clustering.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <iomanip>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace sfc {

namespace {

void check_query(unsigned d, unsigned n, const CubeQuery& query) {
  if (query.dimension() != d) {
    throw std::domain_error("query dimension does not match the codec");
  }
  if (query.side < 1) {
    throw std::domain_error("query side must be at least 1");
  }
  const Coord max_coord = low_mask(n);
  if (query.side - 1 > max_coord) {
    throw std::domain_error("query side exceeds the grid");
  }
  for (Coord o : query.origin) {
    if (o > max_coord - (query.side - 1)) {
      throw std::domain_error("query leaves the grid");
    }
  }
  std::uint64_t cells = 1;
  for (unsigned i = 0; i < d; ++i) {
    if (cells > kMaxQueryCells / query.side) {
      throw std::domain_error("query has more than 2^24 cells");
    }
    cells *= query.side;
  }
}

// Bits of c moved to positions b*d + axis.
ZKey spread_bits(Coord c, unsigned d, unsigned n, unsigned axis) {
  ZKey key = 0;
  for (unsigned b = 0; b < n; ++b) {
    key |= ((c >> b) & 1u) << (b * d + axis);
  }
  return key;
}

void fill_keys(const CubeQuery& query, unsigned n, std::vector<ZKey>& spread, std::vector<ZKey>& keys) {
  const unsigned d = query.dimension();
  const Coord side = query.side;
  spread.resize(static_cast<std::size_t>(d) * side);
  for (unsigned i = 0; i < d; ++i) {
    for (Coord t = 0; t < side; ++t) {
      spread[i * side + t] = spread_bits(query.origin[i] + t, d, n, i);
    }
  }
  std::size_t cells = 1;
  for (unsigned i = 0; i < d; ++i) cells *= side;
  keys.resize(cells);

  // Odometer over axes 1..d-1; axis 0 is the inner loop.
  std::vector<Coord> index(d, 0);
  std::vector<ZKey> partial(d + 1, 0);
  for (unsigned i = d; i-- > 1;) partial[i] = partial[i + 1] | spread[i * side];
  std::size_t out = 0;
  while (true) {
    const ZKey outer = partial[1];
    for (Coord t = 0; t < side; ++t) keys[out++] = outer | spread[t];
    unsigned axis = 1;
    while (axis < d && ++index[axis] == side) {
      index[axis] = 0;
      ++axis;
    }
    if (axis >= d) break;
    for (unsigned i = axis + 1; i-- > 1;) {
      partial[i] = partial[i + 1] | spread[i * side + index[i]];
    }
  }
}

// LSD radix sort on the low `bits` bits.
void radix_sort(std::vector<Rank>& data, std::vector<Rank>& scratch, unsigned bits) {
  if (data.size() < 256) {
    std::sort(data.begin(), data.end());
    return;
  }
  constexpr unsigned kRadixBits = 11;
  constexpr std::size_t kBuckets = std::size_t{1} << kRadixBits;
  scratch.resize(data.size());
  std::array<std::size_t, kBuckets> counts{};
  for (unsigned shift = 0; shift < bits; shift += kRadixBits) {
    counts.fill(0);
    for (Rank r : data) ++counts[(r >> shift) & (kBuckets - 1)];
    std::size_t sum = 0;
    for (auto& c : counts) {
      const std::size_t here = c;
      c = sum;
      sum += here;
    }
    for (Rank r : data) scratch[counts[(r >> shift) & (kBuckets - 1)]++] = r;
    data.swap(scratch);
  }
}

double sample_stddev(std::span<const std::uint64_t> counts, double mean) {
  if (counts.size() < 2) return 0.0;
  double sum = 0;
  for (std::uint64_t c : counts) {
    const double diff = static_cast<double>(c) - mean;
    sum += diff * diff;
  }
  return std::sqrt(sum / static_cast<double>(counts.size() - 1));
}

}  // namespace

std::uint64_t ClusterCounter::count(const Codec& codec, const CubeQuery& query, bool wrap) {
  check_query(codec.dimension(), codec.depth(), query);
  fill_keys(query, codec.depth(), spread_, keys_);
  ranks_.resize(keys_.size());
  codec.encode_batch(keys_, ranks_);
  radix_sort(ranks_, scratch_, codec.rank_bits());

  std::uint64_t clusters = 1;
  for (std::size_t i = 1; i < ranks_.size(); ++i) {
    clusters += ranks_[i] != ranks_[i - 1] + 1;
  }
  if (wrap && clusters > 1 && ranks_.front() == 0 && ranks_.back() == codec.max_rank()) {
    --clusters;
  }
  return clusters;
}

std::uint64_t count_clusters(const Codec& codec, const CubeQuery& query, bool wrap) {
  ClusterCounter counter;
  return counter.count(codec, query, wrap);
}

std::vector<ZKey> query_keys(const CubeQuery& query, unsigned n) {
  check_query(query.dimension(), n, query);
  std::vector<ZKey> spread;
  std::vector<ZKey> keys;
  fill_keys(query, n, spread, keys);
  return keys;
}

CubeQuery sample_query(unsigned d, unsigned n, Coord side, Rng& rng) {
  if (d == 0 || n == 0 || n > 63) {
    throw std::domain_error("sample_query: need d >= 1 and 1 <= n <= 63");
  }
  if (side < 1 || side > (Coord{1} << n)) {
    throw std::domain_error("sample_query: side must be in 1..2^n");
  }
  CubeQuery query;
  query.side = side;
  query.origin.resize(d);
  const std::uint64_t positions = (Coord{1} << n) - side + 1;
  for (unsigned i = 0; i < d; ++i) {
    query.origin[i] = rng.below(positions);
  }
  return query;
}

std::vector<CubeQuery> query_batch(unsigned d, unsigned n, Coord side, std::uint64_t queries,
                                   std::uint64_t seed) {
  std::vector<CubeQuery> batch;
  batch.reserve(queries);
  for (std::uint64_t stream = 0; stream * kQueriesPerStream < queries; ++stream) {
    Rng rng(stream_seed(seed, side, stream));
    const std::uint64_t end = std::min(queries, (stream + 1) * kQueriesPerStream);
    for (std::uint64_t q = stream * kQueriesPerStream; q < end; ++q) {
      batch.push_back(sample_query(d, n, side, rng));
    }
  }
  return batch;
}

std::vector<ClusterStats> simulate(std::span<const Codec* const> codecs, const SimulationConfig& config) {
  if (codecs.empty()) return {};
  if (config.queries < 1) {
    throw std::domain_error("simulate: need at least one query");
  }
  if (config.side_min < 1 || config.side_min > config.side_max) {
    throw std::domain_error("simulate: invalid side range");
  }
  const unsigned d = codecs.front()->dimension();
  const unsigned n = codecs.front()->depth();
  for (const Codec* codec : codecs) {
    if (codec->dimension() != d || codec->depth() != n) {
      throw std::domain_error("simulate: all curves must share d and n");
    }
  }
  unsigned threads = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.threads;

  const std::size_t sides = config.side_max - config.side_min + 1;
  // counts[curve][side][query]
  std::vector<std::vector<std::vector<std::uint64_t>>> counts(
      codecs.size(), std::vector<std::vector<std::uint64_t>>(sides));

  for (std::size_t s = 0; s < sides; ++s) {
    const Coord side = config.side_min + s;
    const auto batch = query_batch(d, n, side, config.queries, config.seed);
    for (auto& per_curve : counts) per_curve[s].assign(batch.size(), 0);

    auto work = [&](std::size_t begin, std::size_t end) {
      ClusterCounter counter;
      for (std::size_t q = begin; q < end; ++q) {
        for (std::size_t c = 0; c < codecs.size(); ++c) {
          counts[c][s][q] = counter.count(*codecs[c], batch[q], config.wrap);
        }
      }
    };
    const std::size_t workers = std::min<std::size_t>(threads, batch.size());
    if (workers <= 1) {
      work(0, batch.size());
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (batch.size() + workers - 1) / workers;
      for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(batch.size(), begin + chunk);
        if (begin < end) pool.emplace_back(work, begin, end);
      }
      for (auto& t : pool) t.join();
    }
  }

  std::vector<ClusterStats> rows;
  for (std::size_t c = 0; c < codecs.size(); ++c) {
    for (std::size_t s = 0; s < sides; ++s) {
      const auto& per_query = counts[c][s];
      std::uint64_t total = 0;
      for (std::uint64_t v : per_query) total += v;
      ClusterStats row;
      row.curve = codecs[c]->kind();
      row.d = d;
      row.n = n;
      row.side = config.side_min + s;
      row.queries = per_query.size();
      row.seed = config.seed;
      row.mean = static_cast<double>(total) / static_cast<double>(per_query.size());
      row.stddev = sample_stddev(per_query, row.mean);
      row.stderr_mean = row.stddev / std::sqrt(static_cast<double>(per_query.size()));
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<ClusterStats> simulate(const SimulationConfig& config) {
  std::vector<std::unique_ptr<Codec>> owned;
  std::vector<const Codec*> codecs;
  for (const auto& spec : config.curves) {
    owned.push_back(make_codec(spec));
    codecs.push_back(owned.back().get());
  }
  return simulate(codecs, config);
}

void write_stats_csv(std::ostream& out, std::span<const ClusterStats> rows) {
  out << "curve,d,n,l,queries,seed,mean_clusters,stddev,stderr\n";
  const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
  for (const auto& row : rows) {
    out << to_string(row.curve) << ',' << row.d << ',' << row.n << ',' << row.side << ','
        << row.queries << ',' << row.seed << ',' << row.mean << ',' << row.stddev << ','
        << row.stderr_mean << '\n';
  }
  out.precision(old_precision);
}

std::vector<ClusterStats> read_stats_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "curve,d,n,l,queries,seed,mean_clusters,stddev,stderr") {
    throw std::runtime_error("read_stats_csv: missing or unexpected header");
  }
  std::vector<ClusterStats> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 9) {
      throw std::runtime_error("read_stats_csv: expected 9 fields in '" + line + "'");
    }
    ClusterStats row;
    row.curve = parse_curve_kind(fields[0]);
    row.d = static_cast<unsigned>(std::stoul(fields[1]));
    row.n = static_cast<unsigned>(std::stoul(fields[2]));
    row.side = std::stoull(fields[3]);
    row.queries = std::stoull(fields[4]);
    row.seed = std::stoull(fields[5]);
    row.mean = std::stod(fields[6]);
    row.stddev = std::stod(fields[7]);
    row.stderr_mean = std::stod(fields[8]);
    rows.push_back(row);
  }
  return rows;
}

std::string render_stats_table(std::span<const ClusterStats> rows) {
  std::vector<CurveKind> curves;
  std::map<Coord, std::map<CurveKind, double>> table;
  for (const auto& row : rows) {
    if (std::find(curves.begin(), curves.end(), row.curve) == curves.end()) curves.push_back(row.curve);
    table[row.side][row.curve] = row.mean;
  }
  std::ostringstream os;
  if (!rows.empty()) {
    os << "d=" << rows.front().d << ", n=" << rows.front().n << ", queries=" << rows.front().queries << '\n';
  }
  os << std::setw(4) << "l";
  for (CurveKind c : curves) os << std::setw(10) << to_string(c);
  os << '\n' << std::fixed << std::setprecision(2);
  for (const auto& [side, means] : table) {
    os << std::setw(4) << side;
    for (CurveKind c : curves) {
      const auto it = means.find(c);
      if (it == means.end()) {
        os << std::setw(10) << "-";
      } else {
        os << std::setw(10) << it->second;
      }
    }
    os << '\n';
  }
  return os.str();
}

Connectivity connectivity_check(unsigned d, std::span<const std::vector<Coord>> cells) {
  Connectivity result;
  if (cells.empty()) return result;
  for (const auto& c : cells) {
    if (c.size() != d) throw std::domain_error("connectivity_check: dimension mismatch");
  }
  const std::set<std::vector<Coord>> present(cells.begin(), cells.end());

  std::set<std::vector<Coord>> seen{*present.begin()};
  std::deque<std::vector<Coord>> frontier{*present.begin()};
  while (!frontier.empty()) {
    auto cell = frontier.front();
    frontier.pop_front();
    for (unsigned i = 0; i < d; ++i) {
      for (int delta : {-1, 1}) {
        auto next = cell;
        if (delta < 0 && next[i] == 0) continue;
        next[i] += static_cast<Coord>(delta);
        if (present.count(next) && seen.insert(next).second) frontier.push_back(next);
      }
    }
  }
  result.connected = seen.size() == present.size();
  if (d != 2 || !result.connected) {
    result.simply_connected = result.connected;
    return result;
  }

  // Complement within the bounding box padded by one cell, in shifted coordinates.
  std::int64_t lo[2] = {std::numeric_limits<std::int64_t>::max(), std::numeric_limits<std::int64_t>::max()};
  std::int64_t hi[2] = {std::numeric_limits<std::int64_t>::min(), std::numeric_limits<std::int64_t>::min()};
  for (const auto& c : present) {
    for (int i = 0; i < 2; ++i) {
      lo[i] = std::min(lo[i], static_cast<std::int64_t>(c[i]) - 1);
      hi[i] = std::max(hi[i], static_cast<std::int64_t>(c[i]) + 1);
    }
  }
  const std::int64_t width = hi[0] - lo[0] + 1;
  const std::int64_t height = hi[1] - lo[1] + 1;
  std::vector<char> filled(static_cast<std::size_t>(width * height), 0);
  for (const auto& c : present) {
    filled[(static_cast<std::int64_t>(c[1]) - lo[1]) * width + (static_cast<std::int64_t>(c[0]) - lo[0])] = 1;
  }
  // Empty cells touching at a corner share a boundary point that is not interior
  // to the query, so holes are 8-connected components of empty cells.
  std::vector<char> reached(filled.size(), 0);
  std::deque<std::int64_t> queue{0};
  reached[0] = 1;
  while (!queue.empty()) {
    const std::int64_t at = queue.front();
    queue.pop_front();
    const std::int64_t x = at % width;
    const std::int64_t y = at / width;
    for (std::int64_t dy = -1; dy <= 1; ++dy) {
      for (std::int64_t dx = -1; dx <= 1; ++dx) {
        const std::int64_t nx = x + dx;
        const std::int64_t ny = y + dy;
        if (nx < 0 || ny < 0 || nx >= width || ny >= height) continue;
        const std::int64_t idx = ny * width + nx;
        if (!filled[idx] && !reached[idx]) {
          reached[idx] = 1;
          queue.push_back(idx);
        }
      }
    }
  }
  result.simply_connected = true;
  for (std::size_t i = 0; i < filled.size(); ++i) {
    if (!filled[i] && !reached[i]) {
      result.simply_connected = false;
      break;
    }
  }
  return result;
}

}  // namespace sfc
