#ifndef SFC_BENCH_HPP
#define SFC_BENCH_HPP

#include "sfc/codec.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sfc {

enum class BenchOp { Encode, Decode };

std::string_view to_string(BenchOp op) noexcept;

inline constexpr std::uint64_t kMinBenchCalls = 100000;

struct BenchReport {
  CurveSpec spec;
  BenchOp op = BenchOp::Encode;
  std::uint64_t calls = 0;
  double total_ns = 0;
  double mean_ns = 0;
  std::uint64_t checksum = 0;
  bool verified = false;  // checksum matches an untimed pass through the checked API
  bool pinned = false;    // timing thread was bound to one CPU
};

/// Times `calls` encodes (random ZKeys) or decodes (random ranks).
/// Inputs are generated before timing, a 10% warm-up pass runs first and the
/// H-curve corner cache is filled up front. Throws std::domain_error if
/// calls < kMinBenchCalls.
BenchReport bench_codec(const CurveSpec& spec, BenchOp op, std::uint64_t calls, std::uint64_t seed);

/// bench_codec for every spec, encode then decode.
std::vector<BenchReport> bench_table(std::span<const CurveSpec> specs, std::uint64_t calls,
                                     std::uint64_t seed);

/// curve,op,d,n,calls,mean_ns
void write_bench_csv(std::ostream& out, std::span<const BenchReport> reports);

/// Aligned table, followed by the H/Hilbert mean ratio per operation when
/// both curves are present.
std::string render_bench_table(std::span<const BenchReport> reports);

/// Hilbert mean divided by H mean for `op` at matching (d, n); 0 if absent.
double hilbert_over_h(std::span<const BenchReport> reports, BenchOp op);

}  // namespace sfc

#endif  // SFC_BENCH_HPP
