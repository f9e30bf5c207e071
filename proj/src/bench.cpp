#include "sfc/bench.hpp"

#include "sfc/hcurve.hpp"
#include "sfc/reference_codecs.hpp"
#include "sfc/rng.hpp"

#include <sched.h>

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sfc {

std::string_view to_string(BenchOp op) noexcept {
  return op == BenchOp::Encode ? "encode" : "decode";
}

namespace {

// Binds the calling thread to the CPU it is running on; restores on exit.
class CpuPin {
 public:
  CpuPin() {
    if (sched_getaffinity(0, sizeof(saved_), &saved_) != 0) return;
    const int cpu = sched_getcpu();
    if (cpu < 0) return;
    cpu_set_t one;
    CPU_ZERO(&one);
    CPU_SET(cpu, &one);
    pinned_ = sched_setaffinity(0, sizeof(one), &one) == 0;
  }
  ~CpuPin() {
    if (pinned_) sched_setaffinity(0, sizeof(saved_), &saved_);
  }
  CpuPin(const CpuPin&) = delete;
  CpuPin& operator=(const CpuPin&) = delete;

  bool pinned() const noexcept { return pinned_; }

 private:
  cpu_set_t saved_{};
  bool pinned_ = false;
};

template <class C>
std::uint64_t run_loop(const C& codec, BenchOp op, std::span<const std::uint64_t> inputs) {
  std::uint64_t sum = 0;
  if (op == BenchOp::Encode) {
    for (std::uint64_t key : inputs) sum += codec.encode_fast(key);
  } else {
    for (std::uint64_t r : inputs) sum += codec.decode_fast(r);
  }
  return sum;
}

std::uint64_t checked_pass(const Codec& codec, BenchOp op, std::span<const std::uint64_t> inputs) {
  std::uint64_t sum = 0;
  for (std::uint64_t x : inputs) sum += op == BenchOp::Encode ? codec.encode_key(x) : codec.decode_key(x);
  return sum;
}

template <class C>
BenchReport time_codec(const C& codec, BenchOp op, std::span<const std::uint64_t> inputs,
                       std::span<const std::uint64_t> warmup) {
  BenchReport report;
  report.spec = codec.spec();
  report.op = op;
  report.calls = inputs.size();

  CpuPin pin;
  report.pinned = pin.pinned();
  volatile std::uint64_t sink = run_loop(codec, op, warmup);
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t checksum = run_loop(codec, op, inputs);
  const auto stop = std::chrono::steady_clock::now();
  sink = sink + checksum;

  report.checksum = checksum;
  report.total_ns = std::chrono::duration<double, std::nano>(stop - start).count();
  report.mean_ns = report.total_ns / static_cast<double>(report.calls);
  report.verified = checked_pass(codec, op, inputs) == checksum;
  return report;
}

}  // namespace

BenchReport bench_codec(const CurveSpec& spec, BenchOp op, std::uint64_t calls, std::uint64_t seed) {
  if (calls < kMinBenchCalls) {
    throw std::domain_error("bench_codec: need at least 100000 calls");
  }
  const auto codec = make_codec(spec);
  const Rank mask = codec->max_rank();

  Rng rng(stream_seed(seed, static_cast<std::uint64_t>(op) + 1, codec->rank_bits()));
  std::vector<std::uint64_t> inputs(calls);
  for (auto& x : inputs) x = rng.next() & mask;
  const std::span<const std::uint64_t> warmup(inputs.data(), calls / 10);

  switch (spec.kind) {
    case CurveKind::H: {
      const auto& h = static_cast<const HCodec&>(*codec);
      h.warm_cache();
      return time_codec(h, op, inputs, warmup);
    }
    case CurveKind::Hilbert:
      return time_codec(static_cast<const HilbertCodec&>(*codec), op, inputs, warmup);
    case CurveKind::Z:
      return time_codec(static_cast<const ZCodec&>(*codec), op, inputs, warmup);
  }
  throw std::logic_error("bench_codec: unknown curve");
}

std::vector<BenchReport> bench_table(std::span<const CurveSpec> specs, std::uint64_t calls,
                                     std::uint64_t seed) {
  std::vector<BenchReport> reports;
  for (const auto& spec : specs) {
    for (BenchOp op : {BenchOp::Encode, BenchOp::Decode}) {
      reports.push_back(bench_codec(spec, op, calls, seed));
    }
  }
  return reports;
}

void write_bench_csv(std::ostream& out, std::span<const BenchReport> reports) {
  out << "curve,op,d,n,calls,mean_ns\n";
  for (const auto& r : reports) {
    out << to_string(r.spec.kind) << ',' << to_string(r.op) << ',' << r.spec.d << ',' << r.spec.n << ','
        << r.calls << ',' << std::fixed << std::setprecision(3) << r.mean_ns << std::defaultfloat << '\n';
  }
}

double hilbert_over_h(std::span<const BenchReport> reports, BenchOp op) {
  for (const auto& h : reports) {
    if (h.spec.kind != CurveKind::H || h.op != op) continue;
    for (const auto& b : reports) {
      if (b.spec.kind == CurveKind::Hilbert && b.op == op && b.spec.d == h.spec.d && b.spec.n == h.spec.n &&
          h.mean_ns > 0) {
        return b.mean_ns / h.mean_ns;
      }
    }
  }
  return 0;
}

std::string render_bench_table(std::span<const BenchReport> reports) {
  std::ostringstream os;
  os << std::left << std::setw(9) << "curve" << std::setw(8) << "op" << std::right << std::setw(4) << "d"
     << std::setw(4) << "n" << std::setw(10) << "calls" << std::setw(12) << "mean_ns" << std::setw(10)
     << "checksum" << '\n';
  for (const auto& r : reports) {
    os << std::left << std::setw(9) << to_string(r.spec.kind) << std::setw(8) << to_string(r.op) << std::right
       << std::setw(4) << r.spec.d << std::setw(4) << r.spec.n << std::setw(10) << r.calls << std::setw(12)
       << std::fixed << std::setprecision(2) << r.mean_ns << std::setw(10) << (r.verified ? "ok" : "BAD")
       << '\n';
  }
  for (BenchOp op : {BenchOp::Encode, BenchOp::Decode}) {
    const double ratio = hilbert_over_h(reports, op);
    if (ratio > 0) {
      os << "hilbert/h " << to_string(op) << ": " << std::fixed << std::setprecision(2) << ratio << "x\n";
    }
  }
  if (!reports.empty() && !reports.front().pinned) {
    os << "note: timing thread could not be pinned to one CPU\n";
  }
  return os.str();
}

}  // namespace sfc
