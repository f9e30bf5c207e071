#include "sfc/verify.hpp"

#include "sfc/hcurve.hpp"
#include "sfc/mutation_oracle.hpp"
#include "sfc/reference_codecs.hpp"
#include "sfc/rng.hpp"
#include "sfc/traversal.hpp"

#include <sstream>

namespace sfc {

namespace {

std::string label(const Codec& codec, const char* what) {
  std::ostringstream os;
  os << what << " " << to_string(codec.kind()) << " (d=" << codec.dimension()
     << ", n=" << codec.depth() << ")";
  return os.str();
}

void fail(CheckResult& result, const std::string& first) {
  if (result.failures++ == 0) {
    result.detail = first;
  }
  result.passed = false;
}

}  // namespace

CheckResult check_round_trip(const Codec& codec, std::uint64_t samples, std::uint64_t seed) {
  CheckResult result;
  result.name = label(codec, "round-trip");
  auto check_rank = [&](Rank r) {
    ++result.checked;
    const ZKey key = codec.decode_key(r);
    if (codec.encode_key(key) != r) fail(result, "encode(decode(" + std::to_string(r) + ")) differs");
  };
  auto check_key = [&](ZKey key) {
    ++result.checked;
    const Rank r = codec.encode_key(key);
    if (codec.decode_key(r) != key) fail(result, "decode(encode(key " + std::to_string(key) + ")) differs");
  };
  if (codec.rank_bits() <= kExhaustiveBits) {
    for (Rank r = 0; r <= codec.max_rank(); ++r) {
      check_rank(r);
      check_key(r);
    }
  } else {
    Rng rng(stream_seed(seed, 0x52545249, codec.rank_bits()));
    for (std::uint64_t i = 0; i < samples; ++i) {
      check_rank(rng.next() & codec.max_rank());
      check_key(rng.next() & codec.max_rank());
    }
  }
  return result;
}

CheckResult check_adjacency(const Codec& codec, std::uint64_t samples, std::uint64_t seed) {
  CheckResult result;
  result.name = label(codec, codec.cyclic() ? "cyclic adjacency" : "adjacency");
  std::vector<Coord> here(codec.dimension());
  std::vector<Coord> next(codec.dimension());
  auto check_step = [&](Rank r) {
    ++result.checked;
    const Rank s = (r + 1) & codec.max_rank();
    key_to_coords(codec.dimension(), codec.depth(), codec.decode_key(r), here);
    key_to_coords(codec.dimension(), codec.depth(), codec.decode_key(s), next);
    if (l1_distance(here, next) != 1) fail(result, "step " + std::to_string(r) + " is not unit length");
  };
  const Rank last = codec.cyclic() ? codec.max_rank() : codec.max_rank() - 1;
  if (codec.rank_bits() <= kExhaustiveBits) {
    for (Rank r = 0; r <= last; ++r) check_step(r);
  } else {
    Rng rng(stream_seed(seed, 0x41444a43, codec.rank_bits()));
    if (codec.cyclic()) check_step(codec.max_rank());
    for (std::uint64_t i = 0; i < samples; ++i) {
      const Rank r = rng.next() & codec.max_rank();
      if (r <= last) check_step(r);
    }
  }
  return result;
}

CheckResult check_oracle_equivalence(unsigned d, unsigned n) {
  CheckResult result;
  result.name = "oracle equivalence h (d=" + std::to_string(d) + ", n=" + std::to_string(n) + ")";
  const auto expected = oracle::build_cycle(d, n);
  const HCodec codec(d, n);
  const auto actual = traversal_keys(codec);
  result.checked = actual.size();
  if (!same_cyclic_sequence(expected, actual)) {
    fail(result, "codec traversal differs from the mutation oracle");
  }
  return result;
}

CheckResult check_oracle_reversals(unsigned d, unsigned n) {
  CheckResult result;
  result.name = "oracle reversal rule (d=" + std::to_string(d) + ", n=" + std::to_string(n) + ")";
  if (n < 2) {
    return result;
  }
  const auto graph = oracle::build_cycle_graph(d, n);
  const bool expected = reversal_applies(d, n);
  const auto& backwards = graph.walked_backwards();
  for (std::size_t alpha = 0; alpha < backwards.size(); ++alpha) {
    ++result.checked;
    if (backwards[alpha] != expected) {
      fail(result, "half-size cube " + std::to_string(alpha) + " walked " +
                       (backwards[alpha] ? "backwards" : "forwards"));
    }
  }
  return result;
}

CheckResult check_entry_corners(unsigned d, unsigned n) {
  CheckResult result;
  result.name = "entry corners h (d=" + std::to_string(d) + ", n=" + std::to_string(n) + ")";
  if (n < 2) {
    return result;
  }
  const HCodec codec(d, n);
  const unsigned inner_bits = d * (n - 1);
  for (Digit alpha = 0; alpha < (Digit{1} << d); ++alpha) {
    ++result.checked;
    const Rank first = detail::gray_code_inverse(alpha) << inner_bits;
    const ZKey expected = (alpha << inner_bits) | entry_corner_key(d, n - 1, alpha);
    if (codec.decode_key(first) != expected) {
      fail(result, "run of cube " + std::to_string(alpha) + " starts elsewhere");
    }
  }
  return result;
}

CheckResult check_hcurve_runs(unsigned d, unsigned n) {
  CheckResult result;
  result.name = "run structure h (d=" + std::to_string(d) + ", n=" + std::to_string(n) + ")";
  const HCodec codec(d, n);
  const auto order = traversal_keys(codec);
  if (n >= 1) {
    std::vector<ZKey> gray_order;
    for (Digit t = 0; t < (Digit{1} << d); ++t) gray_order.push_back(detail::gray_code(t));
    if (!same_cyclic_sequence(gray_order, coarse_sequence(order, d, n, 1, true))) {
      fail(result, "depth-1 cells are not visited in Gray order");
    }
  }
  for (unsigned k = 1; k < n; ++k) {
    const auto runs = depth_run_counts(order, d, n, k, true);
    for (ZKey cell = 0; cell < runs.size(); ++cell) {
      ++result.checked;
      const std::uint32_t expected = holds_central_pair(d, k, cell) ? 2 : 1;
      if (runs[cell] != expected) {
        fail(result, "depth-" + std::to_string(k) + " cell " + std::to_string(cell) + " has " +
                         std::to_string(runs[cell]) + " runs, expected " + std::to_string(expected));
      }
    }
  }
  return result;
}

CheckResult check_hilbert_runs(unsigned d, unsigned n) {
  CheckResult result;
  result.name = "run structure hilbert (d=" + std::to_string(d) + ", n=" + std::to_string(n) + ")";
  const HilbertCodec codec(d, n);
  const auto order = traversal_keys(codec);
  for (unsigned k = 1; k < n; ++k) {
    const auto runs = depth_run_counts(order, d, n, k, false);
    for (ZKey cell = 0; cell < runs.size(); ++cell) {
      ++result.checked;
      if (runs[cell] != 1) {
        fail(result, "depth-" + std::to_string(k) + " cell " + std::to_string(cell) + " is split");
      }
    }
  }
  return result;
}

std::vector<CheckResult> run_verification(unsigned d, unsigned n, std::uint64_t samples,
                                          std::uint64_t seed) {
  std::vector<CheckResult> results;
  const bool oracle_sized = d >= 2 && d <= 6 && d * n <= oracle::kMaxOracleBits;
  if (oracle_sized) {
    results.push_back(check_oracle_equivalence(d, n));
    results.push_back(check_oracle_reversals(d, n));
  }
  const HCodec h(d, n);
  const HilbertCodec hilbert(d, n);
  const ZCodec z(d, n);
  for (const Codec* codec : {static_cast<const Codec*>(&h), static_cast<const Codec*>(&hilbert),
                             static_cast<const Codec*>(&z)}) {
    results.push_back(check_round_trip(*codec, samples, seed));
  }
  results.push_back(check_adjacency(h, samples, seed));
  results.push_back(check_adjacency(hilbert, samples, seed));
  results.push_back(check_entry_corners(d, n));
  if (d * n <= kExhaustiveBits) {
    results.push_back(check_hcurve_runs(d, n));
    results.push_back(check_hilbert_runs(d, n));
  }
  return results;
}

}  // namespace sfc
