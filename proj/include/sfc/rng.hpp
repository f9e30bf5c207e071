#ifndef SFC_RNG_HPP
#define SFC_RNG_HPP

#include <cstdint>
#include <random>

namespace sfc {

/// SplitMix64 finalizer; used to derive independent stream seeds.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of stream `stream` within experiment `tag`: seed ^ mix(tag, stream).
constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t stream) noexcept {
  return seed ^ mix64(mix64(tag) ^ stream);
}

/// mt19937_64 with a portable bounded draw.
///
/// std::uniform_int_distribution is implementation-defined, so bounded draws
/// use rejection sampling on the raw 64-bit output instead; sequences are
/// identical on every conforming standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound = 0 means the full 64-bit range.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) return engine_();
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sfc

#endif  // SFC_RNG_HPP
