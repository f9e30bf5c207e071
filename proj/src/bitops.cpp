#include "sfc/bitops.hpp"

#include <stdexcept>
#include <string>

namespace sfc {

namespace {

void check_word(unsigned d, Digit x, const char* what) {
  if (d == 0 || d > 64) {
    throw std::domain_error(std::string(what) + ": dimension must be in 1..64");
  }
  if ((x & ~low_mask(d)) != 0) {
    throw std::domain_error(std::string(what) + ": value " + std::to_string(x) +
                            " does not fit in " + std::to_string(d) + " bits");
  }
}

void check_shape(unsigned d, unsigned n, const char* what) {
  if (d == 0 || d > 64 || n == 0 || n > 64) {
    throw std::domain_error(std::string(what) + ": need 1 <= d <= 64 and 1 <= n <= 64");
  }
}

void check_packed(unsigned d, unsigned n, const char* what) {
  check_shape(d, n, what);
  if (d * n > 64) {
    throw std::domain_error(std::string(what) + ": n*d exceeds 64 bits");
  }
}

}  // namespace

Digit gray(unsigned d, Digit k) {
  check_word(d, k, "gray");
  return detail::gray_code(k);
}

Digit gray_inv(unsigned d, Digit x) {
  check_word(d, x, "gray_inv");
  return detail::gray_code_inverse(x);
}

void to_zorder(unsigned d, unsigned n, std::span<const Coord> coords, std::span<Digit> out) {
  check_shape(d, n, "to_zorder");
  if (coords.size() != d || out.size() != n) {
    throw std::domain_error("to_zorder: size mismatch");
  }
  for (unsigned i = 0; i < d; ++i) {
    if ((coords[i] & ~low_mask(n)) != 0) {
      throw std::domain_error("to_zorder: coordinate " + std::to_string(i) + " out of range");
    }
  }
  for (unsigned j = 0; j < n; ++j) {
    const unsigned bit = n - 1 - j;
    Digit digit = 0;
    for (unsigned i = 0; i < d; ++i) {
      digit |= ((coords[i] >> bit) & 1u) << i;
    }
    out[j] = digit;
  }
}

std::vector<Digit> to_zorder(unsigned d, unsigned n, std::span<const Coord> coords) {
  std::vector<Digit> out(n);
  to_zorder(d, n, coords, out);
  return out;
}

void from_zorder(unsigned d, unsigned n, std::span<const Digit> zdigits, std::span<Coord> out) {
  check_shape(d, n, "from_zorder");
  if (zdigits.size() != n || out.size() != d) {
    throw std::domain_error("from_zorder: size mismatch");
  }
  for (unsigned j = 0; j < n; ++j) {
    if ((zdigits[j] & ~low_mask(d)) != 0) {
      throw std::domain_error("from_zorder: digit " + std::to_string(j) + " out of range");
    }
  }
  for (unsigned i = 0; i < d; ++i) {
    Coord c = 0;
    for (unsigned j = 0; j < n; ++j) {
      c = (c << 1) | ((zdigits[j] >> i) & 1u);
    }
    out[i] = c;
  }
}

std::vector<Coord> from_zorder(unsigned d, unsigned n, std::span<const Digit> zdigits) {
  std::vector<Coord> out(d);
  from_zorder(d, n, zdigits, out);
  return out;
}

ZKey pack_digits(unsigned d, std::span<const Digit> zdigits) {
  const auto n = static_cast<unsigned>(zdigits.size());
  check_packed(d, n, "pack_digits");
  ZKey key = 0;
  for (Digit digit : zdigits) {
    if ((digit & ~low_mask(d)) != 0) {
      throw std::domain_error("pack_digits: digit out of range");
    }
    key = d == 64 ? digit : (key << d) | digit;
  }
  return key;
}

std::vector<Digit> unpack_digits(unsigned d, unsigned n, ZKey key) {
  check_packed(d, n, "unpack_digits");
  if ((key & ~low_mask(d * n)) != 0) {
    throw std::domain_error("unpack_digits: key out of range");
  }
  std::vector<Digit> out(n);
  for (unsigned j = n; j-- > 0;) {
    out[j] = key & low_mask(d);
    key = d == 64 ? 0 : key >> d;
  }
  return out;
}

ZKey coords_to_key(unsigned d, unsigned n, std::span<const Coord> coords) {
  check_packed(d, n, "coords_to_key");
  if (coords.size() != d) {
    throw std::domain_error("coords_to_key: size mismatch");
  }
  ZKey key = 0;
  for (unsigned i = 0; i < d; ++i) {
    const Coord c = coords[i];
    if ((c & ~low_mask(n)) != 0) {
      throw std::domain_error("coords_to_key: coordinate " + std::to_string(i) + " out of range");
    }
    for (unsigned b = 0; b < n; ++b) {
      key |= ((c >> b) & 1u) << (b * d + i);
    }
  }
  return key;
}

void key_to_coords(unsigned d, unsigned n, ZKey key, std::span<Coord> out) {
  check_packed(d, n, "key_to_coords");
  if (out.size() != d) {
    throw std::domain_error("key_to_coords: size mismatch");
  }
  if ((key & ~low_mask(d * n)) != 0) {
    throw std::domain_error("key_to_coords: key out of range");
  }
  for (unsigned i = 0; i < d; ++i) {
    Coord c = 0;
    for (unsigned b = 0; b < n; ++b) {
      c |= ((key >> (b * d + i)) & 1u) << b;
    }
    out[i] = c;
  }
}

std::vector<Coord> key_to_coords(unsigned d, unsigned n, ZKey key) {
  std::vector<Coord> out(d);
  key_to_coords(d, n, key, out);
  return out;
}

std::uint64_t l1_distance(std::span<const Coord> a, std::span<const Coord> b) {
  if (a.size() != b.size()) {
    throw std::domain_error("l1_distance: size mismatch");
  }
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
  }
  return sum;
}

GridPoint GridPoint::from_coords(unsigned d, unsigned n, std::span<const Coord> coords) {
  auto digits = to_zorder(d, n, coords);
  return GridPoint(d, n, std::vector<Coord>(coords.begin(), coords.end()), std::move(digits));
}

GridPoint GridPoint::from_zdigits(unsigned d, unsigned n, std::span<const Digit> zdigits) {
  auto coords = from_zorder(d, n, zdigits);
  return GridPoint(d, n, std::move(coords), std::vector<Digit>(zdigits.begin(), zdigits.end()));
}

}  // namespace sfc
