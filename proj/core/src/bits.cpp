// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#include "schwinger/bits.hpp"

#include <array>

namespace schwinger {

Bits Bits::parse(std::string_view text) {
  if (text.size() > 63) throw std::invalid_argument("bitstring longer than 63 sites");
  Bits b;
  b.length = static_cast<int>(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("bitstring may only contain 0 and 1");
    b.value = (b.value << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return b;
}

std::string Bits::str() const {
  std::string s(static_cast<std::size_t>(length), '0');
  for (int i = 0; i < length; ++i) s[static_cast<std::size_t>(i)] = at(i) ? '1' : '0';
  return s;
}

Bits Bits::complement() const { return Bits{~value & low_mask(length), length}; }

Bits concat(Bits prefix, Bits suffix) {
  if (prefix.length + suffix.length > 63) throw std::invalid_argument("concatenated bitstring too long");
  return Bits{(prefix.value << suffix.length) | suffix.value, prefix.length + suffix.length};
}

namespace {

struct PascalTable {
  std::array<std::array<std::uint64_t, 65>, 65> c{};
  PascalTable() {
    for (int n = 0; n <= 64; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
  }
};

const PascalTable& pascal() {
  static const PascalTable table;
  return table;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n || n > 64) return 0;
  return pascal().c[n][k];
}

}  // namespace schwinger
