// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace schwinger {

// Site 0 is the most significant of the `length` low bits; bit 1 means spin up.
struct Bits {
  std::uint64_t value = 0;
  int length = 0;

  static Bits parse(std::string_view text);
  std::string str() const;

  int popcount() const { return std::popcount(value); }
  int at(int site) const { return static_cast<int>((value >> (length - 1 - site)) & 1u); }
  Bits complement() const;
  bool operator==(const Bits&) const = default;
};

// (prefix, suffix) -> prefix bits followed by suffix bits.
Bits concat(Bits prefix, Bits suffix);

inline std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Binomial coefficients for n, k <= 64; saturates nothing, callers stay well below 2^63.
std::uint64_t binomial(int n, int k);

}  // namespace schwinger
