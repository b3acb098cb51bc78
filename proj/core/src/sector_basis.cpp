// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#include "schwinger/sector_basis.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace schwinger {

std::uint64_t colex_rank(std::uint64_t s) {
  std::uint64_t rank = 0;
  int k = 1;
  while (s) {
    int pos = std::countr_zero(s);
    rank += binomial(pos, k);
    ++k;
    s &= s - 1;
  }
  return rank;
}

SectorBasis::SectorBasis(int n_sites, int n_up) : n_sites_(n_sites), n_up_(n_up) {
  if (n_sites < 0 || n_sites > 40) throw std::invalid_argument("n_sites must be in [0, 40]");
  if (n_up < 0 || n_up > n_sites)
    throw std::invalid_argument("n_up=" + std::to_string(n_up) + " out of range for N=" + std::to_string(n_sites));
  const std::uint64_t count = binomial(n_sites, n_up);
  states_.reserve(count);
  if (n_up == 0) {
    states_.push_back(0);
    return;
  }
  // Gosper's hack walks same-popcount integers in ascending order.
  std::uint64_t s = low_mask(n_up);
  const std::uint64_t limit = std::uint64_t{1} << n_sites;
  while (s < limit) {
    states_.push_back(s);
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

bool SectorBasis::contains(std::uint64_t s) const {
  return (s >> n_sites_) == 0 && std::popcount(s) == n_up_;
}

std::size_t SectorBasis::index_of(std::uint64_t s) const { return static_cast<std::size_t>(colex_rank(s)); }

std::optional<std::size_t> SectorBasis::find(std::uint64_t s) const {
  if (!contains(s)) return std::nullopt;
  return index_of(s);
}

BasisPtr build_sector(int n_sites, int n_up) { return std::make_shared<const SectorBasis>(n_sites, n_up); }

int canonical_sector_for(int n_sites) {
  if (n_sites < 0) throw std::invalid_argument("n_sites must be nonnegative");
  return n_sites / 2;
}

}  // namespace schwinger
