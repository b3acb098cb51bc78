// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "schwinger/bits.hpp"

namespace schwinger {

// Fixed-charge basis: every N-bit string with n_up ones, ascending by integer value.
// Ascending order coincides with colex order, so index_of is the combinatorial
// number system rank and needs no lookup table.
class SectorBasis {
 public:
  SectorBasis(int n_sites, int n_up);

  int n_sites() const { return n_sites_; }
  int n_up() const { return n_up_; }
  std::size_t size() const { return states_.size(); }

  std::uint64_t state(std::size_t i) const { return states_[i]; }
  Bits bits(std::size_t i) const { return Bits{states_[i], n_sites_}; }
  const std::vector<std::uint64_t>& states() const { return states_; }

  bool contains(std::uint64_t s) const;
  // Position of s; s must have n_sites bits and n_up ones.
  std::size_t index_of(std::uint64_t s) const;
  std::optional<std::size_t> find(std::uint64_t s) const;

  bool operator==(const SectorBasis& o) const { return n_sites_ == o.n_sites_ && n_up_ == o.n_up_; }

 private:
  int n_sites_;
  int n_up_;
  std::vector<std::uint64_t> states_;
};

using BasisPtr = std::shared_ptr<const SectorBasis>;

BasisPtr build_sector(int n_sites, int n_up);

// N/2 for even N and (N-1)/2 for odd N, see README "Conventions".
int canonical_sector_for(int n_sites);

inline BasisPtr canonical_sector(int n_sites) { return build_sector(n_sites, canonical_sector_for(n_sites)); }

// Colex rank of a bit pattern among patterns with the same popcount.
std::uint64_t colex_rank(std::uint64_t s);

}  // namespace schwinger
