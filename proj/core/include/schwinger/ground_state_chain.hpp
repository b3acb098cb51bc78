// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include "schwinger/ansatz.hpp"
#include "schwinger/overlap.hpp"
#include "schwinger/sector_state.hpp"

namespace schwinger {

class MissingData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Everything the recursions need to know about the ground state at one size M.
// For explicit sizes the numbers are inner products of stored vectors; for sizes
// produced by a recursion the state exists only implicitly through them.
struct SizeData {
  int n = 0;
  double energy = 0;
  std::array<double, kNumLabels> w{};
  double f = 0, g = 0, p = 0, q = 0;
  bool explicit_state = false;

  double weight(Label id) const { return w[static_cast<std::size_t>(id)]; }
  double aux(Aux which) const;
};

// Sizes 0, 1, 2, ... of one interleaved (both parities) chain.
class OverlapChain {
 public:
  void put(const SizeData& d) { sizes_[d.n] = d; }
  bool has(int m) const { return sizes_.count(m) > 0; }
  const SizeData& at(int m) const;
  int max_size() const { return sizes_.empty() ? -1 : sizes_.rbegin()->first; }
  const std::map<int, SizeData>& sizes() const { return sizes_; }

  double energy(int m) const { return at(m).energy; }
  // Overlaps referring to negative sizes vanish (the term does not exist).
  double w(Label id, int m) const { return m < 0 ? 0.0 : at(m).weight(id); }
  double f(int m) const { return m < 0 ? 0.0 : at(m).f; }
  double g(int m) const { return m < 0 ? 0.0 : at(m).g; }
  double p(int m) const { return m < 0 ? 0.0 : at(m).p; }
  double q(int m) const { return m < 0 ? 0.0 : at(m).q; }

 private:
  std::map<int, SizeData> sizes_;
};

// Explicit ground states in their canonical sectors, keyed by size.
struct SeedStates {
  std::map<int, SectorState> states;
  std::map<int, double> energies;

  const SectorState& state(int n) const;
  double energy(int n) const;
  int max_size() const { return states.empty() ? -1 : states.rbegin()->first; }
};

// Direct inner products at size m from explicit states at m and below.
SizeData direct_size_data(const SeedStates& seeds, int m);

// Direct data for every size 0..n_max.
OverlapChain direct_chain(const SeedStates& seeds, int n_max);

}  // namespace schwinger
