// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#include "schwinger/sector_state.hpp"

#include <cmath>
#include <stdexcept>

namespace schwinger {

void apply_phase_convention(Eigen::VectorXd& v) {
  if (v.size() == 0) return;
  const double peak = v.cwiseAbs().maxCoeff();
  if (peak == 0.0) return;
  const double cut = peak * (1.0 - 1e-9);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) >= cut) {
      if (v[i] < 0) v = -v;
      return;
    }
  }
}

SectorState bit_flip(const SectorState& s) {
  const int n = s.n_sites();
  auto flipped = build_sector(n, n - s.basis->n_up());
  // Complementing reverses ascending order within a sector.
  SectorState out{flipped, s.amplitudes.reverse()};
  return out;
}

Eigen::VectorXd embed_full(const SectorState& s) {
  if (s.n_sites() > 24) throw std::invalid_argument("full-space embedding limited to N <= 24");
  Eigen::VectorXd full = Eigen::VectorXd::Zero(Eigen::Index{1} << s.n_sites());
  for (std::size_t i = 0; i < s.size(); ++i)
    full[static_cast<Eigen::Index>(s.basis->state(i))] = s.amplitudes[static_cast<Eigen::Index>(i)];
  return full;
}

double inner(const SectorState& a, const SectorState& b) {
  if (!(*a.basis == *b.basis)) throw std::invalid_argument("states live in different sectors");
  return a.amplitudes.dot(b.amplitudes);
}

double fidelity(const SectorState& a, const SectorState& b) {
  const double o = inner(a, b);
  return std::min(1.0, o * o);
}

}  // namespace schwinger
