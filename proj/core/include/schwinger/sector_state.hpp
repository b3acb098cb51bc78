// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include "schwinger/sector_basis.hpp"

namespace schwinger {

// Real amplitudes over a sector basis.
struct SectorState {
  BasisPtr basis;
  Eigen::VectorXd amplitudes;

  int n_sites() const { return basis->n_sites(); }
  std::size_t size() const { return basis->size(); }
  double norm() const { return amplitudes.norm(); }
};

// Flips the global sign so the largest-|amplitude| entry is positive. Entries
// within a relative 1e-9 of the maximum count as tied; the lowest index wins.
void apply_phase_convention(Eigen::VectorXd& v);

// T-hat: complement every bit. Maps sector n_up to N - n_up.
SectorState bit_flip(const SectorState& s);

// Dense vector over all 2^N configurations (N <= 24).
Eigen::VectorXd embed_full(const SectorState& s);

double inner(const SectorState& a, const SectorState& b);

// |<a|b>|^2; requires the same basis.
double fidelity(const SectorState& a, const SectorState& b);

}  // namespace schwinger
