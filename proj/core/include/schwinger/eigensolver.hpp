// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "schwinger/hamiltonian.hpp"
#include "schwinger/sector_state.hpp"

namespace schwinger {

class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double best_residual)
      : std::runtime_error(what), best_residual_(best_residual) {}
  double best_residual() const { return best_residual_; }

 private:
  double best_residual_;
};

struct LanczosOptions {
  double tol = 1e-10;          // on ||H v - E v||
  int max_iter = 20000;        // total matrix-vector products
  std::uint64_t seed = 12345;  // start vector
  int window = 32;             // Krylov vectors kept before restarting from the Ritz vector
  int threads = 1;             // passed to SectorOperator::apply
};

struct GroundStateResult {
  double energy = 0;
  SectorState state;
  double residual = 0;
  int n_iterations = 0;
  // Lowest two Ritz values closer than 1e-10. The fractal machinery assumes a
  // nondegenerate (hence real, sign-fixable) ground state and refuses flagged results.
  bool degenerate = false;
  double gap_estimate = 0;
};

inline constexpr double kDegeneracyGap = 1e-10;

// Restarted Lanczos with full reorthogonalisation inside each window.
GroundStateResult ground_state(const SectorOperator& op, const LanczosOptions& opts = {});

// Full symmetric eigendecomposition, used as the oracle.
GroundStateResult dense_ground_state(const SectorOperator& op, std::size_t max_dim = 20000);

}  // namespace schwinger
