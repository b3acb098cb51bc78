// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "schwinger/ansatz.hpp"
#include "schwinger/ground_state_chain.hpp"
#include "schwinger/hamiltonian.hpp"

namespace schwinger {

struct RecursionStep {
  int n = 0;
  double energy = 0;
  std::vector<double> weights;  // spec order
};

struct RecursionResult {
  std::map<int, RecursionStep> steps;  // n_seed + 1 .. n_target
  OverlapChain chain;                  // seed data followed by the implicit sizes
  std::vector<std::string> warnings;
};

// Lowest eigenpair of a small symmetric matrix. Sign: first nonzero component
// positive. A degenerate lowest level is resolved by projecting e_k for the
// lowest k with a nonzero projection onto the eigenspace.
std::pair<double, std::vector<double>> lowest_eigenpair(const Eigen::MatrixXd& h);

// Ansatz diagonalization: for N = n_seed+1 .. n_target build the reduced
// Hamiltonian, keep its lowest eigenpair as (E_N, weights), extend the chain by
// the recurrences, move on. `seed` must hold data for all sizes <= n_seed.
RecursionResult ad_recursion(const AnsatzSpec& spec, const ModelParams& params, const OverlapChain& seed,
                             int n_seed, int n_target);

// Ansatz with fixed weights: E_N = <w|H^R_N|w> with w the fixed weights
// normalised to unit length (spec order).
RecursionResult afw_recursion(const AnsatzSpec& spec, const ModelParams& params, const std::vector<double>& fixed_weights,
                              const OverlapChain& seed, int n_seed, int n_target);

}  // namespace schwinger
