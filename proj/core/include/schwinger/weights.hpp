// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <vector>

#include "schwinger/ansatz.hpp"
#include "schwinger/ground_state_chain.hpp"

namespace schwinger {

struct WeightRow {
  int n = 0;
  std::vector<double> w;  // spec order
  double f = 0, g = 0, p = 0;
  double sum_sq() const;
};

struct WeightTable {
  SpecKind spec = SpecKind::k4;
  std::map<int, WeightRow> rows;

  double weight(int n, Label id) const;
};

// Rows n_min..n_max read off a chain (explicit or recursion-generated sizes).
WeightTable weight_table(const AnsatzSpec& spec, const OverlapChain& chain, int n_min, int n_max);

// 1 - sum_s W_s^2: probability the ansatz basis misses.
double coverage_deficit(const std::vector<double>& w);

// max_s |W_s^n - W_s^{n-2}|; rows n and n-2 must exist.
double max_weight_change(const WeightTable& t, int n);

inline constexpr double kWeightConvergenceTol = 1e-3;

// Weights count as converged at n when the change is below tol at n and at n-2.
bool weights_converged(const WeightTable& t, int n, double tol = kWeightConvergenceTol);

}  // namespace schwinger
