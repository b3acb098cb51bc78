// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "schwinger/sector_basis.hpp"

namespace schwinger {

struct ModelParams {
  double x = 1.0;    // 1 / (g a)^2
  double mu = 0.1;   // 2 m / (g^2 a)
  double epsilon0 = 0.0;

  void validate() const;
};

// (mu/2) sum_n (1 + (-1)^n sz_n) + sum_{n<N-1} (eps0 + L_n)^2, with L_n the
// running half-sum of (sz_l + (-1)^l). 2 L_n is accumulated as an integer.
double diagonal_energy(Bits state, const ModelParams& params);

// Mass and electric energy of a prefix that ends charge neutral (L = 0), i.e. the
// amount it adds on top of whatever chain follows it.
double prefix_energy(Bits prefix, const ModelParams& params);

// Number of adjacent 01/10 pairs.
int flippable_bonds(Bits state);

// H = x sum (s+_n s-_{n+1} + h.c.) + H_diag, restricted to one sector.
// Hopping neighbours are tabulated once in CSR form.
class SectorOperator {
 public:
  SectorOperator(BasisPtr basis, ModelParams params);

  const SectorBasis& basis() const { return *basis_; }
  const BasisPtr& basis_ptr() const { return basis_; }
  const ModelParams& params() const { return params_; }
  const Eigen::VectorXd& diagonal() const { return diagonal_; }
  std::size_t dim() const { return basis_->size(); }

  // out = H v. threads <= 1 runs the sequential loop; otherwise rows are split into
  // contiguous chunks. Every row is summed in the same order either way, so the
  // result does not depend on the thread count.
  void apply(const Eigen::VectorXd& v, Eigen::VectorXd& out, int threads = 1) const;
  Eigen::VectorXd apply(const Eigen::VectorXd& v, int threads = 1) const;

  // Explicit matrix; refuses sectors above max_dim.
  Eigen::MatrixXd dense_matrix(std::size_t max_dim = 20000) const;

  double expectation(const Eigen::VectorXd& v) const;

 private:
  void apply_rows(const Eigen::VectorXd& v, Eigen::VectorXd& out, std::size_t begin, std::size_t end) const;

  BasisPtr basis_;
  ModelParams params_;
  Eigen::VectorXd diagonal_;
  std::vector<std::uint64_t> row_start_;
  std::vector<std::uint32_t> neighbours_;
};

// Reference H v on the full 2^N space, with no sector bookkeeping (tests only).
Eigen::VectorXd apply_full_space(int n_sites, const ModelParams& params, const Eigen::VectorXd& v);

}  // namespace schwinger
