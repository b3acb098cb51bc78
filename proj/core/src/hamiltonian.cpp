// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#include "schwinger/hamiltonian.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

namespace schwinger {

void ModelParams::validate() const {
  if (!std::isfinite(x) || x < 0) throw std::invalid_argument("x must be finite and nonnegative");
  if (!std::isfinite(mu)) throw std::invalid_argument("mu must be finite");
  if (!std::isfinite(epsilon0)) throw std::invalid_argument("epsilon0 must be finite");
}

namespace {

// Returns the mass + electric energy and leaves 2 L after the last site in twice_l.
double staggered_energy(Bits s, const ModelParams& p, bool include_last_link, long& twice_l) {
  double mass = 0;
  double electric = 0;
  twice_l = 0;
  for (int n = 0; n < s.length; ++n) {
    const int sz = s.at(n) ? 1 : -1;
    const int parity = (n % 2 == 0) ? 1 : -1;
    if (sz * parity > 0) mass += p.mu;
    twice_l += sz + parity;
    if (n < s.length - 1 || include_last_link) {
      const double l = p.epsilon0 + 0.5 * static_cast<double>(twice_l);
      electric += l * l;
    }
  }
  return mass + electric;
}

}  // namespace

double diagonal_energy(Bits state, const ModelParams& params) {
  long twice_l = 0;
  return staggered_energy(state, params, false, twice_l);
}

double prefix_energy(Bits prefix, const ModelParams& params) {
  long twice_l = 0;
  const double e = staggered_energy(prefix, params, true, twice_l);
  if (twice_l != 0) throw std::invalid_argument("prefix " + prefix.str() + " is not charge neutral");
  return e;
}

int flippable_bonds(Bits state) {
  if (state.length < 2) return 0;
  const std::uint64_t diff = (state.value ^ (state.value >> 1)) & low_mask(state.length - 1);
  return std::popcount(diff);
}

SectorOperator::SectorOperator(BasisPtr basis, ModelParams params)
    : basis_(std::move(basis)), params_(params) {
  params_.validate();
  const std::size_t dim = basis_->size();
  if (dim > std::numeric_limits<std::uint32_t>::max()) throw std::invalid_argument("sector too large");
  const int n = basis_->n_sites();
  diagonal_.resize(static_cast<Eigen::Index>(dim));
  row_start_.resize(dim + 1);
  row_start_[0] = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    const Bits b = basis_->bits(i);
    diagonal_[static_cast<Eigen::Index>(i)] = diagonal_energy(b, params_);
    row_start_[i + 1] = row_start_[i] + static_cast<std::uint64_t>(flippable_bonds(b));
  }
  neighbours_.resize(row_start_[dim]);
  std::size_t k = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    const std::uint64_t s = basis_->state(i);
    for (int bond = 0; bond + 1 < n; ++bond) {
      const std::uint64_t pair = std::uint64_t{3} << (n - 2 - bond);
      const std::uint64_t bitsv = s & pair;
      if (bitsv != 0 && bitsv != pair) neighbours_[k++] = static_cast<std::uint32_t>(basis_->index_of(s ^ pair));
    }
  }
}

void SectorOperator::apply_rows(const Eigen::VectorXd& v, Eigen::VectorXd& out, std::size_t begin,
                                std::size_t end) const {
  const double x = params_.x;
  for (std::size_t i = begin; i < end; ++i) {
    double hop = 0;
    for (std::uint64_t k = row_start_[i]; k < row_start_[i + 1]; ++k) hop += v[neighbours_[k]];
    const auto ii = static_cast<Eigen::Index>(i);
    out[ii] = diagonal_[ii] * v[ii] + x * hop;
  }
}

void SectorOperator::apply(const Eigen::VectorXd& v, Eigen::VectorXd& out, int threads) const {
  const std::size_t dim = this->dim();
  if (static_cast<std::size_t>(v.size()) != dim)
    throw std::invalid_argument("apply: vector has length " + std::to_string(v.size()) + ", sector has " +
                                std::to_string(dim));
  out.resize(static_cast<Eigen::Index>(dim));
  if (threads <= 1 || dim < 4096) {
    apply_rows(v, out, 0, dim);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (dim + static_cast<std::size_t>(threads) - 1) / static_cast<std::size_t>(threads);
  for (int t = 0; t < threads; ++t) {
    const std::size_t b = static_cast<std::size_t>(t) * chunk;
    const std::size_t e = std::min(dim, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&, b, e] { apply_rows(v, out, b, e); });
  }
  for (auto& th : pool) th.join();
}

Eigen::VectorXd SectorOperator::apply(const Eigen::VectorXd& v, int threads) const {
  Eigen::VectorXd out;
  apply(v, out, threads);
  return out;
}

Eigen::MatrixXd SectorOperator::dense_matrix(std::size_t max_dim) const {
  const std::size_t dim = this->dim();
  if (dim > max_dim)
    throw std::invalid_argument("dense_matrix: sector dimension " + std::to_string(dim) + " exceeds guard " +
                                std::to_string(max_dim));
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    h(ii, ii) = diagonal_[ii];
    for (std::uint64_t k = row_start_[i]; k < row_start_[i + 1]; ++k) h(ii, neighbours_[k]) = params_.x;
  }
  return h;
}

double SectorOperator::expectation(const Eigen::VectorXd& v) const { return v.dot(apply(v)); }

Eigen::VectorXd apply_full_space(int n_sites, const ModelParams& params, const Eigen::VectorXd& v) {
  const std::uint64_t dim = std::uint64_t{1} << n_sites;
  if (static_cast<std::uint64_t>(v.size()) != dim) throw std::invalid_argument("apply_full_space: bad length");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(v.size());
  for (std::uint64_t s = 0; s < dim; ++s) {
    const auto is = static_cast<Eigen::Index>(s);
    out[is] += diagonal_energy(Bits{s, n_sites}, params) * v[is];
    for (int n = 0; n + 1 < n_sites; ++n) {
      // s+_n s-_{n+1}: site n goes down->up, site n+1 up->down; plus the conjugate.
      const int hi = n_sites - 1 - n;
      const int lo = hi - 1;
      const int bn = static_cast<int>((s >> hi) & 1u);
      const int bm = static_cast<int>((s >> lo) & 1u);
      if (bn != bm) {
        const std::uint64_t t = s ^ ((std::uint64_t{1} << hi) | (std::uint64_t{1} << lo));
        out[static_cast<Eigen::Index>(t)] += params.x * v[is];
      }
    }
  }
  return out;
}

}  // namespace schwinger
