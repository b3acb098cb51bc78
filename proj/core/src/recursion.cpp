// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#include "schwinger/recursion.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "schwinger/reduced_hamiltonian.hpp"

namespace schwinger {

namespace {

void check_seed(const OverlapChain& seed, int n_seed, int n_target) {
  if (n_target < n_seed) throw std::invalid_argument("n_target must be >= n_seed");
  for (int m = 0; m <= n_seed; ++m)
    if (!seed.has(m)) throw MissingData("seed data missing for N=" + std::to_string(m));
}

OverlapChain truncate(const OverlapChain& seed, int n_seed) {
  OverlapChain c;
  for (const auto& [m, d] : seed.sizes())
    if (m <= n_seed) c.put(d);
  return c;
}

}  // namespace

std::pair<double, std::vector<double>> lowest_eigenpair(const Eigen::MatrixXd& h) {
  if ((h - h.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + h.cwiseAbs().maxCoeff()))
    throw std::logic_error("reduced Hamiltonian is not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  const auto& ev = es.eigenvalues();
  const auto k = h.rows();
  const double tie = 1e-12 * (1.0 + std::abs(ev[0]));
  Eigen::Index deg = 1;
  while (deg < k && ev[deg] - ev[0] <= tie) ++deg;
  Eigen::VectorXd v = es.eigenvectors().col(0);
  if (deg > 1) {
    const Eigen::MatrixXd span = es.eigenvectors().leftCols(deg);
    for (Eigen::Index i = 0; i < k; ++i) {
      Eigen::VectorXd proj = span * span.row(i).transpose();
      if (proj.norm() > 1e-8) {
        v = proj.normalized();
        break;
      }
    }
  }
  for (Eigen::Index i = 0; i < k; ++i) {
    if (std::abs(v[i]) > 1e-14) {
      if (v[i] < 0) v = -v;
      break;
    }
  }
  return {ev[0], std::vector<double>(v.data(), v.data() + k)};
}

RecursionResult ad_recursion(const AnsatzSpec& spec, const ModelParams& params, const OverlapChain& seed,
                             int n_seed, int n_target) {
  check_seed(seed, n_seed, n_target);
  RecursionResult r;
  r.chain = truncate(seed, n_seed);
  for (int n = n_seed + 1; n <= n_target; ++n) {
    const Eigen::MatrixXd h = reduced_hamiltonian(spec, n, params, r.chain);
    auto [e, w] = lowest_eigenpair(h);
    r.chain.put(implicit_size_data(spec, n, e, w, r.chain, params));
    r.steps[n] = RecursionStep{n, e, std::move(w)};
  }
  return r;
}

RecursionResult afw_recursion(const AnsatzSpec& spec, const ModelParams& params, const std::vector<double>& fixed_weights,
                              const OverlapChain& seed, int n_seed, int n_target) {
  if (fixed_weights.size() != spec.size())
    throw std::invalid_argument("AFW needs one fixed weight per term of the " + spec.name + " ansatz");
  check_seed(seed, n_seed, n_target);
  Eigen::Map<const Eigen::VectorXd> raw(fixed_weights.data(), static_cast<Eigen::Index>(fixed_weights.size()));
  if (raw.norm() == 0.0) throw std::invalid_argument("fixed weights are all zero");
  const Eigen::VectorXd w = raw / raw.norm();
  const std::vector<double> wv(w.data(), w.data() + w.size());
  RecursionResult r;
  r.chain = truncate(seed, n_seed);
  for (int n = n_seed + 1; n <= n_target; ++n) {
    const Eigen::MatrixXd h = reduced_hamiltonian(spec, n, params, r.chain);
    const double e = w.dot(h * w);
    r.chain.put(implicit_size_data(spec, n, e, wv, r.chain, params));
    r.steps[n] = RecursionStep{n, e, wv};
  }
  return r;
}

}  // namespace schwinger
