// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#include "schwinger/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

extern "C" void dsyevr_(const char* jobz, const char* range, const char* uplo, const int* n, double* a, const int* lda,
                        const double* vl, const double* vu, const int* il, const int* iu, const double* abstol, int* m,
                        double* w, double* z, const int* ldz, int* isuppz, double* work, const int* lwork, int* iwork,
                        const int* liwork, int* info);

namespace schwinger {

namespace {

Eigen::VectorXd random_unit(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = gauss(rng);
  return v / v.norm();
}

GroundStateResult finish(const SectorOperator& op, Eigen::VectorXd v, double energy, int iters, double gap) {
  v.normalize();
  apply_phase_convention(v);
  GroundStateResult r;
  r.energy = energy;
  r.residual = (op.apply(v) - energy * v).norm();
  r.n_iterations = iters;
  r.gap_estimate = gap;
  r.degenerate = gap < kDegeneracyGap;
  r.state = SectorState{op.basis_ptr(), std::move(v)};
  return r;
}

}  // namespace

GroundStateResult ground_state(const SectorOperator& op, const LanczosOptions& opts) {
  if (opts.tol <= 0) throw std::invalid_argument("tol must be positive");
  const auto n = static_cast<Eigen::Index>(op.dim());
  if (n == 0) throw std::invalid_argument("empty sector");
  if (n == 1) {
    const double e = op.diagonal()[0];
    return finish(op, Eigen::VectorXd::Ones(1), e, 1, std::numeric_limits<double>::infinity());
  }
  const int window = static_cast<int>(std::min<Eigen::Index>(std::max(opts.window, 2), n));

  Eigen::MatrixXd basis(n, window);
  Eigen::VectorXd w(n);
  Eigen::VectorXd start = random_unit(n, opts.seed);
  double best_residual = std::numeric_limits<double>::infinity();
  int iters = 0;

  while (true) {
    std::vector<double> alpha;
    std::vector<double> beta;
    basis.col(0) = start;
    int k = 0;
    for (int j = 0; j < window; ++j) {
      op.apply(basis.col(j), w, opts.threads);
      ++iters;
      const double a = basis.col(j).dot(w);
      alpha.push_back(a);
      k = j + 1;
      // Two Gram-Schmidt sweeps against the whole window.
      for (int pass = 0; pass < 2; ++pass) {
        const Eigen::VectorXd coeff = basis.leftCols(k).transpose() * w;
        w.noalias() -= basis.leftCols(k) * coeff;
      }
      const double b = w.norm();
      const double scale = std::abs(a) + (beta.empty() ? 0.0 : beta.back()) + 1.0;
      if (b <= 1e-13 * scale) break;  // invariant subspace
      beta.push_back(b);
      if (j + 1 == window) break;
      basis.col(j + 1) = w / b;
    }

    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < k; ++i) t(i, i) = alpha[static_cast<std::size_t>(i)];
    for (int i = 0; i + 1 < k; ++i) t(i, i + 1) = t(i + 1, i) = beta[static_cast<std::size_t>(i)];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri(t);
    const double theta = tri.eigenvalues()[0];
    const double gap = k > 1 ? tri.eigenvalues()[1] - theta : std::numeric_limits<double>::infinity();
    Eigen::VectorXd ritz = basis.leftCols(k) * tri.eigenvectors().col(0);
    ritz.normalize();

    op.apply(ritz, w, opts.threads);
    ++iters;
    const double energy = ritz.dot(w);
    const double residual = (w - energy * ritz).norm();
    best_residual = std::min(best_residual, residual);
    if (residual <= opts.tol) return finish(op, std::move(ritz), energy, iters, gap);
    if (iters >= opts.max_iter)
      throw NumericalError("Lanczos did not converge within " + std::to_string(opts.max_iter) +
                               " iterations (best residual " + std::to_string(best_residual) + ")",
                           best_residual);
    start = ritz;
  }
}

GroundStateResult dense_ground_state(const SectorOperator& op, std::size_t max_dim) {
  Eigen::MatrixXd h = op.dense_matrix(max_dim);
  const int n = static_cast<int>(h.rows());
  // Only the two lowest eigenpairs; a full decomposition is ~10x slower at N=14.
  const int il = 1, iu = std::min(2, n);
  const double vl = 0, vu = 0, abstol = 0;
  int m = 0, info = 0;
  Eigen::VectorXd w(n);
  Eigen::MatrixXd z(n, iu);
  std::vector<int> isuppz(2 * static_cast<std::size_t>(iu));
  int lwork = -1, liwork = -1, iwork_query = 0;
  double work_query = 0;
  dsyevr_("V", "I", "U", &n, h.data(), &n, &vl, &vu, &il, &iu, &abstol, &m, w.data(), z.data(), &n, isuppz.data(),
          &work_query, &lwork, &iwork_query, &liwork, &info);
  lwork = static_cast<int>(work_query);
  liwork = iwork_query;
  std::vector<double> work(static_cast<std::size_t>(lwork));
  std::vector<int> iwork(static_cast<std::size_t>(liwork));
  dsyevr_("V", "I", "U", &n, h.data(), &n, &vl, &vu, &il, &iu, &abstol, &m, w.data(), z.data(), &n, isuppz.data(),
          work.data(), &lwork, iwork.data(), &liwork, &info);
  if (info != 0 || m < 1) throw NumericalError("dense eigendecomposition failed (dsyevr info " + std::to_string(info) + ")", 0.0);
  const double gap = m > 1 ? w[1] - w[0] : std::numeric_limits<double>::infinity();
  return finish(op, z.col(0), w[0], 0, gap);
}

}  // namespace schwinger
