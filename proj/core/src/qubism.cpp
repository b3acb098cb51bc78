// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#include "schwinger/qubism.hpp"

#include <cmath>
#include <stdexcept>

namespace schwinger {

namespace {

void require_even(int n_sites) {
  if (n_sites <= 0 || n_sites % 2 != 0) throw std::invalid_argument("qubism needs an even, positive number of sites");
  if (n_sites > 30) throw std::invalid_argument("qubism image too large");
}

}  // namespace

double QubismImage::total_probability() const {
  return intensity.array().pow(1.0 / kQubismExponent).sum();
}

std::pair<std::uint32_t, std::uint32_t> qubism_pixel(std::uint64_t state, int n_sites) {
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  for (int k = 0; k < n_sites / 2; ++k) {
    row = (row << 1) | static_cast<std::uint32_t>((state >> (n_sites - 1 - 2 * k)) & 1u);
    col = (col << 1) | static_cast<std::uint32_t>((state >> (n_sites - 2 - 2 * k)) & 1u);
  }
  return {row, col};
}

std::uint64_t qubism_state(std::uint32_t row, std::uint32_t col, int n_sites) {
  const int half = n_sites / 2;
  std::uint64_t s = 0;
  for (int k = 0; k < half; ++k) {
    s = (s << 1) | ((row >> (half - 1 - k)) & 1u);
    s = (s << 1) | ((col >> (half - 1 - k)) & 1u);
  }
  return s;
}

QubismImage state_to_qubism(const SectorState& s, double x, double mu) {
  const int n = s.n_sites();
  require_even(n);
  const Eigen::Index side = Eigen::Index{1} << (n / 2);
  QubismImage img{n, x, mu, Eigen::MatrixXd::Zero(side, side)};
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double a = s.amplitudes[static_cast<Eigen::Index>(i)];
    const auto [r, c] = qubism_pixel(s.basis->state(i), n);
    img.intensity(r, c) = std::pow(a * a, kQubismExponent);
  }
  return img;
}

QubismImage probabilities_to_qubism(const Eigen::VectorXd& probabilities, int n_sites) {
  require_even(n_sites);
  if (probabilities.size() != (Eigen::Index{1} << n_sites)) throw std::invalid_argument("expected 2^N probabilities");
  const Eigen::Index side = Eigen::Index{1} << (n_sites / 2);
  QubismImage img{n_sites, 0, 0, Eigen::MatrixXd::Zero(side, side)};
  for (Eigen::Index s = 0; s < probabilities.size(); ++s) {
    if (probabilities[s] < 0) throw std::invalid_argument("negative probability");
    const auto [r, c] = qubism_pixel(static_cast<std::uint64_t>(s), n_sites);
    img.intensity(r, c) = std::pow(probabilities[s], kQubismExponent);
  }
  return img;
}

QubismImage full_state_to_qubism(const Eigen::VectorXd& amplitudes, int n_sites) {
  return probabilities_to_qubism(amplitudes.array().square().matrix(), n_sites);
}

Eigen::VectorXd qubism_to_probabilities(const QubismImage& img) {
  const int n = img.n_sites;
  require_even(n);
  if (img.side() != (1 << (n / 2))) throw std::invalid_argument("image side does not match 2^{N/2}");
  Eigen::VectorXd p(Eigen::Index{1} << n);
  for (Eigen::Index s = 0; s < p.size(); ++s) {
    const auto [r, c] = qubism_pixel(static_cast<std::uint64_t>(s), n);
    p[s] = std::pow(std::max(0.0, img.intensity(r, c)), 1.0 / kQubismExponent);
  }
  return p;
}

}  // namespace schwinger
