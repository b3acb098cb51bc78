// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <utility>

#include <Eigen/Dense>

#include "schwinger/sector_state.hpp"

namespace schwinger {

inline constexpr double kQubismExponent = 0.2;

// 2^{N/2} x 2^{N/2} raster of p^0.2. Row bits are the spins on sites 0, 2, 4, ...
// (site 0 most significant), column bits those on sites 1, 3, 5, ...
struct QubismImage {
  int n_sites = 0;
  double x = 0;
  double mu = 0;
  Eigen::MatrixXd intensity;  // (row, col)

  int side() const { return static_cast<int>(intensity.rows()); }
  // sum of intensity^5, which is the total probability
  double total_probability() const;
};

std::pair<std::uint32_t, std::uint32_t> qubism_pixel(std::uint64_t state, int n_sites);
std::uint64_t qubism_state(std::uint32_t row, std::uint32_t col, int n_sites);

QubismImage state_to_qubism(const SectorState& s, double x = 0, double mu = 0);
// amplitudes over all 2^N configurations
QubismImage full_state_to_qubism(const Eigen::VectorXd& amplitudes, int n_sites);
// probabilities over all 2^N configurations
QubismImage probabilities_to_qubism(const Eigen::VectorXd& probabilities, int n_sites);

// Pixel probabilities (intensity^5) listed by configuration, length 2^N.
Eigen::VectorXd qubism_to_probabilities(const QubismImage& img);

// Binary P5, 16-bit big-endian, sample = round(65535 * intensity / max), plus a
// JSON sidecar at <path>.json holding max_intensity so intensities can be recovered.
void export_pgm(const QubismImage& img, const std::filesystem::path& path);
QubismImage import_pgm(const std::filesystem::path& path);

}  // namespace schwinger
