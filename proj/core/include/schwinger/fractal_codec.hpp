// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "schwinger/qubism.hpp"
#include "schwinger/sector_state.hpp"

namespace schwinger {

// Partitioned iterated function system: every range block (rx, ry) of side r is
// s * iso(downsample(domain block (dx, dy) of side 2r)) + o.
struct PifsMapping {
  int rx = 0, ry = 0;  // column, row of the range block origin
  int dx = 0, dy = 0;  // column, row of the domain block origin
  int iso = 0;         // 0..7, dihedral group of the square
  double s = 0, o = 0;
  bool operator==(const PifsMapping&) const = default;
};

struct PifsCode {
  int side = 0;
  int range_size = 0;
  double s_max = 0.9;
  std::vector<PifsMapping> mappings;
  bool operator==(const PifsCode&) const = default;
};

struct CodecOptions {
  int range_size = 4;
  int domain_stride = 4;
  double s_max = 0.9;
  int iterations = 12;
};

PifsCode compress(const Eigen::MatrixXd& image, int range_size, int domain_stride, double s_max);
inline PifsCode compress(const Eigen::MatrixXd& image, const CodecOptions& o) {
  return compress(image, o.range_size, o.domain_stride, o.s_max);
}

// Iterates the map from a flat (zero) image at target_side resolution. If
// `differences` is given it receives max|iterate_k - iterate_{k-1}| per step.
Eigen::MatrixXd decompress(const PifsCode& code, int target_side, int n_iterations,
                           std::vector<double>* differences = nullptr);

// One application of the map to `image` (which has the code's native side or a
// power-of-two multiple of it).
Eigen::MatrixXd apply_pifs(const PifsCode& code, const Eigen::MatrixXd& image);

// Squared error of each range block when the map is applied to the source image itself.
std::vector<double> collage_errors(const PifsCode& code, const Eigen::MatrixXd& image);

// r x r block, source coordinates for destination (i, j) under isometry iso.
std::pair<int, int> isometry_source(int iso, int i, int j, int r);

std::string to_json(const PifsCode& code);
PifsCode pifs_from_json(const std::string& text);

// p = intensity^5, restricted to the canonical sector of n_sites and
// renormalised; returned in sector-basis order.
Eigen::VectorXd mask_and_renormalize(const QubismImage& image, int n_sites);
// Same, returned as an image.
QubismImage mask_image(const QubismImage& image, int n_sites);
QubismImage sector_probabilities_to_qubism(const Eigen::VectorXd& p, int n_sites);

// (sum_i sqrt(p_i q_i))^2
double classical_fidelity(const Eigen::VectorXd& p, const Eigen::VectorXd& q);

// Compress the qubism image of the seed state, decompress it at every larger
// even size present in `exact`, mask, and compare with the exact probabilities.
std::map<int, double> codec_fidelity_series(const SectorState& seed, const std::map<int, SectorState>& exact,
                                            const CodecOptions& options);

}  // namespace schwinger
