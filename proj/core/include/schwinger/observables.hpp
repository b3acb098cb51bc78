// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "schwinger/qubism.hpp"
#include "schwinger/sector_state.hpp"

namespace schwinger {

// S_2 = -log(sum_i P_i^2) / log M, so a basis state gives 0 and the uniform
// distribution over M states gives 1.
double renyi_s2(const SectorState& s, double m);
double renyi_s2_probabilities(const Eigen::VectorXd& p, double m);

struct DominantPixel {
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  Bits state;
};

// Brightest pixel; ties go to the lowest (row, col).
DominantPixel dominant_pixel(const QubismImage& img);

struct ScanPoint {
  double mu = 0;
  double energy = 0;
  double s2 = 0;
  Bits dominant;
  double dominant_probability = 0;
};

struct EntropyScan {
  double x = 0;
  int n_sites = 0;
  double m = 0;
  std::vector<ScanPoint> points;

  // mu at which |dS2/dmu| (central differences on interior points) is largest.
  double steepest_mu() const;
  // Number of times the dominant configuration changes along the sweep.
  int dominant_switches() const;
};

// Ground state at each mu, computed by the supplied solver.
using GroundStateFn = std::function<SectorState(double mu, double* energy)>;
EntropyScan phase_scan(double x, const std::vector<double>& mus, int n_sites, const GroundStateFn& solve,
                       bool sector_dimension_m = false,
                       const std::function<void(const ScanPoint&, const SectorState&)>& on_point = {});

// start, start + step, ..., up to stop (inclusive, with a small tolerance).
std::vector<double> mu_grid(double start, double stop, double step);

}  // namespace schwinger
