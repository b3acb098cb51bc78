// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include <gtest/gtest.h>

#include "schwinger/schwinger.hpp"

namespace schwinger {
namespace {

TEST(Renyi, ClosedForms) {
  Eigen::VectorXd basis_state = Eigen::VectorXd::Zero(8);
  basis_state[3] = 1;
  EXPECT_DOUBLE_EQ(renyi_s2_probabilities(basis_state, 8), 0.0);
  EXPECT_NEAR(renyi_s2_probabilities(Eigen::VectorXd::Constant(8, 1.0 / 8), 8), 1.0, 1e-14);
  auto b = canonical_sector(4);
  SectorState s{b, Eigen::VectorXd::Constant(6, 1.0 / std::sqrt(6.0))};
  EXPECT_NEAR(renyi_s2(s, 16), std::log(6.0) / std::log(16.0), 1e-14);
  EXPECT_NEAR(renyi_s2(s, 16), 0.6462, 1e-4);
  EXPECT_THROW(renyi_s2(s, 1), std::invalid_argument);
}

TEST(Renyi, PermutationInvariant) {
  Eigen::VectorXd p(4);
  p << 0.1, 0.2, 0.3, 0.4;
  Eigen::VectorXd q(4);
  q << 0.4, 0.1, 0.3, 0.2;
  EXPECT_DOUBLE_EQ(renyi_s2_probabilities(p, 16), renyi_s2_probabilities(q, 16));
}

TEST(DominantPixel, SinglePixel) {
  QubismImage img{4, 0, 0, Eigen::MatrixXd::Zero(4, 4)};
  img.intensity(2, 1) = 0.5;
  const DominantPixel d = dominant_pixel(img);
  EXPECT_EQ(d.row, 2u);
  EXPECT_EQ(d.col, 1u);
  EXPECT_EQ(d.state.str(), "1001");
  EXPECT_THROW(dominant_pixel(QubismImage{}), std::invalid_argument);
}

TEST(DominantPixel, ExtremeMasses) {
  for (auto [mu, expected] : {std::pair{10.0, "010101010101"}, std::pair{-10.0, "101010101010"}}) {
    GroundStateProvider prov({1.0, mu, 0.0});
    const SectorState& psi = prov.get(12).state;
    EXPECT_EQ(dominant_pixel(state_to_qubism(psi)).state.str(), expected);
    EXPECT_GT(psi.amplitudes.array().square().maxCoeff(), 0.95);
  }
}

TEST(PhaseScan, GridAndOrdering) {
  const auto grid = mu_grid(-1.5, 0.5, 0.05);
  EXPECT_EQ(grid.size(), 41u);
  EXPECT_NEAR(grid.back(), 0.5, 1e-12);
  auto solve = [](double mu, double* e) {
    GroundStateProvider prov({1.0, mu, 0.0});
    *e = prov.get(6).energy;
    return prov.get(6).state;
  };
  EXPECT_THROW(phase_scan(1.0, {0.1, 0.0}, 6, solve), std::invalid_argument);
  const EntropyScan scan = phase_scan(1.0, {-2.0, -1.0, 0.0, 1.0}, 6, solve);
  EXPECT_EQ(scan.points.size(), 4u);
  for (const auto& pt : scan.points) {
    EXPECT_GE(pt.s2, 0.0);
    EXPECT_LE(pt.s2, 1.0);
  }
  const EntropyScan sector_m = phase_scan(1.0, {0.0}, 6, solve, true);
  EXPECT_DOUBLE_EQ(sector_m.m, 20.0);
}

}  // namespace
}  // namespace schwinger
