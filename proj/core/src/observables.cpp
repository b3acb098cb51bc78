// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#include "schwinger/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace schwinger {

double renyi_s2_probabilities(const Eigen::VectorXd& p, double m) {
  if (!(m >= 2)) throw std::invalid_argument("Renyi entropy needs M >= 2");
  const double purity = p.squaredNorm();
  if (!(purity > 0)) throw std::invalid_argument("zero distribution");
  return -std::log(purity) / std::log(m);
}

double renyi_s2(const SectorState& s, double m) {
  return renyi_s2_probabilities(s.amplitudes.array().square().matrix(), m);
}

DominantPixel dominant_pixel(const QubismImage& img) {
  if (img.intensity.size() == 0) throw std::invalid_argument("empty image");
  DominantPixel d;
  double best = -1;
  for (Eigen::Index r = 0; r < img.intensity.rows(); ++r)
    for (Eigen::Index c = 0; c < img.intensity.cols(); ++c)
      if (img.intensity(r, c) > best) {
        best = img.intensity(r, c);
        d.row = static_cast<std::uint32_t>(r);
        d.col = static_cast<std::uint32_t>(c);
      }
  d.state = Bits{qubism_state(d.row, d.col, img.n_sites), img.n_sites};
  return d;
}

double EntropyScan::steepest_mu() const {
  if (points.size() < 3) throw std::invalid_argument("need at least three scan points");
  double best = -1;
  double where = points[1].mu;
  for (std::size_t i = 1; i + 1 < points.size(); ++i) {
    const double d = std::abs((points[i + 1].s2 - points[i - 1].s2) / (points[i + 1].mu - points[i - 1].mu));
    if (d > best) {
      best = d;
      where = points[i].mu;
    }
  }
  return where;
}

int EntropyScan::dominant_switches() const {
  int n = 0;
  for (std::size_t i = 1; i < points.size(); ++i)
    if (!(points[i].dominant == points[i - 1].dominant)) ++n;
  return n;
}

EntropyScan phase_scan(double x, const std::vector<double>& mus, int n_sites, const GroundStateFn& solve,
                       bool sector_dimension_m, const std::function<void(const ScanPoint&, const SectorState&)>& on_point) {
  for (std::size_t i = 1; i < mus.size(); ++i)
    if (!(mus[i] > mus[i - 1])) throw std::invalid_argument("mu list must be strictly increasing");
  EntropyScan scan;
  scan.x = x;
  scan.n_sites = n_sites;
  for (double mu : mus) {
    ScanPoint pt;
    pt.mu = mu;
    const SectorState psi = solve(mu, &pt.energy);
    scan.m = sector_dimension_m ? static_cast<double>(psi.size()) : std::ldexp(1.0, n_sites);
    pt.s2 = renyi_s2(psi, scan.m);
    Eigen::Index arg = 0;
    pt.dominant_probability = psi.amplitudes.array().square().maxCoeff(&arg);
    pt.dominant = psi.basis->bits(static_cast<std::size_t>(arg));
    if (on_point) on_point(pt, psi);
    scan.points.push_back(pt);
  }
  return scan;
}

std::vector<double> mu_grid(double start, double stop, double step) {
  if (!(step > 0)) throw std::invalid_argument("mu step must be positive");
  std::vector<double> out;
  const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9));
  for (long i = 0; i <= count; ++i) out.push_back(start + static_cast<double>(i) * step);
  return out;
}

}  // namespace schwinger
