// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#include "schwinger/fractal_codec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace schwinger {

namespace {

bool power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

// 2x2 average of the (2r x 2r) block at (row0, col0).
Eigen::MatrixXd downsample(const Eigen::MatrixXd& img, int row0, int col0, int r) {
  Eigen::MatrixXd d(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      d(i, j) = 0.25 * (img(row0 + 2 * i, col0 + 2 * j) + img(row0 + 2 * i + 1, col0 + 2 * j) +
                        img(row0 + 2 * i, col0 + 2 * j + 1) + img(row0 + 2 * i + 1, col0 + 2 * j + 1));
  return d;
}

Eigen::MatrixXd transform(const Eigen::MatrixXd& block, int iso) {
  const int r = static_cast<int>(block.rows());
  Eigen::MatrixXd out(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const auto [si, sj] = isometry_source(iso, i, j, r);
      out(i, j) = block(si, sj);
    }
  return out;
}

int scale_of(const PifsCode& code, int target_side) {
  if (!power_of_two(target_side)) throw std::invalid_argument("target side must be a power of two");
  if (target_side < code.side || target_side % code.side != 0)
    throw std::invalid_argument("target side must be a power-of-two multiple of the encoded side");
  return target_side / code.side;
}

}  // namespace

std::pair<int, int> isometry_source(int iso, int i, int j, int r) {
  const int m = r - 1;
  switch (iso) {
    case 0: return {i, j};
    case 1: return {m - j, i};      // rotate 90
    case 2: return {m - i, m - j};  // rotate 180
    case 3: return {j, m - i};      // rotate 270
    case 4: return {i, m - j};      // mirror left-right
    case 5: return {j, i};          // transpose
    case 6: return {m - i, j};      // mirror top-bottom
    case 7: return {m - j, m - i};  // anti-transpose
  }
  throw std::invalid_argument("isometry index must be in 0..7");
}

PifsCode compress(const Eigen::MatrixXd& image, int range_size, int domain_stride, double s_max) {
  const int side = static_cast<int>(image.rows());
  if (image.cols() != side) throw std::invalid_argument("codec needs a square image");
  if (range_size < 1 || side % range_size != 0) throw std::invalid_argument("image side must be divisible by range size");
  if (side < 2 * range_size) throw std::invalid_argument("image side must be at least twice the range size");
  if (domain_stride < 1) throw std::invalid_argument("domain stride must be positive");
  if (!(s_max >= 0 && s_max < 1)) throw std::invalid_argument("s_max must lie in [0, 1)");
  const int r = range_size;
  const double n = static_cast<double>(r * r);

  struct Candidate {
    int dx, dy, iso;
    Eigen::MatrixXd block;
    double sum, sum_sq;
  };
  std::vector<Candidate> candidates;
  for (int dy = 0; dy + 2 * r <= side; dy += domain_stride)
    for (int dx = 0; dx + 2 * r <= side; dx += domain_stride) {
      const Eigen::MatrixXd d = downsample(image, dy, dx, r);
      for (int iso = 0; iso < 8; ++iso) {
        Eigen::MatrixXd t = transform(d, iso);
        const double s = t.sum();
        const double s2 = t.squaredNorm();
        candidates.push_back({dx, dy, iso, std::move(t), s, s2});
      }
    }

  PifsCode code{side, r, s_max, {}};
  for (int ry = 0; ry < side; ry += r)
    for (int rx = 0; rx < side; rx += r) {
      const Eigen::MatrixXd range = image.block(ry, rx, r, r);
      const double rs = range.sum();
      const double rs2 = range.squaredNorm();
      PifsMapping best{rx, ry, 0, 0, 0, 0.0, rs / n};
      double best_err = std::numeric_limits<double>::infinity();
      for (const Candidate& c : candidates) {
        const double cross = c.block.cwiseProduct(range).sum();
        const double denom = n * c.sum_sq - c.sum * c.sum;
        double s = denom > 1e-14 * n * std::max(c.sum_sq, 1e-300) ? (n * cross - c.sum * rs) / denom : 0.0;
        s = std::clamp(s, -s_max, s_max);
        const double o = (rs - s * c.sum) / n;
        // sum (s d + o - r)^2 expanded
        const double err = s * s * c.sum_sq + n * o * o + rs2 + 2 * s * o * c.sum - 2 * s * cross - 2 * o * rs;
        if (err < best_err - 1e-15) {
          best_err = err;
          best = PifsMapping{rx, ry, c.dx, c.dy, c.iso, s, o};
        }
      }
      code.mappings.push_back(best);
    }
  return code;
}

Eigen::MatrixXd apply_pifs(const PifsCode& code, const Eigen::MatrixXd& image) {
  const int target = static_cast<int>(image.rows());
  const int k = scale_of(code, target);
  const int r = code.range_size * k;
  Eigen::MatrixXd out(target, target);
  for (const PifsMapping& m : code.mappings) {
    const Eigen::MatrixXd d = transform(downsample(image, m.dy * k, m.dx * k, r), m.iso);
    out.block(m.ry * k, m.rx * k, r, r) = (m.s * d).array() + m.o;
  }
  return out;
}

Eigen::MatrixXd decompress(const PifsCode& code, int target_side, int n_iterations, std::vector<double>* differences) {
  scale_of(code, target_side);
  if (n_iterations < 1) throw std::invalid_argument("need at least one iteration");
  Eigen::MatrixXd img = Eigen::MatrixXd::Zero(target_side, target_side);
  if (differences) differences->clear();
  for (int it = 0; it < n_iterations; ++it) {
    Eigen::MatrixXd next = apply_pifs(code, img);
    if (differences) differences->push_back((next - img).cwiseAbs().maxCoeff());
    img = std::move(next);
  }
  return img;
}

std::vector<double> collage_errors(const PifsCode& code, const Eigen::MatrixXd& image) {
  const Eigen::MatrixXd mapped = apply_pifs(code, image);
  std::vector<double> errs;
  const int r = code.range_size * (static_cast<int>(image.rows()) / code.side);
  const int k = static_cast<int>(image.rows()) / code.side;
  for (const PifsMapping& m : code.mappings)
    errs.push_back((mapped.block(m.ry * k, m.rx * k, r, r) - image.block(m.ry * k, m.rx * k, r, r)).squaredNorm());
  return errs;
}

std::string to_json(const PifsCode& code) {
  nlohmann::json j;
  j["side"] = code.side;
  j["range_size"] = code.range_size;
  j["s_max"] = code.s_max;
  auto& arr = j["mappings"] = nlohmann::json::array();
  for (const auto& m : code.mappings)
    arr.push_back({{"rx", m.rx}, {"ry", m.ry}, {"dx", m.dx}, {"dy", m.dy}, {"iso", m.iso}, {"s", m.s}, {"o", m.o}});
  return j.dump(1);
}

PifsCode pifs_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    PifsCode code;
    code.side = j.at("side").get<int>();
    code.range_size = j.at("range_size").get<int>();
    code.s_max = j.value("s_max", 0.9);
    for (const auto& m : j.at("mappings"))
      code.mappings.push_back({m.at("rx").get<int>(), m.at("ry").get<int>(), m.at("dx").get<int>(),
                               m.at("dy").get<int>(), m.at("iso").get<int>(), m.at("s").get<double>(),
                               m.at("o").get<double>()});
    return code;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed PIFS code: ") + e.what());
  }
}

Eigen::VectorXd mask_and_renormalize(const QubismImage& image, int n_sites) {
  if (image.side() != (1 << (n_sites / 2)) || n_sites % 2 != 0)
    throw std::invalid_argument("image side must be 2^{N/2} for even N");
  auto basis = canonical_sector(n_sites);
  Eigen::VectorXd p(static_cast<Eigen::Index>(basis->size()));
  for (std::size_t i = 0; i < basis->size(); ++i) {
    const auto [r, c] = qubism_pixel(basis->state(i), n_sites);
    p[static_cast<Eigen::Index>(i)] = std::pow(std::max(0.0, image.intensity(r, c)), 1.0 / kQubismExponent);
  }
  const double total = p.sum();
  if (!(total > 0)) throw std::invalid_argument("image has no weight inside the charge sector");
  return p / total;
}

QubismImage sector_probabilities_to_qubism(const Eigen::VectorXd& p, int n_sites) {
  auto basis = canonical_sector(n_sites);
  if (static_cast<std::size_t>(p.size()) != basis->size()) throw std::invalid_argument("probability vector size mismatch");
  const Eigen::Index side = Eigen::Index{1} << (n_sites / 2);
  QubismImage img{n_sites, 0, 0, Eigen::MatrixXd::Zero(side, side)};
  for (std::size_t i = 0; i < basis->size(); ++i) {
    const auto [r, c] = qubism_pixel(basis->state(i), n_sites);
    img.intensity(r, c) = std::pow(p[static_cast<Eigen::Index>(i)], kQubismExponent);
  }
  return img;
}

QubismImage mask_image(const QubismImage& image, int n_sites) {
  QubismImage out = sector_probabilities_to_qubism(mask_and_renormalize(image, n_sites), n_sites);
  out.x = image.x;
  out.mu = image.mu;
  return out;
}

double classical_fidelity(const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
  if (p.size() != q.size()) throw std::invalid_argument("distributions differ in length");
  const double bc = (p.array().max(0.0) * q.array().max(0.0)).sqrt().sum();
  return bc * bc;
}

std::map<int, double> codec_fidelity_series(const SectorState& seed, const std::map<int, SectorState>& exact,
                                            const CodecOptions& options) {
  const QubismImage img = state_to_qubism(seed);
  const PifsCode code = compress(img.intensity, options);
  std::map<int, double> out;
  for (const auto& [n, psi] : exact) {
    if (n < seed.n_sites() || n % 2 != 0) continue;
    QubismImage big;
    big.n_sites = n;
    big.intensity = decompress(code, 1 << (n / 2), options.iterations);
    const Eigen::VectorXd p = mask_and_renormalize(big, n);
    out[n] = classical_fidelity(p, psi.amplitudes.array().square().matrix());
  }
  return out;
}

}  // namespace schwinger
