// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include <gtest/gtest.h>

#include "schwinger/schwinger.hpp"

namespace schwinger {
namespace {

TEST(Codec, ConstantImage) {
  const Eigen::MatrixXd img = Eigen::MatrixXd::Constant(16, 16, 0.37);
  const PifsCode code = compress(img, 4, 4, 0.9);
  EXPECT_EQ(code.mappings.size(), 16u);
  for (const auto& m : code.mappings) {
    EXPECT_EQ(m.s, 0.0);
    EXPECT_NEAR(m.o, 0.37, 1e-15);
  }
  EXPECT_LT((decompress(code, 16, 3) - img).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((decompress(code, 64, 3).array() - 0.37).abs().maxCoeff(), 1e-15);
}

// Fixed point of a known map: each quadrant is a half-size copy of the whole.
Eigen::MatrixXd self_similar(int side) {
  Eigen::MatrixXd img = Eigen::MatrixXd::Constant(side, side, 0.5);
  for (int it = 0; it < 60; ++it) {
    Eigen::MatrixXd next(side, side);
    const int h = side / 2;
    Eigen::MatrixXd small(h, h);
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < h; ++j)
        small(i, j) = 0.25 * (img(2 * i, 2 * j) + img(2 * i + 1, 2 * j) + img(2 * i, 2 * j + 1) + img(2 * i + 1, 2 * j + 1));
    next.block(0, 0, h, h) = 0.5 * small.array() + 0.1;
    next.block(0, h, h, h) = 0.5 * small.array() + 0.3;
    next.block(h, 0, h, h) = 0.5 * small.array() + 0.0;
    next.block(h, h, h, h) = 0.5 * small.array() + 0.2;
    img = next;
  }
  return img;
}

TEST(Codec, ExactlySelfSimilar) {
  const Eigen::MatrixXd img = self_similar(16);
  const PifsCode code = compress(img, 8, 8, 0.9);
  for (double e : collage_errors(code, img)) EXPECT_LT(e, 1e-10);
}

TEST(Codec, Deterministic) {
  GroundStateProvider prov({1.0, 0.1, 0.0});
  const QubismImage img = state_to_qubism(prov.get(12).state);
  EXPECT_EQ(compress(img.intensity, 4, 4, 0.9), compress(img.intensity, 4, 4, 0.9));
}

TEST(Codec, ContractionAndQuality) {
  GroundStateProvider prov({1.0, 0.1, 0.0});
  const QubismImage img = state_to_qubism(prov.get(12).state);
  const PifsCode code = compress(img.intensity, 4, 4, 0.9);
  for (const auto& m : code.mappings) EXPECT_LE(std::abs(m.s), 0.9);
  std::vector<double> diffs;
  const Eigen::MatrixXd out = decompress(code, 64, 12, &diffs);
  for (std::size_t k = 1; k < diffs.size(); ++k) EXPECT_LE(diffs[k], 0.9 * diffs[k - 1] + 1e-15);
  const double mse = (out - img.intensity).squaredNorm() / static_cast<double>(out.size());
  const double psnr = 10 * std::log10(img.intensity.maxCoeff() * img.intensity.maxCoeff() / mse);
  EXPECT_GT(psnr, 20.0);
  std::vector<double> big;
  decompress(code, 128, 12, &big);
  for (std::size_t k = 1; k < big.size(); ++k) EXPECT_LE(big[k], 0.9 * big[k - 1] + 1e-15);
}

TEST(Codec, JsonRoundTrip) {
  const Eigen::MatrixXd img = self_similar(16);
  const PifsCode code = compress(img, 4, 4, 0.8);
  EXPECT_EQ(pifs_from_json(to_json(code)), code);
  EXPECT_THROW(pifs_from_json("{\"side\": 4}"), std::runtime_error);
}

TEST(Codec, Preconditions) {
  EXPECT_THROW(compress(Eigen::MatrixXd::Ones(12, 12), 8, 8, 0.9), std::invalid_argument);
  EXPECT_THROW(compress(Eigen::MatrixXd::Ones(8, 8), 8, 8, 0.9), std::invalid_argument);
  EXPECT_THROW(compress(Eigen::MatrixXd::Ones(8, 8), 2, 2, 1.0), std::invalid_argument);
  const PifsCode code = compress(Eigen::MatrixXd::Ones(8, 8), 2, 2, 0.9);
  EXPECT_THROW(decompress(code, 12, 2), std::invalid_argument);
  EXPECT_THROW(decompress(code, 4, 2), std::invalid_argument);
}

TEST(Isometries, AreDistinctPermutations) {
  const int r = 4;
  std::set<std::vector<int>> seen;
  for (int iso = 0; iso < 8; ++iso) {
    std::vector<int> perm;
    std::set<int> image;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        const auto [a, b] = isometry_source(iso, i, j, r);
        perm.push_back(a * r + b);
        image.insert(a * r + b);
      }
    EXPECT_EQ(image.size(), 16u);
    seen.insert(perm);
  }
  EXPECT_EQ(seen.size(), 8u);
}

TEST(Mask, UniformFullSpace) {
  const Eigen::VectorXd p = Eigen::VectorXd::Constant(16, 1.0 / 16);
  const Eigen::VectorXd q = mask_and_renormalize(probabilities_to_qubism(p, 4), 4);
  ASSERT_EQ(q.size(), 6);
  EXPECT_LT((q.array() - 1.0 / 6).abs().maxCoeff(), 1e-12);
}

TEST(Mask, IdempotentAndSectorPreserving) {
  GroundStateProvider prov({1.0, 0.1, 0.0});
  const QubismImage img = state_to_qubism(prov.get(10).state);
  const Eigen::VectorXd once = mask_and_renormalize(img, 10);
  EXPECT_LT((once - prov.get(10).state.amplitudes.array().square().matrix()).cwiseAbs().maxCoeff(), 1e-12);
  const QubismImage m1 = mask_image(img, 10);
  const QubismImage m2 = mask_image(m1, 10);
  EXPECT_LT((mask_and_renormalize(m2, 10) - once).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(once.sum(), 1.0, 1e-12);
  EXPECT_THROW(mask_and_renormalize(QubismImage{4, 0, 0, Eigen::MatrixXd::Zero(4, 4)}, 4), std::invalid_argument);
}

TEST(ClassicalFidelity, Basics) {
  Eigen::Vector3d p(0.5, 0.5, 0), q(0, 0, 1);
  EXPECT_DOUBLE_EQ(classical_fidelity(p, q), 0.0);
  EXPECT_NEAR(classical_fidelity(p, p), 1.0, 1e-15);
}

TEST(CodecSeries, SameSizeIsClose) {
  GroundStateProvider prov({1.0, 0.1, 0.0});
  std::map<int, SectorState> exact;
  for (int n : {10, 12}) exact.emplace(n, prov.get(n).state);
  const auto series = codec_fidelity_series(prov.get(10).state, exact, CodecOptions{});
  ASSERT_EQ(series.size(), 2u);
  EXPECT_GT(series.at(10), 0.9);
  EXPECT_GE(series.at(10), series.at(12));
}

}  // namespace
}  // namespace schwinger
