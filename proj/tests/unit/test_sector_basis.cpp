// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#include <bit>

#include <gtest/gtest.h>

#include "schwinger/sector_basis.hpp"
#include "schwinger/sector_state.hpp"

namespace schwinger {
namespace {

TEST(SectorBasis, SizeIsBinomial) {
  EXPECT_EQ(build_sector(12, 6)->size(), 924u);
  for (int n = 0; n <= 24; ++n) EXPECT_EQ(build_sector(n, n / 2)->size(), binomial(n, n / 2)) << n;
}

TEST(SectorBasis, TwoSiteOrder) {
  auto b = build_sector(2, 1);
  ASSERT_EQ(b->size(), 2u);
  EXPECT_EQ(b->bits(0).str(), "01");
  EXPECT_EQ(b->bits(1).str(), "10");
}

TEST(SectorBasis, FourSiteEnds) {
  auto b = build_sector(4, 2);
  ASSERT_EQ(b->size(), 6u);
  EXPECT_EQ(b->bits(0).str(), "0011");
  EXPECT_EQ(b->bits(5).str(), "1100");
}

TEST(SectorBasis, RejectsBadOccupation) {
  EXPECT_THROW(build_sector(4, 5), std::invalid_argument);
  EXPECT_THROW(build_sector(4, -1), std::invalid_argument);
}

TEST(SectorBasis, InvariantsExhaustive) {
  for (int n = 1; n <= 16; ++n) {
    for (int k = 0; k <= n; ++k) {
      auto b = build_sector(n, k);
      ASSERT_EQ(b->size(), binomial(n, k));
      for (std::size_t i = 0; i < b->size(); ++i) {
        ASSERT_EQ(std::popcount(b->state(i)), k);
        ASSERT_EQ(b->index_of(b->state(i)), i);
        if (i > 0) ASSERT_LT(b->state(i - 1), b->state(i));
      }
    }
  }
}

TEST(SectorBasis, FindRejectsOtherSectors) {
  auto b = build_sector(6, 3);
  EXPECT_FALSE(b->find(0b000011u).has_value());
  EXPECT_FALSE(b->find(0b1000111u).has_value());
  EXPECT_EQ(b->find(0b000111u).value(), 0u);
}

TEST(SectorBasis, CanonicalSector) {
  EXPECT_EQ(canonical_sector_for(12), 6);
  EXPECT_EQ(canonical_sector_for(2), 1);
  // Odd chains use n_up = (N-1)/2 (README, "Conventions").
  EXPECT_EQ(canonical_sector_for(11), 5);
  EXPECT_EQ(canonical_sector_for(1), 0);
}

TEST(SectorState, BitFlipReversesOrder) {
  auto b = build_sector(5, 2);
  Eigen::VectorXd v = Eigen::VectorXd::LinSpaced(static_cast<Eigen::Index>(b->size()), 1, 10);
  SectorState s{b, v};
  SectorState t = bit_flip(s);
  EXPECT_EQ(t.basis->n_up(), 3);
  for (std::size_t i = 0; i < b->size(); ++i) {
    const std::uint64_t flipped = ~b->state(i) & low_mask(5);
    EXPECT_EQ(t.amplitudes[static_cast<Eigen::Index>(t.basis->index_of(flipped))], v[static_cast<Eigen::Index>(i)]);
  }
}

TEST(SectorState, PhaseConvention) {
  Eigen::VectorXd v(4);
  v << 0.1, -0.7, 0.7, 0.2;
  apply_phase_convention(v);
  EXPECT_GT(v[1], 0);  // tie between 1 and 2 resolved by the lower index
  Eigen::VectorXd w = v;
  apply_phase_convention(w);
  EXPECT_EQ(v, w);
}

TEST(Bits, ParseAndComplement) {
  const Bits b = Bits::parse("0011");
  EXPECT_EQ(b.value, 3u);
  EXPECT_EQ(b.complement().str(), "1100");
  EXPECT_EQ(concat(Bits::parse("10"), Bits::parse("011")).str(), "10011");
  EXPECT_THROW(Bits::parse("012"), std::invalid_argument);
}

}  // namespace
}  // namespace schwinger
