// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#include "schwinger/overlap.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace schwinger {

double prefixed_overlap(const SectorState& big, Bits prefix, const SectorState& small, bool flip) {
  const int m = small.n_sites();
  if (big.n_sites() != prefix.length + m)
    throw std::invalid_argument("overlap: " + std::to_string(big.n_sites()) + "-site state vs prefix of length " +
                                std::to_string(prefix.length) + " and " + std::to_string(m) + "-site state");
  const SectorBasis& bb = *big.basis;
  const SectorBasis& sb = *small.basis;
  const int ones = prefix.popcount() + (flip ? m - sb.n_up() : sb.n_up());
  if (ones != bb.n_up()) return 0.0;  // different charge sectors
  const std::uint64_t head = prefix.value << m;
  const std::uint64_t mask = low_mask(m);
  double acc = 0;
  for (std::size_t j = 0; j < sb.size(); ++j) {
    const std::uint64_t s = flip ? (~sb.state(j) & mask) : sb.state(j);
    acc += small.amplitudes[static_cast<Eigen::Index>(j)] * big.amplitudes[static_cast<Eigen::Index>(bb.index_of(head | s))];
  }
  return acc;
}

double extract_weight(const SectorState& psi_n, const SectorState& psi_small, const AnsatzTerm& t) {
  return prefixed_overlap(psi_n, t.prefix, psi_small, t.flipped);
}

double projector_norm(const SectorState& psi, Bits prefix) {
  const int n = psi.n_sites();
  if (prefix.length > n) throw std::invalid_argument("prefix longer than the chain");
  const int shift = n - prefix.length;
  double acc = 0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if ((psi.basis->state(i) >> shift) == prefix.value) {
      const double a = psi.amplitudes[static_cast<Eigen::Index>(i)];
      acc += a * a;
    }
  }
  return std::sqrt(acc);
}

AuxDef aux_definition(Aux which) {
  switch (which) {
    case Aux::f: return {Bits::parse("1").complement(), true};
    case Aux::g: return {Bits::parse("10").complement(), false};
    case Aux::p: return {Bits::parse("101").complement(), true};
    case Aux::q: return {Bits::parse("1110100").complement(), true};
  }
  throw std::invalid_argument("unknown auxiliary overlap");
}

}  // namespace schwinger
