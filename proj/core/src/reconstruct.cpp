// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#include "schwinger/reconstruct.hpp"

#include <stdexcept>
#include <string>

namespace schwinger {

SectorState assemble_term(const AnsatzTerm& t, int n, const SectorState& smaller) {
  const int m = n - t.offset();
  if (smaller.n_sites() != m)
    throw std::invalid_argument("term " + t.label + " at N=" + std::to_string(n) + " needs a " + std::to_string(m) +
                                "-site state");
  auto basis = canonical_sector(n);
  const SectorBasis& sb = *smaller.basis;
  const int ones = t.prefix.popcount() + (t.flipped ? m - sb.n_up() : sb.n_up());
  if (ones != basis->n_up())
    throw std::logic_error("term " + t.label + " leaves the canonical sector at N=" + std::to_string(n));
  SectorState out{basis, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis->size()))};
  const std::uint64_t head = t.prefix.value << m;
  const std::uint64_t mask = low_mask(m);
  for (std::size_t j = 0; j < sb.size(); ++j) {
    const std::uint64_t s = t.flipped ? (~sb.state(j) & mask) : sb.state(j);
    out.amplitudes[static_cast<Eigen::Index>(basis->index_of(head | s))] = smaller.amplitudes[static_cast<Eigen::Index>(j)];
  }
  return out;
}

SectorState assemble(const AnsatzSpec& spec, int n, const std::vector<double>& weights,
                     const std::map<int, SectorState>& states) {
  if (weights.size() != spec.size()) throw std::invalid_argument("weight vector does not match the ansatz size");
  auto basis = canonical_sector(n);
  SectorState out{basis, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis->size()))};
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (weights[i] == 0.0) continue;
    const AnsatzTerm& t = term(spec.terms[i]);
    auto it = states.find(n - t.offset());
    if (it == states.end()) throw MissingData("reconstruction needs the N=" + std::to_string(n - t.offset()) + " state");
    out.amplitudes += weights[i] * assemble_term(t, n, it->second).amplitudes;
  }
  const double norm = out.amplitudes.norm();
  if (norm == 0.0) throw std::invalid_argument("all weights vanish: nothing to assemble");
  out.amplitudes /= norm;
  return out;
}

std::map<int, SectorState> reconstruct_states(const AnsatzSpec& spec, const SeedStates& seeds, int n_seed,
                                              const std::map<int, std::vector<double>>& weights, int n_target) {
  std::map<int, SectorState> states;
  for (int m = 0; m <= n_seed; ++m) states.emplace(m, seeds.state(m));
  for (int n = n_seed + 1; n <= n_target; ++n) {
    auto it = weights.find(n);
    if (it == weights.end()) throw MissingData("no weights for N=" + std::to_string(n));
    states.emplace(n, assemble(spec, n, it->second, states));
  }
  return states;
}

Eigen::MatrixXd reduced_hamiltonian_oracle(const AnsatzSpec& spec, int n, const ModelParams& params,
                                           const SeedStates& seeds) {
  const auto k = static_cast<Eigen::Index>(spec.size());
  auto basis = canonical_sector(n);
  const SectorOperator op(basis, params);
  Eigen::MatrixXd phi(static_cast<Eigen::Index>(basis->size()), k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const AnsatzTerm& t = term(spec.terms[static_cast<std::size_t>(i)]);
    phi.col(i) = assemble_term(t, n, seeds.state(n - t.offset())).amplitudes;
  }
  Eigen::MatrixXd hphi(phi.rows(), k);
  for (Eigen::Index i = 0; i < k; ++i) hphi.col(i) = op.apply(phi.col(i));
  return phi.transpose() * hphi;
}

}  // namespace schwinger
