// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <vector>

#include <Eigen/Dense>

#include "schwinger/ansatz.hpp"
#include "schwinger/ground_state_chain.hpp"
#include "schwinger/hamiltonian.hpp"
#include "schwinger/sector_state.hpp"

namespace schwinger {

// |prefix> (x) (T)|smaller> as a vector in the canonical sector of n sites.
SectorState assemble_term(const AnsatzTerm& t, int n, const SectorState& smaller);

// sum_s w_s |term_s> at size n from the states in `states`, normalised.
SectorState assemble(const AnsatzSpec& spec, int n, const std::vector<double>& weights,
                     const std::map<int, SectorState>& states);

// Rebuilds states n_seed+1..n_target level by level, renormalising at every
// level. weights[n] is the spec-order weight vector used at size n.
std::map<int, SectorState> reconstruct_states(const AnsatzSpec& spec, const SeedStates& seeds, int n_seed,
                                              const std::map<int, std::vector<double>>& weights, int n_target);

// <phi_i|H|phi_j> on explicitly assembled basis vectors (the oracle for the
// closed-form reduced Hamiltonian).
Eigen::MatrixXd reduced_hamiltonian_oracle(const AnsatzSpec& spec, int n, const ModelParams& params,
                                           const SeedStates& seeds);

}  // namespace schwinger
