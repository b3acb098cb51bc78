// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "schwinger/ansatz.hpp"
#include "schwinger/bits.hpp"
#include "schwinger/eigensolver.hpp"
#include "schwinger/fractal_codec.hpp"
#include "schwinger/ground_state_chain.hpp"
#include "schwinger/hamiltonian.hpp"
#include "schwinger/observables.hpp"
#include "schwinger/overlap.hpp"
#include "schwinger/qubism.hpp"
#include "schwinger/reconstruct.hpp"
#include "schwinger/recursion.hpp"
#include "schwinger/reduced_hamiltonian.hpp"
#include "schwinger/sector_basis.hpp"
#include "schwinger/sector_state.hpp"
#include "schwinger/store.hpp"
#include "schwinger/table_io.hpp"
#include "schwinger/weights.hpp"
