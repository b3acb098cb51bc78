// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <ostream>
#include <string>

#include "schwinger/weights.hpp"

namespace schwinger {

// Long format "N,label,value": one row per term weight, then f, g, p and the
// coverage deficit for each N. Values use 17 significant digits.
void write_weight_csv(const WeightTable& t, std::ostream& out);
std::string weight_table_json(const WeightTable& t);

// "N,energy"
void write_energy_csv(const std::map<int, double>& energies, std::ostream& out);

std::string format_g17(double v);

}  // namespace schwinger
