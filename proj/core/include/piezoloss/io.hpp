// Copyright 2026 The piezoloss authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "piezoloss/database.hpp"
#include "piezoloss/device.hpp"
#include "piezoloss/geometry.hpp"

namespace piezoloss::io {

/// Device budget file: JSON with a thermal block and a region list
/// (label, participation, model kind + database entry name or inline
/// parameters). Quantities accept unit suffixes ("10GHz", "10mK", "2e8A3").
/// Schema violations raise ConfigError with the offending field.
ParticipationBudget load_budget(const std::string& path, const MaterialDatabase& db);

/// Stack profile file: same JSON schema family as the material database;
/// lengths accept unit suffixes (Angstrom and micron included).
StackProfile load_stack(const std::string& path, const MaterialDatabase& db);

/// Serialize a stack back to the same schema (SI numbers, explicit element
/// parameters); load_stack(save_stack(p)) reproduces the profile.
void save_stack(const StackProfile& profile, const std::string& path);

/// Deterministic CSV: fixed scientific formatting, fixed column order,
/// "\n" line endings. Identical inputs produce byte-identical bytes.
std::string spectrum_csv(const std::vector<SpectrumPoint>& points);
std::string budget_csv(const T1Report& report);
std::string materials_csv(const MaterialDatabase& db);

/// Render one floating-point cell the way every CSV writer here does.
std::string csv_number(double x);

} // namespace piezoloss::io
