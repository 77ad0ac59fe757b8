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
#include <string_view>

namespace piezoloss::units {

/// Dimension of a CLI/file quantity. Each dimension has its own accepted
/// suffix table; a bare number is taken as SI.
enum class Dimension {
    frequency,    // Hz, kHz, MHz, GHz
    temperature,  // K, mK, uK
    length,       // m, mm, um, nm, A (angstrom)
    area,         // m2, mm2, um2, nm2, A2
    volume,       // m3, mm3, um3, nm3, A3
    dimensionless // no suffix
};

/// Parse "10GHz", "2.17A", "2e8A3", "0.2um", "10mK", "42" ... into SI.
/// Conversion happens exactly once, here. Whitespace between the number and
/// the suffix is allowed. Throws InvalidInputError on malformed text or a
/// suffix that does not belong to `dim`.
double parse_quantity(std::string_view text, Dimension dim);

/// Human-readable suffix list for a dimension (for error messages / --help).
std::string suffix_list(Dimension dim);

} // namespace piezoloss::units
