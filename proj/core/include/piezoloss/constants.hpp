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

namespace piezoloss::constants {

// CODATA 2018 (SI). h and k_B are exact by definition since the 2019
// redefinition; hbar = h / 2pi.
inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double planck = 6.62607015e-34;           // J s, exact
inline constexpr double hbar = 1.054571817646156391e-34;   // J s
inline constexpr double boltzmann = 1.380649e-23;          // J/K, exact
inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F/m
inline constexpr double speed_of_light = 2.99792458e8;     // m/s, exact

inline constexpr double angstrom = 1e-10;                  // m
inline constexpr double micron = 1e-6;                     // m

} // namespace piezoloss::constants
