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

#include <array>
#include <complex>

#include "piezoloss/geometry.hpp"

namespace piezoloss {

/// Spatial Fourier overlap int d^3r g(r).psi(r) exp(-i k.r), split by the
/// quasi-1D reduction:
///
///  - `axial` is the planar (slab + interface-delta) part per unit
///    transverse area, i.e. the 1D integral int dz g(z) psi_z(z)
///    exp(-i k_z z) in C/m. It is nonzero only when the transverse momentum
///    constraint k_perp = q_perp holds (`transverse_matched`); the full 3D
///    value is axial * A at matching k_perp.
///  - `point` is the junction part, the genuine 3D value in C m.
///  - `singular` marks a Dirac spike from an infinite slab whose k_z
///    matches the mode exactly (the finite `axial` excludes it).
///
/// Conjugation symmetry F(-k) = conj(F(k)) holds for real-coefficient
/// profiles and real-amplitude modes.
struct FormFactor {
    std::complex<double> axial{0.0, 0.0}; // C/m, per unit transverse area
    std::complex<double> point{0.0, 0.0}; // C m
    std::array<double, 3> k{};            // rad/m
    bool transverse_matched = false;
    bool singular = false;
};

/// Evaluate the coupling form factor at wavevector k. Analytic for slabs,
/// deltas and junctions against plane-wave/uniform modes; numerical
/// quadrature against sampled modes (the grid must resolve the requested
/// k_z with at least 10 samples per wavelength, else AccuracyError).
FormFactor form_factor(const StackProfile& profile, const ModeShape& mode,
                       const std::array<double, 3>& k);

} // namespace piezoloss
