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

#include <optional>
#include <string>

#include "piezoloss/constants.hpp"

namespace piezoloss {

/// Acoustic/dielectric constants of one medium. A single effective
/// longitudinal phonon branch with scalar sound velocity is assumed
/// throughout (the coupling P = g div(u) is longitudinal).
struct Material {
    std::string name;
    double mass_density = 0.0;     // kg/m^3
    double sound_velocity = 0.0;   // m/s, longitudinal
    double rel_permittivity = 1.0; // microwave dielectric constant, eps = eps_r * eps0
    std::string provenance;        // "paper" | "handbook" | "estimated"

    double permittivity() const { return rel_permittivity * constants::vacuum_permittivity; }

    /// 1/(rho v^3): the per-channel phonon emission weight.
    double acoustic_weight() const
    {
        return 1.0 / (mass_density * sound_velocity * sound_velocity * sound_velocity);
    }

    /// Throws InvalidInputError unless rho > 0, v > 0, eps_r >= 1 and the
    /// sound velocity is below the speed of light in the medium (the
    /// energy-shell condition requires it).
    void validate() const;
};

/// One side of an interface: a material, or vacuum (no phonon channel).
using SideMedium = std::optional<Material>;

inline bool is_vacuum(const SideMedium& m) { return !m.has_value(); }

/// Permittivity of a side medium; vacuum contributes eps0.
inline double permittivity_of(const SideMedium& m)
{
    return m ? m->permittivity() : constants::vacuum_permittivity;
}

/// Drive and bath state of one evaluation: angular photon frequency,
/// phonon bath temperature and drive photon number.
struct ThermalState {
    double omega = 0.0;         // rad/s, > 0
    double temperature = 0.0;   // K, >= 0
    double photon_number = 0.0; // n_a, dimensionless >= 0

    void validate() const;
};

/// Bose occupation n_B = 1/(exp(hbar Omega / k_B T) - 1).
/// Returns exactly 0 for T = 0 (the limit, no overflow path).
/// Throws InvalidInputError for non-finite or non-positive omega, or T < 0.
double bose_occupation(double omega, double temperature);

/// The drive-bath thermal factor (n_a - n_B) / (n_a + 1/2).
/// Zero exactly when the drive matches the bath (detailed balance);
/// negative when the bath is hotter than the drive (net photon gain).
double thermal_prefactor(const ThermalState& state);

} // namespace piezoloss
