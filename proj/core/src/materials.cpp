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

#include "piezoloss/materials.hpp"

#include <cmath>

#include "piezoloss/errors.hpp"

namespace piezoloss {

void Material::validate() const
{
    if (!(std::isfinite(mass_density) && mass_density > 0.0))
        throw InvalidInputError("material '" + name + "': mass density must be > 0");
    if (!(std::isfinite(sound_velocity) && sound_velocity > 0.0))
        throw InvalidInputError("material '" + name + "': sound velocity must be > 0");
    if (!(std::isfinite(rel_permittivity) && rel_permittivity >= 1.0))
        throw InvalidInputError("material '" + name + "': relative permittivity must be >= 1");
    const double c_medium = constants::speed_of_light / std::sqrt(rel_permittivity);
    if (!(sound_velocity < c_medium))
        throw InvalidInputError("material '" + name +
                                "': sound velocity must stay below the speed of light in the "
                                "medium (energy-shell condition)");
}

void ThermalState::validate() const
{
    if (!(std::isfinite(omega) && omega > 0.0))
        throw InvalidInputError("thermal state: omega must be finite and > 0");
    if (!(std::isfinite(temperature) && temperature >= 0.0))
        throw InvalidInputError("thermal state: temperature must be finite and >= 0");
    if (!(std::isfinite(photon_number) && photon_number >= 0.0))
        throw InvalidInputError("thermal state: photon number must be finite and >= 0");
}

double bose_occupation(double omega, double temperature)
{
    if (!(std::isfinite(omega) && omega > 0.0))
        throw InvalidInputError("bose_occupation: omega must be finite and > 0");
    if (!(std::isfinite(temperature) && temperature >= 0.0))
        throw InvalidInputError("bose_occupation: temperature must be finite and >= 0");
    if (temperature == 0.0)
        return 0.0; // zero-temperature limit, taken exactly
    const double x = constants::hbar * omega / (constants::boltzmann * temperature);
    // expm1 keeps precision for x << 1; large x underflows cleanly to 0.
    return 1.0 / std::expm1(x);
}

double thermal_prefactor(const ThermalState& state)
{
    state.validate();
    const double n_b = bose_occupation(state.omega, state.temperature);
    return (state.photon_number - n_b) / (state.photon_number + 0.5);
}

} // namespace piezoloss
