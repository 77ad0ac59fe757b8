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

#include "piezoloss/form_factor.hpp"

#include <cmath>

#include "axial_internal.hpp"
#include "piezoloss/constants.hpp"
#include "piezoloss/errors.hpp"

namespace piezoloss {

namespace {

using detail::AxialMode;
using std::complex;

constexpr complex<double> kImag{0.0, 1.0};

/// int_a^b exp(-i k z) dz, exact.
complex<double> segment_fourier(double a, double b, double kz)
{
    if (kz == 0.0)
        return {b - a, 0.0};
    // (exp(-i k a) - exp(-i k b)) / (i k)
    return (std::polar(1.0, -kz * a) - std::polar(1.0, -kz * b)) / (kImag * kz);
}

bool transverse_matches(const AxialMode& mode, const std::array<double, 3>& k)
{
    const double scale =
        std::max({std::abs(k[0]), std::abs(k[1]), std::abs(mode.q_perp[0]),
                  std::abs(mode.q_perp[1]), 1.0});
    const double tol = 1e-12 * scale;
    return std::abs(k[0] - mode.q_perp[0]) <= tol && std::abs(k[1] - mode.q_perp[1]) <= tol;
}

} // namespace

FormFactor form_factor(const StackProfile& profile, const ModeShape& mode,
                       const std::array<double, 3>& k)
{
    const AxialMode axial = detail::reduce_mode(mode);
    FormFactor out;
    out.k = k;
    out.transverse_matched = transverse_matches(axial, k);
    const double kz = k[2];

    if (axial.sampled) {
        // Resolution gate: at least 10 samples per requested axial wavelength.
        const double kmag = std::abs(kz);
        if (kmag > 0.0) {
            const double wavelength = 2.0 * constants::pi / kmag;
            if (axial.dz > wavelength / 10.0)
                throw AccuracyError("form_factor: sampled grid too coarse for requested k_z "
                                    "(need >= 10 samples per wavelength)",
                                    wavelength / (10.0 * axial.dz));
        }
    }

    for (const auto& element : profile.elements) {
        if (const auto* delta = std::get_if<InterfaceDelta>(&element)) {
            if (!out.transverse_matched)
                continue;
            out.axial += static_cast<double>(delta->orientation) * delta->strength *
                         axial.axial_value(delta->z) * std::polar(1.0, -kz * delta->z);
        }
        else if (const auto* slab = std::get_if<Slab>(&element)) {
            if (!out.transverse_matched)
                continue;
            double lo = slab->z_lo;
            double hi = slab->z_hi;
            if (axial.sampled) {
                const auto support = axial.axial_support();
                lo = std::max(lo, support->first);
                hi = std::min(hi, support->second);
                if (!(lo < hi))
                    continue;
                out.axial += slab->g_b * detail::piecewise_linear_fourier(axial, lo, hi, kz);
                continue;
            }
            const bool inf_lo = slab->infinite_lo();
            const bool inf_hi = slab->infinite_hi();
            if (inf_lo && inf_hi) {
                // 2 pi g_B delta(k_z): a Dirac spike, excluded from the
                // finite part and flagged instead.
                if (kz == 0.0)
                    out.singular = true;
                continue;
            }
            if (inf_lo || inf_hi) {
                if (kz == 0.0) {
                    out.singular = true; // half-space spike as k_z -> 0
                    continue;
                }
                // Radiation (Abel) boundary: only the finite end contributes.
                const double edge = inf_lo ? hi : lo;
                const double sign = inf_lo ? -1.0 : +1.0;
                out.axial += slab->g_b * sign * std::polar(1.0, -kz * edge) / (kImag * kz);
                continue;
            }
            out.axial += slab->g_b * segment_fourier(lo, hi, kz);
        }
        else {
            const auto& junction = std::get<PointJunction>(element);
            const double phase = -(k[0] * junction.position[0] + k[1] * junction.position[1] +
                                   kz * junction.position[2]);
            out.point += junction.strength * axial.value_at(junction.position) *
                         std::polar(1.0, phase);
        }
    }
    return out;
}

} // namespace piezoloss
