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
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "piezoloss/database.hpp"
#include "piezoloss/materials.hpp"

namespace piezoloss {

/// Bulk piezoelectric layer g(r) = g_b z_hat for z in [z_lo, z_hi].
/// Infinite extents (-inf / +inf) are accepted and represent the bulk
/// limit; only the momentum-space evaluator supports them.
struct Slab {
    double g_b = 0.0;  // C/m^2
    double z_lo = 0.0; // m
    double z_hi = 0.0; // m
    Material host;
    std::string label;

    bool infinite_lo() const { return z_lo == -std::numeric_limits<double>::infinity(); }
    bool infinite_hi() const { return z_hi == std::numeric_limits<double>::infinity(); }
    double width() const { return z_hi - z_lo; }
};

/// Idealized surface/interface g(r) = (g_I t_I) delta(z - z0) z_hat.
/// `orientation` is the sign of z_hat relative to the pair's material-1 ->
/// material-2 normal (+1 when side_minus is material 1).
struct InterfaceDelta {
    double strength = 0.0; // g_I * t_I, C/m
    double z = 0.0;        // m
    int orientation = +1;  // +1 or -1
    SideMedium side_minus; // medium below (smaller z); vacuum = no channel
    SideMedium side_plus;  // medium above
    SideMedium eps_host;   // permittivity referent; vacuum -> eps0
    std::optional<double> thickness; // t_I, m; kept for participation reporting
    std::string label;
};

/// Small Josephson junction g(r) = (g_I V_J) delta(r - r0) z_hat; the host
/// barrier supplies rho, v and eps.
struct PointJunction {
    double strength = 0.0;              // g_I * V_J, C m
    std::array<double, 3> position{};   // m
    Material host;
    std::optional<double> volume;       // V_J, m^3; kept for participation reporting
    std::string label;
};

using PiezoElement = std::variant<Slab, InterfaceDelta, PointJunction>;

/// Piezoelectric profile of a layered (quasi-1D) device stack plus point
/// junctions, together with the photon cavity volume and the transverse
/// extent used in quasi-1D reductions. Immutable after build_stack.
struct StackProfile {
    std::vector<PiezoElement> elements; // planar elements sorted by z
    double cavity_volume = 0.0;         // V_a, m^3
    double area = 0.0;                  // A, m^2

    /// Total axial piezo weight: sum of g_b * width over finite slabs plus
    /// sum of delta strengths (C/m each). Junction strengths are excluded
    /// (different dimension).
    double axial_weight() const;
};

/// Validates and sorts the elements. Throws ConfigError on overlapping
/// slabs; InvalidInputError on non-finite coordinates (slab bounds may be
/// infinite), non-positive V_a or A.
StackProfile build_stack(std::vector<PiezoElement> elements, double cavity_volume, double area);

/// Microstrip line over a dielectric layer of thickness d on a ground
/// plane: interface deltas at the strip/dielectric plane (z = 0, label DM),
/// the dielectric far plane (z = -d, label DV, orientation -1) and the
/// strip top (z = +metal_thickness, label MV). Coefficients come from the
/// database pairings "<metal>/vacuum", "<dielectric>/<metal>" and
/// "<dielectric>/vacuum"; a missing pairing is a ConfigError.
/// The quasi-1D bookkeeping uses A = W x 1 m and V_a = A * d.
StackProfile microstrip_profile(double width, double dielectric_thickness,
                                double metal_thickness, const Material& metal,
                                const Material& dielectric, const MaterialDatabase& db);

// --- photon mode shapes ----------------------------------------------------

/// psi(r) = exp(i q_perp . r_perp) z_hat; |psi| = 1 everywhere,
/// int |psi|^2 d^3r = V_a by construction.
struct PlaneWaveTransverse {
    std::array<double, 2> q_perp{0.0, 0.0}; // rad/m
};

/// psi(r) = z_hat (the q_perp -> 0 plane wave).
struct UniformMode {};

/// Complex vector field samples on a regular rectilinear grid, x fastest.
struct SampledField {
    std::array<std::size_t, 3> shape{};   // nx, ny, nz
    std::array<double, 3> spacing{};      // m
    std::array<double, 3> origin{};       // m, position of sample (0,0,0)
    std::vector<std::array<std::complex<double>, 3>> values;

    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const
    {
        return (k * shape[1] + j) * shape[0] + i;
    }
    double cell_volume() const { return spacing[0] * spacing[1] * spacing[2]; }
};

/// A sampled shape function produced by normalize_mode. Satisfies
/// int |psi|^2 d^3r = V_a / 2 on the sample grid (the classical-field
/// substitution keeps the factor 2 under the root).
struct SampledMode {
    SampledField field;
    double cavity_volume = 0.0;
};

using ModeShape = std::variant<PlaneWaveTransverse, UniformMode, SampledMode>;

/// Multimode substitution: psi(r) = E(r) / sqrt(2 int |E|^2 d^3r / V_a),
/// evaluated by cell-sum quadrature on the grid. Throws InvalidInputError
/// for an all-zero field or non-positive V_a.
SampledMode normalize_mode(const SampledField& raw, double cavity_volume);

/// int |E|^2 d^3r by cell-sum quadrature (used by normalize_mode and by the
/// normalization checks).
double field_norm_squared(const SampledField& field);

} // namespace piezoloss
