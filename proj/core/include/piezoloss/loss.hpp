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
#include <vector>

#include "piezoloss/geometry.hpp"
#include "piezoloss/materials.hpp"

namespace piezoloss {

enum class Evaluator { closed_form, golden_rule, real_space };

/// One row of a loss breakdown. Self terms carry the geometric
/// participation and the implied per-region loss tangent
/// (contribution = participation * tan_delta); interference rows carry the
/// cross-term contribution only.
struct LossContribution {
    std::string label;
    std::optional<double> participation;
    std::optional<double> tan_delta;
    double contribution = 0.0;
};

/// inverse_q equals the sum of the breakdown contributions (the breakdown
/// is exhaustive, interference rows included); its sign follows the thermal
/// prefactor.
struct LossResult {
    double inverse_q = 0.0;
    std::vector<LossContribution> breakdown;
    Evaluator evaluator = Evaluator::closed_form;

    double breakdown_sum() const;
};

/// Oscillation convention for the substrate loss tangent. `reference_*`
/// uses sin^2(Omega L / v), the convention behind the tabulated reference
/// predictions; `form_factor_*` is the form the general evaluators derive,
/// 4 sin^2(Omega L / 2v) on the same prefactor. The two agree to leading
/// order in Omega L / v but their running averages differ by a constant
/// factor 4; both are exposed so the discrepancy stays inspectable.
enum class SubstrateVariant {
    reference_exact,
    reference_averaged,   // sin^2 -> 1/2
    form_factor_exact,
    form_factor_averaged, // 4 sin^2(x/2) -> 2
};

/// Substrate loss tangent
///   tan(delta_S) = g_B^2 [n_a - n_B] / (2 eps rho v (n_a + 1/2) Omega L) * S
/// with S per SubstrateVariant. Omega is taken from `state`.
double substrate_tan_delta(double thickness, double g_b, const Material& host,
                           const ThermalState& state,
                           SubstrateVariant variant = SubstrateVariant::reference_exact);

/// Interface loss tangent
///   tan(delta_I) = t_I Omega g_I^2 [n_a - n_B] / (4 eps (n_a + 1/2))
///                  * sum_sides 1/(rho_i v_i^3),
/// where vacuum sides carry no phonon channel and eps comes from
/// `eps_host` (vacuum -> eps0). Both sides vacuum is an error: no phonon
/// emission is possible.
double interface_tan_delta(double t_i, double g_i, const SideMedium& side_minus,
                           const SideMedium& side_plus, const SideMedium& eps_host,
                           const ThermalState& state);

/// Junction loss tangent
///   tan(delta_J) = Omega^3 g_I^2 V_J [n_a - n_B]
///                  / (4 pi rho v^5 eps (n_a + 1/2)),
/// with rho, v, eps of the barrier material.
double junction_tan_delta(double g_i, double volume, const Material& barrier,
                          const ThermalState& state);

/// Momentum-space golden-rule evaluation of the general dissipation
/// functional. Quasi-1D stacks with plane-wave/uniform modes reduce to the
/// two axial emission directions k_z = +-Omega/v, each weighted by the
/// medium receiving the phonon; point junctions use the full 4pi shell.
/// Interference cross terms between elements sharing an emission direction
/// (and, for junctions, a host) appear as labeled breakdown rows. An empty
/// profile yields a zero-loss result. Infinite slabs are momentum
/// selection-rule zeros, returned exactly.
LossResult golden_rule_loss(const StackProfile& profile, const ModeShape& mode,
                            const ThermalState& state);

/// Real-space evaluation of the same functional: the double integral of
/// g.psi against the sinc(Omega |r - r'| / v) kernel, with the infinite
/// transverse extent reduced analytically at k_perp = q_perp and the axial
/// double integrals done by adaptive oscillatory quadrature (>= 10 nodes
/// per phonon wavelength; AccuracyError if the budget is exhausted).
/// Requires finite integration support (no infinite slabs).
LossResult real_space_loss(const StackProfile& profile, const ModeShape& mode,
                           const ThermalState& state);

} // namespace piezoloss
