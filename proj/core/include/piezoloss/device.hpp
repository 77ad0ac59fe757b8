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

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "piezoloss/database.hpp"
#include "piezoloss/loss.hpp"
#include "piezoloss/materials.hpp"

namespace piezoloss {

// --- participation-ratio T1 budgets -----------------------------------------

/// Region models carry fully resolved parameters (materials, not names);
/// the resolve_* helpers build them from database entries.
struct InterfaceRegionModel {
    double t_i = 0.0;
    double g_i = 0.0;
    SideMedium side_minus;
    SideMedium side_plus;
    SideMedium eps_host;
};
struct SubstrateRegionModel {
    double thickness = 0.0;
    double g_b = 0.0;
    Material host;
    SubstrateVariant variant = SubstrateVariant::reference_exact;
};
struct JunctionRegionModel {
    double g_i = 0.0;
    double volume = 0.0;
    Material barrier;
};
/// A region with an externally known loss tangent (measurement, other model).
struct FixedTanDelta {
    double value = 0.0;
};

using RegionModel =
    std::variant<InterfaceRegionModel, SubstrateRegionModel, JunctionRegionModel, FixedTanDelta>;

InterfaceRegionModel resolve(const InterfaceEntry& entry, const MaterialDatabase& db);
SubstrateRegionModel resolve(const SubstrateEntry& entry, const MaterialDatabase& db,
                             SubstrateVariant variant = SubstrateVariant::reference_exact);
JunctionRegionModel resolve(const JunctionEntry& entry, const MaterialDatabase& db);

/// Loss tangent of one region model at the given thermal state.
double region_tan_delta(const RegionModel& model, const ThermalState& state);

struct RegionSpec {
    std::string label;
    double participation = 0.0; // f_i in [0, 1]
    RegionModel model;
};

/// Incoherent per-region budget: regions do not interfere (interference is
/// available only through the geometric spectrum path).
struct ParticipationBudget {
    std::vector<RegionSpec> regions;
    ThermalState state;

    /// f_i in [0,1] each and sum f_i <= 1; throws InvalidInputError.
    void validate() const;
};

struct RegionReport {
    std::string label;
    double participation = 0.0;
    double tan_delta = 0.0;
    double contribution = 0.0; // f_i * tan_delta
};

/// 1/T1 = Omega / Q = Omega sum_i f_i tan(delta_i). The no-loss case is an
/// explicit empty optional, never a sentinel float.
struct T1Report {
    double inverse_q_total = 0.0;
    std::optional<double> t1_seconds;             // empty <=> no loss
    std::vector<RegionReport> contributions;      // sorted by contribution, descending
    std::string dominant_region;                  // empty when no loss

    bool no_loss() const { return !t1_seconds.has_value(); }
    std::optional<double> t1_microseconds() const
    {
        if (!t1_seconds)
            return std::nullopt;
        return *t1_seconds * 1e6;
    }
};

T1Report t1_budget(const ParticipationBudget& budget);

// --- interference spectra ----------------------------------------------------

struct SpectrumPoint {
    double frequency_hz = 0.0;
    double inverse_q = 0.0;
    // per-interface self contributions by label, plus "interference" with
    // the summed cross terms
    std::vector<std::pair<std::string, double>> contributions;
};

struct SweepOptions {
    bool log_spacing = false;
    int threads = 0; // 0 = hardware concurrency
};

/// Golden-rule loss of a stack versus photon frequency, with externally supplied
/// per-interface-class participation ratios replacing the geometric ones.
/// Each labeled delta's strength is rescaled so its self term equals
/// f_label * tan(delta_label); cross terms then carry sqrt(f_i f_j).
/// Points are independent; parallel evaluation returns results identical to
/// sequential. The range must satisfy 0 < f_lo < f_hi and n_points >= 2.
std::vector<SpectrumPoint> microstrip_spectrum(const StackProfile& profile,
                                               const std::map<std::string, double>& participation,
                                               double f_lo_hz, double f_hi_hz, int n_points,
                                               const ThermalState& state_template,
                                               const SweepOptions& options = {});

} // namespace piezoloss
