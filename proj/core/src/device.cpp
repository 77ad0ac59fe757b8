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

#include "piezoloss/device.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <thread>

#include "piezoloss/constants.hpp"
#include "piezoloss/errors.hpp"

namespace piezoloss {

namespace {

/// Run fn(i) for i in [0, n) on `threads` workers; each index writes its own
/// slot, so the outcome is identical to sequential evaluation.
template <typename Fn>
void parallel_for_index(int n, int threads, Fn&& fn)
{
    if (threads <= 0)
        threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::clamp(threads, 1, std::max(1, n));

    if (threads == 1) {
        for (int i = 0; i < n; ++i)
            fn(i);
        return;
    }

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            try {
                for (int i = t; i < n; i += threads)
                    fn(i);
            }
            catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool)
        th.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

} // namespace

InterfaceRegionModel resolve(const InterfaceEntry& entry, const MaterialDatabase& db)
{
    return InterfaceRegionModel{entry.t_i, entry.g_i, db.medium(entry.side_minus),
                                db.medium(entry.side_plus), db.medium(entry.eps_host)};
}

SubstrateRegionModel resolve(const SubstrateEntry& entry, const MaterialDatabase& db,
                             SubstrateVariant variant)
{
    return SubstrateRegionModel{entry.thickness, entry.g_b, db.material(entry.host), variant};
}

JunctionRegionModel resolve(const JunctionEntry& entry, const MaterialDatabase& db)
{
    return JunctionRegionModel{entry.g_i, entry.volume, db.material(entry.barrier)};
}

double region_tan_delta(const RegionModel& model, const ThermalState& state)
{
    return std::visit(
        [&state](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, InterfaceRegionModel>)
                return interface_tan_delta(m.t_i, m.g_i, m.side_minus, m.side_plus, m.eps_host,
                                           state);
            else if constexpr (std::is_same_v<T, SubstrateRegionModel>)
                return substrate_tan_delta(m.thickness, m.g_b, m.host, state, m.variant);
            else if constexpr (std::is_same_v<T, JunctionRegionModel>)
                return junction_tan_delta(m.g_i, m.volume, m.barrier, state);
            else
                return m.value;
        },
        model);
}

void ParticipationBudget::validate() const
{
    state.validate();
    double total = 0.0;
    for (const auto& region : regions) {
        if (!(std::isfinite(region.participation) && region.participation >= 0.0 &&
              region.participation <= 1.0))
            throw InvalidInputError("budget region '" + region.label +
                                    "': participation must lie in [0, 1]");
        total += region.participation;
    }
    if (total > 1.0 + 1e-12)
        throw InvalidInputError("budget: participation ratios sum to " + std::to_string(total) +
                                " > 1");
}

T1Report t1_budget(const ParticipationBudget& budget)
{
    budget.validate();

    T1Report report;
    report.contributions.reserve(budget.regions.size());
    for (const auto& region : budget.regions) {
        const double tan_delta = region_tan_delta(region.model, budget.state);
        const double contribution = region.participation * tan_delta;
        report.inverse_q_total += contribution;
        report.contributions.push_back(
            RegionReport{region.label, region.participation, tan_delta, contribution});
    }

    std::stable_sort(report.contributions.begin(), report.contributions.end(),
                     [](const RegionReport& a, const RegionReport& b) {
                         return a.contribution > b.contribution;
                     });

    if (report.inverse_q_total > 0.0) {
        report.t1_seconds = 1.0 / (budget.state.omega * report.inverse_q_total);
        report.dominant_region = report.contributions.front().label;
    }
    // Zero total loss stays an explicit no-loss report (empty optional).
    return report;
}

std::vector<SpectrumPoint> microstrip_spectrum(const StackProfile& profile,
                                               const std::map<std::string, double>& participation,
                                               double f_lo_hz, double f_hi_hz, int n_points,
                                               const ThermalState& state_template,
                                               const SweepOptions& options)
{
    if (!(std::isfinite(f_lo_hz) && std::isfinite(f_hi_hz) && f_lo_hz > 0.0 &&
          f_lo_hz < f_hi_hz))
        throw InvalidInputError("spectrum: need 0 < f_lo < f_hi (omega must stay positive)");
    if (n_points < 2)
        throw InvalidInputError("spectrum: need at least 2 points");
    for (const auto& [label, f] : participation) {
        if (!(std::isfinite(f) && f >= 0.0 && f <= 1.0))
            throw InvalidInputError("spectrum: participation '" + label +
                                    "' must lie in [0, 1]");
    }

    // Replace each labeled delta's geometric participation t_I A / V_a by
    // the supplied f_label: rescale its strength so the self term becomes
    // f * tan(delta); cross terms then carry sqrt(f_i f_j).
    StackProfile scaled = profile;
    for (auto& element : scaled.elements) {
        auto* delta = std::get_if<InterfaceDelta>(&element);
        if (!delta)
            continue;
        const auto it = participation.find(delta->label);
        if (it == participation.end())
            throw ConfigError("spectrum: no participation ratio for interface '" + delta->label +
                              "'");
        if (!delta->thickness)
            throw ConfigError("spectrum: interface '" + delta->label +
                              "' lacks a thickness; cannot map participation onto it");
        const double geometric = *delta->thickness * scaled.area / scaled.cavity_volume;
        delta->strength *= std::sqrt(it->second / geometric);
    }

    std::vector<double> freqs(static_cast<std::size_t>(n_points));
    if (options.log_spacing) {
        const double ratio = std::log(f_hi_hz / f_lo_hz);
        for (int i = 0; i < n_points; ++i)
            freqs[static_cast<std::size_t>(i)] =
                f_lo_hz * std::exp(ratio * static_cast<double>(i) / (n_points - 1));
    }
    else {
        for (int i = 0; i < n_points; ++i)
            freqs[static_cast<std::size_t>(i)] =
                f_lo_hz + (f_hi_hz - f_lo_hz) * static_cast<double>(i) / (n_points - 1);
    }

    std::vector<SpectrumPoint> points(static_cast<std::size_t>(n_points));
    parallel_for_index(n_points, options.threads, [&](int i) {
        const double f = freqs[static_cast<std::size_t>(i)];
        ThermalState state = state_template;
        state.omega = 2.0 * constants::pi * f;
        const LossResult loss = golden_rule_loss(scaled, PlaneWaveTransverse{}, state);

        SpectrumPoint point;
        point.frequency_hz = f;
        point.inverse_q = loss.inverse_q;
        double interference = 0.0;
        for (const auto& row : loss.breakdown) {
            if (row.label.find('~') != std::string::npos)
                interference += row.contribution;
            else
                point.contributions.emplace_back(row.label, row.contribution);
        }
        point.contributions.emplace_back("interference", interference);
        points[static_cast<std::size_t>(i)] = std::move(point);
    });
    return points;
}

} // namespace piezoloss
