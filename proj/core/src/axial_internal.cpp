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

#include "axial_internal.hpp"

#include <algorithm>
#include <cmath>

#include "piezoloss/errors.hpp"

namespace piezoloss::detail {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::optional<Material> merge_gap_media(const std::optional<Material>& below,
                                        const std::optional<Material>& above, double z_lo,
                                        double z_hi, bool below_declared, bool above_declared)
{
    if (below_declared && above_declared) {
        const bool both_vacuum = !below && !above;
        if (both_vacuum)
            return std::nullopt;
        if (below && above && below->name == above->name)
            return below;
        if ((below && !above) || (!below && above) || below->name != above->name) {
            throw ConfigError("stack: inconsistent media declared for the gap [" +
                              std::to_string(z_lo) + ", " + std::to_string(z_hi) +
                              "] m (below: " + (below ? below->name : "vacuum") +
                              ", above: " + (above ? above->name : "vacuum") + ")");
        }
    }
    if (below_declared)
        return below;
    if (above_declared)
        return above;
    return std::nullopt; // undeclared gap: vacuum
}

} // namespace

std::complex<double> AxialMode::axial_value(double zq) const
{
    if (!sampled)
        return {1.0, 0.0};
    if (z.empty() || zq < z.front() || zq > z.back())
        return {0.0, 0.0};
    const auto it = std::upper_bound(z.begin(), z.end(), zq);
    if (it == z.begin())
        return psi_z.front();
    if (it == z.end())
        return psi_z.back();
    const std::size_t hi = static_cast<std::size_t>(it - z.begin());
    const std::size_t lo = hi - 1;
    const double t = (zq - z[lo]) / (z[hi] - z[lo]);
    return psi_z[lo] * (1.0 - t) + psi_z[hi] * t;
}

std::complex<double> AxialMode::value_at(const std::array<double, 3>& r) const
{
    if (!sampled) {
        const double phase = q_perp[0] * r[0] + q_perp[1] * r[1];
        return std::polar(1.0, phase);
    }
    return axial_value(r[2]);
}

std::optional<std::pair<double, double>> AxialMode::axial_support() const
{
    if (!sampled || z.empty())
        return std::nullopt;
    return std::make_pair(z.front(), z.back());
}

AxialMode reduce_mode(const ModeShape& mode)
{
    AxialMode out;
    if (const auto* pw = std::get_if<PlaneWaveTransverse>(&mode)) {
        out.q_perp = pw->q_perp;
        return out;
    }
    if (std::get_if<UniformMode>(&mode))
        return out;

    const auto& sm = std::get<SampledMode>(mode);
    const auto& f = sm.field;
    if (f.values.empty())
        throw InvalidInputError("sampled mode: empty field");

    out.sampled = true;
    out.field = &f;
    out.dz = f.spacing[2];
    out.z.resize(f.shape[2]);
    out.psi_z.resize(f.shape[2]);

    // Quasi-1D reduction: the z-component must be transversely uniform.
    double max_abs = 0.0;
    for (const auto& v : f.values)
        max_abs = std::max(max_abs, std::abs(v[2]));
    const double tol = 1e-9 * std::max(max_abs, 1e-300);

    for (std::size_t k = 0; k < f.shape[2]; ++k) {
        const std::complex<double> ref = f.values[f.index(0, 0, k)][2];
        for (std::size_t j = 0; j < f.shape[1]; ++j) {
            for (std::size_t i = 0; i < f.shape[0]; ++i) {
                if (std::abs(f.values[f.index(i, j, k)][2] - ref) > tol)
                    throw ConfigError(
                        "sampled mode: field is not transversely uniform; the quasi-1D "
                        "evaluators require a z-only profile");
            }
        }
        out.z[k] = f.origin[2] + static_cast<double>(k) * f.spacing[2];
        out.psi_z[k] = ref;
    }
    return out;
}

double Segment::tau(double zq) const
{
    if (layers.empty())
        return 0.0;
    // anchor: lowest finite layer boundary
    double t = 0.0;
    const double anchor = layers.front().z_lo == -kInf ? layers.front().z_hi : layers.front().z_lo;
    if (zq < anchor) {
        // below the anchor: inside the lowest (possibly infinite) layer
        return (zq - anchor) / layers.front().medium->sound_velocity;
    }
    double cursor = anchor;
    for (const auto& layer : layers) {
        const double lo = std::max(layer.z_lo, cursor);
        const double hi = layer.z_hi;
        const double v = layer.medium->sound_velocity;
        if (zq <= hi)
            return t + (zq - lo) / v;
        t += (hi - lo) / v;
        cursor = hi;
    }
    // above the topmost layer: extend with the top layer's velocity
    return t + (zq - cursor) / layers.back().medium->sound_velocity;
}

double Segment::min_velocity() const
{
    double v = kInf;
    for (const auto& layer : layers)
        v = std::min(v, layer.medium->sound_velocity);
    for (const auto& item : items) {
        if (item.slab)
            v = std::min(v, item.slab->host.sound_velocity);
        if (item.delta) {
            if (item.delta->side_minus)
                v = std::min(v, item.delta->side_minus->sound_velocity);
            if (item.delta->side_plus)
                v = std::min(v, item.delta->side_plus->sound_velocity);
        }
    }
    return v;
}

std::optional<Material> emission_medium(const PlanarItem& item, int dir)
{
    if (item.slab)
        return item.slab->host;
    return dir > 0 ? item.delta->side_plus : item.delta->side_minus;
}

double item_permittivity(const PlanarItem& item)
{
    if (item.slab)
        return item.slab->host.permittivity();
    return permittivity_of(item.delta->eps_host);
}

std::string fallback_label(const char* kind, std::size_t index)
{
    return std::string(kind) + std::to_string(index);
}

double sinc(double x)
{
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

namespace {

// I1 = int_0^w exp(m t) dt, I2 = int_0^w t exp(m t) dt, stable for small
// |m w| (series) and exact otherwise.
void exp_moments(std::complex<double> m, double w, std::complex<double>& i1,
                 std::complex<double>& i2)
{
    const double scale = std::abs(m) * std::abs(w);
    if (scale < 1e-5) {
        const std::complex<double> mw = m * w;
        i1 = w * (1.0 + mw / 2.0 + mw * mw / 6.0 + mw * mw * mw / 24.0);
        i2 = w * w * (0.5 + mw / 3.0 + mw * mw / 8.0 + mw * mw * mw / 30.0);
        return;
    }
    const std::complex<double> emw = std::exp(m * w);
    i1 = (emw - 1.0) / m;
    i2 = (w * emw - i1) / m;
}

} // namespace

std::complex<double> piecewise_linear_fourier(const AxialMode& mode, double lo, double hi,
                                              double k)
{
    if (!mode.sampled)
        throw InvalidInputError("piecewise_linear_fourier: analytic modes need no sampling");
    if (mode.z.empty())
        return {0.0, 0.0};
    lo = std::max(lo, mode.z.front());
    hi = std::min(hi, mode.z.back());
    if (!(lo < hi))
        return {0.0, 0.0};

    const std::complex<double> m{0.0, -k};
    std::complex<double> total{0.0, 0.0};
    for (std::size_t c = 0; c + 1 < mode.z.size(); ++c) {
        const double za = std::max(lo, mode.z[c]);
        const double zb = std::min(hi, mode.z[c + 1]);
        if (!(za < zb))
            continue;
        const double cell_w = mode.z[c + 1] - mode.z[c];
        const std::complex<double> slope = (mode.psi_z[c + 1] - mode.psi_z[c]) / cell_w;
        const std::complex<double> value_at_za =
            mode.psi_z[c] + slope * (za - mode.z[c]);
        std::complex<double> i1, i2;
        exp_moments(m, zb - za, i1, i2);
        total += std::exp(m * za) * (value_at_za * i1 + slope * i2);
    }
    return total;
}

AxialDecomposition decompose(const StackProfile& profile)
{
    AxialDecomposition out;

    std::vector<PlanarItem> items;
    for (std::size_t idx = 0; idx < profile.elements.size(); ++idx) {
        const auto& e = profile.elements[idx];
        if (const auto* slab = std::get_if<Slab>(&e)) {
            PlanarItem item;
            item.element_index = idx;
            item.slab = slab;
            item.z_lo = slab->z_lo;
            item.z_hi = slab->z_hi;
            item.label = slab->label.empty() ? fallback_label("slab", idx) : slab->label;
            items.push_back(std::move(item));
        }
        else if (const auto* delta = std::get_if<InterfaceDelta>(&e)) {
            PlanarItem item;
            item.element_index = idx;
            item.delta = delta;
            item.z_lo = item.z_hi = delta->z;
            item.label = delta->label.empty() ? fallback_label("interface", idx) : delta->label;
            items.push_back(std::move(item));
        }
        else {
            const auto* junction = std::get_if<PointJunction>(&e);
            out.junctions.push_back(junction);
            out.junction_labels.push_back(
                junction->label.empty() ? fallback_label("junction", idx) : junction->label);
        }
    }
    if (items.empty())
        return out;

    std::sort(items.begin(), items.end(), [](const PlanarItem& a, const PlanarItem& b) {
        if (a.z_lo != b.z_lo)
            return a.z_lo < b.z_lo;
        return a.z_hi < b.z_hi;
    });

    // Finite breakpoints of the axial medium map.
    std::vector<double> nodes;
    for (const auto& item : items) {
        if (std::isfinite(item.z_lo))
            nodes.push_back(item.z_lo);
        if (std::isfinite(item.z_hi))
            nodes.push_back(item.z_hi);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

    const auto slab_covering = [&items](double z_lo, double z_hi) -> const Slab* {
        for (const auto& item : items) {
            if (item.slab && item.z_lo <= z_lo && z_hi <= item.z_hi)
                return item.slab;
        }
        return nullptr;
    };
    const auto delta_at = [&items](double z) -> const InterfaceDelta* {
        for (const auto& item : items) {
            if (item.delta && item.z_lo == z)
                return item.delta;
        }
        return nullptr;
    };

    // Interval media between consecutive nodes (plus infinite slab tails).
    std::vector<Layer> layers;
    for (std::size_t n = 0; n + 1 < nodes.size(); ++n) {
        const double lo = nodes[n];
        const double hi = nodes[n + 1];
        if (!(hi > lo))
            continue;
        Layer layer{lo, hi, std::nullopt};
        if (const Slab* slab = slab_covering(lo, hi)) {
            layer.medium = slab->host;
        }
        else {
            // Gap: ask the neighbors. A delta declares the medium on its
            // far side; a slab edge implies its host up to the edge only.
            std::optional<Material> below, above;
            bool below_declared = false, above_declared = false;
            if (const InterfaceDelta* d = delta_at(lo)) {
                below = d->side_plus;
                below_declared = true;
            }
            if (const InterfaceDelta* d = delta_at(hi)) {
                above = d->side_minus;
                above_declared = true;
            }
            layer.medium = merge_gap_media(below, above, lo, hi, below_declared, above_declared);
        }
        layers.push_back(std::move(layer));
    }
    // Infinite slab tails become layers too (tau must extend into them).
    for (const auto& item : items) {
        if (!item.slab)
            continue;
        if (item.slab->infinite_lo())
            layers.insert(layers.begin(), Layer{-kInf, nodes.empty() ? 0.0 : nodes.front(),
                                                item.slab->host});
        if (item.slab->infinite_hi())
            layers.push_back(Layer{nodes.empty() ? 0.0 : nodes.back(), kInf, item.slab->host});
    }

    // Split items into acoustically connected segments at vacuum layers.
    std::vector<std::pair<double, double>> breaks; // vacuum intervals
    for (const auto& layer : layers) {
        if (!layer.medium)
            breaks.emplace_back(layer.z_lo, layer.z_hi);
    }

    const auto segment_of = [&breaks](double z) {
        std::size_t seg = 0;
        for (const auto& [lo, hi] : breaks) {
            (void)lo;
            if (z >= hi)
                ++seg;
        }
        return seg;
    };

    const std::size_t n_segments = breaks.size() + 1;
    out.segments.resize(n_segments);
    for (const auto& item : items) {
        const double anchor_z = std::isfinite(item.z_lo) ? item.z_lo : item.z_hi;
        out.segments[segment_of(anchor_z)].items.push_back(item);
    }
    for (const auto& layer : layers) {
        if (!layer.medium)
            continue;
        const double anchor_z = std::isfinite(layer.z_lo) ? layer.z_lo : layer.z_hi;
        out.segments[segment_of(anchor_z)].layers.push_back(layer);
    }
    // Drop empty segments (possible when breaks touch the ends).
    out.segments.erase(std::remove_if(out.segments.begin(), out.segments.end(),
                                      [](const Segment& s) { return s.items.empty(); }),
                       out.segments.end());
    return out;
}

} // namespace piezoloss::detail
