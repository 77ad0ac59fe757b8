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

#include "piezoloss/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "piezoloss/errors.hpp"

namespace piezoloss {

namespace {

double element_sort_key(const PiezoElement& e)
{
    return std::visit(
        [](const auto& el) -> double {
            using T = std::decay_t<decltype(el)>;
            if constexpr (std::is_same_v<T, Slab>)
                return el.z_lo == -std::numeric_limits<double>::infinity() ? el.z_hi : el.z_lo;
            else if constexpr (std::is_same_v<T, InterfaceDelta>)
                return el.z;
            else
                return el.position[2];
        },
        e);
}

void validate_element(const PiezoElement& e)
{
    std::visit(
        [](const auto& el) {
            using T = std::decay_t<decltype(el)>;
            if constexpr (std::is_same_v<T, Slab>) {
                if (std::isnan(el.z_lo) || std::isnan(el.z_hi))
                    throw InvalidInputError("slab: non-finite coordinates");
                if (!(el.z_lo < el.z_hi))
                    throw InvalidInputError("slab: z_lo must be < z_hi");
                if (!std::isfinite(el.g_b) || el.g_b < 0.0)
                    throw InvalidInputError("slab: g_B must be finite and >= 0");
                el.host.validate();
            }
            else if constexpr (std::is_same_v<T, InterfaceDelta>) {
                if (!std::isfinite(el.z))
                    throw InvalidInputError("interface delta: non-finite position");
                if (!std::isfinite(el.strength))
                    throw InvalidInputError("interface delta: non-finite strength");
                if (el.orientation != 1 && el.orientation != -1)
                    throw InvalidInputError("interface delta: orientation must be +1 or -1");
                if (el.thickness && !(*el.thickness > 0.0))
                    throw InvalidInputError("interface delta: thickness must be > 0");
                if (el.side_minus)
                    el.side_minus->validate();
                if (el.side_plus)
                    el.side_plus->validate();
            }
            else {
                for (double c : el.position) {
                    if (!std::isfinite(c))
                        throw InvalidInputError("point junction: non-finite position");
                }
                if (!std::isfinite(el.strength))
                    throw InvalidInputError("point junction: non-finite strength");
                if (el.volume && !(*el.volume > 0.0))
                    throw InvalidInputError("point junction: volume must be > 0");
                el.host.validate();
            }
        },
        e);
}

} // namespace

double StackProfile::axial_weight() const
{
    double total = 0.0;
    for (const auto& e : elements) {
        if (const auto* slab = std::get_if<Slab>(&e)) {
            if (!slab->infinite_lo() && !slab->infinite_hi())
                total += slab->g_b * slab->width();
        }
        else if (const auto* delta = std::get_if<InterfaceDelta>(&e)) {
            total += std::abs(delta->strength);
        }
    }
    return total;
}

StackProfile build_stack(std::vector<PiezoElement> elements, double cavity_volume, double area)
{
    if (!(std::isfinite(cavity_volume) && cavity_volume > 0.0))
        throw InvalidInputError("stack: cavity volume must be finite and > 0");
    if (!(std::isfinite(area) && area > 0.0))
        throw InvalidInputError("stack: area must be finite and > 0");

    for (const auto& e : elements)
        validate_element(e);

    std::stable_sort(elements.begin(), elements.end(),
                     [](const PiezoElement& a, const PiezoElement& b) {
                         return element_sort_key(a) < element_sort_key(b);
                     });

    // Slabs must not overlap each other.
    double prev_hi = -std::numeric_limits<double>::infinity();
    std::string prev_label;
    for (const auto& e : elements) {
        const auto* slab = std::get_if<Slab>(&e);
        if (!slab)
            continue;
        if (slab->z_lo < prev_hi)
            throw ConfigError("stack: slab '" + slab->label + "' overlaps slab '" + prev_label +
                              "'");
        prev_hi = slab->z_hi;
        prev_label = slab->label;
    }

    StackProfile profile;
    profile.elements = std::move(elements);
    profile.cavity_volume = cavity_volume;
    profile.area = area;
    return profile;
}

StackProfile microstrip_profile(double width, double dielectric_thickness, double metal_thickness,
                                const Material& metal, const Material& dielectric,
                                const MaterialDatabase& db)
{
    if (!(width > 0.0) || !(dielectric_thickness > 0.0) || !(metal_thickness > 0.0))
        throw InvalidInputError("microstrip: all lengths must be > 0");

    const auto pairing = [&db](const std::string& name) -> const InterfaceEntry& {
        try {
            return db.interface(name);
        }
        catch (const NotFoundError& e) {
            throw ConfigError("microstrip: no interface coefficients for pairing '" + name +
                              "' in the database (" + e.what() + ")");
        }
    };

    const InterfaceEntry& mv = pairing(metal.name + "/vacuum");
    const InterfaceEntry& dm = pairing(dielectric.name + "/" + metal.name);
    const InterfaceEntry& dv = pairing(dielectric.name + "/vacuum");

    const auto resolve = [&db](const std::string& name) { return db.medium(name); };

    std::vector<PiezoElement> elements;

    // Strip top, metal/vacuum. Pair normal (material 1 = metal) points up.
    elements.push_back(InterfaceDelta{mv.g_i * mv.t_i, metal_thickness, +1, metal, std::nullopt,
                                      resolve(mv.eps_host), mv.t_i, "MV"});
    // Strip/dielectric plane: dielectric below, metal above; normal from
    // material 1 (dielectric) to 2 (metal) points up.
    elements.push_back(InterfaceDelta{dm.g_i * dm.t_i, 0.0, +1, dielectric, metal,
                                      resolve(dm.eps_host), dm.t_i, "DM"});
    // Dielectric far plane: dielectric above, exposed below; the pair normal
    // (dielectric -> vacuum) points down.
    elements.push_back(InterfaceDelta{dv.g_i * dv.t_i, -dielectric_thickness, -1, std::nullopt,
                                      dielectric, resolve(dv.eps_host), dv.t_i, "DV"});

    const double area = width * 1.0; // per meter of line
    const double cavity_volume = area * dielectric_thickness;
    return build_stack(std::move(elements), cavity_volume, area);
}

double field_norm_squared(const SampledField& field)
{
    double total = 0.0;
    for (const auto& v : field.values) {
        for (const auto& c : v)
            total += std::norm(c);
    }
    return total * field.cell_volume();
}

SampledMode normalize_mode(const SampledField& raw, double cavity_volume)
{
    if (!(std::isfinite(cavity_volume) && cavity_volume > 0.0))
        throw InvalidInputError("normalize_mode: cavity volume must be finite and > 0");
    if (raw.values.size() != raw.shape[0] * raw.shape[1] * raw.shape[2] || raw.values.empty())
        throw InvalidInputError("normalize_mode: sample count does not match grid shape");
    for (double s : raw.spacing) {
        if (!(std::isfinite(s) && s > 0.0))
            throw InvalidInputError("normalize_mode: grid spacing must be finite and > 0");
    }

    const double norm_sq = field_norm_squared(raw);
    if (norm_sq <= 0.0)
        throw InvalidInputError("normalize_mode: field is identically zero");

    const double scale = 1.0 / std::sqrt(2.0 * norm_sq / cavity_volume);
    SampledMode mode{raw, cavity_volume};
    for (auto& v : mode.field.values) {
        for (auto& c : v)
            c *= scale;
    }
    return mode;
}

} // namespace piezoloss
