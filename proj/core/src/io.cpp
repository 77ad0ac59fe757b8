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

#include "piezoloss/io.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "piezoloss/errors.hpp"
#include "piezoloss/units.hpp"

namespace piezoloss::io {

namespace {

using nlohmann::json;

json read_json(const std::string& path, const char* what)
{
    std::ifstream in(path);
    if (!in)
        throw IoError(std::string("cannot open ") + what + " file '" + path + "'");
    json j;
    try {
        in >> j;
    }
    catch (const json::exception& e) {
        throw ConfigError(std::string(what) + " file '" + path + "': " + e.what());
    }
    return j;
}

double quantity(const json& j, const std::string& key, units::Dimension dim,
                const char* context)
{
    if (!j.contains(key))
        throw ConfigError(std::string(context) + ": missing field '" + key + "'");
    const auto& v = j.at(key);
    if (v.is_number())
        return v.get<double>();
    if (v.is_string())
        return units::parse_quantity(v.get<std::string>(), dim);
    throw ConfigError(std::string(context) + ": field '" + key +
                      "' must be a number (SI) or a unit-suffixed string");
}

std::string field_string(const json& j, const std::string& key, const char* context)
{
    if (!j.contains(key) || !j.at(key).is_string())
        throw ConfigError(std::string(context) + ": missing string field '" + key + "'");
    return j.at(key).get<std::string>();
}

SubstrateVariant parse_variant(const std::string& name, const char* context)
{
    if (name == "reference_exact")
        return SubstrateVariant::reference_exact;
    if (name == "reference_averaged" || name == "averaged")
        return SubstrateVariant::reference_averaged;
    if (name == "form_factor_exact")
        return SubstrateVariant::form_factor_exact;
    if (name == "form_factor_averaged")
        return SubstrateVariant::form_factor_averaged;
    throw ConfigError(std::string(context) + ": unknown substrate variant '" + name +
                      "' (reference_exact, reference_averaged, form_factor_exact, "
                      "form_factor_averaged)");
}

ThermalState thermal_from_json(const json& j, const char* context)
{
    ThermalState state;
    state.omega =
        2.0 * constants::pi * quantity(j, "frequency", units::Dimension::frequency, context);
    state.temperature = quantity(j, "temperature", units::Dimension::temperature, context);
    state.photon_number = quantity(j, "photon_number", units::Dimension::dimensionless, context);
    state.validate();
    return state;
}

} // namespace

ParticipationBudget load_budget(const std::string& path, const MaterialDatabase& db)
{
    const json j = read_json(path, "device budget");

    ParticipationBudget budget;
    budget.state = thermal_from_json(j, "budget");

    if (!j.contains("regions") || !j.at("regions").is_array())
        throw ConfigError("budget: missing 'regions' array");

    std::size_t index = 0;
    for (const auto& r : j.at("regions")) {
        const std::string context = "budget region #" + std::to_string(index++);
        RegionSpec spec;
        spec.label = field_string(r, "label", context.c_str());
        spec.participation =
            quantity(r, "participation", units::Dimension::dimensionless, context.c_str());
        const std::string kind = field_string(r, "model", context.c_str());
        if (kind == "interface") {
            spec.model = resolve(db.interface(field_string(r, "entry", context.c_str())), db);
        }
        else if (kind == "substrate") {
            const auto variant = parse_variant(r.value("variant", "reference_exact"),
                                               context.c_str());
            spec.model =
                resolve(db.substrate(field_string(r, "entry", context.c_str())), db, variant);
        }
        else if (kind == "junction") {
            spec.model = resolve(db.junction(field_string(r, "entry", context.c_str())), db);
        }
        else if (kind == "fixed") {
            spec.model = FixedTanDelta{
                quantity(r, "tan_delta", units::Dimension::dimensionless, context.c_str())};
        }
        else {
            throw ConfigError(context + ": unknown model kind '" + kind +
                              "' (interface, substrate, junction, fixed)");
        }
        budget.regions.push_back(std::move(spec));
    }
    budget.validate();
    return budget;
}

StackProfile load_stack(const std::string& path, const MaterialDatabase& db)
{
    const json j = read_json(path, "stack profile");

    const double cavity_volume =
        quantity(j, "cavity_volume", units::Dimension::volume, "stack");
    const double area = quantity(j, "area", units::Dimension::area, "stack");

    if (!j.contains("elements") || !j.at("elements").is_array())
        throw ConfigError("stack: missing 'elements' array");

    std::vector<PiezoElement> elements;
    std::size_t index = 0;
    for (const auto& e : j.at("elements")) {
        const std::string context = "stack element #" + std::to_string(index++);
        const std::string kind = field_string(e, "kind", context.c_str());
        if (kind == "interface") {
            InterfaceDelta delta;
            delta.z = quantity(e, "z", units::Dimension::length, context.c_str());
            delta.orientation = e.value("orientation", 1);
            delta.label = e.value("label", "");
            if (e.contains("pair")) {
                const InterfaceEntry& entry = db.interface(e.at("pair").get<std::string>());
                delta.strength = entry.g_i * entry.t_i;
                delta.thickness = entry.t_i;
                delta.side_minus = db.medium(entry.side_minus);
                delta.side_plus = db.medium(entry.side_plus);
                delta.eps_host = db.medium(entry.eps_host);
                if (delta.orientation == -1)
                    std::swap(delta.side_minus, delta.side_plus);
                if (delta.label.empty())
                    delta.label = entry.name;
            }
            else {
                delta.strength =
                    quantity(e, "strength_c_per_m", units::Dimension::dimensionless,
                             context.c_str());
                delta.side_minus = db.medium(field_string(e, "side_minus", context.c_str()));
                delta.side_plus = db.medium(field_string(e, "side_plus", context.c_str()));
                delta.eps_host = db.medium(e.value("eps_host", "vacuum"));
                if (e.contains("thickness"))
                    delta.thickness =
                        quantity(e, "thickness", units::Dimension::length, context.c_str());
            }
            elements.push_back(std::move(delta));
        }
        else if (kind == "slab") {
            Slab slab;
            // "-infinity" / "infinity" mark bulk-limit extents
            const auto bound = [&](const char* key) {
                if (e.contains(key) && e.at(key).is_string()) {
                    const std::string s = e.at(key).get<std::string>();
                    if (s == "-infinity")
                        return -std::numeric_limits<double>::infinity();
                    if (s == "infinity")
                        return std::numeric_limits<double>::infinity();
                }
                return quantity(e, key, units::Dimension::length, context.c_str());
            };
            slab.z_lo = bound("z_lo");
            slab.z_hi = bound("z_hi");
            slab.g_b = quantity(e, "g_b_c_m2", units::Dimension::dimensionless, context.c_str());
            slab.host = db.material(field_string(e, "host", context.c_str()));
            slab.label = e.value("label", "");
            elements.push_back(std::move(slab));
        }
        else if (kind == "junction") {
            PointJunction junction;
            if (e.contains("strength_c_m")) {
                junction.strength = quantity(e, "strength_c_m",
                                             units::Dimension::dimensionless, context.c_str());
                if (e.contains("volume"))
                    junction.volume =
                        quantity(e, "volume", units::Dimension::volume, context.c_str());
            }
            else {
                const double g_i =
                    quantity(e, "g_i_c_m2", units::Dimension::dimensionless, context.c_str());
                const double volume =
                    quantity(e, "volume", units::Dimension::volume, context.c_str());
                junction.strength = g_i * volume;
                junction.volume = volume;
            }
            junction.host = db.material(field_string(e, "barrier", context.c_str()));
            if (e.contains("position")) {
                const auto& p = e.at("position");
                if (!p.is_array() || p.size() != 3)
                    throw ConfigError(context + ": 'position' must be a 3-element array");
                for (std::size_t c = 0; c < 3; ++c) {
                    const auto& comp = p.at(c);
                    junction.position[c] =
                        comp.is_number()
                            ? comp.get<double>()
                            : units::parse_quantity(comp.get<std::string>(),
                                                    units::Dimension::length);
                }
            }
            junction.label = e.value("label", "");
            elements.push_back(std::move(junction));
        }
        else {
            throw ConfigError(context + ": unknown element kind '" + kind +
                              "' (interface, slab, junction)");
        }
    }
    return build_stack(std::move(elements), cavity_volume, area);
}

void save_stack(const StackProfile& profile, const std::string& path)
{
    const auto medium_name = [](const SideMedium& m) {
        return m ? m->name : std::string("vacuum");
    };

    json j;
    j["cavity_volume"] = profile.cavity_volume;
    j["area"] = profile.area;
    j["elements"] = json::array();
    for (const auto& element : profile.elements) {
        json e;
        if (const auto* delta = std::get_if<InterfaceDelta>(&element)) {
            e["kind"] = "interface";
            e["z"] = delta->z;
            e["strength_c_per_m"] = delta->strength;
            e["orientation"] = delta->orientation;
            e["side_minus"] = medium_name(delta->side_minus);
            e["side_plus"] = medium_name(delta->side_plus);
            e["eps_host"] = medium_name(delta->eps_host);
            if (delta->thickness)
                e["thickness"] = *delta->thickness;
            if (!delta->label.empty())
                e["label"] = delta->label;
        }
        else if (const auto* slab = std::get_if<Slab>(&element)) {
            e["kind"] = "slab";
            if (slab->infinite_lo())
                e["z_lo"] = "-infinity";
            else
                e["z_lo"] = slab->z_lo;
            if (slab->infinite_hi())
                e["z_hi"] = "infinity";
            else
                e["z_hi"] = slab->z_hi;
            e["g_b_c_m2"] = slab->g_b;
            e["host"] = slab->host.name;
            if (!slab->label.empty())
                e["label"] = slab->label;
        }
        else {
            const auto& junction = std::get<PointJunction>(element);
            e["kind"] = "junction";
            if (junction.volume) {
                e["g_i_c_m2"] = junction.strength / *junction.volume;
                e["volume"] = *junction.volume;
            }
            else {
                e["strength_c_m"] = junction.strength;
            }
            e["barrier"] = junction.host.name;
            e["position"] = {junction.position[0], junction.position[1],
                             junction.position[2]};
            if (!junction.label.empty())
                e["label"] = junction.label;
        }
        j["elements"].push_back(std::move(e));
    }

    std::ofstream out(path);
    if (!out)
        throw IoError("cannot write stack file '" + path + "'");
    out << j.dump(2) << '\n';
}

std::string csv_number(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12e", x);
    return buf;
}

std::string spectrum_csv(const std::vector<SpectrumPoint>& points)
{
    std::string out = "frequency_hz,inverse_q";
    if (!points.empty()) {
        for (const auto& [label, value] : points.front().contributions) {
            (void)value;
            out += ",contrib_" + label;
        }
    }
    out += '\n';
    for (const auto& p : points) {
        out += csv_number(p.frequency_hz);
        out += ',';
        out += csv_number(p.inverse_q);
        for (const auto& [label, value] : p.contributions) {
            (void)label;
            out += ',';
            out += csv_number(value);
        }
        out += '\n';
    }
    return out;
}

std::string budget_csv(const T1Report& report)
{
    std::string out = "region,participation,tan_delta,contribution\n";
    for (const auto& r : report.contributions) {
        out += r.label + ',' + csv_number(r.participation) + ',' + csv_number(r.tan_delta) +
               ',' + csv_number(r.contribution) + '\n';
    }
    out += "total_inverse_q,,," + csv_number(report.inverse_q_total) + '\n';
    out += "t1_us,,,";
    if (report.t1_seconds)
        out += csv_number(*report.t1_microseconds());
    out += '\n';
    return out;
}

std::string materials_csv(const MaterialDatabase& db)
{
    std::string out =
        "kind,name,mass_density_kg_m3,sound_velocity_m_s,rel_permittivity,t_i_m,g_c_m2,"
        "thickness_m,volume_m3,provenance\n";
    for (const auto& m : db.materials()) {
        out += "material," + m.name + ',' + csv_number(m.mass_density) + ',' +
               csv_number(m.sound_velocity) + ',' + csv_number(m.rel_permittivity) + ",,,,," +
               m.provenance + '\n';
    }
    for (const auto& e : db.interfaces()) {
        out += "interface," + e.name + ",,,," + csv_number(e.t_i) + ',' + csv_number(e.g_i) +
               ",,," + e.provenance + '\n';
    }
    for (const auto& e : db.substrates()) {
        out += "substrate," + e.name + ",,,,," + csv_number(e.g_b) + ',' +
               csv_number(e.thickness) + ",," + e.provenance + '\n';
    }
    for (const auto& e : db.junctions()) {
        out += "junction," + e.name + ",,,,," + csv_number(e.g_i) + ",," +
               csv_number(e.volume) + ',' + e.provenance + '\n';
    }
    return out;
}

} // namespace piezoloss::io
