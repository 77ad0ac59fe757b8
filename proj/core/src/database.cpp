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

#include "piezoloss/database.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "piezoloss/constants.hpp"
#include "piezoloss/errors.hpp"
#include "piezoloss/units.hpp"

namespace piezoloss {

namespace {

using nlohmann::json;

bool iequals_vacuum(const std::string& name)
{
    if (name.size() != 6)
        return false;
    static const char ref[] = "vacuum";
    for (std::size_t i = 0; i < 6; ++i) {
        if (std::tolower(static_cast<unsigned char>(name[i])) != ref[i])
            return false;
    }
    return true;
}

template <typename T>
const T& find_entry(const std::vector<T>& entries, const std::string& name, const char* kind)
{
    for (const auto& e : entries) {
        if (e.name == name)
            return e;
    }
    std::vector<std::string> names;
    names.reserve(entries.size());
    for (const auto& e : entries)
        names.push_back(e.name);
    throw NotFoundError(std::string(kind) + " " + name, names);
}

double quantity_field(const json& j, const char* key, units::Dimension dim)
{
    if (!j.contains(key))
        throw ConfigError(std::string("database: missing field '") + key + "'");
    const auto& v = j.at(key);
    if (v.is_number())
        return v.get<double>(); // bare numbers are SI
    if (v.is_string())
        return units::parse_quantity(v.get<std::string>(), dim);
    throw ConfigError(std::string("database: field '") + key + "' must be a number or a string");
}

} // namespace

MaterialDatabase MaterialDatabase::builtin()
{
    using constants::angstrom;
    MaterialDatabase db;

    // Acoustic/dielectric constants: handbook longitudinal values chosen to
    // reproduce the reference loss-tangent table. Metals carry eps_r = 1;
    // their surface loss uses eps0 regardless.
    db.add(Material{"Al", 2700.0, 6420.0, 1.0, "handbook"});
    db.add(Material{"Nb", 8570.0, 5070.0, 1.0, "handbook"});
    db.add(Material{"Al2O3", 3980.0, 11000.0, 10.0, "handbook"});
    db.add(Material{"SiO2", 2650.0, 6000.0, 4.5, "handbook"});
    db.add(Material{"Nb2O5", 4600.0, 5600.0, 30.0, "estimated"});

    // Surface/interface coefficients. eps_host follows the reproduction
    // rule: metal/vacuum surfaces see eps0, interfaces involving a
    // dielectric see that dielectric.
    db.add(InterfaceEntry{"Al/vacuum", 2.03 * angstrom, 0.73, "Al", "vacuum", "vacuum", "paper"});
    db.add(InterfaceEntry{"Nb/vacuum", 1.65 * angstrom, 0.18, "Nb", "vacuum", "vacuum", "paper"});
    db.add(InterfaceEntry{"Al2O3/vacuum", 2.17 * angstrom, 0.16, "Al2O3", "vacuum", "Al2O3",
                          "paper"});
    db.add(InterfaceEntry{"Al2O3/Al", 2.17 * angstrom, 0.06, "Al2O3", "Al", "Al2O3", "paper"});

    // Bulk piezoelectric substrates.
    db.add(SubstrateEntry{"SiO2", 0.09, 1e3 * angstrom, "SiO2", "paper"});
    db.add(SubstrateEntry{"Nb2O5", 1.0, 1e2 * angstrom, "Nb2O5", "estimated"});

    // Josephson junctions; V_J = 2e8 A^3 for the tabulated predictions. The
    // Nb junction couples through the barrier's own bulk coefficient.
    const double vj = 2e8 * angstrom * angstrom * angstrom;
    db.add(JunctionEntry{"Al/Al2O3/Al", 0.06, vj, "Al2O3", "paper"});
    db.add(JunctionEntry{"Nb/Nb2O5/Nb", 1.0, vj, "Nb2O5", "estimated"});

    return db;
}

void MaterialDatabase::add(Material m)
{
    m.validate();
    materials_.push_back(std::move(m));
}

void MaterialDatabase::add(InterfaceEntry e)
{
    if (!(e.t_i > 0.0))
        throw InvalidInputError("interface '" + e.name + "': t_I must be > 0");
    if (!(e.g_i >= 0.0))
        throw InvalidInputError("interface '" + e.name + "': g_I must be >= 0");
    interfaces_.push_back(std::move(e));
}

void MaterialDatabase::add(SubstrateEntry e)
{
    if (!(e.thickness > 0.0))
        throw InvalidInputError("substrate '" + e.name + "': thickness must be > 0");
    if (!(e.g_b >= 0.0))
        throw InvalidInputError("substrate '" + e.name + "': g_B must be >= 0");
    substrates_.push_back(std::move(e));
}

void MaterialDatabase::add(JunctionEntry e)
{
    if (!(e.volume > 0.0))
        throw InvalidInputError("junction '" + e.name + "': V_J must be > 0");
    if (!(e.g_i >= 0.0))
        throw InvalidInputError("junction '" + e.name + "': g_I must be >= 0");
    junctions_.push_back(std::move(e));
}

const Material& MaterialDatabase::material(const std::string& name) const
{
    return find_entry(materials_, name, "material");
}

const InterfaceEntry& MaterialDatabase::interface(const std::string& name) const
{
    return find_entry(interfaces_, name, "interface");
}

const SubstrateEntry& MaterialDatabase::substrate(const std::string& name) const
{
    return find_entry(substrates_, name, "substrate");
}

const JunctionEntry& MaterialDatabase::junction(const std::string& name) const
{
    return find_entry(junctions_, name, "junction");
}

SideMedium MaterialDatabase::medium(const std::string& name) const
{
    if (iequals_vacuum(name))
        return std::nullopt;
    return material(name);
}

MaterialDatabase MaterialDatabase::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open materials file '" + path + "'");
    json j;
    try {
        in >> j;
    }
    catch (const json::exception& e) {
        throw ConfigError("materials file '" + path + "': " + e.what());
    }

    MaterialDatabase db;
    try {
        for (const auto& m : j.value("materials", json::array())) {
            db.add(Material{m.at("name").get<std::string>(),
                            m.at("mass_density_kg_m3").get<double>(),
                            m.at("sound_velocity_m_s").get<double>(),
                            m.value("rel_permittivity", 1.0), m.value("provenance", "")});
        }
        for (const auto& e : j.value("interfaces", json::array())) {
            db.add(InterfaceEntry{e.at("name").get<std::string>(),
                                  quantity_field(e, "t_i", units::Dimension::length),
                                  e.at("g_i_c_m2").get<double>(),
                                  e.at("side_minus").get<std::string>(),
                                  e.at("side_plus").get<std::string>(),
                                  e.value("eps_host", "vacuum"), e.value("provenance", "")});
        }
        for (const auto& e : j.value("substrates", json::array())) {
            db.add(SubstrateEntry{e.at("name").get<std::string>(), e.at("g_b_c_m2").get<double>(),
                                  quantity_field(e, "thickness", units::Dimension::length),
                                  e.at("host").get<std::string>(), e.value("provenance", "")});
        }
        for (const auto& e : j.value("junctions", json::array())) {
            db.add(JunctionEntry{e.at("name").get<std::string>(), e.at("g_i_c_m2").get<double>(),
                                 quantity_field(e, "volume", units::Dimension::volume),
                                 e.at("barrier").get<std::string>(), e.value("provenance", "")});
        }
    }
    catch (const json::exception& e) {
        throw ConfigError("materials file '" + path + "': " + e.what());
    }
    return db;
}

void MaterialDatabase::save(const std::string& path) const
{
    json j;
    j["materials"] = json::array();
    for (const auto& m : materials_) {
        j["materials"].push_back({{"name", m.name},
                                  {"mass_density_kg_m3", m.mass_density},
                                  {"sound_velocity_m_s", m.sound_velocity},
                                  {"rel_permittivity", m.rel_permittivity},
                                  {"provenance", m.provenance}});
    }
    j["interfaces"] = json::array();
    for (const auto& e : interfaces_) {
        j["interfaces"].push_back({{"name", e.name},
                                   {"t_i", e.t_i},
                                   {"g_i_c_m2", e.g_i},
                                   {"side_minus", e.side_minus},
                                   {"side_plus", e.side_plus},
                                   {"eps_host", e.eps_host},
                                   {"provenance", e.provenance}});
    }
    j["substrates"] = json::array();
    for (const auto& e : substrates_) {
        j["substrates"].push_back({{"name", e.name},
                                   {"g_b_c_m2", e.g_b},
                                   {"thickness", e.thickness},
                                   {"host", e.host},
                                   {"provenance", e.provenance}});
    }
    j["junctions"] = json::array();
    for (const auto& e : junctions_) {
        j["junctions"].push_back({{"name", e.name},
                                  {"g_i_c_m2", e.g_i},
                                  {"volume", e.volume},
                                  {"barrier", e.barrier},
                                  {"provenance", e.provenance}});
    }

    std::ofstream out(path);
    if (!out)
        throw IoError("cannot write materials file '" + path + "'");
    out << j.dump(2) << '\n';
}

} // namespace piezoloss
