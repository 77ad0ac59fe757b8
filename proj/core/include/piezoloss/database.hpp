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

#include <string>
#include <vector>

#include "piezoloss/materials.hpp"

namespace piezoloss {

/// Surface/interface piezoelectric entry: g(r) = g_I t_I delta(z) z_hat.
/// `eps_host` names the medium whose permittivity enters the interface loss
/// tangent: vacuum for metal/vacuum surfaces, the dielectric whenever one is
/// involved.
struct InterfaceEntry {
    std::string name;       // e.g. "Al/vacuum", "Al2O3/Al"
    double t_i = 0.0;       // m, interface thickness
    double g_i = 0.0;       // C/m^2
    std::string side_minus; // material name or "vacuum"; material 1 of the pair
    std::string side_plus;  // material name or "vacuum"; material 2 of the pair
    std::string eps_host;   // material name or "vacuum"
    std::string provenance;
};

/// Bulk piezoelectric substrate entry: |g(r)| = g_B over thickness L.
struct SubstrateEntry {
    std::string name;
    double g_b = 0.0;       // C/m^2
    double thickness = 0.0; // m (the L used for the tabulated predictions)
    std::string host;       // material name
    std::string provenance;
};

/// Point junction entry: g(r) = g V_J delta(r) z_hat, with the barrier
/// material supplying rho, v and eps.
struct JunctionEntry {
    std::string name; // e.g. "Al/Al2O3/Al"
    double g_i = 0.0; // C/m^2
    double volume = 0.0; // m^3
    std::string barrier; // material name
    std::string provenance;
};

/// Read-only after construction; safe to share across threads.
///
/// The built-in table carries the tabulated interface/substrate/junction
/// coefficients plus handbook acoustic constants (every record has a
/// provenance label). An external JSON file with the same schema can replace
/// it (CLI --materials-file).
class MaterialDatabase {
  public:
    static MaterialDatabase builtin();
    static MaterialDatabase load(const std::string& path);
    void save(const std::string& path) const;

    /// Lookups throw NotFoundError listing the available names.
    const Material& material(const std::string& name) const;
    const InterfaceEntry& interface(const std::string& name) const;
    const SubstrateEntry& substrate(const std::string& name) const;
    const JunctionEntry& junction(const std::string& name) const;

    /// Resolve a side name: "vacuum" (case-insensitive) -> vacuum,
    /// otherwise a material lookup.
    SideMedium medium(const std::string& name) const;

    const std::vector<Material>& materials() const { return materials_; }
    const std::vector<InterfaceEntry>& interfaces() const { return interfaces_; }
    const std::vector<SubstrateEntry>& substrates() const { return substrates_; }
    const std::vector<JunctionEntry>& junctions() const { return junctions_; }

    void add(Material m);
    void add(InterfaceEntry e);
    void add(SubstrateEntry e);
    void add(JunctionEntry e);

  private:
    std::vector<Material> materials_;
    std::vector<InterfaceEntry> interfaces_;
    std::vector<SubstrateEntry> substrates_;
    std::vector<JunctionEntry> junctions_;
};

} // namespace piezoloss
