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

#include <cmath>

#include <doctest.h>

#include "piezoloss/constants.hpp"
#include "piezoloss/database.hpp"
#include "piezoloss/errors.hpp"
#include "piezoloss/loss.hpp"

using namespace piezoloss;
using constants::pi;

namespace {

const MaterialDatabase& db()
{
    static const MaterialDatabase instance = MaterialDatabase::builtin();
    return instance;
}

// The reference predictions' conditions.
const ThermalState& table_state()
{
    static const ThermalState state{2.0 * pi * 10e9, 0.010, 1.0};
    return state;
}

double interface_from_entry(const std::string& name, const ThermalState& state)
{
    const auto& e = db().interface(name);
    return interface_tan_delta(e.t_i, e.g_i, db().medium(e.side_minus), db().medium(e.side_plus),
                               db().medium(e.eps_host), state);
}

} // namespace

TEST_CASE("interface loss tangents reproduce the reference table")
{
    // Frozen from direct evaluation with the handbook constants; the
    // reference rounded values are 2e-4, 5e-6, 1e-7, 1e-7.
    CHECK(interface_from_entry("Al/vacuum", table_state()) ==
          doctest::Approx(1.790823554e-4).epsilon(1e-6));
    CHECK(interface_from_entry("Nb/vacuum", table_state()) ==
          doctest::Approx(5.661143226e-6).epsilon(1e-6));
    CHECK(interface_from_entry("Al2O3/vacuum", table_state()) ==
          doctest::Approx(1.240276342e-7).epsilon(1e-6));
    CHECK(interface_from_entry("Al2O3/Al", table_state()) ==
          doctest::Approx(1.467636427e-7).epsilon(1e-6));
}

TEST_CASE("interface scaling laws and edge cases")
{
    const auto& e = db().interface("Al/vacuum");
    const SideMedium al = db().medium("Al");
    const SideMedium vac = db().medium("vacuum");

    SUBCASE("linear in omega at negligible n_B")
    {
        ThermalState doubled = table_state();
        doubled.omega *= 2.0;
        const double r = interface_tan_delta(e.t_i, e.g_i, al, vac, vac, doubled) /
                         interface_tan_delta(e.t_i, e.g_i, al, vac, vac, table_state());
        CHECK(std::abs(r - 2.0) <= 1e-9);
    }

    SUBCASE("quadratic in g_I, linear in t_I")
    {
        const double base = interface_tan_delta(e.t_i, e.g_i, al, vac, vac, table_state());
        CHECK(interface_tan_delta(e.t_i, 2.0 * e.g_i, al, vac, vac, table_state()) ==
              doctest::Approx(4.0 * base).epsilon(1e-12));
        CHECK(interface_tan_delta(3.0 * e.t_i, e.g_i, al, vac, vac, table_state()) ==
              doctest::Approx(3.0 * base).epsilon(1e-12));
        CHECK(interface_tan_delta(e.t_i, 0.0, al, vac, vac, table_state()) == 0.0);
    }

    SUBCASE("two material sides add their phonon channels")
    {
        const SideMedium sapphire = db().medium("Al2O3");
        const double one = interface_tan_delta(e.t_i, e.g_i, al, vac, vac, table_state());
        const double other = interface_tan_delta(e.t_i, e.g_i, vac, sapphire, vac, table_state());
        const double both = interface_tan_delta(e.t_i, e.g_i, al, sapphire, vac, table_state());
        CHECK(both == doctest::Approx(one + other).epsilon(1e-12));
    }

    SUBCASE("vacuum on both sides cannot emit")
    {
        CHECK_THROWS_AS(interface_tan_delta(e.t_i, e.g_i, vac, vac, vac, table_state()),
                        InvalidInputError);
    }
}

TEST_CASE("substrate loss tangent variants")
{
    const auto& sio2 = db().substrate("SiO2");
    const Material host = db().material("SiO2");

    SUBCASE("reference-table values (frozen)")
    {
        // averaged variant: the tabulated ~4e-4 prediction within its bracket
        CHECK(substrate_tan_delta(sio2.thickness, sio2.g_b, host, table_state(),
                                  SubstrateVariant::reference_averaged) ==
              doctest::Approx(3.391528978e-4).epsilon(1e-6));
        CHECK(substrate_tan_delta(sio2.thickness, sio2.g_b, host, table_state(),
                                  SubstrateVariant::reference_exact) ==
              doctest::Approx(5.087293467e-4).epsilon(1e-6));

        const auto& nb2o5 = db().substrate("Nb2O5");
        CHECK(substrate_tan_delta(nb2o5.thickness, nb2o5.g_b, db().material("Nb2O5"),
                                  table_state(), SubstrateVariant::reference_exact) ==
              doctest::Approx(9.719491365e-4).epsilon(1e-6));
    }

    SUBCASE("reference convention vanishes at Omega L / v = pi")
    {
        ThermalState state = table_state();
        const double L = sio2.thickness;
        state.omega = pi * host.sound_velocity / L;
        const double at_node = substrate_tan_delta(L, sio2.g_b, host, state,
                                                   SubstrateVariant::reference_exact);
        const double averaged = substrate_tan_delta(L, sio2.g_b, host, state,
                                                    SubstrateVariant::reference_averaged);
        CHECK(std::abs(at_node) <= 1e-25 * averaged);
    }

    SUBCASE("averaged variant scales as 1/(Omega L)")
    {
        const double base = substrate_tan_delta(sio2.thickness, sio2.g_b, host, table_state(),
                                                SubstrateVariant::reference_averaged);
        CHECK(substrate_tan_delta(2.0 * sio2.thickness, sio2.g_b, host, table_state(),
                                  SubstrateVariant::reference_averaged) ==
              doctest::Approx(0.5 * base).epsilon(1e-12));

        ThermalState doubled = table_state();
        doubled.omega *= 2.0;
        const double r = substrate_tan_delta(sio2.thickness, sio2.g_b, host, doubled,
                                             SubstrateVariant::reference_averaged) /
                         base;
        CHECK(std::abs(r - 0.5) <= 1e-9);
    }

    SUBCASE("the two oscillation conventions agree to leading order and their averages "
            "differ by the documented factor 4")
    {
        // small Omega L / v: both variants approach the same quadratic
        ThermalState state = table_state();
        state.omega = 0.01 * host.sound_velocity / sio2.thickness;
        const double reference = substrate_tan_delta(sio2.thickness, sio2.g_b, host, state,
                                                   SubstrateVariant::reference_exact);
        const double derived = substrate_tan_delta(sio2.thickness, sio2.g_b, host, state,
                                                   SubstrateVariant::form_factor_exact);
        CHECK(reference == doctest::Approx(derived).epsilon(1e-4));

        const double reference_avg = substrate_tan_delta(
            sio2.thickness, sio2.g_b, host, table_state(), SubstrateVariant::reference_averaged);
        const double derived_avg =
            substrate_tan_delta(sio2.thickness, sio2.g_b, host, table_state(),
                                SubstrateVariant::form_factor_averaged);
        CHECK(derived_avg == doctest::Approx(4.0 * reference_avg).epsilon(1e-12));
    }

    SUBCASE("input validation")
    {
        CHECK_THROWS_AS(
            substrate_tan_delta(0.0, 0.09, host, table_state(), SubstrateVariant::reference_exact),
            InvalidInputError);
        CHECK_THROWS_AS(substrate_tan_delta(1e-7, -1.0, host, table_state(),
                                            SubstrateVariant::reference_exact),
                        InvalidInputError);
    }
}

TEST_CASE("junction loss tangents")
{
    const auto& al_jj = db().junction("Al/Al2O3/Al");
    const Material sapphire = db().material("Al2O3");

    SUBCASE("reference-table values (frozen)")
    {
        CHECK(junction_tan_delta(al_jj.g_i, al_jj.volume, sapphire, table_state()) ==
              doctest::Approx(1.669458973e-7).epsilon(1e-6));
        const auto& nb_jj = db().junction("Nb/Nb2O5/Nb");
        CHECK(junction_tan_delta(nb_jj.g_i, nb_jj.volume, db().material("Nb2O5"),
                                 table_state()) ==
              doctest::Approx(3.911114464e-4).epsilon(1e-6));
    }

    SUBCASE("cubic frequency scaling at negligible n_B")
    {
        ThermalState doubled = table_state();
        doubled.omega *= 2.0;
        const double r = junction_tan_delta(al_jj.g_i, al_jj.volume, sapphire, doubled) /
                         junction_tan_delta(al_jj.g_i, al_jj.volume, sapphire, table_state());
        CHECK(std::abs(r - 8.0) <= 8.0 * 1e-9);
    }

    SUBCASE("linear in junction volume")
    {
        const double base =
            junction_tan_delta(al_jj.g_i, al_jj.volume, sapphire, table_state());
        CHECK(junction_tan_delta(al_jj.g_i, 0.5 * al_jj.volume, sapphire, table_state()) ==
              doctest::Approx(0.5 * base).epsilon(1e-12));
        CHECK_THROWS_AS(junction_tan_delta(al_jj.g_i, 0.0, sapphire, table_state()),
                        InvalidInputError);
    }
}

TEST_CASE("closed forms satisfy detailed balance exactly")
{
    ThermalState state;
    state.omega = 2.0 * pi * 7.3e9;
    state.temperature = 0.035;
    state.photon_number = bose_occupation(state.omega, state.temperature);

    const auto& e = db().interface("Al2O3/Al");
    CHECK(interface_tan_delta(e.t_i, e.g_i, db().medium(e.side_minus), db().medium(e.side_plus),
                              db().medium(e.eps_host), state) == 0.0);
    const auto& s = db().substrate("SiO2");
    CHECK(substrate_tan_delta(s.thickness, s.g_b, db().material("SiO2"), state,
                              SubstrateVariant::reference_exact) == 0.0);
    const auto& j = db().junction("Al/Al2O3/Al");
    CHECK(junction_tan_delta(j.g_i, j.volume, db().material("Al2O3"), state) == 0.0);
}
