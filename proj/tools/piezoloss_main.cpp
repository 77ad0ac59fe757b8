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

// piezoloss: intrinsic piezoelectric photon-loss calculator for
// superconducting devices. Subcommands: materials, tan-delta, spectrum,
// budget. All numeric flags accept unit suffixes (GHz, mK, A, um, A3, ...).
//
// Exit codes: 0 success, 2 usage/validation, 3 unknown entity, 4 I/O,
// 5 numerical accuracy failure.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "piezoloss/piezoloss.hpp"

namespace {

using namespace piezoloss;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitUnknownEntity = 3;
constexpr int kExitIo = 4;
constexpr int kExitAccuracy = 5;

struct GlobalOptions {
    std::string materials_file;
    std::string format = "table";
    std::string output_path;
};

struct ThermalFlags {
    std::string freq = "10GHz";
    std::string temp = "10mK";
    double photon_number = 1.0;

    ThermalState resolve() const
    {
        ThermalState state;
        state.omega = 2.0 * constants::pi *
                      units::parse_quantity(freq, units::Dimension::frequency);
        state.temperature = units::parse_quantity(temp, units::Dimension::temperature);
        state.photon_number = photon_number;
        state.validate();
        return state;
    }
};

void add_thermal_flags(CLI::App* cmd, ThermalFlags& flags)
{
    cmd->add_option("--freq", flags.freq, "photon frequency (Hz, kHz, MHz, GHz)")
        ->capture_default_str();
    cmd->add_option("--temp", flags.temp, "bath temperature (K, mK, uK)")
        ->capture_default_str();
    cmd->add_option("--na", flags.photon_number, "drive photon number n_a")
        ->capture_default_str();
}

MaterialDatabase open_database(const GlobalOptions& global)
{
    if (global.materials_file.empty())
        return MaterialDatabase::builtin();
    return MaterialDatabase::load(global.materials_file);
}

void emit(const GlobalOptions& global, const std::string& text)
{
    if (global.output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(global.output_path, std::ios::binary);
    if (!out)
        throw IoError("cannot write output file '" + global.output_path + "'");
    out << text;
    if (!out)
        throw IoError("failed while writing output file '" + global.output_path + "'");
}

std::string medium_name(const SideMedium& m) { return m ? m->name : "vacuum"; }

std::string thermal_echo(const ThermalState& state)
{
    std::ostringstream os;
    os << "frequency_hz=" << state.omega / (2.0 * constants::pi)
       << " temperature_k=" << state.temperature << " n_a=" << state.photon_number
       << " n_b=" << bose_occupation(state.omega, state.temperature);
    return os.str();
}

// --- materials ---------------------------------------------------------------

int cmd_materials(const GlobalOptions& global)
{
    const MaterialDatabase db = open_database(global);
    if (global.format == "csv") {
        emit(global, io::materials_csv(db));
        return kExitOk;
    }

    std::ostringstream os;
    os << "materials (rho kg/m^3, v m/s, eps_r):\n";
    for (const auto& m : db.materials()) {
        os << "  " << m.name << ": rho=" << m.mass_density << " v=" << m.sound_velocity
           << " eps_r=" << m.rel_permittivity << "  [" << m.provenance << "]\n";
    }
    os << "interfaces (t_I m, g_I C/m^2, eps host):\n";
    for (const auto& e : db.interfaces()) {
        os << "  " << e.name << ": t_I=" << e.t_i << " g_I=" << e.g_i << " eps_host="
           << e.eps_host << "  [" << e.provenance << "]\n";
    }
    os << "substrates (g_B C/m^2, L m):\n";
    for (const auto& e : db.substrates()) {
        os << "  " << e.name << ": g_B=" << e.g_b << " L=" << e.thickness << " host=" << e.host
           << "  [" << e.provenance << "]\n";
    }
    os << "junctions (g C/m^2, V_J m^3, barrier):\n";
    for (const auto& e : db.junctions()) {
        os << "  " << e.name << ": g=" << e.g_i << " V_J=" << e.volume
           << " barrier=" << e.barrier << "  [" << e.provenance << "]\n";
    }
    emit(global, os.str());
    return kExitOk;
}

// --- tan-delta ---------------------------------------------------------------

struct InterfaceFlags {
    std::string pair;
    std::string ti, gi;
    std::string side1, side2, eps;
};

int cmd_tan_delta_interface(const GlobalOptions& global, const InterfaceFlags& flags,
                            const ThermalFlags& thermal)
{
    const MaterialDatabase db = open_database(global);
    const ThermalState state = thermal.resolve();

    double t_i = 0.0, g_i = 0.0;
    SideMedium side_minus, side_plus, eps_host;
    std::string provenance = "user";
    std::string name;

    if (!flags.pair.empty()) {
        const InterfaceEntry& entry = db.interface(flags.pair);
        t_i = entry.t_i;
        g_i = entry.g_i;
        side_minus = db.medium(entry.side_minus);
        side_plus = db.medium(entry.side_plus);
        eps_host = db.medium(entry.eps_host);
        provenance = entry.provenance;
        name = entry.name;
    }
    else {
        if (flags.ti.empty() || flags.gi.empty() || (flags.side1.empty() && flags.side2.empty()))
            throw InvalidInputError(
                "interface: need --pair, or --ti, --gi and at least one of --side1/--side2");
        t_i = units::parse_quantity(flags.ti, units::Dimension::length);
        g_i = units::parse_quantity(flags.gi, units::Dimension::dimensionless);
        side_minus = flags.side1.empty() ? SideMedium{} : db.medium(flags.side1);
        side_plus = flags.side2.empty() ? SideMedium{} : db.medium(flags.side2);
        eps_host = flags.eps.empty() ? SideMedium{} : db.medium(flags.eps);
        name = medium_name(side_minus) + "/" + medium_name(side_plus);
    }

    const double tan_delta =
        interface_tan_delta(t_i, g_i, side_minus, side_plus, eps_host, state);

    std::ostringstream os;
    os << "interface " << name << ": tan_delta=" << io::csv_number(tan_delta) << "\n"
       << "  inputs: t_i_m=" << t_i << " g_i_c_m2=" << g_i << " side_minus="
       << medium_name(side_minus) << " side_plus=" << medium_name(side_plus)
       << " eps_host=" << medium_name(eps_host) << " [" << provenance << "]\n"
       << "  " << thermal_echo(state) << "\n";
    emit(global, os.str());
    return kExitOk;
}

struct SubstrateFlags {
    std::string entry;
    std::string gb, thickness, host;
    std::string variant = "reference_exact";
};

SubstrateVariant variant_from_name(const std::string& name)
{
    if (name == "reference_exact")
        return SubstrateVariant::reference_exact;
    if (name == "reference_averaged" || name == "averaged")
        return SubstrateVariant::reference_averaged;
    if (name == "form_factor_exact")
        return SubstrateVariant::form_factor_exact;
    if (name == "form_factor_averaged")
        return SubstrateVariant::form_factor_averaged;
    throw InvalidInputError("unknown substrate variant '" + name + "'");
}

int cmd_tan_delta_substrate(const GlobalOptions& global, const SubstrateFlags& flags,
                            const ThermalFlags& thermal)
{
    const MaterialDatabase db = open_database(global);
    const ThermalState state = thermal.resolve();

    double g_b = 0.0, thickness = 0.0;
    Material host;
    std::string provenance = "user";
    std::string name = "substrate";

    if (!flags.entry.empty()) {
        const SubstrateEntry& entry = db.substrate(flags.entry);
        g_b = entry.g_b;
        thickness = entry.thickness;
        host = db.material(entry.host);
        provenance = entry.provenance;
        name = entry.name;
    }
    if (!flags.gb.empty())
        g_b = units::parse_quantity(flags.gb, units::Dimension::dimensionless);
    if (!flags.thickness.empty())
        thickness = units::parse_quantity(flags.thickness, units::Dimension::length);
    if (!flags.host.empty())
        host = db.material(flags.host);
    if (flags.entry.empty() && flags.host.empty())
        throw InvalidInputError("substrate: need --entry or --host (plus --gB and --L)");
    if (flags.entry.empty() && (flags.gb.empty() || flags.thickness.empty()))
        throw InvalidInputError("substrate: need --gB and --L when no --entry is given");

    const SubstrateVariant variant = variant_from_name(flags.variant);
    const double tan_delta = substrate_tan_delta(thickness, g_b, host, state, variant);

    std::ostringstream os;
    os << "substrate " << name << ": tan_delta=" << io::csv_number(tan_delta) << "\n"
       << "  inputs: g_b_c_m2=" << g_b << " thickness_m=" << thickness << " host=" << host.name
       << " (rho=" << host.mass_density << ", v=" << host.sound_velocity
       << ", eps_r=" << host.rel_permittivity << ") variant=" << flags.variant << " ["
       << provenance << "]\n"
       << "  " << thermal_echo(state) << "\n";
    emit(global, os.str());
    return kExitOk;
}

struct JunctionFlags {
    std::string pair;
    std::string gi, vj, barrier;
};

int cmd_tan_delta_junction(const GlobalOptions& global, const JunctionFlags& flags,
                           const ThermalFlags& thermal)
{
    const MaterialDatabase db = open_database(global);
    const ThermalState state = thermal.resolve();

    double g_i = 0.0, volume = 0.0;
    Material barrier;
    std::string provenance = "user";
    std::string name = "junction";

    if (!flags.pair.empty()) {
        const JunctionEntry& entry = db.junction(flags.pair);
        g_i = entry.g_i;
        volume = entry.volume;
        barrier = db.material(entry.barrier);
        provenance = entry.provenance;
        name = entry.name;
    }
    if (!flags.gi.empty())
        g_i = units::parse_quantity(flags.gi, units::Dimension::dimensionless);
    if (!flags.vj.empty())
        volume = units::parse_quantity(flags.vj, units::Dimension::volume);
    if (!flags.barrier.empty())
        barrier = db.material(flags.barrier);
    if (flags.pair.empty() && flags.barrier.empty())
        throw InvalidInputError("junction: need --pair or --barrier (plus --gi and --vj)");
    if (flags.pair.empty() && (flags.gi.empty() || flags.vj.empty()))
        throw InvalidInputError("junction: need --gi and --vj when no --pair is given");

    const double tan_delta = junction_tan_delta(g_i, volume, barrier, state);

    std::ostringstream os;
    os << "junction " << name << ": tan_delta=" << io::csv_number(tan_delta) << "\n"
       << "  inputs: g_i_c_m2=" << g_i << " v_j_m3=" << volume << " barrier=" << barrier.name
       << " (rho=" << barrier.mass_density << ", v=" << barrier.sound_velocity
       << ", eps_r=" << barrier.rel_permittivity << ") [" << provenance << "]\n"
       << "  " << thermal_echo(state) << "\n";
    emit(global, os.str());
    return kExitOk;
}

// --- spectrum ----------------------------------------------------------------

struct SpectrumFlags {
    std::string stack_file;
    std::string metal = "Al";
    std::string dielectric = "Al2O3";
    std::string width = "20um";
    std::string d = "2um";
    std::string metal_thickness = "0.2um";
    double f_mv = 6.5e-6;
    double f_dv = 2.9e-4;
    double f_dm = 2.9e-3;
    std::string from = "1GHz";
    std::string to = "20GHz";
    int points = 400;
    bool log_spacing = false;
    int threads = 0;
};

int cmd_spectrum(const GlobalOptions& global, const SpectrumFlags& flags,
                 const ThermalFlags& thermal)
{
    const MaterialDatabase db = open_database(global);
    const ThermalState state = thermal.resolve();

    StackProfile profile;
    if (!flags.stack_file.empty()) {
        profile = io::load_stack(flags.stack_file, db);
    }
    else {
        profile = microstrip_profile(
            units::parse_quantity(flags.width, units::Dimension::length),
            units::parse_quantity(flags.d, units::Dimension::length),
            units::parse_quantity(flags.metal_thickness, units::Dimension::length),
            db.material(flags.metal), db.material(flags.dielectric), db);
    }

    const std::map<std::string, double> participation{
        {"MV", flags.f_mv}, {"DV", flags.f_dv}, {"DM", flags.f_dm}};

    SweepOptions options;
    options.log_spacing = flags.log_spacing;
    options.threads = flags.threads;

    const auto points = microstrip_spectrum(
        profile, participation, units::parse_quantity(flags.from, units::Dimension::frequency),
        units::parse_quantity(flags.to, units::Dimension::frequency), flags.points, state,
        options);
    emit(global, io::spectrum_csv(points));
    return kExitOk;
}

// --- budget -------------------------------------------------------------------

int cmd_budget(const GlobalOptions& global, const std::string& device_file)
{
    const MaterialDatabase db = open_database(global);
    const ParticipationBudget budget = io::load_budget(device_file, db);
    const T1Report report = t1_budget(budget);

    if (global.format == "csv") {
        emit(global, io::budget_csv(report));
        return kExitOk;
    }

    std::ostringstream os;
    os << "region          f_i            tan_delta      contribution\n";
    for (const auto& r : report.contributions) {
        os << "  " << r.label;
        for (std::size_t pad = r.label.size(); pad < 14; ++pad)
            os << ' ';
        os << io::csv_number(r.participation) << "  " << io::csv_number(r.tan_delta) << "  "
           << io::csv_number(r.contribution) << "\n";
    }
    os << "total 1/Q = " << io::csv_number(report.inverse_q_total) << "\n";
    if (report.no_loss()) {
        os << "T1 = infinite (no net loss)\n";
    }
    else {
        os << "T1 = " << io::csv_number(*report.t1_seconds) << " s = "
           << io::csv_number(*report.t1_microseconds()) << " us\n";
        os << "dominant region: " << report.dominant_region << "\n";
    }
    os << "  " << thermal_echo(budget.state) << "\n";
    emit(global, os.str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"piezoloss: intrinsic piezoelectric photon loss in superconducting devices"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--materials-file", global.materials_file,
                   "override the built-in material database (JSON)");
    app.add_option("--format", global.format, "output format: table or csv")
        ->check(CLI::IsMember({"table", "csv"}))
        ->capture_default_str();
    app.add_option("-o,--output", global.output_path, "write output to a file instead of stdout");

    CLI::App* materials = app.add_subcommand("materials", "list the material database");

    CLI::App* tan_delta =
        app.add_subcommand("tan-delta", "closed-form intrinsic loss tangents");
    tan_delta->require_subcommand(1);

    InterfaceFlags iface;
    ThermalFlags iface_thermal;
    CLI::App* td_interface = tan_delta->add_subcommand("interface", "interface loss tangent");
    td_interface->add_option("--pair", iface.pair, "database pairing, e.g. Al/vacuum");
    td_interface->add_option("--ti", iface.ti, "interface thickness (length units)");
    td_interface->add_option("--gi", iface.gi, "piezoelectric coefficient g_I (C/m^2)");
    td_interface->add_option("--side1", iface.side1, "material below, or 'vacuum'");
    td_interface->add_option("--side2", iface.side2, "material above, or 'vacuum'");
    td_interface->add_option("--eps", iface.eps, "permittivity referent material, or 'vacuum'");
    add_thermal_flags(td_interface, iface_thermal);

    SubstrateFlags substrate;
    ThermalFlags substrate_thermal;
    CLI::App* td_substrate = tan_delta->add_subcommand("substrate", "substrate loss tangent");
    td_substrate->add_option("--entry", substrate.entry, "database substrate, e.g. SiO2");
    td_substrate->add_option("--gB", substrate.gb, "bulk coefficient g_B (C/m^2)");
    td_substrate->add_option("--L", substrate.thickness, "substrate thickness (length units)");
    td_substrate->add_option("--host", substrate.host, "host material");
    td_substrate
        ->add_option("--variant", substrate.variant,
                     "reference_exact | reference_averaged | form_factor_exact | "
                     "form_factor_averaged")
        ->capture_default_str();
    add_thermal_flags(td_substrate, substrate_thermal);

    JunctionFlags junction;
    ThermalFlags junction_thermal;
    CLI::App* td_junction = tan_delta->add_subcommand("junction", "junction loss tangent");
    td_junction->add_option("--pair", junction.pair, "database junction, e.g. Al/Al2O3/Al");
    td_junction->add_option("--gi", junction.gi, "coefficient g_I (C/m^2)");
    td_junction->add_option("--vj", junction.vj, "junction volume (volume units, e.g. 2e8A3)");
    td_junction->add_option("--barrier", junction.barrier, "barrier material");
    add_thermal_flags(td_junction, junction_thermal);

    SpectrumFlags spectrum;
    ThermalFlags spectrum_thermal;
    CLI::App* sp = app.add_subcommand("spectrum", "interference spectrum sweep (CSV)");
    sp->add_option("--stack", spectrum.stack_file, "stack profile JSON (instead of microstrip)");
    sp->add_option("--metal", spectrum.metal, "microstrip metal")->capture_default_str();
    sp->add_option("--dielectric", spectrum.dielectric, "microstrip dielectric")
        ->capture_default_str();
    sp->add_option("--width", spectrum.width, "strip width W")->capture_default_str();
    sp->add_option("--d", spectrum.d, "dielectric thickness d")->capture_default_str();
    sp->add_option("--metal-thickness", spectrum.metal_thickness, "strip metal thickness")
        ->capture_default_str();
    sp->add_option("--fmv", spectrum.f_mv, "metal/vacuum participation")->capture_default_str();
    sp->add_option("--fdv", spectrum.f_dv, "dielectric/vacuum participation")
        ->capture_default_str();
    sp->add_option("--fdm", spectrum.f_dm, "dielectric/metal participation")
        ->capture_default_str();
    sp->add_option("--from", spectrum.from, "sweep start frequency")->capture_default_str();
    sp->add_option("--to", spectrum.to, "sweep end frequency")->capture_default_str();
    sp->add_option("--points", spectrum.points, "number of sweep points")
        ->capture_default_str();
    sp->add_flag("--log", spectrum.log_spacing, "logarithmic frequency spacing");
    sp->add_option("--threads", spectrum.threads, "sweep worker threads (0 = hardware)")
        ->capture_default_str();
    add_thermal_flags(sp, spectrum_thermal);

    std::string device_file;
    CLI::App* budget = app.add_subcommand("budget", "participation-ratio T1 budget");
    budget->add_option("--device", device_file, "device budget JSON")->required();

    // global flags (--format, -o, --materials-file) may follow the subcommand
    for (CLI::App* sub : {materials, tan_delta, td_interface, td_substrate, td_junction, sp,
                          budget})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (materials->parsed())
            return cmd_materials(global);
        if (td_interface->parsed())
            return cmd_tan_delta_interface(global, iface, iface_thermal);
        if (td_substrate->parsed())
            return cmd_tan_delta_substrate(global, substrate, substrate_thermal);
        if (td_junction->parsed())
            return cmd_tan_delta_junction(global, junction, junction_thermal);
        if (sp->parsed())
            return cmd_spectrum(global, spectrum, spectrum_thermal);
        if (budget->parsed())
            return cmd_budget(global, device_file);
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    }
    catch (const NotFoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnknownEntity;
    }
    catch (const AccuracyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAccuracy;
    }
    catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
