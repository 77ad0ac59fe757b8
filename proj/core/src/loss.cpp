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

#include "piezoloss/loss.hpp"

#include <cmath>
#include <complex>
#include <map>

#include "axial_internal.hpp"
#include "piezoloss/constants.hpp"
#include "piezoloss/errors.hpp"
#include "piezoloss/quadrature.hpp"

namespace piezoloss {

namespace {

using detail::AxialDecomposition;
using detail::AxialMode;
using detail::PlanarItem;
using detail::Segment;
using std::complex;

constexpr complex<double> kImag{0.0, 1.0};
constexpr double kInf = std::numeric_limits<double>::infinity();

double substrate_shape_factor(double x, SubstrateVariant variant)
{
    switch (variant) {
    case SubstrateVariant::reference_exact: {
        const double s = std::sin(x);
        return s * s;
    }
    case SubstrateVariant::reference_averaged:
        return 0.5;
    case SubstrateVariant::form_factor_exact: {
        const double s = std::sin(0.5 * x);
        return 4.0 * s * s;
    }
    case SubstrateVariant::form_factor_averaged:
        return 2.0;
    }
    return 0.0;
}

// --- shared evaluator scaffolding -------------------------------------------

struct BreakdownBuilder {
    std::vector<LossContribution> rows;
    std::map<std::string, std::size_t> by_label;

    void add(const std::string& label, std::optional<double> participation,
             double contribution)
    {
        auto [it, inserted] = by_label.try_emplace(label, rows.size());
        if (inserted) {
            LossContribution row;
            row.label = label;
            row.participation = participation;
            rows.push_back(std::move(row));
        }
        rows[it->second].contribution += contribution;
    }

    std::vector<LossContribution> finish()
    {
        for (auto& row : rows) {
            if (row.participation && *row.participation != 0.0)
                row.tan_delta = row.contribution / *row.participation;
        }
        return std::move(rows);
    }
};

std::optional<double> item_participation(const PlanarItem& item, const StackProfile& profile)
{
    if (item.slab) {
        if (item.slab->infinite_lo() || item.slab->infinite_hi())
            return std::nullopt;
        return item.slab->width() * profile.area / profile.cavity_volume;
    }
    if (item.delta->thickness)
        return *item.delta->thickness * profile.area / profile.cavity_volume;
    return std::nullopt;
}

std::string cross_label(const std::string& a, const std::string& b) { return a + "~" + b; }

/// sqrt(weight/eps) amplitude scale for an item in one direction, or nullopt
/// when the direction has no phonon channel.
std::optional<double> channel_scale(const PlanarItem& item, int dir)
{
    const std::optional<Material> medium = detail::emission_medium(item, dir);
    if (!medium)
        return std::nullopt;
    return std::sqrt(medium->acoustic_weight() / detail::item_permittivity(item));
}

void check_sampled_resolution(const AxialMode& mode, const AxialDecomposition& decomp,
                              double omega)
{
    if (!mode.sampled)
        return;
    double v_min = kInf;
    for (const auto& seg : decomp.segments)
        v_min = std::min(v_min, seg.min_velocity());
    for (const auto* j : decomp.junctions)
        v_min = std::min(v_min, j->host.sound_velocity);
    if (v_min == kInf)
        return; // no elements
    const double wavelength = 2.0 * constants::pi * v_min / omega;
    if (mode.dz > wavelength / 10.0)
        throw AccuracyError("sampled mode grid too coarse for this frequency: need >= 10 "
                            "samples per phonon wavelength",
                            wavelength / (10.0 * mode.dz));
}

// Directional amplitude integral of one item (no channel scale), at the
// energy-shell wavevector of the segment's media. Deltas sift; finite slab
// pieces integrate exp(-i d Omega tau(z)) analytically (boundary terms, so
// half-infinite extents just drop the infinite end); sampled modes use the
// cell-exact piecewise-linear transform.
complex<double> directional_amplitude(const PlanarItem& item, const Segment& segment, int dir,
                                      double omega, const AxialMode& mode)
{
    if (item.is_delta()) {
        const auto& d = *item.delta;
        const complex<double> psi = mode.axial_value(d.z);
        const double phase = -dir * omega * segment.tau(d.z);
        return static_cast<double>(d.orientation) * d.strength * psi * std::polar(1.0, phase);
    }

    const Slab& slab = *item.slab;
    const double v = slab.host.sound_velocity;
    const double k = omega / v;

    double lo = slab.z_lo;
    double hi = slab.z_hi;
    if (mode.sampled) {
        const auto support = mode.axial_support();
        if (!support)
            return {0.0, 0.0};
        lo = std::max(lo, support->first);
        hi = std::min(hi, support->second);
        if (!(lo < hi))
            return {0.0, 0.0};
        // tau is linear inside the slab, so the sampled-profile Fourier
        // integral factors into a boundary phase times a plain transform.
        const double phase0 = -dir * omega * segment.tau(lo) + dir * k * lo;
        return slab.g_b * std::polar(1.0, phase0) *
               detail::piecewise_linear_fourier(mode, lo, hi, dir * k);
    }

    // Analytic mode (psi_z = 1): int exp(-i d Omega tau(z)) dz over the slab
    // = sum of boundary terms exp(-i d Omega tau(z)) / (-i d k) at z_hi, z_lo;
    // an infinite end contributes nothing (radiation boundary).
    complex<double> acc{0.0, 0.0};
    const complex<double> denom = -kImag * static_cast<double>(dir) * k;
    if (!slab.infinite_hi())
        acc += std::polar(1.0, -dir * omega * segment.tau(hi)) / denom;
    if (!slab.infinite_lo())
        acc -= std::polar(1.0, -dir * omega * segment.tau(lo)) / denom;
    return slab.g_b * acc;
}

// Junction contributions are identical in both evaluators: the 4pi shell
// integral and the r-space sinc kernel are the same closed form.
void add_junction_terms(const AxialDecomposition& decomp, const StackProfile& profile,
                        const AxialMode& mode, double omega, double thermal,
                        BreakdownBuilder& breakdown)
{
    const double base = thermal * omega * omega * omega /
                        (4.0 * constants::pi * profile.cavity_volume);
    const auto& junctions = decomp.junctions;
    for (std::size_t a = 0; a < junctions.size(); ++a) {
        const auto& ja = *junctions[a];
        const Material& host = ja.host;
        const double pref = base * host.acoustic_weight() /
                            (host.sound_velocity * host.sound_velocity * host.permittivity());
        const complex<double> ca = ja.strength * mode.value_at(ja.position);
        std::optional<double> participation;
        if (ja.volume)
            participation = *ja.volume / profile.cavity_volume;
        breakdown.add(decomp.junction_labels[a], participation, pref * std::norm(ca));

        for (std::size_t b = a + 1; b < junctions.size(); ++b) {
            const auto& jb = *junctions[b];
            if (jb.host.name != host.name)
                continue; // different baths: no coherent cross term
            const complex<double> cb = jb.strength * mode.value_at(jb.position);
            const double dx = ja.position[0] - jb.position[0];
            const double dy = ja.position[1] - jb.position[1];
            const double dz = ja.position[2] - jb.position[2];
            const double dist = std::sqrt(dx * dx + dy * dy + dz * dz);
            const double kernel = detail::sinc(omega / host.sound_velocity * dist);
            const double term = pref * 2.0 * std::real(ca * std::conj(cb)) * kernel;
            breakdown.add(cross_label(decomp.junction_labels[a], decomp.junction_labels[b]),
                          std::nullopt, term);
        }
    }
}

LossResult assemble(BreakdownBuilder& breakdown, Evaluator evaluator)
{
    LossResult result;
    result.evaluator = evaluator;
    result.breakdown = breakdown.finish();
    for (const auto& row : result.breakdown)
        result.inverse_q += row.contribution;
    return result;
}

} // namespace

double LossResult::breakdown_sum() const
{
    double total = 0.0;
    for (const auto& row : breakdown)
        total += row.contribution;
    return total;
}

// --- closed forms ------------------------------------------------------------

double substrate_tan_delta(double thickness, double g_b, const Material& host,
                           const ThermalState& state, SubstrateVariant variant)
{
    if (!(std::isfinite(thickness) && thickness > 0.0))
        throw InvalidInputError("substrate_tan_delta: thickness must be finite and > 0");
    if (!(std::isfinite(g_b) && g_b >= 0.0))
        throw InvalidInputError("substrate_tan_delta: g_B must be finite and >= 0");
    host.validate();
    const double thermal = thermal_prefactor(state);
    const double omega = state.omega;
    const double x = omega * thickness / host.sound_velocity;
    const double base = g_b * g_b * thermal /
                        (2.0 * host.permittivity() * host.mass_density * host.sound_velocity *
                         omega * thickness);
    return base * substrate_shape_factor(x, variant);
}

double interface_tan_delta(double t_i, double g_i, const SideMedium& side_minus,
                           const SideMedium& side_plus, const SideMedium& eps_host,
                           const ThermalState& state)
{
    if (!(std::isfinite(t_i) && t_i > 0.0))
        throw InvalidInputError("interface_tan_delta: t_I must be finite and > 0");
    if (!(std::isfinite(g_i)))
        throw InvalidInputError("interface_tan_delta: g_I must be finite");
    if (is_vacuum(side_minus) && is_vacuum(side_plus))
        throw InvalidInputError(
            "interface_tan_delta: both sides are vacuum; no phonon emission is possible");
    if (side_minus)
        side_minus->validate();
    if (side_plus)
        side_plus->validate();

    double channel_sum = 0.0;
    if (side_minus)
        channel_sum += side_minus->acoustic_weight();
    if (side_plus)
        channel_sum += side_plus->acoustic_weight();

    const double thermal = thermal_prefactor(state);
    const double eps = permittivity_of(eps_host);
    return t_i * state.omega * g_i * g_i * thermal / (4.0 * eps) * channel_sum;
}

double junction_tan_delta(double g_i, double volume, const Material& barrier,
                          const ThermalState& state)
{
    if (!(std::isfinite(volume) && volume > 0.0))
        throw InvalidInputError("junction_tan_delta: V_J must be finite and > 0");
    if (!std::isfinite(g_i))
        throw InvalidInputError("junction_tan_delta: g_I must be finite");
    barrier.validate();
    const double thermal = thermal_prefactor(state);
    const double omega = state.omega;
    const double v = barrier.sound_velocity;
    return omega * omega * omega * g_i * g_i * volume * thermal /
           (4.0 * constants::pi * barrier.mass_density * v * v * v * v * v *
            barrier.permittivity());
}

// --- momentum-space evaluator --------------------------------------------------

LossResult golden_rule_loss(const StackProfile& profile, const ModeShape& mode,
                            const ThermalState& state)
{
    state.validate();
    const double thermal = thermal_prefactor(state);
    const double omega = state.omega;

    BreakdownBuilder breakdown;
    if (profile.elements.empty())
        return assemble(breakdown, Evaluator::golden_rule);

    const AxialMode axial = detail::reduce_mode(mode);
    const AxialDecomposition decomp = detail::decompose(profile);
    check_sampled_resolution(axial, decomp, omega);

    const double pref = thermal * profile.area * omega / (4.0 * profile.cavity_volume);

    for (const auto& segment : decomp.segments) {
        for (int dir : {+1, -1}) {
            std::vector<std::optional<complex<double>>> amplitudes(segment.items.size());
            for (std::size_t i = 0; i < segment.items.size(); ++i) {
                const PlanarItem& item = segment.items[i];
                // Fully infinite slabs with plane-wave modes are momentum
                // selection-rule zeros: their form factor is a Dirac spike at
                // k_z = 0, never on the k_z = +-Omega/v shell.
                if (item.slab && item.slab->infinite_lo() && item.slab->infinite_hi() &&
                    !axial.sampled) {
                    breakdown.add(item.label, std::nullopt, 0.0);
                    continue;
                }
                const auto scale = channel_scale(item, dir);
                if (!scale)
                    continue;
                amplitudes[i] =
                    *scale * directional_amplitude(item, segment, dir, omega, axial);
            }
            for (std::size_t i = 0; i < segment.items.size(); ++i) {
                if (!amplitudes[i])
                    continue;
                breakdown.add(segment.items[i].label,
                              item_participation(segment.items[i], profile),
                              pref * std::norm(*amplitudes[i]));
                for (std::size_t j = i + 1; j < segment.items.size(); ++j) {
                    if (!amplitudes[j])
                        continue;
                    const double term =
                        pref * 2.0 * std::real(*amplitudes[i] * std::conj(*amplitudes[j]));
                    breakdown.add(cross_label(segment.items[i].label, segment.items[j].label),
                                  std::nullopt, term);
                }
            }
        }
    }

    add_junction_terms(decomp, profile, axial, omega, thermal, breakdown);
    return assemble(breakdown, Evaluator::golden_rule);
}

// --- real-space evaluator ------------------------------------------------------

namespace {

// Transverse-reduced kernel between two axial points, all channels summed:
//   sum_dir sqrt(W_i W_j / (eps_i eps_j)) Re[psi(z) conj(psi(z')) e^{-i dir
//   Omega (tau(z)-tau(z'))}]
// For a homogeneous segment and psi = 1 this is the cos(Omega (z-z')/v)
// kernel obtained from sinc(Omega|r-r'|/v) by the analytic transverse
// integral at k_perp = q_perp.
struct PairKernel {
    const Segment& segment;
    double omega;
    const AxialMode& mode;
    double scale_plus = 0.0;  // sqrt(W_i+ W_j+ / eps_i eps_j), 0 if no channel
    double scale_minus = 0.0;

    double operator()(double z, double zp) const
    {
        const complex<double> psi_pair =
            mode.axial_value(z) * std::conj(mode.axial_value(zp));
        const double dtau = omega * (segment.tau(z) - segment.tau(zp));
        double out = 0.0;
        if (scale_plus != 0.0)
            out += scale_plus * std::real(psi_pair * std::polar(1.0, -dtau));
        if (scale_minus != 0.0)
            out += scale_minus * std::real(psi_pair * std::polar(1.0, dtau));
        return out;
    }
};

PairKernel make_pair_kernel(const Segment& segment, const PlanarItem& a, const PlanarItem& b,
                            double omega, const AxialMode& mode)
{
    PairKernel kernel{segment, omega, mode};
    const double eps = std::sqrt(detail::item_permittivity(a) * detail::item_permittivity(b));
    for (int dir : {+1, -1}) {
        const auto ma = detail::emission_medium(a, dir);
        const auto mb = detail::emission_medium(b, dir);
        if (!ma || !mb)
            continue;
        const double s = std::sqrt(ma->acoustic_weight() * mb->acoustic_weight()) / eps;
        (dir > 0 ? kernel.scale_plus : kernel.scale_minus) = s;
    }
    return kernel;
}

struct ClippedSlab {
    double lo, hi;
    bool empty;
};

ClippedSlab clip_slab(const Slab& slab, const AxialMode& mode)
{
    if (slab.infinite_lo() || slab.infinite_hi()) {
        if (!mode.sampled)
            throw InvalidInputError(
                "real_space_loss: infinite slabs have no finite integration support; use "
                "golden_rule_loss for the bulk limit");
        const auto support = mode.axial_support();
        const double lo = std::max(slab.z_lo, support->first);
        const double hi = std::min(slab.z_hi, support->second);
        return {lo, hi, !(lo < hi)};
    }
    double lo = slab.z_lo;
    double hi = slab.z_hi;
    if (mode.sampled) {
        const auto support = mode.axial_support();
        lo = std::max(lo, support->first);
        hi = std::min(hi, support->second);
    }
    return {lo, hi, !(lo < hi)};
}

double pair_integral(const Segment& segment, const PlanarItem& a, const PlanarItem& b,
                     double omega, const AxialMode& mode)
{
    const PairKernel kernel = make_pair_kernel(segment, a, b, omega, mode);
    if (kernel.scale_plus == 0.0 && kernel.scale_minus == 0.0)
        return 0.0;

    const double wavelength = 2.0 * constants::pi * segment.min_velocity() / omega;
    quadrature::Controls controls;
    // Interpolated mode profiles are only C0 at the sample points, which
    // caps the panel convergence rate; relax the target accordingly.
    controls.rel_tol = mode.sampled ? 1e-8 : 1e-10;

    const double sign_a = a.is_delta() ? static_cast<double>(a.delta->orientation) : 1.0;
    const double sign_b = b.is_delta() ? static_cast<double>(b.delta->orientation) : 1.0;
    const double signs = sign_a * sign_b;

    if (a.is_delta() && b.is_delta()) {
        return signs * a.delta->strength * b.delta->strength *
               kernel(a.delta->z, b.delta->z);
    }
    if (a.is_delta() || b.is_delta()) {
        const PlanarItem& d = a.is_delta() ? a : b;
        const PlanarItem& s = a.is_delta() ? b : a;
        const ClippedSlab c = clip_slab(*s.slab, mode);
        if (c.empty)
            return 0.0;
        const double z_delta = d.delta->z;
        const auto integrand = [&](double z) -> complex<double> {
            return kernel(z_delta, z) * s.slab->g_b;
        };
        const auto result = quadrature::integrate_1d(integrand, c.lo, c.hi, wavelength, controls);
        return signs * d.delta->strength * result.value.real();
    }

    const ClippedSlab ca = clip_slab(*a.slab, mode);
    const ClippedSlab cb = clip_slab(*b.slab, mode);
    if (ca.empty || cb.empty)
        return 0.0;
    const auto integrand = [&](double z, double zp) -> complex<double> {
        return kernel(z, zp) * a.slab->g_b * b.slab->g_b;
    };
    const auto result =
        quadrature::integrate_2d(integrand, ca.lo, ca.hi, cb.lo, cb.hi, wavelength, controls);
    return signs * result.value.real();
}

} // namespace

LossResult real_space_loss(const StackProfile& profile, const ModeShape& mode,
                           const ThermalState& state)
{
    state.validate();
    const double thermal = thermal_prefactor(state);
    const double omega = state.omega;

    BreakdownBuilder breakdown;
    if (profile.elements.empty())
        return assemble(breakdown, Evaluator::real_space);

    const AxialMode axial = detail::reduce_mode(mode);
    const AxialDecomposition decomp = detail::decompose(profile);
    check_sampled_resolution(axial, decomp, omega);

    const double pref = thermal * profile.area * omega / (4.0 * profile.cavity_volume);

    for (const auto& segment : decomp.segments) {
        for (std::size_t i = 0; i < segment.items.size(); ++i) {
            const PlanarItem& a = segment.items[i];
            breakdown.add(a.label, item_participation(a, profile),
                          pref * pair_integral(segment, a, a, omega, axial));
            for (std::size_t j = i + 1; j < segment.items.size(); ++j) {
                const PlanarItem& b = segment.items[j];
                const double term = pref * 2.0 * pair_integral(segment, a, b, omega, axial);
                breakdown.add(cross_label(a.label, b.label), std::nullopt, term);
            }
        }
    }

    add_junction_terms(decomp, profile, axial, omega, thermal, breakdown);
    return assemble(breakdown, Evaluator::real_space);
}

} // namespace piezoloss
