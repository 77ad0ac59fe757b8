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

// Quasi-1D internals shared by the loss evaluators and the form factor:
// the axial view of a mode shape, and the layered medium map that turns a
// stack into acoustically connected segments with a path-time coordinate.
// Not installed.

#pragma once

#include <complex>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "piezoloss/geometry.hpp"
#include "piezoloss/materials.hpp"

namespace piezoloss::detail {

/// Axial (quasi-1D) view of a ModeShape. Analytic modes have psi_z(z) = 1
/// and carry q_perp; sampled modes must be transversely uniform and expose
/// interpolated z-profiles.
struct AxialMode {
    bool sampled = false;
    std::array<double, 2> q_perp{0.0, 0.0};

    // sampled only: z-component profile along the stack axis
    std::vector<double> z;
    std::vector<std::complex<double>> psi_z;
    double dz = std::numeric_limits<double>::infinity();

    // full-field access for junction positions
    const SampledField* field = nullptr;

    /// psi_z at an axial position (1 for analytic modes; linear
    /// interpolation on the sample grid, 0 outside it).
    std::complex<double> axial_value(double zq) const;

    /// z-component of psi at a 3D point (analytic: exp(i q_perp.r_perp)).
    std::complex<double> value_at(const std::array<double, 3>& r) const;

    /// Finite support of the axial profile, if any (sampled modes).
    std::optional<std::pair<double, double>> axial_support() const;
};

AxialMode reduce_mode(const ModeShape& mode);

/// One planar element, unified. Deltas have z_lo == z_hi.
struct PlanarItem {
    std::size_t element_index = 0;
    const Slab* slab = nullptr;           // exactly one of slab/delta set
    const InterfaceDelta* delta = nullptr;
    double z_lo = 0.0;
    double z_hi = 0.0;
    std::string label;

    bool is_delta() const { return delta != nullptr; }
};

struct Layer {
    double z_lo = 0.0;
    double z_hi = 0.0;
    std::optional<Material> medium; // nullopt = vacuum (segment breaker)
};

/// A maximal run of planar elements connected by material (non-vacuum)
/// layers. tau() is the acoustic path-time coordinate (integral of dz/v),
/// anchored at the lowest finite node; it is what interference phases are
/// built from, so a stack translation only shifts tau by a constant.
struct Segment {
    std::vector<PlanarItem> items;
    std::vector<Layer> layers; // contiguous, material-only, sorted
    double tau(double z) const;
    /// Shortest sound velocity among the segment's layers (sets the phonon
    /// wavelength floor for quadrature).
    double min_velocity() const;
};

struct AxialDecomposition {
    std::vector<Segment> segments;
    std::vector<const PointJunction*> junctions;
    std::vector<std::string> junction_labels;
};

/// Build the medium map: slab interiors take their host, gaps take the
/// medium both neighbors declare (a declared disagreement is a
/// ConfigError; undeclared gaps are vacuum), vacuum gaps split segments.
AxialDecomposition decompose(const StackProfile& profile);

/// Emission medium seen by an item in direction dir (+1 up, -1 down);
/// nullopt = vacuum, no phonon channel.
std::optional<Material> emission_medium(const PlanarItem& item, int dir);

/// Permittivity referent of an item (delta: eps_host, slab: host).
double item_permittivity(const PlanarItem& item);

/// Default label for breakdown rows when the element carries none.
std::string fallback_label(const char* kind, std::size_t index);

/// sin(x)/x with the small-x limit.
double sinc(double x);

/// Exact Fourier integral of the sampled mode's piecewise-linear axial
/// profile: int psi_z(z) exp(-i k z) dz over [lo, hi] (clipped to the
/// sample support), evaluated cell by cell in closed form.
std::complex<double> piecewise_linear_fourier(const AxialMode& mode, double lo, double hi,
                                              double k);

} // namespace piezoloss::detail
