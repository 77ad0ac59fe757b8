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

#include <complex>
#include <functional>

namespace piezoloss::quadrature {

/// Controls for the oscillatory panel integrators. The wavelength floor is
/// a hard minimum: panels never get wider than wavelength /
/// min_nodes_per_wavelength regardless of the convergence estimate.
/// Convergence is judged against max(|I|, l1_floor * int |f|): a heavily
/// cancelling integral counts as converged once its residual is negligible
/// on the integrand's own scale.
struct Controls {
    double rel_tol = 1e-10;
    double l1_floor = 1e-3;
    int min_nodes_per_wavelength = 10;
    int max_refinements = 12;           // panel count doubles per refinement
};

struct Result {
    std::complex<double> value;
    double achieved_rel = 0.0;
    int panels = 0;
};

/// Composite Gauss-Legendre integration of an oscillatory integrand over
/// [a, b]. `wavelength` is the shortest oscillation scale of the integrand
/// (sets the initial panel density); pass +inf for smooth integrands.
/// Refines by panel doubling until two successive estimates agree to
/// rel_tol; throws AccuracyError carrying the achieved tolerance if the
/// refinement budget is exhausted.
Result integrate_1d(const std::function<std::complex<double>(double)>& f, double a, double b,
                    double wavelength, const Controls& controls = {});

/// Same scheme on a rectangle [ax, bx] x [ay, by] with a tensor panel grid.
/// Deliberately does not assume the integrand separates.
Result integrate_2d(const std::function<std::complex<double>(double, double)>& f, double ax,
                    double bx, double ay, double by, double wavelength,
                    const Controls& controls = {});

} // namespace piezoloss::quadrature
