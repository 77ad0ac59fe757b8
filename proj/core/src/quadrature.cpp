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

#include "piezoloss/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "piezoloss/errors.hpp"

namespace piezoloss::quadrature {

namespace {

// 7-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr int kOrder = 7;
constexpr double kNodes[kOrder] = {-0.9491079123427585, -0.7415311855993945,
                                   -0.4058451513773972, 0.0,
                                   0.4058451513773972,  0.7415311855993945,
                                   0.9491079123427585};
constexpr double kWeights[kOrder] = {0.1294849661688697, 0.2797053914892766,
                                     0.3818300505051189, 0.4179591836734694,
                                     0.3818300505051189, 0.2797053914892766,
                                     0.1294849661688697};

constexpr int kMaxPanels1d = 1 << 19;
constexpr int kMaxPanelsPerDim2d = 1 << 10;

struct Estimate {
    std::complex<double> integral{0.0, 0.0};
    double l1 = 0.0; // integral of |f|: the cancellation scale
};

int initial_panels(double span, double wavelength, const Controls& controls, int cap)
{
    if (!std::isfinite(wavelength) || wavelength <= 0.0)
        return 2;
    const double nodes_needed = controls.min_nodes_per_wavelength * span / wavelength;
    const int panels = static_cast<int>(std::ceil(nodes_needed / kOrder));
    return std::clamp(panels, 2, cap);
}

Estimate panels_1d(const std::function<std::complex<double>(double)>& f, double a, double b,
                   int panels)
{
    const double h = (b - a) / panels;
    Estimate out;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        std::complex<double> acc{0.0, 0.0};
        double acc_l1 = 0.0;
        for (int i = 0; i < kOrder; ++i) {
            const std::complex<double> v = f(mid + 0.5 * h * kNodes[i]);
            acc += kWeights[i] * v;
            acc_l1 += kWeights[i] * std::abs(v);
        }
        out.integral += acc * (0.5 * h);
        out.l1 += acc_l1 * std::abs(0.5 * h);
    }
    return out;
}

Estimate panels_2d(const std::function<std::complex<double>(double, double)>& f, double ax,
                   double bx, double ay, double by, int px, int py)
{
    const double hx = (bx - ax) / px;
    const double hy = (by - ay) / py;
    Estimate out;
    for (int p = 0; p < px; ++p) {
        const double mx = ax + (p + 0.5) * hx;
        for (int q = 0; q < py; ++q) {
            const double my = ay + (q + 0.5) * hy;
            std::complex<double> acc{0.0, 0.0};
            double acc_l1 = 0.0;
            for (int i = 0; i < kOrder; ++i) {
                const double x = mx + 0.5 * hx * kNodes[i];
                for (int j = 0; j < kOrder; ++j) {
                    const std::complex<double> v = f(x, my + 0.5 * hy * kNodes[j]);
                    const double w = kWeights[i] * kWeights[j];
                    acc += w * v;
                    acc_l1 += w * std::abs(v);
                }
            }
            out.integral += acc * (0.25 * hx * hy);
            out.l1 += acc_l1 * std::abs(0.25 * hx * hy);
        }
    }
    return out;
}

// Convergence scale: the result itself, floored by a fraction of the L1
// norm. A heavily cancelling oscillatory integral is accepted once its
// residual change is negligible against the integrand's own scale --
// demanding pure relative accuracy of a true zero would never terminate.
double convergence_scale(const Estimate& e, const Controls& controls)
{
    return std::max(std::abs(e.integral), controls.l1_floor * e.l1);
}

} // namespace

Result integrate_1d(const std::function<std::complex<double>(double)>& f, double a, double b,
                    double wavelength, const Controls& controls)
{
    if (!(std::isfinite(a) && std::isfinite(b)))
        throw InvalidInputError("integrate_1d: bounds must be finite");
    if (a == b)
        return {0.0, 0.0, 0};

    int panels = initial_panels(std::abs(b - a), wavelength, controls, kMaxPanels1d);
    Estimate coarse = panels_1d(f, a, b, panels);
    double achieved = std::numeric_limits<double>::infinity();
    for (int r = 0; r < controls.max_refinements && panels <= kMaxPanels1d / 2; ++r) {
        panels *= 2;
        const Estimate fine = panels_1d(f, a, b, panels);
        achieved = std::abs(fine.integral - coarse.integral) / convergence_scale(fine, controls);
        coarse = fine;
        if (achieved <= controls.rel_tol)
            return {fine.integral, achieved, panels};
    }
    throw AccuracyError("integrate_1d: oscillatory integral did not converge", achieved);
}

Result integrate_2d(const std::function<std::complex<double>(double, double)>& f, double ax,
                    double bx, double ay, double by, double wavelength, const Controls& controls)
{
    if (!(std::isfinite(ax) && std::isfinite(bx) && std::isfinite(ay) && std::isfinite(by)))
        throw InvalidInputError("integrate_2d: bounds must be finite");
    if (ax == bx || ay == by)
        return {0.0, 0.0, 0};

    int px = initial_panels(std::abs(bx - ax), wavelength, controls, kMaxPanelsPerDim2d);
    int py = initial_panels(std::abs(by - ay), wavelength, controls, kMaxPanelsPerDim2d);
    Estimate coarse = panels_2d(f, ax, bx, ay, by, px, py);
    double achieved = std::numeric_limits<double>::infinity();
    for (int r = 0; r < controls.max_refinements &&
                    std::max(px, py) <= kMaxPanelsPerDim2d / 2;
         ++r) {
        px *= 2;
        py *= 2;
        const Estimate fine = panels_2d(f, ax, bx, ay, by, px, py);
        achieved = std::abs(fine.integral - coarse.integral) / convergence_scale(fine, controls);
        coarse = fine;
        if (achieved <= controls.rel_tol)
            return {fine.integral, achieved, px * py};
    }
    throw AccuracyError("integrate_2d: oscillatory integral did not converge", achieved);
}

} // namespace piezoloss::quadrature
