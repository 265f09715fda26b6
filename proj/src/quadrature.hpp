#pragma once

#include <functional>

#include "common.hpp"

namespace strichartz {

// Composite 16-point Gauss-Legendre over [a,b] split into `panels` panels.
double gauss_legendre(const std::function<double(double)>& f, double a, double b,
                      int panels = 8);
Complex gauss_legendre_c(const std::function<Complex(double)>& f, double a, double b,
                         int panels = 8);

// ∫_a^b e^{i omega r} amp(r) dr for smooth amp. The panel count scales with
// |omega| so the rule keeps at least `points_per_cycle` nodes per oscillation.
Complex oscillatory_integral(const std::function<double(double)>& amp, double a,
                             double b, double omega, double points_per_cycle = 32.0);
Complex oscillatory_integral_c(const std::function<Complex(double)>& amp, double a,
                               double b, double omega, double points_per_cycle = 32.0);

int oscillatory_panels(double a, double b, double omega, double points_per_cycle);

}  // namespace strichartz
