#include "quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace strichartz {

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1,1] (symmetric halves).
constexpr int kGL = 16;
constexpr double kNode[kGL / 2] = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542};
constexpr double kWeight[kGL / 2] = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};

template <typename T, typename F>
T composite(const F& f, double a, double b, int panels) {
    if (panels < 1) panels = 1;
    const double step = (b - a) / panels;
    T total{};
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * step;
        const double mid = lo + 0.5 * step;
        const double half = 0.5 * step;
        T acc{};
        for (int i = 0; i < kGL / 2; ++i) {
            acc += kWeight[i] * (f(mid - half * kNode[i]) + f(mid + half * kNode[i]));
        }
        total += acc * half;
    }
    return total;
}

}  // namespace

double gauss_legendre(const std::function<double(double)>& f, double a, double b,
                      int panels) {
    return composite<double>(f, a, b, panels);
}

Complex gauss_legendre_c(const std::function<Complex(double)>& f, double a, double b,
                         int panels) {
    return composite<Complex>(f, a, b, panels);
}

int oscillatory_panels(double a, double b, double omega, double points_per_cycle) {
    const double cycles = std::abs(omega) * (b - a) / (2.0 * kPi);
    const double nodes = std::max(points_per_cycle * cycles, 2.0 * kGL);
    return std::max(2, static_cast<int>(std::ceil(nodes / kGL)));
}

Complex oscillatory_integral(const std::function<double(double)>& amp, double a,
                             double b, double omega, double points_per_cycle) {
    const int panels = oscillatory_panels(a, b, omega, points_per_cycle);
    return composite<Complex>(
        [&](double r) {
            return amp(r) * Complex(std::cos(omega * r), std::sin(omega * r));
        },
        a, b, panels);
}

Complex oscillatory_integral_c(const std::function<Complex(double)>& amp, double a,
                               double b, double omega, double points_per_cycle) {
    const int panels = oscillatory_panels(a, b, omega, points_per_cycle);
    return composite<Complex>(
        [&](double r) {
            return amp(r) * Complex(std::cos(omega * r), std::sin(omega * r));
        },
        a, b, panels);
}

}  // namespace strichartz
