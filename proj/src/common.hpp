#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <span>
#include <string>
#include <thread>
#include <vector>

namespace strichartz {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

using Complex = std::complex<double>;

// C^inf bump on (-1,1): exp(-1/(1-u^2)), zero outside.
inline double smooth_bump(double u) {
    double s = 1.0 - u * u;
    if (s <= 0.0) return 0.0;
    return std::exp(-1.0 / s);
}

// C^inf transition: 0 for u<=0, 1 for u>=1, strictly increasing in between.
inline double smooth_step(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    double a = std::exp(-1.0 / u);
    double b = std::exp(-1.0 / (1.0 - u));
    return a / (a + b);
}

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    std::size_t points = 0;
};

// Least-squares line through (x_i, y_i).
SlopeFit fit_line(std::span<const double> x, std::span<const double> y);

// Fit of log|y| vs log x; entries with |y| <= floor are skipped.
SlopeFit fit_loglog(std::span<const double> x, std::span<const double> y,
                    double floor = 0.0);

// Thread cap from STRICHARTZ_THREADS (default 1).
unsigned max_threads();

// Runs fn(i) for i in [0, count). Each index writes only its own output
// slots, so results do not depend on the thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace strichartz
