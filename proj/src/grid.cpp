#include "grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>

namespace strichartz {

namespace {

// The FFTW planner is not thread safe; execution of distinct plans is.
std::mutex g_planner_mutex;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Parity of the sum of per-axis indices for a flat row-major index.
int index_parity(std::size_t flat, int n, int dim) {
    int sum = 0;
    for (int a = 0; a < dim; ++a) {
        sum += static_cast<int>(flat % n);
        flat /= n;
    }
    return sum & 1;
}

}  // namespace

SpatialGrid SpatialGrid::make(int dim, int points_per_axis, double half_extent) {
    if (dim < 1 || dim > 3) throw std::domain_error("grid dimension must be 1, 2 or 3");
    if (points_per_axis < 16 || !is_power_of_two(points_per_axis))
        throw std::domain_error("points per axis must be a power of two >= 16");
    if (!(half_extent > 0.0) || !std::isfinite(half_extent))
        throw std::domain_error("half extent must be positive");
    return {dim, points_per_axis, half_extent};
}

std::size_t SpatialGrid::size() const {
    std::size_t s = 1;
    for (int a = 0; a < dim; ++a) s *= static_cast<std::size_t>(points_per_axis);
    return s;
}

GridField GridField::zero(const SpatialGrid& g) {
    return {g, std::vector<Complex>(g.size(), Complex{0.0, 0.0})};
}

double GridField::max_abs() const {
    double m = 0.0;
    for (const auto& v : values) m = std::max(m, std::abs(v));
    return m;
}

double GridField::l2() const {
    double s = 0.0;
    for (const auto& v : values) s += std::norm(v);
    return std::sqrt(s * std::pow(grid.spacing(), grid.dim));
}

GridField operator+(const GridField& a, const GridField& b) {
    if (!(a.grid == b.grid)) throw std::invalid_argument("grid mismatch");
    GridField out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
    return out;
}

GridField operator-(const GridField& a, const GridField& b) {
    if (!(a.grid == b.grid)) throw std::invalid_argument("grid mismatch");
    GridField out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] -= b.values[i];
    return out;
}

GridField operator*(Complex c, const GridField& f) {
    GridField out = f;
    for (auto& v : out.values) v *= c;
    return out;
}

SpaceTimeField SpaceTimeField::make(std::vector<double> times,
                                    std::vector<GridField> slices) {
    if (times.empty() || times.size() != slices.size())
        throw std::invalid_argument("times and slices must match and be nonempty");
    for (std::size_t i = 1; i < slices.size(); ++i)
        if (!(slices[i].grid == slices[0].grid))
            throw std::invalid_argument("all slices must share one grid");
    if (times.size() >= 2) {
        const double dt = times[1] - times[0];
        if (!(dt > 0.0)) throw std::invalid_argument("times must increase");
        for (std::size_t i = 1; i < times.size(); ++i) {
            if (std::abs(times[i] - times[i - 1] - dt) > 1e-12)
                throw std::invalid_argument("time samples must be uniformly spaced");
        }
    }
    return {std::move(times), std::move(slices)};
}

double SpaceTimeField::dt() const {
    if (times.size() < 2) throw std::logic_error("single-slice field has no spacing");
    return times[1] - times[0];
}

GridField transform(const GridField& f, TransformDirection dir) {
    const SpatialGrid& g = f.grid;
    if (f.values.size() != g.size()) throw std::invalid_argument("field size mismatch");
    for (const auto& v : f.values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::runtime_error("transform input contains non-finite samples");

    const int n = g.points_per_axis;
    const std::size_t total = g.size();
    std::vector<Complex> buf(total);

    // The (-1)^{sum of indices} twiddle re-centers the DFT so that bin k on
    // each axis is the frequency (k - n/2) * pi/L directly. For even n the
    // leftover phase e^{-i pi n/2} is +1 (n is a power of two >= 16).
    for (std::size_t i = 0; i < total; ++i)
        buf[i] = index_parity(i, n, g.dim) ? -f.values[i] : f.values[i];

    int dims[3] = {n, n, n};
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(g_planner_mutex);
        plan = fftw_plan_dft(g.dim, dims, reinterpret_cast<fftw_complex*>(buf.data()),
                             reinterpret_cast<fftw_complex*>(buf.data()),
                             dir == TransformDirection::Forward ? FFTW_FORWARD
                                                                : FFTW_BACKWARD,
                             FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(g_planner_mutex);
        fftw_destroy_plan(plan);
    }

    const double scale = dir == TransformDirection::Forward
                             ? std::pow(g.spacing(), g.dim)
                             : std::pow(g.freq_spacing() / (2.0 * kPi), g.dim);
    GridField out{g, std::move(buf)};
    for (std::size_t i = 0; i < total; ++i) {
        out.values[i] *= index_parity(i, n, g.dim) ? -scale : scale;
    }
    return out;
}

GridField apply_multiplier(const GridField& f, const FrequencySymbol& symbol) {
    const SpatialGrid& g = f.grid;
    GridField spec = transform(f, TransformDirection::Forward);
    const int n = g.points_per_axis;
    double xi[3] = {0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < spec.values.size(); ++i) {
        std::size_t rest = i;
        for (int a = g.dim - 1; a >= 0; --a) {
            xi[a] = g.freq(static_cast<int>(rest % n));
            rest /= n;
        }
        const Complex m = symbol(xi, g.dim);
        if (!std::isfinite(m.real()) || !std::isfinite(m.imag())) {
            std::string msg = "multiplier not finite at frequency (";
            for (int a = 0; a < g.dim; ++a)
                msg += (a ? "," : "") + format_double(xi[a]);
            throw std::domain_error(msg + ")");
        }
        spec.values[i] *= m;
    }
    return transform(spec, TransformDirection::Inverse);
}

GridField apply_radial_multiplier(const GridField& f,
                                  const std::function<Complex(double)>& symbol) {
    return apply_multiplier(f, [&](const double* xi, int dim) {
        double s = 0.0;
        for (int a = 0; a < dim; ++a) s += xi[a] * xi[a];
        return symbol(std::sqrt(s));
    });
}

GridField apply_homogeneous_power(const GridField& f, double rho) {
    if (rho < 0.0) {
        GridField spec = transform(f, TransformDirection::Forward);
        const int n = f.grid.points_per_axis;
        std::size_t zero_index = 0;
        for (int a = 0; a < f.grid.dim; ++a) zero_index = zero_index * n + n / 2;
        const double dc = std::abs(spec.values[zero_index]);
        if (dc > 1e-10 * std::max(spec.max_abs(), 1e-300))
            throw std::domain_error(
                "negative-order homogeneous symbol requires vanishing zero frequency");
    }
    return apply_radial_multiplier(f, [rho](double r) -> Complex {
        if (r == 0.0) return {0.0, 0.0};
        return {std::pow(r, rho), 0.0};
    });
}

LPPartition LPPartition::make(int j_min, int j_max) {
    if (j_min > j_max) throw std::domain_error("empty partition range");
    return {j_min, j_max};
}

double LPPartition::profile(double rho) const {
    if (!(rho > 0.0)) return 0.0;
    const double u = std::log2(rho);
    const double b = smooth_bump(u);
    if (b == 0.0) return 0.0;
    const int k0 = static_cast<int>(std::floor(u));
    double denom = 0.0;
    for (int k = k0 - 1; k <= k0 + 1; ++k) denom += smooth_bump(u - k);
    return b / denom;
}

double LPPartition::level_symbol(int j, double rho) const {
    return profile(std::ldexp(rho, -j));
}

double LPPartition::truncated_sum(double rho) const {
    double s = 0.0;
    for (int j = j_min; j <= j_max; ++j) s += level_symbol(j, rho);
    return s;
}

GridField lp_projection(const GridField& f, const LPPartition& part, int j) {
    if (!part.contains(j))
        throw std::out_of_range("Littlewood-Paley level outside partition range");
    return apply_radial_multiplier(
        f, [&](double rho) -> Complex { return {part.level_symbol(j, rho), 0.0}; });
}

double band_tail_fraction(const GridField& f, const LPPartition& part) {
    const GridField spec = transform(f, TransformDirection::Forward);
    const SpatialGrid& g = spec.grid;
    const int n = g.points_per_axis;
    double inside = 0.0, total = 0.0;
    for (std::size_t i = 0; i < spec.values.size(); ++i) {
        std::size_t rest = i;
        double s = 0.0;
        for (int a = 0; a < g.dim; ++a) {
            const double x = g.freq(static_cast<int>(rest % n));
            s += x * x;
            rest /= n;
        }
        const double rho = std::sqrt(s);
        const double mass = std::norm(spec.values[i]);
        total += mass;
        if (rho >= part.covered_lo() && rho <= part.covered_hi()) inside += mass;
    }
    if (total == 0.0) return 0.0;
    return 1.0 - inside / total;
}

GridField make_test_function(TestFunctionKind kind, const TestFunctionParams& params,
                             const SpatialGrid& grid) {
    GridField out = GridField::zero(grid);
    const int n = grid.points_per_axis;

    switch (kind) {
        case TestFunctionKind::Gaussian: {
            if (!(params.width > 0.0)) throw std::domain_error("gaussian width must be positive");
            const double inv2w2 = 1.0 / (2.0 * params.width * params.width);
            for (std::size_t i = 0; i < out.values.size(); ++i) {
                std::size_t rest = i;
                double r2 = 0.0, phase = 0.0;
                for (int a = grid.dim - 1; a >= 0; --a) {
                    const double x = grid.coord(static_cast<int>(rest % n));
                    const double dx = x - params.center[a];
                    r2 += dx * dx;
                    phase += params.modulation[a] * x;
                    rest /= n;
                }
                out.values[i] = std::exp(-r2 * inv2w2) *
                                Complex(std::cos(phase), std::sin(phase));
            }
            break;
        }
        case TestFunctionKind::SmoothBump: {
            const double lo = params.support_lo, hi = params.support_hi;
            if (!(hi > lo)) throw std::domain_error("empty bump support");
            for (std::size_t i = 0; i < out.values.size(); ++i) {
                std::size_t rest = i;
                double v = 1.0;
                for (int a = grid.dim - 1; a >= 0; --a) {
                    const double x = grid.coord(static_cast<int>(rest % n));
                    v *= smooth_bump((2.0 * x - lo - hi) / (hi - lo));
                    rest /= n;
                }
                out.values[i] = v;
            }
            if (params.normalize) {
                double mass = 0.0;
                for (const auto& v : out.values) mass += v.real();
                mass *= std::pow(grid.spacing(), grid.dim);
                if (mass <= 0.0) throw std::domain_error("bump has no mass on this grid");
                for (auto& v : out.values) v /= mass;
            }
            break;
        }
        case TestFunctionKind::AnnularBump: {
            // Built on the frequency side so the spectral support is exact.
            GridField spec = GridField::zero(grid);
            for (std::size_t i = 0; i < spec.values.size(); ++i) {
                std::size_t rest = i;
                double s = 0.0;
                for (int a = 0; a < grid.dim; ++a) {
                    const double x = grid.freq(static_cast<int>(rest % n));
                    s += x * x;
                    rest /= n;
                }
                const double rho = std::ldexp(std::sqrt(s), -params.ring_level);
                spec.values[i] = rho > 0.0 ? smooth_bump(std::log2(rho)) : 0.0;
            }
            out = transform(spec, TransformDirection::Inverse);
            break;
        }
    }
    return out;
}

double boundary_decay(const GridField& f) {
    const SpatialGrid& g = f.grid;
    const int n = g.points_per_axis;
    double boundary = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        std::size_t rest = i;
        bool edge = false;
        for (int a = 0; a < g.dim; ++a) {
            const int idx = static_cast<int>(rest % n);
            if (idx == 0 || idx == n - 1) edge = true;
            rest /= n;
        }
        if (edge) boundary = std::max(boundary, std::abs(f.values[i]));
    }
    const double peak = f.max_abs();
    return peak > 0.0 ? boundary / peak : 0.0;
}

void require_boundary_decay(const GridField& f, double tol) {
    const double d = boundary_decay(f);
    if (d > tol)
        throw std::domain_error("field does not decay at the domain boundary (ratio " +
                                format_double(d) + ")");
}

}  // namespace strichartz
