#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "common.hpp"

namespace strichartz {

// Uniform periodic grid on [-L, L)^d with 2^k points per axis. The dual
// frequency lattice has spacing pi/L and runs over [-n/2, n/2) * pi/L.
struct SpatialGrid {
    int dim = 1;
    int points_per_axis = 16;
    double half_extent = 1.0;

    static SpatialGrid make(int dim, int points_per_axis, double half_extent);

    double spacing() const { return 2.0 * half_extent / points_per_axis; }
    double freq_spacing() const { return kPi / half_extent; }
    std::size_t size() const;
    double coord(int i) const { return -half_extent + i * spacing(); }
    double freq(int k) const { return (k - points_per_axis / 2) * freq_spacing(); }

    bool operator==(const SpatialGrid&) const = default;
};

// Complex samples on a SpatialGrid, row-major over the axes. The same
// container holds spatial samples and frequency samples; the transform
// convention is f̂(xi) = ∫ f(x) e^{-i x.xi} dx with Riemann-sum weights.
struct GridField {
    SpatialGrid grid;
    std::vector<Complex> values;

    static GridField zero(const SpatialGrid& g);
    double max_abs() const;
    double l2() const;  // sqrt(spacing^d * sum |f|^2)
};

GridField operator+(const GridField& a, const GridField& b);
GridField operator-(const GridField& a, const GridField& b);
GridField operator*(Complex c, const GridField& f);

// Time-stacked fields with uniform time spacing (validated to 1e-12).
struct SpaceTimeField {
    std::vector<double> times;
    std::vector<GridField> slices;

    static SpaceTimeField make(std::vector<double> times, std::vector<GridField> slices);
    double dt() const;
};

enum class TransformDirection { Forward, Inverse };

GridField transform(const GridField& f, TransformDirection dir);

// Frequency symbol evaluated at a lattice point; xi has grid.dim entries.
using FrequencySymbol = std::function<Complex(const double* xi, int dim)>;

GridField apply_multiplier(const GridField& f, const FrequencySymbol& symbol);
GridField apply_radial_multiplier(const GridField& f,
                                  const std::function<Complex(double rho)>& symbol);

// |xi|^rho with the zero frequency mapped to 0; for rho < 0 the input must
// have |f̂(0)| <= 1e-10 * max|f̂|.
GridField apply_homogeneous_power(const GridField& f, double rho);

// Smooth dyadic partition of unity built from a log-scale bump: the level-j
// symbol is profile(2^{-j} |xi|), supported in [2^{j-1}, 2^{j+1}], and the
// levels telescope to exactly 1 on [2^{j_min}, 2^{j_max}].
struct LPPartition {
    int j_min = 0;
    int j_max = 0;

    static LPPartition make(int j_min, int j_max);

    double profile(double rho) const;                 // level-0 bump on [1/2,2]
    double level_symbol(int j, double rho) const;     // profile(2^{-j} rho)
    double truncated_sum(double rho) const;           // sum over [j_min, j_max]
    double covered_lo() const { return std::exp2(j_min); }
    double covered_hi() const { return std::exp2(j_max); }
    bool contains(int j) const { return j >= j_min && j <= j_max; }
};

GridField lp_projection(const GridField& f, const LPPartition& part, int j);

// Fraction of spectral mass (|f̂|^2) outside the partition's telescoping band.
double band_tail_fraction(const GridField& f, const LPPartition& part);

enum class TestFunctionKind { Gaussian, SmoothBump, AnnularBump };

struct TestFunctionParams {
    // Gaussian: exp(-|x-center|^2/(2 width^2)) * exp(i modulation.x)
    std::array<double, 3> center{0.0, 0.0, 0.0};
    double width = 1.0;
    std::array<double, 3> modulation{0.0, 0.0, 0.0};
    // SmoothBump: product over axes of exp(-1/(1-u^2)) rescaled to (lo, hi)
    double support_lo = -1.0;
    double support_hi = 1.0;
    bool normalize = false;  // scale to unit integral
    // AnnularBump: frequency-side bump supported in 2^ring * [1/2, 2]
    int ring_level = 0;
};

GridField make_test_function(TestFunctionKind kind, const TestFunctionParams& params,
                             const SpatialGrid& grid);

// max boundary |f| / max |f|; experiments abort when this exceeds 1e-12.
double boundary_decay(const GridField& f);
void require_boundary_decay(const GridField& f, double tol = 1e-12);

}  // namespace strichartz
