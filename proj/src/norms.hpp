#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "grid.hpp"

namespace strichartz {

// Weighted decreasing rearrangement: |values| sorted non-increasing together
// with the measure of each sample (cell volume or time step).
struct Rearrangement {
    std::vector<double> levels;
    std::vector<double> weights;

    static Rearrangement from_field(const GridField& f);
    static Rearrangement from_weighted(std::vector<double> magnitudes,
                                       std::vector<double> weights);
};

// Lorentz norm L^{q,p} from the step rearrangement; p = inf is the weak norm
// sup t^{1/q} f*(t), evaluated exactly over the cumulative-measure breakpoints.
double lorentz_norm(const Rearrangement& r, double q, double p);

double lebesgue_norm(const GridField& f, double r);
double lorentz_norm(const GridField& f, double q, double p);

// ||(sqrt(-Delta))^rho f||_{L^r}; rho < 0 requires a vanishing zero frequency.
double sobolev_norm(const GridField& f, double rho, double r);

struct BesovTrace {
    std::vector<int> levels;
    std::vector<double> terms;     // ||f * phi_j||_r per level
    double tail_fraction = 0.0;    // spectral mass outside the covered band
};

// (sum_j 2^{rho s j} ||f * phi_j||_r^s)^{1/s}; s = inf takes the sup over j.
// The input must be band-limited to the partition (tail mass < 1e-8).
double besov_norm(const GridField& f, double rho, double r, double s,
                  const LPPartition& part, BesovTrace* trace = nullptr);

struct TemporalSpec {
    double q = 2.0;
    double p = 2.0;  // inf for the weak norm
};

struct SpatialSpec {
    enum class Kind { Lebesgue, Lorentz, Sobolev, Besov };
    Kind kind = Kind::Lebesgue;
    double r = 2.0;
    double p = 2.0;    // Lorentz second index
    double rho = 0.0;  // Sobolev/Besov smoothness
    double s = 2.0;    // Besov summation index
    std::shared_ptr<const LPPartition> partition;

    static SpatialSpec lebesgue(double r);
    static SpatialSpec lorentz(double r, double p);
    static SpatialSpec sobolev(double rho, double r);
    static SpatialSpec besov(double rho, double r, double s, LPPartition part);
};

struct NormSpec {
    std::optional<TemporalSpec> temporal;
    SpatialSpec spatial;
};

double spatial_norm(const GridField& f, const SpatialSpec& spec);

struct MixedNormTrace {
    std::vector<double> times;
    std::vector<double> slice_norms;
};

// Spatial norm per slice, then the temporal Lorentz norm with the time step
// as weight. A temporal spec is required for multi-slice fields.
double mixed_norm(const SpaceTimeField& F, const NormSpec& spec,
                  MixedNormTrace* trace = nullptr);

}  // namespace strichartz
