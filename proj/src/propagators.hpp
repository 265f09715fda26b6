#pragma once

#include <vector>

#include "grid.hpp"
#include "norms.hpp"

namespace strichartz {

// e^{it Delta} (symbol e^{-it|xi|^2}), e^{it sqrt(-Delta)} (symbol e^{it|xi|}),
// or the frequency-localised half wave e^{it|xi|} chi0(|xi|) with chi0 a
// smooth bump equal to 1 on [3/4, 3/2] and supported in [1/2, 2].
struct PropagatorKind {
    enum class Family { Schrodinger, HalfWave, LocalizedHalfWave };
    Family family = Family::Schrodinger;

    static PropagatorKind schrodinger() { return {Family::Schrodinger}; }
    static PropagatorKind half_wave() { return {Family::HalfWave}; }
    static PropagatorKind localized_half_wave() { return {Family::LocalizedHalfWave}; }

    Complex symbol(double rho, double t) const;
    double decay_rate(int dim) const;  // sigma of the dispersive estimate
};

double chi0_localizer(double rho);

GridField propagate(const GridField& f, double t, const PropagatorKind& kind);

struct DuhamelConfig {
    enum class Quadrature { Trapezoid, Simpson };
    Quadrature quadrature = Quadrature::Trapezoid;
    double dt = 0.0;       // 0 means "use the forcing field's own spacing"
    bool retarded = true;  // integrate s < t; false integrates all of F's range
};

// For each t in t_eval, quadrature over s of U(t-s) F(s). The forcing is
// treated as supported on its sampled time range; node weights are the
// measures of the half-open sample cells clipped to the integration domain,
// which reduces to the composite trapezoid rule on the full range.
SpaceTimeField duhamel(const SpaceTimeField& F, const std::vector<double>& t_eval,
                       const PropagatorKind& kind, const DuhamelConfig& cfg);

// Same quadrature restricted to the dyadic shell 2^j <= t - s < 2^{j+1},
// s < t. The shells tile the retarded domain with exactly additive weights.
SpaceTimeField dyadic_piece(const SpaceTimeField& F, const std::vector<double>& t_eval,
                            int j, const PropagatorKind& kind, const DuhamelConfig& cfg);

struct DispersiveRow {
    double t = 0.0;
    double ratio = 0.0;  // ||U(t) f||_inf |t|^sigma / ||f||_1
};

struct DispersiveReport {
    double sigma = 0.0;
    std::vector<DispersiveRow> rows;
    double sup_ratio = 0.0;
    double tail_ratio = 0.0;  // ratio at the largest usable t
    std::string csv() const;  // header t,ratio
};

// Ratios are reported only for |t| >= 4 h^2 (Schrodinger) or 4 h (wave);
// below that the grid cannot resolve the singular decay.
DispersiveReport dispersive_check(const PropagatorKind& kind, const GridField& f,
                                  const std::vector<double>& t_list);

struct BesovDispersiveReport {
    std::vector<int> levels;
    std::vector<double> t_list;
    // ratios[level index][t index] =
    //   ||phi_j * e^{it sqrt(-Delta)} f||_inf |t|^{(d-1)/2} 2^{-j(d+1)/2}
    std::vector<std::vector<double>> ratios;
    std::vector<double> aggregate;  // l^2 over levels, per t
    double tail_fraction = 0.0;
    std::string csv() const;  // header t,j,ratio
};

BesovDispersiveReport besov_dispersive_check(const GridField& f,
                                             const std::vector<double>& t_list,
                                             const LPPartition& part);

}  // namespace strichartz
