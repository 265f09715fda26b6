#pragma once

#include <string>
#include <vector>

namespace strichartz {

// Tolerance for membership in exact exponent relations (critical lines,
// scaling identities). Inputs are reciprocals, so rational exponent pairs
// land within one ulp of the lines they belong to.
inline constexpr double kExponentTol = 1e-12;

// Exponent pair stored as reciprocals (1/q, 1/r); q = infinity is inv_q = 0.
struct ExponentPoint {
    double inv_q = 0.0;  // [0,1]
    double inv_r = 0.0;  // [0,1/2]

    static ExponentPoint from_exponents(double q, double r);
    static ExponentPoint from_reciprocals(double inv_q, double inv_r);
    bool valid() const;
};

enum class EquationKind { Schrodinger, Wave, Abstract };

// Decay rate of the dispersive estimate together with its origin:
// sigma = d/2 for Schrodinger, (d-1)/2 for the wave propagator.
struct SigmaContext {
    double sigma = 0.0;
    EquationKind equation = EquationKind::Abstract;
    int dim = 0;

    static SigmaContext schrodinger(int d);
    static SigmaContext wave(int d);
    static SigmaContext abstract(double sigma);
};

// Independent flags; a point can be sharp-admissible and acceptable at once.
struct RegionClass {
    bool sharp_admissible = false;
    bool acceptable = false;
    bool critical = false;
    bool outside = false;
};

// Interpolation parameters of the weak-type theorem: sigma*theta = 1/q and
// 1/q̃' = 1 - sigma*(theta_tilde - theta)/2.
struct WeakCaseParams {
    double theta = 0.0;
    double theta_tilde = 0.0;
    double inv_q = 0.0;
    double inv_q_tilde = 0.0;
};

RegionClass classify_pair(const ExponentPoint& p, const SigmaContext& ctx);

// 1/q + 1/q̃ - (d/2)(1 - 1/r - 1/r̃); zero iff the scaling relation holds.
double scaling_gap_schrodinger(const ExponentPoint& p, const ExponentPoint& pt, int d);

struct NecessaryConditions {
    bool strict = false;        // 1/q < d(1/2 - 1/r)
    bool strict_tilde = false;  // tilde counterpart
    bool q_le_dual = false;     // 1/q <= 1/q̃'
    bool all() const { return strict && strict_tilde && q_le_dual; }
};
NecessaryConditions necessary_conditions_schrodinger(const ExponentPoint& p,
                                                     const ExponentPoint& pt, int d);

struct HypothesisReport {
    bool sigma_case = false;  // the sigma<1 / sigma=1 / sigma>1 branch
    bool scaling = false;     // sigma*theta = 1/q and 1/q̃' matches the relation
    bool strict_gap = false;  // 1/q < 1/q̃' strictly
    bool ordered = false;     // theta <= theta_tilde
    bool overall() const { return sigma_case && scaling && strict_gap && ordered; }
};
HypothesisReport theorem_hypotheses(const WeakCaseParams& w, double sigma);

// Weak-type Schrodinger corollary: per-dimension conditions, the critical
// relation d(1/2-1/r) = 1/q, the dual relation and 1/r̃ <= 1/r.
bool corollary_schrodinger(int d, double q, double r, double q_tilde, double r_tilde);

struct WaveCorollary {
    bool verdict = false;
    double gamma = 0.0;
    double gamma_tilde = 0.0;
};
WaveCorollary corollary_wave(int d, double q, double r, double q_tilde, double r_tilde);

// sigma*(theta+theta_tilde)/2 - 1/q̃ - 1/q, the dyadic scaling exponent of
// the time-localized pieces.
double beta(double sigma, double theta, double theta_tilde, double inv_q,
            double inv_q_tilde);

struct RegionSample {
    double inv_r = 0.0;
    double inv_q = 0.0;
    RegionClass cls;
};

// Uniform n x n sampling of (1/r, 1/q) in [0,1/2] x [0,1], row-major in 1/r.
std::vector<RegionSample> region_samples(double sigma, int n);
std::string region_samples_csv(const std::vector<RegionSample>& samples);

}  // namespace strichartz
