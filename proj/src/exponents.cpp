#include "exponents.hpp"

#include <cmath>
#include <stdexcept>

#include "common.hpp"

namespace strichartz {

namespace {

bool near(double a, double b) { return std::abs(a - b) <= kExponentTol; }

void require_finite_exponent(double e, const char* name) {
    // q in [1, inf]; reciprocals of anything below 1 are rejected later.
    if (std::isnan(e) || e < 1.0)
        throw std::domain_error(std::string(name) + " must be >= 1 (inf allowed)");
}

}  // namespace

ExponentPoint ExponentPoint::from_exponents(double q, double r) {
    require_finite_exponent(q, "q");
    require_finite_exponent(r, "r");
    ExponentPoint p;
    p.inv_q = std::isinf(q) ? 0.0 : 1.0 / q;
    p.inv_r = std::isinf(r) ? 0.0 : 1.0 / r;
    if (!p.valid()) throw std::domain_error("exponent pair out of range");
    return p;
}

ExponentPoint ExponentPoint::from_reciprocals(double inv_q, double inv_r) {
    ExponentPoint p{inv_q, inv_r};
    if (!p.valid()) throw std::domain_error("reciprocal exponents out of range");
    return p;
}

bool ExponentPoint::valid() const {
    return std::isfinite(inv_q) && std::isfinite(inv_r) && inv_q >= -kExponentTol &&
           inv_q <= 1.0 + kExponentTol && inv_r >= -kExponentTol &&
           inv_r <= 0.5 + kExponentTol;
}

SigmaContext SigmaContext::schrodinger(int d) {
    if (d < 1) throw std::domain_error("Schrodinger context needs d >= 1");
    return {0.5 * d, EquationKind::Schrodinger, d};
}

SigmaContext SigmaContext::wave(int d) {
    if (d < 2) throw std::domain_error("wave context needs d >= 2");
    return {0.5 * (d - 1), EquationKind::Wave, d};
}

SigmaContext SigmaContext::abstract(double sigma) {
    if (!(sigma > 0.0)) throw std::domain_error("sigma must be positive");
    return {sigma, EquationKind::Abstract, 0};
}

RegionClass classify_pair(const ExponentPoint& p, const SigmaContext& ctx) {
    if (!p.valid()) throw std::domain_error("invalid exponent point");
    if (!(ctx.sigma > 0.0)) throw std::domain_error("sigma must be positive");
    const double sigma = ctx.sigma;
    const double iq = p.inv_q;
    const double ir = p.inv_r;
    const bool q_finite = iq > kExponentTol;

    RegionClass out;

    // Sharp admissibility: q,r >= 2, 1/q = sigma(1/2 - 1/r), excluding the
    // forbidden endpoint (q,r,sigma) = (2,inf,1).
    const bool on_sharp_line = near(iq, sigma * (0.5 - ir));
    const bool q_ge_2 = iq <= 0.5 + kExponentTol;
    const bool forbidden_endpoint = near(iq, 0.5) && near(ir, 0.0) && near(sigma, 1.0);
    out.sharp_admissible = q_ge_2 && on_sharp_line && !forbidden_endpoint;

    // Acceptability: 1 <= q < inf with 1/q < 2 sigma (1/2 - 1/r), or (inf,2).
    const double acceptance_line = 2.0 * sigma * (0.5 - ir);
    const bool strictly_below = iq < acceptance_line - kExponentTol;
    const bool infinity_two = near(iq, 0.0) && near(ir, 0.5);
    out.acceptable = (q_finite && strictly_below) || infinity_two;

    out.critical = q_finite && near(iq, acceptance_line);
    out.outside = !out.sharp_admissible && !out.acceptable && !out.critical;
    return out;
}

double scaling_gap_schrodinger(const ExponentPoint& p, const ExponentPoint& pt, int d) {
    if (d < 1) throw std::domain_error("d must be >= 1");
    return p.inv_q + pt.inv_q - 0.5 * d * (1.0 - p.inv_r - pt.inv_r);
}

NecessaryConditions necessary_conditions_schrodinger(const ExponentPoint& p,
                                                     const ExponentPoint& pt, int d) {
    if (d < 1) throw std::domain_error("d must be >= 1");
    NecessaryConditions out;
    out.strict = p.inv_q < d * (0.5 - p.inv_r) - kExponentTol;
    out.strict_tilde = pt.inv_q < d * (0.5 - pt.inv_r) - kExponentTol;
    out.q_le_dual = p.inv_q <= (1.0 - pt.inv_q) + kExponentTol;
    return out;
}

HypothesisReport theorem_hypotheses(const WeakCaseParams& w, double sigma) {
    if (!(sigma > 0.0)) throw std::domain_error("sigma must be positive");
    const double th = w.theta;
    const double tht = w.theta_tilde;
    if (th < -kExponentTol || th > 1.0 + kExponentTol || tht < -kExponentTol ||
        tht > 1.0 + kExponentTol)
        throw std::domain_error("theta parameters must lie in [0,1]");

    HypothesisReport rep;
    if (sigma < 1.0 - kExponentTol) {
        rep.sigma_case = true;
    } else if (near(sigma, 1.0)) {
        rep.sigma_case = th < 1.0 - kExponentTol && tht < 1.0 - kExponentTol;
    } else {
        const double f = (sigma - 1.0) / sigma;
        rep.sigma_case = f * (1.0 - th) <= (1.0 - tht) + kExponentTol &&
                         f * (1.0 - tht) <= (1.0 - th) + kExponentTol;
    }

    const double inv_q_dual = 1.0 - w.inv_q_tilde;  // 1/q̃'
    rep.scaling = near(sigma * th, w.inv_q) &&
                  near(inv_q_dual, 1.0 - 0.5 * sigma * (tht - th));
    rep.strict_gap = inv_q_dual - w.inv_q > kExponentTol;
    rep.ordered = th <= tht + kExponentTol;
    return rep;
}

bool corollary_schrodinger(int d, double q, double r, double q_tilde, double r_tilde) {
    if (d < 1) throw std::domain_error("d must be >= 1");
    const ExponentPoint p = ExponentPoint::from_exponents(q, r);
    const ExponentPoint pt = ExponentPoint::from_exponents(q_tilde, r_tilde);
    const double ir = p.inv_r, irt = pt.inv_r;

    bool dims = false;
    if (d == 1) {
        dims = ir < 0.5 - kExponentTol && irt < 0.5 - kExponentTol;
    } else if (d == 2) {
        dims = ir < 0.5 - kExponentTol && irt < 0.5 - kExponentTol &&
               ir > kExponentTol && irt > kExponentTol;
    } else {
        dims = (d - 2) * ir <= d * irt + kExponentTol &&
               (d - 2) * irt <= d * ir + kExponentTol;
    }

    const bool critical = near(p.inv_q, d * (0.5 - ir));
    const bool dual = near(pt.inv_q, 0.5 * d * (ir - irt));
    const bool strict = (1.0 - pt.inv_q) - p.inv_q > kExponentTol;
    const bool ordered = irt <= ir + kExponentTol;
    return dims && critical && dual && strict && ordered;
}

WaveCorollary corollary_wave(int d, double q, double r, double q_tilde, double r_tilde) {
    if (d < 2) throw std::domain_error("wave corollary needs d >= 2");
    const ExponentPoint p = ExponentPoint::from_exponents(q, r);
    const ExponentPoint pt = ExponentPoint::from_exponents(q_tilde, r_tilde);
    const double ir = p.inv_r, irt = pt.inv_r;

    WaveCorollary out;
    out.gamma = 0.5 * (d + 1) * (0.5 - ir);
    out.gamma_tilde = 0.5 * (d + 1) * (0.5 - irt);

    bool dims = false;
    if (d == 2) {
        dims = ir < 0.5 - kExponentTol && irt < 0.5 - kExponentTol;
    } else if (d == 3) {
        dims = ir < 0.5 - kExponentTol && irt < 0.5 - kExponentTol &&
               ir > kExponentTol && irt > kExponentTol;
    } else {
        dims = (d - 3) * ir <= (d - 1) * irt + kExponentTol &&
               (d - 3) * irt <= (d - 1) * ir + kExponentTol;
    }

    const bool critical = near(p.inv_q, (d - 1) * (0.5 - ir));
    // 1/q̃' recomputed from 1 - ((d-1)/2)(1/r - 1/r̃); the in-text special
    // case display disagrees with this and is treated as a typo.
    const bool dual = near(pt.inv_q, 0.5 * (d - 1) * (ir - irt));
    const bool strict = (1.0 - pt.inv_q) - p.inv_q > kExponentTol;
    out.verdict = dims && critical && dual && strict;
    return out;
}

double beta(double sigma, double theta, double theta_tilde, double inv_q,
            double inv_q_tilde) {
    return 0.5 * sigma * (theta + theta_tilde) - inv_q_tilde - inv_q;
}

std::vector<RegionSample> region_samples(double sigma, int n) {
    if (n < 2) throw std::domain_error("region sampling needs n >= 2");
    if (!(sigma > 0.0)) throw std::domain_error("sigma must be positive");
    const SigmaContext ctx = SigmaContext::abstract(sigma);
    std::vector<RegionSample> rows(static_cast<std::size_t>(n) * n);
    parallel_for(rows.size(), [&](std::size_t idx) {
        const int i = static_cast<int>(idx) / n;
        const int j = static_cast<int>(idx) % n;
        RegionSample& s = rows[idx];
        s.inv_r = 0.5 * i / (n - 1);
        s.inv_q = static_cast<double>(j) / (n - 1);
        s.cls = classify_pair(ExponentPoint::from_reciprocals(s.inv_q, s.inv_r), ctx);
    });
    return rows;
}

std::string region_samples_csv(const std::vector<RegionSample>& samples) {
    std::string out = "inv_r,inv_q,sharp_admissible,acceptable,critical\n";
    for (const auto& s : samples) {
        out += format_double(s.inv_r);
        out += ',';
        out += format_double(s.inv_q);
        out += ',';
        out += s.cls.sharp_admissible ? '1' : '0';
        out += ',';
        out += s.cls.acceptable ? '1' : '0';
        out += ',';
        out += s.cls.critical ? '1' : '0';
        out += '\n';
    }
    return out;
}

}  // namespace strichartz
