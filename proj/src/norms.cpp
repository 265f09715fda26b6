#include "norms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace strichartz {

namespace {

bool is_inf(double v) { return std::isinf(v) && v > 0.0; }

}  // namespace

Rearrangement Rearrangement::from_field(const GridField& f) {
    std::vector<double> mags(f.values.size());
    for (std::size_t i = 0; i < mags.size(); ++i) mags[i] = std::abs(f.values[i]);
    const double w = std::pow(f.grid.spacing(), f.grid.dim);
    return from_weighted(std::move(mags), std::vector<double>(f.values.size(), w));
}

Rearrangement Rearrangement::from_weighted(std::vector<double> magnitudes,
                                           std::vector<double> weights) {
    if (magnitudes.size() != weights.size())
        throw std::invalid_argument("rearrangement: size mismatch");
    for (double w : weights)
        if (!(w > 0.0)) throw std::invalid_argument("rearrangement: weights must be positive");
    std::vector<std::size_t> order(magnitudes.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return magnitudes[a] > magnitudes[b];
    });
    Rearrangement r;
    r.levels.reserve(order.size());
    r.weights.reserve(order.size());
    for (std::size_t idx : order) {
        r.levels.push_back(magnitudes[idx]);
        r.weights.push_back(weights[idx]);
    }
    return r;
}

double lorentz_norm(const Rearrangement& r, double q, double p) {
    if (!(q > 0.0) || is_inf(q)) throw std::domain_error("Lorentz norm needs q in (0,inf)");
    if (!(p >= 1.0)) throw std::domain_error("Lorentz norm needs p >= 1");

    if (is_inf(p)) {
        // sup over breakpoints: on each constant piece t^{1/q} f*(t) peaks at
        // the right endpoint of the piece.
        double cum = 0.0, best = 0.0;
        for (std::size_t i = 0; i < r.levels.size(); ++i) {
            cum += r.weights[i];
            if (r.levels[i] == 0.0) break;
            best = std::max(best, r.levels[i] * std::pow(cum, 1.0 / q));
        }
        return best;
    }

    // Exact piecewise-constant integral of (t^{1/q} f*(t))^p dt/t.
    double cum = 0.0, prev_pow = 0.0, acc = 0.0;
    const double e = p / q;
    for (std::size_t i = 0; i < r.levels.size(); ++i) {
        cum += r.weights[i];
        const double cur_pow = std::pow(cum, e);
        if (r.levels[i] > 0.0)
            acc += std::pow(r.levels[i], p) * (cur_pow - prev_pow);
        prev_pow = cur_pow;
    }
    return std::pow(acc * q / p, 1.0 / p);
}

double lebesgue_norm(const GridField& f, double r) {
    if (!(r >= 1.0)) throw std::domain_error("Lebesgue exponent must be >= 1");
    if (is_inf(r)) return f.max_abs();
    const double w = std::pow(f.grid.spacing(), f.grid.dim);
    double acc = 0.0;
    for (const auto& v : f.values) {
        const double a = std::abs(v);
        if (a > 0.0) acc += std::pow(a, r);
    }
    return std::pow(acc * w, 1.0 / r);
}

double lorentz_norm(const GridField& f, double q, double p) {
    return lorentz_norm(Rearrangement::from_field(f), q, p);
}

double sobolev_norm(const GridField& f, double rho, double r) {
    return lebesgue_norm(apply_homogeneous_power(f, rho), r);
}

double besov_norm(const GridField& f, double rho, double r, double s,
                  const LPPartition& part, BesovTrace* trace) {
    const double tail = band_tail_fraction(f, part);
    if (tail > 1e-8)
        throw std::domain_error("field is not band-limited to the partition (tail " +
                                format_double(tail) + ")");
    double acc = 0.0, sup = 0.0;
    BesovTrace local;
    for (int j = part.j_min; j <= part.j_max; ++j) {
        const double term = lebesgue_norm(lp_projection(f, part, j), r);
        local.levels.push_back(j);
        local.terms.push_back(term);
        const double weighted = std::exp2(rho * j) * term;
        if (is_inf(s)) {
            sup = std::max(sup, weighted);
        } else {
            if (!(s >= 1.0)) throw std::domain_error("Besov index s must be >= 1");
            if (weighted > 0.0) acc += std::pow(weighted, s);
        }
    }
    local.tail_fraction = tail;
    if (trace != nullptr) *trace = std::move(local);
    return is_inf(s) ? sup : std::pow(acc, 1.0 / s);
}

SpatialSpec SpatialSpec::lebesgue(double r) {
    SpatialSpec s;
    s.kind = Kind::Lebesgue;
    s.r = r;
    return s;
}

SpatialSpec SpatialSpec::lorentz(double r, double p) {
    SpatialSpec s;
    s.kind = Kind::Lorentz;
    s.r = r;
    s.p = p;
    return s;
}

SpatialSpec SpatialSpec::sobolev(double rho, double r) {
    SpatialSpec s;
    s.kind = Kind::Sobolev;
    s.rho = rho;
    s.r = r;
    return s;
}

SpatialSpec SpatialSpec::besov(double rho, double r, double s, LPPartition part) {
    SpatialSpec out;
    out.kind = Kind::Besov;
    out.rho = rho;
    out.r = r;
    out.s = s;
    out.partition = std::make_shared<const LPPartition>(part);
    return out;
}

double spatial_norm(const GridField& f, const SpatialSpec& spec) {
    switch (spec.kind) {
        case SpatialSpec::Kind::Lebesgue:
            return lebesgue_norm(f, spec.r);
        case SpatialSpec::Kind::Lorentz:
            return lorentz_norm(f, spec.r, spec.p);
        case SpatialSpec::Kind::Sobolev:
            return sobolev_norm(f, spec.rho, spec.r);
        case SpatialSpec::Kind::Besov:
            if (!spec.partition) throw std::invalid_argument("Besov spec needs a partition");
            return besov_norm(f, spec.rho, spec.r, spec.s, *spec.partition);
    }
    throw std::logic_error("unknown spatial norm kind");
}

double mixed_norm(const SpaceTimeField& F, const NormSpec& spec, MixedNormTrace* trace) {
    if (F.slices.empty()) throw std::invalid_argument("empty space-time field");
    std::vector<double> slice_norms(F.slices.size());
    for (std::size_t i = 0; i < F.slices.size(); ++i)
        slice_norms[i] = spatial_norm(F.slices[i], spec.spatial);
    if (trace != nullptr) {
        trace->times = F.times;
        trace->slice_norms = slice_norms;
    }
    if (!spec.temporal.has_value()) {
        if (F.slices.size() != 1)
            throw std::invalid_argument("multi-slice field needs a temporal spec");
        return slice_norms[0];
    }
    const TemporalSpec& t = *spec.temporal;
    if (is_inf(t.q)) return *std::max_element(slice_norms.begin(), slice_norms.end());
    const double dt = F.slices.size() >= 2 ? F.dt() : 1.0;
    return lorentz_norm(
        Rearrangement::from_weighted(std::move(slice_norms),
                                     std::vector<double>(F.slices.size(), dt)),
        t.q, t.p);
}

}  // namespace strichartz
