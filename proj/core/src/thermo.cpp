#include "muskit/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace muskit::thermo {

namespace {

constexpr double kF2Margin = 1e-10;
constexpr double kCurveTol = 1e-12;
constexpr int kVerificationGridPoints = 1000;
constexpr double kBisectionTol = 1e-9;

ProbDist gibbs_from(const std::vector<double>& energies, double beta, double& log_z) {
    if (energies.empty()) {
        throw std::invalid_argument("ThermoContext: empty energy vector");
    }
    for (double e : energies) {
        if (!std::isfinite(e)) {
            throw std::invalid_argument("ThermoContext: energies must be finite");
        }
    }
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw std::invalid_argument("ThermoContext: beta must be positive and finite");
    }
    const double e_min = *std::min_element(energies.begin(), energies.end());
    double z = 0.0;
    std::vector<double> w(energies.size());
    for (std::size_t i = 0; i < energies.size(); ++i) {
        w[i] = std::exp(-beta * (energies[i] - e_min));
        z += w[i];
    }
    log_z = std::log(z) - beta * e_min;
    for (double& x : w) x /= z;
    return ProbDist(std::move(w));
}

void require_matching(const EnergyDiagonalState& p, const ThermoContext& ctx,
                      const char* what) {
    if (p.size() != ctx.size()) {
        throw std::invalid_argument(std::string(what) + ": state length does not match context");
    }
}

}  // namespace

ThermoContext::ThermoContext(std::vector<double> energies, double beta)
    : energies_(std::move(energies)),
      beta_(beta),
      log_z_(0.0),
      gibbs_(gibbs_from(energies_, beta_, log_z_)) {}

ThermoContext product_context(const ThermoContext& lhs, const ThermoContext& rhs) {
    if (lhs.beta() != rhs.beta()) {
        throw std::invalid_argument("product_context: inverse temperatures must match");
    }
    std::vector<double> energies;
    energies.reserve(lhs.size() * rhs.size());
    for (double ei : lhs.energies()) {
        for (double ej : rhs.energies()) {
            energies.push_back(ei + ej);
        }
    }
    return ThermoContext(std::move(energies), lhs.beta());
}

double free_energy(const EnergyDiagonalState& p, const ThermoContext& ctx,
                   const RenyiOrder& alpha) {
    require_matching(p, ctx, "free_energy");
    const double kt = ctx.kT();
    return -kt * ctx.log_z() + kt * entropy::renyi_divergence(p, ctx.gibbs(), alpha);
}

EnergyDiagonalState epsilon_thermal(const EnergyDiagonalState& p, const ThermoContext& ctx,
                                    const NoiseLevel& eps) {
    require_matching(p, ctx, "epsilon_thermal");
    const double e = eps.epsilon();
    const double r = eps.r();
    std::vector<double> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i] = e * ctx.gibbs()[i] + r * p[i];
    }
    return EnergyDiagonalState(std::move(out));
}

namespace {

// Thermo-Lorenz curve: breakpoints of the piecewise-linear map from
// cumulative Gibbs weight to cumulative population, indices sorted by
// p_i/gamma_i descending.
struct LorenzCurve {
    std::vector<double> x;  // cumulative gamma, starts implicitly at 0
    std::vector<double> y;  // cumulative p
};

LorenzCurve lorenz(const EnergyDiagonalState& p, const ProbDist& gamma) {
    const std::size_t n = p.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return p[a] * gamma[b] > p[b] * gamma[a];
    });
    LorenzCurve c;
    c.x.reserve(n);
    c.y.reserve(n);
    double cx = 0.0, cy = 0.0;
    for (std::size_t k : idx) {
        cx += gamma[k];
        cy += p[k];
        c.x.push_back(cx);
        c.y.push_back(cy);
    }
    return c;
}

double curve_at(const LorenzCurve& c, double x) {
    double px = 0.0, py = 0.0;
    for (std::size_t i = 0; i < c.x.size(); ++i) {
        if (x <= c.x[i]) {
            const double span = c.x[i] - px;
            if (span <= 0.0) return c.y[i];
            return py + (c.y[i] - py) * (x - px) / span;
        }
        px = c.x[i];
        py = c.y[i];
    }
    return c.y.empty() ? 0.0 : c.y.back();
}

}  // namespace

bool thermo_majorizes(const EnergyDiagonalState& p, const EnergyDiagonalState& q,
                      const ThermoContext& ctx) {
    require_matching(p, ctx, "thermo_majorizes");
    require_matching(q, ctx, "thermo_majorizes");
    const LorenzCurve cp = lorenz(p, ctx.gibbs());
    const LorenzCurve cq = lorenz(q, ctx.gibbs());
    std::vector<double> xs;
    xs.reserve(cp.x.size() + cq.x.size());
    xs.insert(xs.end(), cp.x.begin(), cp.x.end());
    xs.insert(xs.end(), cq.x.begin(), cq.x.end());
    for (double x : xs) {
        if (curve_at(cp, x) < curve_at(cq, x) - kCurveTol) {
            return false;
        }
    }
    return true;
}

std::optional<double> f2_ordering_threshold(const EnergyDiagonalState& p,
                                            const EnergyDiagonalState& q,
                                            const ThermoContext& ctx,
                                            const RenyiOrder& alpha) {
    require_matching(p, ctx, "f2_ordering_threshold");
    require_matching(q, ctx, "f2_ordering_threshold");
    if (!alpha.is_finite()) {
        throw std::domain_error("f2_ordering_threshold: finite alpha required");
    }
    const RenyiOrder two = RenyiOrder::finite(2.0);
    const double f2p = free_energy(p, ctx, two);
    const double f2q = free_energy(q, ctx, two);
    if (std::abs(f2p - f2q) <= kF2Margin) {
        throw std::domain_error("f2_ordering_threshold: F2(p) and F2(q) tie within 1e-10");
    }
    if (f2p < f2q) {
        throw std::domain_error(
            "f2_ordering_threshold: F2 ordering points the other way (swap the arguments)");
    }

    // s(eps) = F_alpha(p^eps) - F_alpha(q^eps); want the least eps with s > 0
    // stably for all larger sampled eps.
    auto s = [&](double eps) {
        const NoiseLevel nl(eps);
        return free_energy(epsilon_thermal(p, ctx, nl), ctx, alpha) -
               free_energy(epsilon_thermal(q, ctx, nl), ctx, alpha);
    };

    int last_nonpositive = -1;
    for (int k = 0; k < kVerificationGridPoints; ++k) {
        const double eps = static_cast<double>(k) / kVerificationGridPoints;
        if (!(s(eps) > 0.0)) last_nonpositive = k;
    }
    if (last_nonpositive < 0) return 0.0;
    if (last_nonpositive == kVerificationGridPoints - 1) return std::nullopt;

    double lo = static_cast<double>(last_nonpositive) / kVerificationGridPoints;
    double hi = static_cast<double>(last_nonpositive + 1) / kVerificationGridPoints;
    while (hi - lo > kBisectionTol) {
        const double mid = 0.5 * (lo + hi);
        if (s(mid) > 0.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

std::optional<double> f1_reversal_time(const EnergyDiagonalState& p0,
                                       const EnergyDiagonalState& q0,
                                       const ThermoContext& ctx,
                                       const std::function<double(double)>& schedule,
                                       double t_max, int n_samples) {
    require_matching(p0, ctx, "f1_reversal_time");
    require_matching(q0, ctx, "f1_reversal_time");
    if (!(t_max > 0.0) || n_samples < 2) {
        throw std::invalid_argument("f1_reversal_time: need t_max > 0 and n_samples >= 2");
    }
    const RenyiOrder one = RenyiOrder::shannon();
    const RenyiOrder two = RenyiOrder::finite(2.0);
    if (!(free_energy(p0, ctx, two) > free_energy(q0, ctx, two) + kF2Margin)) {
        throw std::invalid_argument("f1_reversal_time: requires F2(p0) > F2(q0)");
    }
    if (!(free_energy(p0, ctx, one) < free_energy(q0, ctx, one) - kF2Margin)) {
        throw std::invalid_argument("f1_reversal_time: requires F1(p0) < F1(q0)");
    }

    auto eps_at = [&](double t) {
        const double e = schedule(t);
        if (!(e >= 0.0 && e <= 1.0)) {
            throw std::invalid_argument("f1_reversal_time: schedule left [0,1]");
        }
        return e;
    };
    // s(t) > 0 once the F1 ordering has reversed
    auto s = [&](double t) {
        const NoiseLevel nl(eps_at(t));
        return free_energy(epsilon_thermal(p0, ctx, nl), ctx, one) -
               free_energy(epsilon_thermal(q0, ctx, nl), ctx, one);
    };

    double prev_eps = -1.0;
    int last_nonpositive = -1;
    for (int k = 0; k < n_samples; ++k) {
        const double t = t_max * k / (n_samples - 1);
        const double e = eps_at(t);
        if (e < prev_eps) {
            throw std::invalid_argument("f1_reversal_time: schedule must be monotone");
        }
        prev_eps = e;
        if (!(s(t) > 0.0)) last_nonpositive = k;
    }
    if (last_nonpositive == n_samples - 1) {
        return std::nullopt;  // reversal beyond the schedule's range
    }
    if (last_nonpositive < 0) {
        return 0.0;
    }
    double lo = t_max * last_nonpositive / (n_samples - 1);
    double hi = t_max * (last_nonpositive + 1) / (n_samples - 1);
    while (hi - lo > kBisectionTol) {
        const double mid = 0.5 * (lo + hi);
        if (s(mid) > 0.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

}  // namespace muskit::thermo
