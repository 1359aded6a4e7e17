#include "muskit/uncertainty.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace muskit::uncertainty {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kClampTol = 1e-12;
constexpr double kH2Margin = 1e-10;
constexpr int kVerificationGridPoints = 1000;
constexpr double kBisectionTol = 1e-9;

double collision_power(const ProbDist& p) {
    double s = 0.0;
    for (double x : p.probs()) s += x * x;
    return s;
}

}  // namespace

NoiseLevel::NoiseLevel(double epsilon) : eps_(epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw std::invalid_argument("NoiseLevel: epsilon must lie in [0,1]");
    }
}

ProbDist outcome_dist(const DensityMatrix& rho, const Observable& obs) {
    if (rho.dim() != obs.dim()) {
        throw std::invalid_argument("outcome_dist: dimension mismatch");
    }
    const int d = rho.dim();
    std::vector<double> p(static_cast<std::size_t>(d));
    double sum = 0.0;
    for (int i = 0; i < d; ++i) {
        const auto col = obs.eigenvectors().col(i);
        double v = (col.adjoint() * rho.matrix() * col)(0, 0).real();
        if (v < 0.0) {
            if (v < -kClampTol) {
                throw std::invalid_argument("outcome_dist: negative probability beyond -1e-12");
            }
            v = 0.0;
        }
        if (v > 1.0) {
            if (v > 1.0 + kClampTol) {
                throw std::invalid_argument("outcome_dist: probability exceeds 1 beyond 1e-12");
            }
            v = 1.0;
        }
        p[static_cast<std::size_t>(i)] = v;
        sum += v;
    }
    for (double& x : p) x /= sum;
    return ProbDist(std::move(p));
}

JointStat joint_stat(const DensityMatrix& rho, const ObservablePair& pair) {
    ProbDist pa = outcome_dist(rho, pair.a());
    ProbDist pb = outcome_dist(rho, pair.b());
    std::vector<double> joint;
    joint.reserve(pa.size() * pb.size());
    for (std::size_t i = 0; i < pa.size(); ++i) {
        for (std::size_t j = 0; j < pb.size(); ++j) {
            joint.push_back(pa[i] * pb[j]);
        }
    }
    return JointStat{ProbDist(std::move(joint)), std::move(pa), std::move(pb)};
}

ProbDist classical_noise(const ProbDist& p, const NoiseLevel& eps) {
    const double u = eps.epsilon() / static_cast<double>(p.size());
    const double r = eps.r();
    std::vector<double> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i] = u + r * p[i];
    }
    return ProbDist(std::move(out));
}

DensityMatrix noisy_state(const DensityMatrix& rho, const NoiseLevel& eps) {
    const int d = rho.dim();
    quantum::ComplexMatrix m =
        (eps.epsilon() / d) * quantum::ComplexMatrix::Identity(d, d) + eps.r() * rho.matrix();
    return DensityMatrix(std::move(m));
}

DensityMatrix pseudo_pure(const PureState& psi, const NoiseLevel& eps) {
    return noisy_state(quantum::pure_to_density(psi), eps);
}

std::optional<double> flip_threshold(const ProbDist& p, const ProbDist& q,
                                     const RenyiOrder& alpha) {
    if (!alpha.is_finite()) {
        throw std::domain_error(
            "flip_threshold: orders +-inf are unsupported (their ordering is "
            "unaffected by uniform noise)");
    }
    const double h2p = entropy::renyi_entropy(p, RenyiOrder::finite(2.0));
    const double h2q = entropy::renyi_entropy(q, RenyiOrder::finite(2.0));
    if (std::abs(h2p - h2q) <= kH2Margin) {
        throw std::domain_error("flip_threshold: H2(p) and H2(q) tie within 1e-10");
    }
    if (h2p > h2q) {
        throw std::domain_error(
            "flip_threshold: H2 ordering points the other way (swap the arguments)");
    }

    // s(eps) = H_alpha(q^eps) - H_alpha(p^eps); we need the least eps with
    // s > 0 stably for all larger sampled eps.
    auto s = [&](double eps) {
        const NoiseLevel nl(eps);
        return entropy::renyi_entropy(classical_noise(q, nl), alpha) -
               entropy::renyi_entropy(classical_noise(p, nl), alpha);
    };

    int last_nonpositive = -1;
    for (int k = 0; k < kVerificationGridPoints; ++k) {
        const double eps = static_cast<double>(k) / kVerificationGridPoints;
        if (!(s(eps) > 0.0)) last_nonpositive = k;
    }
    if (last_nonpositive < 0) {
        return 0.0;
    }
    if (last_nonpositive == kVerificationGridPoints - 1) {
        return std::nullopt;  // no stable flip below 1 on the grid
    }
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

double h2_criterion(const DensityMatrix& rho, const ObservablePair& pair) {
    const JointStat js = joint_stat(rho, pair);
    return collision_power(js.marginal_a) + collision_power(js.marginal_b);
}

double delta_H(const DensityMatrix& rho, const DensityMatrix& sigma,
               const ObservablePair& pair, const NoiseLevel& eps,
               const RenyiOrder& alpha) {
    const double h_rho =
        entropy::renyi_entropy(joint_stat(noisy_state(rho, eps), pair).dist, alpha);
    const double h_sigma =
        entropy::renyi_entropy(joint_stat(noisy_state(sigma, eps), pair).dist, alpha);
    if (std::isinf(h_rho) && std::isinf(h_sigma) && h_rho == h_sigma) {
        throw std::domain_error("delta_H: inf - inf is undecidable at this order");
    }
    return h_rho - h_sigma;
}

}  // namespace muskit::uncertainty
