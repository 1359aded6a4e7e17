// Test-only oracles: independent routes to quantities the library computes,
// used to derive expected values without touching the implementation path
// under test.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "muskit/entropy.hpp"
#include "muskit/order.hpp"
#include "muskit/quantum.hpp"

namespace oracles {

using muskit::entropy::ProbDist;
using muskit::quantum::Complex;
using muskit::quantum::ComplexMatrix;
using muskit::quantum::ComplexVector;

// ---------------------------- random generators -----------------------------

inline ProbDist random_dist(std::mt19937_64& gen, std::size_t n, bool full_support = true) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> v(n);
    double s = 0.0;
    for (double& x : v) {
        x = -std::log(u(gen) + 1e-300);
        if (!full_support && u(gen) < 0.2) x = 0.0;
        s += x;
    }
    if (s <= 0.0) return ProbDist::uniform(n);
    for (double& x : v) x /= s;
    return ProbDist(std::move(v));
}

inline muskit::quantum::DensityMatrix random_density(std::mt19937_64& gen, int d) {
    std::normal_distribution<double> n01(0.0, 1.0);
    ComplexMatrix g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = Complex(n01(gen), n01(gen));
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    rho = 0.5 * (rho + rho.adjoint().eval());
    return muskit::quantum::DensityMatrix(rho);
}

inline muskit::quantum::PureState random_pure(std::mt19937_64& gen, int d) {
    std::normal_distribution<double> n01(0.0, 1.0);
    ComplexVector v(d);
    for (int i = 0; i < d; ++i) v[i] = Complex(n01(gen), n01(gen));
    v.normalize();
    return muskit::quantum::PureState(v);
}

// Random bistochastic mix of permutations applied to p; the result is
// majorized by p by construction.
inline ProbDist random_bistochastic_image(std::mt19937_64& gen, const ProbDist& p) {
    const std::size_t n = p.size();
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> out(n, 0.0);
    std::vector<std::size_t> perm(n);
    double wsum = 0.0;
    std::vector<double> weights;
    const int terms = 3;
    std::vector<std::vector<std::size_t>> perms;
    for (int t = 0; t < terms; ++t) {
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), gen);
        perms.push_back(perm);
        weights.push_back(u(gen) + 1e-3);
        wsum += weights.back();
    }
    for (int t = 0; t < terms; ++t) {
        for (std::size_t i = 0; i < n; ++i) {
            out[i] += weights[static_cast<std::size_t>(t)] / wsum *
                      p[perms[static_cast<std::size_t>(t)][i]];
        }
    }
    return ProbDist(std::move(out));
}

// ------------------------- brute-force catalyst search -----------------------

// Searches catalysts of dimension 2 and 3 on a simplex grid of the given
// resolution; returns the first r with p (x) r majorizing q (x) r.
inline std::optional<ProbDist> find_catalyst(const ProbDist& p, const ProbDist& q,
                                             double resolution = 0.02) {
    using muskit::order::majorizes;
    using muskit::order::tensor;
    const int steps = static_cast<int>(std::round(1.0 / resolution));
    for (int a = steps / 2; a <= steps; ++a) {
        const double ra = static_cast<double>(a) / steps;
        ProbDist r({ra, 1.0 - ra});
        if (majorizes(tensor(p, r), tensor(q, r))) return r;
    }
    for (int a = 0; a <= steps; ++a) {
        for (int b = 0; a + b <= steps; ++b) {
            const double ra = static_cast<double>(a) / steps;
            const double rb = static_cast<double>(b) / steps;
            const double rc = 1.0 - ra - rb;
            if (ra < rb || rb < rc || rc < -1e-12) continue;
            ProbDist r({ra, rb, std::max(0.0, rc)});
            if (majorizes(tensor(p, r), tensor(q, r))) return r;
        }
    }
    return std::nullopt;
}

// --------------------- conditional-gradient h2 maximizer --------------------

// Independent maximizer of sum_i (p^A_i)^2 + sum_j (p^B_j)^2 over pure
// states: the objective is convex in the density matrix, so repeatedly
// jumping to the top eigenvector of the gradient M(psi) = sum_i p^A_i P^A_i
// + sum_j p^B_j P^B_j ascends monotonically to a fixed point.
inline std::pair<ComplexVector, double> h2_frank_wolfe(
    const muskit::quantum::ObservablePair& pair, const ComplexVector& start,
    int max_iters = 2000) {
    const ComplexMatrix& va = pair.a().eigenvectors();
    const ComplexMatrix& vb = pair.b().eigenvectors();
    const int d = pair.dim();
    ComplexVector psi = start.normalized();
    auto value = [&](const ComplexVector& s) {
        double v = 0.0;
        ComplexVector ca = va.adjoint() * s;
        ComplexVector cb = vb.adjoint() * s;
        for (int i = 0; i < d; ++i) {
            v += std::norm(ca[i]) * std::norm(ca[i]);
            v += std::norm(cb[i]) * std::norm(cb[i]);
        }
        return v;
    };
    double last = value(psi);
    for (int it = 0; it < max_iters; ++it) {
        ComplexVector ca = va.adjoint() * psi;
        ComplexVector cb = vb.adjoint() * psi;
        ComplexMatrix m = ComplexMatrix::Zero(d, d);
        for (int i = 0; i < d; ++i) {
            m += std::norm(ca[i]) * (va.col(i) * va.col(i).adjoint());
            m += std::norm(cb[i]) * (vb.col(i) * vb.col(i).adjoint());
        }
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m);
        psi = es.eigenvectors().col(d - 1);
        const double v = value(psi);
        if (v <= last + 1e-15) break;
        last = v;
    }
    return {psi, last};
}

// Best of several starts: the member states plus random ones.
inline std::pair<ComplexVector, double> h2_frank_wolfe_best(
    const muskit::quantum::ObservablePair& pair, std::mt19937_64& gen, int random_starts = 20) {
    const int d = pair.dim();
    ComplexVector best;
    double best_v = -1.0;
    auto consider = [&](const ComplexVector& start) {
        auto [psi, v] = h2_frank_wolfe(pair, start);
        if (v > best_v) {
            best_v = v;
            best = psi;
        }
    };
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const Complex vij = pair.overlap()(i, j);
            const double phi = std::arg(vij);
            ComplexVector s = pair.a().eigenvectors().col(i) +
                              Complex(std::cos(-phi), std::sin(-phi)) * pair.b().eigenvectors().col(j);
            consider(s.normalized());
        }
    }
    std::normal_distribution<double> n01(0.0, 1.0);
    for (int k = 0; k < random_starts; ++k) {
        ComplexVector s(d);
        for (int i = 0; i < d; ++i) s[i] = Complex(n01(gen), n01(gen));
        consider(s.normalized());
    }
    return {best, best_v};
}

}  // namespace oracles
