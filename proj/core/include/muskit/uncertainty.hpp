// uncertainty.hpp - outcome statistics of observable pairs, classical and
// quantum uniform noise, the H2 ordering criterion, and noise thresholds.

#pragma once

#include <optional>

#include "muskit/entropy.hpp"
#include "muskit/quantum.hpp"

namespace muskit::uncertainty {

using entropy::ProbDist;
using entropy::RenyiOrder;
using quantum::DensityMatrix;
using quantum::Observable;
using quantum::ObservablePair;
using quantum::PureState;

// Uniform noise weight epsilon in [0,1]; r = 1 - epsilon is the retained
// signal (Bloch radius for pseudo-pure qubits).
class NoiseLevel {
public:
    explicit NoiseLevel(double epsilon);

    double epsilon() const { return eps_; }
    double r() const { return 1.0 - eps_; }

private:
    double eps_;
};

// Joint outcome statistics of a pair: the flattened product distribution
// p^A (x) p^B together with its factors. The marginal accessors return the
// stored factors, so they reproduce outcome_dist bit-for-bit.
struct JointStat {
    ProbDist dist;        // length d*d, index i*d + j
    ProbDist marginal_a;
    ProbDist marginal_b;
};

// Born-rule outcome distribution p_i = <a_i|rho|a_i>, clamped into [0,1]
// at 1e-12 and renormalized.
ProbDist outcome_dist(const DensityMatrix& rho, const Observable& obs);

JointStat joint_stat(const DensityMatrix& rho, const ObservablePair& pair);

// p^eps = eps * uniform + (1-eps) * p
ProbDist classical_noise(const ProbDist& p, const NoiseLevel& eps);

// rho^eps = eps * I/d + (1-eps) * rho
DensityMatrix noisy_state(const DensityMatrix& rho, const NoiseLevel& eps);

// eps-pseudo-pure state eps * I/d + (1-eps) |psi><psi|
DensityMatrix pseudo_pure(const PureState& psi, const NoiseLevel& eps);

// Least eps such that H_alpha(p^eps) < H_alpha(q^eps) holds from eps onward,
// verified on a 1000-point grid over [0,1) and refined by bisection to 1e-9.
// Requires H2(p) < H2(q) with margin 1e-10 (the H2 order dictates the
// eventual H_alpha order); finite alpha only, since the +-inf orders are
// never flipped by uniform noise. Returns 0 when the ordering already holds
// at eps = 0, and nullopt if no stable flip exists below 1 on the grid.
std::optional<double> flip_threshold(const ProbDist& p, const ProbDist& q,
                                     const RenyiOrder& alpha);

// exp(-H2(p^A)) + exp(-H2(p^B)) = sum_i (p^A_i)^2 + sum_j (p^B_j)^2.
// Governs which of two states is more uncertain under strong uniform noise.
double h2_criterion(const DensityMatrix& rho, const ObservablePair& pair);

// H_alpha(p^A(rho^eps) (x) p^B(rho^eps)) - H_alpha(p^A(sigma^eps) (x) p^B(sigma^eps)).
// Extended-real difference; an inf - inf encounter is rejected as undecidable.
double delta_H(const DensityMatrix& rho, const DensityMatrix& sigma,
               const ObservablePair& pair, const NoiseLevel& eps,
               const RenyiOrder& alpha);

}  // namespace muskit::uncertainty
