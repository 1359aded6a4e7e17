// mus.hpp - minimum-uncertainty-state machinery: the psi_infinity candidate,
// Landau-Pollak quantities, planar qubit sweeps, pure-state optimization of
// the H2 criterion, Haar-ensemble experiments, and the numerical witnesses
// for the no-go results.

#pragma once

#include <cstdint>
#include <vector>

#include "muskit/entropy.hpp"
#include "muskit/quantum.hpp"
#include "muskit/uncertainty.hpp"

namespace muskit::mus {

using entropy::AlphaGrid;
using entropy::ProbDist;
using entropy::RenyiOrder;
using quantum::ObservablePair;
using quantum::PureState;
using uncertainty::NoiseLevel;

// Largest |V_ij| of the overlap matrix, its location (0-based), and the
// phase arg V at the maximizer. Ties within 1e-12 resolve to the lowest
// (i, j) in lexicographic order.
struct MaxOverlap {
    double c = 0.0;
    int i_max = 0;
    int j_max = 0;
    double phi = 0.0;
};

// Rejects pairs sharing an eigenstate (c >= 1 - 1e-10).
MaxOverlap max_overlap(const ObservablePair& pair);

// Every maximizer within 1e-12 of the largest |V_ij|, lexicographic order.
std::vector<MaxOverlap> max_overlap_all(const ObservablePair& pair);

// Normalized |a_i> + e^{-i arg V_ij} |b_j>, defined for any entry (i, j).
PureState member_state(const ObservablePair& pair, int i, int j);

// The min-entropy optimum (|a_iM> + e^{-i phi} |b_jM>) / sqrt(2(1+c)).
PureState psi_infinity(const ObservablePair& pair);

struct PmaxSmax {
    double p_max = 0.0;  // max_{k,l} p^A_k p^B_l
    double s_max = 0.0;  // max_{k,l} (p^A_k + p^B_l)
};

PmaxSmax pmax_smax(const PureState& psi, const ObservablePair& pair);

// -2 ln c, the Maassen-Uffink bound on H1(p^A) + H1(p^B).
double maassen_uffink_bound(const ObservablePair& pair);

// Planar qubit family of Appendix-style sweeps: joint outcome distribution
// (length 4) of the state with Bloch vector (1-eps)(sin theta, 0, cos theta)
// against the axes (0,0,1) and (sin gamma, 0, cos gamma).
ProbDist qubit_planar_joint(double gamma, const NoiseLevel& eps, double theta);

struct MusCurvePoint {
    RenyiOrder alpha = RenyiOrder::shannon();
    double purity = 0.0;  // Bloch radius, 1 - epsilon
    double theta_min = 0.0;
    double entropy_value = 0.0;
};

// theta in [0, gamma] minimizing H_alpha of the planar joint distribution:
// argmin of a 10^4-point grid refined by golden section to 1e-10 in theta.
// Requires gamma in (0, pi/2) and eps < 1.
MusCurvePoint qubit_mus_theta(double gamma, const NoiseLevel& eps, const RenyiOrder& alpha);

// The zeta function of the gamma = pi/4, eps = 1/2 qubit family,
// reparametrized so theta in [0, pi/8] measures the angle from the bisector;
// zeta vanishes exactly where dH_alpha/dtheta does. Finite alpha outside
// {0, 1} only.
double qubit_zeta(double alpha, double theta);

struct OptResult {
    PureState psi_opt;
    double value = 0.0;
};

// Maximizer of h2_criterion over pure states: multi-start Nelder-Mead direct
// search on the 2d-2 real parameters (hyperspherical magnitudes + relative
// phases, global phase fixed), convergence tolerance 1e-12 in value. The
// first starts are seeded at the member states |a_i> + e^{-i phi}|b_j>
// (ordered by |V_ij|), the rest at random states. Deterministic given seed.
OptResult optimize_h2_pure(const ObservablePair& pair, int restarts, std::uint64_t seed);

// Minimizer of H_alpha(p^A (x) p^B) of eps-pseudo-pure states over the pure
// component, same search machinery plus eigenstate seeds.
OptResult minimize_joint_entropy_pure(const ObservablePair& pair, const NoiseLevel& eps,
                                      const RenyiOrder& alpha, int restarts,
                                      std::uint64_t seed);

struct EnsembleSummary {
    int dimension = 0;
    int n_pairs = 0;
    double mean_overlap = 0.0;
    double min_overlap = 0.0;
    std::uint64_t seed = 0;
};

struct EnsembleRun {
    EnsembleSummary summary;
    std::vector<double> overlaps;  // |<psi_opt|psi_inf>| per pair
};

// Haar ensemble: n_pairs random pairs in dimension d (3..8), each optimized
// with `restarts` starts; overlaps |<psi_opt|psi_inf>| aggregated. Pairs are
// processed concurrently with per-index derived seeds; the reduction is
// index-ordered, so the result is deterministic given seed.
EnsembleRun ensemble_overlap_run(int d, int n_pairs, int restarts, std::uint64_t seed);
EnsembleSummary ensemble_overlap(int d, int n_pairs, int restarts, std::uint64_t seed);

struct MubWitness {
    double h1_eigen = 0.0;     // ln d + S(rho^eps), the tight mixed-state bound
    double h1_psi_inf = 0.0;   // strictly larger for eps < 1
};

// Shannon entropies of the joint statistics for the mutually unbiased qubit
// pair: eigenstate pseudo-pure vs psi_infinity pseudo-pure. eps < 1.
MubWitness nogo_witness_mub(const NoiseLevel& eps);

struct HighdWitness {
    double hminf_psi_inf = 0.0;
    double hminf_xi = 0.0;  // equals 2 ln(eps/d)
};

// H_{-inf} of the joint statistics for psi_infinity and for the state
// xi in span{a_1, a_2} orthogonal to b_1. Requires d >= 3, every V_ij
// nonzero (margin 1e-10) and eps in (0,1).
HighdWitness nogo_witness_highd(const ObservablePair& pair, const NoiseLevel& eps);

// Numerical content of the pure-state no-go: the psi_infinity joint has full
// support d^2 while the a_1 eigenstate joint has support <= d, some positive
// grid order prefers the eigenstate, and the min-entropy order prefers
// psi_infinity. Requires no shared eigenstate and all V_ij nonzero.
bool theorem1_witness(const ObservablePair& pair, const AlphaGrid& grid);

struct Fig3Row {
    RenyiOrder alpha = RenyiOrder::shannon();
    double h_candidate = 0.0;  // psi_infinity pseudo-pure
    double h_eigen = 0.0;      // a_1 eigenstate pseudo-pure
    double h_optimal = 0.0;    // per-alpha optimized pseudo-pure
};

// Profile over an alpha grid for the qutrit pair rotated by pi/6 about
// (1,1,1): candidate vs eigenstate vs per-alpha numerically optimized
// eps-noisy states. Each alpha is optimized independently.
std::vector<Fig3Row> fig3_profile(const NoiseLevel& eps, const AlphaGrid& grid,
                                  int restarts, std::uint64_t seed);

}  // namespace muskit::mus
