// thermo.hpp - thermodynamic analogue of the uncertainty orderings: Gibbs
// context, alpha-free energies, eps-thermal states, thermo-majorization, and
// the F2 near-equilibrium ordering.
//
// Units: kT = 1/beta; free energies carry the same units as the energy
// levels. Full-support Gibbs distributions only (finite beta), since the
// Renyi divergences require a strictly positive reference.

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "muskit/entropy.hpp"
#include "muskit/uncertainty.hpp"

namespace muskit::thermo {

using entropy::ProbDist;
using entropy::RenyiOrder;
using uncertainty::NoiseLevel;

// A state diagonal in the energy eigenbasis is just its population vector.
using EnergyDiagonalState = entropy::ProbDist;

// Energy levels, inverse temperature, and the derived Gibbs weights
// gamma_i = exp(-beta E_i)/Z (computed via log-sum-exp).
class ThermoContext {
public:
    ThermoContext(std::vector<double> energies, double beta);

    const std::vector<double>& energies() const { return energies_; }
    double beta() const { return beta_; }
    double kT() const { return 1.0 / beta_; }
    const ProbDist& gibbs() const { return gibbs_; }
    double log_z() const { return log_z_; }
    std::size_t size() const { return energies_.size(); }

private:
    std::vector<double> energies_;
    double beta_;
    double log_z_;
    ProbDist gibbs_;
};

// Context of the joint system: energies add, the partition function
// multiplies, the Gibbs state is the product (row-major index i*m + j).
ThermoContext product_context(const ThermoContext& lhs, const ThermoContext& rhs);

// F_alpha(p) = -kT ln Z + kT S_alpha(p || gibbs), extended real.
double free_energy(const EnergyDiagonalState& p, const ThermoContext& ctx,
                   const RenyiOrder& alpha);

// eps * gibbs + (1-eps) * p, the elementary-thermalisation family.
EnergyDiagonalState epsilon_thermal(const EnergyDiagonalState& p, const ThermoContext& ctx,
                                    const NoiseLevel& eps);

// Thermo-majorization: p's Lorenz curve relative to the Gibbs weights
// (indices ordered by p_i/gamma_i descending, cumulative (gamma, p) points)
// lies on or above q's at the union of both curves' breakpoints,
// tolerance 1e-12.
bool thermo_majorizes(const EnergyDiagonalState& p, const EnergyDiagonalState& q,
                      const ThermoContext& ctx);

// Least eps such that F_alpha(p^eps) > F_alpha(q^eps) holds from eps onward
// (grid-verified, bisection to 1e-9), the direction dictated by the F2
// ordering. Requires F2(p) > F2(q) with margin 1e-10 and finite alpha.
std::optional<double> f2_ordering_threshold(const EnergyDiagonalState& p,
                                            const EnergyDiagonalState& q,
                                            const ThermoContext& ctx,
                                            const RenyiOrder& alpha);

// Earliest time at which the F1 ordering of two states thermalising along
// the schedule eps(t) reverses and stays reversed for all later sampled
// times; refined by bisection between the bracketing samples. The schedule
// must be monotone increasing on [0, t_max]. Requires F2(p0) > F2(q0) and
// F1(p0) < F1(q0). Returns nullopt when the reversal needs more noise than
// the schedule reaches.
std::optional<double> f1_reversal_time(const EnergyDiagonalState& p0,
                                       const EnergyDiagonalState& q0,
                                       const ThermoContext& ctx,
                                       const std::function<double(double)>& schedule,
                                       double t_max, int n_samples = 1000);

}  // namespace muskit::thermo
