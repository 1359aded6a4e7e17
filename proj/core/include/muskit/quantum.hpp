// quantum.hpp - complex linear-algebra substrate: states, observables,
// Haar-random unitaries, Bloch parametrization for qubits.
//
// All values are immutable after construction and all operations are pure,
// so everything here is safe to use from concurrent tasks. Random sampling
// takes an explicit seed; generator state is never shared.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

namespace muskit::quantum {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Complex = std::complex<double>;

// Absolute tolerance for structural invariants (unitarity, trace, hermiticity).
inline constexpr double kStructuralTol = 1e-10;
// Absolute tolerance for derived sums (completeness, row stochasticity).
inline constexpr double kDerivedTol = 1e-9;

// Normalized pure state |psi> of dimension d.
class PureState {
public:
    explicit PureState(ComplexVector amplitudes);

    const ComplexVector& amplitudes() const { return amps_; }
    int dim() const { return static_cast<int>(amps_.size()); }

private:
    ComplexVector amps_;
};

// d x d density matrix: Hermitian, unit trace, positive semidefinite
// (smallest eigenvalue >= -1e-10).
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix matrix);

    const ComplexMatrix& matrix() const { return mat_; }
    int dim() const { return static_cast<int>(mat_.rows()); }

    // Eigenvalues in ascending order, tiny negatives clamped to zero.
    Eigen::VectorXd eigenvalues() const;

private:
    ComplexMatrix mat_;
};

// Observable represented by its orthonormal eigenbasis only; eigenvalues
// carry no information for outcome statistics and are not stored.
class Observable {
public:
    explicit Observable(ComplexMatrix eigenvectors);

    const ComplexMatrix& eigenvectors() const { return vecs_; }
    int dim() const { return static_cast<int>(vecs_.rows()); }

    PureState eigenstate(int i) const;

private:
    ComplexMatrix vecs_;
};

// Pair of observables with the overlap matrix V_ij = <a_i|b_j> cached.
class ObservablePair {
public:
    ObservablePair(Observable a, Observable b);

    const Observable& a() const { return a_; }
    const Observable& b() const { return b_; }
    const ComplexMatrix& overlap() const { return overlap_; }
    int dim() const { return a_.dim(); }

private:
    Observable a_;
    Observable b_;
    ComplexMatrix overlap_;
};

// Qubit Bloch vector, |r| <= 1.
class BlochVector {
public:
    explicit BlochVector(Eigen::Vector3d r);
    BlochVector(double x, double y, double z) : BlochVector(Eigen::Vector3d(x, y, z)) {}

    const Eigen::Vector3d& r() const { return r_; }
    double norm() const { return r_.norm(); }

private:
    Eigen::Vector3d r_;
};

// |psi><psi|
DensityMatrix pure_to_density(const PureState& psi);

// (I + r.sigma)/2; eigenvalues (1 +- |r|)/2
DensityMatrix bloch_to_density(const BlochVector& r);

// Bloch vector of a qubit density matrix (dim-2 input required).
BlochVector density_to_bloch(const DensityMatrix& rho);

// Qubit observables with Bloch axes (0,0,1) and (sin gamma, 0, cos gamma).
// gamma in (0, pi/2]; gamma = pi/2 gives a mutually unbiased pair. Values
// near 0 are rejected since the observables would share eigenstates.
ObservablePair qubit_pair(double gamma);

// Mutually unbiased qubit pair, shorthand for qubit_pair(pi/2).
ObservablePair qubit_mub_pair();

// Haar-distributed random unitary: complex Ginibre matrix, QR, phases of
// diag(R) absorbed into Q. Deterministic for a given seed.
ComplexMatrix haar_unitary(int d, std::uint64_t seed);

// Pair with A the standard basis and B the columns of v (v unitary), so the
// overlap matrix is v itself.
ObservablePair pair_from_unitary(const ComplexMatrix& v);

// Qutrit pair: A the standard basis, B rotated by the real SO(3) rotation
// about the (1,1,1)/sqrt(3) axis (Rodrigues formula) acting as a unitary.
ObservablePair rotation_pair_qutrit(double angle);

}  // namespace muskit::quantum
