#include "muskit/quantum.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "muskit/rng.hpp"

namespace muskit::quantum {

namespace {

void require_finite(const ComplexMatrix& m, const char* what) {
    if (!m.allFinite()) {
        throw std::invalid_argument(std::string(what) + ": entries must be finite");
    }
}

}  // namespace

PureState::PureState(ComplexVector amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.size() == 0) {
        throw std::invalid_argument("PureState: empty amplitude vector");
    }
    if (!amps_.allFinite()) {
        throw std::invalid_argument("PureState: entries must be finite");
    }
    const double n2 = amps_.squaredNorm();
    if (std::abs(n2 - 1.0) > kStructuralTol) {
        throw std::invalid_argument("PureState: squared norm deviates from 1 beyond 1e-10");
    }
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix) : mat_(std::move(matrix)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() == 0) {
        throw std::invalid_argument("DensityMatrix: matrix must be square and non-empty");
    }
    require_finite(mat_, "DensityMatrix");
    if ((mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() > kStructuralTol) {
        throw std::invalid_argument("DensityMatrix: not Hermitian within 1e-10");
    }
    if (std::abs(mat_.trace().real() - 1.0) > kStructuralTol ||
        std::abs(mat_.trace().imag()) > kStructuralTol) {
        throw std::invalid_argument("DensityMatrix: trace deviates from 1 beyond 1e-10");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(mat_, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("DensityMatrix: eigenvalue computation failed");
    }
    if (solver.eigenvalues().minCoeff() < -kStructuralTol) {
        throw std::invalid_argument("DensityMatrix: negative eigenvalue beyond -1e-10");
    }
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(mat_, Eigen::EigenvaluesOnly);
    Eigen::VectorXd ev = solver.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev[i] < 0.0) ev[i] = 0.0;
    }
    return ev;
}

Observable::Observable(ComplexMatrix eigenvectors) : vecs_(std::move(eigenvectors)) {
    if (vecs_.rows() != vecs_.cols() || vecs_.rows() == 0) {
        throw std::invalid_argument("Observable: eigenvector matrix must be square");
    }
    require_finite(vecs_, "Observable");
    ComplexMatrix gram = vecs_.adjoint() * vecs_;
    gram -= ComplexMatrix::Identity(vecs_.rows(), vecs_.cols());
    if (gram.cwiseAbs().maxCoeff() > kStructuralTol) {
        throw std::invalid_argument("Observable: columns not orthonormal within 1e-10");
    }
}

PureState Observable::eigenstate(int i) const {
    if (i < 0 || i >= dim()) {
        throw std::invalid_argument("Observable::eigenstate: index out of range");
    }
    return PureState(vecs_.col(i));
}

ObservablePair::ObservablePair(Observable a, Observable b)
    : a_(std::move(a)), b_(std::move(b)) {
    if (a_.dim() != b_.dim()) {
        throw std::invalid_argument("ObservablePair: dimension mismatch");
    }
    overlap_ = a_.eigenvectors().adjoint() * b_.eigenvectors();
    ComplexMatrix gram = overlap_.adjoint() * overlap_;
    gram -= ComplexMatrix::Identity(overlap_.rows(), overlap_.cols());
    if (gram.cwiseAbs().maxCoeff() > kStructuralTol) {
        throw std::invalid_argument("ObservablePair: overlap matrix not unitary within 1e-10");
    }
}

BlochVector::BlochVector(Eigen::Vector3d r) : r_(std::move(r)) {
    if (!r_.allFinite()) {
        throw std::invalid_argument("BlochVector: entries must be finite");
    }
    if (r_.norm() > 1.0 + 1e-12) {
        throw std::invalid_argument("BlochVector: |r| exceeds 1");
    }
}

DensityMatrix pure_to_density(const PureState& psi) {
    const ComplexVector& v = psi.amplitudes();
    return DensityMatrix(v * v.adjoint());
}

DensityMatrix bloch_to_density(const BlochVector& r) {
    const Eigen::Vector3d& v = r.r();
    ComplexMatrix m(2, 2);
    m(0, 0) = Complex(1.0 + v.z(), 0.0);
    m(0, 1) = Complex(v.x(), -v.y());
    m(1, 0) = Complex(v.x(), v.y());
    m(1, 1) = Complex(1.0 - v.z(), 0.0);
    return DensityMatrix(0.5 * m);
}

BlochVector density_to_bloch(const DensityMatrix& rho) {
    if (rho.dim() != 2) {
        throw std::invalid_argument("density_to_bloch: qubit input required");
    }
    const ComplexMatrix& m = rho.matrix();
    const double x = 2.0 * m(1, 0).real();
    const double y = 2.0 * m(1, 0).imag();
    const double z = (m(0, 0) - m(1, 1)).real();
    return BlochVector(x, y, z);
}

ObservablePair qubit_pair(double gamma) {
    constexpr double half_pi = 1.5707963267948966;
    if (!(gamma > 0.0) || gamma > half_pi + 1e-15) {
        throw std::invalid_argument("qubit_pair: gamma must lie in (0, pi/2]");
    }
    ComplexMatrix a = ComplexMatrix::Identity(2, 2);
    const double c = std::cos(gamma / 2.0);
    const double s = std::sin(gamma / 2.0);
    ComplexMatrix b(2, 2);
    b << Complex(c, 0), Complex(-s, 0),
         Complex(s, 0), Complex(c, 0);
    return ObservablePair(Observable(std::move(a)), Observable(std::move(b)));
}

ObservablePair qubit_mub_pair() {
    return qubit_pair(1.5707963267948966);
}

ComplexMatrix haar_unitary(int d, std::uint64_t seed) {
    if (d < 2) {
        throw std::invalid_argument("haar_unitary: dimension must be >= 2");
    }
    auto gen = rng::engine(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix g(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const double re = normal(gen);
            const double im = normal(gen);
            g(i, j) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the gauge: absorb the phases of diag(R) so the distribution is Haar
    // rather than biased by the QR sign convention.
    for (int j = 0; j < d; ++j) {
        Complex rjj = r(j, j);
        const double mag = std::abs(rjj);
        Complex phase = mag > 0.0 ? rjj / mag : Complex(1.0, 0.0);
        q.col(j) *= phase;
    }
    return q;
}

ObservablePair pair_from_unitary(const ComplexMatrix& v) {
    if (v.rows() != v.cols() || v.rows() < 2) {
        throw std::invalid_argument("pair_from_unitary: square matrix of dim >= 2 required");
    }
    Observable a(ComplexMatrix::Identity(v.rows(), v.cols()));
    Observable b(v);
    return ObservablePair(std::move(a), std::move(b));
}

ObservablePair rotation_pair_qutrit(double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
    Eigen::Matrix3d cross;  // [n]_x for n = (1,1,1)/sqrt(3)
    cross << 0, -inv_sqrt3, inv_sqrt3,
             inv_sqrt3, 0, -inv_sqrt3,
             -inv_sqrt3, inv_sqrt3, 0;
    Eigen::Matrix3d outer = Eigen::Matrix3d::Constant(1.0 / 3.0);
    Eigen::Matrix3d rot = c * Eigen::Matrix3d::Identity() + s * cross + (1.0 - c) * outer;
    return pair_from_unitary(rot.cast<Complex>());
}

}  // namespace muskit::quantum
