#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "muskit/quantum.hpp"
#include "muskit/rng.hpp"

using namespace muskit::quantum;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("type invariants are enforced") {
    Eigen::VectorXcd bad(2);
    bad << 1.0, 1.0;
    CHECK_THROWS_AS((PureState(bad)), std::invalid_argument);

    Eigen::MatrixXcd notherm(2, 2);
    notherm << 0.5, Complex(0.1, 0.2), Complex(0.3, 0.1), 0.5;
    CHECK_THROWS_AS((DensityMatrix(notherm)), std::invalid_argument);

    Eigen::MatrixXcd badtrace = 0.7 * Eigen::MatrixXcd::Identity(2, 2);
    CHECK_THROWS_AS((DensityMatrix(badtrace)), std::invalid_argument);

    Eigen::MatrixXcd negative(2, 2);
    negative << 1.1, 0.0, 0.0, -0.1;
    CHECK_THROWS_AS((DensityMatrix(negative)), std::invalid_argument);

    Eigen::MatrixXcd skew(2, 2);
    skew << 1.0, 1.0, 0.0, 1.0;
    CHECK_THROWS_AS((Observable(skew)), std::invalid_argument);

    CHECK_THROWS_AS((BlochVector(1.1, 0.0, 0.0)), std::invalid_argument);
}

TEST_CASE("pure_to_density") {
    Eigen::VectorXcd e0(2);
    e0 << 1.0, 0.0;
    DensityMatrix rho = pure_to_density(PureState(e0));
    CHECK(rho.matrix()(0, 0).real() == doctest::Approx(1.0));
    CHECK(rho.matrix()(1, 1).real() == doctest::Approx(0.0));

    const double s = 1.0 / std::sqrt(2.0);
    Eigen::VectorXcd plus(2);
    plus << s, s;
    rho = pure_to_density(PureState(plus));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(rho.matrix()(i, j).real() == doctest::Approx(0.5));

    Eigen::VectorXcd circ(2);
    circ << Complex(s, 0.0), Complex(0.0, s);
    rho = pure_to_density(PureState(circ));
    CHECK(rho.matrix()(0, 0).real() == doctest::Approx(0.5));
    CHECK(rho.matrix()(0, 1).imag() == doctest::Approx(-0.5));
    CHECK(rho.matrix()(1, 0).imag() == doctest::Approx(0.5));
}

TEST_CASE("bloch round trip and examples") {
    DensityMatrix maximally_mixed = bloch_to_density(BlochVector(0.0, 0.0, 0.0));
    CHECK(maximally_mixed.matrix()(0, 0).real() == doctest::Approx(0.5));
    CHECK(std::abs(maximally_mixed.matrix()(0, 1)) == doctest::Approx(0.0));

    DensityMatrix pole = bloch_to_density(BlochVector(0.0, 0.0, 1.0));
    CHECK(pole.matrix()(0, 0).real() == doctest::Approx(1.0));
    CHECK(pole.matrix()(1, 1).real() == doctest::Approx(0.0));

    DensityMatrix x_half = bloch_to_density(BlochVector(0.5, 0.0, 0.0));
    CHECK(x_half.matrix()(0, 0).real() == doctest::Approx(0.5));
    CHECK(x_half.matrix()(0, 1).real() == doctest::Approx(0.25));

    // eigenvalues (1 +- |r|)/2
    auto ev = bloch_to_density(BlochVector(0.0, 0.3, 0.4)).eigenvalues();
    CHECK(ev[0] == doctest::Approx(0.25));
    CHECK(ev[1] == doctest::Approx(0.75));

    const BlochVector back = density_to_bloch(x_half);
    CHECK(back.r().x() == doctest::Approx(0.5));
    CHECK(back.r().y() == doctest::Approx(0.0));
    CHECK(back.r().z() == doctest::Approx(0.0));
}

TEST_CASE("qubit_pair") {
    const ObservablePair mub = qubit_pair(kPi / 2.0);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(std::abs(mub.overlap()(i, j)) ==
                  doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));

    const ObservablePair p4 = qubit_pair(kPi / 4.0);
    CHECK(p4.overlap().cwiseAbs().maxCoeff() ==
          doctest::Approx(std::cos(kPi / 8.0)).epsilon(1e-12));

    CHECK_THROWS_AS(qubit_pair(0.0), std::invalid_argument);
    CHECK_THROWS_AS(qubit_pair(-0.3), std::invalid_argument);
    CHECK_THROWS_AS(qubit_pair(2.0), std::invalid_argument);
}

TEST_CASE("haar_unitary contracts") {
    // unitarity
    for (int d : {2, 3, 5}) {
        const ComplexMatrix u = haar_unitary(d, 99);
        const ComplexMatrix gram = u.adjoint() * u - ComplexMatrix::Identity(d, d);
        CHECK(gram.cwiseAbs().maxCoeff() <= 1e-10);
    }
    // determinism and collision sanity
    CHECK((haar_unitary(3, 7) - haar_unitary(3, 7)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((haar_unitary(3, 7) - haar_unitary(3, 8)).cwiseAbs().maxCoeff() > 1e-6);
    CHECK_THROWS_AS(haar_unitary(1, 0), std::invalid_argument);

    // first-moment check: <|U_00|^2> = 1/d
    double acc = 0.0;
    const int samples = 10000;
    for (int k = 0; k < samples; ++k) {
        acc += std::norm(haar_unitary(2, muskit::rng::derive(1234, static_cast<std::uint64_t>(k)))(0, 0));
    }
    CHECK(std::abs(acc / samples - 0.5) <= 0.02);
}

TEST_CASE("rotation_pair_qutrit") {
    const ObservablePair id = rotation_pair_qutrit(0.0);
    CHECK((id.overlap() - ComplexMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-12);

    // the (1,1,1) axis permutes the coordinate axes at angle 2*pi/3
    const ObservablePair cyc = rotation_pair_qutrit(2.0 * kPi / 3.0);
    ComplexMatrix perm = ComplexMatrix::Zero(3, 3);
    perm(0, 2) = 1.0;
    perm(1, 0) = 1.0;
    perm(2, 1) = 1.0;
    CHECK((cyc.overlap() - perm).cwiseAbs().maxCoeff() <= 1e-12);

    const ObservablePair rot = rotation_pair_qutrit(kPi / 6.0);
    CHECK(rot.overlap()(0, 0).real() == doctest::Approx(0.91068360252295910).epsilon(1e-14));
    CHECK(rot.overlap()(0, 0).imag() == doctest::Approx(0.0));
}

TEST_CASE("overlap matrices are doubly stochastic in |V|^2") {
    std::mt19937_64 gen(31);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = 2 + trial % 4;
        const ObservablePair pair =
            pair_from_unitary(haar_unitary(d, muskit::rng::derive(77, static_cast<std::uint64_t>(trial))));
        for (int i = 0; i < d; ++i) {
            double row = 0.0, col = 0.0;
            for (int j = 0; j < d; ++j) {
                row += std::norm(pair.overlap()(i, j));
                col += std::norm(pair.overlap()(j, i));
            }
            CHECK(std::abs(row - 1.0) <= 1e-9);
            CHECK(std::abs(col - 1.0) <= 1e-9);
        }
    }
}

TEST_CASE("eigenstate projectors resolve the identity") {
    const ObservablePair pair = pair_from_unitary(haar_unitary(4, 5150));
    ComplexMatrix acc = ComplexMatrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i) {
        acc += pure_to_density(pair.b().eigenstate(i)).matrix();
    }
    CHECK((acc - ComplexMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() <= 1e-9);
}
