#pragma once

#include <complex>
#include <Eigen/Dense>

#include "ctopt/errors.hpp"

namespace ctopt {

using Complex = std::complex<double>;

// Multi-qubit pure state. Amplitude index bit k, counted from the most
// significant bit, addresses qubit k (qubit 0 is the paper's particle 1);
// index 0 is |00...0>.
class PureState {
public:
    // Requires a power-of-two dimension and unit norm within 1e-12.
    explicit PureState(Eigen::VectorXcd amplitudes);

    int qubit_count() const { return n_; }
    Eigen::Index dim() const { return amps_.size(); }
    const Eigen::VectorXcd& amplitudes() const { return amps_; }
    Complex amplitude(Eigen::Index i) const { return amps_(i); }

private:
    Eigen::VectorXcd amps_;
    int n_;
};

// Single-qubit unitary; construction checks U U^dag = I entrywise within 1e-12.
class LocalUnitary {
public:
    explicit LocalUnitary(const Eigen::Matrix2cd& entries);

    static LocalUnitary identity();
    const Eigen::Matrix2cd& matrix() const { return u_; }

private:
    Eigen::Matrix2cd u_;
};

// Two-qubit Schmidt data: state = (basis_a x basis_b) (sqrt(lambda_large)|00> +
// sqrt(lambda_small)|11>) up to global phase.  lambda_small <= 1/2 <= lambda_large,
// lambda_small + lambda_large = 1.
struct SchmidtPair {
    double lambda_small = 0.0;
    double lambda_large = 1.0;
    LocalUnitary basis_a = LocalUnitary::identity();
    LocalUnitary basis_b = LocalUnitary::identity();
};

// v / ||v||; throws ZeroVectorError when ||v|| <= 1e-14.
PureState normalize(const Eigen::VectorXcd& v);

SchmidtPair schmidt_two_qubit(const PureState& s);

// C = 2 |t00 t11 - t01 t10| for the 2x2 amplitude matrix t.
double concurrence_two_qubit(const PureState& s);

// |<a|b>|^2; throws DimensionMismatchError.
double fidelity(const PureState& a, const PureState& b);

// Applies u on one qubit (0-based, most significant first).
PureState apply_local_unitary(const PureState& s, int qubit, const LocalUnitary& u);

// Kronecker application of three single-qubit unitaries to a 3-qubit state.
PureState apply_local_unitaries3(const PureState& s, const LocalUnitary& u1,
                                 const LocalUnitary& u2, const LocalUnitary& u3);

} // namespace ctopt
