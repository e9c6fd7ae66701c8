#include "ctopt/qcore.hpp"

#include <cmath>

#include <Eigen/SVD>

namespace ctopt {

namespace {

int qubit_count_for_dim(Eigen::Index d) {
    int n = 0;
    Eigen::Index m = 1;
    while (m < d) {
        m <<= 1;
        ++n;
    }
    if (m != d || d < 2)
        throw DimensionMismatchError("state dimension must be a power of two >= 2");
    return n;
}

} // namespace

PureState::PureState(Eigen::VectorXcd amplitudes) : amps_(std::move(amplitudes)) {
    n_ = qubit_count_for_dim(amps_.size());
    if (!amps_.allFinite())
        throw InvalidCoefficientsError("state amplitudes must be finite");
    const double norm2 = amps_.squaredNorm();
    if (std::abs(norm2 - 1.0) > 1e-12)
        throw InvalidCoefficientsError("state is not normalized");
}

LocalUnitary::LocalUnitary(const Eigen::Matrix2cd& entries) : u_(entries) {
    const Eigen::Matrix2cd d = u_ * u_.adjoint() - Eigen::Matrix2cd::Identity();
    if (d.cwiseAbs().maxCoeff() > 1e-12)
        throw NotUnitaryError("matrix is not unitary");
}

LocalUnitary LocalUnitary::identity() {
    return LocalUnitary(Eigen::Matrix2cd::Identity());
}

PureState normalize(const Eigen::VectorXcd& v) {
    const double norm = v.norm();
    if (norm <= 1e-14)
        throw ZeroVectorError("cannot normalize a (near-)zero vector");
    return PureState(v / norm);
}

SchmidtPair schmidt_two_qubit(const PureState& s) {
    if (s.qubit_count() != 2)
        throw DimensionMismatchError("schmidt_two_qubit expects a 2-qubit state");
    Eigen::Matrix2cd t;
    t << s.amplitude(0), s.amplitude(1), s.amplitude(2), s.amplitude(3);
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const double s0 = svd.singularValues()(0);
    const double s1 = svd.singularValues()(1);
    // state = sum_k s_k (U col k) x (conj(V) col k); basis_b columns are conj(V).
    Eigen::Matrix2cd a = svd.matrixU();
    Eigen::Matrix2cd b = svd.matrixV().conjugate();
    const double sum = s0 * s0 + s1 * s1; // == 1 for normalized input
    SchmidtPair out;
    out.lambda_large = s0 * s0 / sum;
    out.lambda_small = s1 * s1 / sum;
    out.basis_a = LocalUnitary(a);
    out.basis_b = LocalUnitary(b);
    return out;
}

double concurrence_two_qubit(const PureState& s) {
    if (s.qubit_count() != 2)
        throw DimensionMismatchError("concurrence_two_qubit expects a 2-qubit state");
    const Complex det = s.amplitude(0) * s.amplitude(3) - s.amplitude(1) * s.amplitude(2);
    return std::min(1.0, 2.0 * std::abs(det));
}

double fidelity(const PureState& a, const PureState& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatchError("fidelity requires equal dimensions");
    const Complex ip = a.amplitudes().dot(b.amplitudes());
    return std::norm(ip);
}

PureState apply_local_unitary(const PureState& s, int qubit, const LocalUnitary& u) {
    const int n = s.qubit_count();
    if (qubit < 0 || qubit >= n)
        throw IndexOutOfRangeError("qubit index out of range");
    const Eigen::Index dim = s.dim();
    const Eigen::Index stride = dim >> (qubit + 1); // distance between the qubit's |0> and |1> partners
    const Eigen::Matrix2cd& m = u.matrix();
    Eigen::VectorXcd out(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        if ((i / stride) & 1)
            continue;
        const Eigen::Index j = i + stride;
        out(i) = m(0, 0) * s.amplitude(i) + m(0, 1) * s.amplitude(j);
        out(j) = m(1, 0) * s.amplitude(i) + m(1, 1) * s.amplitude(j);
    }
    return PureState(std::move(out));
}

PureState apply_local_unitaries3(const PureState& s, const LocalUnitary& u1,
                                 const LocalUnitary& u2, const LocalUnitary& u3) {
    if (s.qubit_count() != 3)
        throw DimensionMismatchError("apply_local_unitaries3 expects a 3-qubit state");
    return apply_local_unitary(apply_local_unitary(apply_local_unitary(s, 0, u1), 1, u2), 2, u3);
}

} // namespace ctopt
