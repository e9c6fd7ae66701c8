#include "ctopt/canonical.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include <Eigen/SVD>

namespace ctopt {

namespace {

constexpr double kPi = std::numbers::pi;

double clamp_amplitude(double a) {
    if (a < 0.0) {
        if (a < -1e-12)
            throw InvalidCoefficientsError("canonical amplitude below -1e-12");
        return 0.0;
    }
    return a;
}

// Rows (u00, u01) with det(u00*T0 + u01*T1) = 0, i.e. projective roots of
// A u00^2 + B u00 u01 + C u01^2 with A = det T0, C = det T1 and B the mixed minor.
std::vector<Eigen::RowVector2cd> singular_rows(const Eigen::Matrix2cd& t0,
                                               const Eigen::Matrix2cd& t1) {
    const Complex qa = t0.determinant();
    const Complex qc = t1.determinant();
    const Complex qb = t0(0, 0) * t1(1, 1) + t1(0, 0) * t0(1, 1) - t0(0, 1) * t1(1, 0) -
                       t1(0, 1) * t0(1, 0);
    const double scale = std::max({std::abs(qa), std::abs(qb), std::abs(qc)});

    std::vector<Eigen::RowVector2cd> rows;
    auto push = [&rows](Complex r0, Complex r1) {
        const double n = std::sqrt(std::norm(r0) + std::norm(r1));
        rows.emplace_back(Eigen::RowVector2cd(r0 / n, r1 / n));
    };

    if (scale < 1e-16) {
        // det vanishes identically (e.g. fully product states): any row works.
        push(1.0, 0.0);
        push(0.0, 1.0);
        return rows;
    }
    if (std::abs(qa) >= 1e-14 * scale) {
        // w = u00/u01; pair the subtraction-free root with its cofactor mate.
        const Complex disc = std::sqrt(qb * qb - 4.0 * qa * qc);
        const Complex qbig = (std::abs(-qb + disc) >= std::abs(-qb - disc)) ? (-qb + disc)
                                                                            : (-qb - disc);
        const Complex w1 = qbig / (2.0 * qa);
        push(w1, 1.0);
        if (std::abs(qbig) > 1e-14 * scale)
            push(2.0 * qc / qbig, 1.0);
        else
            push(0.0, 1.0);
    } else if (std::abs(qb) >= 1e-14 * scale) {
        push(-qc / qb, 1.0);
        push(1.0, 0.0); // the projective root at u01 = 0
    } else {
        push(1.0, 0.0); // C u01^2 = 0 (double root)
        push(1.0, 0.0);
    }
    return rows;
}

double arg_or_zero(Complex z, double eps = 1e-13) {
    return std::abs(z) > eps ? std::arg(z) : 0.0;
}

// One full decomposition given the first row of the particle-1 rotation.
CanonicalForm decompose_with_row(const PureState& s, const Eigen::RowVector2cd& row) {
    Eigen::Matrix2cd u1;
    u1 << row(0), row(1), -std::conj(row(1)), std::conj(row(0));

    Eigen::Matrix2cd t0, t1;
    t0 << s.amplitude(0), s.amplitude(1), s.amplitude(2), s.amplitude(3);
    t1 << s.amplitude(4), s.amplitude(5), s.amplitude(6), s.amplitude(7);
    Eigen::Matrix2cd top = u1(0, 0) * t0 + u1(0, 1) * t1;    // singular by construction
    Eigen::Matrix2cd bottom = u1(1, 0) * t0 + u1(1, 1) * t1;

    // Rotate particles 2 and 3 so the top slice becomes diag(a0, ~0).  When the
    // top slice vanishes (biseparable 1|23) diagonalize the bottom slice instead,
    // which lands the state on the a1/a4 axis.
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(top, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.singularValues()(0) < 1e-13)
        svd.compute(bottom, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::Matrix2cd v2 = svd.matrixU().adjoint();     // on particle 2
    const Eigen::Matrix2cd v3t = svd.matrixV();               // v3 = V^T, applied as T -> v2 T v3^T
    top = v2 * top * v3t;
    bottom = v2 * bottom * v3t;

    const Complex a0c = top(0, 0);
    const Complex w = bottom(0, 0), x = bottom(0, 1), y = bottom(1, 0), z = bottom(1, 1);

    // Diagonal phases making a0, a2, a3, a4 real nonnegative.  mu is the phase
    // invariant arg(w) + arg(z) - arg(x) - arg(y); it is only identifiable when
    // all four bottom entries are nonzero, otherwise it is rotated to 0.
    constexpr double eps = 1e-13;
    double mu;
    double g1;
    if (std::min({std::abs(w), std::abs(x), std::abs(y), std::abs(z)}) > eps) {
        mu = std::arg(w) + std::arg(z) - std::arg(x) - std::arg(y);
        mu -= 2.0 * kPi * std::floor(mu / (2.0 * kPi));
        g1 = mu - std::arg(w);
    } else {
        mu = 0.0;
        if (std::abs(w) > eps)
            g1 = -std::arg(w);
        else
            g1 = arg_or_zero(z) - arg_or_zero(x) - arg_or_zero(y);
    }
    const double g2 = -arg_or_zero(y) - g1;
    const double g3 = -arg_or_zero(x) - g1;
    const double chi = -arg_or_zero(a0c);

    const Complex i1{0.0, 1.0};
    Eigen::Matrix2cd p1, p2, p3;
    p1 << std::exp(i1 * chi), 0.0, 0.0, std::exp(i1 * (g1 + chi));
    p2 << 1.0, 0.0, 0.0, std::exp(i1 * g2);
    p3 << 1.0, 0.0, 0.0, std::exp(i1 * g3);

    const Eigen::Matrix2cd n1 = p1 * u1;
    const Eigen::Matrix2cd n2 = p2 * v2;
    const Eigen::Matrix2cd n3 = p3 * v3t.transpose();

    CanonicalForm form;
    form.coeffs = CanonicalCoefficients::checked(std::abs(a0c), std::abs(w), std::abs(x),
                                                 std::abs(y), std::abs(z), mu);
    form.u1 = LocalUnitary(n1.adjoint());
    form.u2 = LocalUnitary(n2.adjoint());
    form.u3 = LocalUnitary(n3.adjoint());
    form.global_phase = Complex{1.0, 0.0};
    return form;
}

} // namespace

CanonicalCoefficients CanonicalCoefficients::checked(double a0, double a1, double a2,
                                                     double a3, double a4, double mu) {
    CanonicalCoefficients c;
    c.a0 = clamp_amplitude(a0);
    c.a1 = clamp_amplitude(a1);
    c.a2 = clamp_amplitude(a2);
    c.a3 = clamp_amplitude(a3);
    c.a4 = clamp_amplitude(a4);
    if (!(mu >= -1e-12 && mu <= kPi + 1e-12))
        throw InvalidCoefficientsError("mu outside [0, pi]");
    c.mu = std::clamp(mu, 0.0, kPi);
    if (std::abs(c.norm_squared() - 1.0) > 1e-8)
        throw InvalidCoefficientsError("canonical coefficients are not normalized");
    return c;
}

PureState canonical_state(const CanonicalCoefficients& c) {
    if (std::abs(c.norm_squared() - 1.0) > 1e-8)
        throw InvalidCoefficientsError("canonical coefficients are not normalized");
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(8);
    v(0) = c.a0;
    v(4) = c.a1 * std::exp(Complex{0.0, c.mu});
    v(5) = c.a2;
    v(6) = c.a3;
    v(7) = c.a4;
    return normalize(v);
}

std::vector<CanonicalForm> canonicalize_candidates(const PureState& s) {
    if (s.qubit_count() != 3)
        throw DimensionMismatchError("canonicalize expects a 3-qubit state");
    Eigen::Matrix2cd t0, t1;
    t0 << s.amplitude(0), s.amplitude(1), s.amplitude(2), s.amplitude(3);
    t1 << s.amplitude(4), s.amplitude(5), s.amplitude(6), s.amplitude(7);

    std::vector<CanonicalForm> forms;
    for (const auto& row : singular_rows(t0, t1)) {
        // The phase bookkeeping lands mu anywhere in [0, 2pi); a root whose mu
        // falls in (pi, 2pi) is not a valid representative and is dropped (for
        // generic states exactly one of the two roots survives).
        try {
            forms.push_back(decompose_with_row(s, row));
        } catch (const InvalidCoefficientsError&) {
        }
    }
    return forms;
}

CanonicalForm canonicalize(const PureState& s) {
    auto forms = canonicalize_candidates(s);
    if (forms.empty())
        throw InternalInconsistencyError("no canonical representative with mu in [0, pi]");
    // Deterministic representative: larger a0, then smaller mu, then a2 >= a3.
    auto better = [](const CanonicalForm& lhs, const CanonicalForm& rhs) {
        if (std::abs(lhs.coeffs.a0 - rhs.coeffs.a0) > 1e-12)
            return lhs.coeffs.a0 > rhs.coeffs.a0;
        if (std::abs(lhs.coeffs.mu - rhs.coeffs.mu) > 1e-12)
            return lhs.coeffs.mu < rhs.coeffs.mu;
        return lhs.coeffs.a2 >= lhs.coeffs.a3 && rhs.coeffs.a2 < rhs.coeffs.a3;
    };
    const CanonicalForm* best = &forms.front();
    for (const auto& f : forms)
        if (better(f, *best))
            best = &f;
    return *best;
}

PureState reconstruct(const CanonicalForm& f) {
    PureState base = canonical_state(f.coeffs);
    PureState rotated = apply_local_unitaries3(base, f.u1, f.u2, f.u3);
    return PureState(f.global_phase * rotated.amplitudes());
}

} // namespace ctopt
