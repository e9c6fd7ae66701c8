#include "ctopt/channel.hpp"

#include <cmath>
#include <numbers>

namespace ctopt {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double clamp_pq(double v, const char* what) {
    if (v < 0.0) {
        if (v < -1e-12)
            throw InternalInconsistencyError(std::string(what) + " below -1e-12");
        return 0.0;
    }
    return v;
}

// P = p1^2 (1 - C1^2) rewritten through the concurrence-one residual:
//   P = (m^2 - s^2 a4^2)^2 + 2(m s a2 - s^2 a3 a4)^2 + 2(m s a3 - s^2 a2 a4)^2
//       + 8 s^3 a2 a3 a4 (m + Re(w e^{i phi})) + s^4 (a2^2 - a3^2)^2,
// with w the |00> coefficient of the (unnormalized) branch state and m = |w|.
// Every term is nonnegative, so the value keeps relative accuracy near zero.
double branch_p(double a2, double a3, double a4, double s, Complex w, double re_w_eiphi) {
    const double m = std::abs(w);
    const double t1 = m * m - s * s * a4 * a4;
    const double t2 = m * s * a2 - s * s * a3 * a4;
    const double t3 = m * s * a3 - s * s * a2 * a4;
    const double t4 = 8.0 * s * s * s * a2 * a3 * a4 * std::max(0.0, m + re_w_eiphi);
    const double t5 = a2 * a2 - a3 * a3;
    return t1 * t1 + 2.0 * t2 * t2 + 2.0 * t3 * t3 + t4 + s * s * s * s * t5 * t5;
}

} // namespace

MeasurementBasis MeasurementBasis::checked(double theta, double phi) {
    if (!(theta >= 0.0 && theta <= kPi))
        throw InvalidBasisError("theta outside [0, pi]");
    if (!(phi >= 0.0 && phi < kTwoPi))
        throw InvalidBasisError("phi outside [0, 2pi)");
    return MeasurementBasis{theta, phi};
}

Pqr pqr(const CanonicalCoefficients& c, const MeasurementBasis& b) {
    MeasurementBasis::checked(b.theta, b.phi);
    const double s = std::sin(0.5 * b.theta);
    const double co = std::cos(0.5 * b.theta);
    const Complex e_mu_phi = std::exp(Complex{0.0, c.mu - b.phi});
    const Complex e_phi = std::exp(Complex{0.0, b.phi});

    const Complex w1 = c.a0 * co + c.a1 * e_mu_phi * s;
    const Complex w2 = c.a0 * s - c.a1 * e_mu_phi * co;

    Pqr out;
    out.P = branch_p(c.a2, c.a3, c.a4, s, w1, std::real(w1 * e_phi));
    out.Q = branch_p(c.a2, c.a3, c.a4, co, w2, -std::real(w2 * e_phi));
    out.P = clamp_pq(out.P, "P");
    out.Q = clamp_pq(out.Q, "Q");
    out.R = std::sqrt(out.P) + std::sqrt(out.Q);
    return out;
}

ChannelSplit split(const CanonicalCoefficients& c, const MeasurementBasis& b) {
    const Pqr v = pqr(c, b);
    const double s = std::sin(0.5 * b.theta);
    const double co = std::cos(0.5 * b.theta);
    const double sin_t = std::sin(b.theta);
    const Complex e_mu_phi = std::exp(Complex{0.0, c.mu - b.phi});
    const Complex em_phi = std::exp(Complex{0.0, -b.phi});
    const Complex em_2phi = std::exp(Complex{0.0, -2.0 * b.phi});
    const Complex bq = c.a1 * c.a4 * std::exp(Complex{0.0, c.mu}) - c.a2 * c.a3;

    ChannelSplit out;
    out.p1 = s * s + c.a0 * c.a0 * std::cos(b.theta) +
             c.a0 * c.a1 * std::cos(c.mu - b.phi) * sin_t;
    out.p2 = 1.0 - out.p1;
    out.n1 = std::abs(c.a0 * c.a4 * em_phi * sin_t + 2.0 * bq * em_2phi * s * s);
    out.n2 = std::abs(c.a0 * c.a4 * em_phi * sin_t - 2.0 * bq * em_2phi * co * co);
    out.bigP = v.P;
    out.bigQ = v.Q;
    out.r = v.R;
    out.p_success = 1.0 - v.R;

    constexpr double p_eps = 1e-14;
    constexpr double c_eps = 1e-8;
    if (out.p1 > c_eps)
        out.c1 = std::min(1.0, out.n1 / out.p1);
    if (out.p2 > c_eps)
        out.c2 = std::min(1.0, out.n2 / out.p2);

    // lambda10 = (1 - sqrt(1 - C1^2))/2 with 1 - C1^2 = P/p1^2; the sqrt(P)
    // route keeps the small Schmidt weight accurate when C1 -> 1.
    if (out.p1 > p_eps) {
        out.lambda10 = 0.5 * (1.0 - std::sqrt(v.P) / out.p1);
        out.lambda11 = 1.0 - out.lambda10;
    }
    if (out.p2 > p_eps) {
        out.lambda20 = 0.5 * (1.0 - std::sqrt(v.Q) / out.p2);
        out.lambda21 = 1.0 - out.lambda20;
    }

    const Complex w1 = c.a0 * co + c.a1 * e_mu_phi * s;
    const Complex w2 = c.a0 * s - c.a1 * e_mu_phi * co;
    if (out.p1 > p_eps) {
        Eigen::Vector4cd v1;
        v1 << w1, em_phi * s * c.a2, em_phi * s * c.a3, em_phi * s * c.a4;
        out.phi1 = normalize(v1);
    }
    if (out.p2 > p_eps) {
        Eigen::Vector4cd v2;
        v2 << w2, -em_phi * co * c.a2, -em_phi * co * c.a3, -em_phi * co * c.a4;
        out.phi2 = normalize(v2);
    }
    return out;
}

double eq11_residual(double a, double alpha, double a2, double a3, double a4) {
    const double t1 = a * a - a4 * a4;
    const double t2 = a * a2 - a3 * a4;
    const double t3 = a * a3 - a2 * a4;
    const double t4 = 8.0 * a * a2 * a3 * a4 * (1.0 + std::cos(alpha));
    const double t5 = a2 * a2 - a3 * a3;
    return t1 * t1 + 2.0 * t2 * t2 + 2.0 * t3 * t3 + t4 + t5 * t5;
}

std::vector<MeasurementBasis> p_zero_points(const CanonicalCoefficients& c, double tol) {
    if (c.a0 <= tol)
        throw BiseparableChannelError("a0 = 0: no true tripartite channel");
    if (std::abs(c.a2 - c.a3) > tol)
        return {};

    // C1 = 1 requires a e^{i alpha} = -a4 with a e^{i alpha} = t a0 e^{i phi} + a1 e^{i mu},
    // t = cot(theta/2).  The paper's case split (a1 = 0 / mu = 0 / mu = pi / a1 sin mu != 0)
    // all reduce to t a0 e^{i phi} = -(a4 + a1 e^{i mu}).
    double t;
    double phi;
    const double a0 = c.a0, a1 = c.a1, a4 = c.a4, mu = c.mu;
    const double smu = std::sin(mu);
    if (a1 <= tol) {
        t = a4 / a0;
        phi = kPi;
    } else if (a1 * std::abs(smu) <= tol) {
        if (std::cos(mu) > 0.0) { // mu = 0
            t = (a1 + a4) / a0;
            phi = kPi;
        } else if (a1 > a4) {     // mu = pi, a1 > a4
            t = (a1 - a4) / a0;
            phi = 0.0;
        } else {                  // mu = pi, a1 <= a4
            t = (a4 - a1) / a0;
            phi = kPi;
        }
    } else {
        t = std::sqrt(a1 * a1 + 2.0 * a1 * a4 * std::cos(mu) + a4 * a4) / a0;
        // cot(phi) = cot(mu) + a4/(a1 sin mu), phi in (pi, 2pi)
        phi = kPi + std::atan2(a1 * smu, a4 + a1 * std::cos(mu));
    }
    if (phi >= kTwoPi)
        phi -= kTwoPi;
    const double theta = 2.0 * std::atan2(1.0, t); // t = cot(theta/2), theta in (0, pi]
    return {MeasurementBasis::checked(theta, phi)};
}

ChannelClassification classify(const CanonicalCoefficients& c, double tol) {
    ChannelClassification out;
    out.biseparable_1_23 = c.a0 <= tol;
    out.epr_collapsible = !out.biseparable_1_23 && std::abs(c.a2 - c.a3) <= tol;
    out.perfect_ct = !out.biseparable_1_23 && c.a2 <= tol && c.a3 <= tol &&
                     std::abs(c.a4 - 1.0 / std::numbers::sqrt2) <= tol;
    if (out.epr_collapsible)
        out.p_zero_points = p_zero_points(c, tol);
    return out;
}

} // namespace ctopt
