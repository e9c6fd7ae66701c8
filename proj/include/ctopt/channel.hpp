#pragma once

#include <optional>
#include <vector>

#include "ctopt/canonical.hpp"

namespace ctopt {

// Supervisor measurement direction: |x> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
// theta in [0, pi], phi in [0, 2pi); out-of-range values are rejected, not wrapped.
struct MeasurementBasis {
    double theta = 0.0;
    double phi = 0.0;

    static MeasurementBasis checked(double theta, double phi);
};

// Everything the supervisor's measurement induces on the 2-3 pair for one basis.
// n1, n2 are the unnormalized concurrence numerators (C_k = n_k / p_k); working
// with them keeps the p_k -> 0 limits finite.
struct ChannelSplit {
    double p1 = 0.0, p2 = 0.0;
    double n1 = 0.0, n2 = 0.0;
    std::optional<double> c1, c2;           // only when the branch probability is resolvable
    double lambda10 = 0.0, lambda11 = 1.0;
    double lambda20 = 0.0, lambda21 = 1.0;
    double bigP = 0.0, bigQ = 0.0;
    double r = 0.0;
    double p_success = 0.0;
    std::optional<PureState> phi1, phi2;    // absent when the branch has probability 0
};

struct Pqr {
    double P = 0.0;
    double Q = 0.0;
    double R = 0.0;
};

struct ChannelClassification {
    bool epr_collapsible = false;
    bool perfect_ct = false;
    bool biseparable_1_23 = false;
    std::vector<MeasurementBasis> p_zero_points;
};

ChannelSplit split(const CanonicalCoefficients& c, const MeasurementBasis& b);

// P, Q, R only; evaluated in a cancellation-free form (each of P and Q is a sum
// of nonnegative terms), so values near zero carry relative precision.
Pqr pqr(const CanonicalCoefficients& c, const MeasurementBasis& b);

// Left side of the concurrence-one condition for the state
// (a e^{i alpha}|00> + a2|01> + a3|10> + a4|11>)/norm:
//   (a^2-a4^2)^2 + 2(a a2 - a3 a4)^2 + 2(a a3 - a2 a4)^2
//   + 8 a a2 a3 a4 (1 + cos alpha) + (a2^2-a3^2)^2.
// Nonnegative; zero iff the (normalized) state is maximally entangled.
double eq11_residual(double a, double alpha, double a2, double a3, double a4);

// Measurement bases with P = 0 (the channel collapses branch 1 to a Bell pair).
// Empty iff a2 != a3 within tol; throws BiseparableChannelError when a0 <= tol.
std::vector<MeasurementBasis> p_zero_points(const CanonicalCoefficients& c, double tol = 1e-9);

ChannelClassification classify(const CanonicalCoefficients& c, double tol = 1e-9);

} // namespace ctopt
