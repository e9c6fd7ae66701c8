#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "ctopt/channel.hpp"

namespace ctopt {

// Closed-form coefficient tables for the interior stationarity system of
// R(theta, phi) in the general case a0 a1 a2 a3 a4 sin(mu) != 0.  The working
// variable is x = a0 cot(theta).
struct DerivedCoefficients {
    double g1 = 0, g2 = 0, g3 = 0;
    double b1 = 0, b2 = 0, b3 = 0, b4 = 0, b5 = 0;
    double d1 = 0, d2 = 0, d3 = 0, d4 = 0, d5 = 0;
    double d6 = 0, d7 = 0, d8 = 0, d9 = 0, d10 = 0;
    double c1 = 0, c2 = 0, c3 = 0, c4 = 0, c5 = 0, c6 = 0, c7 = 0;

    double b_scale() const;
    double d_scale() const;
    double c_scale() const;
};

// Degree <= 6 polynomial in V = cot(phi); coeffs[k] multiplies V^k.
struct VPolynomial {
    std::array<double, 7> coeffs{};
};

enum class StationaryBranch { k1_nonzero, k1_zero };

struct StationaryCandidate {
    MeasurementBasis basis;
    double r_value = 0.0;
    double eq16 = 0.0;
    double eq17 = 0.0;
    double eq19 = 0.0;
    double grad_norm = 0.0;
    StationaryBranch branch = StationaryBranch::k1_nonzero;
};

// Throws DegenerateChannelError unless every factor of a0 a1 a2 a3 a4 sin(mu)
// exceeds 1e-8.
DerivedCoefficients derived_coefficients(const CanonicalCoefficients& c);

// Quadratic-in-x stationarity condition (cross-derivative combination):
//   2 b1 x^2 + (b2 cos phi + b3 sin phi) x - a0^2 b1 + b4 cos 2phi + b5 sin 2phi.
double eq16_residual(const DerivedCoefficients& dc, const CanonicalCoefficients& c,
                     double x, double phi);

// Cubic-in-x stationarity condition.
double eq17_residual(const DerivedCoefficients& dc, const CanonicalCoefficients& c,
                     double x, double phi);

// Trig polynomials of the linear remainder -x k1(phi) + k2(phi).
std::pair<double, double> k1k2(const DerivedCoefficients& dc, double phi);

// Polynomial in V = cot(phi) obtained by substituting x = k2/k1 into the
// quadratic condition and clearing k1^2 sin^6(phi).
VPolynomial v_polynomial(const DerivedCoefficients& dc, const CanonicalCoefficients& c);

// Real roots of a real polynomial, ascending coefficients.  Companion-matrix
// eigenvalues of the deflated polynomial, Newton-polished; roots with
// |imag| >= 1e-8 (1+|real|) are discarded.
std::vector<double> real_roots(std::span<const double> coeffs_ascending);

// Interior stationary points of R assembled from both branches of the remainder
// equation, filtered by P > 0, Q > 0, sin(theta) != 0, small eq16/eq17 residuals
// and a small central-difference gradient of R.
std::vector<StationaryCandidate> stationary_candidates(const CanonicalCoefficients& c,
                                                       double accept_tol = 1e-6);

} // namespace ctopt
