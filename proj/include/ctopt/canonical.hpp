#pragma once

#include <vector>

#include "ctopt/qcore.hpp"

namespace ctopt {

// Coefficients of the five-term three-qubit normal form
//   a0|000> + a1 e^{i mu}|100> + a2|101> + a3|110> + a4|111>,
// a_i >= 0, mu in [0, pi], sum a_i^2 = 1.
struct CanonicalCoefficients {
    double a0 = 1.0;
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
    double a4 = 0.0;
    double mu = 0.0;

    double norm_squared() const { return a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3 + a4 * a4; }

    // Validates the invariants (clamping tiny negatives to zero); throws
    // InvalidCoefficientsError when the normalization is off by more than 1e-8.
    static CanonicalCoefficients checked(double a0, double a1, double a2, double a3,
                                         double a4, double mu);
};

// Local-unitary change of frame carrying the normal form back to the input state:
// state = global_phase * (u1 x u2 x u3) canonical_state(coeffs).
struct CanonicalForm {
    CanonicalCoefficients coeffs;
    LocalUnitary u1 = LocalUnitary::identity();
    LocalUnitary u2 = LocalUnitary::identity();
    LocalUnitary u3 = LocalUnitary::identity();
    Complex global_phase{1.0, 0.0};
};

PureState canonical_state(const CanonicalCoefficients& c);

CanonicalForm canonicalize(const PureState& s);

// Both decompositions (one per root of the slice-singularity quadratic),
// before the selection convention picks one.  Exposed for diagnostics.
std::vector<CanonicalForm> canonicalize_candidates(const PureState& s);

PureState reconstruct(const CanonicalForm& f);

} // namespace ctopt
