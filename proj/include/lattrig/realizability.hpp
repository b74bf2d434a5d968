#pragma once

#include "lattrig/curvature.hpp"

#include <array>
#include <cstddef>

namespace lattrig {

/// One verdict per condition of the realizability criterion for cyclic
/// angle-curvature sequences, with the witnessing values.
struct FeasibilityReport {
    bool closure_ok = false;
    Int closure_value;

    bool curvature_ok = false;
    bool curvature_denominator_zero = false;
    Int curvature_numerator;   // K(lls(S_2^n) o (1))
    Int curvature_denominator; // K(lls(S_2^n))
    Int curvature_expected;    // -floor(numerator / denominator)
    Int curvature_actual;      // k_n as supplied

    bool winding_ok = false;
    std::size_t sign_changes_observed = 0;
    std::size_t sign_changes_required = 0;

    bool feasible = false;
};

/// Decides whether a cyclic angle-curvature sequence is realized by a
/// convex n-gon: K(lls(S_1^n)) = 0, the floor identity for k_n, and n-3
/// sign changes among the prefix continuants. Requires n >= 3.
FeasibilityReport check_feasibility(const AngleCurvatureSequence& s);

/// The closing data (x, beta, y) extending an open sequence
/// (alpha_1, k_1, ..., k_{n-1}, alpha_n) to the cyclic sequence of a
/// locally convex (n+1)-gon.
struct Completion {
    Int x;
    NormalizedAngle beta;
    Int y;
};

/// x = -floor(K(U o (1)) / K(U)) with U = lls(S_1^n); beta from the
/// negated reversal of U; y from V = lls(S_2^n) o (x) o lls(beta).
/// Requires n >= 2; reports degeneracy (K(U) = 0 or K(V) = 0) as an error.
Completion complete_sequence(const AngleCurvatureSequence& open_seq);

/// The cyclic sequence (alpha_1, k_1, ..., alpha_n, x, beta, y).
AngleCurvatureSequence assemble_completed(const AngleCurvatureSequence& open_seq,
                                          const Completion& completion);

using Triangle = std::array<LatticePoint, 3>;

/// Angle-side-curvature-angle rule: ordered triangles are integer
/// congruent iff the angles at B and at A, the integer length of AB, and
/// the chord curvature of the closed walk C-A-B-C all coincide.
bool asca_congruent(const Triangle& t1, const Triangle& t2);

} // namespace lattrig
