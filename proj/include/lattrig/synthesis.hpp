#pragma once

#include "lattrig/realizability.hpp"

#include <vector>

namespace lattrig {

/// Primitive edge directions of the polygon under construction, in strict
/// rotational order covering one full turn (each consecutive pair spans
/// less than pi).
struct EdgeDirectionFan {
    std::vector<LatticeVector> directions;
};

/// Edge directions read off the sail-diagram edge vertices of a feasible
/// sequence: d_i is the prefix continuant pair of lls(S_1^i), negated for
/// even i to undo the central symmetry of the even-indexed sails.
EdgeDirectionFan directions_from_sequence(const AngleCurvatureSequence& s);

/// Strictly positive integer weights t with sum t_i * d_i = 0: starting
/// from all ones, the residual is folded into the adjacent direction pair
/// whose cone contains it, exactly over rationals, then denominators are
/// cleared and the collective gcd removed.
std::vector<Int> close_fan(const EdgeDirectionFan& fan);

/// Builds a convex polygon realizing a feasible cyclic sequence: vertex
/// A_1 at the origin, first edge along d_1, edges accumulated from the
/// weighted fan. The returned list is (A_0, A_1, ..., A_{n-1}), so
/// sequence_of_polygon reproduces the input anchored at its first angle.
BrokenLine synthesize_polygon(const AngleCurvatureSequence& s);

} // namespace lattrig
