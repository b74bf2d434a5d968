#pragma once

#include "lattrig/contfrac.hpp"
#include "lattrig/core.hpp"
#include "lattrig/sails.hpp"

#include <cstddef>
#include <vector>

namespace lattrig {

/// A broken line on lattice points; closed lines are polygons with the
/// listed points cyclically adjacent (the last edge returns to the first
/// listed point).
///
/// Convention for closed lines: the listed points are (A_0, ..., A_{n-1})
/// with indices mod n, the traversal oriented so that every angle
/// (prev, vertex, next) is positively oriented, and the derived
/// angle-curvature sequence anchored at A_1 (the second listed point).
struct BrokenLine {
    std::vector<LatticePoint> vertices;
    bool closed = false;
};

/// Alternating angle classes and chord curvatures: open form carries
/// curvatures k_1..k_{n-1}, the cyclic form k_1..k_n with k_i attached to
/// the edge leaving the i-th angle's vertex.
struct AngleCurvatureSequence {
    std::vector<NormalizedAngle> angles;
    std::vector<Int> curvatures;
    bool cyclic = false;

    std::size_t size() const { return angles.size(); }

    void validate() const;

    /// Cyclic rotation moving the (k+1)-th angle to the front.
    AngleCurvatureSequence rotated(std::size_t k) const;

    /// Anchored comparison: same angle classes and curvatures in order.
    bool same_sequence(const AngleCurvatureSequence& other) const;

    /// Cyclic sequences compare equal under rotation when unanchored.
    bool equivalent_cyclic(const AngleCurvatureSequence& other) const;
};

/// Broken line winding strictly counterclockwise about its center:
/// det(center->v_i, center->v_{i+1}) > 0 for all consecutive vertices.
struct VortexBrokenLine {
    std::vector<LatticePoint> vertices;
    LatticePoint center;

    VortexBrokenLine(std::vector<LatticePoint> verts, LatticePoint c = LatticePoint(0, 0));
};

/// Sails of the consecutive angles of a polygon translated to the origin
/// (centrally reflected for even-indexed angles) and concatenated, then
/// normalized so the line starts at (1,0),(1,a_0). Edge vertices mark the
/// sail junctions; lls carries the full cyclic LLS sequence including the
/// closing curvature entry.
struct SailDiagram {
    VortexBrokenLine line;
    std::vector<std::size_t> edge_vertex_indices;
    IntSeq lls;
};

/// Chord curvature of a locally convex 4-vertex walk ABCD:
/// il(BC) - sgn<BC, B'C'> * il(B'C') - 2, where B' and C' are the lattice
/// points adjacent (along the sails of the flanking angles) to the sail
/// endpoints on segment BC; il(BC) - 2 when B' = C'.
Int chord_curvature(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
                    const LatticePoint& d);

/// Same quantity through the local sail-diagram determinant
/// det(B B^-, B B^+); kept as an independent route for cross-checking.
Int chord_curvature_det(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
                        const LatticePoint& d);

/// Angle-curvature sequence of a convex polygon listed (A_0..A_{n-1}):
/// alpha_i is the angle at A_i (i = 1..n, indices mod n) and
/// k_i = aee(A_{i-1} A_i A_{i+1} A_{i+2}).
AngleCurvatureSequence sequence_of_polygon(const BrokenLine& polygon);

/// Open variant: angles at the interior vertices of an open locally
/// convex line, curvatures at the interior edges.
AngleCurvatureSequence sequence_of_broken_line(const BrokenLine& line);

/// lls(S_j^k) = lls(alpha_j) o (k_j) o ... o lls(alpha_k), 1-based.
IntSeq lls_of_acs(const AngleCurvatureSequence& s, std::size_t j, std::size_t k);

SailDiagram sail_diagram(const BrokenLine& polygon);

/// LLS sequence of a vortex broken line: even entries det(OA_k, OA_{k+1}),
/// odd entries det(A_{k-1}-A_k, A_{k+1}-A_k) divided by the two adjacent
/// even entries (exact for unit-distance lines; rejected otherwise).
IntSeq lls_of_vortex(const VortexBrokenLine& v);

/// Zeros removed, adjacent opposite-sign pairs counted.
std::size_t sign_changes(const IntSeq& s);

/// The n values K(lls(S_1^j)) for j = 1..n.
IntSeq prefix_continuants(const AngleCurvatureSequence& s);

/// Half-turns 2*omega of a vortex line whose endpoints lie on the x-axis
/// through the center, counted exactly from the y-sign changes of the full
/// lattice refinement.
std::size_t winding_half_turns(const VortexBrokenLine& v);

/// All lattice points along the chain, each edge subdivided at its
/// interior lattice points.
std::vector<LatticePoint> lattice_refinement(const std::vector<LatticePoint>& chain);

/// Validates the positively-oriented convex polygon contract used by
/// sequence_of_polygon and sail_diagram; throws GeometryError otherwise.
void validate_convex_polygon(const BrokenLine& polygon);

} // namespace lattrig
