#pragma once

#include "lattrig/curvature.hpp"
#include "lattrig/sails.hpp"

#include <functional>
#include <vector>

namespace lattrig::oracle {

/// Strict convex hull (no collinear vertices) in counterclockwise order
/// by the standard orientation. Collinear input collapses to its two
/// extreme points.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> points);

/// Sail by definition: hull of the lattice points inside the angle minus
/// the vertex, bounded chain extracted, ordered from the edge_a side.
/// The LLS entries are read geometrically (integer lengths and sines).
Sail sail_bruteforce(const RationalAngle& angle);

/// All strictly convex lattice n-gons with vertices in [0,bbox]^2, up to
/// translation (the bounding box of each emitted polygon touches both
/// axes). Listed with positively oriented angles, anchored at the
/// lexicographically smallest vertex. Deterministic order.
void enumerate_convex_polygons(int bbox, int n,
                               const std::function<void(const BrokenLine&)>& emit);

std::vector<BrokenLine> enumerate_convex_polygons(int bbox, int n);

/// Integer congruence of convex polygons, decided by comparing
/// angle-curvature sequences together with edge lengths under cyclic
/// rotation (and under reflection).
bool canonical_congruence(const BrokenLine& p, const BrokenLine& q);

/// Order-preserving congruence of ordered triangles, decided by solving
/// for the affine map directly over the rationals.
bool ordered_triangle_congruent(const std::array<LatticePoint, 3>& t1,
                                const std::array<LatticePoint, 3>& t2);

/// Complete invariant of order-preserving triangle congruence: the
/// anchored (angles, curvatures, lengths) key of the orientation-
/// canonicalized triangle. Equal keys iff ordered_triangle_congruent.
std::string ordered_triangle_key(const std::array<LatticePoint, 3>& t);

} // namespace lattrig::oracle
