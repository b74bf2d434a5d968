#pragma once

#include "lattrig/contfrac.hpp"
#include "lattrig/core.hpp"

#include <vector>

namespace lattrig {

/// Canonical form of a proper rational angle: itan = p/q with
/// gcd(p,q) = 1 and 1 <= q <= p (q = p only for p = q = 1), together with
/// the unimodular map that carries the source angle onto
/// ((1,0), (0,0), (q,p)).
struct NormalizedAngle {
    Int p;
    Int q;
    UnimodularMap map;
    bool orientation_flipped = false;

    ProjRational itan() const { return ProjRational(p, q); }
    IntSeq lls() const { return cf_expand_odd(p, q); }

    /// The canonical representative angle ((1,0), (0,0), (q,p)).
    RationalAngle canonical_angle() const {
        return RationalAngle(LatticePoint(1, 0), LatticePoint(0, 0), LatticePoint(q, p));
    }

    bool same_class(const NormalizedAngle& o) const { return p == o.p && q == o.q; }
};

/// The sail of a proper rational angle: the chain of vertices of the
/// bounded hull boundary, ordered from the edge_a side to the edge_b side,
/// plus its LLS sequence.
struct Sail {
    std::vector<LatticePoint> vertices;
    IntSeq lls;
};

/// Canonicalizes a proper angle: edge_a ray to the positive x-axis, a
/// reflection if needed to put edge_b in the upper half-plane (recorded in
/// orientation_flipped), then the shear fixing 1 <= q <= p.
NormalizedAngle normalize_angle(const RationalAngle& angle);

ProjRational itan(const RationalAngle& angle);

IntSeq lls_of_angle(const RationalAngle& angle);

/// Sail vertices computed from the LLS sequence via continuant coordinates
/// in the canonical frame, mapped back through the normalization map.
Sail sail_vertices(const RationalAngle& angle);

/// The canonical angle ((1,0), (0,0), (q,p)) for coprime p >= q >= 1.
RationalAngle iarctan_angle(const Int& p, const Int& q);

/// The angle ((1,0), O, C) with C = (K(a1..an), K(a0..an)) built from an
/// odd-length integer sequence, normalized. Rejects degenerate C.
NormalizedAngle angle_from_sequence(const IntSeq& s);

/// Vertices of the canonical-frame vortex broken line with the given LLS
/// sequence, starting at (1,0): prefix continuant pairs (the vertex
/// coordinate formula). An LLS of length 2n+1 yields n+2 vertices.
std::vector<LatticePoint> vortex_vertices_from_lls(const IntSeq& lls);

} // namespace lattrig
