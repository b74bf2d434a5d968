#include "lattrig/sails.hpp"

namespace lattrig {

NormalizedAngle normalize_angle(const RationalAngle& angle) {
    switch (angle.kind()) {
    case AngleKind::zero:
        throw GeometryError("normalize_angle: zero angle");
    case AngleKind::straight:
        throw GeometryError("normalize_angle: straight angle");
    case AngleKind::proper:
        break;
    }

    LatticeVector u = primitive(angle.edge_a - angle.vertex);
    LatticeVector w = primitive(angle.edge_b - angle.vertex);

    UnimodularMap map = map_primitive_to_e1(u).compose(
        UnimodularMap::translation(LatticePoint(0, 0) - angle.vertex));

    NormalizedAngle out;
    LatticeVector w1 = map(w);
    if (w1.dy < 0) {
        map = UnimodularMap::reflect_y().compose(map);
        w1.dy = -w1.dy;
        out.orientation_flipped = true;
    }

    // Shear x -> x + k*y so the image of w lands on (q, p) with 1 <= q <= p.
    out.p = w1.dy;
    Int q0 = w1.dx % out.p;
    if (q0 <= 0) {
        q0 += out.p;
    }
    Int k = (q0 - w1.dx) / out.p;
    if (k != 0) {
        map = UnimodularMap::shear_x(k).compose(map);
    }
    out.q = q0;
    out.map = map;
    return out;
}

ProjRational itan(const RationalAngle& angle) {
    NormalizedAngle n = normalize_angle(angle);
    return ProjRational(n.p, n.q);
}

IntSeq lls_of_angle(const RationalAngle& angle) {
    NormalizedAngle n = normalize_angle(angle);
    return cf_expand_odd(n.p, n.q);
}

std::vector<LatticePoint> vortex_vertices_from_lls(const IntSeq& lls) {
    if (lls.size() % 2 != 1) {
        throw GeometryError("vortex_vertices_from_lls: LLS sequence must have odd length");
    }
    std::vector<LatticePoint> out;
    out.reserve(lls.size() / 2 + 2);
    out.emplace_back(1, 0);
    for (std::size_t len = 1; len <= lls.size(); len += 2) {
        auto [x, y] = continuant_pair(lls.prefix(len));
        out.emplace_back(std::move(x), std::move(y));
    }
    return out;
}

Sail sail_vertices(const RationalAngle& angle) {
    NormalizedAngle n = normalize_angle(angle);
    Sail sail;
    sail.lls = n.lls();
    UnimodularMap back = n.map.inverse();
    for (const LatticePoint& p : vortex_vertices_from_lls(sail.lls)) {
        sail.vertices.push_back(back(p));
    }
    return sail;
}

RationalAngle iarctan_angle(const Int& p, const Int& q) {
    if (q < 1 || p < q || gcd(p, q) != 1) {
        throw GeometryError("iarctan_angle: requires p >= q >= 1 with gcd(p,q) = 1");
    }
    return RationalAngle(LatticePoint(1, 0), LatticePoint(0, 0), LatticePoint(q, p));
}

NormalizedAngle angle_from_sequence(const IntSeq& s) {
    if (s.size() % 2 != 1) {
        throw GeometryError("angle_from_sequence: sequence must have odd length");
    }
    auto [cx, cy] = continuant_pair(s);
    if (cy == 0) {
        throw GeometryError("angle_from_sequence: degenerate angle, K(sequence) = 0");
    }
    return normalize_angle(
        RationalAngle(LatticePoint(1, 0), LatticePoint(0, 0), LatticePoint(cx, cy)));
}

} // namespace lattrig
