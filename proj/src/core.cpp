#include "lattrig/core.hpp"

namespace lattrig {

LatticeVector primitive(const LatticeVector& v) {
    if (v.is_zero()) {
        throw GeometryError("primitive: zero vector has no direction");
    }
    Int g = gcd(v.dx, v.dy);
    return {v.dx / g, v.dy / g};
}

Int int_length(const LatticePoint& p, const LatticePoint& q) {
    if (p == q) {
        throw GeometryError("int_length: coincident endpoints");
    }
    return gcd(q.x - p.x, q.y - p.y);
}

UnimodularMap UnimodularMap::compose(const UnimodularMap& other) const {
    UnimodularMap out;
    out.a = a * other.a + b * other.c;
    out.b = a * other.b + b * other.d;
    out.c = c * other.a + d * other.c;
    out.d = c * other.b + d * other.d;
    out.tx = a * other.tx + b * other.ty + tx;
    out.ty = c * other.tx + d * other.ty + ty;
    return out;
}

UnimodularMap UnimodularMap::inverse() const {
    Int dv = det();
    if (dv != 1 && dv != -1) {
        throw GeometryError("UnimodularMap: determinant is not +-1");
    }
    // Adjugate divided by det; with det = +-1 this stays integer.
    UnimodularMap out;
    out.a = d * dv;
    out.b = -b * dv;
    out.c = -c * dv;
    out.d = a * dv;
    out.tx = -(out.a * tx + out.b * ty);
    out.ty = -(out.c * tx + out.d * ty);
    return out;
}

LatticePoint apply_map(const UnimodularMap& m, const LatticePoint& p) {
    return m(p);
}

RationalAngle::RationalAngle(LatticePoint a, LatticePoint v, LatticePoint b)
    : edge_a(std::move(a)), vertex(std::move(v)), edge_b(std::move(b)) {
    if (edge_a == vertex || edge_b == vertex) {
        throw GeometryError("RationalAngle: edge point coincides with the vertex");
    }
}

AngleKind RationalAngle::kind() const {
    LatticeVector u = edge_a - vertex;
    LatticeVector w = edge_b - vertex;
    if (det(u, w) != 0) {
        return AngleKind::proper;
    }
    return primitive(u) == primitive(w) ? AngleKind::zero : AngleKind::straight;
}

Orientation orientation(const RationalAngle& angle) {
    Int d = det(angle.edge_a - angle.vertex, angle.edge_b - angle.vertex);
    if (d > 0) {
        return Orientation::positive;
    }
    if (d < 0) {
        return Orientation::negative;
    }
    return Orientation::none;
}

Int int_sine(const RationalAngle& angle) {
    switch (angle.kind()) {
    case AngleKind::zero:
        throw GeometryError("int_sine: zero angle");
    case AngleKind::straight:
        throw GeometryError("int_sine: straight angle");
    case AngleKind::proper:
        break;
    }
    Int d = det(primitive(angle.edge_a - angle.vertex), primitive(angle.edge_b - angle.vertex));
    return abs(d);
}

Int int_distance(const LatticePoint& p, const LatticePoint& l1, const LatticePoint& l2) {
    if (l1 == l2) {
        throw GeometryError("int_distance: degenerate line");
    }
    return abs(det(primitive(l2 - l1), p - l1));
}

RationalAngle apply_map(const UnimodularMap& m, const RationalAngle& angle) {
    return RationalAngle(m(angle.edge_a), m(angle.vertex), m(angle.edge_b));
}

UnimodularMap map_primitive_to_e1(const LatticeVector& u) {
    // Row 2 = (-uy, ux) annihilates u; row 1 solves Bezout for 1.
    Int s, t;
    Int g = ext_gcd(u.dx, u.dy, s, t);
    if (g != 1) {
        throw GeometryError("map_primitive_to_e1: vector is not primitive");
    }
    return UnimodularMap::linear(s, t, -u.dy, u.dx);
}

} // namespace lattrig
