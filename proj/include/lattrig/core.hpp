#pragma once

#include "lattrig/int.hpp"

#include <string>
#include <utility>

namespace lattrig {

struct LatticeVector {
    Int dx;
    Int dy;

    LatticeVector() : dx(0), dy(0) {}
    LatticeVector(Int x, Int y) : dx(std::move(x)), dy(std::move(y)) {}

    LatticeVector operator+(const LatticeVector& o) const { return {dx + o.dx, dy + o.dy}; }
    LatticeVector operator-(const LatticeVector& o) const { return {dx - o.dx, dy - o.dy}; }
    LatticeVector operator-() const { return {-dx, -dy}; }
    LatticeVector operator*(const Int& k) const { return {dx * k, dy * k}; }
    bool is_zero() const { return dx == 0 && dy == 0; }
    bool operator==(const LatticeVector& o) const = default;
};

struct LatticePoint {
    Int x;
    Int y;

    LatticePoint() : x(0), y(0) {}
    LatticePoint(Int px, Int py) : x(std::move(px)), y(std::move(py)) {}

    LatticePoint operator+(const LatticeVector& v) const { return {x + v.dx, y + v.dy}; }
    LatticePoint operator-(const LatticeVector& v) const { return {x - v.dx, y - v.dy}; }
    LatticeVector operator-(const LatticePoint& o) const { return {x - o.x, y - o.y}; }
    LatticePoint negated() const { return {-x, -y}; }
    bool operator==(const LatticePoint& o) const = default;
    // Lexicographic; used for canonical anchoring.
    bool operator<(const LatticePoint& o) const {
        return x != o.x ? x < o.x : y < o.y;
    }
};

inline Int dot(const LatticeVector& u, const LatticeVector& v) {
    return u.dx * v.dx + u.dy * v.dy;
}

/// u.dx*v.dy - u.dy*v.dx, the oriented integer area of the spanned triangle.
inline Int det(const LatticeVector& u, const LatticeVector& v) {
    return u.dx * v.dy - u.dy * v.dx;
}

/// v / gcd(|dx|,|dy|); rejects the zero vector.
LatticeVector primitive(const LatticeVector& v);

/// Number of lattice segments composing pq: gcd of coordinate differences.
Int int_length(const LatticePoint& p, const LatticePoint& q);

/// Affine lattice-preserving map x |-> M x + t with |det M| = 1.
struct UnimodularMap {
    Int a, b, c, d; // linear part rows (a b; c d)
    Int tx, ty;

    static UnimodularMap identity() { return {1, 0, 0, 1, 0, 0}; }
    static UnimodularMap linear(Int a, Int b, Int c, Int d) {
        return {std::move(a), std::move(b), std::move(c), std::move(d), 0, 0};
    }
    static UnimodularMap translation(const LatticeVector& t) { return {1, 0, 0, 1, t.dx, t.dy}; }
    /// x |-> x + k*y, y |-> y.
    static UnimodularMap shear_x(const Int& k) { return {1, k, 0, 1, 0, 0}; }
    /// Reflection (x, y) |-> (x, -y).
    static UnimodularMap reflect_y() { return {1, 0, 0, -1, 0, 0}; }

    Int det() const { return a * d - b * c; }
    bool valid() const {
        Int dv = det();
        return dv == 1 || dv == -1;
    }

    LatticePoint operator()(const LatticePoint& p) const {
        return {a * p.x + b * p.y + tx, c * p.x + d * p.y + ty};
    }
    /// Linear part only.
    LatticeVector operator()(const LatticeVector& v) const {
        return {a * v.dx + b * v.dy, c * v.dx + d * v.dy};
    }

    /// this after other: (this*other)(p) = this(other(p)).
    UnimodularMap compose(const UnimodularMap& other) const;
    UnimodularMap inverse() const;

    bool operator==(const UnimodularMap& o) const = default;
};

LatticePoint apply_map(const UnimodularMap& m, const LatticePoint& p);

enum class Orientation { positive, negative, none };
enum class AngleKind { proper, zero, straight };

/// An integer angle given by a point on each edge and the vertex. Rational
/// by construction (both edge points are integer and distinct from the
/// vertex).
struct RationalAngle {
    LatticePoint edge_a;
    LatticePoint vertex;
    LatticePoint edge_b;

    RationalAngle(LatticePoint a, LatticePoint v, LatticePoint b);

    AngleKind kind() const;

    bool operator==(const RationalAngle& o) const = default;
};

/// Sign of det(vertex->edge_a, vertex->edge_b); `none` for collinear.
Orientation orientation(const RationalAngle& angle);

/// |det| of the primitive edge vectors; rejects zero and straight angles.
Int int_sine(const RationalAngle& angle);

/// Index of the sublattice spanned by vectors from p to integer points of
/// the line: |det(primitive(l1->l2), l1->p)|. Zero iff p is on the line.
Int int_distance(const LatticePoint& p, const LatticePoint& l1, const LatticePoint& l2);

RationalAngle apply_map(const UnimodularMap& m, const RationalAngle& angle);

/// Some unimodular linear map sending the primitive vector u to (1,0),
/// with determinant +1.
UnimodularMap map_primitive_to_e1(const LatticeVector& u);

} // namespace lattrig
