#include "lattrig/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace lattrig::oracle {

std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::size_t n = points.size();
    if (n <= 1) {
        return points;
    }
    auto cross = [](const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
        return det(a - o, b - o);
    };
    std::vector<LatticePoint> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) { // lower chain
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) {
            --k;
        }
        hull[k++] = points[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) { // upper chain
        while (k >= t && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) {
            --k;
        }
        hull[k++] = points[i];
    }
    hull.resize(k - 1);
    return hull;
}

Sail sail_bruteforce(const RationalAngle& angle) {
    if (angle.kind() != AngleKind::proper) {
        throw GeometryError("sail_bruteforce: proper angle required");
    }
    LatticeVector u = primitive(angle.edge_a - angle.vertex);
    LatticeVector w = primitive(angle.edge_b - angle.vertex);
    Int space = det(u, w);

    // Every sail vertex lies in the triangle (V, V+u, V+w); scan its
    // bounding box and keep cone points on the vertex side of the chord.
    Int min_x = std::min({Int(0), u.dx, w.dx});
    Int max_x = std::max({Int(0), u.dx, w.dx});
    Int min_y = std::min({Int(0), u.dy, w.dy});
    Int max_y = std::max({Int(0), u.dy, w.dy});
    LatticeVector chord = w - u;
    std::vector<LatticePoint> candidates;
    for (Int x = min_x; x <= max_x; ++x) {
        for (Int y = min_y; y <= max_y; ++y) {
            LatticeVector rel(x, y);
            if (rel.is_zero()) {
                continue;
            }
            // Inside the angle: nonnegative coordinates in the (u, w) frame.
            if (sign(det(u, rel)) * sign(space) < 0 || sign(det(rel, w)) * sign(space) < 0) {
                continue;
            }
            // On the vertex side of the chord u..w (or on it).
            Int side = det(chord, rel - u);
            if (side != 0 && sign(side) == sign(det(chord, LatticeVector(0, 0) - u))) {
                candidates.push_back(angle.vertex + rel);
            } else if (side == 0) {
                candidates.push_back(angle.vertex + rel);
            }
        }
    }

    LatticePoint first = angle.vertex + u;
    LatticePoint last = angle.vertex + w;
    std::vector<LatticePoint> chain;

    bool collinear = true;
    for (const LatticePoint& p : candidates) {
        if (det(p - first, last - first) != 0) {
            collinear = false;
            break;
        }
    }
    if (collinear) {
        // Single-edge sail: all candidates sit on the chord.
        std::sort(candidates.begin(), candidates.end(),
                  [&](const LatticePoint& a, const LatticePoint& b) {
                      return dot(a - first, last - first) < dot(b - first, last - first);
                  });
        chain = {candidates.front(), candidates.back()};
    } else {
        std::vector<LatticePoint> hull = convex_hull(candidates);
        std::size_t n = hull.size();
        std::size_t iu = 0, iw = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (hull[i] == first) {
                iu = i;
            }
            if (hull[i] == last) {
                iw = i;
            }
        }
        // The chord u..w is one hull edge; the sail is the cycle walked the
        // other way around, from the edge_a endpoint to the edge_b endpoint.
        bool chord_forward = ((iu + 1) % n == iw); // u -> w is the chord edge
        chain.push_back(hull[iu]);
        for (std::size_t i = (chord_forward ? (iu + n - 1) % n : (iu + 1) % n); true;
             i = (chord_forward ? (i + n - 1) % n : (i + 1) % n)) {
            chain.push_back(hull[i]);
            if (i == iw) {
                break;
            }
        }
    }

    Sail out;
    out.vertices = chain;
    std::vector<Int> lls;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        if (i > 0) {
            lls.push_back(int_sine(RationalAngle(chain[i - 1], chain[i], chain[i + 1])));
        }
        lls.push_back(int_length(chain[i], chain[i + 1]));
    }
    out.lls = IntSeq(std::move(lls));
    return out;
}

namespace {

struct SmallPoint {
    int x;
    int y;
};

long long cross_ll(const SmallPoint& o, const SmallPoint& a, const SmallPoint& b) {
    return static_cast<long long>(a.x - o.x) * (b.y - o.y) -
           static_cast<long long>(a.y - o.y) * (b.x - o.x);
}

// Strict hull of lex-sorted distinct points; counterclockwise.
std::size_t hull_of_sorted(const SmallPoint* pts, std::size_t n, SmallPoint* hull) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross_ll(hull[k - 2], hull[k - 1], pts[i]) <= 0) {
            --k;
        }
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross_ll(hull[k - 2], hull[k - 1], pts[i]) <= 0) {
            --k;
        }
        hull[k++] = pts[i];
    }
    return k - 1;
}

} // namespace

void enumerate_convex_polygons(int bbox, int n,
                               const std::function<void(const BrokenLine&)>& emit) {
    if (bbox < 1 || n < 3) {
        throw GeometryError("enumerate_convex_polygons: bbox >= 1 and n >= 3 required");
    }
    std::vector<SmallPoint> grid;
    for (int x = 0; x <= bbox; ++x) {
        for (int y = 0; y <= bbox; ++y) {
            grid.push_back({x, y}); // lex order by construction
        }
    }
    std::size_t total = grid.size();
    std::vector<std::size_t> idx(n);
    for (int i = 0; i < n; ++i) {
        idx[i] = i;
    }
    std::vector<SmallPoint> subset(n);
    std::vector<SmallPoint> hull(2 * n + 1);

    while (true) {
        for (int i = 0; i < n; ++i) {
            subset[i] = grid[idx[i]];
        }
        int min_x = subset[0].x, min_y = subset[0].y;
        for (int i = 1; i < n; ++i) {
            min_x = std::min(min_x, subset[i].x);
            min_y = std::min(min_y, subset[i].y);
        }
        // Canonical translation representative only.
        if (min_x == 0 && min_y == 0) {
            std::size_t h = hull_of_sorted(subset.data(), n, hull.data());
            if (h == static_cast<std::size_t>(n)) {
                // Reverse the standard-CCW hull into the positive-angle listing;
                // anchor the listing at the lexicographically smallest point,
                // which is hull[0] for a lex-sorted monotone chain.
                BrokenLine poly;
                poly.closed = true;
                poly.vertices.reserve(n);
                poly.vertices.emplace_back(Int(hull[0].x), Int(hull[0].y));
                for (std::size_t i = h; i-- > 1;) {
                    poly.vertices.emplace_back(Int(hull[i].x), Int(hull[i].y));
                }
                emit(poly);
            }
        }
        // next combination
        int pos = n - 1;
        while (pos >= 0 && idx[pos] == total - static_cast<std::size_t>(n - pos)) {
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++idx[pos];
        for (int i = pos + 1; i < n; ++i) {
            idx[i] = idx[i - 1] + 1;
        }
    }
}

std::vector<BrokenLine> enumerate_convex_polygons(int bbox, int n) {
    std::vector<BrokenLine> out;
    enumerate_convex_polygons(bbox, n, [&](const BrokenLine& p) { out.push_back(p); });
    return out;
}

namespace {

std::string anchored_key(const BrokenLine& poly) {
    AngleCurvatureSequence seq = sequence_of_polygon(poly);
    std::ostringstream out;
    std::size_t n = poly.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        out << seq.angles[i].p << "/" << seq.angles[i].q << ";" << seq.curvatures[i] << ";"
            << int_length(poly.vertices[i], poly.vertices[(i + 1) % n]) << "|";
    }
    return out.str();
}

BrokenLine rotate_listing(const BrokenLine& poly, std::size_t k) {
    BrokenLine out;
    out.closed = true;
    std::size_t n = poly.vertices.size();
    out.vertices.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.vertices.push_back(poly.vertices[(i + k) % n]);
    }
    return out;
}

// Congruent image under a reflection, re-listed with positive angles.
BrokenLine reflected_listing(const BrokenLine& poly) {
    BrokenLine out;
    out.closed = true;
    out.vertices.reserve(poly.vertices.size());
    for (auto it = poly.vertices.rbegin(); it != poly.vertices.rend(); ++it) {
        out.vertices.emplace_back(it->y, it->x);
    }
    return out;
}

} // namespace

bool canonical_congruence(const BrokenLine& p, const BrokenLine& q) {
    validate_convex_polygon(p);
    validate_convex_polygon(q);
    if (p.vertices.size() != q.vertices.size()) {
        return false;
    }
    std::string key = anchored_key(p);
    BrokenLine q_reflected = reflected_listing(q);
    for (std::size_t k = 0; k < q.vertices.size(); ++k) {
        if (anchored_key(rotate_listing(q, k)) == key ||
            anchored_key(rotate_listing(q_reflected, k)) == key) {
            return true;
        }
    }
    return false;
}

bool ordered_triangle_congruent(const std::array<LatticePoint, 3>& t1,
                                const std::array<LatticePoint, 3>& t2) {
    LatticeVector u1 = t1[1] - t1[0], v1 = t1[2] - t1[0];
    LatticeVector u2 = t2[1] - t2[0], v2 = t2[2] - t2[0];
    Int d1 = det(u1, v1);
    Int d2 = det(u2, v2);
    if (d1 == 0 || d2 == 0) {
        throw GeometryError("ordered_triangle_congruent: degenerate triangle");
    }
    if (abs(d1) != abs(d2)) {
        return false;
    }
    // Solve M [u1 v1] = [u2 v2]; M = [u2 v2] adj([u1 v1]) / d1 must be
    // integral with det = d2/d1 = +-1.
    Int m[4] = {
        u2.dx * v1.dy - v2.dx * u1.dy, // a * d1
        v2.dx * u1.dx - u2.dx * v1.dx, // b * d1
        u2.dy * v1.dy - v2.dy * u1.dy, // c * d1
        v2.dy * u1.dx - u2.dy * v1.dx, // d * d1
    };
    for (const Int& e : m) {
        if (e % d1 != 0) {
            return false;
        }
    }
    return true;
}

std::string ordered_triangle_key(const std::array<LatticePoint, 3>& t) {
    std::array<LatticePoint, 3> c = t;
    Int d = det(c[1] - c[0], c[2] - c[0]);
    if (d == 0) {
        throw GeometryError("ordered_triangle_key: degenerate triangle");
    }
    if (d > 0) {
        // Reflect (order preserved) so the closed walk has positively
        // oriented angles.
        for (LatticePoint& p : c) {
            p = LatticePoint(p.y, p.x);
        }
    }
    BrokenLine poly;
    poly.closed = true;
    poly.vertices.assign(c.begin(), c.end());
    return anchored_key(poly);
}

} // namespace lattrig::oracle
