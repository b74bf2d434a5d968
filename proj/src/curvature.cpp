#include "lattrig/curvature.hpp"

#include <algorithm>

namespace lattrig {

void AngleCurvatureSequence::validate() const {
    if (angles.empty()) {
        throw GeometryError("AngleCurvatureSequence: no angles");
    }
    std::size_t want = cyclic ? angles.size() : angles.size() - 1;
    if (curvatures.size() != want) {
        throw GeometryError("AngleCurvatureSequence: angle/curvature counts inconsistent");
    }
}

AngleCurvatureSequence AngleCurvatureSequence::rotated(std::size_t k) const {
    if (!cyclic) {
        throw GeometryError("AngleCurvatureSequence: rotation requires a cyclic sequence");
    }
    validate();
    std::size_t n = angles.size();
    k %= n;
    AngleCurvatureSequence out;
    out.cyclic = true;
    out.angles.reserve(n);
    out.curvatures.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.angles.push_back(angles[(i + k) % n]);
        out.curvatures.push_back(curvatures[(i + k) % n]);
    }
    return out;
}

bool AngleCurvatureSequence::same_sequence(const AngleCurvatureSequence& other) const {
    if (cyclic != other.cyclic || angles.size() != other.angles.size() ||
        curvatures.size() != other.curvatures.size()) {
        return false;
    }
    for (std::size_t i = 0; i < angles.size(); ++i) {
        if (!angles[i].same_class(other.angles[i])) {
            return false;
        }
    }
    return curvatures == other.curvatures;
}

bool AngleCurvatureSequence::equivalent_cyclic(const AngleCurvatureSequence& other) const {
    if (!cyclic || !other.cyclic || angles.size() != other.angles.size()) {
        return false;
    }
    for (std::size_t k = 0; k < angles.size(); ++k) {
        if (other.rotated(k).same_sequence(*this)) {
            return true;
        }
    }
    return false;
}

VortexBrokenLine::VortexBrokenLine(std::vector<LatticePoint> verts, LatticePoint c)
    : vertices(std::move(verts)), center(std::move(c)) {
    if (vertices.size() < 2) {
        throw GeometryError("VortexBrokenLine: needs at least two vertices");
    }
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        if (det(vertices[i] - center, vertices[i + 1] - center) <= 0) {
            throw GeometryError("VortexBrokenLine: vortex condition violated");
        }
    }
}

std::vector<LatticePoint> lattice_refinement(const std::vector<LatticePoint>& chain) {
    std::vector<LatticePoint> out;
    if (chain.empty()) {
        return out;
    }
    out.push_back(chain.front());
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        Int il = int_length(chain[i], chain[i + 1]);
        LatticeVector step = primitive(chain[i + 1] - chain[i]);
        for (Int k = 1; k <= il; ++k) {
            out.push_back(chain[i] + step * k);
        }
    }
    return out;
}

namespace {

// Lattice refinement of the sail of (prev, vertex, next), ordered from the
// prev-side primitive point to the next-side one.
std::vector<LatticePoint> refined_sail(const LatticePoint& prev, const LatticePoint& vertex,
                                       const LatticePoint& next) {
    return lattice_refinement(sail_vertices(RationalAngle(prev, vertex, next)).vertices);
}

void require_locally_convex_quad(const LatticePoint& a, const LatticePoint& b,
                                 const LatticePoint& c, const LatticePoint& d) {
    Orientation ob = orientation(RationalAngle(a, b, c));
    Orientation oc = orientation(RationalAngle(b, c, d));
    if (ob == Orientation::none || oc == Orientation::none) {
        throw GeometryError("chord_curvature: three consecutive points are collinear");
    }
    if (ob != oc) {
        throw GeometryError("chord_curvature: walk is not locally convex");
    }
}

} // namespace

Int chord_curvature(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
                    const LatticePoint& d) {
    require_locally_convex_quad(a, b, c, d);
    // In the frame normalizing (c, b, a) with the b->c ray on the x-axis,
    // the adjacent sail point is always (1,1); pull it back.
    LatticePoint b_adj = normalize_angle(RationalAngle(c, b, a)).map.inverse()(LatticePoint(1, 1));
    LatticePoint c_adj = normalize_angle(RationalAngle(b, c, d)).map.inverse()(LatticePoint(1, 1));
    Int il_bc = int_length(b, c);
    if (b_adj == c_adj) {
        return il_bc - 2;
    }
    Int direction = dot(c - b, c_adj - b_adj);
    if (direction == 0) {
        throw GeometryError("chord_curvature: internal error, B'C' not parallel to BC");
    }
    return il_bc - Int(sign(direction)) * int_length(b_adj, c_adj) - 2;
}

Int chord_curvature_det(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
                        const LatticePoint& d) {
    require_locally_convex_quad(a, b, c, d);
    if (orientation(RationalAngle(a, b, c)) == Orientation::negative) {
        // The diagram determinant needs the vortex orientation; the chord
        // curvature itself is reflection-invariant.
        auto mirror = [](const LatticePoint& p) { return LatticePoint(p.y, p.x); };
        return chord_curvature_det(mirror(a), mirror(b), mirror(c), mirror(d));
    }
    // Local two-sail diagram: sail of (a,b,c) shifted to the origin, sail
    // of (b,c,d) shifted and centrally reflected; the junction is the
    // primitive point on ray b->c.
    std::vector<LatticePoint> s1 = refined_sail(a, b, c);
    std::vector<LatticePoint> s2 = refined_sail(b, c, d);
    LatticePoint junction = LatticePoint(0, 0) + primitive(c - b);
    LatticePoint before = LatticePoint(0, 0) + (s1[s1.size() - 2] - b);
    LatticePoint after = LatticePoint(0, 0) - (s2[1] - c);
    if (!(LatticePoint(0, 0) + (s1.back() - b) == junction) ||
        !(LatticePoint(0, 0) - (s2.front() - c) == junction)) {
        throw GeometryError("chord_curvature_det: sail endpoints do not meet at the junction");
    }
    return det(before - junction, after - junction);
}

void validate_convex_polygon(const BrokenLine& polygon) {
    if (!polygon.closed) {
        throw GeometryError("polygon: open broken line passed where a closed polygon is required");
    }
    std::size_t n = polygon.vertices.size();
    if (n < 3) {
        throw GeometryError("polygon: needs at least three vertices");
    }
    const auto& v = polygon.vertices;
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i] == v[(i + 1) % n]) {
            throw GeometryError("polygon: consecutive vertices coincide");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const LatticePoint& prev = v[(i + n - 1) % n];
        const LatticePoint& cur = v[i];
        const LatticePoint& next = v[(i + 1) % n];
        Int turn = det(prev - cur, next - cur);
        if (turn == 0) {
            throw GeometryError("polygon: three consecutive vertices are collinear");
        }
        if (turn < 0) {
            throw GeometryError(
                "polygon: not locally convex in the expected orientation "
                "(angles must be positively oriented; list the boundary the other way around)");
        }
    }
    // Locally convex everywhere; convex iff the edge directions complete
    // exactly one full turn (two half-plane flips around the cycle).
    auto half = [](const LatticeVector& e) {
        return (e.dy > 0 || (e.dy == 0 && e.dx > 0)) ? 0 : 1;
    };
    std::size_t flips = 0;
    for (std::size_t i = 0; i < n; ++i) {
        LatticeVector e = v[(i + 1) % n] - v[i];
        LatticeVector f = v[(i + 2) % n] - v[(i + 1) % n];
        if (half(e) != half(f)) {
            ++flips;
        }
    }
    if (flips != 2) {
        throw GeometryError("polygon: not convex (boundary winds more than once)");
    }
}

AngleCurvatureSequence sequence_of_polygon(const BrokenLine& polygon) {
    validate_convex_polygon(polygon);
    const auto& v = polygon.vertices;
    std::size_t n = v.size();
    AngleCurvatureSequence out;
    out.cyclic = true;
    out.angles.reserve(n);
    out.curvatures.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        const LatticePoint& prev = v[(i - 1) % n];
        const LatticePoint& cur = v[i % n];
        const LatticePoint& next = v[(i + 1) % n];
        const LatticePoint& next2 = v[(i + 2) % n];
        out.angles.push_back(normalize_angle(RationalAngle(prev, cur, next)));
        out.curvatures.push_back(chord_curvature(prev, cur, next, next2));
    }
    return out;
}

AngleCurvatureSequence sequence_of_broken_line(const BrokenLine& line) {
    if (line.closed) {
        return sequence_of_polygon(line);
    }
    const auto& v = line.vertices;
    if (v.size() < 3) {
        throw GeometryError("broken line: needs at least three vertices for an angle");
    }
    Orientation common = Orientation::none;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        Orientation o = orientation(RationalAngle(v[i - 1], v[i], v[i + 1]));
        if (o == Orientation::none) {
            throw GeometryError("broken line: three consecutive vertices are collinear");
        }
        if (common == Orientation::none) {
            common = o;
        } else if (o != common) {
            throw GeometryError("broken line: not locally convex");
        }
    }
    AngleCurvatureSequence out;
    out.cyclic = false;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        out.angles.push_back(normalize_angle(RationalAngle(v[i - 1], v[i], v[i + 1])));
        if (i + 2 < v.size()) {
            out.curvatures.push_back(chord_curvature(v[i - 1], v[i], v[i + 1], v[i + 2]));
        }
    }
    return out;
}

IntSeq lls_of_acs(const AngleCurvatureSequence& s, std::size_t j, std::size_t k) {
    s.validate();
    if (j < 1 || j > k || k > s.angles.size()) {
        throw GeometryError("lls_of_acs: index range out of bounds");
    }
    IntSeq out = s.angles[j - 1].lls();
    for (std::size_t i = j; i < k; ++i) {
        out = out.appended(s.curvatures[i - 1]).concat(s.angles[i].lls());
    }
    return out;
}

IntSeq lls_of_vortex(const VortexBrokenLine& v) {
    const auto& pts = v.vertices;
    std::size_t edges = pts.size() - 1;
    std::vector<Int> even(edges);
    for (std::size_t k = 0; k < edges; ++k) {
        even[k] = det(pts[k] - v.center, pts[k + 1] - v.center);
    }
    std::vector<Int> out;
    out.reserve(2 * edges - 1);
    for (std::size_t k = 0; k < edges; ++k) {
        if (k > 0) {
            Int num = det(pts[k - 1] - pts[k], pts[k + 1] - pts[k]);
            Int den = even[k - 1] * even[k];
            if (num % den != 0) {
                throw GeometryError("lls_of_vortex: non-integer sine entry "
                                    "(line is not at unit distance from the center)");
            }
            out.push_back(num / den);
        }
        out.push_back(even[k]);
    }
    return IntSeq(std::move(out));
}

std::size_t sign_changes(const IntSeq& s) {
    std::size_t count = 0;
    int last = 0;
    for (const Int& v : s) {
        int cur = sign(v);
        if (cur == 0) {
            continue;
        }
        if (last != 0 && cur != last) {
            ++count;
        }
        last = cur;
    }
    return count;
}

IntSeq prefix_continuants(const AngleCurvatureSequence& s) {
    s.validate();
    std::vector<Int> out;
    out.reserve(s.angles.size());
    for (std::size_t j = 1; j <= s.angles.size(); ++j) {
        out.push_back(continuant(lls_of_acs(s, 1, j)));
    }
    return IntSeq(std::move(out));
}

std::size_t winding_half_turns(const VortexBrokenLine& v) {
    if ((v.vertices.front() - v.center).dy != 0 || (v.vertices.back() - v.center).dy != 0) {
        throw GeometryError("winding_half_turns: endpoints must lie on the axis "
                            "through the center");
    }
    std::vector<Int> ys;
    for (const LatticePoint& p : lattice_refinement(v.vertices)) {
        ys.push_back(p.y - v.center.y);
    }
    return sign_changes(IntSeq(std::move(ys))) + 1;
}

SailDiagram sail_diagram(const BrokenLine& polygon) {
    validate_convex_polygon(polygon);
    const auto& v = polygon.vertices;
    std::size_t n = v.size();

    std::vector<LatticePoint> chain;
    std::vector<std::size_t> marks;
    for (std::size_t i = 1; i <= n; ++i) {
        const LatticePoint& prev = v[(i - 1) % n];
        const LatticePoint& cur = v[i % n];
        const LatticePoint& next = v[(i + 1) % n];
        Sail sail = sail_vertices(RationalAngle(prev, cur, next));
        bool flip = (i % 2 == 0);
        std::vector<LatticePoint> piece;
        piece.reserve(sail.vertices.size());
        for (const LatticePoint& p : sail.vertices) {
            LatticeVector rel = p - cur;
            if (flip) {
                rel = -rel;
            }
            piece.push_back(LatticePoint(0, 0) + rel);
        }
        if (chain.empty()) {
            marks.push_back(0);
            chain = std::move(piece);
        } else {
            if (!(chain.back() == piece.front())) {
                throw GeometryError("sail_diagram: consecutive sails do not meet");
            }
            chain.insert(chain.end(), piece.begin() + 1, piece.end());
        }
        marks.push_back(chain.size() - 1);
    }

    // Normalize so the line starts at (1,0),(1,a0); required for the
    // continuant coordinates of the edge vertices.
    LatticeVector c0 = chain[0] - LatticePoint(0, 0);
    LatticeVector c1 = chain[1] - LatticePoint(0, 0);
    Int a0 = det(c0, c1);
    UnimodularMap norm = map_primitive_to_e1(primitive(c0));
    LatticeVector w = norm(c1);
    Int shift = Int(1) - w.dx;
    if (shift % a0 != 0) {
        throw GeometryError("sail_diagram: normalization shear is not integral");
    }
    norm = UnimodularMap::shear_x(shift / a0).compose(norm);
    for (LatticePoint& p : chain) {
        p = norm(p);
    }

    std::size_t edges = chain.size() - 1;
    LatticePoint closing_next = (n % 2 == 0) ? chain[1] : chain[1].negated();
    Int closing_num = det(chain[edges - 1] - chain[edges], closing_next - chain[edges]);
    VortexBrokenLine line(std::move(chain));
    IntSeq open_lls = lls_of_vortex(line);
    Int last_even = open_lls[open_lls.size() - 1];
    Int first_even = open_lls[0];
    Int closing_den = last_even * first_even;
    if (closing_num % closing_den != 0) {
        throw GeometryError("sail_diagram: closing curvature entry is not integral");
    }
    return SailDiagram{std::move(line), std::move(marks),
                       open_lls.appended(closing_num / closing_den)};
}

} // namespace lattrig
