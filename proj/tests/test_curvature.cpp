#include "lattrig/curvature.hpp"

#include "lattrig/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace lattrig;

namespace {

BrokenLine reference_quadrangle() {
    return BrokenLine{{{4, -1}, {0, 0}, {2, 3}, {3, 3}}, true};
}

BrokenLine reference_pentagon() {
    return BrokenLine{{{8, 0}, {0, 0}, {2, 3}, {3, 4}, {5, 3}}, true};
}

std::vector<std::pair<Int, Int>> itans(const AngleCurvatureSequence& s) {
    std::vector<std::pair<Int, Int>> out;
    for (const auto& a : s.angles) {
        out.emplace_back(a.p, a.q);
    }
    return out;
}

} // namespace

TEST_SUITE_BEGIN("curvature");

TEST_CASE("chord curvature of the worked example") {
    CHECK(chord_curvature({0, 2}, {4, 0}, {0, 0}, {2, 3}) == 1);
    CHECK(chord_curvature_det({0, 2}, {4, 0}, {0, 0}, {2, 3}) == 1);
}

TEST_CASE("chord curvature rejects bad walks") {
    CHECK_THROWS_AS(chord_curvature({0, 0}, {1, 0}, {2, 0}, {3, 1}), GeometryError);
    CHECK_THROWS_AS(chord_curvature({0, 1}, {1, 0}, {2, 1}, {3, 0}), GeometryError);
}

TEST_CASE("quadrangle sequence matches the worked computation") {
    AngleCurvatureSequence s = sequence_of_polygon(reference_quadrangle());
    REQUIRE(s.size() == 4);
    CHECK(itans(s) == std::vector<std::pair<Int, Int>>{{14, 11}, {3, 1}, {4, 3}, {15, 4}});
    CHECK(s.curvatures == std::vector<Int>{-1, -2, -1, -1});
    CHECK(s.angles[0].lls() == IntSeq{1, 3, 1, 1, 1});
    CHECK(s.angles[1].lls() == IntSeq{3});
    CHECK(s.angles[2].lls() == IntSeq{1, 2, 1});
    CHECK(s.angles[3].lls() == IntSeq{3, 1, 3});
}

TEST_CASE("pentagon sequence matches the worked computation") {
    AngleCurvatureSequence s = sequence_of_polygon(reference_pentagon());
    REQUIRE(s.size() == 5);
    CHECK(itans(s) ==
          std::vector<std::pair<Int, Int>>{{3, 2}, {1, 1}, {3, 1}, {1, 1}, {1, 1}});
    CHECK(s.curvatures == std::vector<Int>{-2, -4, -2, -3, 0});
}

TEST_CASE("sequence_of_polygon rejects bad input") {
    CHECK_THROWS_AS(sequence_of_polygon(BrokenLine{{{0, 0}, {1, 0}, {2, 0}, {1, 1}}, true}),
                    GeometryError);
    // Convex but traversed the other way around.
    CHECK_THROWS_AS(sequence_of_polygon(BrokenLine{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, true}),
                    GeometryError);
    CHECK_THROWS_AS(sequence_of_polygon(BrokenLine{{{0, 0}, {1, 0}, {0, 1}}, false}),
                    GeometryError);
    // Locally convex at every vertex but winding twice.
    BrokenLine star{{{3, 0}, {1, 5}, {5, 1}, {0, 3}, {4, 4}}, true};
    bool locally = true;
    for (std::size_t i = 0; i < 5; ++i) {
        const auto& v = star.vertices;
        if (det(v[(i + 4) % 5] - v[i], v[(i + 1) % 5] - v[i]) <= 0) {
            locally = false;
        }
    }
    REQUIRE(locally);
    CHECK_THROWS_AS(sequence_of_polygon(star), GeometryError);
}

TEST_CASE("lls_of_acs golden concatenations") {
    AngleCurvatureSequence s = sequence_of_polygon(reference_quadrangle());
    CHECK(lls_of_acs(s, 1, 4) == IntSeq{1, 3, 1, 1, 1, -1, 3, -2, 1, 2, 1, -1, 3, 1, 3});
    CHECK(lls_of_acs(s, 2, 4) == IntSeq{3, -2, 1, 2, 1, -1, 3, 1, 3});
    CHECK(lls_of_acs(s, 2, 2) == IntSeq{3});
    CHECK_THROWS_AS(lls_of_acs(s, 0, 2), GeometryError);
    CHECK_THROWS_AS(lls_of_acs(s, 3, 2), GeometryError);
    CHECK_THROWS_AS(lls_of_acs(s, 1, 5), GeometryError);
}

TEST_CASE("pentagon sail diagram golden") {
    SailDiagram d = sail_diagram(reference_pentagon());
    CHECK(d.line.vertices == std::vector<LatticePoint>{{1, 0},
                                                       {1, 1},
                                                       {2, 3},
                                                       {-1, -1},
                                                       {2, -1},
                                                       {-1, 1},
                                                       {-1, 0}});
    CHECK(d.edge_vertex_indices == std::vector<std::size_t>{0, 2, 3, 4, 5, 6});
    CHECK(winding_half_turns(d.line) == 3);

    AngleCurvatureSequence s = sequence_of_polygon(reference_pentagon());
    CHECK(d.lls == lls_of_acs(s, 1, 5).appended(s.curvatures[4]));
}

TEST_CASE("quadrangle sail diagram edge vertices carry the prefix continuants") {
    SailDiagram d = sail_diagram(reference_quadrangle());
    // Even n: the diagram closes at (1,0).
    CHECK(d.line.vertices.front() == LatticePoint(1, 0));
    CHECK(d.line.vertices.back() == LatticePoint(1, 0));
    std::vector<Int> ys;
    for (std::size_t i = 1; i < d.edge_vertex_indices.size(); ++i) {
        ys.push_back(d.line.vertices[d.edge_vertex_indices[i]].y);
    }
    CHECK(ys == std::vector<Int>{14, -1, -15, 0});
    CHECK(winding_half_turns(d.line) == 2);

    AngleCurvatureSequence s = sequence_of_polygon(reference_quadrangle());
    CHECK(d.lls == lls_of_acs(s, 1, 4).appended(s.curvatures[3]));
}

TEST_CASE("triangle diagram endpoints are symmetric") {
    BrokenLine triangle{{{0, 0}, {0, 1}, {1, 0}}, true};
    SailDiagram d = sail_diagram(triangle);
    CHECK(d.line.vertices.front() == LatticePoint(1, 0));
    CHECK(d.line.vertices.back() == LatticePoint(-1, 0));
    CHECK(winding_half_turns(d.line) == 1);
}

TEST_CASE("lls_of_vortex golden values") {
    VortexBrokenLine single({{1, 0}, {1, 1}, {5, 7}});
    CHECK(lls_of_vortex(single) == IntSeq{1, 2, 2});
    VortexBrokenLine two({{1, 0}, {1, 1}});
    CHECK(lls_of_vortex(two) == IntSeq{1});
    CHECK_THROWS_AS(VortexBrokenLine({{1, 0}, {1, -1}}), GeometryError);
    // Middle edge far from the origin: sine entry is not integral.
    CHECK_THROWS_AS(lls_of_vortex(VortexBrokenLine({{1, -1}, {2, 0}, {1, 1}})), GeometryError);
}

TEST_CASE("sign_changes") {
    CHECK(sign_changes(IntSeq{14, -1, -15, 0}) == 1);
    CHECK(sign_changes(IntSeq{1, 0, -1, 0, 1}) == 2);
    CHECK(sign_changes(IntSeq{}) == 0);
    CHECK(sign_changes(IntSeq{0, 0, 0}) == 0);
    CHECK(sign_changes(IntSeq{3, 2, 1}) == 0);
}

TEST_CASE("prefix continuants golden") {
    AngleCurvatureSequence quad = sequence_of_polygon(reference_quadrangle());
    CHECK(prefix_continuants(quad) == IntSeq{14, -1, -15, 0});
    CHECK(sign_changes(prefix_continuants(quad)) == 1);

    AngleCurvatureSequence penta = sequence_of_polygon(reference_pentagon());
    IntSeq pc = prefix_continuants(penta);
    CHECK(pc.size() == 5);
    CHECK(pc[4] == 0);
    CHECK(sign_changes(pc) == 2);
}

TEST_CASE("chord curvature routes agree and are unimodular invariants") {
    testsupport::Rng rng(20240717);
    int done = 0;
    while (done < 200) {
        LatticePoint a = testsupport::random_point(rng, -12, 12);
        LatticePoint b = testsupport::random_point(rng, -12, 12);
        LatticePoint c = testsupport::random_point(rng, -12, 12);
        LatticePoint d = testsupport::random_point(rng, -12, 12);
        if (a == b || b == c || c == d) {
            continue;
        }
        Int ob = det(a - b, c - b);
        Int oc = det(b - c, d - c);
        if (ob == 0 || oc == 0 || sign(ob) != sign(oc)) {
            continue;
        }
        ++done;
        Int route_a = chord_curvature(a, b, c, d);
        CHECK(route_a == chord_curvature_det(a, b, c, d));
        UnimodularMap m = testsupport::random_unimodular(rng);
        CHECK(chord_curvature(m(a), m(b), m(c), m(d)) == route_a);
    }
}

TEST_CASE("lattice refinement splits edges at interior lattice points") {
    auto refined = lattice_refinement({{0, 0}, {4, 2}, {5, 2}});
    CHECK(refined == std::vector<LatticePoint>{{0, 0}, {2, 1}, {4, 2}, {5, 2}});
}

TEST_CASE("open broken line sequences") {
    BrokenLine line{{{0, 2}, {4, 0}, {0, 0}, {2, 3}}, false};
    AngleCurvatureSequence s = sequence_of_broken_line(line);
    REQUIRE(s.size() == 2);
    CHECK(s.curvatures.size() == 1);
    CHECK(s.curvatures[0] == 1);
    CHECK(!s.cyclic);
}

TEST_CASE("edge vertex companions sit on a common unit-distance parallel") {
    // For each interior edge vertex B of a diagram, with R its previous and
    // N its next lattice point along the refined line, the points N and
    // B + (B - R) lie on one line parallel to OB at integer distance 1,
    // and the second coordinate of B + (B - R) is K(lls(S_1^i) o (1)).
    auto check_polygon = [](const BrokenLine& poly) {
        AngleCurvatureSequence s = sequence_of_polygon(poly);
        SailDiagram d = sail_diagram(poly);
        std::vector<LatticePoint> refined = lattice_refinement(d.line.vertices);
        // Refinement index of each diagram vertex (the wound-up line can
        // revisit a point, so match by position, not by value).
        std::vector<std::size_t> refined_index(d.line.vertices.size(), 0);
        for (std::size_t j = 1; j < d.line.vertices.size(); ++j) {
            refined_index[j] =
                refined_index[j - 1] +
                int_length(d.line.vertices[j - 1], d.line.vertices[j]).convert_to<std::size_t>();
        }
        for (std::size_t i = 1; i + 1 < d.edge_vertex_indices.size(); ++i) {
            LatticePoint b = d.line.vertices[d.edge_vertex_indices[i]];
            std::size_t at = refined_index[d.edge_vertex_indices[i]];
            REQUIRE(at > 0);
            REQUIRE(at + 1 < refined.size());
            REQUIRE(refined[at] == b);
            LatticePoint prev = refined[at - 1];
            LatticePoint next = refined[at + 1];
            LatticePoint hat = b + (b - prev);
            CHECK(int_distance(next, LatticePoint(0, 0), b) == 1);
            CHECK(int_distance(hat, LatticePoint(0, 0), b) == 1);
            // Same side of the line OB, hence one common parallel.
            CHECK(sign(det(b - LatticePoint(0, 0), next - LatticePoint(0, 0))) ==
                  sign(det(b - LatticePoint(0, 0), hat - LatticePoint(0, 0))));
            CHECK(hat.y == continuant(lls_of_acs(s, 1, i).appended(1)));
        }
    };
    check_polygon(reference_quadrangle());
    check_polygon(reference_pentagon());
    std::size_t sampled = 0;
    for (const auto& poly : lattrig::oracle::enumerate_convex_polygons(3, 5)) {
        check_polygon(poly);
        if (++sampled == 40) {
            break;
        }
    }
}

TEST_CASE("cyclic rotation equality") {
    AngleCurvatureSequence s = sequence_of_polygon(reference_pentagon());
    for (std::size_t k = 0; k < 5; ++k) {
        CHECK(s.equivalent_cyclic(s.rotated(k)));
    }
    AngleCurvatureSequence t = s;
    t.curvatures[2] += 1;
    CHECK(!s.equivalent_cyclic(t));
}

TEST_SUITE_END();
