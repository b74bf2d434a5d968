#include "lattrig/realizability.hpp"

namespace lattrig {

FeasibilityReport check_feasibility(const AngleCurvatureSequence& s) {
    if (!s.cyclic) {
        throw GeometryError("check_feasibility: cyclic sequence required");
    }
    s.validate();
    std::size_t n = s.size();
    if (n < 3) {
        throw GeometryError("check_feasibility: needs at least three angles");
    }

    FeasibilityReport report;

    IntSeq full = lls_of_acs(s, 1, n);
    report.closure_value = continuant(full);
    report.closure_ok = (report.closure_value == 0);

    IntSeq suffix = lls_of_acs(s, 2, n);
    report.curvature_denominator = continuant(suffix);
    report.curvature_numerator = continuant(suffix.appended(1));
    report.curvature_actual = s.curvatures[n - 1];
    if (report.curvature_denominator == 0) {
        report.curvature_denominator_zero = true;
        report.curvature_ok = false;
    } else {
        report.curvature_expected =
            -floor_div(report.curvature_numerator, report.curvature_denominator);
        report.curvature_ok = (report.curvature_actual == report.curvature_expected);
    }

    report.sign_changes_observed = sign_changes(prefix_continuants(s));
    report.sign_changes_required = n - 3;
    report.winding_ok = (report.sign_changes_observed == report.sign_changes_required);

    report.feasible = report.closure_ok && report.curvature_ok && report.winding_ok;
    return report;
}

Completion complete_sequence(const AngleCurvatureSequence& open_seq) {
    if (open_seq.cyclic) {
        throw GeometryError("complete_sequence: open sequence required");
    }
    open_seq.validate();
    std::size_t n = open_seq.size();
    if (n < 2) {
        throw GeometryError("complete_sequence: needs at least two angles");
    }

    IntSeq u = lls_of_acs(open_seq, 1, n);
    Int ku = continuant(u);
    if (ku == 0) {
        throw GeometryError("complete_sequence: degenerate input, K(U) = 0");
    }
    Completion out;
    out.x = -floor_div(continuant(u.appended(1)), ku);
    // beta is the angle the closing sail spans in the diagram: from the
    // last edge vertex pair(U) to the endpoint on the x-axis that keeps
    // the line winding forward. Reading it off the diagram rather than
    // normalizing the bare reversed-negated sequence keeps the central
    // symmetry of the construction intact for every parity.
    auto [dx, dy] = continuant_pair(u);
    LatticePoint end_vertex(std::move(dx), std::move(dy));
    LatticePoint closing(ku < 0 ? 1 : -1, 0);
    out.beta = normalize_angle(RationalAngle(end_vertex, LatticePoint(0, 0), closing));

    IntSeq v = lls_of_acs(open_seq, 2, n).appended(out.x).concat(out.beta.lls());
    Int kv = continuant(v);
    if (kv == 0) {
        throw GeometryError("complete_sequence: degenerate completion, K(V) = 0");
    }
    out.y = -floor_div(continuant(v.appended(1)), kv);
    return out;
}

AngleCurvatureSequence assemble_completed(const AngleCurvatureSequence& open_seq,
                                          const Completion& completion) {
    AngleCurvatureSequence out;
    out.cyclic = true;
    out.angles = open_seq.angles;
    out.curvatures = open_seq.curvatures;
    out.curvatures.push_back(completion.x);
    out.angles.push_back(completion.beta);
    out.curvatures.push_back(completion.y);
    out.validate();
    return out;
}

bool asca_congruent(const Triangle& t1, const Triangle& t2) {
    auto check = [](const Triangle& t) {
        const auto& [a, b, c] = t;
        if (det(b - a, c - a) == 0) {
            throw GeometryError("asca_congruent: degenerate triangle");
        }
    };
    check(t1);
    check(t2);

    const auto& [a1, b1, c1] = t1;
    const auto& [a2, b2, c2] = t2;
    ProjRational angle_b1 = itan(RationalAngle(a1, b1, c1));
    ProjRational angle_b2 = itan(RationalAngle(a2, b2, c2));
    if (!(angle_b1 == angle_b2)) {
        return false;
    }
    ProjRational angle_a1 = itan(RationalAngle(b1, a1, c1));
    ProjRational angle_a2 = itan(RationalAngle(b2, a2, c2));
    if (!(angle_a1 == angle_a2)) {
        return false;
    }
    if (int_length(a1, b1) != int_length(a2, b2)) {
        return false;
    }
    return chord_curvature(c1, a1, b1, c1) == chord_curvature(c2, a2, b2, c2);
}

} // namespace lattrig
