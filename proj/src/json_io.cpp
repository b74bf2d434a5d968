#include "lattrig/json_io.hpp"

namespace lattrig::io {

namespace {

const Int kJsonSafeMax("9007199254740991"); // 2^53 - 1

} // namespace

Json JsonEmitter::intval(const Int& v) {
    if (abs(v) <= kJsonSafeMax) {
        return Json(v.convert_to<long long>());
    }
    bigint_used_ = true;
    return Json(v.str());
}

Json JsonEmitter::seq(const IntSeq& s) {
    Json out = Json::array();
    for (const Int& v : s) {
        out.push_back(intval(v));
    }
    return out;
}

Json JsonEmitter::point(const LatticePoint& p) {
    return Json::array({intval(p.x), intval(p.y)});
}

Json JsonEmitter::points(const std::vector<LatticePoint>& pts) {
    Json out = Json::array();
    for (const LatticePoint& p : pts) {
        out.push_back(point(p));
    }
    return out;
}

Json JsonEmitter::angle(const NormalizedAngle& a) {
    Json out;
    out["itan"] = Json::array({intval(a.p), intval(a.q)});
    out["lls"] = seq(a.lls());
    return out;
}

Json JsonEmitter::finalize(Json doc) {
    if (bigint_used_) {
        doc["bigint"] = true;
    }
    return doc;
}

Int parse_int(const Json& j, const std::string& what) {
    if (j.is_number_integer()) {
        return Int(j.get<long long>());
    }
    if (j.is_number_unsigned()) {
        return Int(j.get<unsigned long long>());
    }
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.size() == start) {
            throw ParseError(what + ": empty integer string");
        }
        for (std::size_t i = start; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                throw ParseError(what + ": malformed integer string '" + s + "'");
            }
        }
        return Int(s);
    }
    throw ParseError(what + ": expected an integer (number or decimal string)");
}

LatticePoint parse_point(const Json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2) {
        throw ParseError(what + ": expected a point as [x, y]");
    }
    return LatticePoint(parse_int(j[0], what + ".x"), parse_int(j[1], what + ".y"));
}

PolygonDocument parse_polygon_document(const Json& j) {
    if (!j.is_object() || !j.contains("vertices")) {
        throw ParseError("polygon document: missing \"vertices\"");
    }
    const Json& verts = j["vertices"];
    if (!verts.is_array() || verts.size() < 3) {
        throw ParseError("polygon document: \"vertices\" must list at least three points");
    }
    PolygonDocument out;
    out.polygon.closed = true;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        out.polygon.vertices.push_back(parse_point(verts[i], "vertices[" + std::to_string(i) + "]"));
    }
    return out;
}

NormalizedAngle parse_angle(const Json& j) {
    if (!j.is_object()) {
        throw ParseError("angle: expected an object with \"itan\", \"lls\" or \"points\"");
    }
    if (j.contains("itan")) {
        const Json& pq = j["itan"];
        if (!pq.is_array() || pq.size() != 2) {
            throw ParseError("angle.itan: expected [p, q]");
        }
        Int p = parse_int(pq[0], "angle.itan.p");
        Int q = parse_int(pq[1], "angle.itan.q");
        return normalize_angle(iarctan_angle(p, q));
    }
    if (j.contains("lls")) {
        const Json& arr = j["lls"];
        if (!arr.is_array() || arr.empty()) {
            throw ParseError("angle.lls: expected a non-empty array");
        }
        std::vector<Int> elems;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            elems.push_back(parse_int(arr[i], "angle.lls[" + std::to_string(i) + "]"));
        }
        IntSeq lls{std::move(elems)};
        if (lls.size() % 2 != 1) {
            throw GeometryError("angle.lls: an angle LLS sequence has odd length");
        }
        for (const Int& v : lls) {
            if (v < 1) {
                throw GeometryError("angle.lls: an angle LLS sequence has positive entries");
            }
        }
        return angle_from_sequence(lls);
    }
    if (j.contains("points")) {
        const Json& pts = j["points"];
        if (!pts.is_array() || pts.size() != 3) {
            throw ParseError("angle.points: expected [edge_a, vertex, edge_b]");
        }
        RationalAngle angle(parse_point(pts[0], "angle.points[0]"),
                            parse_point(pts[1], "angle.points[1]"),
                            parse_point(pts[2], "angle.points[2]"));
        return normalize_angle(angle);
    }
    throw ParseError("angle: expected \"itan\", \"lls\" or \"points\"");
}

SequenceDocument parse_sequence_document(const Json& j) {
    if (!j.is_object() || !j.contains("angles") || !j.contains("curvatures")) {
        throw ParseError("sequence document: missing \"angles\" or \"curvatures\"");
    }
    SequenceDocument out;
    out.sequence.cyclic = j.value("cyclic", true);
    const Json& angles = j["angles"];
    const Json& curvatures = j["curvatures"];
    if (!angles.is_array() || angles.empty() || !curvatures.is_array()) {
        throw ParseError("sequence document: \"angles\" and \"curvatures\" must be arrays");
    }
    std::size_t want = out.sequence.cyclic ? angles.size() : angles.size() - 1;
    if (curvatures.size() != want) {
        throw ParseError("sequence document: expected " + std::to_string(want) +
                         " curvatures for " + std::to_string(angles.size()) +
                         (out.sequence.cyclic ? " angles (cyclic)" : " angles (open)"));
    }
    for (const Json& a : angles) {
        out.sequence.angles.push_back(parse_angle(a));
    }
    for (std::size_t i = 0; i < curvatures.size(); ++i) {
        out.sequence.curvatures.push_back(
            parse_int(curvatures[i], "curvatures[" + std::to_string(i) + "]"));
    }
    return out;
}

Json polygon_to_json(const BrokenLine& polygon) {
    JsonEmitter emitter;
    Json out;
    out["vertices"] = emitter.points(polygon.vertices);
    return emitter.finalize(out);
}

Json feasibility_to_json(const FeasibilityReport& report, JsonEmitter& emitter) {
    Json out;
    out["closure"] = {{"ok", report.closure_ok},
                      {"continuant", emitter.intval(report.closure_value)}};
    Json curv;
    curv["ok"] = report.curvature_ok;
    curv["numerator"] = emitter.intval(report.curvature_numerator);
    curv["denominator"] = emitter.intval(report.curvature_denominator);
    if (report.curvature_denominator_zero) {
        curv["degenerate"] = "zero denominator";
    } else {
        curv["expected"] = emitter.intval(report.curvature_expected);
    }
    curv["actual"] = emitter.intval(report.curvature_actual);
    out["last_curvature"] = curv;
    out["sign_changes"] = {{"ok", report.winding_ok},
                           {"observed", report.sign_changes_observed},
                           {"required", report.sign_changes_required}};
    out["feasible"] = report.feasible;
    return out;
}

Json read_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace lattrig::io
