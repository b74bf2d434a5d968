#pragma once

#include "lattrig/curvature.hpp"
#include "lattrig/synthesis.hpp"
#include "lattrig/realizability.hpp"

#include <json.hpp>

#include <string>

namespace lattrig::io {

using Json = nlohmann::ordered_json;

struct PolygonDocument {
    BrokenLine polygon;
};

struct SequenceDocument {
    AngleCurvatureSequence sequence;
};

/// Integers above 53-bit magnitude travel as JSON strings; any document
/// that needed one carries a top-level {"bigint": true} marker.
class JsonEmitter {
public:
    Json intval(const Int& v);
    Json seq(const IntSeq& s);
    Json point(const LatticePoint& p);
    Json points(const std::vector<LatticePoint>& pts);
    Json angle(const NormalizedAngle& a);

    /// Adds the bigint marker when any emitted integer overflowed.
    Json finalize(Json doc);

private:
    bool bigint_used_ = false;
};

/// Accepts a JSON number or a decimal string (the bigint form).
Int parse_int(const Json& j, const std::string& what);

LatticePoint parse_point(const Json& j, const std::string& what);

/// {"vertices": [[x,y], ...]}
PolygonDocument parse_polygon_document(const Json& j);

/// An angle as {"itan":[p,q]}, {"lls":[...]} or {"points":[[..],[..],[..]]}.
NormalizedAngle parse_angle(const Json& j);

/// {"angles": [...], "curvatures": [...], "cyclic": bool}
SequenceDocument parse_sequence_document(const Json& j);

Json polygon_to_json(const BrokenLine& polygon);

Json feasibility_to_json(const FeasibilityReport& report, JsonEmitter& emitter);

Json read_json(const std::string& text);

} // namespace lattrig::io
