#include "lattrig/json_io.hpp"
#include "lattrig/oracle.hpp"
#include "lattrig/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using lattrig::io::Json;

constexpr int kExitNegative = 1;
constexpr int kExitParse = 2;
constexpr int kExitGeometry = 3;

struct Options {
    std::string input = "-";
    std::string svg_file;
    int anchor = 0;
    int json_indent = 2;
};

std::string read_input(const std::string& spec) {
    if (spec == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream file(spec);
    if (!file) {
        throw lattrig::ParseError("cannot open input file '" + spec + "'");
    }
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

void print_json(const Json& doc, int indent) {
    if (indent > 0) {
        std::cout << doc.dump(indent) << "\n";
    } else {
        std::cout << doc.dump() << "\n";
    }
}

void write_svg(const std::string& path, const std::string& content) {
    std::ofstream file(path);
    if (!file) {
        throw lattrig::ParseError("cannot open SVG output file '" + path + "'");
    }
    file << content;
}

lattrig::BrokenLine anchored(const lattrig::BrokenLine& polygon, int anchor) {
    if (anchor == 0) {
        return polygon;
    }
    std::size_t n = polygon.vertices.size();
    std::size_t shift = ((anchor % static_cast<int>(n)) + static_cast<int>(n)) % n;
    lattrig::BrokenLine out;
    out.closed = polygon.closed;
    for (std::size_t i = 0; i < n; ++i) {
        out.vertices.push_back(polygon.vertices[(i + shift) % n]);
    }
    return out;
}

Json diagram_to_json(const lattrig::SailDiagram& diagram, lattrig::io::JsonEmitter& emitter) {
    Json out;
    out["vertices"] = emitter.points(diagram.line.vertices);
    out["edge_vertex_indices"] = diagram.edge_vertex_indices;
    out["lls"] = emitter.seq(diagram.lls);
    out["winding_half_turns"] = lattrig::winding_half_turns(diagram.line);
    return out;
}

int cmd_analyze(const Options& opt) {
    lattrig::io::PolygonDocument doc =
        lattrig::io::parse_polygon_document(lattrig::io::read_json(read_input(opt.input)));
    lattrig::BrokenLine polygon = anchored(doc.polygon, opt.anchor);

    lattrig::AngleCurvatureSequence seq = lattrig::sequence_of_polygon(polygon);
    lattrig::SailDiagram diagram = lattrig::sail_diagram(polygon);
    lattrig::FeasibilityReport report = lattrig::check_feasibility(seq);

    lattrig::io::JsonEmitter emitter;
    Json out;
    Json angles = Json::array();
    for (const auto& a : seq.angles) {
        angles.push_back(emitter.angle(a));
    }
    out["angles"] = angles;
    Json curvatures = Json::array();
    for (const auto& k : seq.curvatures) {
        curvatures.push_back(emitter.intval(k));
    }
    out["curvatures"] = curvatures;
    out["prefix_continuants"] = emitter.seq(lattrig::prefix_continuants(seq));
    out["sign_changes"] = lattrig::sign_changes(lattrig::prefix_continuants(seq));
    out["diagram"] = diagram_to_json(diagram, emitter);
    out["conditions"] = lattrig::io::feasibility_to_json(report, emitter);
    out["feasible"] = report.feasible;
    print_json(emitter.finalize(out), opt.json_indent);

    if (!opt.svg_file.empty()) {
        lattrig::svg::Scene scene;
        scene.add_path(polygon.vertices, true, "#1f3d7a", true);
        write_svg(opt.svg_file, lattrig::svg::render(scene));
    }
    return 0;
}

int cmd_check(const Options& opt) {
    lattrig::io::SequenceDocument doc =
        lattrig::io::parse_sequence_document(lattrig::io::read_json(read_input(opt.input)));
    if (!doc.sequence.cyclic) {
        throw lattrig::GeometryError("check: cyclic sequence required");
    }
    lattrig::AngleCurvatureSequence seq = doc.sequence;
    if (opt.anchor != 0) {
        seq = seq.rotated(((opt.anchor % static_cast<int>(seq.size())) +
                           static_cast<int>(seq.size())) %
                          seq.size());
    }
    lattrig::FeasibilityReport report = lattrig::check_feasibility(seq);
    lattrig::io::JsonEmitter emitter;
    print_json(emitter.finalize(lattrig::io::feasibility_to_json(report, emitter)),
               opt.json_indent);
    return report.feasible ? 0 : kExitNegative;
}

int cmd_complete(const Options& opt) {
    Json in = lattrig::io::read_json(read_input(opt.input));
    if (in.is_object() && !in.contains("cyclic")) {
        in["cyclic"] = false;
    }
    lattrig::io::SequenceDocument doc = lattrig::io::parse_sequence_document(in);
    if (doc.sequence.cyclic) {
        throw lattrig::GeometryError("complete: open sequence required (cyclic = false)");
    }
    lattrig::Completion completion = lattrig::complete_sequence(doc.sequence);
    lattrig::AngleCurvatureSequence assembled =
        lattrig::assemble_completed(doc.sequence, completion);
    lattrig::FeasibilityReport report = lattrig::check_feasibility(assembled);

    lattrig::io::JsonEmitter emitter;
    Json out;
    out["x"] = emitter.intval(completion.x);
    out["beta"] = emitter.angle(completion.beta);
    out["y"] = emitter.intval(completion.y);
    out["assembled_feasible"] = report.feasible;
    print_json(emitter.finalize(out), opt.json_indent);
    return 0;
}

int cmd_synthesize(const Options& opt) {
    lattrig::io::SequenceDocument doc =
        lattrig::io::parse_sequence_document(lattrig::io::read_json(read_input(opt.input)));
    if (!doc.sequence.cyclic) {
        throw lattrig::GeometryError("synthesize: cyclic sequence required");
    }
    lattrig::FeasibilityReport report = lattrig::check_feasibility(doc.sequence);
    if (!report.feasible) {
        lattrig::io::JsonEmitter emitter;
        Json out;
        out["error"] = "sequence is not feasible";
        out["conditions"] = lattrig::io::feasibility_to_json(report, emitter);
        print_json(emitter.finalize(out), opt.json_indent);
        return kExitNegative;
    }
    lattrig::BrokenLine polygon = lattrig::synthesize_polygon(doc.sequence);
    print_json(lattrig::io::polygon_to_json(polygon), opt.json_indent);

    if (!opt.svg_file.empty()) {
        lattrig::svg::Scene scene;
        scene.add_path(polygon.vertices, true, "#1f3d7a", true);
        write_svg(opt.svg_file, lattrig::svg::render(scene));
    }
    return 0;
}

int cmd_sail(const Options& opt) {
    Json in = lattrig::io::read_json(read_input(opt.input));
    lattrig::NormalizedAngle normalized = lattrig::io::parse_angle(in);
    lattrig::RationalAngle angle = normalized.canonical_angle();
    if (in.is_object() && in.contains("points")) {
        const Json& pts = in["points"];
        angle = lattrig::RationalAngle(lattrig::io::parse_point(pts[0], "points[0]"),
                                       lattrig::io::parse_point(pts[1], "points[1]"),
                                       lattrig::io::parse_point(pts[2], "points[2]"));
    }
    lattrig::Sail sail = lattrig::sail_vertices(angle);
    lattrig::io::JsonEmitter emitter;
    Json out;
    out["itan"] = Json::array({emitter.intval(normalized.p), emitter.intval(normalized.q)});
    out["lls"] = emitter.seq(sail.lls);
    out["vertices"] = emitter.points(sail.vertices);
    print_json(emitter.finalize(out), opt.json_indent);

    if (!opt.svg_file.empty()) {
        lattrig::svg::Scene scene;
        scene.add_path({angle.edge_a, angle.vertex, angle.edge_b}, false, "#777777", false);
        scene.add_path(sail.vertices, false, "#c03a2b", false);
        scene.markers.push_back(angle.vertex);
        write_svg(opt.svg_file, lattrig::svg::render(scene));
    }
    return 0;
}

int cmd_diagram(const Options& opt) {
    lattrig::io::PolygonDocument doc =
        lattrig::io::parse_polygon_document(lattrig::io::read_json(read_input(opt.input)));
    lattrig::BrokenLine polygon = anchored(doc.polygon, opt.anchor);
    lattrig::SailDiagram diagram = lattrig::sail_diagram(polygon);
    lattrig::io::JsonEmitter emitter;
    print_json(emitter.finalize(diagram_to_json(diagram, emitter)), opt.json_indent);

    if (!opt.svg_file.empty()) {
        lattrig::svg::Scene scene;
        scene.add_path(diagram.line.vertices, false, "#1f3d7a", false);
        for (std::size_t i : diagram.edge_vertex_indices) {
            scene.markers.push_back(diagram.line.vertices[i]);
        }
        write_svg(opt.svg_file, lattrig::svg::render(scene));
    }
    return 0;
}

int cmd_congruent(const Options& opt) {
    Json in = lattrig::io::read_json(read_input(opt.input));
    if (!in.is_object() || !in.contains("first") || !in.contains("second")) {
        throw lattrig::ParseError("congruent: expected {\"first\": polygon, \"second\": polygon}");
    }
    lattrig::BrokenLine p = lattrig::io::parse_polygon_document(in["first"]).polygon;
    lattrig::BrokenLine q = lattrig::io::parse_polygon_document(in["second"]).polygon;
    bool congruent = lattrig::oracle::canonical_congruence(p, q);
    lattrig::io::JsonEmitter emitter;
    Json out;
    out["congruent"] = congruent;
    print_json(emitter.finalize(out), opt.json_indent);
    return congruent ? 0 : kExitNegative;
}

int cmd_enumerate(const Options& opt, int bbox, int ngon) {
    (void)opt;
    lattrig::oracle::enumerate_convex_polygons(bbox, ngon, [&](const lattrig::BrokenLine& p) {
        std::cout << lattrig::io::polygon_to_json(p).dump() << "\n";
    });
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact lattice trigonometry for convex integer polygons"};
    app.require_subcommand(1);

    Options opt;
    int bbox = 4;
    int ngon = 3;

    auto add_common = [&](CLI::App* cmd, bool with_svg = false, bool with_anchor = false) {
        cmd->add_option("--input", opt.input, "input file, or - for stdin")->capture_default_str();
        cmd->add_option("--json-indent", opt.json_indent, "indentation of JSON output")
            ->capture_default_str();
        if (with_svg) {
            cmd->add_option("--svg", opt.svg_file, "also write an SVG rendering to this file");
        }
        if (with_anchor) {
            cmd->add_option("--anchor", opt.anchor, "rotate the cyclic input by this offset")
                ->capture_default_str();
        }
    };

    CLI::App* analyze = app.add_subcommand(
        "analyze", "angle-curvature sequence, sail diagram and realizability of a polygon");
    add_common(analyze, true, true);
    CLI::App* check =
        app.add_subcommand("check", "decide realizability of an angle-curvature sequence");
    add_common(check, false, true);
    CLI::App* complete =
        app.add_subcommand("complete", "close an open sequence with (x, beta, y)");
    add_common(complete);
    CLI::App* synthesize =
        app.add_subcommand("synthesize", "construct a polygon realizing a feasible sequence");
    add_common(synthesize, true);
    CLI::App* sail = app.add_subcommand("sail", "sail and LLS sequence of a rational angle");
    add_common(sail, true);
    CLI::App* diagram = app.add_subcommand("diagram", "sail diagram of a polygon");
    add_common(diagram, true, true);
    CLI::App* congruent =
        app.add_subcommand("congruent", "decide integer congruence of two polygons");
    add_common(congruent);
    CLI::App* enumerate =
        app.add_subcommand("enumerate", "stream all convex n-gons in a box, up to translation");
    add_common(enumerate);
    enumerate->add_option("--bbox", bbox, "vertices range over [0,bbox]^2")->required();
    enumerate->add_option("--ngon", ngon, "number of vertices")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            return cmd_analyze(opt);
        }
        if (check->parsed()) {
            return cmd_check(opt);
        }
        if (complete->parsed()) {
            return cmd_complete(opt);
        }
        if (synthesize->parsed()) {
            return cmd_synthesize(opt);
        }
        if (sail->parsed()) {
            return cmd_sail(opt);
        }
        if (diagram->parsed()) {
            return cmd_diagram(opt);
        }
        if (congruent->parsed()) {
            return cmd_congruent(opt);
        }
        if (enumerate->parsed()) {
            return cmd_enumerate(opt, bbox, ngon);
        }
    } catch (const lattrig::ParseError& e) {
        Json err;
        err["error"] = {{"type", "parse"}, {"message", e.what()}};
        print_json(err, opt.json_indent);
        return kExitParse;
    } catch (const lattrig::GeometryError& e) {
        Json err;
        err["error"] = {{"type", "geometry"}, {"message", e.what()}};
        print_json(err, opt.json_indent);
        return kExitGeometry;
    }
    return 0;
}
