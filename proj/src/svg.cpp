#include "lattrig/svg.hpp"

#include <sstream>

namespace lattrig::svg {

void Scene::add_path(std::vector<LatticePoint> pts, bool closed, std::string stroke, bool fill) {
    paths.push_back(Path{std::move(pts), closed, std::move(stroke), fill});
}

namespace {

constexpr int kUnit = 24; // pixels per lattice step

struct Frame {
    Int min_x, min_y, max_x, max_y;

    Int px(const Int& x) const { return (x - min_x + 1) * kUnit; }
    Int py(const Int& y) const { return (max_y - y + 1) * kUnit; }
    Int width() const { return (max_x - min_x + 2) * kUnit; }
    Int height() const { return (max_y - min_y + 2) * kUnit; }
};

void emit_path(std::ostringstream& out, const Frame& f, const Scene::Path& path) {
    out << "  <path d=\"";
    for (std::size_t i = 0; i < path.points.size(); ++i) {
        out << (i == 0 ? "M" : " L") << f.px(path.points[i].x) << " " << f.py(path.points[i].y);
    }
    if (path.closed) {
        out << " Z";
    }
    out << "\" fill=\"" << (path.fill ? "#b9cdf2" : "none");
    if (path.fill) {
        out << "\" fill-opacity=\"0.45";
    }
    out << "\" stroke=\"" << path.stroke << "\" stroke-width=\"3\" stroke-linejoin=\"round\"/>\n";
}

} // namespace

std::string render(const Scene& scene) {
    Frame f{0, 0, 0, 0};
    bool seeded = false;
    auto grow = [&](const LatticePoint& p) {
        if (!seeded) {
            f.min_x = f.max_x = p.x;
            f.min_y = f.max_y = p.y;
            seeded = true;
            return;
        }
        if (p.x < f.min_x) f.min_x = p.x;
        if (p.x > f.max_x) f.max_x = p.x;
        if (p.y < f.min_y) f.min_y = p.y;
        if (p.y > f.max_y) f.max_y = p.y;
    };
    if (scene.origin_marker) {
        grow(LatticePoint(0, 0));
    }
    for (const auto& path : scene.paths) {
        for (const auto& p : path.points) {
            grow(p);
        }
    }
    for (const auto& p : scene.markers) {
        grow(p);
    }
    if (!seeded) {
        grow(LatticePoint(0, 0));
    }

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f.width() << "\" height=\""
        << f.height() << "\" viewBox=\"0 0 " << f.width() << " " << f.height() << "\">\n";
    out << "  <rect width=\"" << f.width() << "\" height=\"" << f.height()
        << "\" fill=\"#ffffff\"/>\n";

    if (f.max_x - f.min_x <= 64 && f.max_y - f.min_y <= 64) {
        for (Int x = f.min_x; x <= f.max_x; ++x) {
            for (Int y = f.min_y; y <= f.max_y; ++y) {
                out << "  <circle cx=\"" << f.px(x) << "\" cy=\"" << f.py(y)
                    << "\" r=\"2\" fill=\"#c8c8c8\"/>\n";
            }
        }
    }

    for (const auto& path : scene.paths) {
        emit_path(out, f, path);
    }

    for (const auto& p : scene.markers) {
        out << "  <circle cx=\"" << f.px(p.x) << "\" cy=\"" << f.py(p.y)
            << "\" r=\"5\" fill=\"#c03a2b\"/>\n";
    }

    if (scene.origin_marker) {
        Int cx = f.px(Int(0));
        Int cy = f.py(Int(0));
        out << "  <line x1=\"" << cx - 6 << "\" y1=\"" << cy << "\" x2=\"" << cx + 6
            << "\" y2=\"" << cy << "\" stroke=\"#222222\" stroke-width=\"2\"/>\n";
        out << "  <line x1=\"" << cx << "\" y1=\"" << cy - 6 << "\" x2=\"" << cx << "\" y2=\""
            << cy + 6 << "\" stroke=\"#222222\" stroke-width=\"2\"/>\n";
    }

    out << "</svg>\n";
    return out.str();
}

} // namespace lattrig::svg
