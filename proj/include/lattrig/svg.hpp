#pragma once

#include "lattrig/core.hpp"

#include <string>
#include <vector>

namespace lattrig::svg {

/// Flat static scene: polylines over the lattice, rendered with integer
/// coordinates only (deterministic output bytes).
struct Scene {
    struct Path {
        std::vector<LatticePoint> points;
        bool closed = false;
        std::string stroke = "#1f3d7a";
        bool fill = false;
    };

    std::vector<Path> paths;
    std::vector<LatticePoint> markers;   // emphasized lattice points
    bool origin_marker = true;

    void add_path(std::vector<LatticePoint> pts, bool closed, std::string stroke = "#1f3d7a",
                  bool fill = false);
};

/// SVG 1.1 document; lattice dots are drawn when the scene spans at most
/// 64 lattice units in either direction.
std::string render(const Scene& scene);

} // namespace lattrig::svg
