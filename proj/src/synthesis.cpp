#include "lattrig/synthesis.hpp"

#include <utility>

namespace lattrig {

namespace {

// Reduced fraction with positive denominator.
struct Frac {
    Int num;
    Int den;

    Frac(Int n, Int d) : num(std::move(n)), den(std::move(d)) {
        if (den == 0) {
            throw GeometryError("close_fan: zero denominator");
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        Int g = gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    Frac plus(const Frac& o) const { return Frac(num * o.den + o.num * den, den * o.den); }
};

void validate_fan(const std::vector<LatticeVector>& dirs) {
    std::size_t n = dirs.size();
    if (n < 3) {
        throw GeometryError("fan: needs at least three directions");
    }
    int turn = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Int d = det(dirs[i], dirs[(i + 1) % n]);
        if (d == 0) {
            throw GeometryError("fan: consecutive directions are parallel");
        }
        int s = sign(d);
        if (turn == 0) {
            turn = s;
        } else if (s != turn) {
            throw GeometryError("fan: directions do not rotate monotonically");
        }
    }
    auto half = [](const LatticeVector& e) {
        return (e.dy > 0 || (e.dy == 0 && e.dx > 0)) ? 0 : 1;
    };
    std::size_t flips = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (half(dirs[i]) != half(dirs[(i + 1) % n])) {
            ++flips;
        }
    }
    if (flips != 2) {
        throw GeometryError("fan: directions do not cover exactly one full turn");
    }
}

} // namespace

EdgeDirectionFan directions_from_sequence(const AngleCurvatureSequence& s) {
    FeasibilityReport report = check_feasibility(s);
    if (!report.feasible) {
        throw GeometryError("directions_from_sequence: sequence fails the feasibility criterion");
    }
    EdgeDirectionFan fan;
    fan.directions.reserve(s.size());
    for (std::size_t i = 1; i <= s.size(); ++i) {
        auto [x, y] = continuant_pair(lls_of_acs(s, 1, i));
        LatticeVector d(std::move(x), std::move(y));
        if (i % 2 == 0) {
            d = -d;
        }
        fan.directions.push_back(std::move(d));
    }
    validate_fan(fan.directions);
    return fan;
}

std::vector<Int> close_fan(const EdgeDirectionFan& fan) {
    const auto& dirs = fan.directions;
    validate_fan(dirs);
    std::size_t n = dirs.size();
    int turn = sign(det(dirs[0], dirs[1]));

    std::vector<Frac> weights(n, Frac(1, 1));
    auto residual = [&]() {
        // Common-denominator sum of weight_i * d_i; returns (rx, ry, den).
        Int den = 1;
        for (const Frac& w : weights) {
            den *= w.den;
        }
        Int rx = 0, ry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            Int scale = weights[i].num * (den / weights[i].den);
            rx += scale * dirs[i].dx;
            ry += scale * dirs[i].dy;
        }
        return std::pair<LatticeVector, Int>(LatticeVector(std::move(rx), std::move(ry)),
                                             std::move(den));
    };

    for (int round = 0; round < 4; ++round) {
        auto [r, rden] = residual();
        if (r.is_zero()) {
            break;
        }
        LatticeVector target = -r;
        bool placed = false;
        for (std::size_t j = 0; j < n && !placed; ++j) {
            const LatticeVector& dj = dirs[j];
            const LatticeVector& dk = dirs[(j + 1) % n];
            Int a_num = det(target, dk);
            Int b_num = det(dj, target);
            Int d = det(dj, dk);
            if (sign(a_num) * turn < 0 || sign(b_num) * turn < 0) {
                continue; // target outside this cone
            }
            // target = a*dj + b*dk with a = a_num/d, b = b_num/d >= 0;
            // the residual itself carries the 1/rden scale.
            weights[j] = weights[j].plus(Frac(a_num, d * rden));
            weights[(j + 1) % n] = weights[(j + 1) % n].plus(Frac(b_num, d * rden));
            placed = true;
        }
        if (!placed) {
            throw GeometryError("close_fan: residual not bracketed by the fan "
                                "(upstream feasibility bug)");
        }
    }

    auto [r, rden] = residual();
    if (!r.is_zero()) {
        throw GeometryError("close_fan: residual did not vanish");
    }

    Int lcm = 1;
    for (const Frac& w : weights) {
        lcm = lcm / gcd(lcm, w.den) * w.den;
    }
    std::vector<Int> out;
    out.reserve(n);
    Int g = 0;
    for (const Frac& w : weights) {
        out.push_back(w.num * (lcm / w.den));
        g = gcd(g, out.back());
    }
    if (g > 1) {
        for (Int& t : out) {
            t /= g;
        }
    }
    for (const Int& t : out) {
        if (t < 1) {
            throw GeometryError("close_fan: non-positive weight");
        }
    }
    return out;
}

BrokenLine synthesize_polygon(const AngleCurvatureSequence& s) {
    EdgeDirectionFan fan = directions_from_sequence(s);
    std::vector<Int> weights = close_fan(fan);
    std::size_t n = fan.directions.size();

    // A_1 at the origin; the listed polygon is (A_0, A_1, ..., A_{n-1}).
    std::vector<LatticePoint> walk;
    walk.reserve(n);
    LatticePoint cur(0, 0);
    walk.push_back(cur); // A_1
    for (std::size_t i = 0; i + 1 < n; ++i) {
        cur = cur + fan.directions[i] * weights[i];
        walk.push_back(cur); // A_2 .. A_n
    }
    BrokenLine out;
    out.closed = true;
    out.vertices.reserve(n);
    out.vertices.push_back(walk.back()); // A_0 = A_n
    out.vertices.insert(out.vertices.end(), walk.begin(), walk.end() - 1);
    return out;
}

} // namespace lattrig
