#pragma once

#include "lattrig/core.hpp"
#include "lattrig/curvature.hpp"

#include <random>

namespace testsupport {

using lattrig::Int;
using lattrig::LatticePoint;
using lattrig::LatticeVector;
using lattrig::RationalAngle;
using lattrig::UnimodularMap;

using Rng = std::mt19937;

inline Int random_int(Rng& rng, long long lo, long long hi) {
    std::uniform_int_distribution<long long> dist(lo, hi);
    return Int(dist(rng));
}

inline LatticePoint random_point(Rng& rng, long long lo, long long hi) {
    return LatticePoint(random_int(rng, lo, hi), random_int(rng, lo, hi));
}

// Random product of shears, swaps and a translation; mixes det +1 and -1.
inline UnimodularMap random_unimodular(Rng& rng, bool allow_reflection = true) {
    UnimodularMap m = UnimodularMap::identity();
    std::uniform_int_distribution<int> kind(0, allow_reflection ? 2 : 1);
    std::uniform_int_distribution<long long> small(-3, 3);
    for (int step = 0; step < 6; ++step) {
        switch (kind(rng)) {
        case 0:
            m = UnimodularMap::shear_x(Int(small(rng))).compose(m);
            break;
        case 1:
            m = UnimodularMap::linear(1, 0, Int(small(rng)), 1).compose(m);
            break;
        default:
            m = UnimodularMap::linear(0, 1, 1, 0).compose(m); // axis swap, det -1
            break;
        }
    }
    m = UnimodularMap::translation(LatticeVector(random_int(rng, -20, 20),
                                                 random_int(rng, -20, 20)))
            .compose(m);
    return m;
}

inline UnimodularMap random_orientation_preserving(Rng& rng) {
    UnimodularMap m = random_unimodular(rng);
    if (m.det() < 0) {
        // One more swap restores det +1 without losing randomness.
        m = m.compose(UnimodularMap::linear(0, 1, 1, 0));
    }
    return m;
}

inline RationalAngle random_proper_angle(Rng& rng, long long range) {
    while (true) {
        LatticePoint v = random_point(rng, -range, range);
        LatticePoint a = random_point(rng, -range, range);
        LatticePoint b = random_point(rng, -range, range);
        if (a == v || b == v) {
            continue;
        }
        if (lattrig::det(a - v, b - v) == 0) {
            continue;
        }
        return RationalAngle(a, v, b);
    }
}

} // namespace testsupport
