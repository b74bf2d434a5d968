#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace lattrig {

// Arbitrary-precision signed integer. Continuants of even modest LLS
// sequences overflow 64 bits, so all lattice quantities use this type.
using Int = boost::multiprecision::cpp_int;

struct GeometryError : std::runtime_error {
    explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline int sign(const Int& v) {
    return v.sign();
}

// Nonnegative gcd with gcd(0,0) = 0.
inline Int gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

// Extended Euclid: returns g = gcd(a,b) and sets s,t with s*a + t*b = g.
inline Int ext_gcd(const Int& a, const Int& b, Int& s, Int& t) {
    Int old_r = a, r = b;
    Int old_s = 1, cur_s = 0;
    Int old_t = 0, cur_t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * cur_s;
        old_s = cur_s;
        cur_s = tmp;
        tmp = old_t - q * cur_t;
        old_t = cur_t;
        cur_t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    s = old_s;
    t = old_t;
    return old_r;
}

// Mathematical floor of p/q (toward -infinity), exact for any signs.
inline Int floor_div(const Int& p, const Int& q) {
    if (q == 0) {
        throw GeometryError("floor_div: division by zero");
    }
    Int d = p / q;
    Int r = p - d * q;
    if (r != 0 && ((r < 0) != (q < 0))) {
        --d;
    }
    return d;
}

// Mathematical ceiling of p/q (toward +infinity).
inline Int ceil_div(const Int& p, const Int& q) {
    return -floor_div(-p, q);
}

} // namespace lattrig
