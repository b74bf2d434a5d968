#pragma once

#include "lattrig/int.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace lattrig {

/// A finite integer sequence under concatenation. Carries LLS data and
/// continuant arguments; the empty sequence is the monoid identity.
class IntSeq {
public:
    IntSeq() = default;
    explicit IntSeq(std::vector<Int> elems) : elems_(std::move(elems)) {}
    IntSeq(std::initializer_list<long long> elems) {
        elems_.reserve(elems.size());
        for (long long v : elems) {
            elems_.emplace_back(v);
        }
    }

    static IntSeq single(Int v) {
        IntSeq s;
        s.elems_.push_back(std::move(v));
        return s;
    }

    bool empty() const { return elems_.empty(); }
    std::size_t size() const { return elems_.size(); }
    const Int& operator[](std::size_t i) const { return elems_[i]; }

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }
    const std::vector<Int>& elements() const { return elems_; }

    IntSeq concat(const IntSeq& other) const {
        IntSeq out;
        out.elems_.reserve(size() + other.size());
        out.elems_.insert(out.elems_.end(), elems_.begin(), elems_.end());
        out.elems_.insert(out.elems_.end(), other.elems_.begin(), other.elems_.end());
        return out;
    }

    IntSeq appended(Int v) const {
        IntSeq out = *this;
        out.elems_.push_back(std::move(v));
        return out;
    }

    IntSeq prefix(std::size_t n) const {
        return IntSeq(std::vector<Int>(elems_.begin(), elems_.begin() + n));
    }

    /// Drops the first element.
    IntSeq tail() const {
        return IntSeq(std::vector<Int>(elems_.begin() + (elems_.empty() ? 0 : 1), elems_.end()));
    }

    IntSeq drop_last() const {
        return IntSeq(std::vector<Int>(elems_.begin(), elems_.end() - (elems_.empty() ? 0 : 1)));
    }

    IntSeq reversed() const {
        return IntSeq(std::vector<Int>(elems_.rbegin(), elems_.rend()));
    }

    IntSeq negated() const {
        std::vector<Int> out;
        out.reserve(elems_.size());
        for (const Int& v : elems_) {
            out.push_back(-v);
        }
        return IntSeq(std::move(out));
    }

    bool operator==(const IntSeq& other) const = default;

    std::string str() const;

private:
    std::vector<Int> elems_;
};

inline IntSeq reverse(const IntSeq& s) { return s.reversed(); }
inline IntSeq negate(const IntSeq& s) { return s.negated(); }

/// A point of the rational projective line: num/den with den = 0 encoding
/// infinity. Canonical form has gcd(num,den) = 1 and den >= 0.
struct ProjRational {
    Int num;
    Int den;

    ProjRational(Int n, Int d) : num(std::move(n)), den(std::move(d)) { canonicalize(); }

    bool is_infinity() const { return den == 0; }

    bool operator==(const ProjRational& other) const = default;

    std::string str() const;

private:
    void canonicalize();
};

/// Continuant K: K() = 1, K(x1) = x1,
/// K(x1..xn) = xn*K(x1..xn-1) + K(x1..xn-2).
Int continuant(const IntSeq& s);

/// (K(b1..bk), K(b0..bk)) via the 2x2 matrix product with b_{-1} = 0;
/// the empty sequence yields (0, 1).
std::pair<Int, Int> continuant_pair(const IntSeq& s);

/// Value of [a0; a1 : ... : an] under the projective rules
/// 1/0 = inf, a + inf = inf, 1/inf = 0. Total; the empty expansion is inf.
ProjRational cf_eval(const IntSeq& s);

/// Odd-length all-positive expansion of p/q (p >= q >= 1, coprime): the
/// regular Euclidean expansion with [..., a] rewritten as [..., a-1, 1]
/// whenever the regular form has even length. cf_expand_odd(1,1) = (1).
IntSeq cf_expand_odd(const Int& p, const Int& q);

} // namespace lattrig
