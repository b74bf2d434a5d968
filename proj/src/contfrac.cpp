#include "lattrig/contfrac.hpp"

#include <sstream>

namespace lattrig {

std::string IntSeq::str() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i != 0) {
            out << ",";
        }
        out << elems_[i];
    }
    out << ")";
    return out.str();
}

void ProjRational::canonicalize() {
    if (num == 0 && den == 0) {
        throw GeometryError("ProjRational: 0/0 is not a projective point");
    }
    Int g = gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (den < 0 || (den == 0 && num < 0)) {
        num = -num;
        den = -den;
    }
}

std::string ProjRational::str() const {
    if (is_infinity()) {
        return "inf";
    }
    std::ostringstream out;
    out << num;
    if (den != 1) {
        out << "/" << den;
    }
    return out.str();
}

Int continuant(const IntSeq& s) {
    // Prefix recurrence with seeds K(undershot) = 0, K(empty) = 1.
    Int prev2 = 0;
    Int prev = 1;
    for (const Int& x : s) {
        Int cur = x * prev + prev2;
        prev2 = prev;
        prev = std::move(cur);
    }
    return prev;
}

std::pair<Int, Int> continuant_pair(const IntSeq& s) {
    // Column (K(b1..bk), K(b0..bk))^t as the product of the matrices
    // [[0,1],[1,b_j]] applied to (1,0)^t, seeded with b_{-1} = 0 and folded
    // from the back of the sequence.
    Int u = 0; // A(0) * (1,0)^t = (0,1)^t
    Int v = 1;
    for (auto it = s.elements().rbegin(); it != s.elements().rend(); ++it) {
        Int nu = v;
        Int nv = u + (*it) * v;
        u = std::move(nu);
        v = std::move(nv);
    }
    return {u, v};
}

ProjRational cf_eval(const IntSeq& s) {
    // Fold from the right starting at 1/0 = inf; each step is a_i + 1/r.
    Int num = 1;
    Int den = 0;
    for (auto it = s.elements().rbegin(); it != s.elements().rend(); ++it) {
        // 1/r
        std::swap(num, den);
        // a + r
        num += *it * den;
    }
    return ProjRational(num, den);
}

IntSeq cf_expand_odd(const Int& p, const Int& q) {
    if (q < 1 || p < q || gcd(p, q) != 1) {
        throw GeometryError("cf_expand_odd: requires p >= q >= 1 with gcd(p,q) = 1");
    }
    std::vector<Int> regular;
    Int a = p;
    Int b = q;
    while (b != 0) {
        regular.push_back(a / b);
        Int r = a % b;
        a = b;
        b = r;
    }
    if (regular.size() % 2 == 0) {
        // [..., a] -> [..., a-1, 1]; the regular tail is >= 2 here.
        Int last = regular.back();
        regular.back() = last - 1;
        regular.push_back(1);
    }
    return IntSeq(std::move(regular));
}

} // namespace lattrig
