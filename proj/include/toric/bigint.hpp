#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace toric {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Floor division: unique q with a = q*b + r, 0 <= r < |b|.
inline Int fdiv(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int fmod_pos(const Int& a, const Int& b) { return a - fdiv(a, b) * b; }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int floor_rat(const Rat& r) {
    return fdiv(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

inline Int ceil_rat(const Rat& r) { return -floor_rat(-r); }

inline std::string to_string(const Int& a) { return a.str(); }

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IntVec add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVec scale(const Int& c, const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline IntVec neg(const IntVec& a) { return scale(Int(-1), a); }

// gcd of all entries, nonnegative; 0 for the zero vector.
inline Int content(const IntVec& a) {
    Int g = 0;
    for (const auto& x : a) g = gcd(g, x);
    return g;
}

}  // namespace toric
