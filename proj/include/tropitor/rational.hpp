#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "tropitor/errors.hpp"

namespace tropitor {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Parses "p", "-p" or "p/q" (q > 0 after normalization).
Rat parse_rat(const std::string& s);

// Canonical "p/q" form: q > 0, gcd(p,q) = 1, "p" when q == 1.
std::string rat_str(const Rat& q);

// Smallest non-negative integer w with w*w >= x. Requires x >= 0.
Int ceil_sqrt(const Rat& x);

inline Rat dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace tropitor
