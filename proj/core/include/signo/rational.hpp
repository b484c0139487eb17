// Exact rational scalars and vectors. All library coordinates live here.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "signo/error.hpp"

namespace signo {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;  // kept reduced, denominator > 0
using QVec = std::vector<Rat>;

// "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const Rat& r);
// Accepts the same format, with optional sign. ParseError on anything else or q == 0.
Rat rat_from_string(std::string_view s);

std::string qvec_to_string(const QVec& v);  // "(a, b, c)"

inline int sgn(const Rat& r) { return r.sign(); }

QVec zero_vec(int d);
Rat dot(const QVec& a, const QVec& b);  // DimensionMismatch on length clash
QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec scale(const Rat& c, const QVec& v);
QVec neg(const QVec& v);
bool is_zero(const QVec& v);

}  // namespace signo
