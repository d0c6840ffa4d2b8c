#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace affnc {

using Rational = boost::multiprecision::cpp_rational;

// "p/q" with q omitted when it is 1.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

using RationalRow = std::vector<Rational>;
using RationalMatrix = std::vector<RationalRow>;

inline bool is_integer(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

}  // namespace affnc
