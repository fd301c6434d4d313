#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace segre {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exponents, pole orders and other grading indices.
using Exp = std::int64_t;

// Exact rational from "p" or "p/q" with optional sign on either part.
// Throws ParseError on anything else, including q = 0.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise. Inverse of parse_rational.
std::string to_string(const Rational& value);

// Generalized binomial coefficient over the integers:
//   k < 0 -> 0, k = 0 -> 1, k > 0 -> n(n-1)...(n-k+1)/k!.
// Integer-valued for every integer n, negative n included.
Int binomial(Exp n, Exp k);

}  // namespace segre
