#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "ramiq/errors.hpp"

namespace ramiq {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Renders as "p" or "p/q" with q > 0.
std::string to_string(const Rational& r);

// Accepts "p", "p/q", optionally signed. Throws ParseError.
Rational parse_rational(const std::string& s);

}  // namespace ramiq
