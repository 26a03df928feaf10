#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace graphflow {

/// Exact rational scalar; chains built from rational entries keep an exact
/// matrix alongside the double view, and the linear solves run on it.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(double x) { return x; }

inline double scalar_abs(double x) { return x < 0 ? -x : x; }
inline Rational scalar_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// Parses "a/b", an integer, or a plain decimal ("0.25" -> 1/4) exactly.
std::optional<Rational> parse_rational(const std::string& text);

std::string rational_to_string(const Rational& r);

}  // namespace graphflow
