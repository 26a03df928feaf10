#include "graphflow/rational.hpp"

#include <cctype>
#include <sstream>

namespace graphflow {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) return std::nullopt;

  Rational value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    boost::multiprecision::cpp_int d(den);
    if (d == 0) return std::nullopt;
    value = Rational(boost::multiprecision::cpp_int(num), d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (frac.empty()) frac = "0";
    if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;
    boost::multiprecision::cpp_int scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    value = Rational(boost::multiprecision::cpp_int(whole + frac), scale);
  } else {
    if (!all_digits(s)) return std::nullopt;
    value = Rational(boost::multiprecision::cpp_int(s));
  }
  return negative ? Rational(-value) : value;
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

}  // namespace graphflow
