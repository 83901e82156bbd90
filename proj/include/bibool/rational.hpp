#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace bibool {

// Exact scalar used everywhere in the library. cpp_rational keeps values in
// lowest terms with a positive denominator, which is exactly the invariant we
// need; no floating point anywhere in the core.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Integer(s));
  Integer num(s.substr(0, slash));
  Integer den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

// "p/q", or just "p" when q == 1.
inline std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return Rational(0);
  Integer num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return Rational(num, den);
}

inline Rational rational_pow(const Rational& base, int e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("0 to a negative power");
    return Rational(1) / rational_pow(base, -e);
  }
  Rational acc(1), b = base;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

}  // namespace bibool
