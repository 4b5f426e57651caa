#pragma once

// Exact scalars. Everything in voacert is computed over Q; there is no
// floating point anywhere in the library.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace voacert {

using Rational = mpq_class;
using Integer = mpz_class;

/// num / den in lowest terms. Never build an mpq_class from two integers directly.
inline Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on bad input or q = 0.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  Integer num, den = 1;
  auto parse_int = [](const std::string& part, Integer& out) {
    if (part.empty() || out.set_str(part, 10) != 0)
      throw std::invalid_argument("malformed rational literal");
  };
  if (slash == std::string::npos) {
    parse_int(s, num);
  } else {
    parse_int(s.substr(0, slash), num);
    parse_int(s.substr(slash + 1), den);
    if (den == 0) throw std::invalid_argument("zero denominator in rational literal");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Non-negative residue of an integer modulo m > 0.
inline long mod_floor(const Integer& a, long m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r.get_si();
}

}  // namespace voacert
