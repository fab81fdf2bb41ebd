#ifndef CARK_INTEGER_HPP
#define CARK_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "cark/errors.hpp"

namespace cark {

using Int = boost::multiprecision::cpp_int;

inline int sign(const Int& v) { return v.sign(); }

inline Int abs(const Int& v) { return v < 0 ? Int(-v) : v; }

inline Int gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

/// floor(sqrt(n)) for n >= 0.
inline Int isqrt(const Int& n) {
  if (n < 0) throw DomainError("isqrt of a negative integer");
  return boost::multiprecision::sqrt(n);
}

inline bool is_square(const Int& n) {
  if (n < 0) return false;
  Int r = isqrt(n);
  return r * r == n;
}

/// Quotient rounded toward negative infinity; d != 0.
inline Int floor_div(const Int& n, const Int& d) {
  Int q;
  Int r;
  boost::multiprecision::divide_qr(n, d, q, r);
  if (r != 0 && ((r < 0) != (d < 0))) --q;
  return q;
}

/// Non-negative residue of n modulo |d|.
inline Int mod_floor(const Int& n, const Int& d) {
  Int r = n % d;
  if (r < 0) r += abs(d);
  return r;
}

/// Valid indefinite discriminants: positive, non-square, congruent to 0 or 1
/// mod 4.
inline bool is_indefinite_discriminant(const Int& delta) {
  if (delta <= 0) return false;
  Int r = mod_floor(delta, 4);
  if (r != 0 && r != 1) return false;
  return !is_square(delta);
}

inline void require_indefinite_discriminant(const Int& delta) {
  if (!is_indefinite_discriminant(delta))
    throw DomainError("discriminant " + delta.str() +
                      " is not a positive non-square congruent to 0,1 mod 4");
}

/// Strict decimal: optional leading '-', then one or more digits.
inline Int parse_int(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) throw ParseError("empty integer in '" + std::string(text) + "'");
  for (char ch : digits)
    if (ch < '0' || ch > '9')
      throw ParseError("not a decimal integer: '" + std::string(text) + "'");
  return Int(std::string(text));
}

inline std::uint64_t to_u64(const Int& v, const char* what) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
    throw DomainError(std::string(what) + " does not fit in 64 bits");
  return v.convert_to<std::uint64_t>();
}

/// Natural log of a positive integer, valid far beyond the double range.
inline double log_of(const Int& v) {
  if (v <= 0) throw DomainError("log of a non-positive integer");
  std::size_t bits = boost::multiprecision::msb(v) + 1;
  if (bits <= 1000) return std::log(v.convert_to<double>());
  std::size_t shift = bits - 64;
  Int top = v >> shift;
  return std::log(top.convert_to<double>()) +
         static_cast<double>(shift) * std::log(2.0);
}

}  // namespace cark

#endif
