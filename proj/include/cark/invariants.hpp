#ifndef CARK_INVARIANTS_HPP
#define CARK_INVARIANTS_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

#include "cark/conjugacy.hpp"
#include "cark/form.hpp"
#include "cark/integer.hpp"
#include "cark/psl2.hpp"

namespace cark {

struct CarkInvariants {
  std::uint64_t spine_length = 0;  // l_c: spine edges, two per word symbol
  Int trace;                       // tau = |tr M|
  Int delta_matrix;                // tau^2 - 4
  double hyperbolic_length = 0;    // l_h = 2 arccosh(tau / 2)
  double multiplier = 0;           // alpha = (tau + sqrt(tau^2 - 4)) / 2
  double modulus = 0;              // exp(pi^2 / ln alpha)
};

namespace detail {

/// ln alpha = arccosh(tau / 2), evaluated without overflow for huge tau.
inline double log_multiplier(const Int& tau) {
  if (boost::multiprecision::msb(tau) < 900) {
    const double t = tau.convert_to<double>();
    return std::acosh(t / 2);
  }
  // alpha = tau * (1 + sqrt(1 - 4/tau^2)) / 2 and 4/tau^2 underflows
  return log_of(tau);
}

}  // namespace detail

inline CarkInvariants invariants_of(const ProjMat& m) {
  require_hyperbolic(m);
  CarkInvariants out;
  out.trace = m.trace();
  out.delta_matrix = out.trace * out.trace - 4;
  out.spine_length = 2 * matrix_to_word(m).word.letter_count();
  const double log_alpha = detail::log_multiplier(out.trace);
  out.hyperbolic_length = 2 * log_alpha;
  out.multiplier = std::exp(log_alpha);
  out.modulus = std::exp(std::numbers::pi * std::numbers::pi / log_alpha);
  return out;
}

/// sqrt(D) / m(f), with m(f) the minimum of |f| on nonzero integer vectors.
inline double markoff_value(const Form& f) {
  const Int minimum = form_minimum(f);
  const Int delta = discriminant(f);
  const double root = boost::multiprecision::msb(delta) < 1000
                          ? std::sqrt(delta.convert_to<double>())
                          : std::exp(0.5 * log_of(delta));
  return root / minimum.convert_to<double>();
}

}  // namespace cark

#endif
