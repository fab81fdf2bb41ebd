#ifndef CARK_PELL_HPP
#define CARK_PELL_HPP

#include <utility>

#include "cark/errors.hpp"
#include "cark/form.hpp"
#include "cark/integer.hpp"
#include "cark/psl2.hpp"

namespace cark {

/// Positive solution (x, y) of x^2 - D y^2 = 4.
struct PellSolution {
  Int x;
  Int y;

  friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

inline bool solves_pell4(const Int& delta, const PellSolution& s) {
  return s.x * s.x - delta * s.y * s.y == 4;
}

namespace detail {

/// Product of the rho matrices once around the cycle of a reduced form g.
inline ProjMat cycle_product(const Form& g) {
  const Int delta = discriminant(g);
  const Int root = isqrt(delta);
  ProjMat u;
  Form h = g;
  do {
    const Int t = t_for(h, delta, root);
    h = rho_with(h, t);
    u = u * rho_matrix_for(t);
  } while (!(h == g));
  return u;
}

}  // namespace detail

/*
 * Fundamental solution of x^2 - D y^2 = 4 (least y >= 1). Walks the cycle of
 * the principal form of discriminant D; the product of the reduction matrices
 * is a generator of its automorphism group, and an automorphism of (a, b, c)
 * reads [(x - b y)/2, -c y; a y, (x + b y)/2].
 */
inline PellSolution pell4_fundamental(const Int& delta) {
  require_indefinite_discriminant(delta);
  const Int parity = mod_floor(delta, 2);
  const Form principal{1, parity, (parity - delta) / 4};
  const Form g = reduce(principal).form;
  const ProjMat u = detail::cycle_product(g);
  PellSolution out{u.trace(), abs(Int(u.r() / g.a))};
  if (!solves_pell4(delta, out))
    throw std::logic_error("cycle product is not an automorphism");
  return out;
}

/// [(x - b y)/2, -c y; a y, (x + b y)/2], which fixes f.
inline ProjMat automorphism_from_solution(const Form& f, const PellSolution& s) {
  const Int delta = discriminant(f);
  if (!solves_pell4(delta, s))
    throw DomainError("(" + s.x.str() + "," + s.y.str() + ") does not solve x^2 - " +
                      delta.str() + " y^2 = 4");
  const Int by = f.b * s.y;
  if (mod_floor(s.x - by, 2) != 0)
    throw DomainError("Pell solution has the wrong parity for " + format(f));
  return {(s.x - by) / 2, -f.c * s.y, f.a * s.y, (s.x + by) / 2};
}

/// Generator of Aut(f) built from the fundamental Pell solution; its
/// lower-left entry has the sign of a.
inline ProjMat fundamental_automorphism(const Form& f) {
  require_primitive_indefinite(f);
  return automorphism_from_solution(f, pell4_fundamental(discriminant(f)));
}

/// f_M = sgn(p+s)/gcd(q, s-p, r) * (r, s-p, -q), the homogenized fixed-point
/// equation of M.
inline Form matrix_to_form(const ProjMat& m) {
  require_hyperbolic(m);
  const Int g = gcd(gcd(m.q(), m.s() - m.p()), m.r());
  // trace > 0 after normalization, so sgn(p+s) = 1
  return {m.r() / g, (m.s() - m.p()) / g, -m.q() / g};
}

/// The two fundamental automorphisms M and M^-1 of f. The first maps back to
/// f under matrix_to_form, the second to -f.
inline std::pair<ProjMat, ProjMat> form_to_matrices(const Form& f) {
  ProjMat m = fundamental_automorphism(f);
  ProjMat inv = inverse(m);
  return {std::move(m), std::move(inv)};
}

}  // namespace cark

#endif
