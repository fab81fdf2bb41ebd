#ifndef CARK_FORM_HPP
#define CARK_FORM_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "cark/errors.hpp"
#include "cark/integer.hpp"
#include "cark/psl2.hpp"

namespace cark {

/// Integral binary quadratic form a x^2 + b x y + c y^2.
struct Form {
  Int a;
  Int b;
  Int c;

  friend bool operator==(const Form&, const Form&) = default;
  friend bool operator<(const Form& x, const Form& y) {
    return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
  }
};

inline std::string format(const Form& f) {
  return f.a.str() + "," + f.b.str() + "," + f.c.str();
}

/// "A,B,C".
inline Form parse_form(std::string_view text) {
  auto parts = detail::split(text, ',');
  if (parts.size() != 3)
    throw ParseError("form must be 'A,B,C', got '" + std::string(text) + "'");
  return {parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2])};
}

inline Int discriminant(const Form& f) { return f.b * f.b - 4 * f.a * f.c; }

inline Int content(const Form& f) { return gcd(gcd(f.a, f.b), f.c); }

inline bool is_primitive_form(const Form& f) { return content(f) == 1; }

inline Form negate(const Form& f) { return {-f.a, -f.b, -f.c}; }

inline void require_indefinite(const Form& f) {
  require_indefinite_discriminant(discriminant(f));
}

inline void require_primitive_indefinite(const Form& f) {
  require_indefinite(f);
  if (!is_primitive_form(f))
    throw DomainError("form " + format(f) + " is not primitive");
}

/// f(p x + q y, r x + s y) for u = [p q; r s].
inline Form act(const Form& f, const ProjMat& u) {
  const Int& p = u.p();
  const Int& q = u.q();
  const Int& r = u.r();
  const Int& s = u.s();
  return {f.a * p * p + f.b * p * r + f.c * r * r,
          2 * f.a * p * q + f.b * (p * s + q * r) + 2 * f.c * r * s,
          f.a * q * q + f.b * q * s + f.c * s * s};
}

namespace detail {

// Gauss: |sqrt(D) - 2|a|| < b < sqrt(D), decided with integer squares only.
// D is never a square, so no boundary case is attained.
inline bool reduced_for(const Form& f, const Int& delta) {
  if (f.b <= 0 || f.b * f.b >= delta) return false;
  const Int twice_a = 2 * abs(f.a);
  const Int low = twice_a - f.b;  // need low < sqrt(D)
  if (low > 0 && low * low >= delta) return false;
  const Int high = twice_a + f.b;  // need sqrt(D) < high
  return high * high > delta;
}

inline Int t_for(const Form& f, const Int& delta, const Int& root) {
  if (f.c == 0) throw DomainError("reduction step undefined for c = 0");
  const Int abs_c = abs(f.c);
  Int t = f.c * f.c >= delta ? floor_div(f.b, 2 * abs_c)
                             : floor_div(root + f.b, 2 * abs_c);
  return f.c < 0 ? Int(-t) : t;
}

inline Form rho_with(const Form& f, const Int& t) {
  return {f.c, 2 * f.c * t - f.b, f.c * t * t - f.b * t + f.a};
}

/// S (RS)^t = [0 -1; 1 t].
inline ProjMat rho_matrix_for(const Int& t) { return {0, -1, 1, t}; }

/// Closed rho-orbit of a reduced form; primitivity is not required.
inline std::vector<Form> rho_orbit(const Form& reduced) {
  const Int delta = discriminant(reduced);
  const Int root = isqrt(delta);
  std::vector<Form> out{reduced};
  Form g = rho_with(reduced, t_for(reduced, delta, root));
  while (!(g == reduced)) {
    out.push_back(g);
    g = rho_with(g, t_for(g, delta, root));
  }
  return out;
}

}  // namespace detail

inline bool is_reduced(const Form& f) {
  const Int delta = discriminant(f);
  require_indefinite_discriminant(delta);
  return detail::reduced_for(f, delta);
}

/// Exponent t(f) of the reduction operator rho(f) = S (RS)^t.
inline Int t_of(const Form& f) {
  const Int delta = discriminant(f);
  require_indefinite_discriminant(delta);
  return detail::t_for(f, delta, isqrt(delta));
}

/// The matrix S (RS)^t(f) = [0 -1; 1 t(f)].
inline ProjMat rho_matrix(const Form& f) { return detail::rho_matrix_for(t_of(f)); }

/// One reduction step: act(f, S (RS)^t) = (c, 2ct - b, ct^2 - bt + a).
inline Form rho(const Form& f) { return detail::rho_with(f, t_of(f)); }

struct Reduction {
  Form form;
  ProjMat transform;  // form == act(input, transform)
  std::size_t steps = 0;
};

inline Reduction reduce(const Form& f) {
  require_primitive_indefinite(f);
  const Int delta = discriminant(f);
  const Int root = isqrt(delta);
  Reduction out{f, ProjMat::identity(), 0};
  while (!detail::reduced_for(out.form, delta)) {
    const Int t = detail::t_for(out.form, delta, root);
    out.form = detail::rho_with(out.form, t);
    out.transform = out.transform * detail::rho_matrix_for(t);
    ++out.steps;
  }
  return out;
}

/*
 * The reduced forms of a class in rho order, rotated so the lexicographically
 * least (a, b, c) comes first. Two cycles are equal iff their classes are.
 */
class Cycle {
 public:
  /// Orbit must be closed under rho, in rho order.
  explicit Cycle(std::vector<Form> orbit) : forms_(std::move(orbit)) {
    if (forms_.empty()) throw DomainError("empty cycle");
    auto least = std::min_element(forms_.begin(), forms_.end());
    std::rotate(forms_.begin(), least, forms_.end());
  }

  const std::vector<Form>& forms() const& { return forms_; }
  std::vector<Form> forms() && { return std::move(forms_); }
  std::size_t size() const { return forms_.size(); }
  const Form& front() const { return forms_.front(); }
  bool contains(const Form& f) const {
    return std::find(forms_.begin(), forms_.end(), f) != forms_.end();
  }
  bool is_primitive() const { return is_primitive_form(forms_.front()); }

  friend bool operator==(const Cycle&, const Cycle&) = default;

 private:
  std::vector<Form> forms_;
};

inline Cycle cycle(const Form& f) {
  return Cycle(detail::rho_orbit(reduce(f).form));
}

/// Same PSL2(Z) orbit. Both forms must be primitive with equal discriminant.
inline bool equivalent(const Form& f, const Form& g) {
  require_primitive_indefinite(f);
  require_primitive_indefinite(g);
  if (discriminant(f) != discriminant(g))
    throw DomainError("forms " + format(f) + " and " + format(g) +
                      " have different discriminants");
  return cycle(f) == cycle(g);
}

/// (a, -b, c), a representative of the inverse class.
inline Form inverse_class(const Form& f) { return {f.a, -f.b, f.c}; }

inline bool is_ambiguous_class(const Form& f) { return equivalent(f, inverse_class(f)); }

/// The class of f contains -f, i.e. its automorphisms are conjugate to their
/// inverses.
inline bool is_reciprocal_class(const Form& f) { return equivalent(f, negate(f)); }

/// min |f(x, y)| over nonzero integer vectors: the least |a| along the cycle.
inline Int form_minimum(const Form& f) {
  Cycle c = cycle(f);
  Int best = abs(c.front().a);
  for (const Form& g : c.forms()) best = std::min(best, abs(g.a));
  return best;
}

}  // namespace cark

#endif
