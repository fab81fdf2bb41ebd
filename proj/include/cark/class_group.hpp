#ifndef CARK_CLASS_GROUP_HPP
#define CARK_CLASS_GROUP_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "cark/errors.hpp"
#include "cark/form.hpp"
#include "cark/integer.hpp"
#include "cark/necklace.hpp"
#include "cark/pell.hpp"

namespace cark {

namespace detail {

// Reduced forms (a, b, c) with this b: a c = (b^2 - D)/4, found by trial
// division of (D - b^2)/4.
inline void reduced_forms_for_b(const Int& delta, const Int& b, std::vector<Form>& out) {
  const Int n = (delta - b * b) / 4;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    const Int e = n / d;
    for (const Int& a : {d, e}) {
      for (int s : {1, -1}) {
        Form f{s * a, b, -s * (n / a)};
        if (reduced_for(f, delta)) out.push_back(std::move(f));
      }
      if (d == e) break;
    }
  }
}

}  // namespace detail

/// Every reduced form of discriminant D, primitive or not, sorted.
/// `jobs` threads split the admissible b values; the result does not depend on it.
inline std::vector<Form> reduced_forms(const Int& delta, unsigned jobs = 1) {
  require_indefinite_discriminant(delta);
  const Int root = isqrt(delta);
  std::vector<Int> bs;
  for (Int b = mod_floor(delta, 2) == 0 ? 2 : 1; b <= root; b += 2) bs.push_back(b);

  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(bs.size(), 1))));
  std::vector<std::vector<Form>> parts(jobs);
  if (jobs == 1) {
    for (const Int& b : bs) detail::reduced_forms_for_b(delta, b, parts[0]);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned j = 0; j < jobs; ++j)
      workers.emplace_back([&, j] {
        for (std::size_t i = j; i < bs.size(); i += jobs)
          detail::reduced_forms_for_b(delta, bs[i], parts[j]);
      });
  }
  std::vector<Form> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct DiscriminantReport {
  Int delta;
  std::vector<Form> reduced_forms;
  std::vector<Cycle> cycles;  // all cycles, ordered by canonical first form
  std::size_t class_number = 0;  // primitive cycles only
};

inline DiscriminantReport discriminant_report(const Int& delta, unsigned jobs = 1) {
  DiscriminantReport report;
  report.delta = delta;
  report.reduced_forms = reduced_forms(delta, jobs);
  std::vector<bool> seen(report.reduced_forms.size(), false);
  auto index_of = [&](const Form& f) {
    auto it = std::lower_bound(report.reduced_forms.begin(), report.reduced_forms.end(), f);
    if (it == report.reduced_forms.end() || !(*it == f))
      throw std::logic_error("rho left the set of reduced forms");
    return static_cast<std::size_t>(it - report.reduced_forms.begin());
  };
  for (std::size_t i = 0; i < report.reduced_forms.size(); ++i) {
    if (seen[i]) continue;
    Cycle c(detail::rho_orbit(report.reduced_forms[i]));
    for (const Form& g : c.forms()) seen[index_of(g)] = true;
    if (c.is_primitive()) ++report.class_number;
    report.cycles.push_back(std::move(c));
  }
  return report;
}

inline std::size_t class_number(const Int& delta, unsigned jobs = 1) {
  return discriminant_report(delta, jobs).class_number;
}

/// Canonical first forms of the primitive classes of discriminant D.
inline std::vector<Form> class_representatives(const Int& delta, unsigned jobs = 1) {
  std::vector<Form> reps;
  for (const Cycle& c : discriminant_report(delta, jobs).cycles)
    if (c.is_primitive()) reps.push_back(c.front());
  return reps;
}

struct TraceEntry {
  Int delta;
  Int y;                               // tau^2 - 4 = delta * y^2
  std::uint64_t power = 1;             // the trace-tau element is M_f^power
  std::vector<Form> representatives;   // one per class of discriminant delta
  std::vector<Necklace> carks;         // cark of the trace-tau element per class
};

/*
 * Carks of absolute trace tau, grouped by the factorizations
 * tau^2 - 4 = D y^2 with D a valid discriminant, ordered by increasing y.
 * For each class of discriminant D the trace-tau element is a power of the
 * fundamental automorphism; its cark repeats the fundamental word.
 */
inline std::vector<TraceEntry> carks_of_trace(const Int& tau, unsigned jobs = 1) {
  if (tau <= 2) throw DomainError("trace must be at least 3 for hyperbolic elements");
  const Int n = tau * tau - 4;
  std::vector<TraceEntry> out;
  for (Int y = 1; y * y <= n; ++y) {
    const Int y2 = y * y;
    if (n % y2 != 0) continue;
    const Int delta = n / y2;
    if (!is_indefinite_discriminant(delta)) continue;
    TraceEntry entry;
    entry.delta = delta;
    entry.y = y;
    // traces of M^k follow t_{k+1} = x0 t_k - t_{k-1}
    const Int x0 = pell4_fundamental(delta).x;
    Int prev = 2;
    Int cur = x0;
    while (cur < tau) {
      Int next = x0 * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
      ++entry.power;
    }
    if (cur != tau) throw std::logic_error("trace is not a power of the fundamental unit");
    entry.representatives = class_representatives(delta, jobs);
    for (const Form& f : entry.representatives) {
      std::string w;
      const std::string base = cark_of_form(f).word();
      for (std::uint64_t k = 0; k < entry.power; ++k) w += base;
      entry.carks.emplace_back(w);
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace cark

#endif
