// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cark/cark.hpp"
#include "oracles.hpp"

namespace {

using cark::Form;
using cark::Int;
using cark::ProjMat;

// Collects failed expectations; keeps the first few messages.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (messages_.size() < 5) messages_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  std::string summary() const {
    std::ostringstream os;
    os << checks_ << " checks";
    if (failures_ != 0) os << ", " << failures_ << " failed";
    if (!notes_.empty()) os << "; " << notes_;
    for (const auto& m : messages_) os << "\n      " << m;
    return os.str();
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::vector<std::string> messages_;
  std::string notes_;
};

std::string str(const Form& f) { return cark::format(f); }

// Successor of a reduced form: (c, b', .) with b' = -b mod 2|c| taken as
// the largest such value below sqrt(delta).
Form oracle_rho(const Form& f) {
  const long long a = oracle::to_ll(f.a), b = oracle::to_ll(f.b), c = oracle::to_ll(f.c);
  const long long delta = b * b - 4 * a * c;
  long long root = static_cast<long long>(std::sqrt(static_cast<double>(delta)));
  while (root * root > delta) --root;
  while ((root + 1) * (root + 1) <= delta) ++root;
  const long long m = 2 * std::llabs(c);
  long long nb = root - (((root + b) % m) + m) % m;  // nb = -b (mod m), nb <= root
  return Form{c, nb, (nb * nb - delta) / (4 * c)};
}

// Orbits of the successor map on the reduced forms of delta.
std::vector<std::vector<Form>> oracle_classes(long long delta, bool primitive_only) {
  const auto forms = oracle::reduced_forms_divisors(delta);
  std::set<Form> seen;
  std::vector<std::vector<Form>> out;
  for (const Form& f : forms) {
    if (seen.count(f)) continue;
    std::vector<Form> orbit;
    Form g = f;
    do {
      orbit.push_back(g);
      seen.insert(g);
      g = oracle_rho(g);
    } while (!(g == f) && orbit.size() <= forms.size());
    if (primitive_only && !cark::is_primitive_form(f)) continue;
    out.push_back(std::move(orbit));
  }
  return out;
}

bool contains(const std::vector<Form>& orbit, const Form& f) {
  return std::find(orbit.begin(), orbit.end(), f) != orbit.end();
}

std::string swap01(std::string w) {
  for (char& ch : w) ch = ch == '0' ? '1' : '0';
  return w;
}

Checker worked_example_chain() {
  Checker k;
  const Form f{1, 7, -1};
  k.expect(cark::discriminant(f) == 53, "discriminant");
  const auto p = cark::pell4_fundamental(53);
  k.expect(p.x == 51 && p.y == 7, "pell4_fundamental(53)");
  const auto [m0, m1] = cark::form_to_matrices(f);
  k.expect(m0 == ProjMat(1, 7, 7, 50), "first matrix " + cark::format(m0));
  k.expect(m1 == ProjMat(-50, 7, 7, -1), "second matrix " + cark::format(m1));
  k.expect(m0 * m0 == ProjMat(50, 357, 357, 2549), "square");
  k.expect(cark::matrix_to_form(m0) == f, "matrix_to_form");
  return k;
}

Checker example_word() {
  Checker k;
  const cark::BlockWord w({{2, 2}, {1, 1}, {7, 5}});
  const ProjMat m = cark::word_to_matrix(w);
  k.expect(m == ProjMat(-38, -195, -91, -467), "product " + cark::format(m));
  k.expect(m.trace() == 505, "trace");
  const Form f{7, 33, -15};
  k.expect(cark::discriminant(f) == 1509, "discriminant");
  k.expect(cark::is_reduced(f), "reduced");
  const auto c = cark::cycle(f);
  const auto n = cark::word_to_necklace(w);
  k.expect(c.size() == 6, "cycle size " + std::to_string(c.size()));
  k.expect(cark::reduced_edge_count(n) == c.size(), "reduced edge count");
  k.expect(cark::cark_of_form(f) == n, "cark of form equals the word's necklace");
  return k;
}

Checker reciprocal_example() {
  Checker k;
  const Form f = cark::matrix_to_form(ProjMat(101, -192, -192, 365));
  k.expect(f == Form{-8, 11, 8}, "matrix_to_form gave " + str(f));
  k.expect(cark::is_reciprocal_class(f), "reciprocal");
  return k;
}

Checker counting_tables() {
  Checker k;
  const std::vector<int> necklaces{2, 3, 4, 6, 8, 14, 20, 36, 60, 108, 188, 352, 632, 1182, 2192};
  const std::vector<int> bracelets{2, 3, 4, 6, 8, 13, 18, 30, 46, 78, 126, 224, 380, 687, 1224};
  const std::vector<int> aperiodic{2, 1, 2, 3, 6, 9, 18, 30, 56, 99, 186, 335, 630, 1161, 2182};
  for (std::uint64_t n = 1; n <= 15; ++n) {
    const std::string at = " n=" + std::to_string(n);
    k.expect(cark::necklace_count(n) == necklaces[n - 1], "N" + at);
    k.expect(cark::bracelet_count(n) == bracelets[n - 1], "B" + at);
    k.expect(cark::aperiodic_count(n) == aperiodic[n - 1], "L" + at);
  }
  for (std::uint64_t n = 1; n <= 64; ++n)
    k.expect(cark::necklace_count_divisor_sum(n) == cark::necklace_count_gcd_sum(n),
             "MacMahon n=" + std::to_string(n));
  return k;
}

Checker lyndon_words() {
  Checker k;
  const std::set<std::string> listed{"0",     "1",     "01",    "001",   "011",
                                     "0001",  "0011",  "0111",  "00001", "00011",
                                     "00101", "00111", "01011", "01111"};
  std::multiset<std::string> got;
  for (const auto& w : cark::lyndon_enumerate(5))
    if (w.size() <= 5) got.insert(w);
  k.expect(got.size() == listed.size(), "count " + std::to_string(got.size()));
  k.expect(std::set<std::string>(got.begin(), got.end()) == listed, "word set");
  return k;
}

Checker figure_facts() {
  Checker k;
  const auto n = cark::cark_of_form({-7, 23, 16});
  k.expect(cark::total_branches(n) == 42, "total branches " + std::to_string(cark::total_branches(n)));
  const Form g{-2377, 10173, 1349}, h{-4027, 8915, 2287};
  k.expect(cark::discriminant(g) == 116316221 && cark::discriminant(h) == 116316221, "pair discriminants");
  k.expect(cark::equivalent(g, cark::inverse_class(h)), "pair are mutually inverse");
  k.expect(cark::equivalent(h, cark::inverse_class(g)), "pair are mutually inverse (swapped)");
  k.expect(cark::is_ambiguous_class({3, 18, -11}), "(3,18,-11) ambiguous");
  for (long long m = 1; m <= 20; ++m) {
    const Form a{-m, m, 1}, b{1, m, -1};
    k.expect(cark::discriminant(a) == m * m + 4 * m && cark::is_ambiguous_class(a), str(a));
    k.expect(cark::discriminant(b) == m * m + 4, "discriminant " + str(b));
    k.expect(cark::is_ambiguous_class(b) && cark::is_reciprocal_class(b), str(b));
  }
  return k;
}

Checker round_trip() {
  Checker k;
  std::size_t forms = 0;
  for (long long d : oracle::discriminants_up_to(2000))
    for (const Form& f : oracle::reduced_forms_divisors(d)) {
      if (!cark::is_primitive_form(f)) continue;
      ++forms;
      const auto [m0, m1] = cark::form_to_matrices(f);
      k.expect(cark::matrix_to_form(m0) == f, "round trip " + str(f));
    }
  k.note(std::to_string(forms) + " forms");
  return k;
}

Checker trace_identity() {
  Checker k;
  for (long long d : oracle::discriminants_up_to(2000)) {
    const auto [x, y] = oracle::pell_continued_fraction(d);
    const auto p = cark::pell4_fundamental(d);
    k.expect(p.x == x && p.y == y, "pell " + std::to_string(d));
    for (const Form& f : oracle::reduced_forms_divisors(d)) {
      if (!cark::is_primitive_form(f)) continue;
      const Int tau = cark::form_to_matrices(f).first.trace();
      k.expect(tau == x && tau * tau - 4 == Int(d) * y * y, "trace " + str(f));
    }
  }
  return k;
}

Checker partition() {
  Checker k;
  std::size_t cycles = 0;
  for (long long d : oracle::discriminants_up_to(5000)) {
    const auto report = cark::discriminant_report(d);
    std::vector<Form> all;
    std::size_t primitive = 0;
    for (const auto& c : report.cycles) {
      const auto& fs = c.forms();
      for (std::size_t i = 0; i < fs.size(); ++i)
        k.expect(oracle_rho(fs[i]) == fs[(i + 1) % fs.size()], "successor in cycle of " + str(fs[0]));
      all.insert(all.end(), fs.begin(), fs.end());
      if (c.is_primitive()) ++primitive;
    }
    cycles += report.cycles.size();
    std::sort(all.begin(), all.end());
    k.expect(all == oracle::reduced_forms_divisors(d), "cycles cover reduced forms once, d=" + std::to_string(d));
    k.expect(primitive == report.class_number &&
                 primitive == oracle_classes(d, true).size(),
             "class number d=" + std::to_string(d));
  }
  k.note(std::to_string(cycles) + " cycles");
  return k;
}

Checker minimum() {
  Checker k;
  std::size_t classes = 0, single_misses = 0;
  for (long long d : oracle::discriminants_up_to(2000)) {
    const long long n = 3 * static_cast<long long>(std::ceil(std::sqrt(static_cast<double>(d))));
    for (const auto& orbit : oracle_classes(d, true)) {
      ++classes;
      long long box = -1, first = -1;
      for (const Form& g : orbit) {
        const long long v =
            oracle::box_min_rows(oracle::to_ll(g.a), oracle::to_ll(g.b), oracle::to_ll(g.c), n);
        if (first < 0) first = v;
        if (box < 0 || v < box) box = v;
      }
      if (first != box) ++single_misses;
      for (const Form& g : orbit) k.expect(cark::form_minimum(g) == box, "minimum " + str(g));
    }
  }
  k.note(std::to_string(classes) + " classes, " + std::to_string(single_misses) +
         " where one representative's box alone misses the minimum");
  return k;
}

Checker symmetries() {
  Checker k;
  std::size_t classes = 0;
  for (long long d : oracle::discriminants_up_to(500)) {
    std::set<std::string> words;
    for (const auto& orbit : oracle_classes(d, true)) {
      ++classes;
      const Form& f = orbit.front();
      const bool ambiguous = contains(orbit, Form{f.c, f.b, f.a});
      const bool reciprocal = contains(orbit, Form{-f.c, f.b, -f.a});
      const auto n = cark::cark_of_form(f);
      const std::string w = n.word();
      const bool reversal_fixed = oracle::least_rotation(oracle::reversed(w)) == oracle::least_rotation(w);
      const bool reversal_swap_fixed =
          oracle::least_rotation(oracle::reversed(swap01(w))) == oracle::least_rotation(w);
      k.expect(words.insert(oracle::least_rotation(w)).second, "distinct necklace " + str(f));
      k.expect(ambiguous == reversal_fixed, "ambiguous vs reversal " + str(f));
      k.expect(reciprocal == reversal_swap_fixed, "reciprocal vs reversal-swap " + str(f));
      k.expect(cark::is_ambiguous_class(f) == ambiguous, "is_ambiguous_class " + str(f));
      k.expect(cark::is_reciprocal_class(f) == reciprocal, "is_reciprocal_class " + str(f));
      k.expect(cark::is_reversal_symmetric(n) == reversal_fixed, "is_reversal_symmetric " + str(f));
      k.expect(cark::is_reversal_swap_symmetric(n) == reversal_swap_fixed,
               "is_reversal_swap_symmetric " + str(f));
    }
  }
  k.note(std::to_string(classes) + " classes");
  return k;
}

Checker floating_invariants() {
  Checker k;
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  std::mt19937 rng(oracle::kSeed);
  double worst_cosh = 0, worst_pi = 0;
  for (int i = 0; i < 1000; ++i) {
    const ProjMat m = cark::conjugate(cark::word_to_matrix(oracle::random_word(rng, 4, 12)),
                                      oracle::random_unimodular(rng, 6));
    const auto inv = cark::invariants_of(m);
    const double half = m.trace().convert_to<double>() / 2;
    const double e1 = std::abs(std::cosh(inv.hyperbolic_length / 2) / half - 1);
    const double e2 = std::abs(std::log(inv.modulus) * std::log(inv.multiplier) - pi2);
    worst_cosh = std::max(worst_cosh, e1);
    worst_pi = std::max(worst_pi, e2);
    k.expect(e1 <= 1e-9, "cosh identity " + cark::format(m));
    k.expect(e2 <= 1e-9, "modulus identity " + cark::format(m));
  }
  const double mu = cark::markoff_value({1, 0, -2});
  k.expect(std::abs(mu - std::sqrt(8.0)) <= 1e-12, "markoff (1,0,-2)");
  std::ostringstream os;
  os << "worst relative cosh error " << worst_cosh << ", worst pi^2 error " << worst_pi;
  k.note(os.str());
  return k;
}

struct Criterion {
  std::string id;
  std::string name;
  double budget_ms;  // 0 for no time limit
  std::function<Checker()> run;
};

bool report(const std::string& id, const std::string& name, bool ok, double ms, double budget_ms,
            const std::string& detail) {
  const bool in_time = budget_ms <= 0 || ms < budget_ms;
  const bool pass = ok && in_time;
  std::printf("%s %-3s %-44s %10.3f ms", pass ? "PASS" : "FAIL", id.c_str(), name.c_str(), ms);
  if (budget_ms > 0) std::printf(" (limit %g ms%s)", budget_ms, in_time ? "" : ", exceeded");
  std::printf("  %s\n", detail.c_str());
  return pass;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const std::vector<Criterion> criteria = {
      {"1", "worked example chain (1,7,-1)", 1, worked_example_chain},
      {"2", "word (2,2)(1,1)(7,5) and form (7,33,-15)", 10, example_word},
      {"3", "reciprocal example (-8,11,8)", 0, reciprocal_example},
      {"4", "necklace, bracelet, aperiodic counts", 100, counting_tables},
      {"5", "Lyndon words up to length 5", 0, lyndon_words},
      {"6", "branch count, inverse pair, ambiguous families", 5000, figure_facts},
      {"7a", "form -> matrix -> form, D <= 2000", 0, round_trip},
      {"7b", "tau^2 - 4 = D y^2, D <= 2000", 0, trace_identity},
      {"7c", "cycles partition reduced forms, D <= 5000", 0, partition},
      {"7d", "form minimum vs box search, D <= 2000", 0, minimum},
      {"7e", "symmetry dictionary, D <= 500", 0, symmetries},
      {"8", "floating invariants", 0, floating_invariants},
  };
  bool all = true;
  double suite7_ms = 0;
  bool suite7_ok = true;
  for (const auto& c : criteria) {
    // The microsecond-scale criteria get one untimed warm-up call.
    if (c.budget_ms > 0 && c.budget_ms <= 10) (void)c.run();
    const auto t0 = clock::now();
    Checker result;
    bool threw = false;
    std::string error;
    try {
      result = c.run();
    } catch (const std::exception& e) {
      threw = true;
      error = e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    const bool ok = !threw && result.ok();
    const std::string detail = threw ? "exception: " + error : result.summary();
    if (c.id[0] == '7') {
      suite7_ms += ms;
      suite7_ok = suite7_ok && ok;
    }
    all = report(c.id, c.name, ok, ms, c.budget_ms, detail) && all;
  }
  all = report("7", "property suites total", suite7_ok, suite7_ms, 60000, "") && all;
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all ? 0 : 1;
}
