#ifndef CARK_CLI_HPP
#define CARK_CLI_HPP

#include <algorithm>
#include <cstddef>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "cark/cark.hpp"

namespace cark::cli {

inline constexpr std::size_t kMaxLyndonLength = 40;

namespace detail {

using Json = nlohmann::ordered_json;

inline std::string fmt_double(double v) {
  std::ostringstream os;
  os << std::setprecision(15) << v;
  return os.str();
}

inline bool looks_binary(const std::string& s) {
  return !s.empty() && s.find_first_not_of("01") == std::string::npos;
}

inline std::size_t comma_count(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), ','));
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

inline Json forms_json(std::span<const Form> forms) {
  Json arr = Json::array();
  for (const Form& f : forms) arr.push_back(format(f));
  return arr;
}

struct Options {
  bool json = false;
  unsigned jobs = 1;
  std::size_t depth = 2;
  std::size_t max = 0;
  std::string arg;
  std::string kind;
  std::string number;
};

inline void cmd_reduce(const Options& o, std::ostream& out) {
  const Form f = parse_form(o.arg);
  const Reduction r = reduce(f);
  if (o.json) {
    out << Json{{"input", format(f)}, {"reduced", format(r.form)}, {"steps", r.steps},
                {"transform", format(r.transform)}}.dump() << "\n";
    return;
  }
  out << "reduced: " << format(r.form) << " steps: " << r.steps << "\n";
}

inline void cmd_cycle(const Options& o, std::ostream& out) {
  const Cycle c = cycle(parse_form(o.arg));
  if (o.json) {
    out << Json{{"cycle", forms_json(c.forms())}}.dump() << "\n";
    return;
  }
  for (const Form& g : c.forms()) out << format(g) << "\n";
}

inline void cmd_pell(const Options& o, std::ostream& out) {
  const PellSolution s = pell4_fundamental(parse_int(o.arg));
  if (o.json) {
    out << Json{{"x", s.x.str()}, {"y", s.y.str()}}.dump() << "\n";
    return;
  }
  out << "x=" << s.x << " y=" << s.y << "\n";
}

inline void cmd_form2mat(const Options& o, std::ostream& out) {
  const auto [m, inv] = form_to_matrices(parse_form(o.arg));
  if (o.json) {
    out << Json{{"matrices", {format(m), format(inv)}}}.dump() << "\n";
    return;
  }
  out << format(m) << "\n" << format(inv) << "\n";
}

inline void cmd_mat2form(const Options& o, std::ostream& out) {
  const Form f = matrix_to_form(parse_matrix(o.arg));
  if (o.json) {
    out << Json{{"form", format(f)}}.dump() << "\n";
    return;
  }
  out << format(f) << "\n";
}

inline void cmd_mat2word(const Options& o, std::ostream& out) {
  const WordDecomposition d = matrix_to_word(parse_matrix(o.arg));
  if (o.json) {
    out << Json{{"word", format(d.word)}, {"conjugator", format(d.conjugator)}}.dump() << "\n";
    return;
  }
  out << "word: " << format(d.word) << "\n";
  out << "conjugator: " << format(d.conjugator) << "\n";
}

inline void cmd_word2mat(const Options& o, std::ostream& out) {
  const BlockWord w = parse_word(o.arg);
  const ProjMat m = word_to_matrix(w);
  if (o.json) {
    out << Json{{"matrix", format(m)}, {"generators", generator_string(w)}}.dump() << "\n";
    return;
  }
  out << format(m) << "\n";
}

inline Necklace necklace_arg(const std::string& arg) {
  if (looks_binary(arg)) return Necklace(arg);
  return cark_of_form(parse_form(arg));
}

inline void cmd_cark(const Options& o, std::ostream& out) {
  const Necklace n = necklace_arg(o.arg);
  if (o.json) {
    require_cark(n);
    out << to_json(n).dump() << "\n";
    return;
  }
  out << to_dot(n, o.depth);
}

inline void cmd_invariants(const Options& o, std::ostream& out) {
  ProjMat m;
  if (comma_count(o.arg) == 2) {
    m = fundamental_automorphism(parse_form(o.arg));
  } else {
    m = parse_matrix(o.arg);
  }
  const CarkInvariants inv = invariants_of(m);
  const Form f = matrix_to_form(m);
  const Int delta = discriminant(f);
  const Int y = isqrt(inv.delta_matrix / delta);
  const Int minimum = form_minimum(f);
  const double mu = markoff_value(f);
  if (o.json) {
    out << Json{{"tau", inv.trace.str()},
                {"delta_matrix", inv.delta_matrix.str()},
                {"discriminant", delta.str()},
                {"y", y.str()},
                {"l_c", inv.spine_length},
                {"form_minimum", minimum.str()},
                {"l_h", inv.hyperbolic_length},
                {"alpha", inv.multiplier},
                {"modulus", inv.modulus},
                {"mu", mu}}.dump() << "\n";
    return;
  }
  out << "tau: " << inv.trace << "\n";
  out << "tau^2-4: " << inv.delta_matrix << "\n";
  out << "discriminant: " << delta << "\n";
  out << "y: " << y << "\n";
  out << "l_c: " << inv.spine_length << "\n";
  out << "m(f): " << minimum << "\n";
  out << "l_h: " << fmt_double(inv.hyperbolic_length) << "\n";
  out << "alpha: " << fmt_double(inv.multiplier) << "\n";
  out << "modulus: " << fmt_double(inv.modulus) << "\n";
  out << "mu: " << fmt_double(mu) << "\n";
}

inline void cmd_markoff(const Options& o, std::ostream& out) {
  const Form f = parse_form(o.arg);
  const double mu = markoff_value(f);
  const Int minimum = form_minimum(f);
  if (o.json) {
    out << Json{{"minimum", minimum.str()}, {"mu", mu}}.dump() << "\n";
    return;
  }
  out << "m=" << minimum << " mu=" << fmt_double(mu) << "\n";
}

inline void cmd_symmetry(const Options& o, std::ostream& out) {
  Json doc;
  if (looks_binary(o.arg)) {
    const Necklace n(o.arg);
    require_cark(n);
    doc["necklace"] = n.word();
    doc["primitive"] = is_primitive_necklace(n);
    doc["reversal_symmetric"] = is_reversal_symmetric(n);
    doc["reversal_swap_symmetric"] = is_reversal_swap_symmetric(n);
    doc["reverse"] = reverse_r(n).word();
    doc["swap"] = swap_m(n).word();
  } else {
    const Form f = parse_form(o.arg);
    doc["form"] = format(f);
    doc["ambiguous"] = is_ambiguous_class(f);
    doc["reciprocal"] = is_reciprocal_class(f);
    doc["inverse"] = format(cycle(inverse_class(f)).front());
    doc["necklace"] = cark_of_form(f).word();
  }
  if (o.json) {
    out << doc.dump() << "\n";
    return;
  }
  for (const auto& [key, value] : doc.items()) {
    out << key << ": ";
    if (value.is_boolean())
      out << yes_no(value.get<bool>());
    else
      out << value.get<std::string>();
    out << "\n";
  }
}

inline void cmd_classnum(const Options& o, std::ostream& out) {
  const DiscriminantReport rep = discriminant_report(parse_int(o.arg), o.jobs);
  if (o.json) {
    Json cycles = Json::array();
    for (const Cycle& c : rep.cycles)
      cycles.push_back(Json{{"primitive", c.is_primitive()}, {"forms", forms_json(c.forms())}});
    out << Json{{"delta", rep.delta.str()}, {"class_number", rep.class_number},
                {"reduced_forms", rep.reduced_forms.size()}, {"cycles", cycles}}.dump()
        << "\n";
    return;
  }
  out << "class_number: " << rep.class_number << "\n";
  for (const Cycle& c : rep.cycles) {
    out << (c.is_primitive() ? "primitive" : "imprimitive");
    for (const Form& g : c.forms()) out << " " << format(g);
    out << "\n";
  }
}

inline void cmd_trace_list(const Options& o, std::ostream& out) {
  const std::vector<TraceEntry> entries = carks_of_trace(parse_int(o.arg), o.jobs);
  if (o.json) {
    Json arr = Json::array();
    for (const TraceEntry& e : entries) {
      Json carks = Json::array();
      for (const Necklace& n : e.carks) carks.push_back(n.word());
      arr.push_back(Json{{"delta", e.delta.str()}, {"y", e.y.str()}, {"power", e.power},
                         {"representatives", forms_json(e.representatives)},
                         {"carks", carks}});
    }
    out << arr.dump() << "\n";
    return;
  }
  for (const TraceEntry& e : entries) {
    out << "delta=" << e.delta << " y=" << e.y << " power=" << e.power
        << " classes=" << e.representatives.size() << "\n";
    for (std::size_t i = 0; i < e.representatives.size(); ++i)
      out << "  " << format(e.representatives[i]) << " " << e.carks[i].word() << "\n";
  }
}

inline CountKind count_kind(const std::string& s) {
  if (s == "necklace") return CountKind::Necklace;
  if (s == "bracelet") return CountKind::Bracelet;
  if (s == "aperiodic" || s == "lyndon") return CountKind::Aperiodic;
  throw ParseError("count kind must be necklace, bracelet or aperiodic, got '" + s + "'");
}

inline std::uint64_t length_arg(const std::string& s) {
  return to_u64(parse_int(s), "length");
}

inline void cmd_count(const Options& o, std::ostream& out) {
  const CountKind kind = count_kind(o.kind);
  if (o.number.empty() && o.max == 0)
    throw ParseError("count needs a length or --max N");
  if (!o.number.empty()) {
    const Int v = count(kind, length_arg(o.number));
    if (o.json) {
      out << Json{{"n", o.number}, {"count", v.str()}}.dump() << "\n";
      return;
    }
    out << v << "\n";
    return;
  }
  const auto rows = count_table(kind, o.max);
  if (o.json) {
    Json arr = Json::array();
    for (const CountRow& r : rows) arr.push_back(Json{{"n", r.n}, {"count", r.value.str()}});
    out << arr.dump() << "\n";
    return;
  }
  for (const CountRow& r : rows) out << r.n << "\t" << r.value << "\n";
}

inline void cmd_lyndon(const Options& o, std::ostream& out) {
  const std::uint64_t n = length_arg(o.arg);
  if (n == 0 || n > kMaxLyndonLength)
    throw DomainError("lyndon length must be between 1 and " + std::to_string(kMaxLyndonLength));
  if (o.json) {
    out << Json(lyndon_enumerate(n)).dump() << "\n";
    return;
  }
  for_each_lyndon(n, [&out](const std::string& w) { out << w << "\n"; });
}

}  // namespace detail

/*
 * Command-line entry point. args excludes the program name.
 * Exit codes: 0 success, 1 domain error, 2 malformed input or usage.
 */
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::Options;
  CLI::App app{"Quadratic forms, modular group words and carks"};
  app.name("cark");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--jobs", o.jobs, "worker threads for class enumeration")->check(CLI::Range(1U, 256U));

  struct Entry {
    const char* name;
    const char* help;
    const char* arg_name;
    void (*fn)(const Options&, std::ostream&);
  };
  const std::vector<Entry> single_arg = {
      {"reduce", "Gauss-reduce a form A,B,C", "form", detail::cmd_reduce},
      {"cycle", "cycle of reduced forms of A,B,C", "form", detail::cmd_cycle},
      {"pell", "fundamental solution of x^2 - D y^2 = 4", "discriminant", detail::cmd_pell},
      {"form2mat", "fundamental automorphisms of A,B,C", "form", detail::cmd_form2mat},
      {"mat2form", "form of a hyperbolic matrix p,q,r,s", "matrix", detail::cmd_mat2form},
      {"mat2word", "block word and conjugator of p,q,r,s", "matrix", detail::cmd_mat2word},
      {"word2mat", "matrix of a block word a1,b1;a2,b2", "word", detail::cmd_word2mat},
      {"cark", "cark of a form or binary necklace (DOT, or JSON with --json)", "form|necklace",
       detail::cmd_cark},
      {"invariants", "cark invariants of a form or matrix", "form|matrix", detail::cmd_invariants},
      {"markoff", "minimum and Markoff value of a form", "form", detail::cmd_markoff},
      {"symmetry", "ambiguity and reciprocity of a form or necklace", "form|necklace",
       detail::cmd_symmetry},
      {"classnum", "reduced cycles and class number of D", "discriminant", detail::cmd_classnum},
      {"trace-list", "carks of a given trace", "trace", detail::cmd_trace_list},
      {"lyndon", "Lyndon words up to length n (n <= 40)", "n", detail::cmd_lyndon},
  };

  void (*chosen)(const Options&, std::ostream&) = nullptr;
  for (const Entry& e : single_arg) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    sub->add_option(e.arg_name, o.arg)->required();
    if (std::string(e.name) == "cark")
      sub->add_option("--depth", o.depth, "Farey branch depth in DOT output");
    sub->callback([&chosen, fn = e.fn] { chosen = fn; });
  }
  CLI::App* count_cmd = app.add_subcommand("count", "number of necklaces, bracelets or aperiodic necklaces");
  count_cmd->add_option("kind", o.kind, "necklace | bracelet | aperiodic")->required();
  count_cmd->add_option("n", o.number, "length");
  count_cmd->add_option("--max", o.max, "print the table for lengths 1..max");
  count_cmd->callback([&chosen] { chosen = detail::cmd_count; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "cark: " << e.what() << "\n";
    return 2;
  }

  try {
    chosen(o, out);
  } catch (const ParseError& e) {
    err << "cark: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "cark: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace cark::cli

#endif
