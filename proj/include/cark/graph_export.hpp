#ifndef CARK_GRAPH_EXPORT_HPP
#define CARK_GRAPH_EXPORT_HPP

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cark/necklace.hpp"
#include "cark/pell.hpp"

namespace cark {

namespace detail {

inline void emit_branch(std::ostream& os, const std::string& parent, std::size_t index,
                        const std::string& path, std::size_t depth, const char* side) {
  // midpoint vertex, then (depth permitting) a trivalent vertex with two children
  const std::string mid = "b" + std::to_string(index) + "x" + path;
  os << "  " << mid << " [shape=circle, label=\"x\", width=0.15, comment=\"" << side << "\"];\n";
  os << "  " << parent << " -> " << mid << " [comment=\"" << side << "\"];\n";
  if (depth == 0) return;
  const std::string tri = "b" + std::to_string(index) + "v" + path;
  os << "  " << tri << " [shape=point, width=0.1, comment=\"" << side << "\"];\n";
  os << "  " << mid << " -> " << tri << " [comment=\"" << side << "\"];\n";
  emit_branch(os, tri, index, path + "0", depth - 1, side);
  emit_branch(os, tri, index, path + "1", depth - 1, side);
}

}  // namespace detail

/*
 * DOT rendering of a cark. The spine is a directed cycle s0 -> s1 -> ... of 2L
 * vertices (even: trivalent, odd: midpoints). Trivalent vertex s{2i} carries a
 * Farey branch truncated after `depth` trivalent levels, toward the inner side
 * for symbol 1 and the outer side for symbol 0. Reduced spine edges are bold.
 * Node names depend only on the word and depth.
 */
inline std::string to_dot(const Necklace& n, std::size_t depth) {
  const std::string& w = n.word();
  const std::size_t len = w.size();
  std::vector<bool> reduced(2 * len, false);
  if (n.is_cark())
    for (std::size_t e : reduced_edge_indices(n)) reduced[e] = true;

  std::ostringstream os;
  os << "digraph cark {\n";
  os << "  comment=\"" << w << "\";\n";
  for (std::size_t v = 0; v < 2 * len; ++v) {
    if (v % 2 == 0)
      os << "  s" << v << " [shape=point, width=0.1, comment=\"symbol " << w[v / 2] << "\"];\n";
    else
      os << "  s" << v << " [shape=circle, label=\"x\", width=0.15];\n";
  }
  for (std::size_t e = 0; e < 2 * len; ++e) {
    os << "  s" << e << " -> s" << (e + 1) % (2 * len);
    if (reduced[e])
      os << " [penwidth=3, comment=\"reduced\"]";
    os << ";\n";
  }
  for (std::size_t i = 0; i < len; ++i)
    detail::emit_branch(os, "s" + std::to_string(2 * i), i, "", depth,
                        w[i] == '1' ? "inner" : "outer");
  os << "}\n";
  return os.str();
}

/// {"weights", "exponent", "trace", "discriminant", "reduced_edges"}; big
/// integers as decimal strings, discriminant of the associated form.
inline nlohmann::ordered_json to_json(const Necklace& n) {
  const WeightedCark wc = weighted_encode(n);
  const ProjMat m = cark_matrix(n);
  nlohmann::ordered_json doc;
  doc["weights"] = wc.weights;
  doc["exponent"] = wc.exponent;
  doc["trace"] = m.trace().str();
  doc["discriminant"] = discriminant(matrix_to_form(m)).str();
  doc["reduced_edges"] = reduced_edge_indices(n);
  return doc;
}

}  // namespace cark

#endif
