#ifndef CARK_NECKLACE_HPP
#define CARK_NECKLACE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cark/conjugacy.hpp"
#include "cark/cyclic.hpp"
#include "cark/errors.hpp"
#include "cark/form.hpp"
#include "cark/pell.hpp"
#include "cark/psl2.hpp"

namespace cark {

// Symbol convention: a block (R^2 S)^a (R S)^b is written 1^a 0^b. A 0 is a
// Farey branch attached by R (outer side), a 1 one attached by R^2 (inner side).

namespace detail {

inline std::string least_rotation_string(std::string_view w) {
  std::span<const char> chars(w.data(), w.size());
  std::vector<char> rot = least_rotation_of(chars);
  return {rot.begin(), rot.end()};
}

inline void require_binary(std::string_view w) {
  if (w.empty()) throw ParseError("empty binary word");
  for (char ch : w)
    if (ch != '0' && ch != '1')
      throw ParseError("binary word may only contain 0 and 1: '" + std::string(w) + "'");
}

}  // namespace detail

/// Binary word up to rotation (a directed cark). Holds the least rotation.
class Necklace {
 public:
  explicit Necklace(std::string_view word) {
    detail::require_binary(word);
    word_ = detail::least_rotation_string(word);
  }

  const std::string& word() const { return word_; }
  std::size_t length() const { return word_.size(); }

  /// Both symbols present, i.e. the necklace of a hyperbolic class.
  bool is_cark() const {
    return word_.find('0') != std::string::npos && word_.find('1') != std::string::npos;
  }

  friend bool operator==(const Necklace&, const Necklace&) = default;
  friend bool operator<(const Necklace& x, const Necklace& y) { return x.word_ < y.word_; }

 private:
  std::string word_;
};

/// Binary word up to rotation and reversal (an undirected cark).
class Bracelet {
 public:
  explicit Bracelet(std::string_view word) {
    detail::require_binary(word);
    std::string fwd = detail::least_rotation_string(word);
    std::string rev(word.rbegin(), word.rend());
    word_ = std::min(fwd, detail::least_rotation_string(rev));
  }
  explicit Bracelet(const Necklace& n) : Bracelet(n.word()) {}

  const std::string& word() const { return word_; }
  std::size_t length() const { return word_.size(); }

  friend bool operator==(const Bracelet&, const Bracelet&) = default;

 private:
  std::string word_;
};

inline void require_cark(const Necklace& n) {
  if (!n.is_cark())
    throw DomainError("necklace " + n.word() + " is constant: not the cark of a hyperbolic class");
}

inline constexpr std::uint64_t kMaxNecklaceLength = std::uint64_t{1} << 28;

inline Necklace word_to_necklace(const BlockWord& w) {
  if (w.letter_count() > kMaxNecklaceLength)
    throw DomainError("block word too long to expand into a necklace");
  std::string s;
  s.reserve(static_cast<std::size_t>(w.letter_count()));
  for (const Block& blk : w.blocks()) {
    s.append(static_cast<std::size_t>(blk.a), '1');
    s.append(static_cast<std::size_t>(blk.b), '0');
  }
  return Necklace(s);
}

namespace detail {

/// Maximal runs of the cyclic word, starting at a 1 that follows a 0.
inline std::vector<std::pair<char, std::uint64_t>> cyclic_runs_from_one(const std::string& w) {
  const std::size_t n = w.size();
  std::size_t start = 0;
  while (!(w[start] == '1' && w[(start + n - 1) % n] == '0')) ++start;
  std::vector<std::pair<char, std::uint64_t>> runs;
  for (std::size_t i = 0; i < n; ++i) {
    char ch = w[(start + i) % n];
    if (!runs.empty() && runs.back().first == ch)
      ++runs.back().second;
    else
      runs.emplace_back(ch, 1);
  }
  return runs;
}

}  // namespace detail

/// Inverse of word_to_necklace; the block word is returned in canonical rotation.
inline BlockWord necklace_to_word(const Necklace& n) {
  require_cark(n);
  auto runs = detail::cyclic_runs_from_one(n.word());
  std::vector<Block> blocks;
  for (std::size_t i = 0; i + 1 < runs.size(); i += 2)
    blocks.push_back({runs[i].second, runs[i + 1].second});
  return BlockWord(std::move(blocks)).canonical();
}

/// C^r: mirror through a line across the spine, i.e. word reversal.
inline Necklace reverse_r(const Necklace& n) {
  return Necklace(std::string(n.word().rbegin(), n.word().rend()));
}

/// C^m: reflection in the spine, i.e. the symbol swap 0 <-> 1.
inline Necklace swap_m(const Necklace& n) {
  std::string w = n.word();
  for (char& ch : w) ch = ch == '0' ? '1' : '0';
  return Necklace(w);
}

/// Fixed by reversal: the cark of an ambiguous class.
inline bool is_reversal_symmetric(const Necklace& n) { return reverse_r(n) == n; }

/// Fixed by reversal composed with swap: the cark of a reciprocal class.
inline bool is_reversal_swap_symmetric(const Necklace& n) {
  return reverse_r(swap_m(n)) == n;
}

inline bool is_primitive_necklace(const Necklace& n) {
  return is_aperiodic(std::span<const char>(n.word().data(), n.word().size()));
}

/// The Lyndon word of an aperiodic necklace.
inline std::string lyndon_representative(const Necklace& n) {
  if (!is_primitive_necklace(n))
    throw DomainError("necklace " + n.word() + " is periodic: no Lyndon representative");
  return n.word();
}

/// Run-length form (n0, n1, ..., n_{2k-1})^e; e is the symbol of the first run.
struct WeightedCark {
  std::vector<std::uint64_t> weights;
  int exponent = 0;

  friend bool operator==(const WeightedCark&, const WeightedCark&) = default;
};

inline WeightedCark weighted_encode(const Necklace& n) {
  require_cark(n);
  const std::string& w = n.word();
  WeightedCark out;
  out.exponent = w.front() == '0' ? 0 : 1;
  char current = w.front();
  std::uint64_t count = 0;
  for (char ch : w) {
    if (ch == current) {
      ++count;
    } else {
      out.weights.push_back(count);
      current = ch;
      count = 1;
    }
  }
  out.weights.push_back(count);
  // a least rotation of a two-symbol word starts with 0 and ends with 1
  if (out.weights.size() % 2 != 0) throw std::logic_error("odd number of runs");
  return out;
}

inline Necklace weighted_decode(const WeightedCark& wc) {
  if (wc.weights.size() < 2 || wc.weights.size() % 2 != 0)
    throw DomainError("weighted cark needs a positive even number of runs");
  if (wc.exponent != 0 && wc.exponent != 1)
    throw DomainError("weighted cark exponent must be 0 or 1");
  std::uint64_t total = 0;
  for (std::uint64_t x : wc.weights) {
    if (x == 0) throw DomainError("weighted cark runs must be positive");
    total += x;
  }
  if (total > kMaxNecklaceLength) throw DomainError("weighted cark too long");
  std::string w;
  char symbol = wc.exponent == 0 ? '0' : '1';
  for (std::uint64_t x : wc.weights) {
    w.append(static_cast<std::size_t>(x), symbol);
    symbol = symbol == '0' ? '1' : '0';
  }
  return Necklace(w);
}

/// Number of maximal cyclic runs of 1 (inner Farey components).
inline std::size_t inner_component_count(const Necklace& n) {
  require_cark(n);
  const std::string& w = n.word();
  std::size_t k = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] == '1' && w[(i + w.size() - 1) % w.size()] == '0') ++k;
  return k;
}

/// Spine edges flanking an inner Farey component: two per run of 1s.
inline std::size_t reduced_edge_count(const Necklace& n) {
  return 2 * inner_component_count(n);
}

/*
 * Indices of the reduced spine edges. The spine has 2L vertices: vertex 2i is
 * the trivalent vertex carrying symbol i, vertex 2i+1 the midpoint after it;
 * edge e joins vertex e to vertex e+1 (mod 2L). A run of 1s over symbols
 * i..j is flanked by edges 2i-1 and 2j.
 */
inline std::vector<std::size_t> reduced_edge_indices(const Necklace& n) {
  require_cark(n);
  const std::string& w = n.word();
  const std::size_t len = w.size();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < len; ++i) {
    if (w[i] != '1') continue;
    if (w[(i + len - 1) % len] == '0') out.push_back((2 * i + 2 * len - 1) % (2 * len));
    if (w[(i + 1) % len] == '0') out.push_back(2 * i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Farey components (maximal runs, either side) of the weighted cark.
inline std::size_t total_branches(const Necklace& n) {
  if (!n.is_cark()) return 1;
  return 2 * inner_component_count(n);
}

/// Directed cark of the class of f: the word of its fundamental automorphism.
inline Necklace cark_of_form(const Form& f) {
  return word_to_necklace(matrix_to_word(fundamental_automorphism(f)).word);
}

/// The hyperbolic element read off a cark (base edge at the canonical rotation).
inline ProjMat cark_matrix(const Necklace& n) { return word_to_matrix(necklace_to_word(n)); }

}  // namespace cark

#endif
