#ifndef CARK_CONJUGACY_HPP
#define CARK_CONJUGACY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cark/form.hpp"
#include "cark/pell.hpp"
#include "cark/psl2.hpp"

namespace cark {

struct WordDecomposition {
  BlockWord word;       // canonical rotation
  ProjMat conjugator;   // word_to_matrix(word) == conjugator^-1 m conjugator
};

namespace detail {

struct Run {
  bool is_l;  // L = [1 0; 1 1] when true, T = [1 1; 0 1] otherwise
  std::uint64_t length;
};

// Factor a non-negative determinant-one matrix into runs of L and T, left to
// right, by Euclidean row subtraction.
inline std::vector<Run> peel_nonnegative(Int p, Int q, Int r, Int s) {
  std::vector<Run> runs;
  while (!(p == 1 && q == 0 && r == 0 && s == 1)) {
    if (r >= p && s >= q) {
      // M = L^k M'
      Int k = r / p;
      if (q > 0) k = std::min(k, Int(s / q));
      r -= k * p;
      s -= k * q;
      runs.push_back({true, to_u64(k, "word exponent")});
    } else if (p >= r && q >= s) {
      // M = T^k M'
      Int k = q / s;
      if (r > 0) k = std::min(k, Int(p / r));
      p -= k * r;
      q -= k * s;
      runs.push_back({false, to_u64(k, "word exponent")});
    } else {
      throw std::logic_error("matrix is not a positive word in L and T");
    }
  }
  // merge adjacent equal letters produced by the min() splits
  std::vector<Run> merged;
  for (const Run& run : runs) {
    if (!merged.empty() && merged.back().is_l == run.is_l)
      merged.back().length += run.length;
    else
      merged.push_back(run);
  }
  return merged;
}

}  // namespace detail

/*
 * Decompose a hyperbolic element into a block word up to conjugacy.
 *
 * The associated form f_M is moved by reduction to a reduced form with a > 0
 * (hence c < 0); the conjugate of M fixing that form has positive entries and
 * peels into L/T runs. The runs are rotated so an L-run follows a T-run, then
 * the block sequence is rotated to its least rotation. Rotating W = P Q to
 * Q P is conjugation by P, which is accumulated into the conjugator.
 */
inline WordDecomposition matrix_to_word(const ProjMat& m) {
  require_hyperbolic(m);
  Reduction red = reduce(matrix_to_form(m));
  ProjMat conj = red.transform;
  if (red.form.a < 0) conj = conj * rho_matrix(red.form);
  const ProjMat positive = conjugate(m, conj);
  std::vector<detail::Run> runs =
      detail::peel_nonnegative(positive.p(), positive.q(), positive.r(), positive.s());
  if (runs.size() < 2) throw std::logic_error("hyperbolic word lacks both letters");

  if (!runs.front().is_l) {
    // T^k Q -> Q T^k
    conj = conj * ProjMat(1, Int(runs.front().length), 0, 1);
    detail::Run head = runs.front();
    runs.erase(runs.begin());
    if (!runs.back().is_l)
      runs.back().length += head.length;
    else
      runs.push_back(head);
  }
  if (runs.back().is_l) {
    // Q L^k -> L^k Q, conjugation by L^-k
    conj = conj * ProjMat(1, 0, -Int(runs.back().length), 1);
    runs.front().length += runs.back().length;
    runs.pop_back();
  }

  std::vector<Block> blocks;
  for (std::size_t i = 0; i + 1 < runs.size(); i += 2)
    blocks.push_back({runs[i].length, runs[i + 1].length});
  const std::size_t shift = least_rotation(std::span<const Block>(blocks));
  if (shift > 0) {
    std::vector<Block> prefix(blocks.begin(), blocks.begin() + shift);
    conj = conj * word_to_matrix(BlockWord(std::move(prefix)));
  }
  return {BlockWord(rotate_left(std::span<const Block>(blocks), shift)), conj};
}

/// Not a positive power of another element.
inline bool is_primitive_matrix(const ProjMat& m) {
  return !matrix_to_word(m).word.is_periodic();
}

}  // namespace cark

#endif
