#ifndef CARK_PSL2_HPP
#define CARK_PSL2_HPP

#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cark/cyclic.hpp"
#include "cark/errors.hpp"
#include "cark/integer.hpp"

namespace cark {

/*
 * An element of the modular group PSL2(Z), stored as a determinant-one integer
 * matrix [p q; r s]. M and -M denote the same element, so every value is kept
 * in a normal form: trace > 0, or, when the trace vanishes, the first nonzero
 * of (p, q, r) positive. With that, entrywise equality is group equality.
 */
class ProjMat {
 public:
  ProjMat() : p_(1), q_(0), r_(0), s_(1) {}

  ProjMat(Int p, Int q, Int r, Int s)
      : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), s_(std::move(s)) {
    if (p_ * s_ - q_ * r_ != 1)
      throw DomainError("matrix determinant is not 1");
    normalize();
  }

  static ProjMat identity() { return {}; }
  /// z -> -1/z, order 2.
  static ProjMat S() { return {0, -1, 1, 0}; }
  /// z -> (z-1)/z, order 3.
  static ProjMat R() { return {1, -1, 1, 0}; }
  /// R^2 S = [1 0; 1 1].
  static ProjMat L() { return {1, 0, 1, 1}; }
  /// R S = [1 1; 0 1].
  static ProjMat T() { return {1, 1, 0, 1}; }

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }
  const Int& r() const { return r_; }
  const Int& s() const { return s_; }

  /// Non-negative by normalization, so this is also |tr M|.
  Int trace() const { return p_ + s_; }

  bool is_identity() const { return p_ == 1 && q_ == 0 && r_ == 0 && s_ == 1; }

  friend bool operator==(const ProjMat&, const ProjMat&) = default;

 private:
  void normalize() {
    Int tr = p_ + s_;
    bool flip = false;
    if (tr < 0) {
      flip = true;
    } else if (tr == 0) {
      const Int& lead = p_ != 0 ? p_ : (q_ != 0 ? q_ : r_);
      flip = lead < 0;
    }
    if (flip) {
      p_ = -p_;
      q_ = -q_;
      r_ = -r_;
      s_ = -s_;
    }
  }

  Int p_, q_, r_, s_;
};

inline ProjMat multiply(const ProjMat& a, const ProjMat& b) {
  return {a.p() * b.p() + a.q() * b.r(), a.p() * b.q() + a.q() * b.s(),
          a.r() * b.p() + a.s() * b.r(), a.r() * b.q() + a.s() * b.s()};
}

inline ProjMat operator*(const ProjMat& a, const ProjMat& b) { return multiply(a, b); }

inline ProjMat inverse(const ProjMat& m) { return {m.s(), -m.q(), -m.r(), m.p()}; }

inline ProjMat power(ProjMat base, std::uint64_t k) {
  ProjMat out;
  while (k > 0) {
    if (k & 1U) out = out * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return out;
}

/// Conjugate of m by x: x^-1 m x.
inline ProjMat conjugate(const ProjMat& m, const ProjMat& x) {
  return inverse(x) * m * x;
}

enum class ElementClass { Identity, Elliptic2, Elliptic3, Parabolic, Hyperbolic };

inline const char* to_string(ElementClass c) {
  switch (c) {
    case ElementClass::Identity: return "identity";
    case ElementClass::Elliptic2: return "elliptic-2";
    case ElementClass::Elliptic3: return "elliptic-3";
    case ElementClass::Parabolic: return "parabolic";
    case ElementClass::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

inline ElementClass classify(const ProjMat& m) {
  const Int tr = m.trace();
  if (tr == 0) return ElementClass::Elliptic2;
  if (tr == 1) return ElementClass::Elliptic3;
  if (tr == 2) return m.is_identity() ? ElementClass::Identity : ElementClass::Parabolic;
  return ElementClass::Hyperbolic;
}

inline void require_hyperbolic(const ProjMat& m) {
  if (classify(m) != ElementClass::Hyperbolic)
    throw DomainError("matrix is " + std::string(to_string(classify(m))) +
                      ", expected hyperbolic");
}

/// One factor (R^2 S)^a (R S)^b of a block word.
struct Block {
  std::uint64_t a = 1;
  std::uint64_t b = 1;

  friend auto operator<=>(const Block&, const Block&) = default;
};

/*
 * Cyclic word (R^2 S)^a1 (R S)^b1 ... (R^2 S)^ak (R S)^bk with all exponents
 * positive. Equality is sequence equality; use canonical() to compare words
 * up to conjugacy.
 */
class BlockWord {
 public:
  explicit BlockWord(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw DomainError("block word needs at least one block");
    for (const Block& blk : blocks_)
      if (blk.a == 0 || blk.b == 0)
        throw DomainError("block word exponents must be positive");
  }

  BlockWord(std::initializer_list<Block> blocks)
      : BlockWord(std::vector<Block>(blocks)) {}

  std::span<const Block> blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }

  /// Number of R^2 S and R S letters, i.e. sum of all exponents.
  std::uint64_t letter_count() const {
    std::uint64_t n = 0;
    for (const Block& blk : blocks_) n += blk.a + blk.b;
    return n;
  }

  /// Least rotation of the block sequence.
  BlockWord canonical() const {
    return BlockWord(least_rotation_of(blocks()));
  }

  bool is_periodic() const { return !is_aperiodic(blocks()); }

  friend bool operator==(const BlockWord&, const BlockWord&) = default;

 private:
  std::vector<Block> blocks_;
};

/// Product L^a1 T^b1 ... L^ak T^bk with L = R^2 S = [1 0; 1 1] and
/// T = R S = [1 1; 0 1].
inline ProjMat word_to_matrix(const BlockWord& w) {
  ProjMat m;
  for (const Block& blk : w.blocks()) {
    m = m * ProjMat(1, 0, Int(blk.a), 1);
    m = m * ProjMat(1, Int(blk.b), 0, 1);
  }
  return m;
}

enum class Generator : char { S = 'S', R = 'R' };

/// Letter-level expansion over {S, R}: each R^2 S becomes R R S, each R S stays.
inline std::vector<Generator> expand_generators(const BlockWord& w) {
  std::vector<Generator> out;
  for (const Block& blk : w.blocks()) {
    for (std::uint64_t i = 0; i < blk.a; ++i)
      out.insert(out.end(), {Generator::R, Generator::R, Generator::S});
    for (std::uint64_t i = 0; i < blk.b; ++i)
      out.insert(out.end(), {Generator::R, Generator::S});
  }
  return out;
}

inline ProjMat evaluate(std::span<const Generator> letters) {
  const ProjMat s = ProjMat::S();
  const ProjMat r = ProjMat::R();
  ProjMat m;
  for (Generator g : letters) m = m * (g == Generator::S ? s : r);
  return m;
}

/// Compact generator notation, e.g. "(R^2S)^2(RS)^2(R^2S)(RS)".
inline std::string generator_string(const BlockWord& w) {
  std::string out;
  auto piece = [&out](const char* base, std::uint64_t e) {
    out += base;
    if (e > 1) out += "^" + std::to_string(e);
  };
  for (const Block& blk : w.blocks()) {
    piece("(R^2S)", blk.a);
    piece("(RS)", blk.b);
  }
  return out;
}

namespace detail {

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace detail

inline std::string format(const ProjMat& m) {
  return m.p().str() + "," + m.q().str() + "," + m.r().str() + "," + m.s().str();
}

inline std::string format(const BlockWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ';';
    out += std::to_string(w.blocks()[i].a) + "," + std::to_string(w.blocks()[i].b);
  }
  return out;
}

/// "p,q,r,s".
inline ProjMat parse_matrix(std::string_view text) {
  auto parts = detail::split(text, ',');
  if (parts.size() != 4)
    throw ParseError("matrix must be 'p,q,r,s', got '" + std::string(text) + "'");
  return ProjMat(parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2]),
                 parse_int(parts[3]));
}

/// "a1,b1;a2,b2;...".
inline BlockWord parse_word(std::string_view text) {
  std::vector<Block> blocks;
  for (std::string_view pair : detail::split(text, ';')) {
    auto ab = detail::split(pair, ',');
    if (ab.size() != 2)
      throw ParseError("word must be 'a1,b1;a2,b2;...', got '" + std::string(text) + "'");
    Int a = parse_int(ab[0]);
    Int b = parse_int(ab[1]);
    if (a < 1 || b < 1) throw DomainError("block word exponents must be positive");
    blocks.push_back({to_u64(a, "exponent"), to_u64(b, "exponent")});
  }
  return BlockWord(std::move(blocks));
}

}  // namespace cark

#endif
