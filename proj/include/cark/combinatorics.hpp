#ifndef CARK_COMBINATORICS_HPP
#define CARK_COMBINATORICS_HPP

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <utility>
#include <stdexcept>
#include <string>
#include <vector>

#include "cark/errors.hpp"
#include "cark/integer.hpp"

namespace cark {

namespace detail {

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> low;
  std::vector<std::uint64_t> high;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

inline Int pow2(std::uint64_t k) { return Int(1) << static_cast<unsigned>(k); }

inline void require_positive_length(std::uint64_t n) {
  if (n == 0) throw DomainError("length must be at least 1");
}

}  // namespace detail

inline std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw DomainError("phi(0) is undefined");
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

inline int moebius(std::uint64_t n) {
  if (n == 0) throw DomainError("mu(0) is undefined");
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

/// (1/n) sum_{d | n} phi(d) 2^(n/d).
inline Int necklace_count_divisor_sum(std::uint64_t n) {
  detail::require_positive_length(n);
  Int sum = 0;
  for (std::uint64_t d : detail::divisors(n)) sum += Int(euler_phi(d)) * detail::pow2(n / d);
  return sum / n;
}

/// (1/n) sum_{j=1..n} 2^gcd(j, n).
inline Int necklace_count_gcd_sum(std::uint64_t n) {
  detail::require_positive_length(n);
  Int sum = 0;
  for (std::uint64_t j = 1; j <= n; ++j) sum += detail::pow2(std::gcd(j, n));
  return sum / n;
}

/// Binary necklaces of length n (MacMahon). Both closed forms are evaluated
/// and must agree.
inline Int necklace_count(std::uint64_t n) {
  Int by_divisors = necklace_count_divisor_sum(n);
  if (by_divisors != necklace_count_gcd_sum(n))
    throw std::logic_error("necklace formulas disagree at n = " + std::to_string(n));
  return by_divisors;
}

/// Binary bracelets of length n.
inline Int bracelet_count(std::uint64_t n) {
  const Int necklaces = necklace_count(n);
  if (n % 2 == 0) return (2 * necklaces + 3 * detail::pow2(n / 2)) / 4;
  return (necklaces + detail::pow2((n + 1) / 2)) / 2;
}

/// Aperiodic binary necklaces (Lyndon words) of length n.
inline Int aperiodic_count(std::uint64_t n) {
  detail::require_positive_length(n);
  Int sum = 0;
  for (std::uint64_t d : detail::divisors(n)) {
    int mu = moebius(d);
    if (mu == 1) sum += detail::pow2(n / d);
    if (mu == -1) sum -= detail::pow2(n / d);
  }
  return sum / n;
}

enum class CountKind { Necklace, Bracelet, Aperiodic };

struct CountRow {
  std::uint64_t n;
  Int value;
};

inline Int count(CountKind kind, std::uint64_t n) {
  switch (kind) {
    case CountKind::Necklace: return necklace_count(n);
    case CountKind::Bracelet: return bracelet_count(n);
    case CountKind::Aperiodic: return aperiodic_count(n);
  }
  throw std::logic_error("unknown count kind");
}

inline std::vector<CountRow> count_table(CountKind kind, std::uint64_t max_n) {
  std::vector<CountRow> rows;
  for (std::uint64_t n = 1; n <= max_n; ++n) rows.push_back({n, count(kind, n)});
  return rows;
}

/*
 * All binary Lyndon words of length 1..max_length in lexicographic order, by
 * Duval's successor rule: repeat the current word up to max_length, drop
 * trailing 1s, then turn the last 0 into a 1.
 *
 * Uses O(max_length) memory; the output itself has about
 * 2^(max_length+1) / max_length words, so the CLI caps max_length at 40.
 */
template <typename Visitor>
void for_each_lyndon(std::size_t max_length, Visitor&& visit) {
  if (max_length == 0) throw DomainError("length must be at least 1");
  std::string w = "0";
  while (!w.empty()) {
    visit(std::as_const(w));
    const std::size_t m = w.size();
    while (w.size() < max_length) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == '1') w.pop_back();
    if (!w.empty()) w.back() = '1';
  }
}

/// Collects every word; memory is proportional to the output size.
inline std::vector<std::string> lyndon_enumerate(std::size_t max_length) {
  std::vector<std::string> out;
  for_each_lyndon(max_length, [&out](const std::string& w) { out.push_back(w); });
  return out;
}

}  // namespace cark

#endif
