#ifndef CARK_CYCLIC_HPP
#define CARK_CYCLIC_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace cark {

/// Start index of the lexicographically least rotation (Booth's algorithm,
/// linear time). Ties resolve to the smallest index.
template <typename T>
std::size_t least_rotation(std::span<const T> s) {
  const std::size_t n = s.size();
  if (n < 2) return 0;
  std::vector<std::ptrdiff_t> fail(2 * n, -1);
  std::size_t k = 0;
  auto at = [&](std::size_t i) -> const T& { return s[i % n]; };
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const T& sj = at(j);
    std::ptrdiff_t i = fail[j - k - 1];
    while (i != -1 && !(sj == at(k + i + 1))) {
      if (sj < at(k + i + 1)) k = j - i - 1;
      i = fail[i];
    }
    if (!(sj == at(k + i + 1))) {
      // here i == -1
      if (sj < at(k)) k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  return k % n;
}

template <typename T>
std::vector<T> rotate_left(std::span<const T> s, std::size_t k) {
  std::vector<T> out(s.begin(), s.end());
  if (!out.empty()) std::rotate(out.begin(), out.begin() + (k % out.size()), out.end());
  return out;
}

template <typename T>
std::vector<T> least_rotation_of(std::span<const T> s) {
  return rotate_left(s, least_rotation(s));
}

/// Smallest p dividing n such that s is invariant under rotation by p.
template <typename T>
std::size_t cyclic_period(std::span<const T> s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::vector<std::size_t> pi(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && !(s[i] == s[k])) k = pi[k - 1];
    if (s[i] == s[k]) ++k;
    pi[i] = k;
  }
  std::size_t p = n - pi[n - 1];
  return n % p == 0 ? p : n;
}

template <typename T>
bool is_aperiodic(std::span<const T> s) {
  return cyclic_period(s) == s.size();
}

}  // namespace cark

#endif
