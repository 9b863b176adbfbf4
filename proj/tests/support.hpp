#ifndef AWG_TESTS_SUPPORT_HPP
#define AWG_TESTS_SUPPORT_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "awg/core.hpp"

namespace awg::testing {

/// Uniform signed permutation of rank n.
inline SignedPermutation random_signed_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<std::size_t, int>> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = {perm[i], (rng() & 1) ? -1 : 1};
  return SignedPermutation::from_images(img);
}

inline AffineElement random_element(std::size_t n, Label L, std::mt19937_64& rng) {
  std::uniform_int_distribution<Label> lab(-L, L);
  std::vector<Label> v(n);
  for (auto& c : v) c = lab(rng);
  return {random_signed_permutation(n, rng), std::move(v)};
}

/// (n+1)x(n+1) integer matrix of the affine map p -> p^sigma + v acting on
/// row vectors [p, 1].
using Matrix = std::vector<std::vector<Label>>;

inline Matrix to_matrix(const AffineElement& x) {
  const auto n = x.rank();
  Matrix m(n + 1, std::vector<Label>(n + 1, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][x.sigma().target(i)] = x.sigma().sign(i);
  for (std::size_t j = 0; j < n; ++j) m[n][j] = x.v()[j];
  m[n][n] = 1;
  return m;
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
  const auto n = a.size();
  Matrix c(n, std::vector<Label>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Matrix identity_matrix(std::size_t n) {
  Matrix m(n + 1, std::vector<Label>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace awg::testing

#endif  // AWG_TESTS_SUPPORT_HPP
