#pragma once

#include "voacert/affine.hpp"
#include "voacert/linalg.hpp"
#include "voacert/liesuper.hpp"

#include <random>
#include <vector>

namespace testing_support {

using namespace voacert;

inline constexpr int kInstances = 200;

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational small_rational(std::mt19937_64& rng) {
  return ratio(uniform(rng, -6, 6), uniform(rng, 1, 4));
}

/// A random canonical state: up to `terms` monomials of up to `length` modes
/// with indices in [-depth, -1].
inline State random_state(const LieSuperalgebra& g, std::mt19937_64& rng, int terms = 3, int length = 2,
                          int depth = 2, Rational level = 1) {
  State s(level);
  const int count = static_cast<int>(uniform(rng, 1, terms));
  for (int t = 0; t < count; ++t) {
    std::vector<Mode> word;
    const int len = static_cast<int>(uniform(rng, 0, length));
    for (int i = 0; i < len; ++i)
      word.push_back({static_cast<int>(uniform(rng, 0, g.dim() - 1)), -static_cast<int>(uniform(rng, 1, depth))});
    s.add(normal_order(g, word, level), small_rational(rng));
  }
  return s;
}

/// A random homogeneous canonical state of the given degree built from
/// monomials of depth -1 and -2 modes.
inline State random_homogeneous(const LieSuperalgebra& g, std::mt19937_64& rng, int degree, int terms = 3) {
  State s(1);
  for (int t = 0; t < terms; ++t) {
    std::vector<Mode> word;
    int left = degree;
    while (left > 0) {
      const int d = static_cast<int>(uniform(rng, 1, std::min(left, 2)));
      word.push_back({static_cast<int>(uniform(rng, 0, g.dim() - 1)), -d});
      left -= d;
    }
    s.add(normal_order(g, word), small_rational(rng));
  }
  return s;
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound = 4) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, -bound, bound);
  return m;
}

inline Matrix random_traceless(std::mt19937_64& rng, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = small_rational(rng);
  const Rational t = m.trace();
  m(n - 1, n - 1) -= t;
  return m;
}

/// u v^T with v . u = 0: traceless of rank <= 1.
inline Matrix random_rank_one_traceless(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> u(n), v(n);
  for (auto& x : u) x = small_rational(rng);
  for (auto& x : v) x = small_rational(rng);
  // fix one coordinate of v so that v . u = 0
  std::size_t pivot = n;
  for (std::size_t i = 0; i < n; ++i)
    if (u[i] != 0) pivot = i;
  if (pivot == n) u[0] = 1, pivot = 0;
  Rational dot = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (i != pivot) dot += u[i] * v[i];
  v[pivot] = -dot / u[pivot];
  Matrix z(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) z(i, j) = u[i] * v[j];
  return z;
}

}  // namespace testing_support
