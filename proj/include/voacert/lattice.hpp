#pragma once

// Lattice arithmetic for the decomposition of Z^n along rho = (1, ..., 1)^T and
// the bidiagonal rho_vee, plus Smith normal forms for discriminant groups.

#include "voacert/linalg.hpp"
#include "voacert/rational.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace voacert {

class SingularLattice : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct IntegralLattice {
  Matrix gram;

  std::size_t rank() const { return gram.rows(); }
  bool is_symmetric() const { return gram == gram.transpose(); }
  bool is_integral() const {
    for (std::size_t i = 0; i < gram.rows(); ++i)
      for (std::size_t j = 0; j < gram.cols(); ++j)
        if (!is_integer(gram(i, j))) return false;
    return true;
  }
  Rational pairing(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
    const auto gb = gram.apply(b);
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * gb[i];
    return s;
  }
};

inline Matrix cartan_matrix(int n) {
  if (n < 2) throw std::invalid_argument("cartan_matrix requires n >= 2");
  const std::size_t r = static_cast<std::size_t>(n - 1);
  Matrix c(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    c(i, i) = 2;
    if (i + 1 < r) c(i, i + 1) = c(i + 1, i) = -1;
  }
  return c;
}

/// Q_n with gram sign * C_n.
inline IntegralLattice cartan_lattice(int n, int sign = 1) {
  return {Rational(sign < 0 ? -1 : 1) * cartan_matrix(n)};
}

/// Diagonal of the Smith normal form of an integer matrix, zeros included.
inline std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // smallest nonzero entry of the remaining block becomes the pivot
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) pr = i, pc = j;
      if (pr == rows) {
        for (std::size_t k = t; k < std::min(rows, cols); ++k) diag.push_back(0);
        return diag;
      }
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Integer q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Integer q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // the pivot must divide the rest of the block
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

/// Invariant factors of L^vee / L, ones dropped.
inline std::vector<Integer> discriminant_group(const IntegralLattice& l) {
  if (!l.is_integral()) throw std::invalid_argument("gram matrix is not integral");
  std::vector<std::vector<Integer>> a(l.rank(), std::vector<Integer>(l.rank()));
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t j = 0; j < l.rank(); ++j) a[i][j] = l.gram(i, j).get_num();
  std::vector<Integer> out;
  for (auto& d : smith_diagonal(std::move(a))) {
    if (d == 0) throw SingularLattice("degenerate gram matrix");
    if (d != 1) out.push_back(d);
  }
  return out;
}

/// The n x (n-1) matrix with 1 on the diagonal and -1 just below it.
inline Matrix rho_vee(int n) {
  Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n - 1));
  for (int k = 0; k < n - 1; ++k) {
    m(k, k) = 1;
    m(k + 1, k) = -1;
  }
  return m;
}

/// p (all entries 1/n) and p_perp = Id - p.
inline std::pair<Matrix, Matrix> projections(int n) {
  if (n < 2) throw std::invalid_argument("projections requires n >= 2");
  const std::size_t s = static_cast<std::size_t>(n);
  Matrix p(s, s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) p(i, j) = ratio(1, n);
  return {p, Matrix::identity(s) - p};
}

struct WeightDecomposition {
  Rational lambda0;
  std::vector<Rational> lambda_vee;
  long j = 0;             // j = -sum(lambda) mod n
  long class0 = 0;        // class of lambda0 in (1/n)Z / Z, as n lambda0 mod n
  long class_vee = 0;     // class of lambda_vee in (1/n)Z^{n-1} / Z^{n-1}
};

/// c in Z_n with lambda_vee - c omega_1 integral, where omega_1 has
/// coordinates ((n-1)/n, ..., 1/n). Throws if no such c exists.
inline long class_of_coweight(const std::vector<Rational>& v) {
  const long n = static_cast<long>(v.size()) + 1;
  for (long c = 0; c < n; ++c) {
    bool ok = true;
    for (long k = 1; k < n && ok; ++k) ok = is_integer(v[k - 1] - ratio(c * (n - k), n));
    if (ok) return c;
  }
  throw std::invalid_argument("coweight is not in (1/n)Z^{n-1} + Z omega_1");
}

inline WeightDecomposition decompose_weight(const std::vector<Integer>& lambda) {
  const int n = static_cast<int>(lambda.size());
  if (n < 2) throw std::invalid_argument("decompose_weight requires n >= 2");
  WeightDecomposition d;
  Integer sum = 0;
  for (const auto& x : lambda) sum += x;
  d.lambda0 = ratio(sum, n);
  std::vector<Integer> diff(n - 1);
  for (int i = 0; i < n - 1; ++i) diff[i] = lambda[i] - lambda[i + 1];
  for (int k = 1; k <= n - 1; ++k) {
    Rational v = 0;
    for (int i = 1; i <= k; ++i) v += ratio(Integer(i * (n - k)) * diff[i - 1], n);
    for (int i = k + 1; i <= n - 1; ++i) v += ratio(Integer(k * (n - i)) * diff[i - 1], n);
    d.lambda_vee.push_back(v);
  }
  // reconstruction: lambda = rho(lambda0) + rho_vee(lambda_vee)
  const auto back = rho_vee(n).apply(d.lambda_vee);
  for (int i = 0; i < n; ++i)
    if (back[i] + d.lambda0 != Rational(lambda[i]))
      throw std::logic_error("weight decomposition failed to reconstruct lambda");
  d.j = mod_floor(-sum, n);
  d.class0 = mod_floor(Integer(d.lambda0 * n), n);
  d.class_vee = class_of_coweight(d.lambda_vee);
  return d;
}

/// All integer tuples with |lambda_i| <= bound and sum m, lexicographic.
inline std::vector<std::vector<Integer>> enumerate_P(long m, int n, long bound) {
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");
  std::vector<std::vector<Integer>> out;
  std::vector<Integer> cur(static_cast<std::size_t>(n));
  std::function<void(int, long)> rec = [&](int pos, long remaining) {
    const long slots = n - pos;
    if (slots == 0) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (long x = -bound; x <= bound; ++x) {
      const long rest = remaining - x;
      if (rest < -(slots - 1) * bound || rest > (slots - 1) * bound) continue;
      cur[pos] = x;
      rec(pos + 1, rest);
    }
  };
  if (n > 0) rec(0, m);
  return out;
}

/// The three lattices of the BRST identification: theta_perp (C_n),
/// eta_perp (-C_n) and phi (identity of rank n).
struct BrstLattices {
  IntegralLattice theta_perp, eta_perp, phi;
};

inline BrstLattices brst_lattices(int n) {
  return {cartan_lattice(n, 1), cartan_lattice(n, -1), {Matrix::identity(static_cast<std::size_t>(n))}};
}

}  // namespace voacert
