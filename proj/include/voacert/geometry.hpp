#pragma once

// Minimal nilpotent orbit and minimal sheet of sl(n), exactly over Q.
// Quadratic forms are polynomials in the entries Z[i,j] (1-based).

#include "voacert/linalg.hpp"
#include "voacert/polynomial.hpp"
#include "voacert/rational.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace voacert {

using ZEntry = Entry;
/// Quadratic form in the entries Z[i,j].
using MinorForm = EntryPolynomial;

class UnsupportedRank : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::string form_to_string(const MinorForm& f) { return to_string(f, "Z"); }

inline void require_traceless(const Matrix& z) {
  if (!z.is_square()) throw std::invalid_argument("matrix is not square");
  if (z.trace() != 0) throw std::invalid_argument("matrix is not traceless");
}

/// Matrix unit E^{i,j} (1-based) of size n.
inline Matrix matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i - 1, j - 1) = 1;
  return m;
}

inline Rational evaluate(const MinorForm& f, const Matrix& z, int offset = 0) {
  return f.evaluate([&](const ZEntry& e) -> Rational { return z(e.first - 1 - offset, e.second - 1 - offset); });
}

/// Z[i,j] Z[k,l] - Z[i,l] Z[k,j] for i < k, j < l, with indices shifted by offset.
inline std::vector<MinorForm> minor_generators(int n, int offset = 0) {
  if (n < 2) throw std::invalid_argument("minor_generators requires n >= 2");
  std::vector<MinorForm> out;
  using P = MinorForm;
  for (int i = 1; i <= n; ++i)
    for (int k = i + 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j)
        for (int l = j + 1; l <= n; ++l) {
          const int I = i + offset, K = k + offset, J = j + offset, L = l + offset;
          out.push_back(P::variable({I, J}) * P::variable({K, L}) - P::variable({I, L}) * P::variable({K, J}));
        }
  return out;
}

inline bool minors_vanish(const Matrix& z) {
  const int n = static_cast<int>(z.rows());
  if (n < 2) return true;
  for (const auto& f : minor_generators(n))
    if (evaluate(f, z) != 0) return false;
  return true;
}

/// rank(Z) <= 1 for traceless Z, decided by elimination and cross-checked
/// against the vanishing of all 2x2 minors.
inline bool in_min_orbit_closure(const Matrix& z) {
  require_traceless(z);
  const bool by_rank = rank(z) <= 1;
  if (by_rank != minors_vanish(z)) throw std::logic_error("rank and minor tests disagree");
  return by_rank;
}

/// Rational eigenvalues of multiplicity at least m, from the square-free
/// decomposition of the characteristic polynomial.
inline std::vector<Rational> rational_eigenvalues_with_multiplicity(const Matrix& z, std::size_t m) {
  const auto parts = squarefree_decomposition(characteristic_polynomial(z));
  std::vector<Rational> out;
  for (std::size_t k = m; k <= parts.size(); ++k) {
    const UPoly& f = parts[k - 1];
    if (f.degree() == 1) out.push_back(-f.coeff(0) / f.coeff(1));
  }
  return out;
}

/// Z lies in the closure of the minimal sheet iff Z = a Id + u v^T for some a.
/// For n >= 3 such an a is an eigenvalue of multiplicity >= n-1, hence unique
/// and rational. For n = 2 every traceless matrix qualifies (a may be irrational).
inline bool in_sheet_closure(const Matrix& z) {
  require_traceless(z);
  const std::size_t n = z.rows();
  if (n <= 2) return true;
  std::vector<Rational> candidates{0};
  for (const auto& a : rational_eigenvalues_with_multiplicity(z, n - 1)) candidates.push_back(a);
  for (const auto& a : candidates)
    if (rank(z - a * Matrix::identity(n)) <= 1) return true;
  return false;
}

/// The matrix diag(Y1 (n-1), -Y1, ..., -Y1) with first row (., Y2, ..., Yn).
inline Matrix sheet_matrix(const std::vector<Rational>& y) {
  const std::size_t n = y.size();
  if (n < 2) throw std::invalid_argument("sheet_matrix requires n >= 2");
  Matrix m(n, n);
  m(0, 0) = y[0] * static_cast<long>(n - 1);
  for (std::size_t k = 1; k < n; ++k) {
    m(k, k) = -y[0];
    m(0, k) = y[k];
  }
  return m;
}

struct SheetSample {
  std::vector<Rational> y;
  Matrix r;
  Matrix r_inverse;
  Matrix z;
};

namespace detail {
inline long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Rational draw_rational(std::mt19937_64& rng) {
  return ratio(draw(rng, -9, 9), draw(rng, 1, 5));
}
}  // namespace detail

/// A product of integer elementary matrices and its exact inverse.
inline std::pair<Matrix, Matrix> random_unipotent(std::size_t n, std::mt19937_64& rng, int factors = 0) {
  if (factors == 0) factors = static_cast<int>(2 * n);
  Matrix r = Matrix::identity(n), inv = Matrix::identity(n);
  for (int f = 0; f < factors; ++f) {
    const std::size_t i = detail::draw(rng, 0, static_cast<long>(n) - 1);
    std::size_t j = detail::draw(rng, 0, static_cast<long>(n) - 2);
    if (j >= i) ++j;
    long t = detail::draw(rng, -3, 3);
    if (t == 0) t = 1;
    Matrix e = Matrix::identity(n), e_inv = Matrix::identity(n);
    e(i, j) = t;
    e_inv(i, j) = -t;
    r = r * e;
    inv = e_inv * inv;
  }
  return {r, inv};
}

/// R M(Y) R^{-1} with Y and R drawn from the seed.
inline SheetSample sample_sheet_element(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("sample_sheet_element requires n >= 2");
  std::mt19937_64 rng(seed);
  SheetSample s;
  for (int k = 0; k < n; ++k) s.y.push_back(detail::draw_rational(rng));
  auto [r, inv] = random_unipotent(static_cast<std::size_t>(n), rng);
  s.r = std::move(r);
  s.r_inverse = std::move(inv);
  s.z = s.r * sheet_matrix(s.y) * s.r_inverse;
  return s;
}

/// Seed for the k-th sample of a run with base seed `seed`.
inline std::uint64_t sample_seed(std::uint64_t seed, std::size_t k) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(k)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

inline bool vanishes_on_sheet(const MinorForm& f, int n, std::size_t samples, std::uint64_t seed = 0) {
  if (n < 4) throw UnsupportedRank("vanishes_on_sheet requires n >= 4");
  for (std::size_t k = 0; k < samples; ++k)
    if (evaluate(f, sample_sheet_element(n, sample_seed(seed, k)).z) != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// The space of 2x2 minors and its splitting

struct MinorIndex {
  int i, k, j, l;  // rows i < k, columns j < l
};

inline std::vector<MinorIndex> minor_indices(int n) {
  std::vector<MinorIndex> out;
  for (int i = 1; i <= n; ++i)
    for (int k = i + 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j)
        for (int l = j + 1; l <= n; ++l) out.push_back({i, k, j, l});
  return out;
}

inline MinorForm minor_form(const MinorIndex& m) {
  using P = MinorForm;
  return P::variable({m.i, m.j}) * P::variable({m.k, m.l}) - P::variable({m.i, m.l}) * P::variable({m.k, m.j});
}

/// Coordinates of f in the minor basis; throws if f is not in the span.
inline std::vector<Rational> minor_coordinates(const MinorForm& f, int n) {
  const auto idx = minor_indices(n);
  std::vector<Rational> c;
  c.reserve(idx.size());
  MinorForm rebuilt;
  for (const auto& m : idx) {
    // Z[i,j] Z[k,l] occurs in exactly one basis minor.
    c.push_back(f.coeff({{m.i, m.j}, {m.k, m.l}}));
    rebuilt += minor_form(m).scaled(c.back());
  }
  if (rebuilt != f) throw std::invalid_argument("form is not a combination of 2x2 minors");
  return c;
}

inline MinorForm form_from_coordinates(const std::vector<Rational>& c, int n) {
  const auto idx = minor_indices(n);
  MinorForm f;
  for (std::size_t a = 0; a < idx.size(); ++a)
    if (c[a] != 0) f += minor_form(idx[a]).scaled(c[a]);
  return f;
}

/// Image of e_i^* (x) e_j: sum_k Z[i,j] Z[k,k] - Z[k,j] Z[i,k].
inline MinorForm v12_image(int n, int i, int j) {
  using P = MinorForm;
  MinorForm f;
  for (int k = 1; k <= n; ++k)
    f += P::variable({i, j}) * P::variable({k, k}) - P::variable({k, j}) * P::variable({i, k});
  return f;
}

/// Contraction of the minor space onto E^* (x) E, as a matrix with n^2 rows
/// (row (a-1) n + (b-1) for e_{ab}) and one column per basis minor.
inline Matrix contraction_matrix(int n) {
  const auto idx = minor_indices(n);
  Matrix c(static_cast<std::size_t>(n * n), idx.size());
  auto row = [n](int a, int b) { return static_cast<std::size_t>((a - 1) * n + (b - 1)); };
  for (std::size_t col = 0; col < idx.size(); ++col) {
    const auto& [i, k, j, l] = idx[col];
    if (i == j) c(row(k, l), col) += 1;
    if (i == l) c(row(k, j), col) -= 1;
    if (k == j) c(row(i, l), col) -= 1;
    if (k == l) c(row(i, j), col) += 1;
  }
  return c;
}

inline std::size_t binomial2(int n) { return static_cast<std::size_t>(n * (n - 1) / 2); }

struct MinorDecomposition {
  int n = 0;
  std::vector<MinorForm> v12;  // the n^2 images of e_i^* (x) e_j
  std::vector<MinorForm> u22;  // a basis of the contraction kernel
  std::size_t v12_rank = 0;
  std::size_t total_rank = 0;
  bool is_direct() const {
    const std::size_t d = binomial2(n) * binomial2(n);
    return v12_rank == static_cast<std::size_t>(n * n) && u22.size() == d - v12_rank && total_rank == d;
  }
};

inline MinorDecomposition minor_decomposition(int n) {
  if (n < 4) throw UnsupportedRank("minor_decomposition requires n >= 4");
  MinorDecomposition d;
  d.n = n;
  const std::size_t dim = binomial2(n) * binomial2(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) d.v12.push_back(v12_image(n, i, j));
  for (const auto& v : nullspace(contraction_matrix(n))) d.u22.push_back(form_from_coordinates(v, n));

  Matrix v12(d.v12.size(), dim);
  for (std::size_t r = 0; r < d.v12.size(); ++r) {
    const auto c = minor_coordinates(d.v12[r], n);
    for (std::size_t a = 0; a < dim; ++a) v12(r, a) = c[a];
  }
  d.v12_rank = rank(v12);
  Matrix all(d.v12.size() + d.u22.size(), dim);
  for (std::size_t r = 0; r < d.v12.size(); ++r)
    for (std::size_t a = 0; a < dim; ++a) all(r, a) = v12(r, a);
  for (std::size_t r = 0; r < d.u22.size(); ++r) {
    const auto c = minor_coordinates(d.u22[r], n);
    for (std::size_t a = 0; a < dim; ++a) all(d.v12.size() + r, a) = c[a];
  }
  d.total_rank = rank(all);
  return d;
}

/// True iff the form lies in the kernel of the contraction.
inline bool in_u22(const MinorForm& f, int n) {
  const auto c = minor_coordinates(f, n);
  return contraction_matrix(n).apply(c) == std::vector<Rational>(static_cast<std::size_t>(n * n));
}

/// f(R Z R^{-1}) as a polynomial in the entries of Z.
inline MinorForm pullback(const MinorForm& f, const Matrix& r, const Matrix& r_inverse) {
  const std::size_t n = r.rows();
  return f.substitute<ZEntry>([&](const ZEntry& e) {
    MinorForm lin;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Rational c = r(e.first - 1, a) * r_inverse(b, e.second - 1);
        if (c != 0) lin += MinorForm::variable({static_cast<int>(a + 1), static_cast<int>(b + 1)}).scaled(c);
      }
    return lin;
  });
}

/// Z[1,n] Z[2,n-1] - Z[1,n-1] Z[2,n]
inline MinorForm sheet_generator(int n) {
  using P = MinorForm;
  return P::variable({1, n}) * P::variable({2, n - 1}) - P::variable({1, n - 1}) * P::variable({2, n});
}

}  // namespace voacert
