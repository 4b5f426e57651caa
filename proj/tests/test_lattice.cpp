#include "support.hpp"
#include "voacert/lattice.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace voacert;
using namespace testing_support;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }
std::vector<Rational> rats(std::initializer_list<Rational> xs) { return {xs.begin(), xs.end()}; }

// gcd of all k x k minors of a 3 x 3 integer matrix, k = 1, 2, 3.
std::vector<Integer> determinantal_divisors(const std::vector<std::vector<Integer>>& a) {
  std::vector<Integer> out(3, 0);
  auto fold = [](Integer& acc, const Integer& v) { mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), Integer(abs(v)).get_mpz_t()); };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) fold(out[0], a[i][j]);
  for (int i = 0; i < 3; ++i)
    for (int k = i + 1; k < 3; ++k)
      for (int j = 0; j < 3; ++j)
        for (int l = j + 1; l < 3; ++l) fold(out[1], a[i][j] * a[k][l] - a[i][l] * a[k][j]);
  Matrix m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = a[i][j];
  out[2] = abs(determinant(m).get_num());
  return out;
}

}  // namespace

TEST(Lattice, CartanLattices) {
  EXPECT_EQ(cartan_lattice(2).gram, Matrix{{2}});
  EXPECT_EQ(cartan_lattice(3).gram, (Matrix{{2, -1}, {-1, 2}}));
  EXPECT_EQ(cartan_lattice(3, -1).gram, (Matrix{{-2, 1}, {1, -2}}));
  EXPECT_TRUE(cartan_lattice(5).is_symmetric());
  EXPECT_TRUE(cartan_lattice(5).is_integral());
  EXPECT_EQ(cartan_lattice(4).rank(), 3u);
}

TEST(Lattice, DiscriminantGroups) {
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(discriminant_group(cartan_lattice(n)), ints({n}));
    EXPECT_EQ(discriminant_group(cartan_lattice(n, -1)), ints({n}));
  }
  EXPECT_TRUE(discriminant_group({Matrix::identity(3)}).empty());
  EXPECT_EQ(discriminant_group({Matrix{{2, 0}, {0, 2}}}), ints({2, 2}));
  EXPECT_THROW(discriminant_group({Matrix{{1, 1}, {1, 1}}}), SingularLattice);
  EXPECT_THROW(discriminant_group({Matrix{{ratio(1, 2)}}}), std::invalid_argument);
}

TEST(Lattice, SmithNormalFormMatchesDeterminantalDivisors) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < kInstances; ++t) {
    std::vector<std::vector<Integer>> a(3, std::vector<Integer>(3));
    for (auto& row : a)
      for (auto& x : row) x = uniform(rng, -6, 6);
    const auto diag = smith_diagonal(a);
    const auto dk = determinantal_divisors(a);
    ASSERT_EQ(diag.size(), 3u);
    Integer prod = 1;
    for (int k = 0; k < 3; ++k) {
      prod *= diag[k];
      ASSERT_EQ(prod, dk[k]) << "instance " << t << " k=" << k;
      if (k > 0 && diag[k] != 0) {
        ASSERT_EQ(diag[k] % diag[k - 1], 0);
      }
    }
  }
}

TEST(Lattice, DecomposeExamples) {
  auto d = decompose_weight(ints({1, -1}));
  EXPECT_EQ(d.lambda0, 0);
  EXPECT_EQ(d.lambda_vee, rats({1}));
  EXPECT_EQ(d.j, 0);

  d = decompose_weight(ints({1, 0, 0}));
  EXPECT_EQ(d.lambda0, Rational(1, 3));
  EXPECT_EQ(d.lambda_vee, rats({Rational(2, 3), Rational(1, 3)}));
  EXPECT_EQ(d.j, 2);

  d = decompose_weight(ints({0, 0, 0}));
  EXPECT_EQ(d.lambda0, 0);
  EXPECT_EQ(d.lambda_vee, rats({0, 0}));
  EXPECT_EQ(d.j, 0);
  EXPECT_THROW(decompose_weight(ints({1})), std::invalid_argument);
}

TEST(Lattice, Projections) {
  for (int n = 2; n <= 5; ++n) {
    const auto [p, q] = projections(n);
    EXPECT_EQ(p + q, Matrix::identity(n));
    EXPECT_TRUE((p * q).is_zero());
    EXPECT_EQ(p * p, p);
    Matrix rho(n, 1);
    for (int i = 0; i < n; ++i) rho(i, 0) = 1;
    EXPECT_TRUE((q * rho).is_zero());
    EXPECT_TRUE((rho_vee(n).transpose() * rho).is_zero());
  }
  EXPECT_EQ(projections(2).second, (Matrix{{ratio(1, 2), ratio(-1, 2)}, {ratio(-1, 2), ratio(1, 2)}}));
}

TEST(Lattice, EnumerateP) {
  EXPECT_EQ(enumerate_P(0, 2, 1), (std::vector<std::vector<Integer>>{ints({-1, 1}), ints({0, 0}), ints({1, -1})}));
  EXPECT_EQ(enumerate_P(1, 2, 1), (std::vector<std::vector<Integer>>{ints({0, 1}), ints({1, 0})}));
  EXPECT_EQ(enumerate_P(0, 3, 1).size(), 7u);
  EXPECT_THROW(enumerate_P(0, 2, -1), std::invalid_argument);
  // brute force over the box
  for (int n = 2; n <= 4; ++n)
    for (long m = -3; m <= 3; ++m) {
      std::size_t count = 0;
      std::vector<long> x(n, -2);
      for (;;) {
        if (std::accumulate(x.begin(), x.end(), 0L) == m) ++count;
        int k = 0;
        while (k < n && x[k] == 2) x[k++] = -2;
        if (k == n) break;
        ++x[k];
      }
      EXPECT_EQ(enumerate_P(m, n, 2).size(), count) << "n=" << n << " m=" << m;
    }
}

// lambda_vee solves C lambda_vee = (lambda_i - lambda_{i+1}).
TEST(Lattice, CoweightViaInverseCartan) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < kInstances; ++t) {
    const int n = static_cast<int>(uniform(rng, 2, 6));
    std::vector<Integer> lambda(n);
    for (auto& x : lambda) x = uniform(rng, -5, 5);
    const auto d = decompose_weight(lambda);
    std::vector<Rational> diff(n - 1);
    for (int i = 0; i + 1 < n; ++i) diff[i] = lambda[i] - lambda[i + 1];
    ASSERT_EQ(d.lambda_vee, inverse(cartan_matrix(n))->apply(diff));

    const auto back = rho_vee(n).apply(d.lambda_vee);
    for (int i = 0; i < n; ++i) ASSERT_EQ(back[i] + d.lambda0, Rational(lambda[i]));

    ASSERT_TRUE(is_integer(d.lambda0 * n));
    for (const auto& v : d.lambda_vee) ASSERT_TRUE(is_integer(v * n));
    ASSERT_EQ(d.class0, d.class_vee);
    Integer sum = 0;
    for (const auto& x : lambda) sum += x;
    ASSERT_EQ(mod_floor(sum + d.j, n), 0);
  }
}

TEST(Lattice, BrstLattices) {
  const auto l = brst_lattices(3);
  EXPECT_EQ(l.theta_perp.gram, cartan_matrix(3));
  EXPECT_EQ(l.eta_perp.gram, Rational(-1) * cartan_matrix(3));
  EXPECT_EQ(l.phi.gram, Matrix::identity(3));
}
