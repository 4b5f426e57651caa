#include "support.hpp"
#include "voacert/parse.hpp"
#include "voacert/zhu.hpp"

#include <gtest/gtest.h>

using namespace voacert;
using namespace testing_support;

namespace {

using P = EvenPolynomial;
P X(int i, int j) { return P::variable({i, j}); }

bool touches_top_block(const Entry& e, int n) { return e.first <= n || e.second <= n; }

}  // namespace

TEST(Zhu, C2Membership) {
  const auto g = build_psl(2);
  EXPECT_TRUE(c2_member({{g.root(1, 3), -2}}));
  EXPECT_FALSE(c2_member({{g.root(1, 3), -1}, {g.root(1, 4), -1}}));
  const State d = parse_state(g, "D[3,1](-2) |0>");
  for (const auto& [m, c] : d.terms()) EXPECT_TRUE(c2_member(m));
}

TEST(Zhu, PsiOfChi) {
  for (int n = 2; n <= 4; ++n) {
    const auto g = build_psl(n);
    SuperPolynomial expected;
    expected.add({g.root(1, 2 * n - 1), g.root(1, 2 * n)}, 1);
    EXPECT_EQ(psi(g, vector_chi(g)), expected);
    EXPECT_TRUE(psi_reduced(g, vector_chi(g)).is_zero());
  }
  const auto g = build_psl(2);
  EXPECT_EQ(to_string(g, psi(g, vector_chi(g))), "X[E[1,3]]*X[E[1,4]]");
}

TEST(Zhu, SuperSortSigns) {
  const auto g = build_psl(2);
  const int a = g.root(1, 3), b = g.root(1, 4), e = g.root(1, 2);
  std::vector<int> v{b, a};
  EXPECT_EQ(super_sort(g, v), -1);
  std::vector<int> w{b, e, a};
  EXPECT_EQ(super_sort(g, w), -1);
  std::vector<int> z{a, e, a};
  EXPECT_EQ(super_sort(g, z), 0);
  std::vector<int> y{e, e};
  EXPECT_EQ(super_sort(g, y), 1);
}

TEST(Zhu, PsiKillsC2) {
  std::mt19937_64 rng(21);
  const auto g = build_psl(2);
  for (int t = 0; t < kInstances; ++t) {
    State s = random_state(g, rng, 3, 3, 3);
    // multiply every term by a deep mode so the whole state lies in C2
    const int x = static_cast<int>(uniform(rng, 0, g.dim() - 1));
    State deep(s.level());
    for (const auto& [m, c] : s.terms()) {
      std::vector<Mode> word{{x, -static_cast<int>(uniform(rng, 2, 3))}};
      word.insert(word.end(), m.begin(), m.end());
      deep.add(normal_order(g, word), c);
    }
    for (const auto& [m, c] : deep.terms()) ASSERT_TRUE(c2_member(m));
    ASSERT_TRUE(psi(g, deep).is_zero());
  }
}

TEST(Zhu, PsiIsParityConsistent) {
  std::mt19937_64 rng(22);
  const auto g = build_psl(2);
  for (int t = 0; t < kInstances; ++t) {
    const State s = random_state(g, rng, 3, 3, 1);
    for (const auto& [m, c] : s.terms()) {
      State one(s.level());
      one.add(m, c);
      int odd_modes = 0;
      for (const auto& x : m) odd_modes += g.is_odd(x.element);
      const auto image = psi(g, one);
      for (const auto& [vars, q] : image.terms()) {
        int odd_vars = 0;
        for (int v : vars) odd_vars += g.is_odd(v);
        ASSERT_EQ(odd_vars % 2, odd_modes % 2);
      }
    }
  }
}

TEST(Zhu, PsiOfTranslateVanishes) {
  std::mt19937_64 rng(23);
  const auto g = build_psl(2);
  for (int t = 0; t < kInstances; ++t) {
    const State v = random_state(g, rng, 3, 3, 1);
    const State tv = apply_T(g, v);
    for (const auto& [m, c] : tv.terms()) ASSERT_TRUE(c2_member(m));
    ASSERT_TRUE(psi(g, tv).is_zero());
  }
}

TEST(Zhu, PsiReducedDropsOddVariables) {
  std::mt19937_64 rng(24);
  const auto g = build_psl(2);
  for (int t = 0; t < kInstances; ++t) {
    const State s = random_state(g, rng, 3, 2, 1);
    P expected;
    const auto image = psi(g, s);
    for (const auto& [vars, c] : image.terms()) {
      P term(c);
      for (int v : vars) term = term * chart_variable(g, v);
      expected += term;
    }
    ASSERT_EQ(psi_reduced(g, s), canonical_chart(g, expected));
  }
}

TEST(Zhu, CanonicalChartEliminatesLastDiagonal) {
  const auto g = build_psl(2);
  EXPECT_EQ(canonical_chart(g, X(2, 2)), -X(1, 1));
  EXPECT_EQ(canonical_chart(g, X(4, 4)), -X(3, 3));
  EXPECT_EQ(canonical_chart(g, X(1, 2)), X(1, 2));
  EXPECT_EQ(chart_variable(g, g.cartan(3)), X(3, 3) - X(4, 4));
  EXPECT_TRUE(chart_variable(g, g.root(1, 3)).is_zero());
}

// The quadratic part of u_{i,j,j,i} reduces to the printed polynomial in the
// D and root variables, and psi_reduced gives X_{ij} X_{ji} - X_{jj} X_{ii}
// once the top block is set to zero.
TEST(Zhu, DiagonalUVector) {
  for (int n = 3; n <= 4; ++n) {
    const auto g = build_psl(n);
    for (int i = n + 1; i < 2 * n; ++i)
      for (int j = i + 1; j < 2 * n; ++j) {
        const State u = u_vector(g, i, j, i, j);
        const std::string I = std::to_string(i), J = std::to_string(j);
        const State printed = parse_state(g, "D[" + I + ",1](-1) D[" + J + ",1](-1) |0> - E[" + J + "," + I +
                                                 "](-1) E[" + I + "," + J + "](-1) |0> + E[" + J + ",1](-1) E[1," +
                                                 J + "](-1) |0> - E[1," + I + "](-1) E[" + I + ",1](-1) |0>");
        const SuperPolynomial a = psi(g, u), b = psi(g, printed);
        SuperPolynomial neg;
        for (const auto& [m, c] : b.terms()) neg.add(m, -c);
        EXPECT_TRUE(a == b || a == neg);

        const P reduced = restrict_to_block(psi_reduced(g, u), n + 1, 2 * n);
        const P expected = canonical_chart(g, X(i, j) * X(j, i) - X(j, j) * X(i, i));
        EXPECT_EQ(reduced.up_to_sign(), expected.up_to_sign()) << to_string(reduced);
      }
  }
}

// psi_reduced(u_{i,k,j,l}) is the minor modulo the top-block coordinates.
TEST(Zhu, UVectorImagesAreMinors) {
  for (int n = 2; n <= 3; ++n) {
    const auto g = build_psl(n);
    for (int i = n + 1; i <= 2 * n; ++i)
      for (int k = i + 1; k <= 2 * n; ++k)
        for (int j = n + 1; j <= 2 * n; ++j)
          for (int l = j + 1; l <= 2 * n; ++l) {
            const P image = psi_reduced(g, u_vector(g, i, k, j, l));
            const P minor = chart_minor(g, i, k, j, l);
            const P bottom = restrict_to_block(image, n + 1, 2 * n);
            const Rational sign = bottom == minor ? 1 : -1;
            const P rest = image - minor.scaled(sign);
            for (const auto& [m, c] : rest.terms()) {
              const bool has_top = std::any_of(m.begin(), m.end(), [&](const Entry& e) { return touches_top_block(e, n); });
              ASSERT_TRUE(has_top) << to_string(image);
            }
            ASSERT_EQ(bottom, minor.scaled(sign));
          }
  }
}

TEST(Zhu, MinorCoverSmall) {
  const std::size_t expected[] = {0, 0, 1, 9};
  for (int n = 2; n <= 3; ++n) {
    const auto rep = minor_cover_check(n);
    EXPECT_TRUE(rep.covered()) << rep.to_json().dump();
    EXPECT_EQ(rep.minors_expected, expected[n]);
    EXPECT_EQ(rep.minors_produced, expected[n]);
  }
}
