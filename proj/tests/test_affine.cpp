#include "support.hpp"
#include "voacert/affine.hpp"
#include "voacert/parse.hpp"
#include "voacert/singular.hpp"
#include "voacert/zhu.hpp"

#include <gtest/gtest.h>

using namespace voacert;
using namespace testing_support;

namespace {

State single(const LieSuperalgebra& g, std::vector<Mode> word) { return normal_order(g, word); }

State without_c2(const State& s) {
  State out(s.level());
  for (const auto& [m, c] : s.terms())
    if (!c2_member(m)) out.add(m, c);
  return out;
}

}  // namespace

TEST(Affine, VacuumIsAnnihilatedByNonNegativeModes) {
  const auto g = build_psl(2);
  for (int a = 0; a < g.dim(); ++a)
    for (int m = 0; m <= 2; ++m) EXPECT_TRUE(apply_mode(g, {a, m}, State::vacuum()).is_zero());
}

TEST(Affine, ChiForNEqualsTwo) {
  const auto g = build_psl(2);
  const State chi = vector_chi(g);
  EXPECT_EQ(to_string(g, chi), "E[1,3](-1) E[1,4](-1) |0>");
  EXPECT_EQ(chi.degree(), 2);
  EXPECT_TRUE(apply_mode(g, {g.root(3, 4), 0}, chi).is_zero());
  EXPECT_TRUE(apply_mode(g, {g.root(4, 1), 1}, chi).is_zero());
  const State plus = vector_chi_plus(g);
  EXPECT_FALSE(plus.is_zero());
  EXPECT_EQ(to_string(g, plus), "E[1,2](-1) E[1,2](-1) |0>");
}

TEST(Affine, OddSquareVanishes) {
  const auto g = build_psl(2);
  const int odd = g.root(1, 3);
  EXPECT_TRUE(single(g, {{odd, -1}, {odd, -1}}).is_zero());
}

TEST(Affine, TranslationExamples) {
  const auto g = build_psl(2);
  EXPECT_TRUE(apply_T(g, State::vacuum()).is_zero());
  const int e13 = g.root(1, 3), e14 = g.root(1, 4);
  const State expected = single(g, {{e13, -2}, {e14, -1}}) + single(g, {{e13, -1}, {e14, -2}});
  EXPECT_EQ(apply_T(g, vector_chi(g)), expected);
  for (int a = 0; a < g.dim(); ++a)
    EXPECT_EQ(apply_T(g, single(g, {{a, -2}})), single(g, {{a, -3}}).scaled(2));
}

TEST(Affine, EmptyWordIsIdentity) {
  const auto g = build_psl(3);
  EXPECT_EQ(apply_word(g, {}, vector_chi(g)), vector_chi(g));
}

TEST(Affine, ChiPlusWord) {
  for (int n = 2; n <= 3; ++n) {
    const auto g = build_psl(n);
    const auto r = chi_plus_membership(g);
    ASSERT_TRUE(r.scalar.has_value()) << to_string(g, r.produced);
    EXPECT_EQ(abs(*r.scalar), 1);
  }
}

TEST(Affine, ChiMinusNeedsNAtLeastFour) {
  const auto g = build_psl(3);
  EXPECT_THROW(vector_chi_minus(g), PreconditionError);
  EXPECT_THROW(chi_minus_word(g), PreconditionError);
  EXPECT_THROW(vector_chi(build_sl(3)), PreconditionError);
}

TEST(Affine, IsSingular) {
  const auto g = build_psl(2);
  EXPECT_TRUE(is_singular(g, State::vacuum()).singular);
  EXPECT_TRUE(is_singular(g, vector_chi(g)).singular);
  for (int n = 2; n <= 3; ++n) {
    const auto h = build_psl(n);
    const auto r = is_singular(h, vector_chi_plus(h));
    EXPECT_FALSE(r.singular);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(*r.witness, (Mode{h.root(n, n + 1), 0}));
    EXPECT_FALSE(r.image.is_zero());
  }
  const State mixed = single(g, {{0, -1}}) + single(g, {{0, -2}});
  EXPECT_THROW(is_singular(g, mixed), PreconditionError);
}

TEST(Affine, AnnihilationIdentitiesSmallN) {
  for (int n = 2; n <= 3; ++n) {
    const auto g = build_psl(n);
    const State chi = vector_chi(g);
    const auto cases = chi_annihilation_cases(g);
    EXPECT_FALSE(cases.empty());
    for (const auto& c : cases)
      EXPECT_TRUE(apply_mode(g, c.element, c.mode, chi).is_zero()) << c.symbol << "(" << c.mode << ")";
  }
}

TEST(Affine, UWordRejectsBadIndices) {
  const auto g = build_psl(2);
  EXPECT_THROW(u_word(g, 4, 3, 3, 4), std::out_of_range);
  EXPECT_THROW(u_word(g, 1, 4, 3, 4), std::out_of_range);
  EXPECT_THROW(u_word(g, 3, 4, 3, 3), std::out_of_range);
  EXPECT_NO_THROW(u_word(g, 3, 4, 3, 4));
}

// u_{i,j,j,i} = E^{j,1}_{(1)} T E^{i,1}_{(1)} T E^{2n,j}_{(0)} E^{2n-1,i}_{(0)} chi for i < j < 2n.
// Its quadratic part is the printed one up to sign; everything else lies in C2.
TEST(Affine, UVectorDiagonalExpansion) {
  for (int n = 3; n <= 4; ++n) {
    const auto g = build_psl(n);
    for (int i = n + 1; i < 2 * n; ++i)
      for (int j = i + 1; j < 2 * n; ++j) {
        const OperatorWord word{mode_token(g.root(j, 1), 1), Translation{}, mode_token(g.root(i, 1), 1),
                                Translation{}, mode_token(g.root(2 * n, j), 0),
                                mode_token(g.root(2 * n - 1, i), 0)};
        EXPECT_EQ(word, u_word(g, i, j, i, j));
        const State u = apply_word(g, word, vector_chi(g));
        const std::string I = std::to_string(i), J = std::to_string(j);
        const State printed = parse_state(
            g, "D[" + I + ",1](-1) D[" + J + ",1](-1) |0> - E[" + J + "," + I + "](-1) E[" + I + "," + J +
                   "](-1) |0> + E[" + J + ",1](-1) E[1," + J + "](-1) |0> - E[1," + I + "](-1) E[" + I +
                   ",1](-1) |0> - D[" + I + ",1](-2) |0> - D[" + J + ",1](-2) |0> - E[" + I +
                   ",1](-2) |0> - E[1," + J + "](-2) |0>");
        const auto c = proportionality(without_c2(u), without_c2(printed));
        ASSERT_TRUE(c.has_value()) << to_string(g, u);
        EXPECT_EQ(abs(*c), 1);
        const State rest = u - printed.scaled(*c);
        for (const auto& [m, q] : rest.terms()) EXPECT_TRUE(c2_member(m)) << to_string(g, rest);
      }
  }
}

TEST(Affine, SuperCommutatorSoundness) {
  std::mt19937_64 rng(101);
  const auto g = build_psl(2);
  for (int t = 0; t < kInstances; ++t) {
    const Rational level = t % 4 == 3 ? Rational(-2) : Rational(1);
    const State s = random_state(g, rng, 2, 2, 2, level);
    const int x = static_cast<int>(uniform(rng, 0, g.dim() - 1));
    const int y = static_cast<int>(uniform(rng, 0, g.dim() - 1));
    const int m = static_cast<int>(uniform(rng, -2, 2)), n = static_cast<int>(uniform(rng, -2, 2));
    const int sign = koszul_sign(g.parity(x), g.parity(y));
    const State lhs = apply_mode(g, {x, m}, apply_mode(g, {y, n}, s)) -
                      apply_mode(g, {y, n}, apply_mode(g, {x, m}, s)).scaled(sign);
    State rhs = apply_mode(g, g.bracket(x, y), m + n, s);
    if (m + n == 0) rhs.add(s, m * level * g.form(x, y));
    ASSERT_EQ(lhs, rhs) << "instance " << t;
  }
}

TEST(Affine, TranslationCommutator) {
  std::mt19937_64 rng(202);
  const auto g = build_psl(2);
  for (int t = 0; t < kInstances; ++t) {
    const State s = random_state(g, rng);
    const int x = static_cast<int>(uniform(rng, 0, g.dim() - 1));
    const int m = static_cast<int>(uniform(rng, -2, 2));
    const State lhs = apply_T(g, apply_mode(g, {x, m}, s)) - apply_mode(g, {x, m}, apply_T(g, s));
    ASSERT_EQ(lhs, apply_mode(g, {x, m - 1}, s).scaled(-m)) << "instance " << t;
  }
}

TEST(Affine, NormalFormIdempotence) {
  std::mt19937_64 rng(303);
  const auto g = build_psl(2);
  for (int t = 0; t < kInstances; ++t) {
    const State s = random_state(g, rng, 3, 3);
    for (const auto& [m, c] : s.terms()) ASSERT_TRUE(is_canonical(g, m));
    ASSERT_EQ(canonicalize(g, s), s);
    // an arbitrary word, normal-ordered twice
    std::vector<Mode> word;
    for (int k = 0; k < 3; ++k)
      word.push_back({static_cast<int>(uniform(rng, 0, g.dim() - 1)), -static_cast<int>(uniform(rng, 1, 2))});
    const State once = normal_order(g, word);
    ASSERT_EQ(canonicalize(g, once), once);
  }
}

TEST(Affine, DegreeBookkeeping) {
  std::mt19937_64 rng(404);
  const auto g = build_psl(2);
  for (int t = 0; t < kInstances; ++t) {
    const int d = static_cast<int>(uniform(rng, 1, 3));
    const State s = random_homogeneous(g, rng, d);
    if (s.is_zero()) continue;
    ASSERT_EQ(s.degree(), d);
    const int x = static_cast<int>(uniform(rng, 0, g.dim() - 1));
    const int m = static_cast<int>(uniform(rng, -2, d + 1));
    const State img = apply_mode(g, {x, m}, s);
    if (m > d) {
      ASSERT_TRUE(img.is_zero());
    }
    if (!img.is_zero()) {
      ASSERT_EQ(img.degree(), d - m);
    }
    const State ts = apply_T(g, s);
    if (!ts.is_zero()) {
      ASSERT_EQ(ts.degree(), d + 1);
    }
  }
}
