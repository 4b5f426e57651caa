#pragma once

// The finite list of mode actions that must kill chi, and the checks that
// chi_+ and chi_- lie in the submodule generated by chi.

#include "voacert/affine.hpp"
#include "voacert/liesuper.hpp"

#include <optional>
#include <string>
#include <vector>

namespace voacert {

struct AnnihilationCase {
  std::string family;  // e.g. "E[2n-1,j]"
  std::string symbol;  // the concrete generator, e.g. "E[3,4]"
  Element element;
  int mode;
};

/// Every generator x_{(m)}, 0 <= m <= max_mode, in the eight families
///   E^{2n-1,j}, E^{2n,j} (j != 1), E^{i,1} (i != 1, 2n-1, 2n), E^{2n-1,1},
///   E^{2n,1}, H^{2n-2,2n-1}, H^{2n-1,2n}, H^{1,2}.
/// Zero modes are included only for elements of n_+; a Cartan or negative
/// root zero mode acts on chi by a weight, not by annihilation. H^{2n-2,2n-1}
/// is not supertraceless for n = 2 and contributes nothing there.
inline std::vector<AnnihilationCase> chi_annihilation_cases(const LieSuperalgebra& g, int max_mode = 2) {
  const int n = detail::require_psl(g);
  std::vector<AnnihilationCase> out;
  auto root = [&](const std::string& family, int i, int j) {
    const std::string sym = "E[" + std::to_string(i) + "," + std::to_string(j) + "]";
    for (int m = i < j ? 0 : 1; m <= max_mode; ++m) out.push_back({family, sym, Element::basis(g.root(i, j)), m});
  };
  auto cartan = [&](const std::string& family, int i, int j) {
    const std::string sym = "H[" + std::to_string(i) + "," + std::to_string(j) + "]";
    for (int m = 1; m <= max_mode; ++m) out.push_back({family, sym, h_element(g, i, j), m});
  };
  for (int j = 2; j <= 2 * n; ++j)
    if (j != 2 * n - 1) root("E[2n-1,j]", 2 * n - 1, j);
  for (int j = 2; j < 2 * n; ++j) root("E[2n,j]", 2 * n, j);
  for (int i = 2; i < 2 * n - 1; ++i) root("E[i,1]", i, 1);
  root("E[2n-1,1]", 2 * n - 1, 1);
  root("E[2n,1]", 2 * n, 1);
  if (n >= 3) cartan("H[2n-2,2n-1]", 2 * n - 2, 2 * n - 1);
  cartan("H[2n-1,2n]", 2 * n - 1, 2 * n);
  cartan("H[1,2]", 1, 2);
  return out;
}

/// c with a = c b, if it exists. Both zero gives c = 1; exactly one zero gives nothing.
inline std::optional<Rational> proportionality(const State& a, const State& b) {
  if (b.is_zero()) return a.is_zero() ? std::optional<Rational>(1) : std::nullopt;
  const auto& [m, cb] = *b.terms().begin();
  const Rational c = a.coeff(m) / cb;
  if (c == 0 || !(a == b.scaled(c))) return std::nullopt;
  return c;
}

struct MembershipResult {
  State produced;
  State target;
  std::optional<Rational> scalar;
  bool passed() const { return scalar && abs(*scalar) == 1; }
};

inline MembershipResult chi_plus_membership(const LieSuperalgebra& g) {
  MembershipResult r{apply_word(g, chi_plus_word(g), vector_chi(g)), vector_chi_plus(g), std::nullopt};
  r.scalar = proportionality(r.produced, r.target);
  return r;
}

inline MembershipResult chi_minus_membership(const LieSuperalgebra& g) {
  MembershipResult r{apply_word(g, chi_minus_word(g), vector_chi(g)), vector_chi_minus(g), std::nullopt};
  r.scalar = proportionality(r.produced, r.target);
  return r;
}

}  // namespace voacert
