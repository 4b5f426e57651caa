#pragma once

// C2 reduction. psi sends a PBW monomial with every mode at depth -1 to the
// product of its variables X_a in the supercommutative ring C[g*], and every
// monomial with a deeper mode to 0. psi_reduced additionally kills the odd
// variables and writes the even ones in matrix-entry coordinates X[i,j].

#include "voacert/affine.hpp"
#include "voacert/liesuper.hpp"
#include "voacert/polynomial.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace voacert {

inline bool c2_member(const Monomial& m) {
  return std::any_of(m.begin(), m.end(), [](const Mode& x) { return x.index <= -2; });
}

/// Polynomial in the basis variables X_a of an algebra. Monomials are sorted
/// by basis index; odd variables occur at most once.
class SuperPolynomial {
 public:
  using Monomial = std::vector<int>;

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Monomial& sorted, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(sorted, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  friend bool operator==(const SuperPolynomial&, const SuperPolynomial&) = default;

 private:
  std::map<Monomial, Rational> terms_;
};

/// Sorts a word of variables into canonical order. Returns the Koszul sign,
/// or 0 if an odd variable repeats.
inline int super_sort(const LieSuperalgebra& g, std::vector<int>& vars) {
  int sign = 1;
  for (std::size_t i = 1; i < vars.size(); ++i)
    for (std::size_t k = i; k > 0 && vars[k - 1] > vars[k]; --k) {
      if (g.is_odd(vars[k - 1]) && g.is_odd(vars[k])) sign = -sign;
      std::swap(vars[k - 1], vars[k]);
    }
  for (std::size_t i = 1; i < vars.size(); ++i)
    if (vars[i] == vars[i - 1] && g.is_odd(vars[i])) return 0;
  return sign;
}

inline SuperPolynomial super_multiply(const LieSuperalgebra& g, const SuperPolynomial& a,
                                      const SuperPolynomial& b) {
  SuperPolynomial out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      std::vector<int> m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      const int s = super_sort(g, m);
      if (s != 0) out.add(m, ca * cb * s);
    }
  return out;
}

inline SuperPolynomial psi(const LieSuperalgebra& g, const State& s) {
  SuperPolynomial out;
  for (const auto& [m, c] : s.terms()) {
    if (c2_member(m)) continue;
    std::vector<int> vars;
    vars.reserve(m.size());
    for (const Mode& x : m) vars.push_back(x.element);
    const int sign = super_sort(g, vars);
    if (sign != 0) out.add(vars, c * sign);
  }
  return out;
}

inline std::string to_string(const LieSuperalgebra& g, const SuperPolynomial& p) {
  std::string out;
  if (p.is_zero()) return "0";
  for (const auto& [m, c] : p.terms()) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const Rational a = abs(c);
    std::string body;
    for (int v : m) body += (body.empty() ? "" : "*") + ("X[" + g.basis()[v].label() + "]");
    if (body.empty()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += body;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Even part in matrix coordinates

/// Even polynomials in the matrix-entry variables X[i,j].
using EvenPolynomial = EntryPolynomial;

inline std::string to_string(const EvenPolynomial& p) { return to_string(p, "X"); }

namespace detail {
/// Diagonal blocks [lo, hi] of the even part.
inline std::vector<std::pair<int, int>> even_blocks(const LieSuperalgebra& g) {
  const auto& r = *g.realisation();
  std::vector<std::pair<int, int>> blocks{{1, r.even_size}};
  if (r.size > r.even_size) blocks.emplace_back(r.even_size + 1, r.size);
  return blocks;
}
}  // namespace detail

/// Eliminates the last diagonal entry of each block via tracelessness, so
/// that polynomials on the even part have a unique representative.
inline EvenPolynomial canonical_chart(const LieSuperalgebra& g, const EvenPolynomial& p) {
  const auto blocks = detail::even_blocks(g);
  return p.substitute<Entry>([&](const Entry& e) {
    for (const auto& [lo, hi] : blocks)
      if (e.first == hi && e.second == hi) {
        EvenPolynomial s;
        for (int a = lo; a < hi; ++a) s -= EvenPolynomial::variable({a, a});
        return s;
      }
    return EvenPolynomial::variable(e);
  });
}

/// Image of an even basis element as a linear form in matrix entries.
inline EvenPolynomial chart_variable(const LieSuperalgebra& g, int a) {
  const BasisIndex& b = g.basis()[a];
  if (b.parity == Parity::odd) return {};
  if (b.is_cartan())
    return EvenPolynomial::variable({b.i, b.i}) - EvenPolynomial::variable({b.i + 1, b.i + 1});
  return EvenPolynomial::variable({b.i, b.j});
}

/// sigma o psi: odd variables set to zero, even ones in matrix coordinates.
inline EvenPolynomial psi_reduced(const LieSuperalgebra& g, const State& s) {
  const SuperPolynomial p = psi(g, s);
  EvenPolynomial out;
  for (const auto& [m, c] : p.terms()) {
    if (std::any_of(m.begin(), m.end(), [&](int v) { return g.is_odd(v); })) continue;
    EvenPolynomial term(c);
    for (int v : m) term = term * chart_variable(g, v);
    out += term;
  }
  return canonical_chart(g, out);
}

/// Sets every variable with an index outside [lo, hi] to zero.
inline EvenPolynomial restrict_to_block(const EvenPolynomial& p, int lo, int hi) {
  EvenPolynomial out;
  auto inside = [&](const Entry& e) { return e.first >= lo && e.first <= hi && e.second >= lo && e.second <= hi; };
  for (const auto& [m, c] : p.terms())
    if (std::all_of(m.begin(), m.end(), inside)) out.add(m, c);
  return out;
}

/// X[i,j] X[k,l] - X[k,j] X[i,l] in canonical coordinates.
inline EvenPolynomial chart_minor(const LieSuperalgebra& g, int i, int k, int j, int l) {
  using P = EvenPolynomial;
  return canonical_chart(g, P::variable({i, j}) * P::variable({k, l}) - P::variable({k, j}) * P::variable({i, l}));
}

struct MinorCoverReport {
  int n = 0;
  std::size_t vectors_checked = 0;
  std::size_t minors_expected = 0;
  std::size_t minors_produced = 0;
  std::vector<std::string> missing;     // minors no u-vector produced
  std::vector<std::string> extra;       // images that are not minors
  std::vector<std::string> mismatched;  // u_{i,k,j,l} not giving its own minor
  bool covered() const { return missing.empty() && extra.empty() && mismatched.empty(); }

  nlohmann::json to_json() const {
    return {{"n", n},
            {"vectors_checked", vectors_checked},
            {"minors_expected", minors_expected},
            {"minors_produced", minors_produced},
            {"covered", covered()},
            {"missing", missing},
            {"extra", extra},
            {"mismatched", mismatched}};
  }
};

/// Runs every u_{i,k,j,l}, n+1 <= i < k <= 2n, n+1 <= j < l <= 2n, through
/// psi_reduced and compares the images with the 2x2 minors of the
/// bottom-right block. The top block is set to zero first: on the subvariety
/// cut out by chi_+ it is a single point.
inline MinorCoverReport minor_cover_check(int n) {
  const LieSuperalgebra g = build_psl(n);
  MinorCoverReport report;
  report.n = n;
  const int lo = n + 1, hi = 2 * n;
  std::set<EvenPolynomial> minors, produced;
  for (int i = lo; i <= hi; ++i)
    for (int k = i + 1; k <= hi; ++k)
      for (int j = lo; j <= hi; ++j)
        for (int l = j + 1; l <= hi; ++l) minors.insert(chart_minor(g, i, k, j, l).up_to_sign());
  report.minors_expected = minors.size();
  for (int i = lo; i <= hi; ++i)
    for (int k = i + 1; k <= hi; ++k)
      for (int j = lo; j <= hi; ++j)
        for (int l = j + 1; l <= hi; ++l) {
          const EvenPolynomial image = restrict_to_block(psi_reduced(g, u_vector(g, i, k, j, l)), lo, hi);
          ++report.vectors_checked;
          const EvenPolynomial key = image.up_to_sign();
          produced.insert(key);
          if (key != chart_minor(g, i, k, j, l).up_to_sign())
            report.mismatched.push_back("u[" + std::to_string(i) + "," + std::to_string(k) + "," +
                                        std::to_string(j) + "," + std::to_string(l) + "] -> " + to_string(image));
        }
  for (const auto& m : minors)
    if (!produced.count(m)) report.missing.push_back(to_string(m));
  for (const auto& p : produced) {
    if (minors.count(p)) ++report.minors_produced;
    else report.extra.push_back(to_string(p));
  }
  return report;
}

}  // namespace voacert
