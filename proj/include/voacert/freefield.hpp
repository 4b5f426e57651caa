#pragma once

// Symplectic bosons (beta, gamma) and free fermions (b, c) in the (j)-mode
// convention a(z) = sum a_{(j)} z^{-j-1}:
//   [beta^i_{(m)}, gamma^j_{(n)}] = delta_{ij} delta_{m+n,-1}
//   {b^i_{(m)},    c^j_{(n)}}     = delta_{ij} delta_{m+n,-1}
// Modes with m >= 0 annihilate the vacuum. Levels of bilinear currents are read
// off from a_{(1)} b_{(-1)} |0> on an explicit Fock space.

#include "voacert/linalg.hpp"
#include "voacert/rational.hpp"

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace voacert {

enum class Species { beta, gamma, b, c };

inline bool is_fermionic(Species s) { return s == Species::b || s == Species::c; }

struct FreeField {
  Species species;
  int index;  // 1-based pair label
  friend auto operator<=>(const FreeField&, const FreeField&) = default;
};

inline std::string to_string(const FreeField& f) {
  static const char* names[] = {"beta", "gamma", "b", "c"};
  return std::string(names[static_cast<int>(f.species)]) + "[" + std::to_string(f.index) + "]";
}

/// Coefficient of (z-w)^{-1} in a(z)b(w); equivalently [a_{(0)}, b_{(-1)}].
inline int contraction(const FreeField& a, const FreeField& b) {
  if (a.index != b.index) return 0;
  using S = Species;
  if (a.species == S::beta && b.species == S::gamma) return 1;
  if (a.species == S::gamma && b.species == S::beta) return -1;
  if ((a.species == S::b && b.species == S::c) || (a.species == S::c && b.species == S::b)) return 1;
  return 0;
}

struct FreeFieldSystem {
  int n;
  std::vector<FreeField> generators() const {
    std::vector<FreeField> out;
    for (Species s : {Species::beta, Species::gamma, Species::b, Species::c})
      for (int i = 1; i <= n; ++i) out.push_back({s, i});
    return out;
  }
};

/// sum of coefficient * :A B: over ordered generator pairs (A, B).
class BilinearCurrent {
 public:
  using Key = std::pair<FreeField, FreeField>;

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const FreeField& a, const FreeField& b, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({a, b}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  BilinearCurrent scaled(const Rational& s) const {
    BilinearCurrent out;
    for (const auto& [k, c] : terms_) out.add(k.first, k.second, c * s);
    return out;
  }
  friend BilinearCurrent operator+(BilinearCurrent a, const BilinearCurrent& b) {
    for (const auto& [k, c] : b.terms_) a.add(k.first, k.second, c);
    return a;
  }
  friend bool operator==(const BilinearCurrent&, const BilinearCurrent&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      if (!out.empty()) out += c < 0 ? " - " : " + ";
      else if (c < 0) out += "-";
      Rational a = abs(c);
      if (a != 1) out += a.get_str() + "*";
      out += ":" + voacert::to_string(k.first) + " " + voacert::to_string(k.second) + ":";
    }
    return out;
  }

 private:
  std::map<Key, Rational> terms_;
};

// ---------------------------------------------------------------------------
// Fock space

struct FockMode {
  FreeField field;
  int index;
  friend auto operator<=>(const FockMode&, const FockMode&) = default;
};

/// Creation monomials (all indices < 0) in ascending order; fermionic modes
/// appear at most once.
using FockMonomial = std::vector<FockMode>;

class FockState {
 public:
  static FockState vacuum() {
    FockState s;
    s.terms_[{}] = 1;
    return s;
  }
  const std::map<FockMonomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational vacuum_coefficient() const {
    auto it = terms_.find({});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  void add(const FockMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  void add(const FockState& o, const Rational& s = 1) {
    for (const auto& [m, c] : o.terms_) add(m, c * s);
  }
  /// Twice the conformal weight; every generator has weight 1/2.
  int max_weight2() const {
    int w = 0;
    for (const auto& [m, c] : terms_) {
      int t = 0;
      for (const auto& x : m) t += -2 * x.index - 1;
      w = std::max(w, t);
    }
    return w;
  }
  friend bool operator==(const FockState&, const FockState&) = default;

 private:
  std::map<FockMonomial, Rational> terms_;
};

/// Applies a single free-field mode to a Fock state.
inline FockState apply_free_mode(const FockMode& x, const FockState& s) {
  FockState out;
  const bool x_odd = is_fermionic(x.field.species);
  for (const auto& [m, c] : s.terms()) {
    if (x.index < 0) {
      // creation: insert in order, picking up a sign for each odd mode passed
      auto pos = std::lower_bound(m.begin(), m.end(), x);
      if (pos != m.end() && *pos == x && x_odd) continue;
      int sign = 1;
      if (x_odd)
        for (auto it = m.begin(); it != pos; ++it)
          if (is_fermionic(it->field.species)) sign = -sign;
      FockMonomial r(m.begin(), pos);
      r.push_back(x);
      r.insert(r.end(), pos, m.end());
      out.add(r, c * sign);
    } else {
      // annihilation: contract with each creation mode in turn
      int sign = 1;
      for (std::size_t k = 0; k < m.size(); ++k) {
        const FockMode& y = m[k];
        if (x.index + y.index == -1) {
          const int kappa = contraction(x.field, y.field);
          if (kappa != 0) {
            FockMonomial r = m;
            r.erase(r.begin() + static_cast<std::ptrdiff_t>(k));
            out.add(r, c * sign * kappa);
          }
        }
        if (x_odd && is_fermionic(y.field.species)) sign = -sign;
      }
    }
  }
  return out;
}

/// (:A B:)_{(m)} s = sum_{j<0} A_{(j)} B_{(m-j-1)} s + (+/-) sum_{j>=0} B_{(m-j-1)} A_{(j)} s
inline FockState apply_normal_ordered(const FreeField& a, const FreeField& b, int m, const FockState& s) {
  FockState out;
  if (s.is_zero()) return out;
  const int sign = is_fermionic(a.species) && is_fermionic(b.species) ? -1 : 1;
  // Modes of index > weight bound annihilate everything in reach; both sums
  // are therefore finite.
  const int bound = s.max_weight2() + std::abs(m) + 2;
  for (int j = -1; j >= -bound; --j)
    out.add(apply_free_mode({a, j}, apply_free_mode({b, m - j - 1}, s)));
  for (int j = 0; j <= bound; ++j)
    out.add(apply_free_mode({b, m - j - 1}, apply_free_mode({a, j}, s)), sign);
  return out;
}

inline FockState apply_current(const BilinearCurrent& J, int m, const FockState& s) {
  FockState out;
  for (const auto& [k, c] : J.terms()) out.add(apply_normal_ordered(k.first, k.second, m, s), c);
  return out;
}

/// Coefficient of (z-w)^{-2} in a(z) b(w), read off as a_{(1)} b_{(-1)} |0>.
inline Rational ope_level(const BilinearCurrent& a, const BilinearCurrent& b) {
  const FockState state = apply_current(a, 1, apply_current(b, -1, FockState::vacuum()));
  for (const auto& [m, c] : state.terms())
    if (!m.empty()) throw std::logic_error("ope_level: weight-zero image is not a multiple of the vacuum");
  return state.vacuum_coefficient();
}

/// J^{rho,a} = sum_i rho_{i,a} (:gamma^i beta^i: + :b^i c^i:), one current per column.
inline std::vector<BilinearCurrent> current_from_weights(const Matrix& rho) {
  std::vector<BilinearCurrent> out(rho.cols());
  for (std::size_t a = 0; a < rho.cols(); ++a)
    for (std::size_t i = 0; i < rho.rows(); ++i) {
      const int idx = static_cast<int>(i) + 1;
      out[a].add({Species::gamma, idx}, {Species::beta, idx}, rho(i, a));
      out[a].add({Species::b, idx}, {Species::c, idx}, rho(i, a));
    }
  return out;
}

inline BilinearCurrent boson_part(const BilinearCurrent& J) {
  BilinearCurrent out;
  for (const auto& [k, c] : J.terms())
    if (!is_fermionic(k.first.species) && !is_fermionic(k.second.species)) out.add(k.first, k.second, c);
  return out;
}

inline BilinearCurrent fermion_part(const BilinearCurrent& J) {
  BilinearCurrent out;
  for (const auto& [k, c] : J.terms())
    if (is_fermionic(k.first.species) && is_fermionic(k.second.species)) out.add(k.first, k.second, c);
  return out;
}

/// level(J^{rho,a}, J^{rho,b}) for all pairs of columns.
inline Matrix level_matrix(const std::vector<BilinearCurrent>& currents) {
  Matrix out(currents.size(), currents.size());
  for (std::size_t a = 0; a < currents.size(); ++a)
    for (std::size_t b = 0; b < currents.size(); ++b) out(a, b) = ope_level(currents[a], currents[b]);
  return out;
}

}  // namespace voacert
