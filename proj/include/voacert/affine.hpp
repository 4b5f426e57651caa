#pragma once

// Mode calculus of the universal affine vertex (super)algebra V^k(g).
//
// A State is a finite rational combination of PBW monomials
//   x^{a_1}_{(m_1)} ... x^{a_r}_{(m_r)} |0>,   m_i < 0,
// kept in canonical order: ascending mode index (deepest first), ties broken by
// basis order, with no repeated odd mode. Modes act through
//   [x_{(m)}, y_{(n)}] = [x,y]_{(m+n)} + m delta_{m+n,0} k (x,y)
// (super-commutator), and x_{(m)}|0> = 0 for m >= 0.

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "voacert/liesuper.hpp"
#include "voacert/rational.hpp"

namespace voacert {

struct Mode {
  int element = 0;  // basis position
  int index = 0;    // m in x_{(m)}

  friend bool operator==(const Mode&, const Mode&) = default;
  friend std::strong_ordering operator<=>(const Mode& a, const Mode& b) {
    if (auto c = a.index <=> b.index; c != 0) return c;
    return a.element <=> b.element;
  }
};

using Monomial = std::vector<Mode>;
using Terms = std::map<Monomial, Rational>;

inline int degree(const Monomial& m) {
  int d = 0;
  for (const auto& x : m) d -= x.index;
  return d;
}

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class State {
 public:
  explicit State(Rational level = 1) : level_(std::move(level)) {}

  static State vacuum(Rational level = 1) {
    State s(std::move(level));
    s.terms_[{}] = 1;
    return s;
  }

  static State from_terms(Terms terms, Rational level) {
    State s(std::move(level));
    for (auto& [m, c] : terms)
      if (c != 0) s.terms_.emplace(m, std::move(c));
    return s;
  }

  const Terms& terms() const { return terms_; }
  const Rational& level() const { return level_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const State& other, const Rational& scale = 1) {
    for (const auto& [m, c] : other.terms_) add(m, scale * c);
  }

  State scaled(const Rational& s) const {
    State out(level_);
    if (s == 0) return out;
    out.terms_ = terms_;
    for (auto& [m, c] : out.terms_) c *= s;
    return out;
  }

  /// Common degree of all terms; nullopt for inhomogeneous or zero states.
  std::optional<int> degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
      const int dm = voacert::degree(m);
      if (d && *d != dm) return std::nullopt;
      d = dm;
    }
    return d;
  }

  friend bool operator==(const State& a, const State& b) {
    return a.level_ == b.level_ && a.terms_ == b.terms_;
  }
  friend State operator+(State a, const State& b) {
    a.add(b);
    return a;
  }
  friend State operator-(State a, const State& b) {
    a.add(b, -1);
    return a;
  }

 private:
  Terms terms_;
  Rational level_;
};

/// True iff every mode of the monomial has index < 0, modes are in canonical
/// order and no odd mode repeats.
inline bool is_canonical(const LieSuperalgebra& g, const Monomial& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].index >= 0) return false;
    if (i == 0) continue;
    if (m[i] < m[i - 1]) return false;
    if (m[i] == m[i - 1] && g.is_odd(m[i].element)) return false;
  }
  return true;
}

namespace detail {

class ModeCalculus {
 public:
  ModeCalculus(const LieSuperalgebra& g, const Rational& level) : g_(g), level_(level) {}

  /// x acting on the canonical monomial mono.
  const Terms& act(const Mode& x, const Monomial& mono) {
    auto key = std::make_pair(x, mono);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Terms out = compute(x, mono);
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

  void act_into(const Mode& x, const Monomial& mono, const Rational& scale, Terms& out) {
    if (scale == 0) return;
    const Terms& t = act(x, mono);
    for (const auto& [m, c] : t) add(out, m, scale * c);
  }

  static void add(Terms& t, const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = t.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) t.erase(it);
    }
  }

 private:
  Terms compute(const Mode& x, const Monomial& mono) {
    Terms out;
    if (mono.empty()) {
      if (x.index < 0) out[{x}] = 1;
      return out;
    }
    const Mode& y = mono.front();
    if (x.index < 0 && (x < y || (x == y && !g_.is_odd(x.element)))) {
      Monomial m;
      m.reserve(mono.size() + 1);
      m.push_back(x);
      m.insert(m.end(), mono.begin(), mono.end());
      out[std::move(m)] = 1;
      return out;
    }
    const Monomial rest(mono.begin() + 1, mono.end());
    if (x == y) {
      // odd creation mode squared: x x = (1/2)[x,x]_{(2m)}; the central part
      // carries m delta_{2m,0} and vanishes for m < 0.
      for (const auto& [z, c] : g_.bracket(x.element, x.element).terms())
        act_into({z, 2 * x.index}, rest, c / 2, out);
      return out;
    }
    // x y R = [x,y]_{(m+n)} R + central + (-1)^{|x||y|} y (x R)
    for (const auto& [z, c] : g_.bracket(x.element, y.element).terms())
      act_into({z, x.index + y.index}, rest, c, out);
    if (x.index + y.index == 0) {
      const Rational central = x.index * level_ * g_.form(x.element, y.element);
      add(out, rest, central);
    }
    const int sign = koszul_sign(g_.parity(x.element), g_.parity(y.element));
    const Terms& inner = act(x, rest);
    for (const auto& [m, c] : inner) act_into(y, m, sign * c, out);
    return out;
  }

  const LieSuperalgebra& g_;
  Rational level_;
  std::map<std::pair<Mode, Monomial>, Terms> memo_;
};

}  // namespace detail

/// x_{(m)} s, re-expressed in canonical PBW order.
inline State apply_mode(const LieSuperalgebra& g, const Mode& x, const State& s) {
  detail::ModeCalculus calc(g, s.level());
  Terms out;
  for (const auto& [m, c] : s.terms()) calc.act_into(x, m, c, out);
  return State::from_terms(std::move(out), s.level());
}

/// (sum_a c_a x^a)_{(m)} s for a linear combination of basis elements.
inline State apply_mode(const LieSuperalgebra& g, const Element& x, int index, const State& s) {
  detail::ModeCalculus calc(g, s.level());
  Terms out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [m, c] : s.terms()) calc.act_into({a, index}, m, ca * c, out);
  return State::from_terms(std::move(out), s.level());
}

/// Normal-orders x_1 x_2 ... x_r |0> (any mode indices), folding right to left.
inline State normal_order(const LieSuperalgebra& g, const std::vector<Mode>& word,
                          const Rational& level = 1) {
  if (is_canonical(g, word)) {
    State s(level);
    s.add(word, 1);
    return s;
  }
  detail::ModeCalculus calc(g, level);
  Terms cur;
  cur[{}] = 1;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    Terms next;
    for (const auto& [m, c] : cur) calc.act_into(*it, m, c, next);
    cur = std::move(next);
  }
  return State::from_terms(std::move(cur), level);
}

/// Rewrites an arbitrary state (monomials possibly out of order) canonically.
inline State canonicalize(const LieSuperalgebra& g, const State& s) {
  State out(s.level());
  for (const auto& [m, c] : s.terms()) out.add(normal_order(g, m, s.level()), c);
  return out;
}

/// Translation operator: T|0> = 0 and [T, x_{(m)}] = -m x_{(m-1)}.
inline State apply_T(const LieSuperalgebra& g, const State& s) {
  State out(s.level());
  for (const auto& [m, c] : s.terms())
    for (std::size_t i = 0; i < m.size(); ++i) {
      Monomial w = m;
      const int n = w[i].index;
      w[i].index = n - 1;
      out.add(normal_order(g, w, s.level()), c * (-n));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Operator words

struct Translation {
  friend bool operator==(const Translation&, const Translation&) = default;
};

struct ModeToken {
  Element element;
  int index = 0;
  std::string symbol;  // display name for composite generators such as H[1,2]; may be empty

  friend bool operator==(const ModeToken& a, const ModeToken& b) {
    return a.index == b.index && a.element == b.element;
  }
};

using WordToken = std::variant<ModeToken, Translation>;
using OperatorWord = std::vector<WordToken>;

inline ModeToken mode_token(int element, int index) { return {Element::basis(element), index, {}}; }

/// Applies the word to s, rightmost token first.
inline State apply_word(const LieSuperalgebra& g, const OperatorWord& w, const State& s) {
  State cur = s;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (std::holds_alternative<Translation>(*it)) {
      cur = apply_T(g, cur);
    } else {
      const auto& tok = std::get<ModeToken>(*it);
      cur = apply_mode(g, tok.element, tok.index, cur);
    }
  }
  return cur;
}

// ---------------------------------------------------------------------------
// Singular vectors

struct SingularityResult {
  bool singular = true;
  std::optional<Mode> witness;  // first mode that does not annihilate
  State image;                  // witness applied to the input
  std::size_t modes_checked = 0;
};

/// Decides x.v = 0 for all x in n^+_hat. The finite set
///   {x_{(0)} : x positive root vector} U {x_{(m)} : x basis, 1 <= m <= deg v}
/// is checked in that order (basis order within each mode index); deeper modes
/// annihilate by grading.
inline SingularityResult is_singular(const LieSuperalgebra& g, const State& s) {
  SingularityResult res;
  res.image = State(s.level());
  if (s.is_zero()) return res;
  const auto d = s.degree();
  if (!d) throw PreconditionError("is_singular requires a homogeneous state");
  auto probe = [&](const Mode& x) {
    ++res.modes_checked;
    State img = apply_mode(g, x, s);
    if (img.is_zero()) return false;
    res.singular = false;
    res.witness = x;
    res.image = std::move(img);
    return true;
  };
  for (int a : g.positive_roots())
    if (probe({a, 0})) return res;
  for (int m = 1; m <= *d; ++m)
    for (int a = 0; a < g.dim(); ++a)
      if (probe({a, m})) return res;
  return res;
}

// ---------------------------------------------------------------------------
// Distinguished vectors of V^1(psl(n|n))

namespace detail {
inline int require_psl(const LieSuperalgebra& g) {
  if (!g.is_psl()) throw PreconditionError("expected psl(n|n), got " + g.name());
  return g.rank_parameter();
}
}  // namespace detail

/// chi = E^{1,2n-1}_{(-1)} E^{1,2n}_{(-1)} |0>
inline State vector_chi(const LieSuperalgebra& g) {
  const int n = detail::require_psl(g);
  return normal_order(g, {{g.root(1, 2 * n - 1), -1}, {g.root(1, 2 * n), -1}}, 1);
}

/// chi_+ = (E^{1,n}_{(-1)})^2 |0>
inline State vector_chi_plus(const LieSuperalgebra& g) {
  const int n = detail::require_psl(g);
  const int e = g.root(1, n);
  return normal_order(g, {{e, -1}, {e, -1}}, 1);
}

/// chi_- = (E^{n+1,2n}_{(-1)} E^{n+2,2n-1}_{(-1)} - E^{n+1,2n-1}_{(-1)} E^{n+2,2n}_{(-1)}) |0>, n >= 4.
inline State vector_chi_minus(const LieSuperalgebra& g) {
  const int n = detail::require_psl(g);
  if (n < 4) throw PreconditionError("chi_minus requires n >= 4");
  State a = normal_order(g, {{g.root(n + 1, 2 * n), -1}, {g.root(n + 2, 2 * n - 1), -1}}, 1);
  State b = normal_order(g, {{g.root(n + 1, 2 * n - 1), -1}, {g.root(n + 2, 2 * n), -1}}, 1);
  return a - b;
}

/// E^{2n-1,n}_{(1)} T E^{2n,n}_{(1)} T
inline OperatorWord chi_plus_word(const LieSuperalgebra& g) {
  const int n = detail::require_psl(g);
  return {mode_token(g.root(2 * n - 1, n), 1), Translation{}, mode_token(g.root(2 * n, n), 1),
          Translation{}};
}

/// E^{n+2,1}_{(1)} T E^{n+1,1}_{(1)} T, n >= 4.
inline OperatorWord chi_minus_word(const LieSuperalgebra& g) {
  const int n = detail::require_psl(g);
  if (n < 4) throw PreconditionError("chi_minus requires n >= 4");
  return {mode_token(g.root(n + 2, 1), 1), Translation{}, mode_token(g.root(n + 1, 1), 1),
          Translation{}};
}

/// Word producing u_{i,k,j,l} from chi, for n+1 <= i < k <= 2n and
/// n+1 <= j < l <= 2n. The zero-mode prefix moves the columns 2n-1, 2n of chi
/// to j, l:
///   l <= 2n-1:             E^{2n,l}_{(0)} E^{2n-1,j}_{(0)}
///   l = 2n, j < 2n-1:      E^{2n-1,j}_{(0)}
///   (j,l) = (2n-1, 2n):    nothing
/// and E^{k,1}_{(1)} T E^{i,1}_{(1)} T then moves row 1 to rows i, k.
inline OperatorWord u_word(const LieSuperalgebra& g, int i, int k, int j, int l) {
  const int n = detail::require_psl(g);
  auto in_block = [n](int a) { return a >= n + 1 && a <= 2 * n; };
  if (!(in_block(i) && in_block(k) && i < k && in_block(j) && in_block(l) && j < l))
    throw std::out_of_range("u_vector indices must satisfy n+1 <= i < k <= 2n and n+1 <= j < l <= 2n");
  OperatorWord w{mode_token(g.root(k, 1), 1), Translation{}, mode_token(g.root(i, 1), 1), Translation{}};
  if (l <= 2 * n - 1) {
    w.push_back(mode_token(g.root(2 * n, l), 0));
    w.push_back(mode_token(g.root(2 * n - 1, j), 0));
  } else if (j < 2 * n - 1) {
    w.push_back(mode_token(g.root(2 * n - 1, j), 0));
  }
  return w;
}

inline State u_vector(const LieSuperalgebra& g, int i, int k, int j, int l) {
  return apply_word(g, u_word(g, i, k, j, l), vector_chi(g));
}

// ---------------------------------------------------------------------------
// Text form: E[1,3](-1) E[1,4](-1) |0>, h[2](-2) |0>, sums with + / -.

inline std::string to_string(const LieSuperalgebra& g, const Mode& x) {
  return g.basis(x.element).label() + "(" + std::to_string(x.index) + ")";
}

inline std::string to_string(const LieSuperalgebra& g, const State& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : s.terms()) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (mag != 1) out += mag.get_str() + " ";
    for (const auto& x : m) out += to_string(g, x) + " ";
    out += "|0>";
  }
  return out;
}

inline std::string to_string(const LieSuperalgebra& g, const Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [a, c] : x.terms()) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (mag != 1) out += mag.get_str() + " ";
    out += g.basis(a).label();
  }
  return out;
}

inline std::string to_string(const LieSuperalgebra& g, const OperatorWord& w) {
  std::string out;
  for (const auto& tok : w) {
    if (!out.empty()) out += " ";
    if (std::holds_alternative<Translation>(tok)) {
      out += "T";
      continue;
    }
    const auto& mt = std::get<ModeToken>(tok);
    const auto& terms = mt.element.terms();
    if (!mt.symbol.empty())
      out += mt.symbol;
    else if (terms.size() == 1 && terms.front().second == 1)
      out += g.basis(terms.front().first).label();
    else
      out += "(" + to_string(g, mt.element) + ")";
    out += "(" + std::to_string(mt.index) + ")";
  }
  return out;
}

}  // namespace voacert
