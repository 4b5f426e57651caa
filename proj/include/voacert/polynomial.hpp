#pragma once

// Commutative polynomials over Q in an ordered variable type.

#include "voacert/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <utility>
#include <string>
#include <vector>

namespace voacert {

template <class Var>
class Polynomial {
 public:
  /// Sorted multiset of variables.
  using Monomial = std::vector<Var>;
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& c) {  // NOLINT: constants convert implicitly
    if (c != 0) terms_[{}] = c;
  }

  static Polynomial variable(const Var& v) {
    Polynomial p;
    p.terms_[{v}] = 1;
    return p;
  }
  static Polynomial monomial(Monomial m, const Rational& c = 1) {
    std::sort(m.begin(), m.end());
    Polynomial p;
    if (c != 0) p.terms_[std::move(m)] = c;
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(Monomial m) const {
    std::sort(m.begin(), m.end());
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const Monomial& sorted, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(sorted, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
    return d;
  }

  bool is_homogeneous(int d) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return static_cast<int>(t.first.size()) == d; });
  }

  Polynomial operator-() const { return scaled(-1); }

  Polynomial scaled(const Rational& s) const {
    Polynomial out;
    if (s == 0) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m;
        m.reserve(ma.size() + mb.size());
        std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
        out.add(m, ca * cb);
      }
    return out;
  }
  friend Polynomial operator*(const Rational& s, const Polynomial& p) { return p.scaled(s); }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend auto operator<=>(const Polynomial& a, const Polynomial& b) { return a.terms_ <=> b.terms_; }

  /// Replaces every variable by a polynomial.
  template <class Out>
  Polynomial<Out> substitute(const std::function<Polynomial<Out>(const Var&)>& f) const {
    Polynomial<Out> out;
    std::map<Var, Polynomial<Out>> cache;
    for (const auto& [m, c] : terms_) {
      Polynomial<Out> term(c);
      for (const Var& v : m) {
        auto it = cache.find(v);
        if (it == cache.end()) it = cache.emplace(v, f(v)).first;
        term = term * it->second;
      }
      out += term;
    }
    return out;
  }

  Rational evaluate(const std::function<Rational(const Var&)>& value) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (const Var& v : m) t *= value(v);
      total += t;
    }
    return total;
  }

  /// The sign-normalised representative of {p, -p}: first coefficient positive.
  Polynomial up_to_sign() const {
    if (terms_.empty() || terms_.begin()->second > 0) return *this;
    return scaled(-1);
  }

  std::string to_string(const std::function<std::string(const Var&)>& name) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Rational a = abs(c);
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;
      std::string body;
      for (const Var& v : m) body += (body.empty() ? "" : "*") + name(v);
      if (body.empty()) {
        out += a.get_str();
      } else {
        if (a != 1) out += a.get_str() + "*";
        out += body;
      }
    }
    return out;
  }

 private:
  Terms terms_;
};

/// Variable for the matrix entry (i, j), 1-based.
using Entry = std::pair<int, int>;
using EntryPolynomial = Polynomial<Entry>;

/// Prints entries as symbol[i,j].
inline std::string to_string(const EntryPolynomial& p, const std::string& symbol) {
  return p.to_string([&](const Entry& e) {
    return symbol + "[" + std::to_string(e.first) + "," + std::to_string(e.second) + "]";
  });
}

}  // namespace voacert
