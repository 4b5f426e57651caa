#pragma once

// Finite-dimensional Lie superalgebras as exact structure-constant tables.
//
// Built-ins are realised inside matrices: sl(n) in gl(n), and psl(n|n) as
// supertraceless (2n)x(2n) supermatrices modulo the identity. For psl(n|n)
// every element is stored through its unique representative of ordinary
// trace zero, which is the convention under which
//   [E^{i,j}, E^{j,i}] = (1/n) sum_{k != j, k <= n} H^{j,k} + (1/n) sum_{k != i, k > n} H^{i,k}
// holds literally for j <= n < i.
//
// Basis order: Cartan elements h_i = E^{i,i} - E^{i+1,i+1} first (ascending i,
// skipping the last index of each diagonal block), then root vectors E^{i,j}
// in lexicographic order of (i, j).

#include <cstdint>
#include <map>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "voacert/linalg.hpp"
#include "voacert/rational.hpp"

namespace voacert {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<int>(a) ^ static_cast<int>(b));
}

/// (-1)^{|a||b|}
inline int koszul_sign(Parity a, Parity b) {
  return (a == Parity::odd && b == Parity::odd) ? -1 : 1;
}

struct BasisIndex {
  enum class Kind : std::uint8_t { cartan, root };

  Kind kind = Kind::cartan;
  int i = 0;  // 1-based matrix index
  int j = 0;  // 0 for Cartan elements
  Parity parity = Parity::even;

  static BasisIndex cartan(int i) { return {Kind::cartan, i, 0, Parity::even}; }
  static BasisIndex root(int i, int j, Parity p) { return {Kind::root, i, j, p}; }

  bool is_cartan() const { return kind == Kind::cartan; }
  bool is_positive_root() const { return kind == Kind::root && i < j; }

  std::string label() const {
    return is_cartan() ? "h[" + std::to_string(i) + "]"
                       : "E[" + std::to_string(i) + "," + std::to_string(j) + "]";
  }

  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

class InvalidRank : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A sparse element of the algebra: (basis position, coefficient) pairs sorted
/// by position, with no zero coefficients.
class Element {
 public:
  Element() = default;
  static Element basis(int a) {
    Element e;
    e.terms_.emplace_back(a, Rational(1));
    return e;
  }

  const std::vector<std::pair<int, Rational>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(int a) const {
    for (const auto& [b, c] : terms_)
      if (b == a) return c;
    return 0;
  }

  void add(int a, const Rational& c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), a,
                               [](const auto& t, int key) { return t.first < key; });
    if (it != terms_.end() && it->first == a) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    } else {
      terms_.insert(it, {a, c});
    }
  }

  void add(const Element& other, const Rational& scale = 1) {
    for (const auto& [b, c] : other.terms_) add(b, scale * c);
  }

  Element scaled(const Rational& s) const {
    Element e;
    if (s == 0) return e;
    e.terms_ = terms_;
    for (auto& t : e.terms_) t.second *= s;
    return e;
  }

  friend bool operator==(const Element&, const Element&) = default;

 private:
  std::vector<std::pair<int, Rational>> terms_;
};

class LieSuperalgebra {
 public:
  LieSuperalgebra(std::string name, std::vector<BasisIndex> basis)
      : name_(std::move(name)),
        basis_(std::move(basis)),
        brackets_(basis_.size() * basis_.size()),
        form_(basis_.size() * basis_.size()) {
    for (std::size_t a = 0; a < basis_.size(); ++a) lookup_[key(basis_[a])] = static_cast<int>(a);
  }

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<BasisIndex>& basis() const { return basis_; }
  const BasisIndex& basis(int a) const { return basis_.at(a); }
  Parity parity(int a) const { return basis_[a].parity; }
  bool is_odd(int a) const { return basis_[a].parity == Parity::odd; }

  const Element& bracket(int a, int b) const { return brackets_[index(a, b)]; }
  const Rational& form(int a, int b) const { return form_[index(a, b)]; }

  void set_bracket(int a, int b, Element value) { brackets_[index(a, b)] = std::move(value); }
  void set_form(int a, int b, Rational value) { form_[index(a, b)] = std::move(value); }

  Element bracket(const Element& x, const Element& y) const {
    Element out;
    for (const auto& [a, ca] : x.terms())
      for (const auto& [b, cb] : y.terms()) out.add(bracket(a, b), ca * cb);
    return out;
  }

  Rational form(const Element& x, const Element& y) const {
    Rational out = 0;
    for (const auto& [a, ca] : x.terms())
      for (const auto& [b, cb] : y.terms()) out += ca * cb * form(a, b);
    return out;
  }

  std::optional<int> find(const BasisIndex& idx) const {
    auto it = lookup_.find(key(idx));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }

  /// Position of E^{i,j}; throws std::out_of_range when absent.
  int root(int i, int j) const {
    auto it = lookup_.find({i, j});
    if (i == j || it == lookup_.end())
      throw std::out_of_range(name_ + " has no root vector E[" + std::to_string(i) + "," +
                              std::to_string(j) + "]");
    return it->second;
  }

  /// Position of h_i; throws std::out_of_range when absent.
  int cartan(int i) const {
    auto it = lookup_.find({i, 0});
    if (it == lookup_.end())
      throw std::out_of_range(name_ + " has no Cartan element h[" + std::to_string(i) + "]");
    return it->second;
  }

  std::vector<int> positive_roots() const {
    std::vector<int> out;
    for (int a = 0; a < dim(); ++a)
      if (basis_[a].is_positive_root()) out.push_back(a);
    return out;
  }

  // ---- defining matrix realisation (empty for abstract tables) ----

  struct Realisation {
    int size = 0;            // matrix size
    int even_size = 0;       // rows/cols [0, even_size) are even
    bool modulo_identity = false;
  };

  const std::optional<Realisation>& realisation() const { return realisation_; }
  void set_realisation(Realisation r) { realisation_ = r; }

  /// Rank parameter n of sl(n) / psl(n|n); 0 for abstract tables.
  int rank_parameter() const {
    if (!realisation_) return 0;
    return realisation_->modulo_identity ? realisation_->size / 2 : realisation_->size;
  }
  bool is_psl() const { return realisation_ && realisation_->modulo_identity; }

  /// The canonical matrix representative of x.
  Matrix to_matrix(const Element& x) const {
    const auto& r = require_realisation();
    Matrix m(r.size, r.size);
    for (const auto& [a, c] : x.terms()) {
      const BasisIndex& b = basis_[a];
      if (b.is_cartan()) {
        m(b.i - 1, b.i - 1) += c;
        m(b.i, b.i) -= c;
      } else {
        m(b.i - 1, b.j - 1) += c;
      }
    }
    return m;
  }

  /// Expresses a matrix in the basis. For psl(n|n) the matrix must be
  /// supertraceless and is first reduced modulo the identity; for sl(n) it must
  /// be traceless. Throws std::invalid_argument otherwise.
  Element from_matrix(Matrix m) const {
    const auto& r = require_realisation();
    if (static_cast<int>(m.rows()) != r.size || static_cast<int>(m.cols()) != r.size)
      throw std::invalid_argument("matrix size does not match " + name_);
    if (r.modulo_identity) {
      if (supertrace(m) != 0)
        throw std::invalid_argument("matrix is not supertraceless; not in " + name_);
      const Rational shift = m.trace() / r.size;
      for (int k = 0; k < r.size; ++k) m(k, k) -= shift;
    }
    Element out;
    for (int row = 0; row < r.size; ++row)
      for (int col = 0; col < r.size; ++col)
        if (row != col && m(row, col) != 0) out.add(root(row + 1, col + 1), m(row, col));
    auto block = [&](int first, int last) {
      Rational running = 0;
      for (int k = first; k < last; ++k) {
        running += m(k, k);
        if (k + 1 < last) out.add(cartan(k + 1), running);
      }
      if (running != 0) throw std::invalid_argument("diagonal block is not traceless; not in " + name_);
    };
    block(0, r.even_size);
    if (r.even_size < r.size) block(r.even_size, r.size);
    return out;
  }

  Rational supertrace(const Matrix& m) const {
    const auto& r = require_realisation();
    Rational s = 0;
    for (int k = 0; k < r.size; ++k) s += k < r.even_size ? m(k, k) : Rational(-m(k, k));
    return s;
  }

  nlohmann::json to_json() const {
    using nlohmann::json;
    json basis = json::array(), parities = json::array(), brackets = json::array(), pairing = json::array();
    for (const auto& b : basis_) {
      basis.push_back(b.label());
      parities.push_back(static_cast<int>(b.parity));
    }
    for (int a = 0; a < dim(); ++a)
      for (int b = 0; b < dim(); ++b) {
        const Element& v = bracket(a, b);
        if (!v.is_zero()) {
          json value = json::object();
          for (const auto& [c, q] : v.terms()) value[basis_[c].label()] = q.get_str();
          brackets.push_back({{"x", basis_[a].label()}, {"y", basis_[b].label()}, {"value", value}});
        }
        if (form(a, b) != 0)
          pairing.push_back({{"x", basis_[a].label()}, {"y", basis_[b].label()}, {"value", form(a, b).get_str()}});
      }
    return {{"name", name_}, {"dim", dim()}, {"basis", basis}, {"parities", parities},
            {"brackets", brackets}, {"form", pairing}};
  }

 private:
  static std::pair<int, int> key(const BasisIndex& b) { return {b.i, b.is_cartan() ? 0 : b.j}; }
  std::size_t index(int a, int b) const { return static_cast<std::size_t>(a) * basis_.size() + b; }

  const Realisation& require_realisation() const {
    if (!realisation_) throw std::logic_error(name_ + " has no matrix realisation");
    return *realisation_;
  }

  std::string name_;
  std::vector<BasisIndex> basis_;
  std::vector<Element> brackets_;
  std::vector<Rational> form_;
  std::map<std::pair<int, int>, int> lookup_;
  std::optional<Realisation> realisation_;
};

namespace detail {

struct SparseEntry {
  int row, col;
  Rational value;
};
using SparseMatrix = std::vector<SparseEntry>;

inline SparseMatrix sparse_of(const BasisIndex& b) {
  if (b.is_cartan()) return {{b.i - 1, b.i - 1, 1}, {b.i, b.i, -1}};
  return {{b.i - 1, b.j - 1, 1}};
}

inline Matrix product(const SparseMatrix& x, const SparseMatrix& y, int size) {
  Matrix p(size, size);
  for (const auto& a : x)
    for (const auto& b : y)
      if (a.col == b.row) p(a.row, b.col) += a.value * b.value;
  return p;
}

/// Builds sl(size) (modulo_identity = false) or psl(n|n) with size = 2n.
inline LieSuperalgebra build_matrix_algebra(std::string name, int size, int even_size,
                                            bool modulo_identity) {
  std::vector<BasisIndex> basis;
  for (int i = 1; i < size; ++i)
    if (i != even_size) basis.push_back(BasisIndex::cartan(i));
  for (int i = 1; i <= size; ++i)
    for (int j = 1; j <= size; ++j) {
      if (i == j) continue;
      const bool odd = (i > even_size) != (j > even_size);
      basis.push_back(BasisIndex::root(i, j, odd ? Parity::odd : Parity::even));
    }

  LieSuperalgebra g(std::move(name), basis);
  g.set_realisation({size, even_size, modulo_identity});

  std::vector<SparseMatrix> mats;
  for (const auto& b : basis) mats.push_back(sparse_of(b));

  for (int a = 0; a < g.dim(); ++a)
    for (int b = 0; b < g.dim(); ++b) {
      Matrix xy = product(mats[a], mats[b], size);
      Matrix yx = product(mats[b], mats[a], size);
      const int s = koszul_sign(g.parity(a), g.parity(b));
      Matrix commutator = s > 0 ? xy - yx : xy + yx;
      g.set_bracket(a, b, g.from_matrix(std::move(commutator)));
      g.set_form(a, b, g.supertrace(xy));
    }
  return g;
}

}  // namespace detail

/// sl(n) with the trace form of the defining representation; all parities even.
inline LieSuperalgebra build_sl(int n) {
  if (n < 2) throw InvalidRank("sl(n) requires n >= 2, got " + std::to_string(n));
  return detail::build_matrix_algebra("sl(" + std::to_string(n) + ")", n, n, false);
}

/// psl(n|n) with the supertrace form; E^{i,j} is odd iff exactly one of i, j exceeds n.
inline LieSuperalgebra build_psl(int n) {
  if (n < 2) throw InvalidRank("psl(n|n) requires n >= 2, got " + std::to_string(n));
  const std::string s = std::to_string(n);
  return detail::build_matrix_algebra("psl(" + s + "|" + s + ")", 2 * n, n, true);
}

/// Resolves the preset names "sl(n)" and "psl(n|n)".
inline LieSuperalgebra preset(std::string_view name) {
  static const std::regex sl_re(R"(\s*sl\(\s*(\d+)\s*\)\s*)");
  static const std::regex psl_re(R"(\s*psl\(\s*(\d+)\s*\|\s*(\d+)\s*\)\s*)");
  std::smatch m;
  const std::string s(name);
  if (std::regex_match(s, m, sl_re)) return build_sl(std::stoi(m[1]));
  if (std::regex_match(s, m, psl_re)) {
    if (m[1] != m[2]) throw std::invalid_argument("only psl(n|n) presets are supported: " + s);
    return build_psl(std::stoi(m[1]));
  }
  throw std::invalid_argument("unknown algebra preset: " + s);
}

/// H^{i,j} = E^{i,i} - E^{j,j}.
inline Element h_element(const LieSuperalgebra& g, int i, int j) {
  const int size = g.realisation().value().size;
  Matrix m(size, size);
  m(i - 1, i - 1) = 1;
  m(j - 1, j - 1) = -1;
  return g.from_matrix(std::move(m));
}

/// D^{i,j} = [E^{i,j}, E^{j,i}].
inline Element d_element(const LieSuperalgebra& g, int i, int j) {
  return g.bracket(g.root(i, j), g.root(j, i));
}

// ---------------------------------------------------------------------------
// Structure verification

struct Violation {
  std::string property;  // antisymmetry | parity | jacobi | invariance | supersymmetry
  std::vector<std::string> elements;
  std::string detail;
};

struct StructureReport {
  std::string algebra;
  bool passed = true;
  std::size_t pairs_checked = 0;
  std::size_t triples_checked = 0;
  std::size_t violation_count = 0;
  std::vector<Violation> violations;  // first few, for witnesses

  nlohmann::json to_json() const {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& x : violations)
      v.push_back({{"property", x.property}, {"elements", x.elements}, {"detail", x.detail}});
    return {{"algebra", algebra}, {"passed", passed}, {"pairs_checked", pairs_checked},
            {"triples_checked", triples_checked}, {"violation_count", violation_count},
            {"violations", v}};
  }
};

/// Exhaustively checks super-antisymmetry, bracket parity, the super-Jacobi
/// identity, invariance and supersymmetry of the form.
inline StructureReport check_structure(const LieSuperalgebra& g, std::size_t max_recorded = 16) {
  StructureReport rep;
  rep.algebra = g.name();
  const int d = g.dim();
  auto record = [&](std::string prop, std::vector<int> idx, std::string detail) {
    rep.passed = false;
    ++rep.violation_count;
    if (rep.violations.size() >= max_recorded) return;
    std::vector<std::string> labels;
    for (int a : idx) labels.push_back(g.basis(a).label());
    rep.violations.push_back({std::move(prop), std::move(labels), std::move(detail)});
  };

  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      ++rep.pairs_checked;
      const int s = koszul_sign(g.parity(a), g.parity(b));
      Element sum = g.bracket(a, b);
      sum.add(g.bracket(b, a), s);
      if (!sum.is_zero()) record("antisymmetry", {a, b}, "[x,y] + (-1)^{|x||y|}[y,x] != 0");
      const Parity expected = g.parity(a) + g.parity(b);
      for (const auto& [c, q] : g.bracket(a, b).terms())
        if (g.parity(c) != expected) {
          record("parity", {a, b}, "bracket has a component of the wrong parity");
          break;
        }
      if (g.parity(a) != g.parity(b) && g.form(a, b) != 0)
        record("supersymmetry", {a, b}, "form pairs elements of different parity");
      if (g.form(a, b) != s * g.form(b, a))
        record("supersymmetry", {a, b}, "(x,y) != (-1)^{|x||y|}(y,x)");
    }

  std::vector<Rational> acc(d);
  std::vector<int> touched;
  auto accumulate = [&](int x, const Element& v, int sign) {
    for (const auto& [c, q] : v.terms())
      for (const auto& [e, r] : g.bracket(x, c).terms()) {
        if (acc[e] == 0) touched.push_back(e);
        if (sign > 0) acc[e] += q * r;
        else acc[e] -= q * r;
      }
  };

  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z) {
        ++rep.triples_checked;
        const Element& yz = g.bracket(y, z);
        const Element& zx = g.bracket(z, x);
        const Element& xy = g.bracket(x, y);
        if (!yz.is_zero()) accumulate(x, yz, koszul_sign(g.parity(x), g.parity(z)));
        if (!zx.is_zero()) accumulate(y, zx, koszul_sign(g.parity(x), g.parity(y)));
        if (!xy.is_zero()) accumulate(z, xy, koszul_sign(g.parity(y), g.parity(z)));
        bool ok = true;
        for (int e : touched) {
          if (acc[e] != 0) ok = false;
          acc[e] = 0;
        }
        touched.clear();
        if (!ok) record("jacobi", {x, y, z}, "super-Jacobi sum is nonzero");

        // ([x,y],z) = (x,[y,z])
        Rational lhs = 0, rhs = 0;
        for (const auto& [c, q] : xy.terms()) lhs += q * g.form(c, z);
        for (const auto& [c, q] : yz.terms()) rhs += q * g.form(x, c);
        if (lhs != rhs) record("invariance", {x, y, z}, "([x,y],z) != (x,[y,z])");
      }
  return rep;
}

/// Compares every bracket and form value with the supercommutator and
/// supertrace of the defining matrices. Returns the mismatching pairs.
inline std::vector<Violation> matrix_realisation_mismatches(const LieSuperalgebra& g, std::size_t max_recorded = 16) {
  std::vector<Violation> out;
  const auto& r = g.realisation().value();
  std::vector<Matrix> mats;
  for (int a = 0; a < g.dim(); ++a) mats.push_back(g.to_matrix(Element::basis(a)));
  for (int a = 0; a < g.dim() && out.size() < max_recorded; ++a)
    for (int b = 0; b < g.dim() && out.size() < max_recorded; ++b) {
      const Matrix xy = mats[a] * mats[b];
      Matrix comm = xy - Rational(koszul_sign(g.parity(a), g.parity(b))) * (mats[b] * mats[a]);
      if (r.modulo_identity) comm = comm - Rational(comm.trace() / r.size) * Matrix::identity(r.size);
      if (!(g.to_matrix(g.bracket(a, b)) == comm))
        out.push_back({"matrix", {g.basis(a).label(), g.basis(b).label()}, "bracket differs from the matrix supercommutator"});
      if (g.form(a, b) != g.supertrace(xy))
        out.push_back({"matrix", {g.basis(a).label(), g.basis(b).label()}, "form differs from the matrix supertrace"});
    }
  return out;
}

}  // namespace voacert
