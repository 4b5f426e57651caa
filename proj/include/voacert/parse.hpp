#pragma once

// Text literals:
//   state   E[1,3](-1) E[1,4](-1) |0>   -1/2 h[1](-2) |0> + E[1,2](-1) |0>   0
//   word    E[3,2](1) T E[4,2](1) T
//   matrix  [["1","0"],["0","-1/2"]]    (JSON; entries are strings or integers)
//   weight  [1,0,-1]                    (JSON integers)
// Generators: E[i,j], h[i], H[i,j] = E^{ii} - E^{jj}, D[i,j] = [E^{ij}, E^{ji}].

#include "voacert/affine.hpp"
#include "voacert/linalg.hpp"
#include "voacert/liesuper.hpp"
#include "voacert/rational.hpp"

#include <json.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace voacert {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

class UnknownGenerator : public ParseError {
 public:
  using ParseError::ParseError;
};

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(std::string_view s) {
    skip_space();
    if (text_.substr(pos_, s.size()) != s) return false;
    pos_ += s.size();
    return true;
  }
  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }
  long integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    try {
      return std::stol(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      pos_ = start;
      fail("integer out of range");
    }
  }
  /// Unsigned p or p/q.
  Rational magnitude() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
      ++pos_;
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      pos_ = start;
      fail(e.what());
    }
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  std::size_t position() {
    skip_space();
    return pos_;
  }

  [[noreturn]] void fail(const std::string& what) { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') ++line, col = 1;
      else ++col;
    }
    throw ParseError(what, line, col);
  }
  [[noreturn]] void unknown_at(const std::string& what, std::size_t at) const {
    try {
      fail_at(what, at);
    } catch (const ParseError& e) {
      throw UnknownGenerator(what, e.line(), e.column());
    }
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  std::string_view text_;
  std::size_t pos_ = 0;
};

struct ParsedGenerator {
  Element element;
  std::string symbol;  // set for the composite H / D generators
};

inline ParsedGenerator generator(const LieSuperalgebra& g, Cursor& c) {
  const std::size_t at = c.position();
  const char kind = c.peek();
  if (kind != 'E' && kind != 'h' && kind != 'H' && kind != 'D') c.fail("expected a generator E, h, H or D");
  c.accept(std::string(1, kind));
  c.expect("[");
  const long i = c.integer();
  long j = 0;
  if (kind != 'h') {
    c.expect(",");
    j = c.integer();
  }
  c.expect("]");
  const std::string symbol =
      std::string(1, kind) + "[" + std::to_string(i) + (kind == 'h' ? "" : "," + std::to_string(j)) + "]";
  try {
    switch (kind) {
      case 'E':
        return {Element::basis(g.root(static_cast<int>(i), static_cast<int>(j))), {}};
      case 'h':
        return {Element::basis(g.cartan(static_cast<int>(i))), {}};
      case 'H': {
        const int size = g.realisation().value().size;
        if (i < 1 || j < 1 || i > size || j > size || i == j) throw std::out_of_range(symbol);
        return {h_element(g, static_cast<int>(i), static_cast<int>(j)), symbol};
      }
      default:
        return {d_element(g, static_cast<int>(i), static_cast<int>(j)), symbol};
    }
  } catch (const std::exception&) {
    c.unknown_at("unknown generator " + symbol + " in " + g.name(), at);
  }
}

inline long mode_index(Cursor& c) {
  c.expect("(");
  const long m = c.integer();
  c.expect(")");
  return m;
}

}  // namespace detail

/// A sum of terms "coefficient generator(m) ... |0>"; the generators act on the
/// vacuum right to left, so the result is always normal ordered.
inline State parse_state(const LieSuperalgebra& g, std::string_view text, const Rational& level = 1) {
  detail::Cursor c(text);
  State out(level);
  if (c.accept("0")) {
    if (!c.done()) c.fail("unexpected input after 0");
    return out;
  }
  bool first = true;
  while (!c.done()) {
    Rational coeff = 1;
    if (c.accept("+")) {
      if (first) c.fail("unexpected '+'");
    } else if (c.accept("-")) {
      coeff = -1;
    } else if (!first) {
      c.fail("expected '+' or '-'");
    }
    first = false;
    if (c.at_digit()) coeff *= c.magnitude();
    c.accept("*");
    std::vector<std::pair<Element, long>> modes;
    while (!c.accept("|0>")) {
      if (c.done()) c.fail("expected '|0>'");
      auto gen = detail::generator(g, c);
      modes.emplace_back(std::move(gen.element), detail::mode_index(c));
    }
    State term = State::vacuum(level);
    for (auto it = modes.rbegin(); it != modes.rend(); ++it)
      term = apply_mode(g, it->first, static_cast<int>(it->second), term);
    out.add(term, coeff);
  }
  if (first) c.fail("empty state");
  return out;
}

inline OperatorWord parse_word(const LieSuperalgebra& g, std::string_view text) {
  detail::Cursor c(text);
  OperatorWord w;
  while (!c.done()) {
    if (c.peek() == 'T') {
      c.accept("T");
      w.push_back(Translation{});
      continue;
    }
    auto gen = detail::generator(g, c);
    const long m = detail::mode_index(c);
    w.push_back(ModeToken{std::move(gen.element), static_cast<int>(m), std::move(gen.symbol)});
  }
  return w;
}

namespace detail {
inline nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    Cursor(text).fail_at("malformed JSON", e.byte > 0 ? e.byte - 1 : 0);
  }
}
}  // namespace detail

/// JSON array of rows; entries are rational strings "p/q" or integers.
inline Matrix parse_matrix(std::string_view text) {
  const auto j = detail::parse_json(text);
  detail::Cursor c(text);
  if (!j.is_array() || j.empty()) c.fail_at("matrix must be a non-empty array of rows", 0);
  const std::size_t rows = j.size(), cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) c.fail_at("matrix rows must be non-empty arrays", 0);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) c.fail_at("ragged matrix row " + std::to_string(r + 1), 0);
    for (std::size_t k = 0; k < cols; ++k) {
      const auto& e = j[r][k];
      try {
        if (e.is_string()) m(r, k) = parse_rational(e.get<std::string>());
        else if (e.is_number_integer()) m(r, k) = Rational(e.get<long>());
        else throw std::invalid_argument("not a rational");
      } catch (const std::invalid_argument&) {
        c.fail_at("bad matrix entry at row " + std::to_string(r + 1) + ", column " + std::to_string(k + 1), 0);
      }
    }
  }
  return m;
}

inline std::vector<Integer> parse_weight(std::string_view text) {
  const auto j = detail::parse_json(text);
  detail::Cursor c(text);
  if (!j.is_array()) c.fail_at("weight must be a JSON array of integers", 0);
  std::vector<Integer> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) c.fail_at("weight entries must be integers", 0);
    out.emplace_back(e.get<long>());
  }
  return out;
}

inline nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(r, k).get_str());
    out.push_back(row);
  }
  return out;
}

}  // namespace voacert
