#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpa/algebra.hpp"

namespace lpa {

// Element expressions:
//   element := ['-'] term (('+'|'-') term)*
//   term    := [scalar ['*']] word | scalar
//   scalar  := integer ['/' integer]
//   word    := token+ ;  token := id ['*']
// A word multiplies its letters left to right; `y1*` is the ghost of y1. A
// bare scalar k stands for k times the unit (the sum of all vertices). An
// id naming both an edge and a vertex (as in dual graphs) means the edge.
// Errors carry the 1-based column.
template <class Field>
class ExpressionParser {
 public:
  using Scalar = typename Field::value_type;
  using Combination = std::vector<std::pair<Scalar, RawWord>>;

  ExpressionParser(std::shared_ptr<const Algebra<Field>> algebra, std::string_view text)
      : algebra_(std::move(algebra)), text_(text) {}

  Combination parse() {
    Combination out;
    skip_space();
    if (at_end()) fail("empty expression");
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      parse_term(out, negate);
      skip_space();
      if (at_end()) break;
      if (peek() == '+' || peek() == '-') {
        negate = peek() == '-';
        ++pos_;
        continue;
      }
      fail(std::string("unexpected character '") + peek() + "'");
    }
    return out;
  }

 private:
  void parse_term(Combination& out, bool negate) {
    skip_space();
    if (at_end()) fail("expected a term");
    const Field& field = algebra_->field();
    Scalar coeff = field.one();
    bool have_scalar = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      std::string den = "1";
      if (!at_end() && peek() == '/') {
        ++pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
          fail("expected a denominator");
        den = digits();
      }
      try {
        coeff = field.from_string(num, den);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), pos_);
      }
      have_scalar = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        if (at_end() || !starts_id(peek())) fail("expected a word after '*'");
      }
    }
    if (negate) coeff = -coeff;

    RawWord word;
    while (true) {
      skip_space();
      if (at_end() || !starts_id(peek())) break;
      std::size_t start = pos_;
      std::string id = identifier();
      bool ghost = false;
      skip_space();
      if (!at_end() && peek() == '*') {
        ghost = true;
        ++pos_;
      }
      word.push_back(resolve(id, ghost, start));
    }
    if (word.empty()) {
      if (!have_scalar) fail("expected a scalar or a word");
      for (auto v : algebra_->graph().all_vertices())
        out.emplace_back(coeff, RawWord{Generator::of_vertex(v)});
      return;
    }
    out.emplace_back(coeff, std::move(word));
  }

  Generator resolve(const std::string& id, bool ghost, std::size_t start) const {
    const Graph& g = algebra_->graph();
    if (auto e = g.find_edge(id)) return ghost ? Generator::of_ghost(*e) : Generator::of_edge(*e);
    // Vertices are self-adjoint, so `v*` is just v.
    if (auto v = g.find_vertex(id)) return Generator::of_vertex(*v);
    throw UnknownIdError("unknown id '" + id + "' at column " + std::to_string(start + 1));
  }

  static bool starts_id(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }
  static bool id_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == ',' ||
           c == '(' || c == ')';
  }

  std::string identifier() {
    std::size_t start = pos_++;
    while (!at_end() && id_char(peek())) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_ + 1); }

  std::shared_ptr<const Algebra<Field>> algebra_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

template <class Field>
typename ExpressionParser<Field>::Combination parse_combination(
    const std::shared_ptr<const Algebra<Field>>& algebra, std::string_view text) {
  return ExpressionParser<Field>(algebra, text).parse();
}

template <class Field>
Element<Field> parse_element(const std::shared_ptr<const Algebra<Field>>& algebra,
                             std::string_view text) {
  return algebra->reduce(parse_combination(algebra, text));
}

}  // namespace lpa
