/*
   Copyright 2026 The equivloc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "equivloc/class_parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "equivloc/error.hpp"
#include "equivloc/symfunc.hpp"

namespace equivloc {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarTablePtr& vars)
      : text_(text), vars_(vars),
        m_(static_cast<int>(vars->residue_vars().size())) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (true) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        skip_ws();
        std::size_t at = pos_;
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          error("divisor must be a nonzero constant");
        }
        acc *= Rational(1) / d.constant_term();
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_ws();
      long e = integer();
      if (e > 255) error("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("expected an integer");
    if (pos_ - start > 9) {
      pos_ = start;
      error("integer literal too long");
    }
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  std::vector<int> index_list() {
    std::vector<int> out;
    expect('[');
    if (accept(']')) return out;
    do {
      out.push_back(static_cast<int>(integer()));
    } while (accept(','));
    expect(']');
    return out;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) error("unexpected end of expression");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial::constant(vars_, Rational::parse(text_.substr(start, pos_ - start)));
    }
    if (accept('(')) {
      Polynomial p = expr();
      expect(')');
      return p;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '[') return builtin(name, start);
      if (auto idx = vars_->find(name)) return Polynomial::variable(vars_, *idx);
      pos_ = start;
      error("unknown identifier '" + name + "'");
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  Polynomial builtin(const std::string& name, std::size_t start) {
    std::size_t bracket = pos_;
    auto args = index_list();
    try {
      if (name == "s") return schur(Partition(args), vars_, m_);
      if (args.size() != 1) {
        pos_ = bracket;
        error(name + "[k] takes exactly one index");
      }
      if (name == "e") return elementary(args[0], vars_, m_);
      if (name == "h") return complete(args[0], vars_, m_);
      if (name == "p") return power_sum(args[0], vars_, m_);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      pos_ = bracket;
      error(e.what());
    }
    pos_ = start;
    error("unknown identifier '" + name + "'");
  }

  std::string_view text_;
  const VarTablePtr& vars_;
  int m_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_class(std::string_view expr, const VarTablePtr& vars) {
  return Parser(expr, vars).parse();
}

}  // namespace equivloc
