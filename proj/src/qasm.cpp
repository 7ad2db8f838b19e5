// Copyright 2026 The steinerqc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "steinerqc/qasm.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <numbers>
#include <optional>

#include "steinerqc/errors.hpp"

namespace steinerqc::circuit {

namespace {

struct Token {
  enum class Kind { Ident, Number, Symbol, String, End };
  Kind kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space_and_comments();
    const int line = line_, col = col_;
    if (pos_ >= text_.size()) return {Token::Kind::End, "", line, col};
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string s;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        s += advance();
      return {Token::Kind::Ident, s, line, col};
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::string s;
      bool seen_exp = false;
      while (pos_ < text_.size()) {
        const char d = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(d)) || d == '.') {
          s += advance();
        } else if ((d == 'e' || d == 'E') && !seen_exp) {
          seen_exp = true;
          s += advance();
          if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-'))
            s += advance();
        } else {
          break;
        }
      }
      return {Token::Kind::Number, s, line, col};
    }
    if (c == '"') {
      advance();
      std::string s;
      while (pos_ < text_.size() && text_[pos_] != '"') s += advance();
      if (pos_ >= text_.size()) throw ParseError("unterminated string", line, col);
      advance();
      return {Token::Kind::String, s, line, col};
    }
    std::string s(1, advance());
    return {Token::Kind::Symbol, s, line, col};
  }

 private:
  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  Circuit run() {
    expect_ident("OPENQASM");
    if (cur_.kind != Token::Kind::Number || cur_.text != "2.0")
      fail("expected version 2.0");
    shift();
    expect_symbol(";");

    Circuit c{0, {}};
    bool have_qreg = false;
    while (cur_.kind != Token::Kind::End) {
      if (cur_.kind != Token::Kind::Ident) fail("expected a statement");
      const std::string word = cur_.text;
      if (word == "include") {
        shift();
        if (cur_.kind != Token::Kind::String) fail("expected an include path");
        shift();
        expect_symbol(";");
      } else if (word == "qreg") {
        if (have_qreg) fail("only one qreg is supported");
        shift();
        if (cur_.kind != Token::Kind::Ident) fail("expected a register name");
        reg_name_ = cur_.text;
        shift();
        expect_symbol("[");
        c.n = parse_int();
        expect_symbol("]");
        expect_symbol(";");
        have_qreg = true;
      } else if (word == "cx" || word == "rz" || word == "h") {
        if (!have_qreg) fail("gate before qreg declaration");
        parse_gate(c, word);
      } else if (word == "creg" || word == "measure" || word == "barrier" ||
                 word == "if" || word == "reset" || word == "gate" ||
                 word == "opaque") {
        fail("unsupported statement: " + word);
      } else {
        fail("unsupported gate: " + word);
      }
    }
    if (!have_qreg) fail("missing qreg declaration");
    return c;
  }

 private:
  void parse_gate(Circuit& c, const std::string& word) {
    const Token at = cur_;
    shift();
    if (word == "cx") {
      const int a = parse_operand(c.n);
      expect_symbol(",");
      const int b = parse_operand(c.n);
      expect_symbol(";");
      if (a == b) throw ParseError("CNOT control equals target", at.line, at.column);
      c.gates.push_back(Gate::cnot(a, b));
    } else if (word == "rz") {
      expect_symbol("(");
      const double angle = parse_angle();
      expect_symbol(")");
      const int q = parse_operand(c.n);
      expect_symbol(";");
      c.gates.push_back(Gate::rz(angle, q));
    } else {  // h
      const int q = parse_operand(c.n);
      expect_symbol(";");
      c.gates.push_back(Gate::h(q));
    }
  }

  // number | [-] [number *] pi [/ number]
  double parse_angle() {
    double sign = 1.0;
    if (cur_.kind == Token::Kind::Symbol && cur_.text == "-") {
      sign = -1.0;
      shift();
    }
    if (cur_.kind == Token::Kind::Number) {
      const double v = parse_number();
      if (cur_.kind == Token::Kind::Symbol && cur_.text == "*") {
        shift();
        expect_ident("pi");
        return sign * v * pi_tail();
      }
      return sign * v;
    }
    if (cur_.kind == Token::Kind::Ident && cur_.text == "pi") {
      shift();
      return sign * pi_tail();
    }
    fail("expected an angle");
  }

  double pi_tail() {
    double v = std::numbers::pi;
    if (cur_.kind == Token::Kind::Symbol && cur_.text == "/") {
      shift();
      v /= parse_number();
    }
    return v;
  }

  double parse_number() {
    if (cur_.kind != Token::Kind::Number) fail("expected a number");
    double v = 0;
    const auto res =
        std::from_chars(cur_.text.data(), cur_.text.data() + cur_.text.size(), v);
    if (res.ec != std::errc() || res.ptr != cur_.text.data() + cur_.text.size())
      fail("malformed number");
    shift();
    return v;
  }

  int parse_int() {
    if (cur_.kind != Token::Kind::Number) fail("expected an integer");
    int v = 0;
    const auto res =
        std::from_chars(cur_.text.data(), cur_.text.data() + cur_.text.size(), v);
    if (res.ec != std::errc() || res.ptr != cur_.text.data() + cur_.text.size())
      fail("malformed integer");
    shift();
    return v;
  }

  int parse_operand(int n) {
    if (cur_.kind != Token::Kind::Ident || cur_.text != reg_name_)
      fail("expected register '" + reg_name_ + "'");
    shift();
    expect_symbol("[");
    const Token at = cur_;
    const int idx = parse_int();
    if (idx < 0 || idx >= n)
      throw ParseError("qubit index out of range", at.line, at.column);
    expect_symbol("]");
    return idx;
  }

  void expect_ident(const std::string& s) {
    if (cur_.kind != Token::Kind::Ident || cur_.text != s)
      fail("expected '" + s + "'");
    shift();
  }

  void expect_symbol(const std::string& s) {
    if (cur_.kind != Token::Kind::Symbol || cur_.text != s)
      fail("expected '" + s + "'");
    shift();
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, cur_.line, cur_.column);
  }

  void shift() { cur_ = lexer_.next(); }

  Lexer lexer_;
  Token cur_{Token::Kind::End, "", 1, 1};
  std::string reg_name_ = "q";
};

}  // namespace

Circuit parse_qasm(std::string_view text) {
  Circuit c = Parser(text).run();
  c.validate();
  return c;
}

std::string emit_qasm(const Circuit& c) {
  c.validate();
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" +
                    std::to_string(c.n) + "];\n";
  char buf[64];
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case Gate::Kind::Cnot:
        out += "cx q[" + std::to_string(g.control) + "],q[" +
               std::to_string(g.target) + "];\n";
        break;
      case Gate::Kind::Rz:
        std::snprintf(buf, sizeof buf, "%.17g", g.angle);
        out += "rz(" + std::string(buf) + ") q[" + std::to_string(g.target) + "];\n";
        break;
      case Gate::Kind::H:
        out += "h q[" + std::to_string(g.target) + "];\n";
        break;
    }
  }
  return out;
}

}  // namespace steinerqc::circuit
