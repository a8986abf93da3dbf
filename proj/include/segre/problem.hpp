#pragma once

// Problem files:
//
//   ambient P2 x P3
//   vars x[0..2]; y[0..3]          # or: vars x, y, z, w
//   ideal X variety = x0*y1 - x1*y0, y3
//   ideal Y irreducible mult 2 = (x0 + x1)^2
//
// Attributes between the name and '=': variety, irreducible, reduced,
// mult N (geometric multiplicity), dim N (skip dimension probing).
// '#' starts a comment; newlines are ordinary whitespace.

#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "segre/errors.hpp"
#include "segre/poly.hpp"

namespace segre {

struct ProblemFile {
  Ambient ambient;
  std::vector<std::string> variables;
  std::vector<std::string> ideal_names;  // declaration order
  std::map<std::string, SchemeSpec> ideals;

  const SchemeSpec& scheme(const std::string& name) const {
    auto it = ideals.find(name);
    if (it == ideals.end()) throw PreconditionError("no ideal named '" + name + "' in the problem file");
    return it->second;
  }
};

namespace detail::parse {

inline constexpr int kMaxExponent = 255;

enum class Tok { Ident, Int, Sym, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1, column = 1;
};

/// Unicode minus and multiplication sign become their ASCII counterparts.
inline std::string normalize(const std::string& text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
      out += '-';
      i += 2;
    } else if (text.compare(i, 2, "\xC3\x97") == 0) {
      out += 'x';
      i += 1;
    } else {
      out += text[i];
    }
  }
  return out;
}

class Lexer {
 public:
  explicit Lexer(std::string text) : text_(std::move(text)) {}

  std::vector<Token> run() {
    std::vector<Token> toks;
    while (true) {
      skip_space();
      Token t;
      t.line = line_;
      t.column = col_;
      if (pos_ >= text_.size()) {
        toks.push_back(t);
        return toks;
      }
      const char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Tok::Ident;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
          t.text += advance();
        }
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Tok::Int;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) t.text += advance();
      } else if (c == '.' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '.') {
        t.kind = Tok::Sym;
        t.text = "..";
        advance();
        advance();
      } else if (std::string("+-*^(),;=[]").find(c) != std::string::npos) {
        t.kind = Tok::Sym;
        t.text = std::string(1, advance());
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
      }
      toks.push_back(t);
    }
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
  void skip_space() {
    while (pos_ < text_.size()) {
      if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string text_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ProblemFile file() {
    ProblemFile pf;
    pf.ambient = ambient();
    pf.variables = vars(pf.ambient);
    for (std::size_t i = 0; i < pf.variables.size(); ++i) {
      if (!index_.emplace(pf.variables[i], i).second) {
        throw ParseError("duplicate variable '" + pf.variables[i] + "'", vars_tok_.line, vars_tok_.column);
      }
    }
    ambient_ = pf.ambient;
    if (peek().kind == Tok::End) error(peek(), "expected at least one 'ideal' declaration");
    while (peek().kind != Tok::End) {
      const Token start = peek();
      auto [name, spec] = ideal_def();
      if (pf.ideals.count(name)) error(start, "duplicate ideal name '" + name + "'");
      pf.ideal_names.push_back(name);
      pf.ideals.emplace(name, std::move(spec));
    }
    return pf;
  }

  Poly single_poly(const Ambient& amb, const std::vector<std::string>& names) {
    ambient_ = amb;
    for (std::size_t i = 0; i < names.size(); ++i) index_.emplace(names[i], i);
    Poly p = expr();
    if (peek().kind != Tok::End) unexpected(peek());
    return p;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  [[noreturn]] static void error(const Token& t, const std::string& msg) { throw ParseError(msg, t.line, t.column); }
  [[noreturn]] static void unexpected(const Token& t) {
    if (t.kind == Tok::End) error(t, "unexpected end of input");
    error(t, "unexpected '" + t.text + "'");
  }
  bool is_sym(const std::string& s) const { return peek().kind == Tok::Sym && peek().text == s; }
  bool is_word(const std::string& s) const { return peek().kind == Tok::Ident && peek().text == s; }
  void expect_sym(const std::string& s) {
    if (!is_sym(s)) error(peek(), "expected '" + s + "'" + (peek().kind == Tok::End ? "" : " before '" + peek().text + "'"));
    next();
  }
  void expect_word(const std::string& s) {
    if (!is_word(s)) error(peek(), "expected '" + s + "'");
    next();
  }
  long long integer(const std::string& what) {
    const Token t = next();
    if (t.kind != Tok::Int) error(t, "expected " + what);
    if (t.text.size() > 9) error(t, what + " too large");
    return std::stoll(t.text);
  }

  // ambient P2 x P3 (P2xP3 and P2×P3 accepted): the tokens "P2", "x",
  // "P3" or the glued identifier "P2xP3" are split on 'x'.
  Ambient ambient() {
    const Token kw = peek();
    expect_word("ambient");
    std::string spec;
    while (peek().kind == Tok::Ident && !is_word("vars")) spec += next().text;
    if (spec.empty()) error(kw, "expected a product of projective spaces after 'ambient'");
    std::vector<int> dims;
    std::size_t i = 0;
    while (i < spec.size()) {
      if (spec[i] != 'P') error(kw, "malformed ambient '" + spec + "' (expected e.g. P2 x P3)");
      std::size_t j = ++i;
      while (j < spec.size() && std::isdigit(static_cast<unsigned char>(spec[j]))) ++j;
      if (j == i || j - i > 3) error(kw, "malformed ambient '" + spec + "'");
      dims.push_back(std::stoi(spec.substr(i, j - i)));
      i = j;
      if (i < spec.size()) {
        if (spec[i] != 'x') error(kw, "malformed ambient '" + spec + "'");
        ++i;
        if (i == spec.size()) error(kw, "dangling 'x' in ambient");
      }
    }
    return Ambient(dims);
  }

  // vars group (";" group)* ; group := item ("," item)* ; item := NAME | NAME "[" INT ".." INT "]"
  std::vector<std::string> vars(const Ambient& amb) {
    vars_tok_ = peek();
    expect_word("vars");
    std::vector<std::vector<std::string>> groups(1);
    while (true) {
      const Token name = next();
      if (name.kind != Tok::Ident) error(name, "expected a variable name");
      if (is_sym("[")) {
        next();
        const long long lo = integer("range start");
        expect_sym("..");
        const long long hi = integer("range end");
        expect_sym("]");
        if (hi < lo) error(name, "empty variable range");
        for (long long k = lo; k <= hi; ++k) groups.back().push_back(name.text + std::to_string(k));
      } else {
        groups.back().push_back(name.text);
      }
      if (is_sym(",")) {
        next();
      } else if (is_sym(";")) {
        next();
        groups.emplace_back();
      } else {
        break;
      }
    }
    std::vector<std::string> flat;
    for (const auto& g : groups) flat.insert(flat.end(), g.begin(), g.end());
    if (flat.size() != amb.num_vars()) {
      error(vars_tok_, "ambient needs " + std::to_string(amb.num_vars()) + " variables, got " +
                           std::to_string(flat.size()));
    }
    if (groups.size() > 1) {
      if (groups.size() != amb.num_factors()) error(vars_tok_, "one variable block per factor expected");
      for (std::size_t j = 0; j < groups.size(); ++j) {
        if (groups[j].size() != amb.block_size(j)) {
          error(vars_tok_, "block " + std::to_string(j + 1) + " needs " + std::to_string(amb.block_size(j)) +
                               " variables, got " + std::to_string(groups[j].size()));
        }
      }
    }
    return flat;
  }

  std::pair<std::string, SchemeSpec> ideal_def() {
    expect_word("ideal");
    const Token name = next();
    if (name.kind != Tok::Ident) error(name, "expected an ideal name");
    bool irreducible = false, variety = false, reduced = false;
    int mult = 1;
    std::optional<int> dim;
    while (!is_sym("=")) {
      const Token t = next();
      if (t.kind == Tok::Ident && t.text == "variety") {
        variety = true;
      } else if (t.kind == Tok::Ident && t.text == "irreducible") {
        irreducible = true;
      } else if (t.kind == Tok::Ident && t.text == "reduced") {
        reduced = true;
      } else if (t.kind == Tok::Ident && t.text == "mult") {
        mult = static_cast<int>(integer("multiplicity"));
        if (mult < 1) error(t, "multiplicity must be positive");
      } else if (t.kind == Tok::Ident && t.text == "dim") {
        dim = static_cast<int>(integer("dimension"));
      } else {
        error(t, "expected 'variety', 'irreducible', 'reduced', 'mult N', 'dim N' or '='");
      }
    }
    expect_sym("=");
    std::vector<Poly> gens;
    std::vector<Token> starts;
    while (true) {
      if (peek().kind == Tok::End || is_word("ideal")) error(peek(), "empty generator list for ideal '" + name.text + "'");
      starts.push_back(peek());
      gens.push_back(expr());
      if (!is_sym(",")) break;
      next();
    }
    if (peek().kind != Tok::End && !is_word("ideal")) {
      if (peek().kind == Tok::Ident || peek().kind == Tok::Int || is_sym("(")) {
        error(peek(), "implicit multiplication is not allowed; write '*'");
      }
      unexpected(peek());
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].is_zero()) continue;
      auto d = multidegree_of(gens[i]);
      if (auto* bad = std::get_if<NotHomogeneous>(&d)) {
        error(starts[i], "generator " + std::to_string(i + 1) + " of ideal '" + name.text +
                             "' is not multihomogeneous (terms of multidegree " + to_string(bad->first) + " and " +
                             to_string(bad->second) + ")");
      }
    }
    try {
      SchemeSpec spec(Ideal(ambient_, std::move(gens)), irreducible, variety, mult);
      spec.asserted_reduced = reduced;
      spec.dimension = dim;
      spec.validate();
      return {name.text, std::move(spec)};
    } catch (const PreconditionError& e) {
      error(name, e.what());
    }
  }

  Poly expr() {
    Poly acc = term();
    while (is_sym("+") || is_sym("-")) {
      const bool minus = next().text == "-";
      Poly t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Poly term() {
    Poly acc = unary();
    while (true) {
      if (is_sym("*")) {
        next();
        acc = acc * unary();
      } else if (peek().kind == Tok::Ident && !is_word("ideal")) {
        error(peek(), "implicit multiplication is not allowed; write '*'");
      } else if (peek().kind == Tok::Int || is_sym("(")) {
        error(peek(), "implicit multiplication is not allowed; write '*'");
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (is_sym("-")) {
      next();
      return -unary();
    }
    if (is_sym("+")) {
      next();
      return unary();
    }
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (is_sym("^")) {
      next();
      const Token t = peek();
      if (t.kind != Tok::Int) error(t, "expected an integer exponent");
      if (t.text.size() > 4 || std::stoi(t.text) > kMaxExponent) {
        error(t, "exponent overflow (maximum " + std::to_string(kMaxExponent) + ")");
      }
      next();
      return base.pow(static_cast<unsigned>(std::stoi(t.text)), Rational(1));
    }
    return base;
  }

  Poly atom() {
    const Token t = next();
    if (t.kind == Tok::Int) {
      if (t.text.size() > 60) error(t, "integer literal too long");
      return Poly::constant(ambient_, Rational(BigInt(t.text)));
    }
    if (t.kind == Tok::Ident) {
      auto it = index_.find(t.text);
      if (it == index_.end()) error(t, "unknown variable '" + t.text + "'");
      return Poly::variable(ambient_, it->second, Rational(1));
    }
    if (t.kind == Tok::Sym && t.text == "(") {
      Poly p = expr();
      expect_sym(")");
      return p;
    }
    unexpected(t);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Ambient ambient_;
  std::map<std::string, std::size_t> index_;
  Token vars_tok_;
};

}  // namespace detail::parse

inline ProblemFile parse_input(const std::string& text) {
  using namespace detail::parse;
  return Parser(Lexer(normalize(text)).run()).file();
}

/// One polynomial over the given variable names (for tests and tools).
inline Poly parse_poly(const std::string& text, const Ambient& ambient, const std::vector<std::string>& names) {
  using namespace detail::parse;
  if (names.size() != ambient.num_vars()) throw PreconditionError("variable names do not match the ambient");
  return Parser(Lexer(normalize(text)).run()).single_poly(ambient, names);
}

inline ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open problem file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input(buf.str());
}

}  // namespace segre
