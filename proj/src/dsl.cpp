#include "dsl.hpp"

#include <cctype>

#include "errors.hpp"

namespace gradecheck {

namespace {

struct Token {
  enum Kind { Ident, Int, LBrack, RBrack, LParen, RParen, Comma, Plus, Minus, Star, Caret, End };
  Kind kind;
  std::string text;
  long long value = 0;
  int line = 1, col = 1;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k) {
      if (text[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      t.kind = Token::Ident;
      t.text = text.substr(i, j - i);
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j - i > 18) throw ParseError("integer literal too large", line, col);
      t.kind = Token::Int;
      t.text = text.substr(i, j - i);
      t.value = std::stoll(t.text);
      advance(j - i);
    } else {
      switch (c) {
        case '[': t.kind = Token::LBrack; break;
        case ']': t.kind = Token::RBrack; break;
        case '(': t.kind = Token::LParen; break;
        case ')': t.kind = Token::RParen; break;
        case ',': t.kind = Token::Comma; break;
        case '+': t.kind = Token::Plus; break;
        case '-': t.kind = Token::Minus; break;
        case '*': t.kind = Token::Star; break;
        case '^': t.kind = Token::Caret; break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", line, col);
      }
      t.text = std::string(1, c);
      advance(1);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Token::End;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  const Token& peek() const { return toks_[pos_]; }
  const Token& get() { return toks_[pos_++]; }

  const Token& expect(Token::Kind kind, const std::string& what) {
    if (peek().kind != kind)
      throw ParseError("expected " + what, peek().line, peek().col);
    return get();
  }

  bool accept(Token::Kind kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  // expr := ['-'] term (('+'|'-') term)*
  Polynomial expr(const RingPtr& ring) {
    bool negate = accept(Token::Minus);
    Polynomial acc = term(ring);
    if (negate) acc = -acc;
    while (true) {
      if (accept(Token::Plus))
        acc = acc + term(ring);
      else if (accept(Token::Minus))
        acc = acc - term(ring);
      else
        return acc;
    }
  }

 private:
  // term := factor ('*' factor)*
  Polynomial term(const RingPtr& ring) {
    Polynomial acc = factor(ring);
    while (accept(Token::Star)) acc = acc * factor(ring);
    return acc;
  }

  // factor := atom ['^' INT]
  Polynomial factor(const RingPtr& ring) {
    Polynomial base = atom(ring);
    if (accept(Token::Caret)) {
      const Token& e = expect(Token::Int, "an integer exponent");
      if (e.value < 0 || e.value > 64)
        throw ParseError("exponent out of range [0, 64]", e.line, e.col);
      return poly_pow(base, static_cast<unsigned>(e.value));
    }
    return base;
  }

  Polynomial atom(const RingPtr& ring) {
    const Token& t = peek();
    if (t.kind == Token::Int) {
      get();
      return ring->constant(t.value);
    }
    if (t.kind == Token::Ident) {
      const auto& names = ring->variable_names();
      for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == t.text) {
          get();
          return ring->variable(i);
        }
      throw ParseError("unknown variable '" + t.text + "'", t.line, t.col);
    }
    if (t.kind == Token::LParen) {
      get();
      Polynomial inner = expr(ring);
      expect(Token::RParen, "')'");
      return inner;
    }
    throw ParseError("expected a coefficient, variable, or '('", t.line, t.col);
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

}  // namespace

ParsedInput parse_input(const std::string& text, size_t pair_budget) {
  Parser p(tokenize(text));
  ParsedInput out;

  const Token& kw = p.peek();
  if (kw.kind != Token::Ident || kw.text != "ring")
    throw ParseError("input must start with a 'ring' statement", kw.line, kw.col);
  p.get();

  FieldDesc field;
  const Token& f = p.peek();
  if (f.kind == Token::Ident && f.text == "QQ") {
    p.get();
    field = FieldDesc::rational();
  } else if (f.kind == Token::Ident && f.text == "GF") {
    p.get();
    p.expect(Token::LParen, "'(' after GF");
    const Token& prime = p.expect(Token::Int, "a prime modulus");
    try {
      field = FieldDesc::gf(static_cast<uint32_t>(prime.value));
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), prime.line, prime.col);
    }
    p.expect(Token::RParen, "')'");
    if (field.p == 2)
      out.warnings.push_back(
          "warning: characteristic 2; the hypersurface classification background assumes "
          "odd characteristic, results may not transfer");
  } else {
    throw ParseError("expected a field: QQ or GF(p)", f.line, f.col);
  }

  p.expect(Token::LBrack, "'[' before the variable list");
  std::vector<std::string> vars;
  while (true) {
    const Token& v = p.expect(Token::Ident, "a variable name");
    vars.push_back(v.text);
    if (!p.accept(Token::Comma)) break;
  }
  const Token& close = p.expect(Token::RBrack, "']' after the variable list");
  try {
    out.ring = PolyRing::create(vars, field, MonomialOrder{}, pair_budget);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), close.line, close.col);
  }

  while (p.peek().kind == Token::Ident && p.peek().text == "ideal") {
    p.get();
    while (true) {
      const Token& start = p.peek();
      Polynomial g = p.expr(out.ring);
      if (!g.is_homogeneous())
        throw ParseError("generator '" + g.str() + "' is not homogeneous", start.line,
                         start.col);
      if (!g.is_zero() && g.degree() == 0)
        throw ParseError("constant generator makes the ideal improper", start.line,
                         start.col);
      if (!g.is_zero()) out.generators.push_back(std::move(g));
      if (!p.accept(Token::Comma)) break;
    }
  }
  const Token& end = p.peek();
  if (end.kind != Token::End)
    throw ParseError("unexpected trailing input '" + end.text + "'", end.line, end.col);
  return out;
}

std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, const std::string& text) {
  Parser p(tokenize(text));
  std::vector<Polynomial> out;
  while (true) {
    out.push_back(p.expr(ring));
    if (!p.accept(Token::Comma)) break;
  }
  const Token& end = p.peek();
  if (end.kind != Token::End)
    throw ParseError("unexpected trailing input '" + end.text + "'", end.line, end.col);
  return out;
}

}  // namespace gradecheck
