#include "vfm/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "vfm/errors.hpp"

namespace vfm {

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> lex(std::string_view s, SourcePos at) {
  std::vector<Token> out;
  int line = at.line;
  int col = at.column;
  std::size_t k = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j, ++k) {
      if (s[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (k < s.size()) {
    const char ch = s[k];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t e = k;
      while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
      if (e < s.size() && (s[e] == '.' || s[e] == 'e' || s[e] == 'E')) {
        throw ParseError("inexact numeric literal; write rationals as p/q", line, col);
      }
      out.push_back({Tok::number, std::string(s.substr(k, e - k)), line, col});
      advance(e - k);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t e = k;
      while (e < s.size() && (std::isalnum(static_cast<unsigned char>(s[e])) || s[e] == '_')) ++e;
      out.push_back({Tok::ident, std::string(s.substr(k, e - k)), line, col});
      advance(e - k);
      continue;
    }
    Tok kind;
    switch (ch) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '/': kind = Tok::slash; break;
      case '^': kind = Tok::caret; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      default:
        throw ParseError(std::string("unexpected character '") + ch + "'", line, col);
    }
    out.push_back({kind, std::string(1, ch), line, col});
    advance(1);
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

/// Either a polynomial or a vector field with polynomial components.
struct Value {
  Poly poly;
  std::optional<std::vector<Poly>> field;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, const std::vector<std::string>& vars, bool allow_fields)
      : tokens_(std::move(tokens)), vars_(vars), allow_fields_(allow_fields) {}

  Value parse_all() {
    Value v = expr();
    if (peek().kind != Tok::end) fail("unexpected token '" + peek().text + "'");
    return v;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, peek().line, peek().column);
  }

  Value zero() const { return {Poly(vars_), std::nullopt}; }

  Value add(Value a, const Value& b, bool subtract, const Token& at) const {
    if (a.field.has_value() != b.field.has_value()) {
      throw ParseError("cannot add a polynomial and a vector field", at.line, at.column);
    }
    if (a.field) {
      for (std::size_t k = 0; k < a.field->size(); ++k) {
        if (subtract) {
          (*a.field)[k] -= (*b.field)[k];
        } else {
          (*a.field)[k] += (*b.field)[k];
        }
      }
      return a;
    }
    if (subtract) {
      a.poly -= b.poly;
    } else {
      a.poly += b.poly;
    }
    return a;
  }

  Value mul(Value a, Value b, const Token& at) const {
    if (a.field && b.field) {
      throw ParseError("product of two vector fields", at.line, at.column);
    }
    if (a.field) {
      for (auto& c : *a.field) c = c * b.poly;
      return a;
    }
    if (b.field) {
      for (auto& c : *b.field) c = a.poly * c;
      return b;
    }
    a.poly = a.poly * b.poly;
    return a;
  }

  Value expr() {
    Value acc = zero();
    bool first = true;
    bool negate = false;
    if (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      negate = next().kind == Tok::minus;
    }
    while (true) {
      const Token& at = peek();
      Value t = term();
      if (first) {
        acc = negate ? negated(std::move(t)) : std::move(t);
        first = false;
      } else {
        acc = add(std::move(acc), t, negate, at);
      }
      if (peek().kind == Tok::plus || peek().kind == Tok::minus) {
        negate = next().kind == Tok::minus;
        continue;
      }
      return acc;
    }
  }

  static Value negated(Value v) {
    if (v.field) {
      for (auto& c : *v.field) c = -c;
    } else {
      v.poly = -v.poly;
    }
    return v;
  }

  static bool starts_atom(Tok k) { return k == Tok::number || k == Tok::ident || k == Tok::lparen; }

  Value term() {
    Value acc = power();
    while (true) {
      const Token& at = peek();
      if (at.kind == Tok::star) {
        next();
        acc = mul(std::move(acc), power(), at);
      } else if (at.kind == Tok::slash) {
        next();
        const Token& div_at = peek();
        Value d = power();
        if (d.field || !d.poly.is_constant() || d.poly.is_zero()) {
          throw ParseError("division only by nonzero constants", div_at.line, div_at.column);
        }
        const ExactScalar c = d.poly.constant_value();
        if (acc.field) {
          for (auto& comp : *acc.field) comp /= c;
        } else {
          acc.poly /= c;
        }
      } else if (starts_atom(at.kind)) {
        acc = mul(std::move(acc), power(), at);
      } else {
        return acc;
      }
    }
  }

  Value power() {
    Value base = atom();
    if (peek().kind != Tok::caret) return base;
    const Token& at = next();
    if (peek().kind != Tok::number) fail("exponent must be a non-negative integer");
    const std::string digits = next().text;
    if (base.field) throw ParseError("power of a vector field", at.line, at.column);
    if (digits.size() > 4) throw ParseError("exponent too large", at.line, at.column);
    base.poly = base.poly.pow(static_cast<unsigned>(std::stoul(digits)));
    return base;
  }

  Value atom() {
    const Token tok = peek();
    switch (tok.kind) {
      case Tok::number: {
        next();
        return {Poly::constant(vars_, ExactScalar(mpq_class(mpz_class(tok.text)))), std::nullopt};
      }
      case Tok::lparen: {
        next();
        Value v = expr();
        if (peek().kind != Tok::rparen) fail("expected ')'");
        next();
        return v;
      }
      case Tok::ident: {
        next();
        return identifier(tok);
      }
      default:
        fail(tok.kind == Tok::end ? "unexpected end of expression"
                                  : "unexpected token '" + tok.text + "'");
    }
  }

  Value identifier(const Token& tok) const {
    const auto& name = tok.text;
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it != vars_.end()) {
      return {Poly::variable(vars_, static_cast<std::size_t>(it - vars_.begin())), std::nullopt};
    }
    if (name == "i") return {Poly::constant(vars_, ExactScalar::imaginary_unit()), std::nullopt};
    if (allow_fields_ && name.size() > 1 && name[0] == 'd') {
      const std::string rest = name.substr(1);
      for (const std::string& candidate : {"z" + rest, rest}) {
        auto jt = std::find(vars_.begin(), vars_.end(), candidate);
        if (jt != vars_.end()) {
          std::vector<Poly> comps(vars_.size(), Poly(vars_));
          comps[static_cast<std::size_t>(jt - vars_.begin())] =
              Poly::constant(vars_, ExactScalar(1));
          return {Poly(vars_), std::move(comps)};
        }
      }
    }
    throw ParseError("unknown identifier '" + name + "'", tok.line, tok.column);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const std::vector<std::string>& vars_;
  bool allow_fields_;
};

}  // namespace

Poly parse_poly(std::string_view text, const std::vector<std::string>& vars, SourcePos at) {
  Parser p(lex(text, at), vars, false);
  Value v = p.parse_all();
  return v.poly;
}

ExactScalar parse_scalar(std::string_view text, SourcePos at) {
  const std::vector<std::string> none;
  return parse_poly(text, none, at).constant_value();
}

std::vector<Poly> parse_field(std::string_view text, const std::vector<std::string>& vars,
                              SourcePos at) {
  Parser p(lex(text, at), vars, true);
  Value v = p.parse_all();
  if (!v.field) {
    if (v.poly.is_zero()) return std::vector<Poly>(vars.size(), Poly(vars));
    throw ParseError("expected a vector field (terms of the form <poly> d<k>)", at.line, at.column);
  }
  return *v.field;
}

std::string derivative_token(const std::string& var) {
  if (var.size() > 1 && var[0] == 'z' &&
      std::all_of(var.begin() + 1, var.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return "d" + var.substr(1);
  }
  return "d" + var;
}

std::string field_str(const std::vector<Poly>& components, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t k = 0; k < components.size(); ++k) {
    const Poly& c = components[k];
    if (c.is_zero()) continue;
    std::string coeff;
    bool negative = false;
    if (c.size() == 1) {
      coeff = c.str();
      if (coeff.front() == '-') {
        negative = true;
        coeff = coeff.substr(1);
      }
      if (coeff == "1") coeff.clear();
    } else {
      coeff = "(" + c.str() + ")";
    }
    std::string term = coeff.empty() ? derivative_token(vars[k]) : coeff + "*" + derivative_token(vars[k]);
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " + term : " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace vfm
