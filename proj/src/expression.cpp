#include "orecalc/expression.hpp"

#include <cctype>

namespace orecalc {

std::string to_string(SourcePos pos) {
  return "line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column);
}

namespace {

struct Token {
  enum class Type { Int, Ident, Punct, End };
  Type type;
  std::string text;
  SourcePos pos;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t k = 0;
  auto advance = [&] {
    if (src[k] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
    ++k;
  };
  while (k < src.size()) {
    const char c = src[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    Token t{Token::Type::Punct, {}, pos};
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.type = Token::Type::Int;
      while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) {
        t.text += src[k];
        advance();
      }
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.type = Token::Type::Ident;
      while (k < src.size() && (std::isalnum(static_cast<unsigned char>(src[k])) || src[k] == '_')) {
        t.text += src[k];
        advance();
      }
    } else if (std::string_view("+-*/^()[],;").find(c) != std::string_view::npos) {
      t.text = std::string(1, c);
      advance();
    } else {
      throw ParseError(pos, "unexpected character '" + std::string(1, c) + "'");
    }
    out.push_back(std::move(t));
  }
  out.push_back({Token::Type::End, {}, pos});
  return out;
}

class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    if (peek().type != Token::Type::End) throw ParseError(peek().pos, "unexpected " + describe(peek()));
    return e;
  }

private:
  const Token& peek() const { return tokens_[at_]; }
  const Token& take() { return tokens_[at_++]; }
  bool is(std::string_view punct) const {
    return peek().type == Token::Type::Punct && peek().text == punct;
  }

  static std::string describe(const Token& t) {
    return t.type == Token::Type::End ? "end of input" : "'" + t.text + "'";
  }

  void expect(std::string_view punct, const Token& opener) {
    if (is(punct)) {
      take();
      return;
    }
    std::string msg = "expected '" + std::string(punct) + "' but found " + describe(peek());
    if (opener.type != Token::Type::End)
      msg += " (to close '" + opener.text + "' at " + to_string(opener.pos) + ")";
    throw ParseError(peek().pos, msg);
  }

  static ExprPtr node(Expr::Kind kind, SourcePos pos, std::vector<ExprPtr> args = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->pos = pos;
    e->args = std::move(args);
    return e;
  }

  ExprPtr sum() {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Sum;
    e->pos = peek().pos;
    int sign = 1;
    if (is("+") || is("-")) sign = take().text == "-" ? -1 : 1;
    e->args.push_back(product());
    e->signs.push_back(sign);
    while (is("+") || is("-")) {
      sign = take().text == "-" ? -1 : 1;
      e->args.push_back(product());
      e->signs.push_back(sign);
    }
    if (e->args.size() == 1 && e->signs[0] == 1) return e->args[0];
    return e;
  }

  ExprPtr product() {
    std::vector<ExprPtr> factors{power()};
    const SourcePos pos = factors[0]->pos;
    while (is("*")) {
      take();
      factors.push_back(power());
    }
    if (factors.size() == 1) return factors[0];
    return node(Expr::Kind::Product, pos, std::move(factors));
  }

  ExprPtr power() {
    ExprPtr base = primary();
    while (is("^")) {
      const Token& caret = take();
      if (peek().type != Token::Type::Int)
        throw ParseError(peek().pos, "exponent must be a nonnegative integer, found " + describe(peek()));
      const Token& n = take();
      if (n.text.size() > 9) throw ParseError(n.pos, "exponent too large");
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Power;
      e->pos = caret.pos;
      e->args = {base};
      e->exponent = static_cast<unsigned>(std::stoul(n.text));
      base = e;
    }
    return base;
  }

  ExprPtr primary() {
    const Token& t = peek();
    if (t.type == Token::Type::Int) {
      take();
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Number;
      e->pos = t.pos;
      e->value = mpq_class(t.text);
      if (is("/")) {
        take();
        if (peek().type != Token::Type::Int)
          throw ParseError(peek().pos, "'/' only divides integer literals, found " + describe(peek()));
        mpz_class den(take().text);
        if (den == 0) throw ParseError(t.pos, "division by zero");
        e->value = mpq_class(mpz_class(t.text), den);
        e->value.canonicalize();
      }
      return e;
    }
    if (t.type == Token::Type::Ident) {
      take();
      if (!is("(")) {
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Symbol;
        e->pos = t.pos;
        e->name = t.text;
        return e;
      }
      const Token& open = take();
      auto e = std::make_shared<Expr>();
      e->pos = t.pos;
      if (t.text == "skewL" || t.text == "skewR") {
        e->kind = t.text == "skewL" ? Expr::Kind::SkewLeft : Expr::Kind::SkewRight;
        e->args.push_back(sum());
        expect(",", open);
        e->args.push_back(sum());
        expect(";", open);
        if (peek().type != Token::Type::Ident)
          throw ParseError(peek().pos, "expected an endomorphism name, found " + describe(peek()));
        e->name = take().text;
      } else {
        e->kind = t.text == "adj" ? Expr::Kind::Adjoint : Expr::Kind::Apply;
        e->name = t.text;
        e->args.push_back(sum());
      }
      expect(")", open);
      return e;
    }
    if (is("(")) {
      const Token& open = take();
      ExprPtr inner = sum();
      expect(")", open);
      return inner;
    }
    if (is("[")) {
      const Token& open = take();
      ExprPtr a = sum();
      expect(",", open);
      ExprPtr b = sum();
      expect("]", open);
      return node(Expr::Kind::Commutator, open.pos, {a, b});
    }
    throw ParseError(t.pos, "unexpected " + describe(t));
  }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
};

}  // namespace

ExprPtr parse_expression(std::string_view text) { return Parser(lex(text)).parse(); }

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return e.value.get_str();
    case Expr::Kind::Symbol:
      return e.name;
    case Expr::Kind::Sum: {
      std::string out = "(";
      for (std::size_t k = 0; k < e.args.size(); ++k)
        out += (e.signs[k] < 0 ? "-" : (k ? "+" : "")) + to_string(*e.args[k]);
      return out + ")";
    }
    case Expr::Kind::Product: {
      std::string out = "(";
      for (std::size_t k = 0; k < e.args.size(); ++k) out += (k ? "*" : "") + to_string(*e.args[k]);
      return out + ")";
    }
    case Expr::Kind::Power:
      return to_string(*e.args[0]) + "^" + std::to_string(e.exponent);
    case Expr::Kind::Commutator:
      return "[" + to_string(*e.args[0]) + "," + to_string(*e.args[1]) + "]";
    case Expr::Kind::SkewLeft:
    case Expr::Kind::SkewRight:
      return std::string(e.kind == Expr::Kind::SkewLeft ? "skewL(" : "skewR(") + to_string(*e.args[0]) + "," +
             to_string(*e.args[1]) + ";" + e.name + ")";
    case Expr::Kind::Adjoint:
      return "adj(" + to_string(*e.args[0]) + ")";
    case Expr::Kind::Apply:
      return e.name + "(" + to_string(*e.args[0]) + ")";
  }
  return {};
}

}  // namespace orecalc
