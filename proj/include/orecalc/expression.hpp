#pragma once

#include "orecalc/scalar.hpp"

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace orecalc {

struct SourcePos {
  int line = 1;
  int column = 1;
};

std::string to_string(SourcePos pos);  // "line 1, column 4"

// Lexical errors, unbalanced delimiters and unknown symbols, with position.
class ParseError : public Error {
public:
  ParseError(SourcePos pos, const std::string& message)
      : Error(to_string(pos) + ": " + message), pos_(pos) {}
  SourcePos pos() const { return pos_; }

private:
  SourcePos pos_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind {
    Number,      // value
    Symbol,      // name: generator, definition or the unit i
    Sum,         // args with signs
    Product,     // args
    Power,       // args[0] ^ exponent
    Commutator,  // [args[0], args[1]]
    SkewLeft,    // skewL(a, b; name) = a*b - name(b)*a
    SkewRight,   // skewR(a, b; name) = a*b - b*name(a)
    Adjoint,     // adj(args[0])
    Apply,       // name(args[0])
  };

  Kind kind;
  SourcePos pos;
  mpq_class value;
  std::string name;
  std::vector<ExprPtr> args;
  std::vector<int> signs;
  unsigned exponent = 0;
};

// Precedence: power and calls bind tightest, then '*', then '+'/'-'.
ExprPtr parse_expression(std::string_view text);

// Fully parenthesized rendering of the tree, for debugging and tests.
std::string to_string(const Expr& e);

}  // namespace orecalc
