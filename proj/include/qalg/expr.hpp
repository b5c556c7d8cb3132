#pragma once

// Expression trees for closed-form relations and coproducts, and their
// expansion into truncated noncommutative series.

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "qalg/ncpoly.hpp"

namespace qalg {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Rational, Z, Generator, Neg, Sum, Product, Power, Function, Tensor, Wedge };
  enum class Func { Exp, Sinh, Cosh };

  Kind kind = Kind::Rational;
  Scalar value;                   // Rational
  GeneratorId generator{};        // Generator
  int exponent = 0;               // Power
  Func func = Func::Exp;          // Function
  std::vector<ExprPtr> children;  // operands, in order

  static ExprPtr rational(Scalar v);
  static ExprPtr z();
  static ExprPtr generator_ref(GeneratorId g);
  static ExprPtr neg(ExprPtr a);
  static ExprPtr sum(std::vector<ExprPtr> terms);
  static ExprPtr product(std::vector<ExprPtr> factors);
  static ExprPtr power(ExprPtr base, int exponent);
  static ExprPtr function(Func f, ExprPtr arg);
  static ExprPtr tensor(std::vector<ExprPtr> slots);
  static ExprPtr wedge(ExprPtr a, ExprPtr b);

  bool contains_tensor() const;
  std::string str(const GeneratorNames &names) const;
};

using Expanded = std::variant<NCPoly, TensorPoly>;

/// Expands `e` to order N. 1/z factors are absorbed by computing internally at
/// N + ZSeries::kFloor before truncating, so the result is exact up to z^N.
/// Function arguments must have no z^0 part; products are free (unnormalized).
Expanded expand_expr(const Expr &e, int order);
NCPoly expand_poly(const Expr &e, int order);
/// Rank-2 result; throws ExpansionError if `e` has no tensor structure.
TensorPoly expand_tensor(const Expr &e, int order);

} // namespace qalg
