#include "qalg/expr.hpp"

#include <sstream>

namespace qalg {

namespace {

ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

bool is_scalar(const NCPoly &p) {
  return p.is_zero() || (p.size() == 1 && p.terms().begin()->first.empty());
}

ZSeries scalar_part(const NCPoly &p) {
  if (p.is_zero())
    return ZSeries(p.order());
  return p.terms().begin()->second;
}

TensorPoly scale(const TensorPoly &t, const ZSeries &s) {
  TensorPoly out(t.rank(), t.order());
  for (const auto &[k, c] : t.terms())
    out.add_term(k, c * s);
  return out;
}

NCPoly as_poly(Expanded v, const char *what) {
  if (auto *p = std::get_if<NCPoly>(&v))
    return std::move(*p);
  throw ExpansionError(std::string("tensor value not allowed in ") + what);
}

NCPoly function_series(Expr::Func f, const NCPoly &arg, int order) {
  NCPoly result(order);
  if (!arg.is_zero() && arg.min_z_exponent() < 1)
    throw ExpansionError("function argument must vanish at z = 0 to be expanded as a series");
  NCPoly power = NCPoly::unit(order);
  for (int k = 0; k <= order; ++k) {
    const bool keep = f == Expr::Func::Exp || (f == Expr::Func::Sinh ? k % 2 == 1 : k % 2 == 0);
    if (keep)
      result += power * (Scalar(1) / factorial(k));
    power = poly_mul(power, arg);
    if (power.is_zero())
      break;
  }
  return result;
}

Expanded evaluate(const Expr &e, int order) {
  switch (e.kind) {
  case Expr::Kind::Rational:
    return NCPoly::constant(ZSeries::constant(e.value, order));
  case Expr::Kind::Z:
    return NCPoly::constant(ZSeries::z(order));
  case Expr::Kind::Generator:
    return NCPoly::generator(e.generator, order);
  case Expr::Kind::Neg: {
    auto v = evaluate(*e.children.at(0), order);
    return std::visit([](auto &x) -> Expanded { return -x; }, v);
  }
  case Expr::Kind::Sum: {
    std::optional<Expanded> acc;
    for (const auto &c : e.children) {
      auto v = evaluate(*c, order);
      if (!acc) {
        acc = std::move(v);
        continue;
      }
      if (acc->index() != v.index()) {
        // a zero polynomial may join a tensor sum
        if (auto *p = std::get_if<NCPoly>(&v); p && p->is_zero())
          continue;
        if (auto *p = std::get_if<NCPoly>(&*acc); p && p->is_zero()) {
          acc = std::move(v);
          continue;
        }
        throw ExpansionError("cannot add a tensor and a non-tensor expression");
      }
      std::visit([&](auto &a) { a += std::get<std::decay_t<decltype(a)>>(v); }, *acc);
    }
    return acc ? std::move(*acc) : Expanded(NCPoly(order));
  }
  case Expr::Kind::Product: {
    Expanded acc = NCPoly::unit(order);
    for (const auto &c : e.children) {
      auto v = evaluate(*c, order);
      auto *ap = std::get_if<NCPoly>(&acc);
      auto *vp = std::get_if<NCPoly>(&v);
      if (ap && vp) {
        acc = poly_mul(*ap, *vp);
      } else if (ap) {
        if (!is_scalar(*ap))
          throw ExpansionError("only scalar factors may multiply a tensor");
        acc = scale(std::get<TensorPoly>(v), scalar_part(*ap));
      } else if (vp) {
        if (!is_scalar(*vp))
          throw ExpansionError("only scalar factors may multiply a tensor");
        acc = scale(std::get<TensorPoly>(acc), scalar_part(*vp));
      } else {
        acc = tensor_mul(std::get<TensorPoly>(acc), std::get<TensorPoly>(v));
      }
    }
    return acc;
  }
  case Expr::Kind::Power: {
    const Expr &base = *e.children.at(0);
    if (base.kind == Expr::Kind::Z)
      return NCPoly::constant(ZSeries::monomial(Scalar(1), e.exponent, order));
    NCPoly b = as_poly(evaluate(base, order), "a power");
    if (e.exponent < 0) {
      if (!is_scalar(b))
        throw ExpansionError("negative powers are only defined for z and scalar series");
      b = NCPoly::constant(invert(scalar_part(b)));
    }
    NCPoly out = NCPoly::unit(order);
    for (int i = 0; i < std::abs(e.exponent); ++i)
      out = poly_mul(out, b);
    return out;
  }
  case Expr::Kind::Function:
    return function_series(e.func, as_poly(evaluate(*e.children.at(0), order), "a function argument"), order);
  case Expr::Kind::Tensor: {
    if (e.children.size() == 2)
      return TensorPoly::outer(as_poly(evaluate(*e.children[0], order), "a tensor slot"),
                               as_poly(evaluate(*e.children[1], order), "a tensor slot"));
    if (e.children.size() == 3)
      return TensorPoly::outer(as_poly(evaluate(*e.children[0], order), "a tensor slot"),
                               as_poly(evaluate(*e.children[1], order), "a tensor slot"),
                               as_poly(evaluate(*e.children[2], order), "a tensor slot"));
    throw ExpansionError("tensor node needs 2 or 3 slots");
  }
  case Expr::Kind::Wedge: {
    NCPoly a = as_poly(evaluate(*e.children.at(0), order), "a wedge slot");
    NCPoly b = as_poly(evaluate(*e.children.at(1), order), "a wedge slot");
    return TensorPoly::outer(a, b) - TensorPoly::outer(b, a);
  }
  }
  throw ExpansionError("unknown expression node");
}

} // namespace

ExprPtr Expr::rational(Scalar v) {
  Expr e;
  e.kind = Kind::Rational;
  e.value = std::move(v);
  return make(std::move(e));
}

ExprPtr Expr::z() {
  Expr e;
  e.kind = Kind::Z;
  return make(std::move(e));
}

ExprPtr Expr::generator_ref(GeneratorId g) {
  Expr e;
  e.kind = Kind::Generator;
  e.generator = g;
  return make(std::move(e));
}

ExprPtr Expr::neg(ExprPtr a) {
  Expr e;
  e.kind = Kind::Neg;
  e.children = {std::move(a)};
  return make(std::move(e));
}

ExprPtr Expr::sum(std::vector<ExprPtr> terms) {
  Expr e;
  e.kind = Kind::Sum;
  e.children = std::move(terms);
  return make(std::move(e));
}

ExprPtr Expr::product(std::vector<ExprPtr> factors) {
  Expr e;
  e.kind = Kind::Product;
  e.children = std::move(factors);
  return make(std::move(e));
}

ExprPtr Expr::power(ExprPtr base, int exponent) {
  Expr e;
  e.kind = Kind::Power;
  e.exponent = exponent;
  e.children = {std::move(base)};
  return make(std::move(e));
}

ExprPtr Expr::function(Func f, ExprPtr arg) {
  Expr e;
  e.kind = Kind::Function;
  e.func = f;
  e.children = {std::move(arg)};
  return make(std::move(e));
}

ExprPtr Expr::tensor(std::vector<ExprPtr> slots) {
  Expr e;
  e.kind = Kind::Tensor;
  e.children = std::move(slots);
  return make(std::move(e));
}

ExprPtr Expr::wedge(ExprPtr a, ExprPtr b) {
  Expr e;
  e.kind = Kind::Wedge;
  e.children = {std::move(a), std::move(b)};
  return make(std::move(e));
}

bool Expr::contains_tensor() const {
  if (kind == Kind::Tensor || kind == Kind::Wedge)
    return true;
  for (const auto &c : children)
    if (c->contains_tensor())
      return true;
  return false;
}

std::string Expr::str(const GeneratorNames &names) const {
  auto join = [&](const char *sep) {
    std::string s;
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (i)
        s += sep;
      s += children[i]->str(names);
    }
    return s;
  };
  switch (kind) {
  case Kind::Rational:
    return value.str();
  case Kind::Z:
    return "z";
  case Kind::Generator:
    return names.at(index_of(generator));
  case Kind::Neg:
    return "-(" + children[0]->str(names) + ")";
  case Kind::Sum:
    return "(" + join(" + ") + ")";
  case Kind::Product:
    return join("*");
  case Kind::Power:
    return "(" + children[0]->str(names) + ")^" + std::to_string(exponent);
  case Kind::Function: {
    const char *f = func == Func::Exp ? "exp" : (func == Func::Sinh ? "sinh" : "cosh");
    return std::string(f) + "(" + children[0]->str(names) + ")";
  }
  case Kind::Tensor:
    return join(" (x) ");
  case Kind::Wedge:
    return "(" + join(" /\\ ") + ")";
  }
  return "?";
}

Expanded expand_expr(const Expr &e, int order) {
  const int internal = order + ZSeries::kFloor;
  Expanded v = evaluate(e, internal);
  return std::visit([&](const auto &x) -> Expanded { return x.truncated(order); }, v);
}

NCPoly expand_poly(const Expr &e, int order) { return as_poly(expand_expr(e, order), "a scalar expression"); }

TensorPoly expand_tensor(const Expr &e, int order) {
  Expanded v = expand_expr(e, order);
  if (auto *t = std::get_if<TensorPoly>(&v))
    return std::move(*t);
  // a bare zero is a valid (empty) tensor
  if (std::get<NCPoly>(v).is_zero())
    return TensorPoly(2, order);
  throw ExpansionError("expected a tensor expression");
}

} // namespace qalg
