#pragma once

// Exact scalars and truncated Laurent series in the deformation parameter z.

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qalg/errors.hpp"

namespace qalg {

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
class Scalar {
public:
  Scalar() = default;
  Scalar(long value) : value_(value) {} // NOLINT(google-explicit-constructor)
  Scalar(int value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(mpq_class value);

  /// Parses "p" or "p/q".
  static Scalar parse(const std::string &text);

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class &raw() const { return value_; }

  std::string str() const { return value_.get_str(); }

  Scalar operator-() const { return Scalar(mpq_class(-value_)); }
  Scalar &operator+=(const Scalar &o) { value_ += o.value_; return *this; }
  Scalar &operator-=(const Scalar &o) { value_ -= o.value_; return *this; }
  Scalar &operator*=(const Scalar &o) { value_ *= o.value_; return *this; }
  Scalar &operator/=(const Scalar &o);

  friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }

  friend bool operator==(const Scalar &a, const Scalar &b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Scalar &a, const Scalar &b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream &operator<<(std::ostream &os, const Scalar &s) { return os << s.str(); }

private:
  mpq_class value_;
};

/// k! as a Scalar.
Scalar factorial(int k);

/// Truncated Laurent series  sum_{k=lo}^{N} c_k z^k  over Scalar.
///
/// Terms are kept sparse and sorted by exponent, with no stored zeros. Every
/// result is re-truncated at the series' order N. The lowest admissible
/// exponent is -kFloor; going below raises FloorUnderflow.
class ZSeries {
public:
  static constexpr int kFloor = 4;
  static constexpr int kDefaultOrder = 6;

  using Term = std::pair<int, Scalar>;

  explicit ZSeries(int order = kDefaultOrder) : order_(order) {}

  static ZSeries constant(const Scalar &c, int order);
  static ZSeries monomial(const Scalar &c, int exponent, int order);
  /// z itself.
  static ZSeries z(int order) { return monomial(Scalar(1), 1, order); }

  int order() const { return order_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term> &terms() const { return terms_; }

  /// Lowest exponent with a nonzero coefficient. Undefined for zero.
  int min_exponent() const { return terms_.front().first; }
  int max_exponent() const { return terms_.back().first; }
  Scalar coefficient(int exponent) const;

  /// Adds c z^k, dropping it if k > N.
  void add_term(int exponent, const Scalar &c);

  /// Copy with terms of exponent > order removed and order set to `order`.
  ZSeries truncated(int order) const;
  /// Same terms, shifted by z^shift. Terms falling above N are dropped.
  ZSeries shifted(int shift) const;
  /// Replaces z by c*z.
  ZSeries rescaled(const Scalar &c) const;
  /// Only the coefficient of z^k, as a series.
  ZSeries slice(int exponent) const;

  ZSeries operator-() const;
  ZSeries &operator+=(const ZSeries &o);
  ZSeries &operator-=(const ZSeries &o);
  ZSeries &operator*=(const Scalar &c);

  friend ZSeries operator+(ZSeries a, const ZSeries &b) { return a += b; }
  friend ZSeries operator-(ZSeries a, const ZSeries &b) { return a -= b; }
  friend ZSeries operator*(ZSeries a, const Scalar &c) { return a *= c; }
  friend ZSeries operator*(const Scalar &c, ZSeries a) { return a *= c; }
  friend ZSeries operator*(const ZSeries &a, const ZSeries &b);

  /// Exact Cauchy product truncated at `order`; the operands may carry
  /// different truncation orders when the caller knows both are accurate enough.
  static ZSeries product(const ZSeries &a, const ZSeries &b, int order);

  friend bool operator==(const ZSeries &a, const ZSeries &b) {
    return a.order_ == b.order_ && a.terms_ == b.terms_;
  }

  std::string str() const;
  friend std::ostream &operator<<(std::ostream &os, const ZSeries &s) { return os << s.str(); }

private:
  void check_floor() const;

  int order_;
  std::vector<Term> terms_;
};

/// Multiplicative inverse of a series with unit constant term, to the same order.
ZSeries invert(const ZSeries &a);

} // namespace qalg
