#include "qalg/coeff.hpp"

#include <algorithm>
#include <sstream>

namespace qalg {

Divergence::Divergence(std::vector<Term> terms)
    : Error([&] {
        std::ostringstream os;
        os << "contraction diverges (" << terms.size() << " term" << (terms.size() == 1 ? "" : "s") << ")";
        for (const auto &t : terms)
          os << "; " << t.where << ": " << t.term << " ~ eps^" << t.exponent;
        return os.str();
      }()),
      terms_(std::move(terms)) {}

Scalar::Scalar(long num, long den) : value_(num, den) {
  if (den == 0)
    throw Error("zero denominator");
  value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Scalar Scalar::parse(const std::string &text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw Error("bad rational literal '" + text + "'");
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar &Scalar::operator/=(const Scalar &o) {
  if (o.is_zero())
    throw NotInvertible("division by zero");
  value_ /= o.value_;
  return *this;
}

Scalar factorial(int k) {
  mpz_class f = 1;
  for (int i = 2; i <= k; ++i)
    f *= i;
  return Scalar(mpq_class(f));
}

ZSeries ZSeries::constant(const Scalar &c, int order) { return monomial(c, 0, order); }

ZSeries ZSeries::monomial(const Scalar &c, int exponent, int order) {
  ZSeries s(order);
  s.add_term(exponent, c);
  return s;
}

Scalar ZSeries::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term &t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent)
    return it->second;
  return Scalar(0);
}

void ZSeries::check_floor() const {
  if (!terms_.empty() && terms_.front().first < -kFloor)
    throw FloorUnderflow("z-exponent " + std::to_string(terms_.front().first) + " below floor -" +
                         std::to_string(kFloor));
}

void ZSeries::add_term(int exponent, const Scalar &c) {
  if (exponent > order_ || c.is_zero())
    return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term &t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  } else {
    terms_.insert(it, {exponent, c});
    check_floor();
  }
}

ZSeries ZSeries::truncated(int order) const {
  ZSeries s(order);
  for (const auto &[e, c] : terms_) {
    if (e > order)
      break;
    s.terms_.emplace_back(e, c);
  }
  return s;
}

ZSeries ZSeries::shifted(int shift) const {
  ZSeries s(order_);
  for (const auto &[e, c] : terms_)
    if (e + shift <= order_)
      s.terms_.emplace_back(e + shift, c);
  s.check_floor();
  return s;
}

ZSeries ZSeries::rescaled(const Scalar &c) const {
  ZSeries s(order_);
  for (const auto &[e, v] : terms_) {
    Scalar f(1);
    const Scalar base = e >= 0 ? c : Scalar(1) / c;
    for (int i = 0; i < std::abs(e); ++i)
      f *= base;
    s.terms_.emplace_back(e, v * f);
  }
  return s;
}

ZSeries ZSeries::slice(int exponent) const {
  ZSeries s(order_);
  s.add_term(exponent, coefficient(exponent));
  return s;
}

ZSeries ZSeries::operator-() const {
  ZSeries s(*this);
  for (auto &t : s.terms_)
    t.second = -t.second;
  return s;
}

ZSeries &ZSeries::operator+=(const ZSeries &o) {
  if (o.order_ != order_)
    throw OrderMismatch("adding series of orders " + std::to_string(order_) + " and " +
                        std::to_string(o.order_));
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Scalar c = a->second + b->second;
      if (!c.is_zero())
        out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  check_floor();
  return *this;
}

ZSeries &ZSeries::operator-=(const ZSeries &o) { return *this += -o; }

ZSeries &ZSeries::operator*=(const Scalar &c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &t : terms_)
    t.second *= c;
  return *this;
}

ZSeries ZSeries::product(const ZSeries &a, const ZSeries &b, int order) {
  ZSeries s(order);
  if (a.terms_.empty() || b.terms_.empty())
    return s;
  const int lo = a.terms_.front().first + b.terms_.front().first;
  if (lo < -kFloor)
    throw FloorUnderflow("product reaches z^" + std::to_string(lo));
  if (lo > order)
    return s;
  std::vector<Scalar> dense(static_cast<std::size_t>(order - lo + 1));
  std::vector<bool> touched(dense.size(), false);
  for (const auto &[ea, ca] : a.terms_) {
    for (const auto &[eb, cb] : b.terms_) {
      const int e = ea + eb;
      if (e > order)
        break;
      auto &slot = dense[static_cast<std::size_t>(e - lo)];
      slot += ca * cb;
      touched[static_cast<std::size_t>(e - lo)] = true;
    }
  }
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (touched[i] && !dense[i].is_zero())
      s.terms_.emplace_back(static_cast<int>(i) + lo, std::move(dense[i]));
  return s;
}

ZSeries operator*(const ZSeries &a, const ZSeries &b) {
  if (a.order() != b.order())
    throw OrderMismatch("multiplying series of orders " + std::to_string(a.order()) + " and " +
                        std::to_string(b.order()));
  return ZSeries::product(a, b, a.order());
}

std::string ZSeries::str() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    Scalar mag = c.sign() < 0 ? -c : c;
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one())
      os << mag << "*";
    os << "z";
    if (e != 1)
      os << "^" << e;
  }
  return os.str();
}

ZSeries invert(const ZSeries &a) {
  if (a.is_zero() || a.min_exponent() != 0)
    throw NotInvertible("series " + a.str() + " has no unit constant term");
  const int n = a.order();
  const Scalar c0_inv = Scalar(1) / a.coefficient(0);
  // b_0 = 1/a_0,  b_k = -(1/a_0) sum_{j=1..k} a_j b_{k-j}
  std::vector<Scalar> b(static_cast<std::size_t>(std::max(n, 0) + 1));
  if (n < 0)
    return ZSeries(n);
  b[0] = c0_inv;
  for (int k = 1; k <= n; ++k) {
    Scalar acc(0);
    for (const auto &[e, c] : a.terms()) {
      if (e == 0)
        continue;
      if (e > k)
        break;
      acc += c * b[static_cast<std::size_t>(k - e)];
    }
    b[static_cast<std::size_t>(k)] = -(acc * c0_inv);
  }
  ZSeries out(n);
  for (int k = 0; k <= n; ++k)
    out.add_term(k, b[static_cast<std::size_t>(k)]);
  return out;
}

} // namespace qalg
